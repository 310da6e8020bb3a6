"""DataLad extension for Schubert calculus of clustered families of linear
spaces and degree thresholds of hyperbolicity statements"""

__docformat__ = 'restructuredtext'

import logging
lgr = logging.getLogger('datalad.clustered')

from datalad.support.extensions import register_config
from datalad_next.constraints import (
    EnsureChoice,
    EnsureInt,
)

register_config(
    'datalad.clustered.seed',
    'Seed of the random corpus of the verification suite',
    description='Random splitting and gluing instances of '
    '`datalad clustered-verify` are drawn from generators seeded with this '
    'value, so that any failure can be reproduced. Can be overridden with '
    'the DATALAD_CLUSTERED_SEED environment variable.',
    type=EnsureInt(),
    default=20231101,
    dialog='question',
)
register_config(
    'datalad.clustered.verify-scope',
    'Default scope of the verification suite',
    description="'fast' checks Grassmannians of ambient dimension up to 5 "
    "with 20 random trials per configuration, 'full' goes up to dimension 6 "
    "with 100 splitting and 50 gluing trials.",
    type=EnsureChoice('fast', 'full'),
    default='fast',
    dialog='question',
)

# Defines a datalad command suite.
# This variable must be bound as a setuptools entrypoint
# to be found by datalad
command_suite = (
    # description of the command suite, displayed in cmdline help
    "Schubert calculus and degree thresholds for clustered families",
    [
        ('datalad_clustered.report', 'Report',
         'clustered-report', 'clustered_report'),
        ('datalad_clustered.verify', 'Verify',
         'clustered-verify', 'clustered_verify'),
    ]
)

__version__ = '0.1.0'
