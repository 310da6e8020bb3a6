from random import Random

import pytest

from datalad_clustered.grassmann import make_context
from datalad_clustered.osculation import lang_threshold_report
from datalad_clustered.schubert import SchubertClass


@pytest.fixture(autouse=False, scope="session")
def twoclustered_class():
    ctx = make_context(2, 4)
    yield dict(
        ctx=ctx,
        cls=SchubertClass.sigma(ctx, (2, 1, 0)),
        epsilon=3,
        ell=2,
        # codimension of the family of 3-planes containing a member
        containing_codim=1,
    )


@pytest.fixture(autouse=False, scope="session")
def threshold_report_n10_d16():
    yield lang_threshold_report(10, 16)


@pytest.fixture(autouse=False)
def seeded_rng():
    # fresh per test, so that tests do not depend on each other's draws
    yield Random('datalad-clustered-tests')
