from datalad.conftest import setup_package

from datalad_clustered.tests.fixtures import (
    # σ_(2,1,0) in G(2,4), a 2-clustered family of planes in P^4
    twoclustered_class,
    # threshold report for degree 16 hypersurfaces in P^10
    threshold_report_n10_d16,
    # seeded generator for random forms and polynomials
    seeded_rng,
)
