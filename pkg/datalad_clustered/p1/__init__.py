"""Exact graded linear algebra on the projective line
"""

from __future__ import annotations

__all__ = [
    'BinaryForm',
    'MultiPolynomial',
    'GradedMap',
    'SplittingType',
    'GlueResult',
    'build_osculating_map',
    'kernel_splitting_type',
    'is_balanced',
    'glue_along_line',
]

from .forms import (
    BinaryForm,
    MultiPolynomial,
)
from .glue import (
    GlueResult,
    glue_along_line,
)
from .splitting import (
    GradedMap,
    SplittingType,
    build_osculating_map,
    is_balanced,
    kernel_splitting_type,
)
