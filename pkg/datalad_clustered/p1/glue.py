"""Gluing two hypersurfaces along a common line

X_1 ⊂ P^n1 and X_2 ⊂ P^n2 of the same degree, both restricting to the same
binary form g on the coordinate line, are combined into one hypersurface
Y ⊂ P^N, N = n1 + n2 - 1, with linear embeddings Λ_1, Λ_2 and ℓ such that
Λ_1^* Y = X_1, Λ_2^* Y = X_2 and ℓ^* Y = ℓ^* X_1 = ℓ^* X_2.

Coordinate maps are lists over the target variables z_0..z_N; entry i is
the index of the source variable substituted for z_i, or ``None`` for 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from random import Random
from typing import (
    List,
    Optional,
    Tuple,
)

from sympy import Rational

from ..exceptions import ClusteredError
from .forms import MultiPolynomial

__all__ = [
    'GlueResult',
    'glue_along_line',
    'random_glue_pair',
]

lgr = logging.getLogger('datalad.clustered.p1.glue')

CoordinateMap = Tuple[Optional[int], ...]


@dataclass(frozen=True)
class GlueResult:
    f: MultiPolynomial
    line_form: MultiPolynomial
    # f2 was divided by this factor to restrict to the same form as f1
    scale: Rational
    line_map: CoordinateMap
    lambda1_map: CoordinateMap
    lambda2_map: CoordinateMap

    @property
    def ambient_dim(self) -> int:
        return self.f.num_vars - 1


def _line_restriction(f: MultiPolynomial) -> MultiPolynomial:
    """f(u_0, u_1, 0, ..., 0) as a polynomial in two variables"""
    return f.pullback(
        (0, 1) + (None,) * (f.num_vars - 2), 2)


def _proportionality(g1: MultiPolynomial, g2: MultiPolynomial) -> Rational:
    """c with g2 = c·g1, or fail"""
    if g1.terms.keys() != g2.terms.keys():
        raise ClusteredError(
            'not-proportional',
            f'line restrictions {g1} and {g2} have different monomials')
    exp = next(iter(g1.terms))
    c = g2.terms[exp] / g1.terms[exp]
    if g1.scale(c).terms != g2.terms:
        raise ClusteredError(
            'not-proportional',
            f'line restrictions {g1} and {g2} are not proportional')
    return c


def glue_along_line(f1: MultiPolynomial, f2: MultiPolynomial) -> GlueResult:
    """Glue f1 (in x_0..x_n1) and f2 (in y_0..y_n2) along x_0, x_1 = y_0, y_1

    x_i becomes z_i, y_0 and y_1 become z_0 and z_1, and y_j becomes
    z_(n1+j-1) for j >= 2. All three pullback identities are checked
    before returning.
    """
    if f1.degree != f2.degree:
        raise ClusteredError(
            'degree-mismatch',
            f'degrees {f1.degree} and {f2.degree} differ')
    if f1.num_vars < 2 or f2.num_vars < 2:
        raise ClusteredError(
            'degree-mismatch', 'both polynomials need at least two variables')
    n1, n2 = f1.num_vars - 1, f2.num_vars - 1
    g1 = _line_restriction(f1)
    g2 = _line_restriction(f2)
    if not g1 or not g2:
        raise ClusteredError(
            'zero-restriction', 'the coordinate line lies in a hypersurface')
    c = _proportionality(g1, g2)
    lgr.debug('gluing degree %i in P^%i and P^%i, scale %s',
              f1.degree, n1, n2, c)
    f2 = f2.scale(1 / c)

    num_vars = n1 + n2
    # Λ_1: P^n1 -> P^N
    lambda1: List[Optional[int]] = [None] * num_vars
    for i in range(n1 + 1):
        lambda1[i] = i
    # Λ_2: P^n2 -> P^N
    lambda2: List[Optional[int]] = [None] * num_vars
    lambda2[0], lambda2[1] = 0, 1
    for j in range(2, n2 + 1):
        lambda2[n1 + j - 1] = j
    line: List[Optional[int]] = [None] * num_vars
    line[0], line[1] = 0, 1

    # embed f1 and f2 as polynomials in z; both share g on z_0, z_1
    x_to_z = list(range(n1 + 1))
    y_to_z = [0, 1] + [n1 + j - 1 for j in range(2, n2 + 1)]
    f1_z = _push(f1, x_to_z, num_vars)
    f2_z = _push(f2, y_to_z, num_vars)
    g_z = _push(g1, [0, 1], num_vars)
    # f = g + h_1 + h_2
    f = f1_z + f2_z - g_z

    result = GlueResult(
        f=f,
        line_form=g1,
        scale=c,
        line_map=tuple(line),
        lambda1_map=tuple(lambda1),
        lambda2_map=tuple(lambda2),
    )
    _check_pullbacks(result, f1, f2, g1)
    return result


def _push(
    f: MultiPolynomial,
    targets: List[int],
    num_vars: int,
) -> MultiPolynomial:
    """Rename variable i of ``f`` to ``targets[i]`` among ``num_vars``"""
    renamed = {}
    for exp, c in f.terms.items():
        new = [0] * num_vars
        for i, e in enumerate(exp):
            new[targets[i]] += e
        renamed[tuple(new)] = c
    return MultiPolynomial(num_vars, f.degree, renamed)


def _check_pullbacks(
    result: GlueResult,
    f1: MultiPolynomial,
    f2: MultiPolynomial,
    g: MultiPolynomial,
):
    n1, n2 = f1.num_vars - 1, f2.num_vars - 1
    h1 = f1 - _push(g, [0, 1], f1.num_vars)
    h2 = f2 - _push(g, [0, 1], f2.num_vars)
    checks = (
        ('Λ_1', result.f.pullback(result.lambda1_map, f1.num_vars), f1),
        ('Λ_2', result.f.pullback(result.lambda2_map, f2.num_vars), f2),
        ('ℓ', result.f.pullback(result.line_map, 2), g),
        ('h_1', h1.in_ideal_of(range(2, n1 + 1)), True),
        ('h_2', h2.in_ideal_of(range(2, n2 + 1)), True),
    )
    for label, got, expected in checks:
        if got != expected:
            raise ClusteredError(
                'postcondition',
                f'gluing violates the {label} identity: {got} != {expected}')


def random_glue_pair(
    rng: Random,
    n1: int,
    n2: int,
    degree: int,
    bound: int = 10,
) -> Tuple[MultiPolynomial, MultiPolynomial]:
    """Two random polynomials whose line restrictions are proportional"""
    g = {}
    while not any(g.values()):
        g = {(degree - a, a): rng.randint(-bound, bound)
             for a in range(degree + 1)}
    c = 0
    while not c:
        c = rng.randint(-3, 3)

    def extend(num_vars: int, factor) -> MultiPolynomial:
        terms = {exp + (0,) * (num_vars - 2): factor * v
                 for exp, v in g.items()}
        for exp in _monomials(num_vars, degree):
            if any(exp[2:]) and rng.random() < .5:
                terms[exp] = rng.randint(-bound, bound)
        return MultiPolynomial(num_vars, degree, terms)

    return extend(n1 + 1, 1), extend(n2 + 1, c)


def _monomials(num_vars: int, degree: int):
    if num_vars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _monomials(num_vars - 1, degree - first):
            yield (first,) + rest
