"""Exact homogeneous polynomials

:class:`BinaryForm` is a form in ``s, t`` (sections of O(degree) on P^1),
:class:`MultiPolynomial` a sparse homogeneous polynomial in any number of
variables. Coefficients are sympy rationals throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import (
    Dict,
    Iterable,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from sympy import (
    Poly,
    QQ,
    Rational,
    SympifyError,
    symbols,
    sympify,
)
from sympy.polys.polyerrors import BasePolynomialError

from ..exceptions import ClusteredError

__all__ = [
    'BinaryForm',
    'MultiPolynomial',
    'S',
    'T',
]

S, T = symbols('s t')


def _to_poly(expr, gens, names) -> Poly:
    try:
        if isinstance(expr, str):
            expr = sympify(expr, locals={str(g): g for g in gens})
        return Poly(expr, *gens, domain=QQ)
    except (BasePolynomialError, SympifyError, TypeError) as e:
        raise ClusteredError(
            'not-homogeneous-poly',
            f'{expr!r} is not a polynomial in {names}') from e


@dataclass(frozen=True)
class BinaryForm:
    """Binary form; ``coefficients[j]`` belongs to s^(degree-j) t^j"""
    degree: int
    coefficients: Tuple[Rational, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ClusteredError(
                'out-of-range', f'negative degree {self.degree}')
        coeffs = tuple(Rational(c) for c in self.coefficients)
        if len(coeffs) != self.degree + 1:
            raise ClusteredError(
                'degree-mismatch',
                f'a form of degree {self.degree} needs {self.degree + 1} '
                f'coefficients, got {len(coeffs)}')
        object.__setattr__(self, 'coefficients', coeffs)

    @classmethod
    def zero(cls, degree: int) -> 'BinaryForm':
        return cls(degree, (0,) * (degree + 1))

    @classmethod
    def from_expr(cls, expr, degree: Optional[int] = None) -> 'BinaryForm':
        """Parse a sympy expression or string in ``s`` and ``t``

        The zero form carries no degree of its own, pass ``degree`` then.
        """
        poly = _to_poly(expr, (S, T), 's, t')
        if poly.is_zero:
            if degree is None:
                raise ClusteredError(
                    'degree-mismatch', 'the zero form needs an explicit degree')
            return cls.zero(degree)
        if not poly.is_homogeneous:
            raise ClusteredError(
                'not-homogeneous-poly', f'{expr} is not a binary form')
        deg = poly.total_degree()
        if degree is not None and degree != deg:
            raise ClusteredError(
                'degree-mismatch', f'{expr} has degree {deg}, not {degree}')
        terms = dict(poly.terms())
        return cls(deg, tuple(terms.get((deg - j, j), 0) for j in range(deg + 1)))

    def __str__(self) -> str:
        return str(self.as_expr())

    def __bool__(self) -> bool:
        return any(self.coefficients)

    def as_poly(self) -> Poly:
        return Poly.from_dict(
            {(self.degree - j, j): c for j, c in enumerate(self.coefficients)},
            S, T, domain=QQ)

    def as_expr(self):
        return self.as_poly().as_expr()

    def d_s(self) -> 'BinaryForm':
        """∂p/∂s"""
        self._require_positive_degree()
        d = self.degree
        return BinaryForm(
            d - 1, tuple(c * (d - j) for j, c in enumerate(self.coefficients[:-1])))

    def d_t(self) -> 'BinaryForm':
        """∂p/∂t"""
        self._require_positive_degree()
        return BinaryForm(
            self.degree - 1,
            tuple(c * j for j, c in enumerate(self.coefficients) if j))

    def _require_positive_degree(self):
        if not self.degree:
            raise ClusteredError(
                'out-of-range', 'cannot differentiate a form of degree 0')

    def distinct_roots(self) -> int:
        """Number of distinct roots on P^1 over the algebraic closure

        Degree of p / gcd(p, ∂p/∂s, ∂p/∂t), computed over the rationals.
        """
        if not self:
            raise ClusteredError('zero-map', 'the zero form vanishes everywhere')
        if not self.degree:
            return 0
        p = self.as_poly()
        g = p.gcd(self.d_s().as_poly()).gcd(self.d_t().as_poly())
        return p.exquo(g).total_degree()


@dataclass(frozen=True)
class MultiPolynomial:
    """Homogeneous polynomial as a map from exponent tuples to coefficients"""
    num_vars: int
    degree: int
    terms: Mapping[Tuple[int, ...], Rational]

    def __post_init__(self):
        normalized: Dict[Tuple[int, ...], Rational] = {}
        for exp, c in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.num_vars or any(e < 0 for e in exp):
                raise ClusteredError(
                    'not-homogeneous-poly',
                    f'exponent {exp} does not fit {self.num_vars} variables')
            if sum(exp) != self.degree:
                raise ClusteredError(
                    'not-homogeneous-poly',
                    f'monomial {exp} has degree {sum(exp)}, not {self.degree}')
            normalized[exp] = normalized.get(exp, 0) + Rational(c)
        object.__setattr__(self, 'terms', {
            exp: normalized[exp]
            for exp in sorted(normalized, reverse=True)
            if normalized[exp] != 0
        })

    @staticmethod
    def gens(num_vars: int, prefix: str = 'z'):
        return symbols(f'{prefix}0:{num_vars}')

    @classmethod
    def from_expr(
        cls,
        expr,
        num_vars: int,
        prefix: str = 'x',
        degree: Optional[int] = None,
    ) -> 'MultiPolynomial':
        gens = cls.gens(num_vars, prefix)
        poly = _to_poly(expr, gens, f'{prefix}0..{prefix}{num_vars - 1}')
        if poly.is_zero:
            if degree is None:
                raise ClusteredError(
                    'degree-mismatch',
                    'the zero polynomial needs an explicit degree')
            return cls(num_vars, degree, {})
        deg = poly.total_degree()
        if degree is not None and degree != deg:
            raise ClusteredError(
                'degree-mismatch', f'{expr} has degree {deg}, not {degree}')
        return cls(num_vars, deg, dict(poly.terms()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return str(self.as_expr())

    def as_expr(self, prefix: str = 'z'):
        gens = self.gens(self.num_vars, prefix)
        expr = 0
        for exp, c in self.terms.items():
            mono = c
            for g, e in zip(gens, exp):
                mono *= g ** e
            expr += mono
        return expr

    def _check_compatible(self, other: 'MultiPolynomial'):
        if (self.num_vars, self.degree) != (other.num_vars, other.degree):
            raise ClusteredError(
                'degree-mismatch',
                f'cannot combine polynomials of degree {self.degree} in '
                f'{self.num_vars} variables and degree {other.degree} in '
                f'{other.num_vars} variables')

    def __add__(self, other: 'MultiPolynomial') -> 'MultiPolynomial':
        self._check_compatible(other)
        summed = dict(self.terms)
        for exp, c in other.terms.items():
            summed[exp] = summed.get(exp, 0) + c
        return MultiPolynomial(self.num_vars, self.degree, summed)

    def __neg__(self) -> 'MultiPolynomial':
        return self.scale(-1)

    def __sub__(self, other: 'MultiPolynomial') -> 'MultiPolynomial':
        return self + (-other)

    def scale(self, factor) -> 'MultiPolynomial':
        factor = Rational(factor)
        return MultiPolynomial(
            self.num_vars, self.degree,
            {exp: factor * c for exp, c in self.terms.items()})

    def restrict(self, variables: Iterable[int]) -> 'MultiPolynomial':
        """Keep the monomials involving only ``variables``"""
        keep = set(variables)
        return MultiPolynomial(self.num_vars, self.degree, {
            exp: c for exp, c in self.terms.items()
            if all(not e or i in keep for i, e in enumerate(exp))
        })

    def in_ideal_of(self, variables: Iterable[int]) -> bool:
        """Every monomial is divisible by at least one of ``variables``"""
        variables = tuple(variables)
        return all(any(exp[i] for i in variables) for exp in self.terms)

    def pullback(
        self,
        coord_map: Sequence[Optional[int]],
        num_vars: int,
    ) -> 'MultiPolynomial':
        """Substitute variable i by source variable ``coord_map[i]``

        ``None`` entries substitute zero; the result lives in ``num_vars``
        variables.
        """
        if len(coord_map) != self.num_vars:
            raise ClusteredError(
                'degree-mismatch',
                f'coordinate map of length {len(coord_map)} for '
                f'{self.num_vars} variables')
        pulled: Dict[Tuple[int, ...], Rational] = {}
        for exp, c in self.terms.items():
            if any(e and coord_map[i] is None for i, e in enumerate(exp)):
                continue
            target = [0] * num_vars
            for i, e in enumerate(exp):
                if e:
                    target[coord_map[i]] += e
            target = tuple(target)
            pulled[target] = pulled.get(target, 0) + c
        return MultiPolynomial(num_vars, self.degree, pulled)
