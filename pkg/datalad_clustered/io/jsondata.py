"""JSON representation of all computed objects

Integers stay JSON numbers (Python's ``json`` writes them exactly),
rationals are strings ``"p/q"`` (or ``"p"`` when integral). Polynomials
use ``{"degree": d, "terms": [{"exp": [...], "coeff": "p/q"}, ...]}``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import singledispatch
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Tuple,
)

from sympy import Rational

from ..clustered import (
    ClusterReport,
    FixedSubspaceModel,
    MeetsZModel,
    MuConstruction,
)
from ..exceptions import ClusteredError
from ..grassmann import (
    GrassContext,
    Partition,
)
from ..osculation import (
    GeneralTypeThresholds,
    IncidenceDimension,
    OsculationReport,
    ThresholdReport,
    Verdict,
)
from ..p1.forms import (
    BinaryForm,
    MultiPolynomial,
)
from ..p1.glue import GlueResult
from ..p1.splitting import SplittingType
from ..schubert import SchubertClass

__all__ = [
    'to_json',
    'rational_from_json',
    'class_from_json',
    'form_from_json',
    'poly_from_json',
]


@singledispatch
def to_json(obj) -> Any:
    """JSON-compatible structure for any object computed by this package"""
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    raise TypeError(f'no JSON representation for {type(obj).__name__}')


@to_json.register
def _(obj: Fraction):
    return str(obj)


@to_json.register
def _(obj: Rational):
    return str(obj)


def rational_from_json(value) -> Rational:
    try:
        return Rational(value)
    except (TypeError, ValueError) as e:
        raise ClusteredError(
            'out-of-range', f'{value!r} is not a rational number') from e


@to_json.register
def _(obj: GrassContext):
    return {'planeDim': obj.plane_dim, 'ambientDim': obj.ambient_dim}


@to_json.register
def _(obj: Partition):
    return list(obj.parts)


@to_json.register
def _(obj: SchubertClass):
    return [
        {'partition': list(lam.parts), 'coeff': c}
        for lam, c in obj.coeffs.items()
    ]


def class_from_json(ctx: GrassContext, data) -> SchubertClass:
    """Inverse of the class representation, for ``ctx``"""
    if not isinstance(data, list):
        raise ClusteredError(
            'inadmissible', 'a class is a list of {"partition", "coeff"} terms')
    cls = SchubertClass.zero(ctx)
    for term in data:
        try:
            parts = tuple(term['partition'])
            coeff = term.get('coeff', 1)
        except (KeyError, TypeError, AttributeError) as e:
            raise ClusteredError(
                'inadmissible', f'malformed class term {term!r}') from e
        # JSON booleans are ints in Python
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise ClusteredError(
                'inadmissible',
                f'coefficient {coeff!r} of {list(parts)} is not an integer')
        try:
            # repeated partitions add up
            cls = cls + SchubertClass(ctx, {parts: coeff})
        except ClusteredError:
            raise
        except (TypeError, ValueError) as e:
            raise ClusteredError(
                'inadmissible', f'malformed partition in {term!r}') from e
    return cls


@to_json.register
def _(obj: ClusterReport):
    return {
        'epsilon': obj.epsilon,
        'ell': obj.ell,
        'ellFloor': obj.ell_floor,
        'codimBound': obj.codim_bound,
        'satisfiesNecessary': obj.satisfies_necessary,
        'extremal': None if obj.extremal is None else {
            'fixedDim': obj.extremal.fixed_dim,
            'multiplicity': obj.extremal.multiplicity,
            'description': obj.extremal.description,
        },
    }


@to_json.register
def _(obj: MuConstruction):
    return {
        'source': to_json(obj.source),
        'target': to_json(obj.target),
        'lambda': to_json(obj.lam),
        'ell': obj.ell,
        'dual': to_json(obj.dual),
        'mu': to_json(obj.mu),
        'kleimanBound': obj.kleiman_bound,
        'codimIdentity': obj.codim_identity_holds,
    }


@to_json.register
def _(obj: MeetsZModel):
    return {
        'n': obj.n,
        'k': obj.k,
        'zDim': obj.z_dim,
        'zDeg': obj.z_deg,
        'epsilon': obj.epsilon,
        'classB': to_json(obj.class_b),
        'classC': to_json(obj.class_c),
    }


@to_json.register
def _(obj: FixedSubspaceModel):
    return {
        'n': obj.n,
        'k': obj.k,
        'j': obj.j,
        'classB': to_json(obj.class_b),
        'classC': to_json(obj.class_c),
    }


@to_json.register
def _(obj: IncidenceDimension):
    return {
        'dim': obj.dim,
        'ziEmptyWhen': obj.zi_empty_when,
        'ziProperWhen': obj.zi_proper_when,
    }


@to_json.register
def _(obj: OsculationReport):
    return {
        'n': obj.n,
        'd': obj.d,
        'r': obj.r,
        's': obj.s,
        'totalDim': obj.total_dim,
        'fiberDim': obj.fiber_dim,
        'multidegree': list(obj.multidegree),
        'generalType': obj.general_type,
        'genusCoefficient': obj.genus_coefficient,
    }


@to_json.register
def _(obj: GeneralTypeThresholds):
    return {
        'deltaD': obj.delta_d,
        'deltaRs': obj.delta_rs,
        'deltaRsWeak': obj.delta_rs_weak,
        'boundD': obj.bound_d,
        'boundRs': obj.bound_rs,
    }


@to_json.register
def _(obj: Verdict):
    return {
        'minDegree': obj.min_degree,
        'holds': obj.holds,
        'bound': to_json(obj.bound),
        'strict': obj.strict,
        'conditional': obj.conditional,
        'statement': obj.statement,
    }


@to_json.register
def _(obj: ThresholdReport):
    out: Dict[str, Any] = {'n': obj.n, 'd': obj.d}
    out.update({label: to_json(v) for label, v in obj.verdicts.items()})
    out['chowKFamily'] = to_json(obj.chow_k_family)
    out['ziEmpty'] = to_json(obj.zi_empty)
    out['ziProper'] = to_json(obj.zi_proper)
    out['codimensionChain'] = to_json(obj.codimension_chain)
    return out


def _terms_json(terms) -> List[Dict[str, Any]]:
    return [
        {'exp': list(exp), 'coeff': str(c)}
        for exp, c in terms
        if c != 0
    ]


@to_json.register
def _(obj: BinaryForm):
    return {
        'degree': obj.degree,
        'terms': _terms_json(
            ((obj.degree - j, j), c) for j, c in enumerate(obj.coefficients)),
    }


@to_json.register
def _(obj: MultiPolynomial):
    return {
        'degree': obj.degree,
        'numVars': obj.num_vars,
        'terms': _terms_json(obj.terms.items()),
    }


def _terms_from_json(data) -> Tuple[int, Dict[tuple, Rational]]:
    terms: Dict[tuple, Rational] = {}
    try:
        degree = int(data['degree'])
        for term in data['terms']:
            exp = tuple(int(e) for e in term['exp'])
            terms[exp] = terms.get(exp, 0) + rational_from_json(term['coeff'])
    except (KeyError, TypeError, ValueError) as e:
        raise ClusteredError(
            'not-homogeneous-poly', f'malformed polynomial {data!r}') from e
    return degree, terms


def form_from_json(data) -> BinaryForm:
    degree, terms = _terms_from_json(data)
    for exp in terms:
        if len(exp) != 2 or sum(exp) != degree:
            raise ClusteredError(
                'not-homogeneous-poly',
                f'exponent {list(exp)} does not belong to a binary form '
                f'of degree {degree}')
    return BinaryForm(
        degree,
        tuple(terms.get((degree - j, j), 0) for j in range(degree + 1)))


def poly_from_json(data, num_vars: Optional[int] = None) -> MultiPolynomial:
    degree, terms = _terms_from_json(data)
    if num_vars is None:
        num_vars = data.get('numVars')
    if num_vars is None:
        if not terms:
            raise ClusteredError(
                'not-homogeneous-poly',
                'the zero polynomial needs "numVars"')
        num_vars = len(next(iter(terms)))
    return MultiPolynomial(int(num_vars), degree, terms)


@to_json.register
def _(obj: SplittingType):
    return list(obj.twists)


@to_json.register
def _(obj: GlueResult):
    return {
        'f': to_json(obj.f),
        'lineForm': to_json(obj.line_form),
        'scale': str(obj.scale),
        'lineMap': list(obj.line_map),
        'lambda1Map': list(obj.lambda1_map),
        'lambda2Map': list(obj.lambda2_map),
    }
