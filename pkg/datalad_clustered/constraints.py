"""Parameter constraints for command line inputs

These parse the textual forms of contexts, partitions and polynomials.
Only syntax is checked here; whether a partition fits a Grassmannian is a
domain question answered by the computations themselves.
"""

from __future__ import annotations

import json
from typing import (
    Any,
    Dict,
    Optional,
    Tuple,
)

from datalad_next.constraints import Constraint

__all__ = [
    'EnsureIntTuple',
    'EnsurePolynomialSpec',
    'EnsureClassSpec',
]


class EnsureIntTuple(Constraint):
    """Comma-separated integers, e.g. ``2,1,0``"""
    def __init__(self, length: Optional[int] = None):
        self._length = length
        super().__init__()

    @property
    def input_synopsis(self) -> str:
        return 'comma-separated integers' if self._length is None \
            else f'{self._length} comma-separated integers'

    @property
    def input_description(self) -> str:
        return f'value must be {self.input_synopsis}, e.g. "2,1,0"'

    def __call__(self, value) -> Tuple[int, ...]:
        if isinstance(value, str):
            items = [v.strip() for v in value.split(',') if v.strip()]
        else:
            items = list(value)
        try:
            parsed = tuple(int(v) for v in items)
        except (TypeError, ValueError):
            self.raise_for(value, 'not a list of integers')
        if self._length is not None and len(parsed) != self._length:
            self.raise_for(
                value,
                'expected {length} integers, got {got}',
                length=self._length,
                got=len(parsed),
            )
        return parsed


def _loads(constraint: Constraint, value: str):
    try:
        return json.loads(value)
    except json.JSONDecodeError as e:
        constraint.raise_for(value, 'malformed JSON: {err}', err=str(e))


class EnsurePolynomialSpec(Constraint):
    """A polynomial as JSON terms, or as an expression string

    JSON input (anything starting with ``{``) is decoded to a dict, other
    strings are passed on as expressions.
    """
    @property
    def input_synopsis(self) -> str:
        return 'polynomial'

    @property
    def input_description(self) -> str:
        return ('value must be a polynomial expression like "s**2 - t**2", '
                'or JSON {"degree": d, "terms": [{"exp": [...], '
                '"coeff": "p/q"}, ...]}')

    def __call__(self, value) -> Dict[str, Any] | str:
        if isinstance(value, dict):
            return value
        if not isinstance(value, str) or not value.strip():
            self.raise_for(value, 'not a polynomial specification')
        if value.lstrip().startswith('{'):
            spec = _loads(self, value)
            if not isinstance(spec, dict):
                self.raise_for(value, 'JSON polynomial must be an object')
            return spec
        return value


class EnsureClassSpec(Constraint):
    """A JSON list of ``{"partition": [...], "coeff": c}`` terms"""
    @property
    def input_synopsis(self) -> str:
        return 'Schubert class'

    @property
    def input_description(self) -> str:
        return ('value must be JSON like '
                '[{"partition": [2, 1, 0], "coeff": 1}]')

    def __call__(self, value) -> list:
        spec = _loads(self, value) if isinstance(value, str) else value
        if not isinstance(spec, list) or not all(
                isinstance(t, dict) and 'partition' in t for t in spec):
            self.raise_for(value, 'not a list of partition terms')
        return spec
