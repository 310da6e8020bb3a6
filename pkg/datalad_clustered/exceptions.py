"""Exceptions raised by the computations of this package"""

from __future__ import annotations

__all__ = ['ClusteredError']


class ClusteredError(ValueError):
    """Domain error with a machine-readable ``kind``

    The ``kind`` label is what command line front ends report (e.g.
    ``h-undefined``), the message is for humans.
    """
    def __init__(self, kind: str, msg: str):
        super().__init__(msg)
        self.kind = kind

    def __repr__(self):
        return f'{self.__class__.__name__}({self.kind!r}, {str(self)!r})'
