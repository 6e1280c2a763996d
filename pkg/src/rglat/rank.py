"""Exact rank values: rationals extended with the two symbolic infinities.

Every grading in the package takes values in this type.  Finite arithmetic
is :class:`fractions.Fraction` arithmetic, so algebraic identities can be
asserted with ``==`` and no tolerance.  Sums that would combine ``+inf``
with ``-inf`` raise :class:`IndeterminateFormError` instead of guessing.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Union

from .errors import IndeterminateFormError, InputFormatError, PreconditionViolation

_NEG, _FIN, _POS = -1, 0, 1

RankLike = Union["Rank", Fraction, int, str]


def format_fraction(value: Fraction) -> str:
    """Render a rational as an explicit ``p/q`` string (``q`` always present)."""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Inverse of :func:`format_fraction`; also accepts bare integers."""
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"not a rational: {text!r}") from exc


@functools.total_ordering
class Rank:
    """An exact rational rank, or one of the endpoints ``-inf`` / ``+inf``.

    The ordering is total with ``-inf < finite < +inf``.  Instances are
    immutable by convention and hashable.
    """

    __slots__ = ("_kind", "_value")

    def __init__(self, value: Fraction | int | str = 0):
        self._kind = _FIN
        self._value = Fraction(value)

    @property
    def is_finite(self) -> bool:
        return self._kind == _FIN

    @property
    def is_pos_inf(self) -> bool:
        return self._kind == _POS

    @property
    def is_neg_inf(self) -> bool:
        return self._kind == _NEG

    @property
    def fraction(self) -> Fraction:
        if self._kind != _FIN:
            raise PreconditionViolation(f"{self} has no finite value")
        return self._value

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._kind == other._kind and self._value == other._value

    def __lt__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._kind != other._kind:
            return self._kind < other._kind
        return self._value < other._value

    def __hash__(self) -> int:
        return hash((self._kind, self._value))

    def __add__(self, other: RankLike) -> "Rank":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._kind == _FIN and other._kind == _FIN:
            return Rank(self._value + other._value)
        if self._kind == _FIN:
            return other
        if other._kind == _FIN:
            return self
        if self._kind != other._kind:
            raise IndeterminateFormError("(+inf) + (-inf) is undefined")
        return self

    __radd__ = __add__

    def __neg__(self) -> "Rank":
        if self._kind == _FIN:
            return Rank(-self._value)
        return NEG_INF if self._kind == _POS else POS_INF

    def __sub__(self, other: RankLike) -> "Rank":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RankLike) -> "Rank":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __abs__(self) -> "Rank":
        if self._kind == _FIN:
            return Rank(abs(self._value))
        return POS_INF

    def __truediv__(self, other: Fraction | int) -> "Rank":
        scale = Fraction(other)
        if scale <= 0:
            raise PreconditionViolation("rank division requires a positive scalar")
        if self._kind == _FIN:
            return Rank(self._value / scale)
        return self

    def __str__(self) -> str:
        if self._kind == _POS:
            return "inf"
        if self._kind == _NEG:
            return "-inf"
        return str(self._value)

    def __repr__(self) -> str:
        return f"Rank({str(self)!r})"

    def to_json(self) -> str:
        if self._kind == _POS:
            return "inf"
        if self._kind == _NEG:
            return "-inf"
        return format_fraction(self._value)

    @classmethod
    def from_json(cls, text: str) -> "Rank":
        if text == "inf":
            return POS_INF
        if text == "-inf":
            return NEG_INF
        return cls(parse_fraction(text))


def _infinite(kind: int) -> Rank:
    r = object.__new__(Rank)
    r._kind = kind
    r._value = Fraction(0)
    return r


POS_INF = _infinite(_POS)
NEG_INF = _infinite(_NEG)
ZERO = Rank(0)


def _coerce(value: object) -> Rank:
    if isinstance(value, Rank):
        return value
    if isinstance(value, (int, Fraction)):
        return Rank(value)
    return NotImplemented


def as_rank(value: RankLike) -> Rank:
    if isinstance(value, str):
        return Rank(value)
    coerced = _coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a rank")
    return coerced


class RankInterval:
    """A closed interval of ranks; the codomain of a grading."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: RankLike, hi: RankLike):
        self.lo = as_rank(lo)
        self.hi = as_rank(hi)
        if not self.lo <= self.hi:
            raise PreconditionViolation(f"empty rank interval [{self.lo}, {self.hi}]")

    def contains(self, value: RankLike) -> bool:
        value = as_rank(value)
        return self.lo <= value <= self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo.is_finite and self.hi.is_finite

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"RankInterval({self.lo}, {self.hi})"
