"""Affine hyperplane arrangements and their apartments.

A hyperplane ``a . x = b`` is evaluated as the affine form ``a . x - b``.
Integers, ``Fraction`` and ``Decimal`` inputs keep evaluation exact; as soon
as any coefficient or coordinate is a ``float`` the arrangement switches to
floating mode, where values within ``epsilon`` of zero count as zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionError, OnHyperplaneError
from .minors import reduce_constant
from .reconstruction import TopeSet, reconstruct_com
from .signs import GroundSet, SignSystem

DEFAULT_EPSILON = 1e-9


def parse_number(value):
    """Exact number from an int, Fraction, decimal string or ``"p/q"`` string.

    Floats are passed through unchanged (they select floating mode).
    """
    if isinstance(value, bool):
        raise TypeError(f"not a number: {value!r}")
    if isinstance(value, float):
        return value
    if isinstance(value, (Rational, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational number: {value!r}") from None
    raise TypeError(f"not a number: {value!r}")


def _is_float(v) -> bool:
    return isinstance(v, float)


@dataclass(frozen=True)
class Hyperplane:
    coeffs: tuple
    offset: object = 0
    label: str = ""

    def __post_init__(self):
        coeffs = tuple(parse_number(c) for c in self.coeffs)
        if not coeffs or all(c == 0 for c in coeffs):
            raise ValueError(f"hyperplane {self.label!r} needs a nonzero coefficient vector")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "offset", parse_number(self.offset))

    @property
    def dimension(self) -> int:
        return len(self.coeffs)

    @property
    def exact(self) -> bool:
        return not (_is_float(self.offset) or any(map(_is_float, self.coeffs)))

    def evaluate(self, point: Sequence) -> object:
        if len(point) != self.dimension:
            raise DimensionError(
                f"point of dimension {len(point)} for hyperplane of dimension {self.dimension}"
            )
        return sum(a * x for a, x in zip(self.coeffs, point)) - self.offset


def _sign(value, epsilon) -> int:
    if isinstance(value, float):
        if abs(value) <= epsilon:
            return 0
    return (value > 0) - (value < 0)


def sign_map(h: Hyperplane, point: Sequence, epsilon: float = DEFAULT_EPSILON) -> int:
    """Side of ``h`` containing ``point``: -1, 0 or +1."""
    point = tuple(parse_number(c) for c in point)
    return _sign(h.evaluate(point), epsilon)


@dataclass(frozen=True)
class Arrangement:
    hyperplanes: tuple
    dimension: int = None

    def __post_init__(self):
        hyperplanes = tuple(self.hyperplanes)
        if not hyperplanes:
            raise ValueError("an arrangement needs at least one hyperplane")
        relabelled = []
        for i, h in enumerate(hyperplanes):
            if not h.label:
                h = Hyperplane(h.coeffs, h.offset, f"h{i + 1}")
            relabelled.append(h)
        dim = self.dimension if self.dimension is not None else relabelled[0].dimension
        for h in relabelled:
            if h.dimension != dim:
                raise DimensionError(
                    f"hyperplane {h.label!r} has dimension {h.dimension}, arrangement has {dim}"
                )
        object.__setattr__(self, "hyperplanes", tuple(relabelled))
        object.__setattr__(self, "dimension", dim)
        GroundSet(tuple(h.label for h in relabelled))  # distinct labels

    @classmethod
    def from_forms(cls, forms: Iterable, dimension=None) -> "Arrangement":
        """Build from ``(coeffs, offset)`` or ``(coeffs, offset, label)`` tuples."""
        return cls(tuple(Hyperplane(*form) for form in forms), dimension)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(tuple(h.label for h in self.hyperplanes))

    @property
    def exact(self) -> bool:
        return all(h.exact for h in self.hyperplanes)

    def __len__(self):
        return len(self.hyperplanes)


def arrangement_sign(arrangement: Arrangement, point: Sequence, epsilon=DEFAULT_EPSILON):
    point = _point(arrangement, point)
    return tuple(_sign(h.evaluate(point), epsilon) for h in arrangement.hyperplanes)


def _point(arrangement, point):
    point = tuple(parse_number(c) for c in point)
    if len(point) != arrangement.dimension:
        raise DimensionError(
            f"point {point} has dimension {len(point)}, arrangement has {arrangement.dimension}"
        )
    return point


def topes_from_points(arrangement: Arrangement, points: Iterable, epsilon=DEFAULT_EPSILON) -> TopeSet:
    """Distinct sign vectors of chamber sample points.

    Raises ``OnHyperplaneError`` for a point on a hyperplane (within
    ``epsilon`` in floating mode).
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    topes = set()
    for raw in points:
        point = _point(arrangement, raw)
        vec = []
        for h in arrangement.hyperplanes:
            value = h.evaluate(point)
            s = _sign(value, epsilon)
            if s == 0:
                raise OnHyperplaneError(point, h.label, value)
            vec.append(s)
        topes.add(tuple(vec))
    return TopeSet.from_system(SignSystem(arrangement.ground, tuple(topes)))


def apartment_to_com(
    arrangement: Arrangement,
    points: Iterable,
    *,
    epsilon=DEFAULT_EPSILON,
    reduce: bool = False,
    force: bool = False,
) -> SignSystem:
    """Covector set of the apartment sampled by ``points``.

    With ``reduce`` the coordinates of hyperplanes missing the apartment
    (constant across all covectors) are deleted.
    """
    com = reconstruct_com(topes_from_points(arrangement, points, epsilon), force=force)
    return reduce_constant(com) if reduce else com
