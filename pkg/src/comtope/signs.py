"""Sign vectors, ground sets and sign systems.

A sign vector is a plain tuple of ints drawn from ``{-1, 0, 1}``; coordinates
are positional and the ground set only carries labels for I/O.  Internally the
hot kernels work on a dual-bitmask encoding ``(plus, minus)`` where bit ``i``
of ``plus`` is set iff coordinate ``i`` is ``+1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionError, UnknownElementError

SIGNS = (-1, 0, 1)
SignVector = tuple  # tuple[int, ...] with entries in SIGNS


def sign_vector(entries: Iterable[int]) -> SignVector:
    """Validate ``entries`` and return them as a sign vector."""
    vec = tuple(int(v) for v in entries)
    for v in vec:
        if v not in SIGNS:
            raise ValueError(f"sign entries must be -1, 0 or 1, got {v!r}")
    return vec


def _same_length(x: SignVector, y: SignVector) -> None:
    if len(x) != len(y):
        raise DimensionError(f"sign vectors of length {len(x)} and {len(y)}")


def compose(x: SignVector, y: SignVector) -> SignVector:
    """``x`` where it is nonzero, ``y`` elsewhere."""
    _same_length(x, y)
    return tuple(a if a else b for a, b in zip(x, y))


def negate(x: SignVector) -> SignVector:
    return tuple(-a for a in x)


def separation(x: SignVector, y: SignVector) -> frozenset:
    """Positions where ``x`` and ``y`` carry opposite nonzero signs."""
    _same_length(x, y)
    return frozenset(i for i, (a, b) in enumerate(zip(x, y)) if a and a == -b)


def support(x: SignVector) -> frozenset:
    return frozenset(i for i, a in enumerate(x) if a)


def zero_set(x: SignVector) -> frozenset:
    return frozenset(i for i, a in enumerate(x) if not a)


def leq(x: SignVector, y: SignVector) -> bool:
    """The conformal order: every nonzero entry of ``x`` agrees with ``y``."""
    _same_length(x, y)
    return all(a == 0 or a == b for a, b in zip(x, y))


def to_masks(x: SignVector) -> tuple[int, int]:
    plus = minus = 0
    for i, a in enumerate(x):
        if a > 0:
            plus |= 1 << i
        elif a < 0:
            minus |= 1 << i
    return plus, minus


def from_masks(plus: int, minus: int, n: int) -> SignVector:
    return tuple(((plus >> i) & 1) - ((minus >> i) & 1) for i in range(n))


def format_vector(x: SignVector) -> str:
    """``(1, 0, -1)`` -> ``'+0-'``; the empty vector renders as ``'()'``."""
    if not x:
        return "()"
    return "".join("+" if a > 0 else "-" if a < 0 else "0" for a in x)


@dataclass(frozen=True)
class GroundSet:
    """Ordered, duplicate-free element labels; order fixes coordinate positions."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"ground-set labels must be distinct: {labels}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def default(cls, n: int) -> "GroundSet":
        return cls(tuple(f"e{i + 1}" for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise UnknownElementError(
                f"unknown element {label!r}; ground set is {', '.join(self.labels)}"
            ) from None

    def indices(self, labels: Iterable) -> frozenset:
        return frozenset(self.index(label) for label in labels)

    def labels_of(self, positions: Iterable[int]) -> tuple:
        return tuple(self.labels[i] for i in sorted(positions))

    def without(self, positions: Iterable[int]) -> "GroundSet":
        drop = set(positions)
        return GroundSet(tuple(l for i, l in enumerate(self.labels) if i not in drop))


@dataclass(frozen=True)
class SignSystem:
    """A ground set together with a finite set of covectors.

    Covectors are stored deduplicated and sorted in mixed-radix order
    (``-1 < 0 < +1``, first coordinate most significant), which is the
    deterministic iteration order used by every check and writer.
    """

    ground: GroundSet
    covectors: tuple
    _masks: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.ground.size
        vecs = set()
        for vec in self.covectors:
            vec = sign_vector(vec)
            if len(vec) != n:
                raise DimensionError(
                    f"covector {format_vector(vec)} has length {len(vec)}, ground set has {n}"
                )
            vecs.add(vec)
        object.__setattr__(self, "covectors", tuple(sorted(vecs)))

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], labels=None, n=None):
        vectors = [tuple(v) for v in vectors]
        if labels is None:
            if n is None:
                if not vectors:
                    raise ValueError("cannot infer ground-set size from zero covectors")
                n = len(vectors[0])
            ground = GroundSet.default(n)
        else:
            ground = labels if isinstance(labels, GroundSet) else GroundSet(tuple(labels))
        return cls(ground, tuple(vectors))

    def __len__(self):
        return len(self.covectors)

    def __iter__(self):
        return iter(self.covectors)

    def __contains__(self, x):
        return tuple(x) in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_set")
        if cached is None:
            cached = frozenset(self.covectors)
            object.__setattr__(self, "_lookup_set", cached)
        return cached

    @property
    def size(self) -> int:
        return self.ground.size

    def masks(self) -> tuple[list, list]:
        """Parallel ``(plus, minus)`` bitmask lists in stored order."""
        if self._masks is None:
            pairs = [to_masks(x) for x in self.covectors]
            object.__setattr__(
                self, "_masks", ([p for p, _ in pairs], [m for _, m in pairs])
            )
        return self._masks


def validate_topes(system) -> bool:
    """True iff the system is nonempty and all its members share one support."""
    vectors = list(system)
    if not vectors:
        return False
    first = support(vectors[0])
    return all(support(x) == first for x in vectors[1:])
