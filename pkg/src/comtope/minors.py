"""Deletion and contraction of ground-set elements."""
from __future__ import annotations

from typing import Iterable

from .errors import UnknownElementError
from .signs import SignSystem


def restrict(x, positions: Iterable[int]):
    """Drop the coordinates at ``positions`` from the sign vector ``x``."""
    drop = frozenset(positions)
    for i in drop:
        if not 0 <= i < len(x):
            raise UnknownElementError(f"position {i} outside a vector of length {len(x)}")
    return tuple(a for i, a in enumerate(x) if i not in drop)


def delete(system: SignSystem, labels: Iterable) -> SignSystem:
    """Restrict every covector away from ``labels``; duplicates merge."""
    drop = system.ground.indices(labels)
    return SignSystem(
        system.ground.without(drop),
        tuple(restrict(x, drop) for x in system),
    )


def contract(system: SignSystem, labels: Iterable) -> SignSystem:
    """Restrictions of the covectors that vanish on all of ``labels``.

    The result may be empty.
    """
    drop = system.ground.indices(labels)
    return SignSystem(
        system.ground.without(drop),
        tuple(restrict(x, drop) for x in system if all(x[i] == 0 for i in drop)),
    )


def constant_elements(system: SignSystem) -> tuple:
    """Labels whose coordinate takes one nonzero value on every covector.

    For an arrangement-derived system these are the hyperplanes that miss the
    apartment entirely.
    """
    if len(system) == 0:
        return ()
    first = system.covectors[0]
    return tuple(
        label
        for i, label in enumerate(system.ground.labels)
        if first[i] != 0 and all(x[i] == first[i] for x in system)
    )


def reduce_constant(system: SignSystem) -> SignSystem:
    """Delete the constant coordinates reported by ``constant_elements``."""
    return delete(system, constant_elements(system))
