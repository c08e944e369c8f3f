"""Covector sets from tope sets.

``reconstruct_com`` evaluates ``{X : X o -T is a tope for every tope T}``,
which recovers the covectors of any conditional oriented matroid from its
topes; ``reconstruct_om`` evaluates the oriented-matroid variant with
``X o T``.  Only candidates supported inside the common tope support are
enumerated: outside it every tope is zero, so any nonzero entry there would
survive into ``X o -T`` and break membership.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from .errors import EmptySystemError, InvalidTopeSetError, SizeGuardError
from .signs import GroundSet, SignSystem, format_vector, support

SIZE_GUARD = 20
HARD_LIMIT = 40  # 3**40 no longer fits the 64-bit candidate counter


@dataclass(frozen=True)
class TopeSet:
    ground: GroundSet
    topes: tuple
    common_support: frozenset

    @classmethod
    def from_system(cls, system: SignSystem) -> "TopeSet":
        """Validate ``system`` as a tope set (nonempty, one shared support)."""
        if len(system) == 0:
            raise InvalidTopeSetError("tope set is empty")
        first = system.covectors[0]
        common = support(first)
        for x in system.covectors[1:]:
            if support(x) != common:
                raise InvalidTopeSetError(
                    "topes must share one support (all topes of a COM have equal "
                    f"support): {format_vector(first)} and {format_vector(x)} differ"
                )
        return cls(system.ground, system.covectors, common)

    @classmethod
    def from_vectors(cls, vectors, labels=None, n=None) -> "TopeSet":
        return cls.from_system(SignSystem.from_vectors(vectors, labels, n))

    def __len__(self):
        return len(self.topes)

    def __iter__(self):
        return iter(self.topes)

    def as_system(self) -> SignSystem:
        return SignSystem(self.ground, self.topes)


def topes_of(system: SignSystem) -> TopeSet:
    """The maximal covectors under the conformal order."""
    if len(system) == 0:
        raise EmptySystemError("an empty sign system has no topes")
    plus, minus = system.masks()
    # a strictly larger covector has strictly larger support
    order = sorted(range(len(plus)), key=lambda i: -(plus[i] | minus[i]).bit_count())
    maximal = []
    for i in order:
        p, m = plus[i], minus[i]
        if not any(p & ~plus[j] == 0 and m & ~minus[j] == 0 for j in maximal):
            maximal.append(i)
    return TopeSet.from_system(
        SignSystem(system.ground, tuple(system.covectors[i] for i in maximal))
    )


def reconstruct_com(topes: TopeSet, *, force: bool = False, workers: int = 1) -> SignSystem:
    """All X whose composition with every negated tope is again a tope."""
    return _reconstruct(topes, opposite=True, force=force, workers=workers)


def reconstruct_om(topes: TopeSet, *, force: bool = False, workers: int = 1) -> SignSystem:
    """All X whose composition with every tope is again a tope."""
    return _reconstruct(topes, opposite=False, force=force, workers=workers)


def _reconstruct(topes, opposite, force, workers):
    if not isinstance(topes, TopeSet):
        topes = TopeSet.from_system(topes)
    local = sorted(topes.common_support)
    k = len(local)
    if k > HARD_LIMIT:
        raise SizeGuardError(f"common tope support of {k} elements exceeds {HARD_LIMIT}")
    if k > SIZE_GUARD and not force:
        raise SizeGuardError(
            f"common tope support has {k} elements (3^{k} candidates); "
            f"limit is {SIZE_GUARD} unless forced"
        )
    codes = []
    for t in topes:
        code = 0
        for bit, pos in enumerate(local):
            if t[pos] > 0:
                code |= 1 << bit
        codes.append(code)

    total = 3**k
    if workers <= 1 or total < 3**8:
        counters = kernels.reconstruct_range(codes, k, opposite, 0, total)
    else:
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                lambda b: kernels.reconstruct_range(codes, k, opposite, *b), bounds
            )
            counters = [c for part in parts for c in part]

    n = topes.ground.size
    result = []
    for c in counters:
        vec = [0] * n
        for bit in range(k - 1, -1, -1):
            c, digit = divmod(c, 3)
            vec[local[bit]] = digit - 1
        result.append(tuple(vec))
    return SignSystem(topes.ground, tuple(result))
