"""Covector posets, ranks and f-polynomials.

Two rank notions are kept side by side:

``chain_ranks``
    length of the longest covering chain ending at an element (0 for
    minimal elements).
``ranks``
    the normalized rank function: the unique function that increases by
    exactly one along every covering relation and has minimum 0 on each
    connected component of the Hasse diagram.  It exists whenever the poset
    is graded in that sense (face posets of arrangement apartments always
    are, ranks being face dimensions shifted to start at 0).  When no such
    function exists, ``ranks`` falls back to ``chain_ranks`` and ``graded``
    is False.

The f-polynomial uses ``ranks``; on apartments this counts faces by
dimension, including faces that are minimal without being vertices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import EmptySystemError, UnknownElementError
from .signs import SignSystem, format_vector


@dataclass(frozen=True)
class CovectorPoset:
    elements: tuple
    covers: tuple  # (lower index, upper index) pairs
    ranks: tuple
    chain_ranks: tuple
    graded: bool

    @property
    def system_rank(self) -> int:
        return max(self.ranks)

    def index(self, x) -> int:
        try:
            return self._index[tuple(x)]
        except KeyError:
            raise UnknownElementError(f"{format_vector(tuple(x))} is not in the poset") from None

    @property
    def _index(self):
        cached = self.__dict__.get("_index_map")
        if cached is None:
            cached = {x: i for i, x in enumerate(self.elements)}
            object.__setattr__(self, "_index_map", cached)
        return cached


def build_poset(system: SignSystem) -> CovectorPoset:
    if len(system) == 0:
        raise EmptySystemError("cannot build the poset of an empty sign system")
    plus, minus = system.masks()
    n = len(plus)
    sizes = [(plus[i] | minus[i]).bit_count() for i in range(n)]
    order = sorted(range(n), key=sizes.__getitem__)

    # below[y]: bitset over element indices strictly below y
    below = [0] * n
    for y in range(n):
        yp, ym, ys = plus[y], minus[y], sizes[y]
        acc = 0
        for x in range(n):
            if sizes[x] < ys and plus[x] & ~yp == 0 and minus[x] & ~ym == 0:
                acc |= 1 << x
        below[y] = acc

    covers = []
    lower = [[] for _ in range(n)]
    for y in range(n):
        strict = below[y]
        shadow = 0
        rest = strict
        while rest:
            low = rest & -rest
            shadow |= below[low.bit_length() - 1]
            rest ^= low
        direct = strict & ~shadow
        while direct:
            low = direct & -direct
            x = low.bit_length() - 1
            covers.append((x, y))
            lower[y].append(x)
            direct ^= low
    covers.sort()

    chain = [0] * n
    for y in order:
        if lower[y]:
            chain[y] = 1 + max(chain[x] for x in lower[y])

    ranks = _normalized_ranks(n, covers)
    graded = ranks is not None
    if not graded:
        ranks = list(chain)
    return CovectorPoset(system.covectors, tuple(covers), tuple(ranks), tuple(chain), graded)


def _normalized_ranks(n, covers):
    adjacent = [[] for _ in range(n)]
    for x, y in covers:
        adjacent[x].append((y, 1))
        adjacent[y].append((x, -1))
    rank = [None] * n
    for root in range(n):
        if rank[root] is not None:
            continue
        rank[root] = 0
        component = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, step in adjacent[u]:
                if rank[v] is None:
                    rank[v] = rank[u] + step
                    component.append(v)
                    queue.append(v)
                elif rank[v] != rank[u] + step:
                    return None
        low = min(rank[v] for v in component)
        for v in component:
            rank[v] -= low
    return rank


def rank_of(poset: CovectorPoset, x) -> int:
    return poset.ranks[poset.index(x)]


class FPolynomial:
    """Integer polynomial stored as ``{exponent: coefficient}`` without zeros."""

    def __init__(self, coefficients):
        self.coefficients = {
            int(k): int(v) for k, v in sorted(dict(coefficients).items(), reverse=True) if v
        }

    def __eq__(self, other):
        if isinstance(other, FPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __repr__(self):
        return f"FPolynomial({render_polynomial(self)!r})"

    @property
    def degree(self) -> int:
        return max(self.coefficients, default=0)

    def coefficient(self, exponent: int) -> int:
        return self.coefficients.get(exponent, 0)

    def __call__(self, x):
        return sum(c * x**k for k, c in self.coefficients.items())


def f_polynomial(system: SignSystem, poset: CovectorPoset | None = None) -> FPolynomial:
    """Sum of ``x^(system rank - rank(X))`` over all covectors X."""
    poset = poset or build_poset(system)
    top = poset.system_rank
    coefficients = {}
    for r in poset.ranks:
        coefficients[top - r] = coefficients.get(top - r, 0) + 1
    return FPolynomial(coefficients)


def render_polynomial(poly) -> str:
    """Descending-degree text such as ``3*x^2 + 11*x + 9``."""
    coefficients = poly.coefficients if isinstance(poly, FPolynomial) else dict(poly)
    terms = []
    for k in sorted((k for k, c in coefficients.items() if c), reverse=True):
        c = coefficients[k]
        if k == 0:
            body = str(c)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if c == 1 else f"{c}*{power}"
        terms.append(body)
    return " + ".join(terms) if terms else "0"


def to_dot(poset: CovectorPoset, name: str = "covectors") -> str:
    """Hasse diagram in Graphviz DOT; edges point from covered to covering."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for i, x in enumerate(poset.elements):
        lines.append(f'  n{i} [label="{format_vector(x)}"];')
    by_rank = {}
    for i, r in enumerate(poset.ranks):
        by_rank.setdefault(r, []).append(f"n{i}")
    for r in sorted(by_rank):
        lines.append(f"  {{ rank=same; {'; '.join(by_rank[r])}; }}")
    for x, y in poset.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
