"""Decision procedures for the covector axioms.

Each ``check_*`` function returns ``(holds, witness)``; the witness is None
when the axiom holds and otherwise the first violation in the system's
stored order:

* FS and C: the pair ``(X, Y)``,
* SE: the triple ``(X, Y, e)`` with ``e`` a coordinate position,
* Sym: the covector ``X`` whose negation is missing,
* Z: the missing zero vector.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .errors import ConsistencyError
from .signs import SignSystem, negate


def check_fs(system: SignSystem):
    """Face symmetry: ``X o -Y`` is a covector for all covectors X, Y."""
    plus, minus = system.masks()
    hit = kernels.first_closure_violation(plus, minus, True, system.size)
    if hit is None:
        return True, None
    i, j = hit
    return False, (system.covectors[i], system.covectors[j])


def check_c(system: SignSystem):
    """Composition: ``X o Y`` is a covector for all covectors X, Y."""
    plus, minus = system.masks()
    hit = kernels.first_closure_violation(plus, minus, False, system.size)
    if hit is None:
        return True, None
    i, j = hit
    return False, (system.covectors[i], system.covectors[j])


def check_se(system: SignSystem):
    """Strong elimination, scanning the covector set for each required Z."""
    plus, minus = system.masks()
    hit = kernels.first_elimination_violation(plus, minus, system.size)
    if hit is None:
        return True, None
    i, j, e = hit
    return False, (system.covectors[i], system.covectors[j], e)


def check_sym(system: SignSystem):
    for x in system:
        if negate(x) not in system:
            return False, x
    return True, None


def check_z(system: SignSystem):
    zero = (0,) * system.size
    if zero in system:
        return True, None
    return False, zero


def is_com(system: SignSystem) -> bool:
    return check_fs(system)[0] and check_se(system)[0]


def is_om(system: SignSystem) -> bool:
    """Oriented-matroid test computed by two independent routes.

    Route one uses composition, symmetry and strong elimination on a
    nonempty set; route two is "COM plus the zero vector".  They must
    agree; a mismatch raises ``ConsistencyError``.
    """
    se = check_se(system)[0]
    direct = len(system) > 0 and check_c(system)[0] and check_sym(system)[0] and se
    via_com = check_fs(system)[0] and se and check_z(system)[0]
    if direct != via_com:
        raise ConsistencyError(
            f"OM routes disagree (C/Sym/SE: {direct}, FS/SE/Z: {via_com})"
        )
    return direct


AXIOMS = ("fs", "se", "c", "sym", "z")
_CHECKS = {"fs": check_fs, "se": check_se, "c": check_c, "sym": check_sym, "z": check_z}


@dataclass(frozen=True)
class AxiomReport:
    fs: bool
    se: bool
    c: bool
    sym: bool
    z: bool
    witnesses: dict = field(default_factory=dict)
    nonempty: bool = True

    @property
    def com(self) -> bool:
        return self.fs and self.se

    @property
    def om(self) -> bool:
        direct = self.nonempty and self.c and self.sym and self.se
        if direct != (self.com and self.z):
            raise ConsistencyError("OM routes disagree")
        return direct


def axiom_report(system: SignSystem) -> AxiomReport:
    results = {name: _CHECKS[name](system) for name in AXIOMS}
    witnesses = {name: w for name, (ok, w) in results.items() if not ok}
    return AxiomReport(
        **{name: ok for name, (ok, _) in results.items()},
        witnesses=witnesses,
        nonempty=len(system) > 0,
    )
