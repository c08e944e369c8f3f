"""Pure-Python kernels; same signatures and results as ``_ckernels``.

All vectors are passed as dual bitmasks.  Reconstruction candidates are
identified by their mixed-radix counter over ``k`` local coordinates: digit
``i`` (local coordinate ``i``, most significant first) maps ``0, 1, 2`` to
``-1, 0, +1``.
"""

NAME = "python"
MAX_BITS = None  # Python ints are unbounded


def reconstruct_range(tope_codes, k, opposite, start, stop):
    """Counters ``c`` in ``[start, stop)`` whose candidate passes every tope.

    ``tope_codes`` holds the plus-mask of each tope over the ``k`` local
    coordinates (topes have full local support).  With ``opposite`` the test
    is ``X o -T in topes``, otherwise ``X o T in topes``.
    """
    full = (1 << k) - 1
    members = set(tope_codes)
    codes = list(tope_codes)
    digits = _decode(start, k)
    plus = minus = 0
    for i, d in enumerate(digits):
        if d == 0:
            minus |= 1 << i
        elif d == 2:
            plus |= 1 << i
    out = []
    for c in range(start, stop):
        free = full & ~(plus | minus)
        if opposite:
            ok = all((plus | (free & ~t)) in members for t in codes)
        else:
            ok = all((plus | (free & t)) in members for t in codes)
        if ok:
            out.append(c)
        i = k - 1
        while i >= 0:
            bit = 1 << i
            d = digits[i]
            if d == 0:
                digits[i] = 1
                minus &= ~bit
                break
            if d == 1:
                digits[i] = 2
                plus |= bit
                break
            digits[i] = 0
            plus &= ~bit
            minus |= bit
            i -= 1
    return out


def _decode(counter, k):
    digits = [0] * k
    for i in range(k - 1, -1, -1):
        counter, digits[i] = divmod(counter, 3)
    return digits


def first_closure_violation(plus, minus, negate_second):
    """First ordered pair ``(i, j)`` with ``X_i o (+/-X_j)`` not in the list."""
    members = set(zip(plus, minus))
    n = len(plus)
    for i in range(n):
        xp, xm = plus[i], minus[i]
        free_i = ~(xp | xm)
        for j in range(n):
            if negate_second:
                yp, ym = minus[j], plus[j]
            else:
                yp, ym = plus[j], minus[j]
            if (xp | (yp & free_i), xm | (ym & free_i)) not in members:
                return i, j
    return None


def first_elimination_violation(plus, minus):
    """First ``(i, j, e)`` violating strong elimination, or None.

    Pairs are scanned with ``i < j``; separation and the off-separation part
    of ``X o Y`` are symmetric, so this is also the first violation in full
    row-major order.
    """
    n = len(plus)
    for i in range(n):
        xp, xm = plus[i], minus[i]
        xs = xp | xm
        for j in range(i + 1, n):
            yp, ym = plus[j], minus[j]
            sep = (xp & ym) | (xm & yp)
            if not sep:
                continue
            keep = ~sep
            tp = (xp | (yp & ~xs)) & keep
            tm = (xm | (ym & ~xs)) & keep
            covered = 0
            for z in range(n):
                zp, zm = plus[z], minus[z]
                if (zp & keep) == tp and (zm & keep) == tm:
                    covered |= sep & ~(zp | zm)
                    if covered == sep:
                        break
            if covered != sep:
                missing = sep & ~covered
                return i, j, (missing & -missing).bit_length() - 1
    return None
