"""Stable-range lifts and determinant-prescribed completion of rows.

The ternary lift finds y with aR + (b + cy)R = R whenever (a, b, c) is
unimodular and a avoids the radical: split a = r*s against b (r coprime to
b, every prime of s divides b), then y = 0 mod r and y = 1 mod s does it.
Residue rings route through the integer lift of gcd(a, n).

Row completion follows an induction on the row length: fold the leading
quotients into one generator, lift the last-but-one slot into a unimodular
position, complete the shorter row, and undo the shift with an elementary
column operation. The quotient/coefficient witnesses are threaded through
the recursion algebraically; recomputing them modulo n could displace them
by annihilators of d and derail the radical case analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    NotDivisible,
    NotIdempotent,
    NotInIdeal,
    NotPrincipal,
    NotUnimodular,
    PreconditionFailed,
    UnsupportedRing,
)
from .matrices import RingMatrix
from .report import CheckReport
from .rings import (
    IntegerRing,
    ModularRing,
    PrimeFieldPolynomialRing,
    ProductRing,
    RingElement,
    bezout_combination,
    crt,
    divide_exact,
    gcd_bezout,
    is_unit,
    jacobson_member,
    unit_inverse,
)
from .adequate import adequate_split

__all__ = [
    "CompletionCertificate",
    "sr1_quotient_lift",
    "sr2_reduce",
    "complete_row",
    "idempotent_complete",
    "verify_completion",
]

_LIFT_RINGS = (IntegerRing, ModularRing, PrimeFieldPolynomialRing)


@dataclass(frozen=True)
class CompletionCertificate:
    """Square matrix whose first row and exact determinant are prescribed."""

    A: RingMatrix
    first_row: tuple[RingElement, ...]
    det_target: RingElement
    det_value: RingElement


def _certify(ring, rows, first_row, target) -> CompletionCertificate:
    A = RingMatrix(ring, rows)
    det = A.det()
    assert tuple(A.entries[0]) == tuple(first_row), "first row was not preserved"
    assert det == target, "determinant misses the target"
    return CompletionCertificate(A, tuple(first_row), target, det)


def verify_completion(cert: CompletionCertificate) -> CheckReport:
    """Independent re-check: first row entries and exact determinant."""
    failures = []
    if cert.A.rows != cert.A.cols or cert.A.rows != len(cert.first_row):
        return CheckReport.from_failures(["shapes consistent"])
    if tuple(cert.A.entries[0]) != tuple(cert.first_row):
        failures.append("first row match")
    det = cert.A.det()
    if det != cert.det_target or det != cert.det_value:
        failures.append("det = target")
    return CheckReport.from_failures(failures)


# ---------------------------------------------------------------------------
# stable range lifts


def _check_unimodular(elements):
    g, _ = bezout_combination(elements)
    return is_unit(g)


def _sr1_domain(a, b, c):
    # y = r*alpha vanishes mod r and is 1 mod s, so b + c*y dodges every
    # prime of a: primes of r miss b, primes of s miss c (unimodularity)
    split = adequate_split(a, b)
    bd = gcd_bezout(split.r, split.s)
    inv = unit_inverse(bd.g)
    assert inv is not None, "split parts are always coprime over a domain"
    return split.r * (bd.x * inv)


def sr1_quotient_lift(a: RingElement, b: RingElement, c: RingElement) -> RingElement:
    """y with aR + (b + c*y)R = R, given aR + bR + cR = R and a outside the
    radical. The result is re-verified by a gcd before returning."""
    ring = a.ring
    if not isinstance(ring, _LIFT_RINGS):
        raise UnsupportedRing(f"no lift construction over {ring}")
    if not _check_unimodular([a, b, c]):
        raise PreconditionFailed("(a, b, c) is not unimodular")
    if jacobson_member(a):
        raise PreconditionFailed("a lies in the radical")

    if isinstance(ring, ModularRing):
        zz = IntegerRing()
        a_int = zz.from_int(math.gcd(a.payload, ring.n))
        y_int = _sr1_domain(a_int, zz.from_int(b.payload), zz.from_int(c.payload))
        y = ring.from_int(y_int.payload)
    else:
        y = _sr1_domain(a, b, c)

    assert is_unit(gcd_bezout(a, b + c * y).g), "lift postcondition failed"
    return y


def sr2_reduce(a1: RingElement, a2: RingElement, a3: RingElement):
    """(y1, y2) with (a1 + a3*y1)R + (a2 + a3*y2)R = R for any unimodular
    triple. When a1 sits in the radical, 1 - a1*x1 is a unit and the
    explicit correction a3*x3*(1 - a1*x1)^{-1} lands a1 next to the unit
    1 + a1; otherwise the ternary lift applies directly."""
    ring = a1.ring
    g, coeffs = bezout_combination([a1, a2, a3])
    inv = unit_inverse(g)
    if inv is None:
        raise NotUnimodular("gcd(a1, a2, a3) is not a unit")
    x1, x2, x3 = (c * inv for c in coeffs)

    if jacobson_member(a1):
        w = unit_inverse(ring.one - a1 * x1)
        assert w is not None  # radical membership makes 1 - a1*x1 a unit
        y1, y2 = x3 * w, ring.zero
    else:
        y1, y2 = ring.zero, sr1_quotient_lift(a1, a2, a3)

    assert is_unit(gcd_bezout(a1 + a3 * y1, a2 + a3 * y2).g)
    return y1, y2


# ---------------------------------------------------------------------------
# row completion


def complete_row(row, d: RingElement) -> CompletionCertificate:
    """Square matrix with the given first row and determinant exactly d;
    requires the row to generate the ideal (d) and length >= 2."""
    row = list(row)
    if len(row) < 2:
        raise PreconditionFailed("need at least two row entries")
    ring = d.ring
    if not isinstance(ring, _LIFT_RINGS):
        raise UnsupportedRing(f"completion is not supported over {ring}")
    for a in row:
        if a.ring != ring:
            raise PreconditionFailed("row entries must share the target's ring")

    try:
        quotients = [divide_exact(a, d) for a in row]
    except NotDivisible as exc:
        raise NotPrincipal(f"d does not divide every entry: {exc}") from exc
    g, coeffs = bezout_combination(row)
    try:
        w = divide_exact(d, g)
    except NotDivisible as exc:
        raise NotPrincipal("d is not an element combination of the row") from exc
    witnesses = [c * w for c in coeffs]  # sum(witnesses[i] * row[i]) == d

    if d.is_zero():
        # the zero ideal forces a zero row; park a shifted identity below it
        zero, one = ring.zero, ring.one
        n = len(row)
        rows = [list(row)]
        for i in range(1, n):
            rows.append([one if j == i - 1 else zero for j in range(n)])
        return _certify(ring, rows, row, d)

    rows = _complete(ring, row, d, quotients, witnesses)
    return _certify(ring, rows, row, d)


def _complete(ring, row, d, q, x):
    """Invariant: d*q[i] == row[i] and sum(x[i]*row[i]) == d."""
    k = len(row)
    if k == 2:
        return [[row[0], row[1]], [-x[1], x[0]]]

    one = ring.one
    c = -one
    for xi, qi in zip(x, q):
        c = c + xi * qi  # d*c == 0
    t = q[-1] * x[-1] - c

    if any(not jacobson_member(qi) for qi in q[: k - 2]):
        return _complete_leading(ring, row, d, q, x, t)

    if not jacobson_member(q[k - 2]):
        # shift the next-to-last slot onto the first and undo afterwards
        new_row = list(row)
        new_row[0] = row[0] + row[k - 2]
        new_q = list(q)
        new_q[0] = q[0] + q[k - 2]
        new_x = list(x)
        new_x[k - 2] = x[k - 2] - x[0]
        rows = _complete_leading(ring, new_row, d, new_q, new_x, t)
        for r in rows:
            r[0] = r[0] - r[k - 2]
        return rows

    # last resort: q[-1]*x[-1] - c escapes the radical (the three classes
    # cannot all sit inside it, their witness combination sums to 1)
    new_row = list(row)
    new_row[0] = row[0] + row[k - 1] * x[k - 1]
    new_q = list(q)
    new_q[0] = q[0] + t
    new_x = list(x)
    new_x[k - 1] = x[k - 1] * (one - x[0])
    rows = _complete_leading(ring, new_row, d, new_q, new_x, t)
    shift = x[k - 1]
    for r in rows:
        r[0] = r[0] - shift * r[k - 1]
    return rows


def _complete_leading(ring, row, d, q, x, t):
    """Induction step when the leading quotients escape the radical."""
    k = len(row)
    zero, one = ring.zero, ring.one
    g, s_coeffs = bezout_combination(q[: k - 2])
    z = sr1_quotient_lift(g, q[k - 2], t)
    target = q[k - 2] + t * z
    bd = gcd_bezout(g, target)
    inv = unit_inverse(bd.g)
    assert inv is not None  # exactly the lift's postcondition
    alpha, beta = bd.x * inv, bd.y * inv

    shift = x[k - 1] * z
    new_row = list(row[: k - 2]) + [row[k - 2] + row[k - 1] * shift]
    new_q = list(q[: k - 2]) + [target]
    new_x = [alpha * sc for sc in s_coeffs] + [beta]
    sub = _complete(ring, new_row, d, new_q, new_x)

    rows = [list(sub[i]) + [row[k - 1] if i == 0 else zero] for i in range(k - 1)]
    rows.append([zero] * (k - 1) + [one])
    # undo the shift: col[k-2] -= x[k-1]*z * col[k-1]
    for r in rows:
        r[k - 2] = r[k - 2] - shift * r[k - 1]
    return rows


# ---------------------------------------------------------------------------
# idempotent-determinant completion


def idempotent_complete(row, e: RingElement) -> CompletionCertificate:
    """Square matrix with the given first row and determinant the idempotent
    e, provided e lies in the ideal the row generates.

    Over Z/n the idempotent splits the ring into coprime halves: complete to
    determinant 1 where e acts as the identity, park zero rows where it
    vanishes, and glue with the remainder theorem. Products work
    componentwise."""
    row = list(row)
    if len(row) < 2:
        raise PreconditionFailed("need at least two row entries")
    ring = e.ring
    if not isinstance(ring, (ModularRing, ProductRing)):
        raise UnsupportedRing(f"idempotent completion is not supported over {ring}")
    for a in row:
        if a.ring != ring:
            raise PreconditionFailed("row entries must share the idempotent's ring")
    if e * e != e:
        raise NotIdempotent("e*e != e")
    g, _ = bezout_combination(row)
    try:
        divide_exact(e, g)
    except NotDivisible as exc:
        raise NotInIdeal("e is not in the ideal generated by the row") from exc

    if isinstance(ring, ProductRing):
        parts = []
        for idx, factor in enumerate(ring.factors):
            comp_row = [a.payload[idx] for a in row]
            parts.append(_component_complete(factor, comp_row, e.payload[idx]))
        n = len(row)
        rows = [
            [RingElement(ring, tuple(p[i][j] for p in parts)) for j in range(n)]
            for i in range(n)
        ]
        return _certify(ring, rows, row, e)

    rows = _component_complete(ring, row, e)
    return _certify(ring, rows, row, e)


def _zero_det_rows(ring, row):
    n = len(row)
    return [list(row)] + [[ring.zero] * n for _ in range(n - 1)]


def _component_complete(ring, row, e):
    """Entry rows (lists of RingElements) completing `row` to determinant e."""
    if e == ring.one:
        return complete_row(row, ring.one).A.to_lists()
    if e.is_zero():
        return _zero_det_rows(ring, row)
    if not isinstance(ring, ModularRing):
        # domains only carry the idempotents 0 and 1, handled above
        raise NotIdempotent(f"{ring.element_str(e)} is not idempotent over {ring}")
    n_mod = ring.n
    n2 = math.gcd(e.payload, n_mod)
    n1 = n_mod // n2
    sub = ModularRing(n1)
    cert1 = complete_row([sub.from_int(a.payload) for a in row], sub.one)
    n = len(row)
    rows = []
    for i in range(n):
        out = []
        for j in range(n):
            r1 = cert1.A.entries[i][j].payload
            r2 = row[j].payload % n2 if i == 0 else 0
            out.append(ring.from_int(crt([r1, r2], [n1, n2])))
        rows.append(out)
    return rows
