"""Diagonal reduction with invertibility certificates.

The workhorse is a classical sweep: gcd row operations clear the pivot
column, gcd column operations clear the pivot row, and the pivot strictly
shrinks whenever the two interfere, so the alternation terminates over Z and
GF(p)[x]. Residue rings reduce by lifting to Z and projecting the whole
certificate back (reduction commutes with the quotient map); products reduce
componentwise. A final pass repairs the divisibility chain and normalizes
each diagonal entry to its canonical associate, absorbing units into P.

The 2x2 step for a matrix [[a,0],[b,c]] with unimodular (a,b,c) goes through
an adequate split of one entry against the other and lands on diag(1, ac) up
to a unit; both split directions are implemented.

verify_reduction re-multiplies everything from scratch and is the ground
truth for every certificate this module emits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .adequate import adequate_split, pi_adequate_split_zn
from .errors import NotDivisible, NotUnimodular, ScaleExceeded, UnsupportedRing
from .matrices import RingMatrix
from .report import CheckReport
from .rings import (
    IntegerRing,
    ModularRing,
    PrimeFieldPolynomialRing,
    ProductRing,
    RingElement,
    canonical_associate,
    divide_exact,
    gcd_bezout,
    is_unit,
    unit_inverse,
)

__all__ = [
    "ReductionCertificate",
    "hermite_row",
    "kaplansky_2x2",
    "diagonal_reduce",
    "determinantal_divisors",
    "elementary_divisors_oracle",
    "verify_reduction",
]


@dataclass(frozen=True)
class ReductionCertificate:
    """P*A*Q = D with P, Q invertible, D diagonal with d_i | d_{i+1} and
    every d_i canonical. The determinant units are recorded for auditing."""

    P: RingMatrix
    D: RingMatrix
    Q: RingMatrix
    detP_unit: RingElement
    detQ_unit: RingElement


def _make_certificate(ring, P_rows, D_rows, Q_rows) -> ReductionCertificate:
    P = RingMatrix(ring, P_rows)
    D = RingMatrix(ring, D_rows)
    Q = RingMatrix(ring, Q_rows)
    detP = P.det()
    detQ = Q.det()
    assert is_unit(detP) and is_unit(detQ), "transform lost invertibility"
    return ReductionCertificate(P, D, Q, detP, detQ)


# ---------------------------------------------------------------------------
# 1x2 and 2x2 steps


def hermite_row(a: RingElement, b: RingElement):
    """(d, U) with (a b)*U = (d 0) and det(U) = 1, straight from the Bezout
    witness: U = [[x, -b1], [y, a1]]."""
    bd = gcd_bezout(a, b)
    ring = a.ring
    U = RingMatrix(ring, [[bd.x, -bd.b1], [bd.y, bd.a1]])
    return bd.g, U


def _split_against(c, a):
    """Adequate split of a power of c relative to a, per the ring family."""
    if isinstance(c.ring, ModularRing):
        return pi_adequate_split_zn(c, a)
    return adequate_split(c, a)


def _normalized_unit_combo(a, b):
    """x, y with x*a + y*b = 1; requires (a, b) unimodular."""
    bd = gcd_bezout(a, b)
    inv = unit_inverse(bd.g)
    if inv is None:
        raise NotUnimodular(f"({a.ring.element_str(a)}, {a.ring.element_str(b)}) is not unimodular")
    return bd.x * inv, bd.y * inv


def kaplansky_2x2(a: RingElement, b: RingElement, c: RingElement, branch: str = "auto"):
    """Certificate reducing [[a,0],[b,c]] to diag(1, ac) up to a unit.

    Requires aR + bR + cR = R. `branch` selects which entry gets the
    adequate split: "c_to_a" (default first try), "a_to_c" for the symmetric
    construction, or "auto" to fall back when the first is unavailable.
    """
    ring = a.ring
    if not isinstance(ring, (IntegerRing, PrimeFieldPolynomialRing, ModularRing)):
        raise UnsupportedRing(f"no adequate-split capability over {ring}")
    inner = gcd_bezout(a, b)
    outer = gcd_bezout(inner.g, c)
    if not is_unit(outer.g):
        raise NotUnimodular("gcd(a, b, c) is not a unit")

    one, zero = ring.one, ring.zero
    A = RingMatrix(ring, [[a, zero], [b, c]])

    if a.is_zero():
        # (b, c) is unimodular; p*b + q*c = 1
        p, q = _normalized_unit_combo(b, c)
        P = [[zero, one], [one, zero]]
        Q1 = RingMatrix(ring, [[c, p], [-b, q]])
        Q2 = RingMatrix(ring, [[zero, one], [one, zero]])
        Q = (Q1 * Q2).to_lists()
        return _finish_2x2(ring, A, P, Q)

    if c.is_zero():
        p, q = _normalized_unit_combo(a, b)
        P = [[p, q], [-b, a]]
        Q = RingMatrix.identity(ring, 2).to_lists()
        return _finish_2x2(ring, A, P, Q)

    if branch not in ("auto", "c_to_a", "a_to_c"):
        raise ValueError(f"unknown branch {branch!r}")
    if branch in ("auto", "c_to_a"):
        try:
            return _kaplansky_c_to_a(ring, A, a, b, c)
        except (UnsupportedRing, NotUnimodular):
            if branch == "c_to_a":
                raise
    return _kaplansky_a_to_c(ring, A, a, b, c)


def _kaplansky_c_to_a(ring, A, a, b, c):
    split = _split_against(c, a)
    r = split.r
    t = a + b * r
    x, y = _normalized_unit_combo(t, c * r)
    one = ring.one
    lower = -(b * x + c * y)
    P = [[one, r], [lower, one + lower * r]]  # [[1,0],[lower,1]] * [[1,r],[0,1]]
    Q = [[x, -(c * r)], [y, t]]
    return _finish_2x2(ring, A, P, Q)


def _kaplansky_a_to_c(ring, A, a, b, c):
    split = _split_against(a, c)
    r = split.r
    t = b * r + c
    x, y = _normalized_unit_combo(a * r, t)
    one = ring.one
    w = -(x * a + y * b)
    P = [[x, y], [-t, a * r]]
    Q = [[r, r * w + one], [one, w]]  # [[r,1],[1,0]] * [[1,w],[0,1]]
    return _finish_2x2(ring, A, P, Q)


def _finish_2x2(ring, A, P_rows, Q_rows):
    P = [list(row) for row in P_rows]
    Q = [list(row) for row in Q_rows]
    D = (RingMatrix(ring, P) * A * RingMatrix(ring, Q)).to_lists()
    assert D[0][1].is_zero() and D[1][0].is_zero(), "2x2 step failed to diagonalize"
    for i in range(2):
        u, _ = canonical_associate(D[i][i])
        if u != ring.one:
            u_inv = unit_inverse(u)
            D[i] = [u_inv * v for v in D[i]]
            P[i] = [u_inv * v for v in P[i]]
    # the chain holds by construction: d1 is the unit 1, which divides d2
    return _make_certificate(ring, P, D, Q)


# ---------------------------------------------------------------------------
# full reduction


def _entry_size(e: RingElement) -> int:
    if isinstance(e.ring, IntegerRing):
        return abs(e.payload)
    if isinstance(e.ring, PrimeFieldPolynomialRing):
        return len(e.payload)
    return 1


def _swap_cols(rows, i, j):
    for row in rows:
        row[i], row[j] = row[j], row[i]


def _clear_pivot_column(A, P, k):
    for i in range(k + 1, len(A)):
        e = A[i][k]
        if e.is_zero():
            continue
        p = A[k][k]
        try:
            q = divide_exact(e, p)
        except NotDivisible:
            q = None
        if q is not None:
            A[i] = [v - q * u for u, v in zip(A[k], A[i])]
            P[i] = [v - q * u for u, v in zip(P[k], P[i])]
        else:
            bd = gcd_bezout(p, e)
            A[k], A[i] = (
                [bd.x * u + bd.y * v for u, v in zip(A[k], A[i])],
                [bd.a1 * v - bd.b1 * u for u, v in zip(A[k], A[i])],
            )
            P[k], P[i] = (
                [bd.x * u + bd.y * v for u, v in zip(P[k], P[i])],
                [bd.a1 * v - bd.b1 * u for u, v in zip(P[k], P[i])],
            )


def _clear_pivot_row(A, Q, k):
    for j in range(k + 1, len(A[0])):
        e = A[k][j]
        if e.is_zero():
            continue
        p = A[k][k]
        try:
            q = divide_exact(e, p)
        except NotDivisible:
            q = None
        if q is not None:
            for row in A:
                row[j] = row[j] - q * row[k]
            for row in Q:
                row[j] = row[j] - q * row[k]
        else:
            bd = gcd_bezout(p, e)
            for row in A:
                row[k], row[j] = (
                    bd.x * row[k] + bd.y * row[j],
                    bd.a1 * row[j] - bd.b1 * row[k],
                )
            for row in Q:
                row[k], row[j] = (
                    bd.x * row[k] + bd.y * row[j],
                    bd.a1 * row[j] - bd.b1 * row[k],
                )


def _sweep(A, P, Q):
    m, n = len(A), len(A[0])
    for k in range(min(m, n)):
        best = None
        for i in range(k, m):
            for j in range(k, n):
                if not A[i][j].is_zero():
                    sz = _entry_size(A[i][j])
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        if best is None:
            break  # trailing block is zero; remaining diagonal entries stay 0
        _, bi, bj = best
        if bi != k:
            A[k], A[bi] = A[bi], A[k]
            P[k], P[bi] = P[bi], P[k]
        if bj != k:
            _swap_cols(A, k, bj)
            _swap_cols(Q, k, bj)
        while True:
            if any(not A[i][k].is_zero() for i in range(k + 1, m)):
                _clear_pivot_column(A, P, k)
            if any(not A[k][j].is_zero() for j in range(k + 1, n)):
                _clear_pivot_row(A, Q, k)
            if all(A[i][k].is_zero() for i in range(k + 1, m)) and all(
                A[k][j].is_zero() for j in range(k + 1, n)
            ):
                break


def _fix_divisibility_chain(A, P, Q):
    r = min(len(A), len(A[0]))
    while True:
        changed = False
        for i in range(r - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b.is_zero():
                continue  # d | 0 always
            try:
                divide_exact(b, a)
                continue
            except NotDivisible:
                pass
            A[i] = [u + v for u, v in zip(A[i], A[i + 1])]
            P[i] = [u + v for u, v in zip(P[i], P[i + 1])]
            bd = gcd_bezout(a, b)
            for row in A:
                row[i], row[i + 1] = (
                    bd.x * row[i] + bd.y * row[i + 1],
                    bd.a1 * row[i + 1] - bd.b1 * row[i],
                )
            for row in Q:
                row[i], row[i + 1] = (
                    bd.x * row[i] + bd.y * row[i + 1],
                    bd.a1 * row[i + 1] - bd.b1 * row[i],
                )
            q2 = divide_exact(A[i + 1][i], A[i][i])
            A[i + 1] = [v - q2 * u for u, v in zip(A[i], A[i + 1])]
            P[i + 1] = [v - q2 * u for u, v in zip(P[i], P[i + 1])]
            changed = True
        if not changed:
            return


def _normalize_diagonal(ring, A, P):
    for i in range(min(len(A), len(A[0]))):
        u, _ = canonical_associate(A[i][i])
        if u != ring.one:
            u_inv = unit_inverse(u)
            A[i] = [u_inv * v for v in A[i]]
            P[i] = [u_inv * v for v in P[i]]


def diagonal_reduce(A: RingMatrix) -> ReductionCertificate:
    """Full Smith-style reduction with certificate, any m x n shape."""
    ring = A.ring
    if isinstance(ring, ModularRing):
        return _reduce_modular(A)
    if isinstance(ring, ProductRing):
        return _reduce_product(A)
    if not isinstance(ring, (IntegerRing, PrimeFieldPolynomialRing)):
        raise UnsupportedRing(f"diagonal reduction is not supported over {ring}")
    work = A.to_lists()
    P = RingMatrix.identity(ring, A.rows).to_lists()
    Q = RingMatrix.identity(ring, A.cols).to_lists()
    _sweep(work, P, Q)
    _fix_divisibility_chain(work, P, Q)
    _normalize_diagonal(ring, work, P)
    return _make_certificate(ring, P, work, Q)


def _reduce_modular(A: RingMatrix) -> ReductionCertificate:
    # lift to Z, reduce there, project back; P and Q stay invertible because
    # their integer determinants are +-1, and integer divisibility descends
    ring = A.ring
    zz = IntegerRing()
    lifted = RingMatrix.from_payloads(zz, [[e.payload for e in row] for row in A.entries])
    cert = diagonal_reduce(lifted)

    def project(M):
        return [[ring.from_int(e.payload) for e in row] for row in M.entries]

    P, D, Q = project(cert.P), project(cert.D), project(cert.Q)
    _normalize_diagonal(ring, D, P)
    return _make_certificate(ring, P, D, Q)


def _reduce_product(A: RingMatrix) -> ReductionCertificate:
    ring = A.ring
    parts = []
    for idx, factor in enumerate(ring.factors):
        comp = RingMatrix(factor, [[e.payload[idx] for e in row] for row in A.entries])
        parts.append(diagonal_reduce(comp))

    def merge(mats, rows, cols):
        out = []
        for i in range(rows):
            row = []
            for j in range(cols):
                row.append(RingElement(ring, tuple(m.entries[i][j] for m in mats)))
            out.append(row)
        return out

    P = merge([c.P for c in parts], A.rows, A.rows)
    D = merge([c.D for c in parts], A.rows, A.cols)
    Q = merge([c.Q for c in parts], A.cols, A.cols)
    return _make_certificate(ring, P, D, Q)


# ---------------------------------------------------------------------------
# independent oracle and verifier


_ORACLE_DIM_BOUND = 6


def determinantal_divisors(A: RingMatrix) -> list[RingElement]:
    """(D_1, ..., D_r): D_k is the canonical gcd of all k x k minors.

    Only over Z and GF(p)[x] (elementary divisors are not determined this
    way in the presence of zero divisors). Computed directly from minors;
    shares nothing with diagonal_reduce.
    """
    ring = A.ring
    if not isinstance(ring, (IntegerRing, PrimeFieldPolynomialRing)):
        raise UnsupportedRing(f"determinantal divisors are not defined over {ring}")
    r = min(A.rows, A.cols)
    if r > _ORACLE_DIM_BOUND:
        raise ScaleExceeded(f"oracle limited to min dimension {_ORACLE_DIM_BOUND}")
    out = []
    for k in range(1, r + 1):
        if out and out[-1].is_zero():
            out.append(ring.zero)
            continue
        g = ring.zero
        for rows in itertools.combinations(range(A.rows), k):
            for cols in itertools.combinations(range(A.cols), k):
                sub = RingMatrix(ring, [[A.entries[i][j] for j in cols] for i in rows])
                g = gcd_bezout(g, sub.det()).g
        out.append(g)
    return out


def elementary_divisors_oracle(A: RingMatrix) -> list[RingElement]:
    """Successive quotients D_k / D_{k-1}, zero once D_k vanishes."""
    ring = A.ring
    divs = determinantal_divisors(A)
    out = []
    prev = ring.one
    for dk in divs:
        if dk.is_zero():
            out.append(ring.zero)
            prev = dk
        else:
            out.append(divide_exact(dk, prev))
            prev = dk
    return out


def verify_reduction(A: RingMatrix, cert: ReductionCertificate) -> CheckReport:
    """Re-derive every certificate clause from scratch; lists all violations."""
    failures = []
    ring = A.ring
    if (
        cert.P.ring != ring
        or cert.D.ring != ring
        or cert.Q.ring != ring
        or cert.P.rows != A.rows
        or cert.P.cols != A.rows
        or cert.Q.rows != A.cols
        or cert.Q.cols != A.cols
        or cert.D.rows != A.rows
        or cert.D.cols != A.cols
    ):
        return CheckReport.from_failures(["shapes consistent"])

    if cert.P * A * cert.Q != cert.D:
        failures.append("PAQ=D")

    detP = cert.P.det()
    detQ = cert.Q.det()
    if not is_unit(detP):
        failures.append("det(P) unit")
    if not is_unit(detQ):
        failures.append("det(Q) unit")
    if detP != cert.detP_unit:
        failures.append("detP recorded")
    if detQ != cert.detQ_unit:
        failures.append("detQ recorded")

    diag_ok = all(
        cert.D.entries[i][j].is_zero()
        for i in range(cert.D.rows)
        for j in range(cert.D.cols)
        if i != j
    )
    if not diag_ok:
        failures.append("D diagonal")

    r = min(cert.D.rows, cert.D.cols)
    for i in range(r - 1):
        try:
            divide_exact(cert.D.entries[i + 1][i + 1], cert.D.entries[i][i])
        except NotDivisible:
            failures.append("divisibility chain")
            break

    for i in range(r):
        d = cert.D.entries[i][i]
        if canonical_associate(d)[1] != d:
            failures.append("canonical associates")
            break

    return CheckReport.from_failures(failures)
