"""Exact arithmetic over a small family of computable commutative rings.

Supported rings: the integers Z; residue rings Z/n; univariate polynomials
over a prime field GF(p)[x]; truncated series with integer constant term and
rational higher coefficients (Z + xQ[x], cut at x^k); and finite direct
products of the above. Every value is immutable and every operation is a
pure function, so elements and descriptors are safely shareable.

A ring object doubles as the descriptor: two rings compare equal iff they
describe the same structure, and elements of distinct descriptors never mix.
All arithmetic is arbitrary precision (Python ints / fractions.Fraction);
nothing here rounds.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DescriptorMismatch,
    NotDivisible,
    UnsupportedRing,
)

__all__ = [
    "Ring",
    "IntegerRing",
    "ModularRing",
    "PrimeFieldPolynomialRing",
    "TruncatedSeriesRing",
    "ProductRing",
    "RingElement",
    "BezoutData",
    "ring_arith",
    "is_unit",
    "unit_inverse",
    "gcd_bezout",
    "divide_exact",
    "jacobson_member",
    "canonical_associate",
    "bezout_combination",
    "xgcd",
    "is_prime",
    "factorize",
    "radical",
    "crt",
]


# ---------------------------------------------------------------------------
# integer number theory helpers


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with x*a + y*b == g and g >= 0.

    xgcd(0, 0) == (0, 1, 0) so the cofactor identity x*1 + y*0 == 1 still
    holds in the degenerate case.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond desk scale (< 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk scale; n up to ~10^12)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def radical(n: int) -> int:
    r = 1
    for p in factorize(n):
        r *= p
    return r


def crt(residues, moduli) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; result in [0, prod)."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        g, inv, _ = xgcd(m, mi)
        if g != 1:
            raise ValueError("crt moduli must be pairwise coprime")
        x = (x + (r - x) * inv % mi * m) % (m * mi)
        m *= mi
    return x


# ---------------------------------------------------------------------------
# polynomial payload helpers (little-endian int tuples over GF(p))


def _ptrim(cs):
    i = len(cs)
    while i and cs[i - 1] == 0:
        i -= 1
    return tuple(cs[:i])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pneg(a, p):
    return tuple((-c) % p for c in a)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return _ptrim(q), _ptrim(a)


def _pmonic(a, p):
    """(unit, monic) with a == unit * monic; unit is a nonzero constant."""
    if not a:
        return (1,), ()
    lead = a[-1]
    if lead == 1:
        return (1,), a
    inv = pow(lead, -1, p)
    return (lead,), tuple(c * inv % p for c in a)


def _pxgcd(a, b, p):
    """Returns (g, x, y) with x*a + y*b == g, g monic (or zero)."""
    r0, r1 = a, b
    x0, x1 = (1,), ()
    y0, y1 = (), (1,)
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        x0, x1 = x1, _padd(x0, _pneg(_pmul(q, x1, p), p), p)
        y0, y1 = y1, _padd(y0, _pneg(_pmul(q, y1, p), p), p)
    if r0:
        (u,), g = _pmonic(r0, p)
        if u != 1:
            inv = (pow(u, -1, p),)
            x0, y0 = _pmul(inv, x0, p), _pmul(inv, y0, p)
        return g, x0, y0
    return (), x0, y0


# ---------------------------------------------------------------------------
# elements


class RingElement:
    """An immutable value tagged by its ring descriptor.

    Payloads are canonical: residues reduced into [0, n); polynomials carry
    no trailing zero coefficients; truncated series store an int constant
    term followed by exact Fractions; product elements are tuples of
    component elements.
    """

    __slots__ = ("ring", "payload")

    def __init__(self, ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *_):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise DescriptorMismatch(
                    f"cannot mix elements of {self.ring} and {other.ring}"
                )
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring._add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring._add(self, self.ring._neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring._add(other, self.ring._neg(self))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring._mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring._neg(self)

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((self.ring, self.payload))

    def is_zero(self) -> bool:
        return self.payload == self.ring.zero.payload

    def __repr__(self):
        return f"<{self.ring}: {self.ring.element_str(self)}>"


@dataclass(frozen=True)
class BezoutData:
    """Witness for a Hermite-style gcd: x*a + y*b = g, a = a1*g, b = b1*g,
    and the cofactors are unimodular: x*a1 + y*b1 = 1."""

    g: RingElement
    x: RingElement
    y: RingElement
    a1: RingElement
    b1: RingElement

    def holds_for(self, a: RingElement, b: RingElement) -> bool:
        one = a.ring.one
        return (
            self.x * a + self.y * b == self.g
            and self.a1 * self.g == a
            and self.b1 * self.g == b
            and self.x * self.a1 + self.y * self.b1 == one
        )


# ---------------------------------------------------------------------------
# ring descriptors


class Ring:
    """Common interface of the ring descriptors."""

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Ring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # --- construction -----------------------------------------------------

    def element(self, payload) -> RingElement:
        raise NotImplementedError

    def from_int(self, k: int) -> RingElement:
        """Canonical image of the integer k (k times the identity)."""
        raise NotImplementedError

    @property
    def zero(self) -> RingElement:
        return self.from_int(0)

    @property
    def one(self) -> RingElement:
        return self.from_int(1)

    # --- arithmetic (payload level, wrapped by RingElement operators) -----

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    # --- structure --------------------------------------------------------

    def inverse(self, a: RingElement):
        """Multiplicative inverse, or None when a is not a unit."""
        raise NotImplementedError

    def gcd_bezout(self, a: RingElement, b: RingElement) -> BezoutData:
        raise UnsupportedRing(f"{self} does not support Bezout gcds")

    def divide_exact(self, a: RingElement, b: RingElement) -> RingElement:
        raise NotImplementedError

    def jacobson_member(self, a: RingElement) -> bool:
        raise NotImplementedError

    def canonical_associate(self, a: RingElement):
        raise NotImplementedError

    def cardinality(self):
        """Number of elements, or None when infinite."""
        return None

    def iter_elements(self):
        raise UnsupportedRing(f"{self} is not enumerable")

    def element_str(self, a: RingElement) -> str:
        raise NotImplementedError

    def __repr__(self):
        return str(self)


class IntegerRing(Ring):
    """The ring of rational integers."""

    def _key(self):
        return ("Z",)

    def __str__(self):
        return "Z"

    def element(self, payload):
        if not isinstance(payload, int) or isinstance(payload, bool):
            raise TypeError("integer payload expected")
        return RingElement(self, payload)

    def from_int(self, k):
        return RingElement(self, k)

    def _add(self, a, b):
        return RingElement(self, a.payload + b.payload)

    def _neg(self, a):
        return RingElement(self, -a.payload)

    def _mul(self, a, b):
        return RingElement(self, a.payload * b.payload)

    def inverse(self, a):
        if a.payload in (1, -1):
            return a
        return None

    def gcd_bezout(self, a, b):
        g, x, y = xgcd(a.payload, b.payload)
        if g == 0:
            a1, b1 = 1, 0
        else:
            a1, b1 = a.payload // g, b.payload // g
        mk = self.from_int
        return BezoutData(mk(g), mk(x), mk(y), mk(a1), mk(b1))

    def divide_exact(self, a, b):
        if b.payload == 0:
            if a.payload == 0:
                return self.zero
            raise NotDivisible(f"{b.payload} does not divide {a.payload} in Z")
        q, r = divmod(a.payload, b.payload)
        if r:
            raise NotDivisible(f"{b.payload} does not divide {a.payload} in Z")
        return self.from_int(q)

    def jacobson_member(self, a):
        return a.payload == 0

    def canonical_associate(self, a):
        if a.payload < 0:
            return self.from_int(-1), self.from_int(-a.payload)
        return self.one, a

    def element_str(self, a):
        return str(a.payload)


class ModularRing(Ring):
    """Residues modulo n (n >= 2). Canonical representatives live in [0, n).

    Z/n is a principal ideal ring; the gcd of (a, b) is canonically the
    residue of gcd(lift a, lift b, n), and the Bezout cofactors are repaired
    with multiples of n/g so that they stay unimodular.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError("modulus must be an integer >= 2")
        self.n = n
        self._factors = None
        self._radical = None

    def _key(self):
        return ("Zmod", self.n)

    def __str__(self):
        return f"Z/{self.n}"

    def factors(self) -> dict[int, int]:
        if self._factors is None:
            self._factors = factorize(self.n)
        return self._factors

    def rad(self) -> int:
        if self._radical is None:
            self._radical = math.prod(self.factors())
        return self._radical

    def element(self, payload):
        if not isinstance(payload, int) or isinstance(payload, bool):
            raise TypeError("integer payload expected")
        return RingElement(self, payload % self.n)

    def from_int(self, k):
        return RingElement(self, k % self.n)

    def _add(self, a, b):
        return RingElement(self, (a.payload + b.payload) % self.n)

    def _neg(self, a):
        return RingElement(self, (-a.payload) % self.n)

    def _mul(self, a, b):
        return RingElement(self, (a.payload * b.payload) % self.n)

    def inverse(self, a):
        if math.gcd(a.payload, self.n) != 1:
            return None
        return RingElement(self, pow(a.payload, -1, self.n))

    def gcd_bezout(self, a, b):
        n = self.n
        g0 = math.gcd(a.payload, math.gcd(b.payload, n))
        if g0 == n:  # both residues are zero
            mk = self.from_int
            return BezoutData(mk(0), mk(1), mk(0), mk(1), mk(0))
        ap, bp = a.payload // g0, b.payload // g0
        np_ = n // g0
        # shift ap by multiples of n/g0 so that (ap, bp) is unimodular mod n
        res, mods = [], []
        for p in self.factors():
            if ap % p != 0:
                s = 0
            elif np_ % p != 0:
                s = (1 - ap) * pow(np_, -1, p) % p  # force ap + s*np_ = 1 (mod p)
            else:
                s = 0  # p divides ap and n/g0, hence p cannot divide bp
            res.append(s)
            mods.append(p)
        s = crt(res, mods) if mods else 0
        a1 = (ap + s * np_) % n
        b1 = bp % n
        g1, u, v = xgcd(a1, b1)
        gg, w, _ = xgcd(g1, n)
        assert gg == 1, "cofactor repair failed"
        x = w * u % n
        y = w * v % n
        mk = self.from_int
        return BezoutData(mk(g0), mk(x), mk(y), mk(a1), mk(b1))

    def divide_exact(self, a, b):
        g = math.gcd(b.payload, self.n)
        if a.payload % g:
            raise NotDivisible(f"{b.payload} does not divide {a.payload} in Z/{self.n}")
        m = self.n // g
        if m == 1:
            return self.zero  # every residue works; 0 is the smallest
        q = (a.payload // g) * pow(b.payload // g, -1, m) % m
        return self.from_int(q)

    def jacobson_member(self, a):
        return a.payload % self.rad() == 0

    def canonical_associate(self, a):
        if a.payload == 0:
            return self.one, a
        g = math.gcd(a.payload, self.n)
        ap = a.payload // g
        npg = self.n // g
        res, mods = [], []
        for p, e in self.factors().items():
            pe = p**e
            if npg % p == 0:
                res.append(ap % pe)  # ap is coprime to n/g, hence a unit mod p
            else:
                res.append(1)
            mods.append(pe)
        u = crt(res, mods)
        return self.from_int(u), self.from_int(g)

    def cardinality(self):
        return self.n

    def iter_elements(self):
        for v in range(self.n):
            yield RingElement(self, v)

    def element_str(self, a):
        return str(a.payload)


class PrimeFieldPolynomialRing(Ring):
    """Univariate polynomials over GF(p), p prime.

    Payload: little-endian tuple of coefficients in [0, p), no trailing
    zeros; the zero polynomial is the empty tuple.
    """

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def _key(self):
        return ("GFpX", self.p)

    def __str__(self):
        return f"GF({self.p})[x]"

    def element(self, payload):
        cs = tuple(int(c) % self.p for c in payload)
        return RingElement(self, _ptrim(cs))

    def from_int(self, k):
        k %= self.p
        return RingElement(self, (k,) if k else ())

    def _add(self, a, b):
        return RingElement(self, _padd(a.payload, b.payload, self.p))

    def _neg(self, a):
        return RingElement(self, _pneg(a.payload, self.p))

    def _mul(self, a, b):
        return RingElement(self, _pmul(a.payload, b.payload, self.p))

    def inverse(self, a):
        if len(a.payload) != 1:
            return None
        return self.from_int(pow(a.payload[0], -1, self.p))

    def gcd_bezout(self, a, b):
        p = self.p
        g, x, y = _pxgcd(a.payload, b.payload, p)
        if not g:
            return BezoutData(self.zero, self.one, self.zero, self.one, self.zero)
        a1, _ = _pdivmod(a.payload, g, p)
        b1, _ = _pdivmod(b.payload, g, p)
        mk = lambda cs: RingElement(self, cs)
        return BezoutData(mk(g), mk(x), mk(y), mk(a1), mk(b1))

    def divide_exact(self, a, b):
        if not b.payload:
            if not a.payload:
                return self.zero
            raise NotDivisible("zero polynomial divides only zero")
        q, r = _pdivmod(a.payload, b.payload, self.p)
        if r:
            raise NotDivisible("inexact polynomial division")
        return RingElement(self, q)

    def jacobson_member(self, a):
        return not a.payload

    def canonical_associate(self, a):
        if not a.payload:
            return self.one, a
        u, monic = _pmonic(a.payload, self.p)
        return RingElement(self, u), RingElement(self, monic)

    def element_str(self, a):
        return "[" + ",".join(str(c) for c in a.payload) + "]"

    def degree(self, a) -> int:
        return len(a.payload) - 1  # zero polynomial gets -1


class TruncatedSeriesRing(Ring):
    """Series z0 + c1*x + ... + c_{k-1}*x^{k-1} with z0 an integer and the
    higher coefficients exact rationals, multiplied modulo x^k.

    Supports arithmetic, unit inversion and radical membership only; there
    is no Bezout structure here (the ring exists to host the coefficient
    recurrence splitting of series).
    """

    def __init__(self, order: int):
        if not isinstance(order, int) or order < 1:
            raise ValueError("truncation order must be >= 1")
        self.order = order

    def _key(self):
        return ("Zser", self.order)

    def __str__(self):
        return f"Zser{self.order}"

    def element(self, payload):
        cs = list(payload)
        if len(cs) > self.order:
            raise ValueError(f"at most {self.order} coefficients allowed")
        if any(isinstance(c, float) for c in cs):
            raise TypeError("coefficients must be exact (int or Fraction)")
        cs += [0] * (self.order - len(cs))
        z0 = cs[0]
        if isinstance(z0, Fraction):
            if z0.denominator != 1:
                raise ValueError("constant term must be an integer")
            z0 = int(z0)
        if not isinstance(z0, int):
            raise TypeError("constant term must be an integer")
        return RingElement(self, (z0, *(Fraction(c) for c in cs[1:])))

    def from_int(self, k):
        return RingElement(self, (k, *(Fraction(0) for _ in range(self.order - 1))))

    def _add(self, a, b):
        z = a.payload[0] + b.payload[0]
        rest = tuple(x + y for x, y in zip(a.payload[1:], b.payload[1:]))
        return RingElement(self, (z, *rest))

    def _neg(self, a):
        return RingElement(self, (-a.payload[0], *(-c for c in a.payload[1:])))

    def _mul(self, a, b):
        k = self.order
        out = [Fraction(0)] * k
        for i, ai in enumerate(a.payload):
            if ai:
                for j in range(k - i):
                    bj = b.payload[j]
                    if bj:
                        out[i + j] += Fraction(ai) * bj
        return RingElement(self, (int(out[0]), *out[1:]))

    def inverse(self, a):
        z0 = a.payload[0]
        if z0 not in (1, -1):
            return None
        k = self.order
        inv = [Fraction(0)] * k
        inv[0] = Fraction(z0)
        for i in range(1, k):
            acc = Fraction(0)
            for j in range(1, i + 1):
                acc += Fraction(a.payload[j]) * inv[i - j]
            inv[i] = -acc / z0
        return RingElement(self, (z0, *inv[1:]))

    def divide_exact(self, a, b):
        k = self.order
        bv = next((i for i, c in enumerate(b.payload) if c), None)
        if bv is None:
            if a.is_zero():
                return self.zero
            raise NotDivisible("zero series divides only zero")
        if any(a.payload[i] for i in range(min(bv, k))):
            raise NotDivisible("valuation of divisor exceeds dividend")
        lead = Fraction(b.payload[bv])
        q = [Fraction(0)] * k
        for i in range(k - bv):
            acc = Fraction(a.payload[i + bv])
            for j in range(1, i + 1):
                acc -= Fraction(b.payload[bv + j]) * q[i - j]
            q[i] = acc / lead
        if q[0].denominator != 1:
            raise NotDivisible("quotient constant term is not an integer")
        cand = RingElement(self, (int(q[0]), *q[1:]))
        if b * cand != a:
            raise NotDivisible("no exact series quotient")
        return cand

    def jacobson_member(self, a):
        return a.payload[0] == 0

    def canonical_associate(self, a):
        lead = next((c for c in a.payload if c), None)
        if lead is None or lead > 0:
            return self.one, a
        return self.from_int(-1), -a

    def element_str(self, a):
        if self.order == 1:
            return "{%d;}" % a.payload[0]
        return "{%d;%s}" % (a.payload[0], ",".join(str(c) for c in a.payload[1:]))


class ProductRing(Ring):
    """A finite direct product; every operation acts componentwise."""

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) < 2:
            raise ValueError("a product ring needs at least two factors")
        if not all(isinstance(f, Ring) for f in factors):
            raise TypeError("factors must be ring descriptors")
        self.factors = factors

    def _key(self):
        return ("prod", tuple(f._key() for f in self.factors))

    def __str__(self):
        return "prod(" + ",".join(str(f) for f in self.factors) + ")"

    def element(self, payload):
        comps = tuple(payload)
        if len(comps) != len(self.factors):
            raise ValueError("component count mismatch")
        out = []
        for f, c in zip(self.factors, comps):
            if isinstance(c, RingElement):
                if c.ring != f:
                    raise DescriptorMismatch("component belongs to a different ring")
                out.append(c)
            else:
                out.append(f.element(c) if not isinstance(c, int) else f.from_int(c))
        return RingElement(self, tuple(out))

    def from_int(self, k):
        return RingElement(self, tuple(f.from_int(k) for f in self.factors))

    def _add(self, a, b):
        return RingElement(self, tuple(x + y for x, y in zip(a.payload, b.payload)))

    def _neg(self, a):
        return RingElement(self, tuple(-x for x in a.payload))

    def _mul(self, a, b):
        return RingElement(self, tuple(x * y for x, y in zip(a.payload, b.payload)))

    def inverse(self, a):
        invs = []
        for comp in a.payload:
            i = comp.ring.inverse(comp)
            if i is None:
                return None
            invs.append(i)
        return RingElement(self, tuple(invs))

    def gcd_bezout(self, a, b):
        datas = [f.gcd_bezout(x, y) for f, x, y in zip(self.factors, a.payload, b.payload)]
        pack = lambda attr: RingElement(self, tuple(getattr(d, attr) for d in datas))
        return BezoutData(pack("g"), pack("x"), pack("y"), pack("a1"), pack("b1"))

    def divide_exact(self, a, b):
        return RingElement(
            self,
            tuple(f.divide_exact(x, y) for f, x, y in zip(self.factors, a.payload, b.payload)),
        )

    def jacobson_member(self, a):
        return all(f.jacobson_member(c) for f, c in zip(self.factors, a.payload))

    def canonical_associate(self, a):
        pairs = [f.canonical_associate(c) for f, c in zip(self.factors, a.payload)]
        u = RingElement(self, tuple(p[0] for p in pairs))
        norm = RingElement(self, tuple(p[1] for p in pairs))
        return u, norm

    def cardinality(self):
        total = 1
        for f in self.factors:
            c = f.cardinality()
            if c is None:
                return None
            total *= c
        return total

    def iter_elements(self):
        for combo in itertools.product(*(f.iter_elements() for f in self.factors)):
            yield RingElement(self, combo)

    def element_str(self, a):
        return "(" + ",".join(f.element_str(c) for f, c in zip(self.factors, a.payload)) + ")"


# ---------------------------------------------------------------------------
# operation surface


def _same_ring(*els):
    ring = els[0].ring
    for e in els[1:]:
        if e.ring != ring:
            raise DescriptorMismatch(f"operands mix {ring} and {e.ring}")
    return ring


def ring_arith(op: str, x: RingElement, y: RingElement | None = None) -> RingElement:
    """Dispatch basic arithmetic by name: add, sub, mul take two operands,
    neg takes one."""
    if op == "neg":
        if y is not None:
            raise ValueError("neg is unary")
        return -x
    if y is None:
        raise ValueError(f"{op} needs two operands")
    _same_ring(x, y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def unit_inverse(x: RingElement) -> RingElement | None:
    """The exact inverse of x when x is a unit, else None."""
    return x.ring.inverse(x)


def is_unit(x: RingElement) -> bool:
    return x.ring.inverse(x) is not None


def gcd_bezout(a: RingElement, b: RingElement) -> BezoutData:
    """Canonical gcd with full Bezout witness data (see BezoutData)."""
    return _same_ring(a, b).gcd_bezout(a, b)


def divide_exact(a: RingElement, b: RingElement) -> RingElement:
    """The exact quotient q with b*q = a; raises NotDivisible otherwise.
    Over Z/n the smallest nonnegative solution is returned."""
    return _same_ring(a, b).divide_exact(a, b)


def jacobson_member(a: RingElement) -> bool:
    """Whether a lies in the Jacobson radical (equivalently, 1 + a*t is a
    unit for every t)."""
    return a.ring.jacobson_member(a)


def canonical_associate(a: RingElement) -> tuple[RingElement, RingElement]:
    """(u, a_norm) with a = u * a_norm, u a unit and a_norm the canonical
    representative of the associate class."""
    return a.ring.canonical_associate(a)


def bezout_combination(elements) -> tuple[RingElement, list[RingElement]]:
    """Fold gcd_bezout over a nonempty list: returns (g, coeffs) with
    sum(coeffs[i] * elements[i]) == g and (g) the ideal the list generates."""
    elements = list(elements)
    if not elements:
        raise ValueError("need at least one element")
    g = elements[0]
    coeffs = [g.ring.one]
    for e in elements[1:]:
        bd = gcd_bezout(g, e)
        coeffs = [bd.x * c for c in coeffs]
        coeffs.append(bd.y)
        g = bd.g
    return g, coeffs
