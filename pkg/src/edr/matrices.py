"""Dense matrices over a ring, with exact multiplication and determinants."""

from __future__ import annotations

from .errors import DescriptorMismatch
from .rings import Ring, RingElement

__all__ = ["RingMatrix"]


class RingMatrix:
    """An immutable m x n matrix of ring elements sharing one descriptor."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrices must have at least one row and column")
        cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for e in row:
                if not isinstance(e, RingElement) or e.ring != ring:
                    raise DescriptorMismatch("entry from a different ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *_):
        raise AttributeError("RingMatrix is immutable")

    @classmethod
    def from_payloads(cls, ring: Ring, payload_rows) -> "RingMatrix":
        """Build from raw payloads (ints for Z and Z/n, coefficient lists for
        polynomials, tuples for products)."""
        conv = []
        for row in payload_rows:
            out = []
            for v in row:
                if isinstance(v, RingElement):
                    out.append(v)
                elif isinstance(v, int):
                    out.append(ring.from_int(v))
                else:
                    out.append(ring.element(v))
            conv.append(out)
        return cls(ring, conv)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> RingElement:
        return self.entries[i][j]

    def to_lists(self):
        return [list(row) for row in self.entries]

    def __eq__(self, other):
        return (
            isinstance(other, RingMatrix)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.ring != other.ring:
            raise DescriptorMismatch("matrix rings differ")
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return RingMatrix(self.ring, out)

    def det(self) -> RingElement:
        """Exact determinant by cofactor expansion, memoized on column sets.

        Valid over any commutative ring (no divisions); cost O(2^n * n).
        """
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        ring = self.ring
        memo: dict[int, RingElement] = {0: ring.one}

        def rec(mask: int) -> RingElement:
            cached = memo.get(mask)
            if cached is not None:
                return cached
            i = n - bin(mask).count("1")  # row index to expand along
            acc = ring.zero
            sign = 1
            m = mask
            while m:
                low = m & -m
                j = low.bit_length() - 1
                a = self.entries[i][j]
                if not a.is_zero():
                    sub = rec(mask ^ low)
                    term = a * sub
                    acc = acc + term if sign > 0 else acc - term
                sign = -sign
                m ^= low
            memo[mask] = acc
            return acc

        return rec((1 << n) - 1)

    def __repr__(self):
        body = "; ".join(
            " ".join(self.ring.element_str(e) for e in row) for row in self.entries
        )
        return f"<{self.ring} {self.rows}x{self.cols}: {body}>"
