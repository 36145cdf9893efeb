"""Dense linear algebra over the two-element field on bit-packed integers.

Vectors and matrix rows are stored as Python ints, bit i holding
coordinate i.  The text form of a vector puts coordinate 0 leftmost,
so ``BitVector.parse("110")`` has coordinates (1, 1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError

DEFAULT_ENUMERATION_CAP = 1 << 20


class BitVector:
    """Immutable length-n vector over GF(2)."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if n < 0:
            raise InputError(f"vector length must be >= 0, got {n}")
        if mask < 0 or mask >> n:
            raise InputError(f"bit mask {mask:#x} does not fit in {n} coordinates")
        self.n = n
        self.mask = mask

    @classmethod
    def parse(cls, text: str) -> "BitVector":
        """Parse the bitstring form: coordinate 0 is the leftmost character."""
        mask = 0
        for i, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << i
            elif ch != "0":
                raise InputError(f"bitstring may only contain 0/1, got {ch!r} at position {i}")
        return cls(len(text), mask)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        mask = 0
        n = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise InputError(f"coordinate {i} must be 0 or 1, got {b!r}")
            mask |= b << i
            n = i + 1
        return cls(n, mask)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        mask = 0
        for v in support:
            if not 0 <= v < n:
                raise InputError(f"coordinate {v} out of range for length {n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.mask >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.mask >> i) & 1 for i in range(self.n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise InputError(f"length mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self.mask ^ other.mask)

    def __and__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise InputError(f"length mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self.mask & other.mask)

    def dot(self, other: "BitVector") -> int:
        if self.n != other.n:
            raise InputError(f"length mismatch: {self.n} vs {other.n}")
        return (self.mask & other.mask).bit_count() & 1

    def complement(self) -> "BitVector":
        return BitVector(self.n, self.mask ^ ((1 << self.n) - 1))

    def weight(self) -> int:
        return self.mask.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(self.n) if (self.mask >> i) & 1]

    def to01(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.n))

    def __str__(self) -> str:
        return self.to01()

    def __repr__(self) -> str:
        return f"BitVector({self.to01()!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVector) and self.n == other.n and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))


class BitMatrix:
    """Immutable rows x cols matrix over GF(2), rows packed as ints."""

    __slots__ = ("rows", "cols", "row_masks")

    def __init__(self, rows: int, cols: int, row_masks: Sequence[int]):
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be >= 0")
        if len(row_masks) != rows:
            raise InputError(f"expected {rows} rows, got {len(row_masks)}")
        full = (1 << cols) - 1
        for i, m in enumerate(row_masks):
            if m < 0 or m & ~full:
                raise InputError(f"row {i} does not fit in {cols} columns")
        self.rows = rows
        self.cols = cols
        self.row_masks = tuple(row_masks)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | BitVector]) -> "BitMatrix":
        vecs = [r if isinstance(r, BitVector) else BitVector.from_bits(r) for r in rows]
        if not vecs:
            return cls(0, 0, [])
        cols = vecs[0].n
        if any(v.n != cols for v in vecs):
            raise InputError("all rows must have the same length")
        return cls(len(vecs), cols, [v.mask for v in vecs])

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.row_masks[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_masks[i])

    def mul_vector(self, v: BitVector) -> BitVector:
        if v.n != self.cols:
            raise InputError(f"dimension mismatch: matrix has {self.cols} columns, vector length {v.n}")
        out = 0
        for i, m in enumerate(self.row_masks):
            out |= ((m & v.mask).bit_count() & 1) << i
        return BitVector(self.rows, out)

    def add(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shape mismatch")
        return BitMatrix(self.rows, self.cols, [a ^ b for a, b in zip(self.row_masks, other.row_masks)])

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            m = 0
            for i in range(self.rows):
                m |= ((self.row_masks[i] >> j) & 1) << i
            cols.append(m)
        return BitMatrix(self.cols, self.rows, cols)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.row_masks == self.transpose().row_masks

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.row_masks == other.row_masks
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.row_masks))

    def __repr__(self) -> str:
        body = ", ".join(BitVector(self.cols, m).to01() for m in self.row_masks)
        return f"BitMatrix[{body}]"


@dataclass(frozen=True)
class AffineSolutionSet:
    """A particular solution plus a kernel basis: the coset of all solutions."""

    particular: BitVector
    kernel_basis: tuple[BitVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.kernel_basis)

    @property
    def count(self) -> int:
        return 1 << len(self.kernel_basis)


def _reduce(row_masks: Sequence[int], n_cols: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Full row reduction; pivots searched left to right in the first n_cols
    columns, pivot row being the first unused row with a 1 there.  Rows may
    carry augmentation bits above n_cols; those are carried along but never
    become pivots.  Returns reduced rows and (column, row) pivot pairs."""
    work = list(row_masks)
    used = [False] * len(work)
    pivots: list[tuple[int, int]] = []
    for col in range(n_cols):
        bit = 1 << col
        pivot_row = None
        for r in range(len(work)):
            if not used[r] and work[r] & bit:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        used[pivot_row] = True
        pivots.append((col, pivot_row))
        piv = work[pivot_row]
        for r in range(len(work)):
            if r != pivot_row and work[r] & bit:
                work[r] ^= piv
    return work, pivots


def rank(m: BitMatrix) -> int:
    """GF(2) row rank."""
    _, pivots = _reduce(m.row_masks, m.cols)
    return len(pivots)


def _kernel_from_reduction(work: list[int], pivots: list[tuple[int, int]], n_cols: int) -> list[BitVector]:
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for free in range(n_cols):
        if free in pivot_cols:
            continue
        vec = 1 << free
        for col, row in pivots:
            if (work[row] >> free) & 1:
                vec |= 1 << col
        basis.append(BitVector(n_cols, vec))
    return basis


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Linearly independent spanning set of {x : Mx = 0}, one vector per
    free column, ordered by free column index."""
    work, pivots = _reduce(m.row_masks, m.cols)
    return _kernel_from_reduction(work, pivots, m.cols)


def solve_linear(m: BitMatrix, b: BitVector) -> AffineSolutionSet | None:
    """Solve Mx = b.  None when inconsistent; otherwise the particular
    solution with all free variables 0, plus the kernel basis."""
    if b.n != m.rows:
        raise InputError(f"dimension mismatch: matrix has {m.rows} rows, vector length {b.n}")
    aug_bit = 1 << m.cols
    rows = [mask | (aug_bit if (b.mask >> i) & 1 else 0) for i, mask in enumerate(m.row_masks)]
    work, pivots = _reduce(rows, m.cols)
    low = aug_bit - 1
    pivot_rows = {r for _, r in pivots}
    for r, w in enumerate(work):
        if r not in pivot_rows and w & aug_bit and not w & low:
            return None
    particular = 0
    for col, row in pivots:
        if work[row] & aug_bit:
            particular |= 1 << col
    basis = _kernel_from_reduction(work, pivots, m.cols)
    return AffineSolutionSet(BitVector(m.cols, particular), tuple(basis))


def enumerate_solutions(
    solutions: AffineSolutionSet, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[BitVector]:
    """All coset members, in index order over basis combinations: member k
    is the particular solution xored with basis[j] for every set bit j of k."""
    k = solutions.dimension
    if (1 << k) > cap:
        raise CapacityError(f"coset has 2^{k} members, exceeding the cap of {cap}")
    n = solutions.particular.n
    base = solutions.particular.mask
    basis_masks = [v.mask for v in solutions.kernel_basis]
    out = []
    for idx in range(1 << k):
        m = base
        rem = idx
        j = 0
        while rem:
            if rem & 1:
                m ^= basis_masks[j]
            rem >>= 1
            j += 1
        out.append(BitVector(n, m))
    return out


def parity(v: BitVector) -> int:
    """Coordinate sum mod 2 (the parity value of a vector)."""
    return v.mask.bit_count() & 1
