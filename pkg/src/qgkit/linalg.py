"""Exact dense linear algebra over prime fields and the rationals.

Matrices are numpy arrays.  Over F_p they hold int64 residues in [0, p);
over Q they are object arrays of :class:`fractions.Fraction`.  Pivoting is
always on the first nonzero entry of a column so that every result is
reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class NoSolution(ValueError):
    """The linear system is consistent in shape but has no solution."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field F_p for a prime p < 2**31."""

    is_prime_field = True

    def __init__(self, p: int):
        if not (_is_prime(p) and p < 2**31):
            raise ValueError(f"{p} is not a prime below 2**31")
        self.p = p
        self.characteristic = p
        self.dtype = np.int64

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    # scalars
    def elt(self, x) -> int:
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, a) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def signed(self, a) -> int:
        """Representative in (-p/2, p/2], for display."""
        a = int(a) % self.p
        return a - self.p if a > self.p // 2 else a

    # arrays
    def array(self, rows) -> np.ndarray:
        a = np.array(rows, dtype=object)
        if a.size == 0:
            return np.zeros(a.shape, dtype=np.int64)
        a = np.vectorize(self.elt, otypes=[object])(a)
        return a.astype(np.int64)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return np.mod(a, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        inner = a.shape[-1] if a.ndim else 1
        if (self.p - 1) ** 2 * max(inner, 1) < 2**62:
            return np.mod(a @ b, self.p)
        out = a.astype(object) @ b.astype(object)
        return np.mod(out, self.p).astype(np.int64)

    def _axpy_rows(self, rows: np.ndarray, coeffs: np.ndarray, pivot_row: np.ndarray) -> np.ndarray:
        # rows - coeffs[:, None] * pivot_row, entrywise products < 2**62
        return np.mod(rows - np.multiply.outer(coeffs, pivot_row) % self.p, self.p)


class RationalField:
    """The field Q with exact Fraction arithmetic."""

    is_prime_field = False
    characteristic = 0
    dtype = object

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def elt(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, a) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def signed(self, a) -> Fraction:
        return Fraction(a)

    def array(self, rows) -> np.ndarray:
        a = np.array(rows, dtype=object)
        if a.size == 0:
            return np.zeros(a.shape, dtype=object)
        return np.vectorize(Fraction, otypes=[object])(a)

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[-1] == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        return a @ b

    def _axpy_rows(self, rows, coeffs, pivot_row):
        return rows - np.multiply.outer(coeffs, pivot_row)


GF101 = PrimeField(101)
QQ = RationalField()

Field = "PrimeField | RationalField"


def rref(m: np.ndarray, F=GF101) -> tuple[np.ndarray, list[int], int]:
    """Reduced row-echelon form, pivot columns and rank."""
    a = np.array(m, dtype=F.dtype, copy=True)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = F.inv(a[r, c])
        a[r, c:] = F.reduce(a[r, c:] * inv)
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col != 0)
        if others.size:
            # columns left of c are already zero in the pivot row
            a[others, c:] = F._axpy_rows(a[others, c:], col[others], a[r, c:])
        pivots.append(c)
        r += 1
    return a, pivots, r


def rank(m: np.ndarray, F=GF101) -> int:
    if m.size == 0:
        return 0
    return rref(m, F)[2]


def kernel_basis(m: np.ndarray, F=GF101) -> np.ndarray:
    """Basis of the right kernel, one vector per row (shape ``(k, cols)``).

    The basis is the standard one read off the rref: one vector per free
    column, with a 1 in that column.
    """
    rows, cols = m.shape
    if rows == 0:
        return F.eye(cols)
    red, pivots, r = rref(m, F)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = F.zeros((len(free), cols))
    if not free:
        return out
    out[np.arange(len(free)), free] = 1
    if pivots:
        block = -red[:r][:, free].T
        out[:, pivots] = F.reduce(block) if F.is_prime_field else block
    return out


def solve(m: np.ndarray, b: Sequence, F=GF101) -> np.ndarray:
    """Return one x with m @ x == b; raise :class:`NoSolution` otherwise."""
    rows, cols = m.shape
    b = np.array(b, dtype=F.dtype).reshape(-1)
    if b.shape[0] != rows:
        raise ValueError(f"right-hand side has length {b.shape[0]}, expected {rows}")
    aug = np.concatenate([np.array(m, dtype=F.dtype), b.reshape(-1, 1)], axis=1)
    red, pivots, r = rref(aug, F)
    if pivots and pivots[-1] == cols:
        raise NoSolution("system is inconsistent")
    x = F.zeros(cols)
    for j, pc in enumerate(pivots):
        x[pc] = red[j, cols]
    return x


def matmul(a: np.ndarray, b: np.ndarray, F=GF101) -> np.ndarray:
    return F.matmul(a, b)


class Subspace:
    """A subspace of F^n stored by its canonical rref basis (rows).

    Two subspaces are equal exactly when their bases are equal, and the
    coordinates of a member vector are its entries at the pivot columns.
    """

    __slots__ = ("F", "n", "basis", "pivots")

    def __init__(self, vectors, n: int, F=GF101):
        self.F = F
        self.n = n
        vecs = np.array(vectors, dtype=F.dtype).reshape(-1, n) if len(vectors) else F.zeros((0, n))
        if vecs.shape[0]:
            red, piv, r = rref(vecs, F)
            self.basis = red[:r]
            self.pivots = piv
        else:
            self.basis = vecs
            self.pivots = []

    @classmethod
    def _raw(cls, basis, pivots, n, F):
        s = cls.__new__(cls)
        s.F, s.n, s.basis, s.pivots = F, n, basis, list(pivots)
        return s

    @classmethod
    def full(cls, n: int, F=GF101) -> "Subspace":
        return cls._raw(F.eye(n), range(n), n, F)

    @classmethod
    def zero(cls, n: int, F=GF101) -> "Subspace":
        return cls._raw(F.zeros((0, n)), [], n, F)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.n})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.pivots == other.pivots and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((self.n, tuple(self.pivots), self.basis.tobytes() if self.F.is_prime_field else str(self.basis)))

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Canonical remainder of v (or of each row of v) modulo the subspace."""
        v = np.array(v, dtype=self.F.dtype)
        if not self.pivots:
            return v
        coeffs = v[..., self.pivots]
        return self.F.reduce(v - self.F.matmul(coeffs, self.basis))

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v) != 0)

    def contains_space(self, other: "Subspace") -> bool:
        return other.dim == 0 or not np.any(self.reduce(other.basis) != 0)

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of member vectors in the rref basis."""
        return np.array(v, dtype=self.F.dtype)[..., self.pivots]

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace(np.concatenate([self.basis, other.basis]), self.n, self.F)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.n, self.F)
        # a @ B1 = b @ B2  <=>  (a, -b) in ker [B1; B2]^T
        stacked = np.concatenate([self.basis, self.F.reduce(-other.basis) if self.F.is_prime_field else -other.basis])
        ker = kernel_basis(stacked.T.copy(), self.F)
        if ker.shape[0] == 0:
            return Subspace.zero(self.n, self.F)
        vecs = self.F.matmul(ker[:, : self.dim], self.basis)
        return Subspace(vecs, self.n, self.F)

    def complement_coords(self) -> list[int]:
        """Non-pivot columns; they index a basis of the quotient F^n / self."""
        piv = set(self.pivots)
        return [c for c in range(self.n) if c not in piv]


def span(vectors: Iterable, n: int, F=GF101) -> Subspace:
    vs = list(vectors)
    if not vs:
        return Subspace.zero(n, F)
    return Subspace(np.array(vs, dtype=F.dtype).reshape(-1, n), n, F)


def image(m: np.ndarray, F=GF101) -> Subspace:
    """Column space of m."""
    return Subspace(m.T.copy(), m.shape[0], F) if m.shape[1] else Subspace.zero(m.shape[0], F)


def kernel(m: np.ndarray, F=GF101) -> Subspace:
    ker = kernel_basis(m, F)
    return Subspace._raw(*_canon(ker, F), m.shape[1], F)


def _canon(vecs, F):
    if vecs.shape[0] == 0:
        return vecs, []
    red, piv, r = rref(vecs, F)
    return red[:r], piv


__all__ = [
    "GF101",
    "NoSolution",
    "PrimeField",
    "QQ",
    "RationalField",
    "Subspace",
    "image",
    "kernel",
    "kernel_basis",
    "matmul",
    "rank",
    "rref",
    "solve",
    "span",
]
