"""Exact linear algebra over Z/nZ for arbitrary n >= 2.

Row spans are kept in Howell normal form: the unique echelon canonical form
that stays valid in the presence of zero divisors (pivots are divisors of n,
entries above a pivot are reduced mod the pivot, and annihilator multiples of
every pivot row are absorbed into the span). Two generating sets span the
same additive subgroup of (Z/nZ)^d iff their Howell forms are identical,
which is what makes Submodule a canonical, hashable value.

All vectors are rows; the kernel convention throughout the package is the
left kernel {v : v @ m = 0}.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import DimensionMismatch, EnumerationBudgetExceeded
from .modn import annihilator_generator, gcd_transform, normalizing_unit

DEFAULT_ENUMERATION_BUDGET = 2**20


def _as_residue_array(data, modulus: int) -> np.ndarray:
    arr = np.array(data, dtype=np.int64)
    arr %= modulus
    arr.setflags(write=False)
    return arr


class ResidueMatrix:
    """Dense matrix over Z/nZ; entries are kept reduced to [0, n)."""

    __slots__ = ("modulus", "array")

    def __init__(self, modulus: int, data):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        self.modulus = modulus
        arr %= modulus
        arr.setflags(write=False)
        self.array = arr

    @classmethod
    def zeros(cls, modulus: int, rows: int, cols: int) -> "ResidueMatrix":
        return cls(modulus, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, modulus: int, size: int) -> "ResidueMatrix":
        return cls(modulus, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResidueMatrix)
            and self.modulus == other.modulus
            and self.array.shape == other.array.shape
            and bool(np.array_equal(self.array, other.array))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.array.shape, self.array.tobytes()))

    def __repr__(self) -> str:
        return f"ResidueMatrix(mod {self.modulus}, {self.array.tolist()})"


def _howell(rows: np.ndarray, n: int, want_transform: bool):
    """Reduce `rows` to Howell normal form.

    Returns (pivot_rows, pivot_cols, transform_rows, kernel_rows). The
    transform satisfies transform_rows[i] @ rows == pivot_rows[i]; the kernel
    rows span the full left kernel {v : v @ rows == 0}. Transform and kernel
    are None unless requested.
    """
    m, cols = rows.shape
    work = [row.copy() for row in rows.astype(np.int64) % n]
    trans = [row.copy() for row in np.eye(m, dtype=np.int64)] if want_transform else None
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        j = r
        while j < len(work) and work[j][c] == 0:
            j += 1
        if j == len(work):
            continue
        if j > r:
            work[r], work[j] = work[j], work[r]
            if trans is not None:
                trans[r], trans[j] = trans[j], trans[r]
        u = normalizing_unit(int(work[r][c]), n)
        if u != 1:
            work[r] = (work[r] * u) % n
            if trans is not None:
                trans[r] = (trans[r] * u) % n
        for i in range(r + 1, len(work)):
            if work[i][c]:
                g, s, t, uu, vv = gcd_transform(int(work[r][c]), int(work[i][c]), n)
                wr, wi = work[r], work[i]
                work[r], work[i] = (s * wr + t * wi) % n, (uu * wr + vv * wi) % n
                if trans is not None:
                    tr, ti = trans[r], trans[i]
                    trans[r], trans[i] = (s * tr + t * ti) % n, (uu * tr + vv * ti) % n
        p = int(work[r][c])
        for i in range(r):
            q = int(work[i][c]) // p
            if q:
                work[i] = (work[i] - q * work[r]) % n
                if trans is not None:
                    trans[i] = (trans[i] - q * trans[r]) % n
        a = annihilator_generator(p, n)
        if a:
            # The annihilator multiple of a pivot row completes the span for
            # later columns; even when it vanishes, its transform row is a
            # kernel generator and must be kept.
            work.append((a * work[r]) % n)
            if trans is not None:
                trans.append((a * trans[r]) % n)
        pivot_cols.append(c)
        r += 1
    pivot_rows = np.array(work[:r], dtype=np.int64).reshape(r, cols)
    transform = kernel = None
    if want_transform:
        transform = np.array(trans[:r], dtype=np.int64).reshape(r, m)
        kernel = np.array(trans[r:], dtype=np.int64).reshape(len(trans) - r, m)
    return pivot_rows, pivot_cols, transform, kernel


@dataclass(frozen=True)
class Submodule:
    """Additive subgroup of (Z/nZ)^d in Howell canonical form.

    Instances compare equal exactly when they have the same element set, so
    submodule identities (center formulas, ideal equalities) are plain `==`
    checks. Construct via `span`, `canonicalize`, or `kernel`; the generator
    matrix is read-only.
    """

    modulus: int
    ambient_rank: int
    generators: np.ndarray = field(repr=False)
    pivots: tuple[tuple[int, int], ...]  # (column, value) per generator row

    @classmethod
    def span(cls, modulus: int, rows, ambient_rank: int | None = None) -> "Submodule":
        arr = np.array(rows, dtype=np.int64)
        if arr.size == 0:
            if ambient_rank is None:
                raise ValueError("ambient_rank required for an empty generating set")
            arr = arr.reshape(0, ambient_rank)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if ambient_rank is not None and arr.shape[1] != ambient_rank:
            raise DimensionMismatch(
                f"generators have width {arr.shape[1]}, ambient rank is {ambient_rank}"
            )
        gens, cols, _, _ = _howell(arr % modulus, modulus, want_transform=False)
        pivots = tuple(
            (c, int(gens[i][c])) for i, c in enumerate(cols)
        )
        return cls(modulus, arr.shape[1], _as_residue_array(gens, modulus), pivots)

    @classmethod
    def zero(cls, modulus: int, ambient_rank: int) -> "Submodule":
        return cls.span(modulus, np.zeros((0, ambient_rank), dtype=np.int64), ambient_rank)

    @classmethod
    def full(cls, modulus: int, ambient_rank: int) -> "Submodule":
        return cls.span(modulus, np.eye(ambient_rank, dtype=np.int64))

    @property
    def num_generators(self) -> int:
        return self.generators.shape[0]

    @property
    def is_zero(self) -> bool:
        return self.num_generators == 0

    def order(self) -> int:
        """Number of elements in the span (product of the pivot layer orders)."""
        size = 1
        for _, p in self.pivots:
            size *= self.modulus // p
        return size

    def _check_vector(self, v) -> np.ndarray:
        arr = np.asarray(v, dtype=np.int64)
        if arr.shape != (self.ambient_rank,):
            raise DimensionMismatch(
                f"vector has shape {arr.shape}, ambient rank is {self.ambient_rank}"
            )
        return arr % self.modulus

    def contains(self, v) -> bool:
        """Membership by echelon reduction against the canonical generators."""
        w = self._check_vector(v).copy()
        for row, (c, p) in zip(self.generators, self.pivots):
            if w[c]:
                q, rem = divmod(int(w[c]), p)
                if rem:
                    return False
                w = (w - q * row) % self.modulus
        return not w.any()

    def coefficients_of(self, v) -> np.ndarray | None:
        """Coefficients c with c @ generators == v, or None if v is outside."""
        w = self._check_vector(v).copy()
        coeffs = np.zeros(self.num_generators, dtype=np.int64)
        for idx, (row, (c, p)) in enumerate(zip(self.generators, self.pivots)):
            if w[c]:
                q, rem = divmod(int(w[c]), p)
                if rem:
                    return None
                coeffs[idx] = q
                w = (w - q * row) % self.modulus
        return coeffs if not w.any() else None

    def elements(self, budget: int = DEFAULT_ENUMERATION_BUDGET) -> np.ndarray:
        """All elements of the span as an (order, d) array, zero first.

        Raises EnumerationBudgetExceeded instead of silently truncating.
        """
        size = self.order()
        if size > budget:
            raise EnumerationBudgetExceeded(size, budget)
        if self.is_zero:
            return np.zeros((1, self.ambient_rank), dtype=np.int64)
        radices = [self.modulus // p for _, p in self.pivots]
        grids = np.meshgrid(*[np.arange(r, dtype=np.int64) for r in radices], indexing="ij")
        coeffs = np.stack([g.ravel() for g in grids], axis=1)
        return (coeffs @ self.generators) % self.modulus

    def enumerate(self, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[np.ndarray]:
        """Yield each element of the span exactly once."""
        size = self.order()
        if size > budget:
            raise EnumerationBudgetExceeded(size, budget)
        if self.is_zero:
            yield np.zeros(self.ambient_rank, dtype=np.int64)
            return
        radices = [self.modulus // p for _, p in self.pivots]
        for coeffs in itertools.product(*[range(r) for r in radices]):
            yield (np.array(coeffs, dtype=np.int64) @ self.generators) % self.modulus

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Submodule)
            and self.modulus == other.modulus
            and self.ambient_rank == other.ambient_rank
            and bool(np.array_equal(self.generators, other.generators))
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.ambient_rank, self.generators.tobytes()))

    def __repr__(self) -> str:
        return (
            f"Submodule(mod {self.modulus}, rank {self.ambient_rank}, "
            f"order {self.order()}, gens {self.generators.tolist()})"
        )


def canonicalize(m: ResidueMatrix) -> Submodule:
    """Canonical generating set of the row span of m."""
    return Submodule.span(m.modulus, m.array, m.cols)


def kernel(m: ResidueMatrix) -> Submodule:
    """Left kernel {v : v @ m = 0} as a canonical submodule."""
    arr = m.array
    if arr.shape[0] == 0:
        return Submodule.zero(m.modulus, 0)
    # The kernel only depends on the set of columns; dropping duplicates and
    # zero columns keeps the elimination loop short for stacked conditions.
    cols = np.unique(arr[:, arr.any(axis=0)], axis=1) if arr.any() else arr[:, :0]
    if cols.shape[1] == 0:
        return Submodule.full(m.modulus, m.rows)
    _, _, _, ker = _howell(cols, m.modulus, want_transform=True)
    return Submodule.span(m.modulus, ker, m.rows)


def _require_compatible(a: Submodule, b: Submodule) -> None:
    if a.modulus != b.modulus:
        raise DimensionMismatch(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    if a.ambient_rank != b.ambient_rank:
        raise DimensionMismatch(
            f"ambient rank mismatch: {a.ambient_rank} vs {b.ambient_rank}"
        )


def intersect(a: Submodule, b: Submodule) -> Submodule:
    """Intersection of two spans via the doubled-block elimination trick.

    The rows (g, g) for g in a together with (h, 0) for h in b span exactly
    the pairs (ua + vb, ua); a pair (0, y) therefore occurs iff y lies in
    both spans, so the trailing halves of the Howell rows whose pivots sit in
    the trailing block generate the intersection.
    """
    _require_compatible(a, b)
    d = a.ambient_rank
    n = a.modulus
    top = np.hstack([a.generators, a.generators])
    bot = np.hstack([b.generators, np.zeros_like(b.generators)])
    stacked = np.vstack([top, bot])
    if stacked.shape[0] == 0:
        return Submodule.zero(n, d)
    gens, cols, _, _ = _howell(stacked, n, want_transform=False)
    tail_rows = [gens[i][d:] for i, c in enumerate(cols) if c >= d]
    if not tail_rows:
        return Submodule.zero(n, d)
    return Submodule.span(n, np.array(tail_rows, dtype=np.int64), d)


def membership(v, s: Submodule) -> bool:
    """True iff v lies in the additive span of s."""
    return s.contains(v)


def enumerate_submodule(
    s: Submodule, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> Iterator[np.ndarray]:
    return s.enumerate(budget)


def solve_left(m: ResidueMatrix, rhs) -> np.ndarray | None:
    """A vector v with v @ m = rhs, or None when no solution exists."""
    b = np.asarray(rhs, dtype=np.int64) % m.modulus
    if b.shape != (m.cols,):
        raise DimensionMismatch(f"rhs has shape {b.shape}, expected ({m.cols},)")
    gens, cols, transform, _ = _howell(m.array, m.modulus, want_transform=True)
    w = b.copy()
    coeffs = np.zeros(gens.shape[0], dtype=np.int64)
    for idx, c in enumerate(cols):
        if w[c]:
            p = int(gens[idx][c])
            q, rem = divmod(int(w[c]), p)
            if rem:
                return None
            coeffs[idx] = q
            w = (w - q * gens[idx]) % m.modulus
    if w.any():
        return None
    return (coeffs @ transform) % m.modulus


@functools.lru_cache(maxsize=8)
def _all_vectors_cached(modulus: int, rank: int) -> np.ndarray:
    total = modulus**rank
    codes = np.arange(total, dtype=np.int64)
    out = np.empty((total, rank), dtype=np.int64)
    for i in range(rank):
        out[:, i] = codes % modulus
        codes //= modulus
    out.setflags(write=False)
    return out


def all_vectors(modulus: int, rank: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> np.ndarray:
    """Every vector of (Z/nZ)^rank, ordered by mixed-radix code, zero first.

    The table is cached and read-only; copy before mutating.
    """
    total = modulus**rank
    if total > budget:
        raise EnumerationBudgetExceeded(total, budget)
    return _all_vectors_cached(modulus, rank)


def vector_codes(vectors: np.ndarray, modulus: int, rank: int) -> np.ndarray:
    """Mixed-radix integer code of each row; inverse of `all_vectors` order."""
    if modulus**rank > 2**62:
        raise OverflowError("vector codes would overflow int64")
    powers = modulus ** np.arange(rank, dtype=np.int64)
    return vectors @ powers
