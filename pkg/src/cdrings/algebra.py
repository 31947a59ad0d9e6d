"""The central data type: a finite unital algebra over Z/nZ.

A FiniteAlgebra is a free (Z/nZ)-module of rank d with a structure tensor
c[i, j, k] (meaning e_i * e_j = sum_k c[i, j, k] e_k), a distinguished unit
vector, and an involution given as a d x d matrix acting on row vectors
(x* = x @ involution). Elements are plain length-d integer vectors; all
per-element operations live on the algebra object, which owns the modulus.

Identity predicates (associative, commutative, alternative) are decided on
basis tuples with explicit linearization terms. That is exact even with
2-torsion: in the expansion of, say, (x, x, y), the squared coefficients
multiply the diagonal basis associators and the cross coefficients multiply
the symmetrized pairs, so vanishing of those families is equivalent to the
identity holding for all elements.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidAlgebra,
    NotCentral,
    NotInvertible,
    NotSymmetric,
)
from .residue import ResidueMatrix, solve_left


class FiniteAlgebra:
    """Structure-constant algebra over Z/nZ with unit and involution."""

    __slots__ = (
        "modulus",
        "rank",
        "structure",
        "unit",
        "involution",
        "labels",
        "name",
        "parent",
        "alpha",
    )

    def __init__(
        self,
        modulus: int,
        structure,
        unit,
        involution,
        labels: list[str] | None = None,
        name: str = "",
        parent: "FiniteAlgebra | None" = None,
        alpha: "CentralScalar | None" = None,
    ):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        structure = np.array(structure, dtype=np.int64)
        if structure.ndim != 3 or len(set(structure.shape)) != 1:
            raise ValueError(f"structure tensor must be d x d x d, got {structure.shape}")
        d = structure.shape[0]
        unit = np.array(unit, dtype=np.int64)
        involution = np.array(involution, dtype=np.int64)
        if unit.shape != (d,):
            raise ValueError(f"unit has shape {unit.shape}, expected ({d},)")
        if involution.shape != (d, d):
            raise ValueError(f"involution has shape {involution.shape}, expected ({d}, {d})")
        if labels is None:
            labels = [f"e{i}" for i in range(d)]
        if len(labels) != d:
            raise ValueError(f"{len(labels)} labels for rank {d}")
        for arr in (structure, unit, involution):
            arr %= modulus
            arr.setflags(write=False)
        self.modulus = modulus
        self.rank = d
        self.structure = structure
        self.unit = unit
        self.involution = involution
        self.labels = list(labels)
        self.name = name or f"algebra(rank {d}, Z{modulus})"
        self.parent = parent
        self.alpha = alpha

    # -- elements ----------------------------------------------------------

    def element(self, coords) -> np.ndarray:
        """Validate and reduce a coordinate vector of this algebra."""
        arr = np.asarray(coords, dtype=np.int64)
        if arr.shape != (self.rank,):
            raise DimensionMismatch(
                f"element has shape {arr.shape}, algebra rank is {self.rank}"
            )
        return arr % self.modulus

    def zero(self) -> np.ndarray:
        return np.zeros(self.rank, dtype=np.int64)

    def one(self) -> np.ndarray:
        return self.unit.copy()

    def scalar(self, c: int) -> np.ndarray:
        return (int(c) * self.unit) % self.modulus

    def basis_element(self, i: int) -> np.ndarray:
        out = np.zeros(self.rank, dtype=np.int64)
        out[i] = 1
        return out

    # -- multiplication and derived brackets --------------------------------

    def mul(self, x, y) -> np.ndarray:
        x = self.element(x)
        y = self.element(y)
        return np.einsum("i,j,ijk->k", x, y, self.structure) % self.modulus

    def associator(self, a, b, c) -> np.ndarray:
        return (self.mul(self.mul(a, b), c) - self.mul(a, self.mul(b, c))) % self.modulus

    def commutator(self, a, b) -> np.ndarray:
        return (self.mul(a, b) - self.mul(b, a)) % self.modulus

    def involve(self, x) -> np.ndarray:
        return (self.element(x) @ self.involution) % self.modulus

    def left_mul_matrix(self, x) -> np.ndarray:
        """Matrix L with y @ L = x * y (left multiplication by x)."""
        x = self.element(x)
        return np.einsum("i,ijk->jk", x, self.structure) % self.modulus

    def right_mul_matrix(self, x) -> np.ndarray:
        """Matrix R with y @ R = y * x (right multiplication by x)."""
        x = self.element(x)
        return np.einsum("j,ijk->ik", x, self.structure) % self.modulus

    def format_element(self, x) -> str:
        x = self.element(x)
        terms = [
            (f"{int(c)}·{lbl}" if (c != 1 or lbl == "1") else lbl)
            for c, lbl in zip(x, self.labels)
            if c
        ]
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteAlgebra)
            and self.modulus == other.modulus
            and self.rank == other.rank
            and bool(np.array_equal(self.structure, other.structure))
            and bool(np.array_equal(self.unit, other.unit))
            and bool(np.array_equal(self.involution, other.involution))
        )

    def __hash__(self) -> int:
        return hash(
            (self.modulus, self.rank, self.structure.tobytes(), self.unit.tobytes())
        )

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name}, rank {self.rank}, Z{self.modulus})"


def scalar_ring(n: int, name: str | None = None) -> FiniteAlgebra:
    """Z/nZ as a rank-1 algebra with the identity involution."""
    structure = np.ones((1, 1, 1), dtype=np.int64)
    alg = FiniteAlgebra(
        n, structure, [1], [[1]], labels=["1"], name=name or f"Z{n}"
    )
    ensure_valid(alg)
    return alg


# -- validation -------------------------------------------------------------


def validate_algebra(algebra: FiniteAlgebra) -> list[str]:
    """Check every structural invariant; violations are data, not exceptions."""
    n, d = algebra.modulus, algebra.rank
    c, unit, sigma = algebra.structure, algebra.unit, algebra.involution
    violations: list[str] = []

    left_by_unit = np.einsum("i,ijk->jk", unit, c) % n
    right_by_unit = np.einsum("j,ijk->ik", unit, c) % n
    eye = np.eye(d, dtype=np.int64)
    if not np.array_equal(left_by_unit, eye):
        violations.append("unit is not a left identity")
    if not np.array_equal(right_by_unit, eye):
        violations.append("unit is not a right identity")

    if not np.array_equal((sigma @ sigma) % n, eye):
        violations.append("involution does not square to the identity")
    if not np.array_equal((unit @ sigma) % n, unit):
        violations.append("involution does not fix the unit")

    # (e_i e_j)* == e_j* e_i* for all basis pairs
    lhs = np.einsum("ijm,mk->ijk", c, sigma) % n
    rhs = np.einsum("jp,iq,pqk->ijk", sigma, sigma, c) % n
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere((lhs - rhs) % n)
        i, j = int(bad[0][0]), int(bad[0][1])
        violations.append(
            f"involution is not anti-multiplicative at basis pair ({i}, {j})"
        )
    return violations


def ensure_valid(algebra: FiniteAlgebra) -> FiniteAlgebra:
    """Raise InvalidAlgebra unless all invariants hold; used at boundaries."""
    violations = validate_algebra(algebra)
    if violations:
        raise InvalidAlgebra(violations)
    return algebra


def apply_involution(algebra: FiniteAlgebra, x) -> np.ndarray:
    return algebra.involve(x)


# -- identity predicates -----------------------------------------------------


def _associator_tensor(algebra: FiniteAlgebra) -> np.ndarray:
    """T[i, j, k, :] = associator(e_i, e_j, e_k)."""
    c = algebra.structure
    left = np.einsum("ijq,qkm->ijkm", c, c)
    right = np.einsum("jkq,iqm->ijkm", c, c)
    return (left - right) % algebra.modulus


def is_associative(algebra: FiniteAlgebra) -> bool:
    """All basis triples associate; sufficient by trilinearity."""
    return not _associator_tensor(algebra).any()


def is_commutative(algebra: FiniteAlgebra) -> bool:
    c = algebra.structure
    return not ((c - c.transpose(1, 0, 2)) % algebra.modulus).any()


def is_left_alternative(algebra: FiniteAlgebra) -> bool:
    t = _associator_tensor(algebra)
    n = algebra.modulus
    d = algebra.rank
    diag = t[np.arange(d), np.arange(d)]
    if diag.any():
        return False
    return not ((t + t.transpose(1, 0, 2, 3)) % n).any()


def is_right_alternative(algebra: FiniteAlgebra) -> bool:
    t = _associator_tensor(algebra)
    n = algebra.modulus
    d = algebra.rank
    diag = t[:, np.arange(d), np.arange(d)]
    if diag.any():
        return False
    return not ((t + t.transpose(0, 2, 1, 3)) % n).any()


def is_alternative(algebra: FiniteAlgebra) -> bool:
    return is_left_alternative(algebra) and is_right_alternative(algebra)


# -- central, symmetric, invertible certificates -----------------------------


def is_central(algebra: FiniteAlgebra, x) -> bool:
    """x commutes with everything and associates in all three slots."""
    n = algebra.modulus
    c = algebra.structure
    x = algebra.element(x)
    xr = np.einsum("p,pik->ik", x, c) % n  # rows: x * e_i
    rx = np.einsum("p,ipk->ik", x, c) % n  # rows: e_i * x
    if ((xr - rx) % n).any():
        return False
    s1 = np.einsum("ik,kjm->ijm", xr, c) - np.einsum("p,ijq,pqm->ijm", x, c, c)
    s2 = np.einsum("ik,kjm->ijm", rx, c) - np.einsum("jk,ikm->ijm", xr, c)
    s3 = np.einsum("ijq,qpm,p->ijm", c, c, x) - np.einsum("jk,ikm->ijm", rx, c)
    return not ((s1 % n).any() or (s2 % n).any() or (s3 % n).any())


def is_symmetric(algebra: FiniteAlgebra, x) -> bool:
    x = algebra.element(x)
    return bool(np.array_equal(algebra.involve(x), x))


def is_invertible(algebra: FiniteAlgebra, x) -> tuple[bool, np.ndarray | None]:
    """Two-sided invertibility of a central element, via a linear solve.

    Centrality is a precondition (raises NotCentral); the solve works at any
    rank, unlike an element search.
    """
    x = algebra.element(x)
    if not is_central(algebra, x):
        raise NotCentral(f"{algebra.format_element(x)} is not central")
    left = ResidueMatrix(algebra.modulus, algebra.left_mul_matrix(x))
    y = solve_left(left, algebra.unit)
    if y is None:
        return False, None
    if not np.array_equal(algebra.mul(y, x), algebra.unit):
        return False, None
    return True, y


@dataclass(frozen=True)
class CentralScalar:
    """A doubling parameter with its certificates attached.

    Built only through `certify_central_scalar`, which checks centrality,
    symmetry under the involution, and two-sided invertibility.
    """

    algebra: FiniteAlgebra
    value: np.ndarray
    inverse: np.ndarray

    def describe(self) -> str:
        return self.algebra.format_element(self.value)


def certify_central_scalar(algebra: FiniteAlgebra, value) -> CentralScalar:
    """Certify value as central, symmetric, and invertible, or raise."""
    if isinstance(value, CentralScalar):
        value = value.value
    if isinstance(value, (int, np.integer)):
        value = algebra.scalar(int(value))
    value = algebra.element(value)
    if not is_central(algebra, value):
        raise NotCentral(
            f"doubling parameter {algebra.format_element(value)} is not central in {algebra.name}"
        )
    if not is_symmetric(algebra, value):
        raise NotSymmetric(
            f"doubling parameter {algebra.format_element(value)} is not fixed by the involution"
        )
    ok, inverse = is_invertible(algebra, value)
    if not ok:
        raise NotInvertible(
            f"doubling parameter {algebra.format_element(value)} has no two-sided inverse"
        )
    value.setflags(write=False)
    inverse.setflags(write=False)
    return CentralScalar(algebra, value, inverse)
