"""Integral lattice with bilinear form, parity grading and sign cocycle.

The lattice Gbar is free abelian on basis vectors

    e_1 .. e_M,  delta_1 .. delta_{q-1},  d_1 .. d_{q-1}

with symmetric bilinear form

    (e_i, e_j) = delta_ij,
    (delta_i, d_j) = delta_ij,
    all other basis pairings zero.

Two sublattices matter: Gamma (e-block only) and Q (no d-components).
The Z_2 parity of a vector is its norm mod 2, which reduces to the sum
of its e-coordinates mod 2 because the delta/d cross terms are even.

The cocycle F takes values +-1, is bimultiplicative in both slots, and
on basis pairs equals -1 exactly for (e_i, e_j) with i > j; every pair
involving a delta or d generator has value 1 (the extension to the d
generators is a free choice and is fixed this way for reproducibility).
Its first argument must lie in Q.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class LatticeConfig:
    """Shape of the lattice: M e-generators and q-1 delta/d pairs."""

    M: int
    q: int = 1

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be >= 1")
        if self.q < 1:
            raise ValueError("q must be >= 1")

    @property
    def rank(self) -> int:
        return self.M + 2 * (self.q - 1)

    def zero(self) -> "LatticeVector":
        z = (0,) * (self.q - 1)
        return LatticeVector((0,) * self.M, z, z)

    def e(self, i: int) -> "LatticeVector":
        """Basis vector e_i, 1-based."""
        if not 1 <= i <= self.M:
            raise ValueError(f"e index {i} out of range 1..{self.M}")
        return LatticeVector(
            tuple(1 if k == i - 1 else 0 for k in range(self.M)),
            (0,) * (self.q - 1),
            (0,) * (self.q - 1),
        )

    def delta(self, j: int) -> "LatticeVector":
        """Basis vector delta_j, 1-based, defined for q >= 2."""
        if not 1 <= j <= self.q - 1:
            raise ValueError(f"delta index {j} out of range 1..{self.q - 1}")
        return LatticeVector(
            (0,) * self.M,
            tuple(1 if k == j - 1 else 0 for k in range(self.q - 1)),
            (0,) * (self.q - 1),
        )

    def dgen(self, j: int) -> "LatticeVector":
        """Basis vector d_j, 1-based, defined for q >= 2."""
        if not 1 <= j <= self.q - 1:
            raise ValueError(f"d index {j} out of range 1..{self.q - 1}")
        return LatticeVector(
            (0,) * self.M,
            (0,) * (self.q - 1),
            tuple(1 if k == j - 1 else 0 for k in range(self.q - 1)),
        )

    def root(self, i: int, j: int) -> "LatticeVector":
        """alpha_ij = e_i - e_j (zero when i = j)."""
        return self.e(i) - self.e(j) if i != j else self.zero()

    def delta_sum(self, mu) -> "LatticeVector":
        """delta_mu = sum_i mu_i delta_i for mu in Z^(q-1)."""
        mu = tuple(int(c) for c in mu)
        if len(mu) != self.q - 1:
            raise ValueError(f"expected {self.q - 1} exponents, got {len(mu)}")
        return LatticeVector((0,) * self.M, mu, (0,) * (self.q - 1))

    def basis_vector(self, idx: int) -> "LatticeVector":
        """Basis vector by flat 0-based index: e-block, delta-block, d-block."""
        if 0 <= idx < self.M:
            return self.e(idx + 1)
        if self.M <= idx < self.M + self.q - 1:
            return self.delta(idx - self.M + 1)
        if self.M + self.q - 1 <= idx < self.rank:
            return self.dgen(idx - self.M - (self.q - 1) + 1)
        raise ValueError(f"basis index {idx} out of range 0..{self.rank - 1}")


@dataclass(frozen=True, slots=True)
class LatticeVector:
    """Element of Gbar with exact integer coordinates in the fixed basis."""

    e: tuple
    delta: tuple = ()
    d: tuple = ()

    def __post_init__(self):
        if len(self.delta) != len(self.d):
            raise ValueError("delta and d blocks must have equal length")

    @property
    def config(self) -> LatticeConfig:
        return LatticeConfig(len(self.e), len(self.delta) + 1)

    def in_gamma(self) -> bool:
        return not any(self.delta) and not any(self.d)

    def in_q(self) -> bool:
        return not any(self.d)

    def is_zero(self) -> bool:
        return not any(self.e) and not any(self.delta) and not any(self.d)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _check_shape(self, other)
        return LatticeVector(
            tuple(a + b for a, b in zip(self.e, other.e)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
            tuple(a + b for a, b in zip(self.d, other.d)),
        )

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return self + (-other)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(
            tuple(-a for a in self.e),
            tuple(-a for a in self.delta),
            tuple(-a for a in self.d),
        )

    def __mul__(self, n: int) -> "LatticeVector":
        return LatticeVector(
            tuple(n * a for a in self.e),
            tuple(n * a for a in self.delta),
            tuple(n * a for a in self.d),
        )

    __rmul__ = __mul__

    def __repr__(self):
        parts = []
        for name, coords in (("e", self.e), ("delta", self.delta), ("d", self.d)):
            for k, c in enumerate(coords):
                if c:
                    parts.append(f"{c:+d}*{name}{k + 1}")
        return "LatticeVector<" + (" ".join(parts) if parts else "0") + ">"


def _check_shape(a: LatticeVector, b: LatticeVector):
    if len(a.e) != len(b.e) or len(a.delta) != len(b.delta):
        raise ValueError(f"lattice shape mismatch: {a!r} vs {b!r}")


def bilinear(a: LatticeVector, b: LatticeVector) -> int:
    """Symmetric form: orthonormal e-block plus the delta/d duality."""
    _check_shape(a, b)
    s = sum(x * y for x, y in zip(a.e, b.e))
    s += sum(x * y for x, y in zip(a.delta, b.d))
    s += sum(x * y for x, y in zip(a.d, b.delta))
    return s


def parity(a: LatticeVector) -> int:
    """Norm mod 2; only the e-block contributes."""
    return sum(a.e) % 2


def cocycle(a: LatticeVector, b: LatticeVector) -> int:
    """Bimultiplicative sign F(a, b) in {+1, -1}, for a in Q.

    Expanding bimultiplicatively over the basis, the only -1 factors come
    from e-pairs (e_i, e_j) with i > j, so F(a, b) = (-1)^D with
    D = sum_{i > j} a_i b_j over e-coordinates.
    """
    _check_shape(a, b)
    if not a.in_q():
        raise ValueError(f"cocycle first argument must lie in Q, got {a!r}")
    dd = 0
    for i in range(1, len(a.e)):
        ai = a.e[i]
        if ai:
            dd += ai * sum(b.e[:i])
    return -1 if dd % 2 else 1


def pair_with_basis(a: LatticeVector, idx: int) -> int:
    """(a, basis_vector(idx)) without materialising the basis vector."""
    m = len(a.e)
    qm1 = len(a.delta)
    if 0 <= idx < m:
        return a.e[idx]
    if m <= idx < m + qm1:
        return a.d[idx - m]  # (x, delta_j) pairs with the d-coordinate
    if m + qm1 <= idx < m + 2 * qm1:
        return a.delta[idx - m - qm1]
    raise ValueError(f"basis index {idx} out of range for rank {m + 2 * qm1}")


def basis_support(a: LatticeVector):
    """Pairs (flat basis index, coordinate) for the nonzero coordinates."""
    m = len(a.e)
    qm1 = len(a.delta)
    out = []
    for i, c in enumerate(a.e):
        if c:
            out.append((i, c))
    for i, c in enumerate(a.delta):
        if c:
            out.append((m + i, c))
    for i, c in enumerate(a.d):
        if c:
            out.append((m + qm1 + i, c))
    return out
