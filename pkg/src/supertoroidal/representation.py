"""The tensor module and the operator dictionary of the toroidal action.

States live in V[Gbar] (x) F: each basis vector pairs a lattice key
(gamma, creation monomial) with a boson key (phi multiset, phi* multiset).
Lattice operators act on the first slot and boson operators on the
second; the two kinds commute, and the parity of a basis vector is the
parity of its lattice half.

Operators are symbolic descriptors evaluated lazily on states, never as
matrices.  The primitive descriptors are

    VertexMode(a, k)        X-mode of a in Q, doubled index k
    Current(a, n)           Heisenberg mode a(n) on the lattice slot
    PhiMode / PhiStarMode    boson modes phi^j_{r-1/2}, phi^{j*}_{r-1/2}
    DiagCurrent(a, n, mu)   sum_k a(k) X_{2(n-k)}(delta_mu)
    SOp(i, j, mu, n)        sum_k S_ij(k) X_{2(n-k)}(delta_mu)
    CentralImage(mbar, i)   image of the central symbol t^mbar K_i

plus OpProduct (composition, rightmost factor first) and OpSum (rational
combinations).  Every internal mode sum is clipped to an exactly
computed finite window: boson annihilators die beyond the state's depth,
lattice modes die beyond the vanishing bound, and the attached
X(delta_mu) factors only create material orthogonal to the e-block, so
the effective bounds of the input state cap every index.

The dictionary rho sends T_ij (x) t^mbar to X-modes (i, j <= M), to the
dressed diagonal current (i = j <= M), or to an S family mode (an index
beyond M); the central t^mbar K_i go to DiagCurrent(delta_i, ...) for
i < q and to X-modes of delta_mu for i = q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import LatticeConfig, LatticeVector, bilinear
from .fock_lattice import (
    NEG_INF,
    LatticeFockState,
    current_upper_bound,
    effective_mode_bound,
    heisenberg_apply,
    monomial_degree,
    normal_ordered_pair_sum,
    vertex_mode_apply,
    vertex_product_sum,
)
from .fock_boson import BosonState, depth, phi_apply, phi_star_apply


class TensorState:
    """Finitely supported map (lattice key, boson key) -> rational."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                if type(c) is not Fraction:
                    c = Fraction(c)
                if not c:
                    continue
                acc = clean.get(key)
                t = c if acc is None else acc + c
                if t:
                    clean[key] = t
                elif acc is not None:
                    del clean[key]
        self.terms = clean

    @classmethod
    def vacuum(cls, config: LatticeConfig) -> "TensorState":
        return cls({((config.zero(), ()), ((), ())): Fraction(1)})

    @classmethod
    def basis(cls, gamma, mono=(), phi=(), phi_star=(), coeff=1) -> "TensorState":
        key = (
            (gamma, tuple(sorted(mono))),
            (tuple(sorted(phi)), tuple(sorted(phi_star))),
        )
        return cls({key: Fraction(coeff)})

    @classmethod
    def product(cls, lat: LatticeFockState, bos: BosonState) -> "TensorState":
        out = {}
        for lk, cl in lat.terms.items():
            for bk, cb in bos.terms.items():
                out[(lk, bk)] = cl * cb
        return cls(out)

    @classmethod
    def zero(cls) -> "TensorState":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            t = c if acc is None else acc + c
            if t:
                out[k] = t
            elif acc is not None:
                del out[k]
        s = TensorState.zero()
        s.terms = out
        return s

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if type(scalar) is not Fraction:
            scalar = Fraction(scalar)
        if not scalar:
            return TensorState.zero()
        s = TensorState.zero()
        s.terms = {k: scalar * c for k, c in self.terms.items()}
        return s

    __mul__ = __rmul__

    def __eq__(self, other):
        return isinstance(other, TensorState) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        def keyfn(item):
            ((g, u), (p, ps)), _ = item
            return (g.e, g.delta, g.d, u, p, ps)

        return sorted(self.terms.items(), key=keyfn)

    def parity(self):
        seen = {sum(lk[0].e) % 2 for (lk, _) in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def doubled_degree(self) -> int:
        """Max over keys of 2 deg(monomial) + total boson mode magnitude."""
        best = 0
        for ((_, u), (p, ps)) in self.terms:
            d = 2 * monomial_degree(u) - sum(k for _, k in p) - sum(k for _, k in ps)
            best = max(best, d)
        return best

    def lattice_shape(self):
        """(M, q) read off any key, or None for the zero state."""
        for ((g, _), _) in self.terms:
            return len(g.e), len(g.delta) + 1
        return None

    def __repr__(self):
        if not self.terms:
            return "TensorState<0>"
        bits = []
        for ((g, u), (p, ps)), c in self.sorted_terms():
            bits.append(f"{c} * e^{g!r}(x){u or 1}(x)phi{list(p)}phi*{list(ps)}")
        return "TensorState<" + " + ".join(bits) + ">"


def _map_lattice(fn, ts: TensorState) -> TensorState:
    groups = {}
    for (lk, bk), c in ts.terms.items():
        groups.setdefault(bk, {})[lk] = c
    out = {}
    for bk, lat_terms in groups.items():
        res = fn(LatticeFockState(lat_terms))
        for lk, c in res.terms.items():
            key = (lk, bk)
            acc = out.get(key)
            t = c if acc is None else acc + c
            if t:
                out[key] = t
            elif acc is not None:
                del out[key]
    return TensorState(out)


def _map_boson(fn, ts: TensorState) -> TensorState:
    groups = {}
    for (lk, bk), c in ts.terms.items():
        groups.setdefault(lk, {})[bk] = c
    out = {}
    for lk, bos_terms in groups.items():
        res = fn(BosonState(bos_terms))
        for bk, c in res.terms.items():
            key = (lk, bk)
            acc = out.get(key)
            t = c if acc is None else acc + c
            if t:
                out[key] = t
            elif acc is not None:
                del out[key]
    return TensorState(out)


def _lattice_part(ts: TensorState) -> LatticeFockState:
    out = {}
    for (lk, _), c in ts.terms.items():
        out[lk] = out.get(lk, 0) + c
    return LatticeFockState(out)


def _boson_part(ts: TensorState) -> BosonState:
    out = {}
    for (_, bk), c in ts.terms.items():
        out[bk] = out.get(bk, 0) + c
    return BosonState(out)


def _lattice_bound(a: LatticeVector, ts: TensorState):
    """Effective doubled vanishing bound of a over the lattice keys."""
    if ts.is_zero():
        return NEG_INF
    lat = LatticeFockState({lk: Fraction(1) for (lk, _) in ts.terms})
    return effective_mode_bound(a, lat)


def _current_bound(a: LatticeVector, ts: TensorState):
    if ts.is_zero():
        return NEG_INF
    lat = LatticeFockState({lk: Fraction(1) for (lk, _) in ts.terms})
    return current_upper_bound(a, lat)


def _boson_depth(ts: TensorState):
    if ts.is_zero():
        return NEG_INF
    bos = BosonState({bk: Fraction(1) for (_, bk) in ts.terms})
    return depth(bos)


# ---------------------------------------------------------------------------
# operator descriptors


@dataclass(frozen=True)
class VertexMode:
    alpha: LatticeVector
    index: int  # doubled

    def apply(self, ts: TensorState) -> TensorState:
        return _map_lattice(lambda s: vertex_mode_apply(self.alpha, self.index, s), ts)

    def parity(self, M=None) -> int:
        return bilinear(self.alpha, self.alpha) % 2


@dataclass(frozen=True)
class Current:
    alpha: LatticeVector
    mode: int

    def apply(self, ts: TensorState) -> TensorState:
        return _map_lattice(lambda s: heisenberg_apply(self.alpha, self.mode, s), ts)

    def parity(self, M=None) -> int:
        return 0


@dataclass(frozen=True)
class PhiMode:
    flavor: int
    r: int  # mode r - 1/2

    def apply(self, ts: TensorState) -> TensorState:
        return _map_boson(lambda s: phi_apply(self.flavor, self.r, s), ts)

    def parity(self, M=None) -> int:
        return 0


@dataclass(frozen=True)
class PhiStarMode:
    flavor: int
    r: int

    def apply(self, ts: TensorState) -> TensorState:
        return _map_boson(lambda s: phi_star_apply(self.flavor, self.r, s), ts)

    def parity(self, M=None) -> int:
        return 0


@dataclass(frozen=True)
class DiagCurrent:
    """Dressed current: sum_k alpha(k) X_{2(n-k)}(delta_mu)."""

    alpha: LatticeVector
    mode: int
    mu: tuple = ()

    def __post_init__(self):
        if any(self.alpha.d):
            raise ValueError("dressed currents require alpha without d-components")
        if len(self.mu) != len(self.alpha.delta):
            raise ValueError("mu length must be q-1 for the alpha shape")

    def apply(self, ts: TensorState) -> TensorState:
        if ts.is_zero():
            return ts
        M, q = ts.lattice_shape()
        dm = LatticeConfig(M, q).delta_sum(self.mu)
        if dm.is_zero():
            return Current(self.alpha, self.mode).apply(ts)
        lb = _lattice_bound(dm, ts)
        k_lo = self.mode - lb // 2
        k_hi = max(_current_bound(self.alpha, ts), 0)
        out = TensorState.zero()
        for k in range(k_lo, k_hi + 1):
            inner = VertexMode(dm, 2 * (self.mode - k)).apply(ts)
            if not inner.is_zero():
                out = out + Current(self.alpha, k).apply(inner)
        return out

    def parity(self, M=None) -> int:
        return 0


@dataclass(frozen=True)
class SOp:
    """S-family mode: sum_k S_ij(k) X_{2(n-k)}(delta_mu)."""

    i: int
    j: int
    mu: tuple
    n: int

    def family(self, M: int) -> str:
        if self.i <= M < self.j:
            return "upper"
        if self.j <= M < self.i:
            return "lower"
        if self.i > M and self.j > M:
            return "boson"
        raise ValueError(f"S indices ({self.i},{self.j}) need one index beyond M={M}")

    def apply(self, ts: TensorState) -> TensorState:
        if ts.is_zero():
            return ts
        M, q = ts.lattice_shape()
        if len(self.mu) != q - 1:
            raise ValueError(f"mu has length {len(self.mu)}, state has q={q}")
        fam = self.family(M)
        cfg = LatticeConfig(M, q)
        dm = cfg.delta_sum(self.mu)
        if dm.is_zero():
            return _s_plain(fam, self.i, self.j, M, cfg, self.n, ts)
        bd = _boson_depth(ts)
        if fam == "upper":
            k_hi = (_lattice_bound(cfg.e(self.i), ts) + 1) // 2 + (bd - 1) // 2
        elif fam == "lower":
            k_hi = (_lattice_bound(-cfg.e(self.j), ts) + 1) // 2 + (bd - 1) // 2
        else:
            k_hi = (bd + 1) // 2 + (bd - 1) // 2
        k_lo = self.n - _lattice_bound(dm, ts) // 2
        out = TensorState.zero()
        for k in range(k_lo, k_hi + 1):
            inner = VertexMode(dm, 2 * (self.n - k)).apply(ts)
            if not inner.is_zero():
                out = out + _s_plain(fam, self.i, self.j, M, cfg, k, inner)
        return out

    def parity(self, M: int) -> int:
        return 1 if (self.i <= M) != (self.j <= M) else 0


def _s_plain(fam: str, i: int, j: int, M: int, cfg: LatticeConfig, m: int, ts: TensorState) -> TensorState:
    """Undressed S_ij(m) on a state, with the exact finite r-window.

    upper:  sum_r X_{r-1/2}(e_i) phi*^{j-M}_{m-r+1/2}
    lower:  sum_r X_{r-1/2}(-e_j) phi^{i-M}_{m-r+1/2}
    boson:  sum_r :phi^{i-M}_{r-1/2} phi*^{j-M}_{m-r+1/2}:
    """
    if ts.is_zero():
        return ts
    bd = _boson_depth(ts)
    out = TensorState.zero()
    if fam in ("upper", "lower"):
        vec = cfg.e(i) if fam == "upper" else -cfg.e(j)
        flavor = (j if fam == "upper" else i) - M
        lb = _lattice_bound(vec, ts)
        r_lo = m - (bd - 1) // 2
        r_hi = (lb + 1) // 2
        for r in range(r_lo, r_hi + 1):
            if fam == "upper":
                t = PhiStarMode(flavor, m - r + 1).apply(ts)
            else:
                t = PhiMode(flavor, m - r + 1).apply(ts)
            if not t.is_zero():
                out = out + VertexMode(vec, 2 * r - 1).apply(t)
        return out
    a, b = i - M, j - M
    r_lo = m - (bd - 1) // 2
    r_hi = (bd + 1) // 2
    for r in range(r_lo, r_hi + 1):
        s_idx = m - r + 1
        # normal ordering: phi first iff r <= s, i.e. annihilators right
        if r <= s_idx:
            t = PhiStarMode(b, s_idx).apply(ts)
            if not t.is_zero():
                out = out + PhiMode(a, r).apply(t)
        else:
            t = PhiMode(a, r).apply(ts)
            if not t.is_zero():
                out = out + PhiStarMode(b, s_idx).apply(t)
    return out


@dataclass(frozen=True)
class CentralImage:
    """Image of the central symbol t^mbar K_direction."""

    mbar: tuple
    direction: int

    def __post_init__(self):
        if not 1 <= self.direction <= len(self.mbar):
            raise ValueError("central direction out of range")

    def apply(self, ts: TensorState) -> TensorState:
        if ts.is_zero():
            return ts
        M, q = ts.lattice_shape()
        if len(self.mbar) != q:
            raise ValueError(f"mbar has length {len(self.mbar)}, state has q={q}")
        return self.resolve(M).apply(ts)

    def resolve(self, M: int):
        """The concrete operator behind the symbol, per the central dictionary."""
        q = len(self.mbar)
        cfg = LatticeConfig(M, q)
        mq = self.mbar[-1]
        mu = tuple(self.mbar[:-1])
        if self.direction == q:
            return VertexMode(cfg.delta_sum(mu), 2 * mq)
        return DiagCurrent(cfg.delta(self.direction), mq, mu)

    def parity(self, M=None) -> int:
        return 0


@dataclass(frozen=True)
class NormalPairSum:
    """sum_k :X_{k+1/2}(a) X_{n-k-1/2}(b): for odd a, b."""

    a: LatticeVector
    b: LatticeVector
    n: int

    def apply(self, ts: TensorState) -> TensorState:
        return _map_lattice(lambda s: normal_ordered_pair_sum(self.a, self.b, self.n, s), ts)

    def parity(self, M=None) -> int:
        return 0


@dataclass(frozen=True)
class VertexProductSum:
    """sum_k X_{idx-k}(a) X_k(delta_mu), the dressed vertex mode."""

    a: LatticeVector
    mu: tuple
    index: int  # doubled

    def apply(self, ts: TensorState) -> TensorState:
        if ts.is_zero():
            return ts
        M, q = ts.lattice_shape()
        dm = LatticeConfig(M, q).delta_sum(self.mu)
        return _map_lattice(lambda s: vertex_product_sum(self.a, dm, self.index, s), ts)

    def parity(self, M=None) -> int:
        return bilinear(self.a, self.a) % 2


@dataclass(frozen=True)
class OpProduct:
    factors: tuple

    def apply(self, ts: TensorState) -> TensorState:
        for f in reversed(self.factors):
            ts = f.apply(ts)
        return ts

    def parity(self, M=None):
        total = 0
        for f in self.factors:
            p = f.parity(M)
            if p is None:
                return None
            total += p
        return total % 2


@dataclass(frozen=True)
class OpSum:
    terms: tuple  # of (Fraction, operator)

    def apply(self, ts: TensorState) -> TensorState:
        out = TensorState.zero()
        for c, op in self.terms:
            out = out + c * op.apply(ts)
        return out

    def parity(self, M=None):
        seen = set()
        for _, op in self.terms:
            seen.add(op.parity(M))
        if not seen:
            return 0
        return seen.pop() if len(seen) == 1 and None not in seen else None


def apply(op, ts: TensorState) -> TensorState:
    """Evaluate a symbolic operator on a state, exactly."""
    return op.apply(ts)


def s_mode_apply(family: str, i: int, j: int, mu, n: int, ts: TensorState) -> TensorState:
    """Apply the S-family mode named by family, validating the index shape."""
    if ts.is_zero():
        return ts
    M, _ = ts.lattice_shape()
    op = SOp(i, j, tuple(mu), n)
    if op.family(M) != family:
        raise ValueError(f"indices ({i},{j}) with M={M} are family {op.family(M)}, not {family}")
    return op.apply(ts)


def rho(x, cfg: LatticeConfig) -> OpSum:
    """The representation dictionary on toroidal elements.

    T_ij (x) t^mbar goes to the X-mode of alpha_ij + delta_mu (i != j both
    <= M), to the dressed diagonal current for i = j <= M, and to the S
    mode when an index passes M; t^mbar K_i goes to the dressed current
    of delta_i (i < q) and to the X-mode of delta_mu (i = q).
    """
    M, q = cfg.M, cfg.q
    terms = []
    for key, c in x.sorted_terms():
        if key[0] == "T":
            _, i, j, mbar = key
            if len(mbar) != q:
                raise ValueError("exponent length does not match q")
            mq = mbar[-1]
            mu = tuple(mbar[:-1])
            if i <= M and j <= M:
                if i != j:
                    op = VertexMode(cfg.root(i, j) + cfg.delta_sum(mu), 2 * mq)
                else:
                    op = DiagCurrent(cfg.e(i), mq, mu)
            else:
                op = SOp(i, j, mu, mq)
        else:
            _, direction, mbar = key
            op = CentralImage(tuple(mbar), direction)
        terms.append((c, op))
    return OpSum(tuple(terms))


def super_commutator(op1, op2, ts: TensorState) -> TensorState:
    """[op1, op2] s = op1 op2 s - (-1)^{|op1||op2|} op2 op1 s."""
    shape = ts.lattice_shape()
    M = shape[0] if shape else None
    p1 = op1.parity(M)
    p2 = op2.parity(M)
    if p1 is None or p2 is None:
        raise ValueError("super commutator needs homogeneous operators")
    sign = -1 if (p1 and p2) else 1
    return op1.apply(op2.apply(ts)) - sign * op2.apply(op1.apply(ts))
