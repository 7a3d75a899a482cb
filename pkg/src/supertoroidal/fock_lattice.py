"""Lattice Fock space and exact vertex-operator Fourier modes.

States live in C[Gbar] (x) S(hbar_-): a state is a finitely supported
rational combination of basis vectors

    e^gamma (x) u,    gamma in Gbar,  u a monomial in creation modes b(-n)

with b ranging over the lattice basis and n > 0.  A monomial is stored as
a sorted tuple of (basis index, mode) pairs with repetition.

The Heisenberg algebra acts by multiplication (negative modes), the
derivation sending b(-n) to delta_{m,n} m (a, b) (positive modes), and
the scalar (a, gamma) (zero mode).  The central element acts as 1 and is
never represented.

Vertex operators follow the standard homogeneous construction

    Y(a, z) = e^a z^{a(0)} exp T_-(a, z) exp T_+(a, z),
    T_+-(a, z) = - sum_{n in Z_+-} (1/n) a(n) z^{-n},

with Fourier modes X_n(a) read off from X(a, z) = z^{(a,a)/2} Y(a, z)
for even a (integer n) and X(a, z) = Y(a, z) for odd a (n in Z - 1/2).
Modes are addressed by a doubled integer index: an even vector's mode n
is stored as 2n and an odd vector's mode n - 1/2 as 2n - 1.

Every mode application is exact and finite: exp T_+ terminates because
each step lowers the monomial degree, and only the single creation level
that can reach the requested z-coefficient is expanded from exp T_-.  No
truncation parameter exists anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .lattice import LatticeVector, basis_support, bilinear, cocycle, pair_with_basis

NEG_INF = float("-inf")


def monomial_degree(mono) -> int:
    return sum(n for _, n in mono)


def monomial_insert(mono, factor):
    return tuple(sorted(mono + (factor,)))


def _remove_one(mono, factor):
    out = list(mono)
    out.remove(factor)
    return tuple(out)


def _key_sort(item):
    (gamma, mono), _ = item
    return (gamma.e, gamma.delta, gamma.d, mono)


class LatticeFockState:
    """Finitely supported map (gamma, monomial) -> nonzero rational."""

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
                total = c if acc is None else acc + c
                if total:
                    clean[key] = total
                elif acc is not None:
                    del clean[key]
        self.terms = clean

    @classmethod
    def basis(cls, gamma: LatticeVector, mono=(), coeff=1) -> "LatticeFockState":
        return cls({(gamma, tuple(sorted(mono))): Fraction(coeff)})

    @classmethod
    def vacuum(cls, config) -> "LatticeFockState":
        return cls.basis(config.zero())

    @classmethod
    def zero(cls) -> "LatticeFockState":
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
        s = LatticeFockState.zero()
        s.terms = out
        return s

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if type(scalar) is not Fraction:
            scalar = Fraction(scalar)
        if not scalar:
            return LatticeFockState.zero()
        s = LatticeFockState.zero()
        s.terms = {k: scalar * c for k, c in self.terms.items()}
        return s

    __mul__ = __rmul__

    def __eq__(self, other):
        return isinstance(other, LatticeFockState) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=_key_sort)

    def parity(self):
        """Common parity of all keys, or None for a mixed state."""
        seen = {sum(g.e) % 2 for (g, _) in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def max_degree(self) -> int:
        if not self.terms:
            return 0
        return max(monomial_degree(u) for (_, u) in self.terms)

    def __repr__(self):
        if not self.terms:
            return "LatticeFockState<0>"
        bits = [f"{c} * e^{g!r} (x) {u or 1}" for (g, u), c in self.sorted_terms()]
        return "LatticeFockState<" + " + ".join(bits) + ">"


def heisenberg_apply(a: LatticeVector, m: int, s: LatticeFockState) -> LatticeFockState:
    """Action of the Heisenberg mode a(m) on a state.

    m < 0 multiplies by a(m), m = 0 scales each key by (a, gamma), m > 0
    acts as the derivation contracting one matching factor at a time.
    """
    out = {}
    if m < 0:
        supp = basis_support(a)
        for (gamma, mono), c in s.terms.items():
            for b, w in supp:
                key = (gamma, monomial_insert(mono, (b, -m)))
                inc = c * w
                acc = out.get(key)
                out[key] = inc if acc is None else acc + inc
    elif m == 0:
        for (gamma, mono), c in s.terms.items():
            w = bilinear(a, gamma)
            if w:
                key = (gamma, mono)
                out[key] = out.get(key, 0) + c * w
    else:
        for (gamma, mono), c in s.terms.items():
            seen = set()
            for f in mono:
                if f in seen:
                    continue
                seen.add(f)
                b, n = f
                if n != m:
                    continue
                w = pair_with_basis(a, b)
                if not w:
                    continue
                mult = mono.count(f)
                key = (gamma, _remove_one(mono, f))
                inc = c * (mult * m * w)
                acc = out.get(key)
                out[key] = inc if acc is None else acc + inc
    return LatticeFockState(out)


def group_multiply(a: LatticeVector, s: LatticeFockState) -> LatticeFockState:
    """Twisted group algebra action e^a: (gamma, u) -> F(a, gamma) (a+gamma, u)."""
    out = {}
    for (gamma, mono), c in s.terms.items():
        out[(a + gamma, mono)] = c * cocycle(a, gamma)
    return LatticeFockState(out)


@lru_cache(maxsize=None)
def _partitions(n: int):
    """Partitions of n as tuples of (part, multiplicity), parts descending."""
    if n == 0:
        return ((),)

    def gen(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, maxpart), 0, -1):
            for mult in range(remaining // part, 0, -1):
                for rest in gen(remaining - part * mult, part - 1):
                    yield ((part, mult),) + rest

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def _creation_level(a: LatticeVector, c: int):
    """Coefficient of z^c in exp T_-(a, z) applied to 1.

    Returns a tuple of (added-factors monomial, coefficient) pairs; the
    level-c part is a sum over partitions of c with the usual
    1 / (n^{m_n} m_n!) weights, each a(-n)^{m_n} expanded over the basis.
    """
    supp = basis_support(a)
    total = {}
    for partition in _partitions(c):
        weight = Fraction(1)
        terms = {(): Fraction(1)}
        for part, mult in partition:
            fact = 1
            for k in range(1, mult + 1):
                fact *= k
            weight /= Fraction(part) ** mult * fact
            for _ in range(mult):
                nxt = {}
                for mono, cf in terms.items():
                    for b, w in supp:
                        key = monomial_insert(mono, (b, part))
                        nxt[key] = nxt.get(key, 0) + cf * w
                terms = nxt
        for mono, cf in terms.items():
            val = total.get(mono, 0) + weight * cf
            if val:
                total[mono] = val
            elif mono in total:
                del total[mono]
    return tuple(sorted(total.items()))


@lru_cache(maxsize=200_000)
def _exp_annihilation(a: LatticeVector, mono):
    """exp T_+(a, z) applied to a monomial, as {level d: ((mono', coeff), ...)}.

    Level d collects the z^{-d} coefficient.  The series terminates since
    every T_+ application strictly lowers the degree.
    """
    levels = {0: {mono: Fraction(1)}}
    current = {0: {mono: Fraction(1)}}
    j = 0
    while current:
        j += 1
        nxt = {}
        for d, monos in current.items():
            for mo, c in monos.items():
                seen = set()
                for f in mo:
                    if f in seen:
                        continue
                    seen.add(f)
                    b, n = f
                    w = pair_with_basis(a, b)
                    if not w:
                        continue
                    # -(1/n) a(n) contracts mult copies, each worth n*(a,b)
                    key = _remove_one(mo, f)
                    lvl = nxt.setdefault(d + n, {})
                    lvl[key] = lvl.get(key, 0) - c * (mo.count(f) * w)
        current = {}
        for d, monos in nxt.items():
            for mo, c in monos.items():
                c = c / j
                if c:
                    current.setdefault(d, {})[mo] = c
        for d, monos in current.items():
            tgt = levels.setdefault(d, {})
            for mo, c in monos.items():
                t = tgt.get(mo, 0) + c
                if t:
                    tgt[mo] = t
                elif mo in tgt:
                    del tgt[mo]
    return {d: tuple(monos.items()) for d, monos in levels.items() if monos}


def _mode_depth(a: LatticeVector, idx: int) -> int:
    """z-power h with X_idx(a) = coefficient of z^{-h} in Y(a, z)."""
    p = bilinear(a, a)
    if p % 2 == 0:
        if idx % 2:
            raise ValueError(f"even vector {a!r} takes even doubled indices, got {idx}")
        return (idx + p) // 2
    if idx % 2 == 0:
        raise ValueError(f"odd vector {a!r} takes odd doubled indices, got {idx}")
    return (idx + 1) // 2


def vertex_mode_apply(a: LatticeVector, idx: int, s: LatticeFockState) -> LatticeFockState:
    """Apply the Fourier mode with doubled index idx of X(a, .), a in Q.

    Per key e^gamma (x) u the z-coefficient is assembled from annihilation
    level d (bounded by deg u) and the single creation level
    c = d - (a, gamma) - h that lands on the requested power.
    """
    if not a.in_q():
        raise ValueError(f"vertex operators require a in Q, got {a!r}")
    h = _mode_depth(a, idx)
    out = {}
    for (gamma, mono), coeff in s.terms.items():
        shift = bilinear(a, gamma)
        sign = cocycle(a, gamma)
        new_gamma = a + gamma
        for d, monos in _exp_annihilation(a, mono).items():
            c_level = d - shift - h
            if c_level < 0:
                continue
            created = _creation_level(a, c_level)
            for mo, cf in monos:
                base = coeff * sign * cf
                for extra, w in created:
                    key = (new_gamma, tuple(sorted(mo + extra)))
                    inc = base * w
                    acc = out.get(key)
                    out[key] = inc if acc is None else acc + inc
    return LatticeFockState(out)


def vanishing_bound(a: LatticeVector, s: LatticeFockState):
    """Least doubled index bound B with X_k(a) s = 0 for all k > B.

    Per key the bound is 2 (deg u - (a, gamma)) minus the norm for even a
    and minus 1 for odd a; the zero state yields -inf.
    """
    if s.is_zero():
        return NEG_INF
    p = bilinear(a, a)
    drop = p if p % 2 == 0 else 1
    return max(
        2 * (monomial_degree(u) - bilinear(a, g)) - drop for (g, u) in s.terms
    )


def effective_mode_bound(a: LatticeVector, s: LatticeFockState):
    """Sharper doubled-index bound counting only factors a can contract.

    Factors b(-n) with (a, b) = 0 cannot be consumed by the annihilation
    half of the vertex operator, so they do not extend the support of the
    mode family.  Used to clip the infinite mode sums of the toroidal
    operators, where states carry factors orthogonal to a.
    """
    if s.is_zero():
        return NEG_INF
    p = bilinear(a, a)
    drop = p if p % 2 == 0 else 1
    best = NEG_INF
    for (g, u) in s.terms:
        eff = sum(n for (b, n) in u if pair_with_basis(a, b))
        best = max(best, 2 * (eff - bilinear(a, g)) - drop)
    return best


def current_upper_bound(a: LatticeVector, s: LatticeFockState):
    """Largest m > 0 with a(m) s possibly nonzero (0 if none; -inf on 0)."""
    if s.is_zero():
        return NEG_INF
    best = 0
    for (_, u) in s.terms:
        for b, n in u:
            if pair_with_basis(a, b) and n > best:
                best = n
    return best


def vertex_product_sum(a: LatticeVector, dm: LatticeVector, idx: int, s: LatticeFockState) -> LatticeFockState:
    """sum_k X_{idx-k}(a) X_k(dm) s for an isotropic dm orthogonal to a.

    The k sum (doubled, even) is clipped above by the vanishing bound of
    dm on s and below because X(dm) only creates factors a cannot
    contract, so the effective bound of a on s caps idx - k.
    """
    if bilinear(dm, dm) != 0 or bilinear(a, dm) != 0:
        raise ValueError("product sum requires (dm, dm) = (a, dm) = 0")
    hi = vanishing_bound(dm, s)
    lo = idx - effective_mode_bound(a, s)
    total = LatticeFockState.zero()
    if hi == NEG_INF or lo == float("inf"):
        return total
    k = lo if lo % 2 == 0 else lo + 1
    while k <= hi:
        inner = vertex_mode_apply(dm, k, s)
        if not inner.is_zero():
            total = total + vertex_mode_apply(a, idx - k, inner)
        k += 2
    return total


def normal_ordered_pair_sum(a: LatticeVector, b: LatticeVector, n: int, s: LatticeFockState) -> LatticeFockState:
    """sum_k :X_{k+1/2}(a) X_{n-k-1/2}(b): s for odd vectors a, b.

    Normal ordering keeps the written order when k + 1/2 <= n - k - 1/2
    and otherwise swaps the two odd factors with a minus sign.  In each
    term the factor acting first is the one with the larger mode, so the
    sum is clipped by the effective bounds of a and b on s.
    """
    if parity_of(a) != 1 or parity_of(b) != 1:
        raise ValueError("normal ordered pair sum is for odd vectors")
    ba = effective_mode_bound(a, s)
    bb = effective_mode_bound(b, s)
    total = LatticeFockState.zero()
    if ba == NEG_INF or bb == NEG_INF:
        return total
    # doubled indices: first factor 2k+1, second 2(n-k)-1; the written
    # order is kept iff 2k+1 <= 2(n-k)-1, i.e. k <= (n-1)//2
    split = (n - 1) // 2
    keep_lo = n - (bb + 1) // 2  # keep order: second factor acts first
    swap_hi = (ba - 1) // 2  # swapped: first factor acts first
    for k in range(min(keep_lo, split + 1), max(split, swap_hi) + 1):
        i1 = 2 * k + 1
        i2 = 2 * (n - k) - 1
        if k <= split:
            if i2 > bb:
                continue
            total = total + vertex_mode_apply(a, i1, vertex_mode_apply(b, i2, s))
        else:
            if i1 > ba:
                continue
            total = total - vertex_mode_apply(b, i2, vertex_mode_apply(a, i1, s))
    return total


def parity_of(a: LatticeVector) -> int:
    return bilinear(a, a) % 2
