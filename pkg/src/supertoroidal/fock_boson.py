"""Bosonic Fock space on 2N fields phi^j, phi^{j*} over a vacuum.

Modes phi^j_{r-1/2} and phi^{j*}_{s-1/2} commute among themselves and
with each other except for the central contraction

    phi^i_{r-1/2} phi^{j*}_{s-1/2} - phi^{j*}_{s-1/2} phi^i_{r-1/2}
        = -delta_{r+s-1,0} delta_{ij}.

Rearranged, moving a phi* annihilator past a phi creator produces
+delta_{r+s-1,0} delta_{ij}; that derived sign is used below.

Modes with r <= 0 are creation operators and act freely; modes with
r >= 1 annihilate the vacuum.  A basis state is an unordered pair of
multisets of creation modes (no sign ever arises from reordering), and
a mode index is stored doubled: phi_{r-1/2} <-> 2r - 1, so creators
carry negative odd doubled indices.
"""

from __future__ import annotations

from fractions import Fraction

NEG_INF = float("-inf")


def _insert(modes, item):
    return tuple(sorted(modes + (item,)))


def _remove_one(modes, item):
    out = list(modes)
    out.remove(item)
    return tuple(out)


class BosonState:
    """Finitely supported map (phi multiset, phi* multiset) -> rational."""

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
    def vacuum(cls, coeff=1) -> "BosonState":
        return cls({((), ()): Fraction(coeff)})

    @classmethod
    def basis(cls, phi=(), phi_star=(), coeff=1) -> "BosonState":
        for flavor, k in tuple(phi) + tuple(phi_star):
            if k >= 0 or k % 2 == 0:
                raise ValueError(f"creation modes are negative odd doubled ints, got {k}")
            if flavor < 1:
                raise ValueError(f"flavors are 1-based, got {flavor}")
        return cls({(tuple(sorted(phi)), tuple(sorted(phi_star))): Fraction(coeff)})

    @classmethod
    def zero(cls) -> "BosonState":
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
        s = BosonState.zero()
        s.terms = out
        return s

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if type(scalar) is not Fraction:
            scalar = Fraction(scalar)
        if not scalar:
            return BosonState.zero()
        s = BosonState.zero()
        s.terms = {k: scalar * c for k, c in self.terms.items()}
        return s

    __mul__ = __rmul__

    def __eq__(self, other):
        return isinstance(other, BosonState) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "BosonState<0>"
        bits = [f"{c} * phi{list(p)} phi*{list(ps)} |0>" for (p, ps), c in self.sorted_terms()]
        return "BosonState<" + " + ".join(bits) + ">"


def _check_flavor(j: int, num_flavors):
    if j < 1 or (num_flavors is not None and j > num_flavors):
        hi = num_flavors if num_flavors is not None else "inf"
        raise ValueError(f"flavor {j} out of range 1..{hi}")


def phi_apply(j: int, r: int, s: BosonState, num_flavors=None) -> BosonState:
    """Apply phi^j_{r-1/2}.  r <= 0 creates; r >= 1 contracts against
    matching phi* creators with a -1 each and kills the vacuum."""
    _check_flavor(j, num_flavors)
    k = 2 * r - 1
    out = {}
    if r <= 0:
        for (phi, phis), c in s.terms.items():
            out[(_insert(phi, (j, k)), phis)] = c
    else:
        target = (j, -k)
        for (phi, phis), c in s.terms.items():
            mult = phis.count(target)
            if mult:
                key = (phi, _remove_one(phis, target))
                inc = c * (-mult)
                acc = out.get(key)
                out[key] = inc if acc is None else acc + inc
    return BosonState(out)


def phi_star_apply(j: int, r: int, s: BosonState, num_flavors=None) -> BosonState:
    """Apply phi^{j*}_{r-1/2}; the contraction against phi creators is +1."""
    _check_flavor(j, num_flavors)
    k = 2 * r - 1
    out = {}
    if r <= 0:
        for (phi, phis), c in s.terms.items():
            out[(phi, _insert(phis, (j, k)))] = c
    else:
        target = (j, -k)
        for (phi, phis), c in s.terms.items():
            mult = phi.count(target)
            if mult:
                key = (_remove_one(phi, target), phis)
                inc = c * mult
                acc = out.get(key)
                out[key] = inc if acc is None else acc + inc
    return BosonState(out)


def depth(s: BosonState):
    """Max doubled creation-mode magnitude; annihilators beyond it act as 0.

    The vacuum has depth 0 and the zero state returns -inf.
    """
    if s.is_zero():
        return NEG_INF
    best = 0
    for (phi, phis) in s.terms:
        for _, k in phi + phis:
            if -k > best:
                best = -k
    return best
