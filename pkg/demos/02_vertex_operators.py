"""Vertex operator modes acting on the lattice Fock space, exactly.

Every displayed state is computed with rational arithmetic; there is no
truncation anywhere.  Doubled mode indices are used throughout: an even
vector's mode n is 2n, an odd vector's mode n - 1/2 is 2n - 1.

Run:  python demos/02_vertex_operators.py
"""

from supertoroidal import (
    LatticeConfig,
    LatticeFockState,
    heisenberg_apply,
    vanishing_bound,
    vertex_mode_apply,
    vertex_product_sum,
)

cfg = LatticeConfig(M=2, q=2)
vac = LatticeFockState.vacuum(cfg)
alpha = cfg.root(1, 2)  # e1 - e2, an even root

print("creation tail of X(e1-e2, z) on the vacuum:")
for n in range(1, 4):
    img = vertex_mode_apply(alpha, -2 * n, vac)  # doubled index, mode -n
    print(f"  X_{-n}(e1-e2) vac = {img}")

print("\nannihilation side is empty beyond the vanishing bound:")
print(f"  doubled bound on vacuum = {vanishing_bound(alpha, vac)}")
print(f"  X_0(e1-e2) vac = {vertex_mode_apply(alpha, 0, vac)}")

# a state with a monomial: the mode can contract it
s = LatticeFockState.basis(cfg.zero(), ((0, 1),))  # e1(-1) on vacuum
print(f"\ns = {s}")
print(f"  X_0(e1-e2) s = {vertex_mode_apply(alpha, 0, s)}")

# odd vectors carry half-integer modes
e1 = cfg.e(1)
print(f"\nX_(-1/2)(e1) vac = {vertex_mode_apply(e1, -1, vac)}")

# the Heisenberg modes generate the monomial part
t = heisenberg_apply(e1, -2, heisenberg_apply(e1, -1, vac))
print(f"e1(-2) e1(-1) vac = {t}")
print(f"e1(1) of that     = {heisenberg_apply(e1, 1, t)}")

# isotropic directions dress vertex operators multiplicatively:
# sum_k X_{idx-k}(alpha) X_k(delta_mu) equals X_idx(alpha + delta_mu)
dm = cfg.delta_sum((1,))
lhs = vertex_product_sum(alpha, dm, -2, s)
rhs = vertex_mode_apply(alpha + dm, -2, s)
print(f"\ndressing by delta: product sum == shifted mode? {lhs == rhs}")
print(f"  value: {lhs}")
