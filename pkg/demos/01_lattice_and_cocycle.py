"""Tour of the lattice layer: the bilinear form, parity, and the sign
cocycle that twists the group algebra.

Run:  python demos/01_lattice_and_cocycle.py
"""

from itertools import product

from supertoroidal import LatticeConfig, LatticeVector, bilinear, cocycle, parity

# a rank-3 e-block with two toroidal directions (q = 3)
cfg = LatticeConfig(M=3, q=3)
print(f"lattice rank = {cfg.rank}  (3 e's, 2 deltas, 2 d's)\n")

# the Gram table on the basis
basis = [cfg.e(1), cfg.e(2), cfg.e(3), cfg.delta(1), cfg.delta(2), cfg.dgen(1), cfg.dgen(2)]
names = ["e1", "e2", "e3", "de1", "de2", "d1", "d2"]
print("Gram matrix:")
print("     " + "".join(f"{n:>4}" for n in names))
for n, v in zip(names, basis):
    print(f"{n:>4} " + "".join(f"{bilinear(v, w):>4}" for w in basis))

# parities: odd norm means an odd vector
print("\nparities:")
for n, v in zip(names, basis):
    print(f"  {n}: norm {bilinear(v, v)}, parity {parity(v)}")
alpha = cfg.e(1) - cfg.e(2)
print(f"  e1-e2: norm {bilinear(alpha, alpha)}, parity {parity(alpha)}")

# the cocycle on e-pairs: +1 above the diagonal, -1 below
print("\ncocycle on basis pairs F(e_i, e_j):")
for i in range(1, 4):
    print("  " + " ".join(f"{cocycle(cfg.e(i), cfg.e(j)):+d}" for j in range(1, 4)))

# the sign law F(a,b) F(b,a) = (-1)^{(a,b) + |a||b|}, checked on a box
box = [LatticeVector(v) for v in product((-1, 0, 1), repeat=3)]
violations = 0
for a in box:
    for b in box:
        lhs = cocycle(a, b) * cocycle(b, a)
        if lhs != (-1) ** (bilinear(a, b) + parity(a) * parity(b)):
            violations += 1
print(f"\nsign law checked on {len(box)**2} pairs: {violations} violations")

# bimultiplicativity makes negated arguments automatic
a, b = cfg.e(1), cfg.e(2)
print(f"F(e1, -e2) = {cocycle(a, -b)} = F(e1, e2) = {cocycle(a, b)}")
