"""The finite superalgebra, its invariant form, and the toroidal bracket.

Run:  python demos/04_superalgebra_and_tables.py
"""

from itertools import product

from supertoroidal import GLElement, Superalgebra, ToroidalElement, d_cocycle

alg = Superalgebra(M=2, N=2)

print("sample brackets (T_ij with i or j beyond M=2 is odd):")
print(f"  [T12, T21]   = {alg.bracket((1, 2), (2, 1))}")
print(f"  [T31, T13]   = {alg.bracket((3, 1), (1, 3))}   (anticommutator)")
print(f"  [T11, T34]   = {alg.bracket((1, 1), (3, 4))}")

print("\nsupertrace separates the blocks:")
print(f"  str T11 = {alg.supertrace(GLElement.symbol(1, 1))}")
print(f"  str T33 = {alg.supertrace(GLElement.symbol(3, 3))}")
print(f"  T11 + T33 lies in sl: {alg.in_sl(GLElement.symbol(1, 1) + GLElement.symbol(3, 3))}")

# the super Jacobi identity, exhaustively
syms = list(alg.symbols())
bad = sum(not alg.jacobi_check(x, y, z) for x, y, z in product(syms, repeat=3))
print(f"\nsuper Jacobi on all {len(syms) ** 3} ordered triples: {bad} violations")

# the toroidal bracket adds a central 2-cocycle valued in t^m K_i, taken
# modulo the exact differentials sum_i m_i t^m K_i
x = ToroidalElement.t(1, 2, (1, 1))
y = ToroidalElement.t(2, 1, (-1, -1))
print(f"\n[T12 t^(1,1), T21 t^(-1,-1)] = {alg.bracket_toroidal(x, y)}")

m, n = (2, 1), (0, -1)
print(f"d(t^{m}) t^{n} = {d_cocycle(m, n)}")
print(f"antisymmetric mod exact forms: {(d_cocycle(m, n) + d_cocycle(n, m)).is_zero()}")

# central elements are central
k = ToroidalElement.k(1, (0, 0))
print(f"[K1, T12 t^(1,1)] = {alg.bracket_toroidal(k, x)}")
