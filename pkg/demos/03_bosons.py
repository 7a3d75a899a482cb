"""The boson Fock space: free creation, contracting annihilation.

Run:  python demos/03_bosons.py
"""

from supertoroidal import BosonState, depth, phi_apply, phi_star_apply

vac = BosonState.vacuum()
print(f"vacuum: {vac}, depth {depth(vac)}")

# creation modes act freely; modes r <= 0 create (index r - 1/2)
s = phi_apply(1, 0, phi_star_apply(2, -1, vac))
print(f"phi^1_(-1/2) phi*^2_(-3/2) |0> = {s}, depth {depth(s)}")

# annihilators kill the vacuum ...
print(f"phi^1_(1/2) |0> = {phi_apply(1, 1, vac)}")

# ... and contract against matching creators with the central sign
created = phi_star_apply(1, 0, vac)
print(f"phi^1_(1/2) phi*^1_(-1/2)|0> = {phi_apply(1, 1, created)}  (the -1 contraction)")
created = phi_apply(1, 0, vac)
print(f"phi*^1_(1/2) phi^1_(-1/2)|0> = {phi_star_apply(1, 1, created)}  (the +1 rearrangement)")
print(f"flavor mismatch gives zero:   {phi_star_apply(2, 1, created)}")

# the three commutation families, spot checked on a messy state
t = phi_apply(2, -1, phi_star_apply(1, 0, phi_apply(1, 0, vac)))
for r in range(-2, 3):
    for s_idx in range(-2, 3):
        c = phi_apply(1, r, phi_apply(2, s_idx, t)) - phi_apply(2, s_idx, phi_apply(1, r, t))
        assert c.is_zero()
        mixed = phi_apply(1, r, phi_star_apply(1, s_idx, t)) - phi_star_apply(
            1, s_idx, phi_apply(1, r, t)
        )
        expected = (-1 if r + s_idx == 1 else 0) * t
        assert mixed == expected
print("\ncommutation relations verified on a 25-point mode box")
