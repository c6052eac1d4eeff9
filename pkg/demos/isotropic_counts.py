"""Counting isotropic subspaces: closed form against exhaustive search.

The number of k-dimensional isotropic subspaces of a 2m-dimensional
symplectic space over F_p has a product formula.  Here we print the
small triangle of values and confirm each one by enumerating the
subspaces themselves.
"""

from symhex.symplectic import SymplecticSpace, count_isotropic, isotropic_subspaces

for p, m_max in ((2, 3), (3, 2)):
    print(f"p = {p}")
    for m in range(1, m_max + 1):
        space = SymplecticSpace.for_length(p, 2 * m)
        row = []
        for k in range(m + 1):
            formula = count_isotropic(p, m, k)
            enumerated = len(list(isotropic_subspaces(space, k)))
            marker = "" if formula == enumerated else "  <-- MISMATCH"
            row.append(f"k={k}: {formula}{marker}")
        print(f"  m={m}:  " + "   ".join(row))
    print()

# the k = m layer is the self-dual one; show the three binary lines at m=1
space = SymplecticSpace.for_length(2, 2)
print("the three isotropic lines of the binary symplectic plane:")
for code in isotropic_subspaces(space, 1):
    v = "".join(str(int(x)) for x in code.gen[0])
    print(f"  <{v}>  self-dual: {space.is_self_dual(code)}")
