"""Cut-and-paste calculus in the Grothendieck ring of varieties.

Classes of varieties obey the scissor relation [X] = [Y] + [X \\ Y] for a
closed subvariety Y.  Carried by their Hodge realizations, these classes
support exact genus computations for everything we can cut out of
projective spaces, tori, and curves.
"""

from hirzebruch import motivic as mo
from hirzebruch import render_uv, render_y

print("== Atoms ==")
for cls in (mo.point(), mo.lefschetz(), mo.torus(), mo.projective(2), mo.curve(2)):
    print(f"{str(cls):>4}:  E = {render_uv(cls.e_polynomial())}")

print()
print("== Scissor relations ==")
print("P1 - pt == L:", mo.projective(1) - mo.point() == mo.lefschetz())
print("A1 - pt == Gm:", mo.affine(1) - mo.point() == mo.torus())
pn = mo.point()
for n in range(1, 4):
    pn = mo.affine(n) + pn
    print(f"A^{n} + P^{n-1} == P^{n}:", pn == mo.projective(n))

print()
print("== Hyperplane arrangement complements ==")
for k in range(4):
    u = mo.arrangement_complement(2, k)
    print(f"P2 minus {k} general lines: {str(u):<22} E = {render_uv(u.e_polynomial())}")

print()
print("== Duality ==")
p1 = mo.projective(1)
print("dual of [P1]:", p1.dual().realization.triples(), " (this is L^(-1) [P1])")
print("involution:", p1.dual().dual() == p1)
c2 = mo.curve(2)
print("product compatibility:", (p1 * c2).dual() == p1.dual() * c2.dual())

print()
print("== Compactly supported genus of torus powers ==")
for n in range(1, 4):
    t = mo.torus() ** n
    print(f"Gm^{n}: chi^c_y = {render_y(t.chi_y())}")
