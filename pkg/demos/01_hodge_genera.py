"""Hodge number tables and their genera.

A walk through the two generating functions attached to a virtual Hodge
table: the two-variable E-polynomial and its one-variable specialization
chi_y, including the classical counterexample showing why only chi_y can be
a characteristic number.
"""

from fractions import Fraction

from hirzebruch import HodgeDiamond, render_uv, render_y

print("== Tate classes ==")
Q0 = HodgeDiamond.tate(0)
Q1 = HodgeDiamond.tate(-1)
print("unit class:        E =", render_uv(Q0.e_polynomial()))
print("Lefschetz class:   E =", render_uv(Q1.e_polynomial()),
      "  chi_y =", render_y(Q1.chi_y()))
print("its square:        E =", render_uv(Q1.tensor(Q1).e_polynomial()))

print()
print("== An elliptic curve ==")
# full cohomology: 1 in degree 0, two odd classes, 1 in degree 2
elliptic = HodgeDiamond({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
print("table entries:", elliptic.triples())
print("E  =", render_uv(elliptic.e_polynomial()))
print("chi_y =", render_y(elliptic.chi_y()))
print()
print("The E-polynomial (1-u)(1-v) is nonzero, yet every unramified")
print("d-fold cover of an elliptic curve is again an elliptic curve with")
print("the same E value; a characteristic number would have to scale by d.")
print("chi_y resolves this by vanishing identically on elliptic curves.")

print()
print("== Duality and twisting ==")
print("dual of the Lefschetz class:", Q1.dual().triples())
d = HodgeDiamond({(2, 1): 3, (1, 2): 3}, pure_weight=3)
print("a pure weight-3 table:", d.triples())
print("chi_y:", render_y(d.chi_y()), " after dualizing:", render_y(d.dual().chi_y()))
print("(the substitution y -> 1/y, exactly)")
print("Tate twist shifts the table:", d.tate_twist(-1).triples())

print()
print("== Specialization values ==")
p2 = HodgeDiamond({(0, 0): 1, (1, 1): 1, (2, 2): 1})
chi = p2.chi_y()
print("projective plane: chi_y =", render_y(chi))
print("  y=-1 (Euler characteristic):", chi(Fraction(-1)))
print("  y=0  (arithmetic genus):    ", chi(Fraction(0)))
print("  y=1  (signature):           ", chi(Fraction(1)))
