"""Dihedral invariants of an even octavic and what they detect.

A curve y^2 = x^8 + a3 x^6 + a2 x^4 + a1 x^2 + 1 has the extra involution
x -> -x.  Its dihedral tuple U(u1, u2, u3) does not depend on the choice of
normal form, and the two branches 2u1 = u3^2 and 2u1 = -u3^2 of the D4
condition separate Z2^3 from Z2 x Z4.
"""
from octavic import classify, isomorphic
from octavic.dihedral import (
    HyperellipticCurve, NormalForm3, branch_relations, subcover_equations, tuple_from_even,
    tuple_from_normal,
)
from octavic.exact import ExactPoly


def _poly(cs):
    # (c4, c3, c2, c1, c0) -> c4 x^8 + c3 x^6 + c2 x^4 + c1 x^2 + c0
    return ExactPoly.from_coeffs([cs[4], 0, cs[3], 0, cs[2], 0, cs[1], 0, cs[0]])


n = NormalForm3(1, 2, 3)
t = tuple_from_normal(n)
print("curve   ", n.octavic())
print("tuple   ", t, " M =", t.M)

# The same curve in other normal forms: a1 <-> a3 and the twist a_k -> (-1)^k a_k.
for m in (NormalForm3(3, 2, 1), NormalForm3(-1, 2, -3), NormalForm3(-3, 2, -1)):
    print("  ", m.octavic(), "->", tuple_from_normal(m))
print("isomorphic to the swapped form:",
      isomorphic(HyperellipticCurve(n.octavic()), HyperellipticCurve(NormalForm3(3, 2, 1).octavic())))

# The genus-1 and genus-2 quotients.
e, g = subcover_equations(n)
print("quotients: y^2 =", e, " and  y^2 =", g)

# Plus branch: a palindromic octavic, 2u1 = u3^2, group Z2^3.
# Minus branch: (x^4 - 1)(x^4 + 3x^2 + 1), 2u1 = -u3^2 and u2 = 0, group Z2 x Z4.
for name, cs in (("2x^8+2x^6+5x^4+2x^2+2", (2, 2, 5, 2, 2)),
                 ("(x^4-1)(x^4+3x^2+1)", (1, 3, 0, -3, -1)),
                 ("x^8+3x^6+2x^4+x^2+1", (1, 3, 2, 1, 1))):
    t = tuple_from_even(*cs)
    rel = branch_relations(t)
    side = "plus branch" if rel.plus_branch else "minus branch" if rel.minus_branch else "neither"
    print(f"{name:24s} {str(t):28s} {side:13s} {classify(HyperellipticCurve(_poly(cs))).group_name}")
