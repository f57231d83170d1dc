"""Rational models over the field of moduli.

Given a dihedral tuple with coefficients in a field k, the model formulas
produce a curve defined over k with that tuple.  Each emitted model is
checked by recomputing all of its tuples; when a formula misses the point a
model derived from the family parametrisation is attached instead.
"""
from octavic.dihedral import DihedralTuple
from octavic.models import emit_model, field_of_moduli_report
from octavic.parse import parse_curve

cases = [
    (DihedralTuple.W(9), (16, 11)),
    (DihedralTuple.U(2, 5, 2), (8, 5)),
    (DihedralTuple.U(-2, 0, 2), (8, 2)),
]
for t, ident in cases:
    m = emit_model(t, ident)
    v = m.verification
    print(f"{t} in {ident}: case {m.case_id}, y^2 = {m.rhs}")
    print(f"    verdict {v.verdict}; model tuples {', '.join(map(str, v.computed))}")
    if v.corrected is not None:
        print(f"    corrected: y^2 = {v.corrected}  ({v.derivation})")

for f in ("x^7 - 1", "x^8 + x^6 + 2*x^4 + 3*x^2 + 1", "x^8 + x^3 + 2*x + 7"):
    r = field_of_moduli_report(parse_curve(f).curve())
    print(f"\n{f}: |Aut| = {r['order']}, {r['status']}: {r['note']}")
