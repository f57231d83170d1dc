"""Check the published formulas against computation.

Every formula below is recomputed from scratch: loci are eliminated from the
family parametrisations, closed forms are compared with the transvectant
pipeline, and special points are evaluated in exact arithmetic.  Verdicts
are match, mismatch (with the derived replacement) or unverifiable.
"""
from octavic.reconcile import reconciliation_report

rep = reconciliation_report(j_samples=10, include_models=True)
for item in rep["items"]:
    print(f"[{item['verdict']:>12s}] {item['key']}")
    print(f"               claim:   {item['claim'][:100]}")
    if "derived" in item:
        print(f"               derived: {item['derived'][:100]}")
print("\nsummary:", rep["summary"])
