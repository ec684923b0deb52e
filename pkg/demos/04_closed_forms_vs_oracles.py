"""Compare the published closed forms against the brute-force oracles.

The three resistance/spanning-tree formulas agree exactly with the
oracles at every size tested.  The two distance-index polynomials do
not: the oracle adjudicates, and the per-class records localize where
the published derivation slipped.
"""

from chaindex import build_crossed_chain
from chaindex import formulas, oracles, verify

print("closed form vs oracle, exact equality:")
print(f"{'n':>2} {'kf ok':>6} {'kf* ok':>7} {'tau ok':>7} "
      f"{'W claim':>8} {'W oracle':>9} {'Gut claim':>10} {'Gut oracle':>11}")
for n in range(1, 6):
    g = build_crossed_chain(n)
    bundle = oracles.index_bundle(g)
    print(f"{n:>2} {str(bundle.kf == formulas.kirchhoff_closed(n)):>6} "
          f"{str(bundle.kf_star == formulas.degree_kirchhoff_closed(n)):>7} "
          f"{str(bundle.tau == formulas.spanning_trees_closed(n)):>7} "
          f"{str(formulas.wiener_claim(n)):>8} {bundle.wiener:>9} "
          f"{formulas.gutman_claim(n):>10} {bundle.gutman:>11}")

print("\nthe distance-index gaps are systematic:")
for n in range(1, 6):
    g = build_crossed_chain(n)
    w_gap = formulas.wiener_claim(n) - oracles.wiener_index(g)
    gut_gap = formulas.gutman_claim(n) - oracles.gutman_index(g)
    print(f"   n={n}: claim - oracle = {w_gap} (wiener), {gut_gap} (gutman)")

print("\nper-class adjudication at n=2 (claimed vs computed):")
report = verify.run_verification(2, 2)
for record in report.records:
    if record.claim_id.startswith(("wiener.class", "gutman.class")):
        marker = "  <-- mismatch" if record.status == verify.MISMATCH else ""
        print(f"   {record.claim_id:28s} {record.claimed:>8} vs {record.computed:>8}{marker}")

print("\nfull summary of all claims at n=2:", report.summary)
