"""
Dimension of (K_n x P_m) o K1
=============================

n = 3 needs three landmarks, n >= 4 needs n - 1; the pendants add nothing
over K_n x P_m itself once n >= 4.
"""

from metricdim import all_pairs_distances, is_resolving_set, kn_pm_corona
from metricdim.families import COMPLETE, theorem4_set, verify_lemma4, verify_theorem

for n, m in [(3, 4), (5, 2)]:
    inst = kn_pm_corona(n, m)
    s = theorem4_set(n, m)
    ok = is_resolving_set(all_pairs_distances(inst.graph), [inst.graph.vertex(lab) for lab in s])
    print(f"{inst.name}: {[str(lab) for lab in s]} resolving={ok}")

print(f"{'n':>2} {'m':>2} {'claimed':>8} {'exact':>6} {'checked':>8}")
for n in (3, 4, 5):
    for m in (2, 3, 4):
        rep = verify_theorem(COMPLETE, n, m)
        print(f"{n:>2} {m:>2} {rep.claimed_dim:>8} {rep.exact.dim:>6} {rep.exact.subsets_checked:>8}")

# the product without pendants already has dimension n - 1
print("K_n x P_m:", all(verify_lemma4(n, m) for n in (3, 4, 5) for m in (1, 2, 3)))
