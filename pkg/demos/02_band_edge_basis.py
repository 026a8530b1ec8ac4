"""The closed-form basis at the band edge of the critical problem.

The growing solution is a running product over odd reciprocals, constant on
site pairs; its Wronskian partner is C_n * phihat_n with C ~ ln n.  The
tables are kept in double-double, so the Wronskian holds to ~1e-24.
"""

import math

from vnwlab import transfer as T

print("raw product values phi(0..7):")
print(" ", [T.phi(n)[0] for n in range(8)])

print("\nWallis normalization: phi_{2m}/sqrt(2m) -> kappa = sqrt(pi/2)")
for m in (10, 10 ** 2, 10 ** 4, 10 ** 6):
    v, _ = T.phi(2 * m)
    print(f"  m = {m:>8}: ratio = {v / math.sqrt(2 * m):.10f}   "
          f"(kappa = {T.KAPPA:.10f})")

print("\npartner coefficient approaches ln n (anchored far out):")
for n in (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5):
    print(f"  n = {n:>7}: C_n - ln n = {T.c_seq(n) - math.log(n): .3e}")
print(f"  anchor stability vs n_ref = 1e7: {T.anchor_stability():.2e}")

print("\nidentities over the first million sites:")
print(f"  max recursion residual of phi: {T.phi_recursion_residual(10 ** 6):.2e}")
print(f"  max |Wronskian - 1| (double-double): {T.wronskian_max_deviation(2, 10 ** 6):.2e}")

rep = T.lemma21_check(100, 10 ** 6)
print(f"\ngrowth-law error |phi - kappa sqrt(2m)| sqrt(m): "
      f"sup {rep.phi_error.sup:.4f}, mid-decade median {rep.phi_error.median_mid:.4f}")
