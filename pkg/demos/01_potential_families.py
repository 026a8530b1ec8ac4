"""Tour of the potential families and their algebra.

Evaluates the log-corrected alternating potential, splits it into its
critical part and envelope, shows the negation involution, and round-trips a
tabulated potential through a text file.
"""

import math
import tempfile
from pathlib import Path

from vnwlab import potentials as P

spec = P.log_corrected_vnw(2.0)
print("log-corrected alternating potential, c = 2:")
for n in (1, 2, 3, 4, 5, 10, 100, 10 ** 6):
    print(f"  V({n}) = {P.eval_potential(spec, n): .12g}")

print("\nsplit into critical part + envelope at n = 4:")
s = P.split_vnw(spec, 4)
print(f"  v0 = {s.v0}, w = {s.w},  v0 + w = {s.v0 + s.w}")
print(f"  eval_potential agrees: {P.eval_potential(spec, 4)}")

neg = P.negate(spec)
print("\nnegation flips the sign pointwise and is an involution:")
print(f"  V(3) = {P.eval_potential(spec, 3):.6f}, -V(3) = {P.eval_potential(neg, 3):.6f}")
print(f"  negate(negate(V))(3) = {P.eval_potential(P.negate(neg), 3):.6f}")

print("\ndecay law: n|V(n)| -> 1 like 1 + 2/ln n")
for n in (10, 100, 10 ** 4, 10 ** 6):
    print(f"  n = {n:>8}: n|V(n)| = {n * abs(P.eval_potential(spec, n)):.6f}"
          f"  (1 + 2/ln n = {1 + 2 / math.log(n):.6f})")

with tempfile.TemporaryDirectory() as td:
    path = Path(td) / "table.txt"
    path.write_text("0.5\n-0.25\n0.125\n")
    tab = P.load_table(path)
    print(f"\ntable potential from {path.name}: "
          f"{[P.eval_potential(tab, n) for n in (1, 2, 3)]}")
