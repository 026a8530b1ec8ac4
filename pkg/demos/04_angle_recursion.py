"""The tangent recursion of the solution angle against the stable direction.

Tracks tan(theta_n) under the two-step dynamics: the region t <= 1/ln n is
forward-invariant, the drift inside it is tiny, and the direction eventually
crosses the expanding eigenvector - at which point the solution is about to
lose positivity.
"""

import math

from vnwlab import transfer as T

n0 = T.validity_threshold()
print(f"validity threshold n0 = {n0}")

rep = T.lemma33_check(samples_per_n=32)
print(f"region invariance (t <= 1/ln n maps under 1/ln(n+1)): "
      f"{len(rep.violations)} violations on {len(rep.n_values)} grid sites")

print("\ntrajectory from the region ceiling at n = 100:")
t = 1.0 / math.log(100)
n = 100
marks = {100, 300, 1000, 3000, 10000}
while n < 10 ** 4 + 101:
    if n in marks:
        print(f"  n = {n:>6}: t = {t: .6f}   (ceiling 1/ln n = {1 / math.log(n):.6f})")
    t_next = T.prufer_step(t, n)
    n += 1
    if t_next < 0.0:
        print(f"  n = {n}: crossed the stable direction (t would be {t_next:.2e})")
        break
    t = t_next

print("\npositivity inside the angle cone (signs of y at the site pair):")
for theta in (0.0, 0.5, 1.0, math.pi / 2):
    print(f"  theta = {theta:.3f}: signs = {T.positivity_from_angle(0.0, 1000, theta=theta)}")
ed = T.m_eigendata(1000)
c2n = T.c_seq(2000)
theta_star = math.pi - math.atan((1.0 - ed.a * c2n) / (ed.a + c2n))
print(f"  y_2n flips where the frame expression crosses zero, at "
      f"pi - theta = {math.pi - theta_star:.2e}:")
for eps in (1e-6, -1e-6):
    th = theta_star - eps
    print(f"    theta* {'-' if eps > 0 else '+'} 1e-6: signs = "
          f"{T.positivity_from_angle(0.0, 1000, theta=th)}")
