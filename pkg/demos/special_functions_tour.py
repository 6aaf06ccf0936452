"""Quick tour of the complex special functions backing the closed forms.

Every value printed here is paired with an independent identity so the
output doubles as a sanity check.  Run:

    python demos/special_functions_tour.py
"""

import cmath
import math

from kgscatter import gauss_2f1, heun_c, lambert_w0, log_gamma
from kgscatter.wavefunctions import kg_heun_params

print("Lambert W, principal branch")
print(f"  W(1)        = {lambert_w0(1.0):.15f}   (omega constant)")
for x in (0.5, 10.0, 1e6):
    w = lambert_w0(x)
    print(f"  W({x:<8g}) = {w:.12f}   round-trip w e^w - x = {w*math.exp(w)-x:.1e}")

print("\ncomplex log-Gamma")
g5 = cmath.exp(log_gamma(5.0))
print(f"  Gamma(5)    = {g5.real:.12f}   (4! = 24)")
gi = abs(cmath.exp(log_gamma(1j)))
print(f"  |Gamma(i)|  = {gi:.12f}   identity pi/sinh(pi): "
      f"{math.sqrt(math.pi/math.sinh(math.pi)):.12f}")

print("\nGauss 2F1 with complex parameters")
print(f"  2F1(1,1;2;1/2)      = {gauss_2f1(1, 1, 2, 0.5).real:.12f}   (2 ln 2 = {2*math.log(2):.12f})")
print(f"  2F1(1/2,1/2;3/2;1)  = {gauss_2f1(0.5, 0.5, 1.5, 1.0).real:.12f}   (pi/2 = {math.pi/2:.12f})")
z = -math.exp(2.0)  # outside the unit disk: inversion formula at work
val = gauss_2f1(0.3 + 1.2j, 0.5 - 0.7j, 1.0 + 2.4j, z)
print(f"  2F1(...; z=-e^2)    = {val:.12f}   (analytic continuation)")

print("\nconfluent Heun function (barrier-reduction parameters, E=5, sigma=0.15)")
p = kg_heun_params(5.0, 1.0, 3.0, 0.15)
print(f"  alpha={p.alpha:.6f} beta={p.beta:.6f} gamma={p.gamma.real:g} "
      f"delta={p.delta.real:g} eta={p.eta.real:g}")
for y in (0.0, -0.3, -0.567):
    print(f"  HeunC(y={y:6.3f}) = {heun_c(p, y):.12f}")
print("  (y = -0.567 is the barrier midpoint x = 0: y = -W(1))")
