"""Compare the three barrier profiles.

The step is abrupt, the tanh barrier is symmetric about its midpoint, and
the Lambert-W barrier is asymmetric: it closes exponentially fast on the
right but opens only algebraically (V ~ V0 sigma/|x|) on the left.  Run:

    python demos/barrier_shapes.py [--plot]
"""

import sys

import numpy as np

from kgscatter import Barrier, ScatteringConfig, potential_value

V0 = 3.0
CONFIGS = {
    "step": ScatteringConfig(E=5.0, barrier=Barrier.STEP, V0=V0),
    "tanh (b=0.5)": ScatteringConfig(E=5.0, barrier=Barrier.TANH, V0=V0, b=0.5),
    "Lambert-W (sigma=0.15)": ScatteringConfig(
        E=5.0, barrier=Barrier.LAMBERTW, V0=V0, sigma=0.15
    ),
}

xs = np.linspace(-6.0, 6.0, 25)
print(f"{'x':>8} " + " ".join(f"{name:>22}" for name in CONFIGS))
for x in xs:
    vals = [potential_value(cfg, float(x)) for cfg in CONFIGS.values()]
    print(f"{x:8.2f} " + " ".join(f"{v:22.6f}" for v in vals))

print("\nLeft-tail comparison (the Lambert-W barrier decays only like 1/|x|):")
for L in (10.0, 100.0, 1000.0):
    vals = [potential_value(cfg, -L) for cfg in CONFIGS.values()]
    print(f"  V(-{L:6.0f}) = " + ", ".join(f"{v:.3e}" for v in vals))

if "--plot" in sys.argv:
    import matplotlib.pyplot as plt

    xs = np.linspace(-4.0, 4.0, 400)
    for name, cfg in CONFIGS.items():
        plt.plot(xs, [potential_value(cfg, float(x)) for x in xs], label=name)
    plt.xlabel("x")
    plt.ylabel("V(x)")
    plt.legend()
    plt.title("Potential barriers, V0 = 3")
    plt.savefig("barrier_shapes.png", dpi=150)
    print("\nwrote barrier_shapes.png")
