"""Reflection and transmission across the three energy regions.

For V0 = 3, m = 1 the energy axis splits into

    1 < E < 2   superradiant:  mu < 0, so R > 1 and T < 0 (pair creation
                at the barrier: the reflected current exceeds the incident
                one while the transmitted current runs backwards),
    2 < E < 4   evanescent:    the transmitted wave decays, R = 1, T = 0,
    E > 4       transmissive:  ordinary scattering, 0 < R, T < 1.

Unitarity R + T = 1 holds everywhere.  Run:

    python demos/superradiance_sweep.py [--plot]
"""

import sys

import numpy as np

from kgscatter import SingularEnergyError, lambertw_rt, step_rt, tanh_rt

M, V0 = 1.0, 3.0


def all_rt(E):
    out = {}
    for name, fn in (
        ("step", lambda e: step_rt(e, M, V0)),
        ("tanh", lambda e: tanh_rt(e, M, V0, 0.5)),
        ("lambertw", lambda e: lambertw_rt(e, M, V0, 0.15)),
    ):
        try:
            out[name] = fn(E)
        except SingularEnergyError:
            out[name] = None
    return out


grid = np.linspace(1.05, 6.0, 34)
print(f"{'E':>6} | " + " | ".join(f"{n:>24}" for n in ("step R,T", "tanh R,T", "lambertw R,T")))
for E in grid:
    cells = []
    for name in ("step", "tanh", "lambertw"):
        rt = all_rt(float(E))[name]
        cells.append("       (singular)       " if rt is None else f"{rt.R:11.5f},{rt.T:12.5f}")
    print(f"{E:6.3f} | " + " | ".join(cells))

print("\nNote the superradiant band: R > 1 with T < 0, yet R + T = 1.")
print("The step and Lambert-W closed forms diverge at E = V0/2 = 1.5;")
print("the tanh barrier (finite smoothness) stays finite there.")

if "--plot" in sys.argv:
    import matplotlib.pyplot as plt

    es = np.linspace(1.05, 6.0, 600)
    fig, axes = plt.subplots(1, 2, figsize=(11, 4))
    for name in ("step", "tanh", "lambertw"):
        rs, ts = [], []
        for E in es:
            rt = all_rt(float(E))[name]
            rs.append(rt.R if rt else np.nan)
            ts.append(rt.T if rt else np.nan)
        axes[0].plot(es, rs, label=name)
        axes[1].plot(es, ts, label=name)
    axes[0].set_ylim(-0.1, 8)
    axes[1].set_ylim(-8, 1.2)
    for ax, label in zip(axes, ("R", "T")):
        ax.axvline(2.0, color="gray", lw=0.5)
        ax.axvline(4.0, color="gray", lw=0.5)
        ax.set_xlabel("E")
        ax.set_ylabel(label)
        ax.legend()
    fig.suptitle("Reflection and transmission, V0 = 3, m = 1")
    fig.savefig("superradiance_sweep.png", dpi=150)
    print("\nwrote superradiance_sweep.png")
