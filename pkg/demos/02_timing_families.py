"""Equidistant vs optimal-interference timing on resonance.

Eight kicks inside a window of three population cycles.  The resonant
dynamics collapses to a single rotation by W * Theta / 2 where Theta is
the alternating sum of the inter-kick intervals, so a timing with
Theta = 0 restores the state exactly, no matter the total time:

  * equidistant, odd count:  Theta = 0, perfect return
  * equidistant, even count: Theta = T / (n + 1), imperfect return
  * udd spacing, any count:  Theta = 0, perfect return

Run:  python3 demos/02_timing_families.py
Writes demos/output/timing_families.png
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from phasekick import (
    SystemParams,
    equidistant,
    theta_from_fractions,
    trajectory,
    transition_probability,
    udd,
)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

T = 6.0 * np.pi
params = SystemParams(1.0, 0.0, T)

print("alternating interval sum Theta (in units of T):")
for n in range(1, 9):
    te = theta_from_fractions(T, equidistant(n)) / T
    tu = theta_from_fractions(T, udd(n)) / T
    print(f"  n={n}: equidistant {te:+.4f}   udd {tu:+.4f}")

fig, ax = plt.subplots(figsize=(9, 4.5))
for frac, label, style in [
    (equidistant(8), "equidistant, 8 kicks", "-"),
    (udd(8), "udd, 8 kicks", "-"),
    (np.empty(0), "no kicks", ":"),
]:
    pts = trajectory(params, frac, samples_per_interval=60)
    ax.plot([q.time / T for q in pts], [q.p_g for q in pts], style, label=label)
    print(f"{label}: final ground population {pts[-1].p_g:.12f}")
ax.set_xlabel("t / T")
ax.set_ylabel("ground population")
ax.set_title("resonant evolution, kicks marked by cusps")
ax.legend(loc="lower left")
fig.tight_layout()
path = os.path.join(OUT, "timing_families.png")
fig.savefig(path, dpi=150)
print("wrote", path)

# parity: even equidistant counts leave a residual rotation
print("\nfinal excited population on resonance (W T = 6 pi):")
for n in range(1, 9):
    p = transition_probability(params, equidistant(n))
    expected = 0.0 if n % 2 else np.sin(T / (2 * n + 2)) ** 2
    print(f"  equidistant n={n}: {p:.3e}   closed form {expected:.3e}")
