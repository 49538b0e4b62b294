"""How hard each timing suppresses a detuned transition.

Two views:

1. Five kicks at strong detuning (D = 10 W) over half a Rabi cycle:
   the uniform timing knocks the final transition probability down by
   roughly two orders of magnitude, the udd timing by about five.

2. Transition probability versus kick count at D = W: the udd timing
   falls by many orders of magnitude across n = 2..11 while the uniform
   timing plateaus.  The first-order closed forms (tangent formula for
   equidistant, symmetric sum for udd) track the exact values well even
   at this moderate detuning.

Run:  python3 demos/03_suppression_scaling.py
Writes demos/output/suppression_scaling.png
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from phasekick import (
    SystemParams,
    equidistant,
    equidistant_closed_form,
    suppression_order,
    trajectory,
    transition_probability,
    udd,
    udd_closed_sum,
)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

fig, axes = plt.subplots(1, 2, figsize=(12, 4.5))

# --- five kicks, strong detuning --------------------------------------
ratio = 10.0
params = SystemParams(1.0, ratio, np.pi / np.hypot(1.0, ratio))
finals = {}
for frac, label in [
    (np.empty(0), "none"),
    (equidistant(5), "equidistant"),
    (udd(5), "udd"),
]:
    pts = trajectory(params, frac, samples_per_interval=300)
    axes[0].semilogy([q.time / params.total_time for q in pts],
                     [max(q.p_e, 1e-18) for q in pts], label=label)
    finals[label] = pts[-1].p_e
axes[0].set_xlabel("t / T")
axes[0].set_ylabel("excited population")
axes[0].set_title("5 kicks, D = 10 W, half a Rabi cycle")
axes[0].legend()
print("final-value suppression vs bare peak:")
for label in ("equidistant", "udd"):
    print(f"  {label}: {finals['none'] / finals[label]:.2e}")

# --- kick-count scan at moderate detuning ------------------------------
ratio = 1.0
params = SystemParams(1.0, ratio, np.pi / np.hypot(1.0, ratio))
ns = np.arange(2, 12)
for kind, maker, closed in [
    ("equidistant", equidistant, equidistant_closed_form),
    ("udd", udd, udd_closed_sum),
]:
    exact = [transition_probability(params, maker(n)) for n in ns]
    approx = [closed(1.0, ratio, params.total_time, n) for n in ns]
    axes[1].semilogy(ns, exact, "o-", label=f"{kind} (exact)")
    axes[1].semilogy(ns, approx, "--", label=f"{kind} (first order)")
axes[1].set_xlabel("kick count n")
axes[1].set_ylabel("final excited population")
axes[1].set_title("D = W, half a Rabi cycle")
axes[1].legend()

fig.tight_layout()
path = os.path.join(OUT, "suppression_scaling.png")
fig.savefig(path, dpi=150)
print("wrote", path)

# --- the short-time scaling exponent -----------------------------------
# the udd timing zeroes the first n derivatives of the transition
# amplitude, so the probability shrinks as (W T)^{2(n+1)}
print("\nmeasured short-time exponents (expected 2(n+1)):")
ratios = {0: 1.0, 1: 1.0, 2: 1.0, 3: 1.0, 4: 30.0, 5: 100.0}
for n in range(0, 6):
    slope = suppression_order(udd(n), ratios[n])
    print(f"  n={n}: slope {slope:.3f}")
