"""Phase-plane view of the basic system.

Samples the vector field on a grid, launches an orbit from every node, and
renders the orbits as an SVG; with sublinear elasticities every orbit ends
at the unique stable node.

Run from the repository root:  python demos/05_phase_portrait.py
"""

from pathlib import Path

import numpy as np

from capedu import ModelParams, phase_portrait, render_svg, write_phase_csv

params = ModelParams(s_k=0.4, s_r=0.1, delta_k=0.15, delta_r=0.25,
                     alpha=0.2, beta=0.35)

portrait = phase_portrait(params, k_range=(0.5, 8.0), e_range=(0.1, 2.0),
                          grid=(4, 4), horizon=300.0)
K0, E0 = portrait.equilibrium
print(f"equilibrium (K0, E0) = ({K0:.4f}, {E0:.4f})")

worst = max(np.hypot(t.states[-1, 0] - K0, t.states[-1, 1] - E0)
            for t in portrait.trajectories)
print(f"{len(portrait.trajectories)} orbits launched; "
      f"largest endpoint distance to equilibrium = {worst:.2e}")

out = Path(__file__).resolve().parent / "output"
out.mkdir(exist_ok=True)
(out / "phase_portrait.csv").write_text(write_phase_csv(portrait))

# orbits in the (K, E) plane: x axis is capital, y axis is expertise
series = [(f"orbit {i}", t.states[:, 0], t.states[:, 1])
          for i, t in enumerate(portrait.trajectories)]
svg = render_svg(series, title="phase plane: capital vs expertise")
(out / "phase_portrait.svg").write_text(svg)
print(f"outputs written to {out}")
