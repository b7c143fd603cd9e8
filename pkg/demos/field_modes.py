"""Atom pairs coupled to two field modes: Fock and coherent environments.

    python3 demos/field_modes.py
"""
import numpy as np

from envwitness.runner import catalog_spec, run_scenario
from envwitness.witness import count_local_maxima

for sid in ("fig4a", "fig4b", "fig4c", "fig4d", "fig5a", "fig5b", "fig6a", "fig6b", "fig7a", "fig7b"):
    rec = run_scenario(catalog_spec(sid))
    d = rec.columns["D"]
    print(f"{sid}: D(0)={d[0]:.4f} max D={d.max():.4f} final D={d[-1]:.4f} "
          f"local maxima={count_local_maxima(d)} {rec.regime}={rec.witness.bound:.4f}")
    if not np.all(np.isfinite(d)):
        raise SystemExit(f"{sid}: non-finite trace distance")
