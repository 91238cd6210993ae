"""Finite samples converge to the continuous information value.

Sampling f on n uniform grid points gives a finite assignment whose
shifted uncertainty ln n - U approaches info(f).  For f = 1 - x the
sample U is exactly ln(n!)/n, so Stirling's formula drives the limit 1.
The series is also exported as CSV for plotting.
"""

import math
import tempfile
from pathlib import Path

from possinfo import (
    PiecewisePossibility,
    convergence_series,
    discretize,
    emit_csv,
    info,
    u_uncertainty,
)

ramp = PiecewisePossibility([(0, 1), (1, 0)])
print("four samples of 1 - x:", discretize(ramp, 4).values)
print("their U:", u_uncertainty(discretize(ramp, 4)), "= ln(4!)/4 =", math.log(24) / 4)
print()

series = convergence_series(ramp, (10, 100, 1000, 10_000))
print("n        U(sample)    ln n - U     target", info(ramp))
for entry in series:
    print(f"{entry.n:<8} {entry.u_value:<12.6f} {entry.approx_info:.6f}")

path = Path(tempfile.gettempdir()) / "ramp_convergence.csv"
emit_csv(series, path)
print("\nwrote", path)
print(path.read_text(), end="")
