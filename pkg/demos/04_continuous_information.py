"""The continuous information value and its distances.

info(f) integrates (1 - f~(x))/x over the unit interval, where f~ is the
descending rearrangement; it measures the information distance from the
uniform assignment f == 1.  The monomials x^n reproduce the harmonic
numbers, min-products add their information values, and the g/G/H/K
distances extend to the continuous setting (H becomes infinite whenever
the meet is subnormal).
"""

from possinfo import (
    PiecewisePossibility,
    big_g_cont,
    big_h_cont,
    big_k_cont,
    info,
    info_from_level,
    level_measure,
    product_level,
    sample_function,
)

ramp = PiecewisePossibility([(0, 1), (1, 0)])
uniform = PiecewisePossibility([(0, 1), (1, 1)])
print("info(1 - x) =", info(ramp))
print("info(f == 1) =", info(uniform))

print("\nmonomials reproduce harmonic numbers:")
for n in range(1, 6):
    f = sample_function(lambda x, n=n: x**n, 10_000)
    hn = sum(1 / k for k in range(1, n + 1))
    print(f"  info(x^{n}) = {info(f):.6f}   H_{n} = {hn:.6f}")

print("\nmin-products add information (computed on the level-measure side):")
P = level_measure(ramp)
print("  info(P) =", info_from_level(P))
print("  info(P * P) =", info_from_level(product_level(P, P)))

print("\ncontinuous distances between the two ramps:")
up = PiecewisePossibility([(0, 0), (1, 1)])
print("  G =", big_g_cont(ramp, up))
print("  K =", big_k_cont(ramp, up))
print("  H =", big_h_cont(ramp, up), "(their meet peaks at 0.5, so H diverges)")

print("\nsubnormal distributions have no finite information value:")
try:
    info(PiecewisePossibility([(0, 0.7), (1, 0.1)]))
except Exception as e:
    print(" ", type(e).__name__, "-", e)
