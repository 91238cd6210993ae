"""The four information distances g, G, H, K between assignments.

g compares pointwise-ordered pairs directly; G and H lift it to arbitrary
pairs through the lattice join and meet, and K takes the larger of the
two join gaps.  G and K are genuine metrics on normalized assignments.
"""

import math

from possinfo import (
    DiscreteDistribution,
    big_g,
    big_h,
    big_k,
    g_distance,
    join,
    meet,
    min_product,
)

a = DiscreteDistribution(("x", "y", "z"), (1.0, 0.5, 0.0))
b = DiscreteDistribution(("x", "y", "z"), (0.5, 1.0, 0.5))

print("a =", a)
print("b =", b)
print("join =", join(a, b).values, " meet =", meet(a, b).values)
print("G(a, b) =", big_g(a, b))
print("K(a, b) =", big_k(a, b))
print("H(a, b) =", big_h(a, b))
print()

# g is the one-sided building block: it needs pointwise order
low = DiscreteDistribution(("x", "y"), (1.0, 0.5))
high = DiscreteDistribution(("x", "y"), (1.0, 0.8))
print("g(low, high) =", g_distance(low, high), "= 0.3 ln 2 =", 0.3 * math.log(2))
print()

# triangle inequality for G on a random-ish triple
c = DiscreteDistribution(("x", "y", "z"), (0.2, 0.7, 1.0))
print("G(a, c) =", big_g(a, c))
print("G(a, b) + G(b, c) =", big_g(a, b) + big_g(b, c), "(never smaller)")
print()

# H is additive over min-products when both meets stay normalized, which
# happens exactly when each pair shares an outcome of possibility 1
p1 = DiscreteDistribution(("u", "v"), (1.0, 0.3))
r1 = DiscreteDistribution(("u", "v"), (1.0, 0.8))
p2 = DiscreteDistribution(("s", "t"), (0.6, 1.0))
r2 = DiscreteDistribution(("s", "t"), (0.2, 1.0))
lhs = big_h(min_product(p1, p2).flatten(), min_product(r1, r2).flatten())
print("H over the product:", lhs)
print("H(p1,r1) + H(p2,r2):", big_h(p1, r1) + big_h(p2, r2))
