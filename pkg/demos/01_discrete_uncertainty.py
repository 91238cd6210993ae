"""Discrete possibility distributions and the U-uncertainty measure.

A possibility distribution grades outcomes by plausibility in [0, 1] and
combines with max/min.  U-uncertainty plays the role Shannon entropy
plays for probabilities: it is additive over independent min-product
joints, invariant under permutation and zero-padding, and maximal on the
all-ones ("fully uninformed") assignment.
"""

import math

from possinfo import (
    DiscreteDistribution,
    Tau,
    extend,
    info_tau,
    marginals,
    max_uncertain,
    min_product,
    permute,
    possibility_of_subset,
    u_uncertainty,
)

weather = DiscreteDistribution(
    ("sun", "cloud", "rain", "snow"), (1.0, 0.8, 0.4, 0.1)
)
print("distribution:", weather)
print("possibility of {rain, snow}:", possibility_of_subset(weather, ("rain", "snow")))
print("U(weather) =", u_uncertainty(weather), "nats")
print("U of the most uninformed 4-element assignment =", u_uncertainty(max_uncertain(4)),
      "= ln 4 =", math.log(4))
print()

# independence: the joint of two unrelated questions is their min-product,
# and U adds up exactly
traffic = DiscreteDistribution(("light", "heavy"), (1.0, 0.6))
joint = min_product(weather, traffic)
print("U(joint) =", u_uncertainty(joint))
print("U(weather) + U(traffic) =", u_uncertainty(weather) + u_uncertainty(traffic))
m1, m2 = marginals(joint)
print("marginals recover the factors:", m1 == weather and m2 == traffic)
print()

# invariances: relabeling and embedding into a larger domain change nothing
shuffled = permute(weather, (2, 0, 3, 1))
padded = extend(weather, weather.labels + ("hail", "fog"))
print("U after permutation:", u_uncertainty(shuffled))
print("U after zero-padding:", u_uncertainty(padded))
print()

# the whole admissible family of information functions reparameterizes the
# sorted values through a monotone map of [0, 1] onto itself
square = Tau.from_function(lambda t: t * t, 101)
print("deformed information with tau(t) = t^2:", info_tau(weather, square))
print("identity deformation reproduces U:", info_tau(weather, Tau.identity()))
