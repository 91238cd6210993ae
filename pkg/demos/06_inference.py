"""Maximum-uncertainty inference under linear constraints.

When constraints leave many admissible assignments, pick the least
committed one: either maximize U outright, or minimize the information
distance to a prior.  With the all-ones prior the two rules coincide.
"""

import math

from possinfo import (
    DiscreteDistribution,
    InferenceProblem,
    LinearConstraint,
    MaxU,
    MinDistance,
    brute_force_oracle,
    max_uncertain,
    solve_max_u,
    solve_min_distance,
    u_uncertainty,
)

labels = ("low", "medium", "high")

print("no constraints: everything stays fully possible")
sol = solve_max_u(InferenceProblem(labels, (), MaxU()))
print("  ", sol.distribution.values, " U =", sol.objective_value, "= ln 3 =", math.log(3))
print()

print("pin the first coordinate to 0.4:")
cons = (LinearConstraint((1, 0, 0), "=", 0.4),)
sol = solve_max_u(InferenceProblem(labels, cons, MaxU()))
print("  ", sol.distribution.values, " U =", sol.objective_value)
print()

print("a budget v_low + v_medium = 1.5 forces a choice; ties break toward the")
print("lexicographically largest assignment and the certificate lists both optima:")
cons = (LinearConstraint((1, 1, 0), "=", 1.5),)
sol = solve_max_u(InferenceProblem(labels, cons, MaxU()))
print("  chosen:", sol.distribution.values)
print("  optima:", sol.certificate["candidates"])
print()

print("minimum-distance posterior: prior (1, 0.2, 0.2), require v_medium >= 0.6")
prior = DiscreteDistribution(labels, (1.0, 0.2, 0.2))
cons = (LinearConstraint((0, 1, 0), ">=", 0.6),)
problem = InferenceProblem(labels, cons, MinDistance(prior, "G"))
sol = solve_min_distance(problem)
print("  posterior:", sol.distribution.values, " G-distance:", sol.objective_value)
oracle = brute_force_oracle(problem, 0.02)
print("  grid oracle agrees:", oracle.distribution.values, oracle.objective_value)
print()

print("with the uninformed prior, minimum distance recovers maximum U:")
problem = InferenceProblem(labels, cons, MinDistance(max_uncertain(3, labels), "G"))
sol = solve_min_distance(problem)
print("  posterior:", sol.distribution.values, " U =", u_uncertainty(sol.distribution))
sol_u = solve_max_u(InferenceProblem(labels, cons, MaxU()))
print("  max-U    :", sol_u.distribution.values, " U =", sol_u.objective_value)
