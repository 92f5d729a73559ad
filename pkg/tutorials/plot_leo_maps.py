"""
Locally eventually onto maps
============================
A map f of [0,1) is locally eventually onto (LEO) when every interval J is
mapped onto the whole space by some iterate f^N. For piecewise affine maps
with rational data this can be certified exactly: leodyn pushes J forward
as a union of half-open intervals with rational endpoints until it covers
[0,1).

"""
# Import libraries and setup plotting
from fractions import Fraction
import matplotlib.pyplot as plt
import seaborn as sns

from leodyn import doubling_map, example1_map, example2_map, leo_certify
from leodyn.interval_dynamics import as_interval_set
from leodyn.plotting import plot_map, plot_interval_set

sns.set_style('white')
sns.set_context('notebook')

##############################################################################
# The doubling map
# ----------------
# The doubling map x -> 2x mod 1 doubles the length of every short interval,
# so an interval of length 2^-k covers the circle after k steps.
f = doubling_map()
J = (Fraction(1, 4), Fraction(5, 16))
certificate = leo_certify(f, J)
print(certificate)

fig, axes = plt.subplots(1, 2, figsize=(8, 4))
plot_map(f, ax=axes[0])
plot_map(f, n=3, ax=axes[1])

##############################################################################
# The images of J on the way, one row per iteration
plt.figure(figsize=(6, 3))
current = as_interval_set(J, f.topology)
for n in range(certificate.n + 1):
    plot_interval_set(current, y=n)
    current = f.image(current)
plt.ylim(certificate.n + .5, -.5)
plt.ylabel('iteration')
sns.despine(left=True)

##############################################################################
# A map that is not LEO
# ---------------------
# The second example keeps [1/3, 1) invariant: intervals inside it never
# reach [0, 1/3). Restricted to the invariant domain, the map is LEO again.
g = example2_map()
plot_map(g, ax=plt.subplots(figsize=(4, 4))[1])

J = (Fraction(1, 2), Fraction(3, 5))
print(leo_certify(g, J))
print(leo_certify(g, J, target=(Fraction(1, 3), Fraction(1))))

##############################################################################
# Replicated copies
# -----------------
# Rescaled copies of f0 accumulate at 1. Each copy is mapped onto itself,
# so an interval never leaves its copy and the map is not LEO.
h = example1_map(levels=3)
plot_map(h, ax=plt.subplots(figsize=(4, 4))[1])
print(leo_certify(h, (Fraction(0), Fraction(1, 12))))
