"""
Specification and shadowing
===========================
A map has the specification property when any finite family of orbit
segments, separated by gaps of at least N steps, is followed within eps by
a single orbit. For LEO maps N can be taken to be the covering time of
eps-balls. leodyn builds the shadowing point by refining a nested sequence
of regions and checks the result with exact arithmetic.

"""
from fractions import Fraction
import matplotlib.pyplot as plt
import seaborn as sns

from leodyn import (IntervalRegionSystem,
                    OrbitSegment,
                    SpecificationInstance,
                    covering_time,
                    doubling_map,
                    periodic_shadow,
                    shadow)
from leodyn.plotting import plot_interval_set

sns.set_style('white')

##############################################################################
# The gap is the covering time
# ----------------------------
# For the doubling map every ball of radius eps = 2^-k covers the circle after
# k steps.
system = IntervalRegionSystem(doubling_map())
eps = Fraction(1, 8)
N = covering_time(system, eps)
print(N)

##############################################################################
# Three segments, each starting N steps after the previous one ends
spec = SpecificationInstance([OrbitSegment(0, 2, Fraction(1, 3)),
                              OrbitSegment(5, 7, Fraction(1, 5)),
                              OrbitSegment(10, 11, Fraction(2, 7))],
                             gap=N, eps=eps)
result = shadow(system, spec)
print(result)

##############################################################################
# The certificate is a nested sequence of regions, one per segment
palette = sns.color_palette('viridis', len(result.certificate))
plt.figure(figsize=(8, 2))
for i, region in enumerate(result.certificate):
    plot_interval_set(region, y=i, color=palette[i])
plt.axvline(float(result.representative), c='k', ls='--')
plt.ylim(len(result.certificate) - .5, -.5)
plt.ylabel('segment')
sns.despine(left=True)

##############################################################################
# Periodic shadowing
# ------------------
# Repeating the first segment after the last one gives a periodic point
# with period b_n + N + m_1 + N - a_1.
periodic = periodic_shadow(system, spec)
print(periodic.period, periodic.representative)
