"""
A Cantor set of the doubling map
================================
Removing a small ball around a periodic point together with all its
preimages leaves an invariant Cantor set. Repeating this with shrinking
radii around further periodic points removes more and more periodic
orbits, while the points that remain still follow the doubling map.

"""
import matplotlib.pyplot as plt
import seaborn as sns

from leodyn import feliks_cantor, feliks_verify
from leodyn.plotting import plot_cantor_approx

sns.set_style('white')

##############################################################################
# Four levels, preimages up to depth 6
approx = feliks_cantor(3, 6)
approx.ledger_frame()

##############################################################################
# The remaining set after each preimage generation
plt.figure(figsize=(8, 3))
plot_cantor_approx(approx)

##############################################################################
# The approximation contains none of the enumerated periodic points, and
# f^n maps the trace of every 2^-n ball onto the whole approximation up to
# the images of the removed balls.
report = feliks_verify(approx, n=4)
report.to_frame()
