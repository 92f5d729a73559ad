import logging
import unittest
from fractions import Fraction as F

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

from leodyn.beta_expansions import beta_atlas
from leodyn.constructions import example1_map, feliks_cantor
from leodyn.interval_dynamics import IntervalSet, doubling_map
from leodyn.plotting import plot_beta_atlas, plot_cantor_approx, plot_interval_set, plot_map


class PlottingTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('plotting_test')
        self.fig, self.ax = plt.subplots()

    def tearDown(self):
        plt.close('all')

    def test_plot_map(self):
        plot_map(example1_map(2), ax=self.ax)
        # 9 replicated branches, the identity tail and the diagonal
        self.assertEqual(len(self.ax.lines), 11)

        ax = plot_map(doubling_map(), n=3, ax=plt.subplots()[1], diagonal=False)
        self.assertEqual(len(ax.lines), 8)
        self.assertEqual(ax.get_ylabel(), 'f^3(x)')

    def test_plot_interval_set(self):
        S = IntervalSet([(0, F(1, 4)), (F(1, 2), F(3, 4))])
        plot_interval_set(S, y=1, ax=self.ax)
        self.assertEqual(len(self.ax.collections), 2)

    def test_plot_cantor_approx(self):
        approx = feliks_cantor(1, 3)
        plot_cantor_approx(approx, ax=self.ax)
        self.assertEqual(len(self.ax.collections),
                         sum(len(approx.remaining_at_depth(j)) for j in range(4)))

    def test_plot_beta_atlas(self):
        frame = beta_atlas([2, 'golden', F(3, 2)], digits=8)
        fig = plot_beta_atlas(frame)
        self.assertEqual(len(fig.axes), 2)


if __name__ == '__main__':
    unittest.main()
