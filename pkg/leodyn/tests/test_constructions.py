import logging
import unittest
from fractions import Fraction as F

import numpy as np

from leodyn.constructions import (CONSISTENT,
                                  CantorApprox,
                                  REJECTED,
                                  RomeWord,
                                  enumerate_periodic_points,
                                  example1_continuity_check,
                                  example1_map,
                                  example_maps,
                                  f0_map,
                                  feliks_cantor,
                                  feliks_verify,
                                  lindenstrauss_membership,
                                  periodic_points,
                                  pi_suppress,
                                  replicated_branches,
                                  rome_decode,
                                  rome_embed,
                                  rome_encode,
                                  rome_first_return,
                                  rome_return_time,
                                  rome_unembed,
                                  thue_morse,
                                  thue_morse_factors)
from leodyn.exceptions import (ConsecutiveZeros,
                               MalformedWord,
                               NoReturnInPrefix,
                               SymbolOutOfAlphabet,
                               WordNotAllowed)
from leodyn.interval_dynamics import CIRCLE, doubling_map
from leodyn.symbolic import sigma_graph, words


class ExampleMapTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('constructions_test')

    def test_replication(self):
        for levels in range(4):
            f = example1_map(levels)
            self.assertEqual(len(replicated_branches(f)), 3 * (levels + 1))
            self.assertEqual(f.branches[-1].a, 1 - F(1, 2 ** (levels + 1)))
            self.assertEqual(example1_continuity_check(f), [])

        self.assertEqual(example1_continuity_check(f0_map()), [])
        with self.assertRaises(ValueError):
            example1_map(-1)

    def test_copies(self):
        f = example1_map(2)
        # the copy on [1/2, 3/4) is f0 rescaled
        for x in [F(0), F(1, 12), F(1, 5), F(2, 5)]:
            self.assertEqual(f.eval(F(1, 2) + x / 2), F(1, 2) + f.eval(x) / 2)
        self.assertEqual(f.eval(F(1, 6)), F(1, 2))
        self.assertEqual(f.eval(F(7, 8)), F(7, 8))

    def test_example_maps(self):
        maps = example_maps()
        self.assertEqual(set(maps), {'f0', 'example1', 'example2'})
        f = maps['example2']
        self.assertEqual(f.eval(F(1, 6)), F(1, 2))
        self.assertEqual(f.eval(F(1, 2)), F(2, 3))
        self.assertEqual(f.eval(F(5, 6)), F(2, 3))


class PeriodicPointTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('constructions_test')

    def test_doubling(self):
        self.assertEqual(periodic_points(1), [0])
        self.assertEqual(periodic_points(2), [0, F(1, 3), F(2, 3)])
        self.assertEqual(periodic_points(3)[1:], [F(k, 7) for k in range(1, 7)])

        f = doubling_map()
        for x in periodic_points(4):
            self.assertEqual(f.orbit(x, 4)[-1], x)

        with self.assertRaises(ValueError):
            periodic_points(0)

    def test_enumeration(self):
        points = list(enumerate_periodic_points(3))
        self.assertEqual(len(points), 9)
        self.assertEqual(points[:4], [(0, 1), (F(1, 3), 2), (F(2, 3), 2), (F(1, 7), 3)])
        periods = [d for _, d in points]
        self.assertEqual(periods, sorted(periods))


class CantorSetTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('constructions_test')
        self.approx = feliks_cantor(3, 6)

    def test_ledger(self):
        ledger = self.approx.ledger
        self.assertEqual([e.q for e in ledger], [0, F(1, 3), F(1, 7), F(3, 7)])
        self.assertEqual([e.index for e in ledger], [0, 1, 3, 5])
        self.assertEqual([e.period for e in ledger], [1, 2, 3, 3])
        self.assertEqual([e.zeta for e in ledger], [F(1, 8), F(1, 32), F(1, 128), F(1, 512)])
        self.assertEqual(len(self.approx.ledger_frame()), 4)

    def test_scope_removed(self):
        scope = self.approx.scope()
        self.assertEqual(scope, [0, F(1, 3), F(2, 3), F(1, 7), F(2, 7), F(3, 7)])
        for x in scope:
            self.assertNotIn(x, self.approx.remaining)

    def test_nested(self):
        self.assertGreater(self.approx.remaining.measure, 0)
        previous = None
        for j in range(self.approx.depth + 1):
            R = self.approx.remaining_at_depth(j)
            if previous is not None:
                self.assertTrue(R <= previous)
            previous = R
        self.assertEqual(previous, self.approx.remaining)

    def test_verify(self):
        report = feliks_verify(self.approx, max_period=4, n=4, samples=20, seed=0)
        self.assertEqual(report.in_scope_survivors, [])
        self.assertTrue(report.defect_inside_slack)
        self.assertLessEqual(report.invariance_defect, report.slack)
        self.assertEqual(len(report.covering), 20)
        self.assertTrue(report.covering_passed)
        self.assertTrue(report.passed)

        frame = report.to_frame()
        self.assertEqual(list(frame['check']), ['in_scope_survivors', 'invariance_defect',
                                                'hausdorff', 'covering'])
        self.assertTrue(frame['passed'].all())
        self.assertTrue(report.to_json()['passed'])

    def test_json(self):
        data = self.approx.to_json()
        again = CantorApprox.from_json(data)
        self.assertEqual(again.remaining, self.approx.remaining)
        self.assertEqual(again.remaining.topology, CIRCLE)
        self.assertEqual(again.ledger, self.approx.ledger)
        self.assertEqual((again.level, again.depth), (self.approx.level, self.approx.depth))
        for j in range(self.approx.depth + 1):
            self.assertEqual(again.generation(j), self.approx.generation(j))
        self.assertEqual(again.to_json(), data)

    def test_shallow_depth(self):
        report = feliks_verify(feliks_cantor(1, 2), n=4)
        self.assertEqual(report.covering, [])

    def test_invalid(self):
        with self.assertRaises(ValueError):
            feliks_cantor(2, 4, zeta0=F(1, 3))
        with self.assertRaises(ValueError):
            feliks_cantor(2, 4, ratio=1)


class RomeTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('constructions_test')

    def test_encode_decode(self):
        self.assertEqual(rome_encode(0), (0, 0))
        self.assertEqual(rome_encode(3), (0, 1, 1, 1, 0))
        self.assertEqual(rome_encode(3).n, 3)
        for n in range(10001):
            self.assertEqual(rome_decode(rome_encode(n)), n)

        for bad in [(0,), (1, 0), (0, 1, 0, 0), (0, 2, 0)]:
            with self.assertRaises(MalformedWord):
                rome_decode(bad)
        with self.assertRaises(ValueError):
            RomeWord(-1)

    def test_embed(self):
        self.assertEqual(rome_embed((2, 0, 1)), (0, 1, 1, 0, 0, 1, 0))
        self.assertEqual(rome_unembed((0, 1, 1, 0, 0, 1, 0)), (2, 0, 1))
        self.assertEqual(rome_embed(()), ())

        space = sigma_graph(4)
        self.assertEqual(rome_embed((2, 1, 0, 3), space),
                         (0, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0))
        with self.assertRaises(WordNotAllowed):
            rome_embed((2, 0, 1), space)
        with self.assertRaises(MalformedWord):
            rome_unembed((0, 1, 1))

    def test_first_return(self):
        self.assertEqual(rome_return_time((0, 1, 1, 0, 1)), 3)
        self.assertEqual(rome_first_return((0, 1, 1, 0, 1)), (0, 1))
        with self.assertRaises(NoReturnInPrefix):
            rome_return_time((0, 1, 1))
        with self.assertRaises(MalformedWord):
            rome_return_time((1, 0))

    def test_return_is_shift(self):
        """The first-return map acts on codes as the shift on symbols."""
        space = sigma_graph(4)
        for w in words(space, 3):
            binary = rome_embed(w)
            self.assertEqual(rome_return_time(binary), w[0] + 1)
            self.assertEqual(rome_first_return(binary), rome_embed(w[1:]))
            self.assertEqual(rome_unembed(binary), w)


class ZeroSuppressionTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('constructions_test')
        self.rng = np.random.RandomState(7)

    def test_pi_suppress(self):
        self.assertEqual(pi_suppress((0, 1, 0, 2, 2, 0)), (1, 2, 2))
        self.assertEqual(pi_suppress(()), ())
        with self.assertRaises(ConsecutiveZeros) as cm:
            pi_suppress((1, 0, 0, 2))
        self.assertEqual(cm.exception.index, 1)
        with self.assertRaises(SymbolOutOfAlphabet):
            pi_suppress((1, 3))

    def random_word(self, length):
        word = []
        for _ in range(length):
            s = int(self.rng.randint(0, 3))
            if s == 0 and word and word[-1] == 0:
                s = 1
            word.append(s)
        return tuple(word)

    def test_pi_suppress_semigroup(self):
        for _ in range(200):
            u = self.random_word(int(self.rng.randint(0, 12)))
            v = self.random_word(int(self.rng.randint(0, 12)))
            if u and v and u[-1] == 0 and v[0] == 0:
                v = (1,) + v
            self.assertEqual(pi_suppress(u + v), pi_suppress(u) + pi_suppress(v))

    def test_thue_morse(self):
        self.assertEqual(thue_morse(8), (1, 2, 2, 1, 2, 1, 1, 2))
        self.assertEqual(len(thue_morse_factors(2)), 4)
        self.assertEqual(len(thue_morse_factors(3)), 6)
        self.assertEqual(len(thue_morse_factors(4)), 10)

    def insert_zeros(self, word):
        out = []
        for s in word:
            if self.rng.rand() < .3 and (not out or out[-1] != 0):
                out.append(0)
            out.append(s)
        return tuple(out)

    def test_membership(self):
        for factor in sorted(thue_morse_factors(6)):
            self.assertEqual(lindenstrauss_membership(self.insert_zeros(factor)), CONSISTENT)

        for word in [(1, 0, 0, 2), (1, 1, 1), (2, 0, 2, 0, 2), (1, 0, 1, 1, 2),
                     (2, 1, 2, 1, 2), (1, 3)]:
            self.assertEqual(lindenstrauss_membership(word), REJECTED)

    def test_custom_oracle(self):
        self.assertEqual(lindenstrauss_membership((1, 1, 1), oracle=lambda w, depth: True),
                         CONSISTENT)


if __name__ == '__main__':
    unittest.main()
