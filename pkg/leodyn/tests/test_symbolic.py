import logging
import math
import unittest
from fractions import Fraction as F

import numpy as np

from leodyn.exceptions import BadRadius, SymbolOutOfAlphabet, TooLarge, WordNotAllowed
from leodyn.symbolic import (SFT,
                             CylinderSet,
                             SymbolSequence,
                             cylinder_covering_index,
                             cylinder_image,
                             entropy_estimate,
                             fixed_point_shift,
                             full_shift,
                             golden_mean_shift,
                             is_allowed,
                             is_sigma_graph,
                             leo_entropy_bound_check,
                             periodic_closure,
                             primitivity_index,
                             separated_count,
                             sequence_distance,
                             shift_from_json,
                             sigma_graph,
                             spectral_entropy,
                             word_count,
                             words)


class ShiftSpaceTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('symbolic_test')
        self.sigma = sigma_graph(8)

    def test_is_allowed(self):
        self.assertTrue(is_allowed(self.sigma, (0, 5)))
        self.assertTrue(is_allowed(self.sigma, (3, 2)))
        self.assertFalse(is_allowed(self.sigma, (3, 1)))
        self.assertTrue(is_allowed(full_shift(2), (0, 1, 1, 0, 0)))
        self.assertFalse(is_allowed(golden_mean_shift(), (0, 1, 1)))

        with self.assertRaises(SymbolOutOfAlphabet):
            is_allowed(self.sigma, (0, 9))
        with self.assertRaises(WordNotAllowed):
            self.sigma.check_word((4, 2))

    def test_dead_ends_rejected(self):
        with self.assertRaises(ValueError):
            SFT([[1, 1], [0, 0]])
        with self.assertRaises(ValueError):
            SFT([[1, 1, 1], [1, 1, 1]])

    def test_sigma_graph(self):
        self.assertEqual(self.sigma.successors(0), tuple(range(9)))
        self.assertEqual(self.sigma.successors(4), (3, 4))
        self.assertTrue(is_sigma_graph(self.sigma))
        self.assertFalse(is_sigma_graph(full_shift(2)))
        self.assertEqual(self.sigma.reachable(5, 3), {2, 3, 4, 5})

    def test_bridge(self):
        self.assertEqual(self.sigma.bridge(3, 5, 5), (3, 2, 1, 0, 0, 5))
        self.assertIsNone(self.sigma.bridge(3, 5, 3))
        self.assertEqual(len(full_shift(2).bridges(0, 1, 3)), 4)

    def test_words(self):
        self.assertEqual(words(golden_mean_shift(), 3),
                         [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1)])
        for n in range(1, 10):
            self.assertEqual(word_count(golden_mean_shift(), n),
                             len(words(golden_mean_shift(), n)))

    def test_json(self):
        for space in [golden_mean_shift(), self.sigma,
                      SFT([[0, 1], [1, 1]], alphabet=[2, 5])]:
            self.assertEqual(shift_from_json(space.to_json()), space)
        with self.assertRaises(ValueError):
            shift_from_json({'kind': 'sofic'})


class SymbolSequenceTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('symbolic_test')

    def test_normalization(self):
        x = SymbolSequence((0, 1), (0, 1))
        self.assertEqual(x, SymbolSequence.periodic((0, 1)))
        self.assertEqual(SymbolSequence((), (1, 1)).cycle, (1,))
        self.assertEqual(x.period(), 2)
        self.assertIsNone(SymbolSequence((1,), (0,)).period())

    def test_shift_and_take(self):
        x = SymbolSequence((3, 2, 1), (0, 5))
        self.assertEqual(x.take(7), (3, 2, 1, 0, 5, 0, 5))
        self.assertEqual(x.shift(2).take(3), (1, 0, 5))
        self.assertEqual(x.shift(4), SymbolSequence.periodic((5, 0)))
        self.assertEqual(x[10], 5)
        # 5 -> 0 is not an edge
        self.assertFalse(x.is_allowed_in(sigma_graph(6)))
        self.assertTrue(SymbolSequence((3, 2, 1), (0,)).is_allowed_in(sigma_graph(6)))

    def test_distance(self):
        zero = SymbolSequence.periodic((0,))
        self.assertEqual(sequence_distance(zero, zero), 0)
        self.assertEqual(sequence_distance(zero, SymbolSequence((0, 0), (1,))), F(1, 4))
        self.assertEqual(sequence_distance(zero, SymbolSequence.periodic((1,))), 1)

    def test_json(self):
        x = SymbolSequence((2,), (1, 0))
        self.assertEqual(SymbolSequence.from_json(x.to_json()), x)
        self.assertEqual(SymbolSequence.from_json([1]), SymbolSequence.periodic((1,)))

    def test_minimal_extension(self):
        y = SymbolSequence.minimal_extension(sigma_graph(6), (3, 3))
        self.assertEqual(y, SymbolSequence((3, 3, 2, 1), (0,)))


class CylinderSetTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('symbolic_test')
        self.full = full_shift(2)
        self.sigma = sigma_graph(6)

    def test_canonical(self):
        C = CylinderSet(self.full, [(0,), (0, 1), (1, 0)])
        self.assertEqual(C.words, ((0,), (1, 0)))
        self.assertTrue(CylinderSet(self.full, [(0,), (1,)]).is_whole())
        self.assertTrue(CylinderSet(self.full, [(0, 0), (0, 1), (1,)]).is_whole())
        self.assertFalse(CylinderSet.empty(self.full))

    def test_set_operations(self):
        A = CylinderSet(self.full, [(0,)])
        B = CylinderSet(self.full, [(0, 1), (1, 1)])
        self.assertEqual(A & B, CylinderSet(self.full, [(0, 1)]))
        self.assertEqual((A | B).words, ((0,), (1, 1)))
        self.assertTrue((A & B) <= A)
        self.assertFalse(B <= A)
        self.assertTrue(CylinderSet(self.full, [(0, 0), (0, 1)]) <= A)
        self.assertIn(SymbolSequence.periodic((0, 1)), A)
        self.assertNotIn(SymbolSequence.periodic((1, 0)), A)

    def test_image_and_preimage(self):
        A = CylinderSet(self.full, [(0,)])
        self.assertEqual(A.preimage().words, ((0, 0), (1, 0)))
        self.assertTrue(A.image().is_whole())
        self.assertTrue(A.preimage().image() == A)

    def test_cylinder_image(self):
        self.assertEqual(cylinder_image(self.full, (0, 1), 0),
                         CylinderSet(self.full, [(0, 1)]))
        self.assertEqual(cylinder_image(self.full, (0, 1), 1),
                         CylinderSet(self.full, [(1,)]))

        # 1 -> 0, 1 and 0 -> everything
        self.assertEqual(cylinder_image(self.sigma, (1,), 1),
                         CylinderSet(self.sigma, [(0,), (1,)]))
        self.assertTrue(cylinder_image(self.sigma, (1,), 2).is_whole())

        with self.assertRaises(WordNotAllowed):
            cylinder_image(self.sigma, (3, 1), 1)

    def test_semigroup(self):
        rng = np.random.RandomState(3)
        all_words = words(self.sigma, 3)
        for _ in range(30):
            w = all_words[rng.randint(len(all_words))]
            j, k = rng.randint(0, 5, size=2)
            pushed = cylinder_image(self.sigma, w, j)
            for _ in range(k):
                pushed = pushed.image()
            self.assertEqual(cylinder_image(self.sigma, w, j + k), pushed)

    def test_sigma_graph_covering_index(self):
        """sigma^k([w]) is the whole space exactly from k = |w| + w[-1] on."""
        space = sigma_graph(8)
        for n in range(1, 5):
            for w in words(space, n):
                if w[-1] == space.truncation:
                    continue
                self.assertEqual(cylinder_covering_index(space, w), n + w[-1])
                if w[-1] == 0:
                    self.assertTrue(cylinder_image(space, w, n).is_whole())

    def test_pull_back_within(self):
        A = CylinderSet(self.full, [(0,)])
        target = CylinderSet(self.full, [(1, 1)])
        self.assertEqual(A.pull_back_within(target, 2),
                         CylinderSet(self.full, [(0, 0, 1, 1), (0, 1, 1, 1)]))
        self.assertEqual(A.pull_back_within(target, 0), CylinderSet.empty(self.full))

    def test_json(self):
        C = CylinderSet(self.sigma, [(0, 3), (2, 1)])
        self.assertEqual(CylinderSet.from_json(self.sigma, C.to_json()), C)


class PrimitivityTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('symbolic_test')

    def test_primitivity_index(self):
        self.assertEqual(primitivity_index(full_shift(2)), 1)
        self.assertEqual(primitivity_index(golden_mean_shift()), 2)
        self.assertIsNone(primitivity_index(SFT([[0, 1], [1, 0]])))
        self.assertIsNone(primitivity_index(SFT([[1, 0], [0, 1]])))

    def test_primitive_cylinders_cover(self):
        for space in [full_shift(2), golden_mean_shift(), full_shift(3)]:
            N = primitivity_index(space)
            for s in space.alphabet:
                for k in range(N, N + 3):
                    self.assertTrue(cylinder_image(space, (s,), k).is_whole())


class EntropyTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('symbolic_test')
        self.full = full_shift(2)
        self.golden = golden_mean_shift()

    def test_separated_count(self):
        self.assertEqual(separated_count(self.full, 1, 1), 2)
        # words of length n + m for eps = 2^-m
        self.assertEqual(separated_count(self.full, 3, F(1, 2)), 16)
        self.assertEqual(separated_count(self.golden, 4, 1), 8)
        self.assertEqual(separated_count(self.golden, 4, F(1, 4), method='enumerate'),
                         separated_count(self.golden, 4, F(1, 4)))

    def test_separated_count_monotone(self):
        for space in [self.full, self.golden, sigma_graph(4)]:
            for m in range(3):
                counts = [separated_count(space, n, F(1, 2 ** m)) for n in range(1, 8)]
                self.assertEqual(counts, sorted(counts))
            for n in range(1, 6):
                counts = [separated_count(space, n, F(1, 2 ** m)) for m in range(4)]
                self.assertEqual(counts, sorted(counts))

    def test_separated_count_errors(self):
        with self.assertRaises(TooLarge):
            separated_count(self.full, 30, 1)
        with self.assertRaises(BadRadius):
            separated_count(self.full, 3, F(1, 3))
        with self.assertRaises(ValueError):
            separated_count(self.full, 0, 1)

    def test_entropy_estimate(self):
        for n in range(12, 17):
            estimate = entropy_estimate(self.full, n, 1)
            self.assertLess(abs(estimate - math.log(2)) / math.log(2), .06)
        golden = math.log((1 + math.sqrt(5)) / 2)
        self.assertLess(abs(entropy_estimate(self.golden, 16, 1) - golden), .08)
        self.assertEqual(entropy_estimate(fixed_point_shift(), 10, 1), 0)

    def test_spectral_entropy(self):
        self.assertAlmostEqual(spectral_entropy(self.full), math.log(2))
        self.assertAlmostEqual(spectral_entropy(self.golden),
                               math.log((1 + math.sqrt(5)) / 2))

    def test_leo_entropy_bound(self):
        self.assertTrue(leo_entropy_bound_check(self.full, 1, F(1, 2), 8))
        self.assertTrue(leo_entropy_bound_check(self.golden, 2, F(1, 2), 6))

        check = leo_entropy_bound_check(fixed_point_shift(), 1, F(1, 2), 1)
        self.assertFalse(check)
        self.assertEqual(check.failed_k, 1)

        not_covering = leo_entropy_bound_check(self.golden, 1, F(1, 2), 2)
        self.assertFalse(not_covering.covering)

    def test_periodic_closure(self):
        space = sigma_graph(6)
        loop = periodic_closure(space, (0, 5))
        self.assertEqual(loop, (0, 5, 4, 3, 2, 1))
        self.assertTrue(SymbolSequence.periodic(loop).is_allowed_in(space))


if __name__ == '__main__':
    unittest.main()
