import logging
import unittest
from fractions import Fraction as F

import numpy as np

from leodyn.constructions import example2_map
from leodyn.exceptions import (EmptyRefinement,
                               GapBelowCoveringTime,
                               NotApplicable,
                               NotCoveringWithinBound,
                               SpacingViolation,
                               TruncationTooSmall)
from leodyn.interval_dynamics import IntervalSet, distance, doubling_map, identity_map
from leodyn.specification import (IntervalRegionSystem,
                                  OrbitSegment,
                                  ShadowResult,
                                  ShiftRegionSystem,
                                  SpecificationInstance,
                                  SpecificationFailureWitness,
                                  covering_time,
                                  extension_period,
                                  periodic_extend,
                                  periodic_shadow,
                                  shadow,
                                  spec_failure_witness,
                                  validate_spacing,
                                  verify_shadowing)
from leodyn.symbolic import (SymbolSequence,
                             full_shift,
                             golden_mean_shift,
                             sigma_graph)


def make_spec(segments, gap, eps):
    return SpecificationInstance([OrbitSegment(a, b, x) for a, b, x in segments], gap, eps)


class CoveringTimeTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('specification_test')

    def test_doubling(self):
        system = IntervalRegionSystem(doubling_map())
        for k in range(2, 11):
            self.assertEqual(covering_time(system, F(1, 2 ** k)), k)

    def test_shifts(self):
        full = ShiftRegionSystem(full_shift(2))
        for r in range(1, 6):
            self.assertEqual(covering_time(full, F(1, 2 ** r)), r)
        # 1 -> 0 only, so a cylinder ending in 1 needs one more step
        self.assertEqual(covering_time(ShiftRegionSystem(golden_mean_shift()), F(1, 4)), 3)
        self.assertEqual(covering_time(ShiftRegionSystem(sigma_graph(4)), F(1, 2)), 4)

    def test_not_covering(self):
        with self.assertRaises(NotCoveringWithinBound):
            covering_time(IntervalRegionSystem(identity_map()), F(1, 4), max_n=5)

        # [1/3, 1) is invariant, so balls inside it never reach [0, 1/3)
        system = IntervalRegionSystem(example2_map())
        for eps in [F(1, 4), F(1, 8)]:
            with self.assertRaises(NotCoveringWithinBound):
                covering_time(system, eps, max_n=10)


class SpacingTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('specification_test')
        self.system = IntervalRegionSystem(doubling_map())

    def test_validate_spacing(self):
        good = make_spec([(0, 2, F(1, 3)), (5, 7, F(1, 5))], 3, F(1, 8))
        self.assertTrue(validate_spacing(good))

        bad = make_spec([(0, 2, F(1, 3)), (4, 5, F(1, 5)), (9, 9, 0)], 3, F(1, 8))
        check = validate_spacing(bad)
        self.assertFalse(check)
        self.assertEqual(check.index, 2)

        with self.assertRaises(SpacingViolation) as cm:
            shadow(self.system, bad)
        self.assertEqual(cm.exception.index, 2)

    def test_gap_below_covering_time(self):
        spec = make_spec([(0, 1, F(1, 3)), (3, 4, F(1, 5))], 2, F(1, 8))
        with self.assertRaises(GapBelowCoveringTime) as cm:
            shadow(self.system, spec)
        self.assertEqual(cm.exception.covering_time, 3)

    def test_invalid_segments(self):
        with self.assertRaises(ValueError):
            OrbitSegment(3, 2, F(1, 3))
        with self.assertRaises(ValueError):
            SpecificationInstance([], 3, F(1, 8))


class IntervalShadowTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('specification_test')
        self.system = IntervalRegionSystem(doubling_map())
        self.eps = F(1, 8)
        self.gap = covering_time(self.system, self.eps)

    def assertNested(self, certificate):
        self.assertTrue(all(certificate))
        for outer, inner in zip(certificate[:-1], certificate[1:]):
            self.assertTrue(inner <= outer)

    def test_single_segment(self):
        spec = make_spec([(0, 3, F(1, 3))], 0, self.eps)
        result = shadow(self.system, spec)
        self.assertEqual(result.representative, F(1, 3))
        self.assertEqual(result.deviation, 0)
        self.assertEqual(len(result.certificate), 1)

    def test_representative(self):
        region = IntervalSet([(F(1, 5), F(2, 5)), (F(3, 4), F(7, 8))])
        self.assertEqual(self.system.representative(region, F(7, 20)), F(7, 20))
        # least denominator over the components, not a midpoint
        self.assertEqual(self.system.representative(region, F(9, 10)), F(1, 3))
        self.assertEqual(self.system.representative(region), F(1, 3))
        self.assertEqual(self.system.representative(IntervalSet([(F(3, 4), F(7, 8))])), F(3, 4))

    def test_shadow(self):
        spec = make_spec([(0, 2, F(1, 3)), (5, 7, F(1, 5)), (10, 11, F(2, 7))],
                         self.gap, self.eps)
        result = shadow(self.system, spec)
        self.assertTrue(result.check)
        self.assertLessEqual(result.deviation, self.eps)
        self.assertEqual(len(result.certificate), 3)
        self.assertNested(result.certificate)
        self.assertTrue(verify_shadowing(self.system, spec, result.representative))

    def test_shadow_late_start(self):
        spec = make_spec([(2, 3, F(1, 3)), (6, 7, F(1, 5))], self.gap, self.eps)
        result = shadow(self.system, spec)
        y = result.representative
        self.assertTrue(verify_shadowing(self.system, spec, y))
        for seg in spec.segments:
            for k in range(seg.a, seg.b + 1):
                self.assertLessEqual(
                    distance(self.system.iterate(y, k), self.system.iterate(seg.x, k),
                             self.system.f.topology),
                    self.eps)

    def test_unpruned(self):
        spec = make_spec([(0, 1, F(1, 3)), (4, 5, F(3, 5))], self.gap, self.eps)
        pruned = shadow(self.system, spec)
        full = shadow(self.system, spec, prune=False)
        self.assertTrue(full.check)
        self.assertTrue(pruned.certificate[-1] <= full.certificate[-1])

    def random_spec(self, rng, eps, gap, start=True):
        """Up to 4 segments of at most 8 points, spaced by the gap plus some slack."""
        segments = []
        a = int(rng.randint(0, 3)) if start else 0
        for _ in range(int(rng.randint(1, 5))):
            b = a + int(rng.randint(0, 8))
            segments.append((a, b, F(int(rng.randint(0, 97)), 97)))
            a = b + gap + int(rng.randint(0, 3))
        return make_spec(segments, gap, eps)

    def test_random_specifications(self):
        rng = np.random.RandomState(5)
        eps = F(1, 64)
        gap = covering_time(self.system, eps)
        for trial in range(1000):
            spec = self.random_spec(rng, eps, gap)
            result = shadow(self.system, spec)
            self.assertLessEqual(result.deviation, eps)
            self.assertNested(result.certificate)
            if trial % 100 == 0:
                self.log.info('trial {}: {!r}'.format(trial, result))

    def test_periodic_shadow(self):
        spec = make_spec([(0, 1, F(1, 3)), (4, 5, F(1, 5))], self.gap, self.eps)
        self.assertEqual(extension_period(spec), 12)

        extended = periodic_extend(spec)
        self.assertEqual(len(extended), 3)
        self.assertEqual((extended.segments[-1].a, extended.segments[-1].b), (8, 9))
        self.assertEqual(extended.segments[-1].lag, 8)

        result = periodic_shadow(self.system, spec)
        y = result.representative
        self.assertEqual(result.period, 12)
        self.assertEqual(result.periodic, {'period': 12})
        self.assertEqual(self.system.iterate(y, 12), y)
        self.assertTrue(verify_shadowing(self.system, spec, y))

    def test_random_periodic(self):
        rng = np.random.RandomState(6)
        eps = F(1, 64)
        gap = covering_time(self.system, eps)
        for trial in range(200):
            spec = self.random_spec(rng, eps, gap, start=False)
            first, last = spec.segments[0], spec.segments[-1]
            result = periodic_shadow(self.system, spec)
            y = result.representative
            self.assertEqual(result.period, last.b + gap + first.b - first.a + gap)
            self.assertEqual(self.system.iterate(y, result.period), y)
            self.assertLessEqual(result.deviation, eps)

    def test_json(self):
        spec = make_spec([(0, 2, F(1, 3)), (5, 7, F(1, 5))], self.gap, self.eps)
        data = spec.to_json(self.system)
        self.assertEqual(data['eps'], '1/8')
        again = SpecificationInstance.from_json(data, self.system)
        self.assertEqual(again.segments, spec.segments)
        self.assertEqual((again.gap, again.eps), (spec.gap, spec.eps))

        short = SpecificationInstance.from_json(
            {'gap': 3, 'eps': '1/8', 'segments': [[0, 2, '1/3'], [5, 7, 0.25]]}, self.system)
        self.assertEqual(short.segments[1].x, F(1, 4))

        out = shadow(self.system, spec).to_json(self.system)
        self.assertEqual(set(out), {'representative', 'deviation', 'periodic',
                                    'certificate', 'spec'})
        self.assertIsNone(out['periodic'])

    def test_result_json(self):
        spec = make_spec([(0, 1, F(1, 3)), (4, 5, F(1, 5))], self.gap, self.eps)
        for result in [shadow(self.system, spec), periodic_shadow(self.system, spec)]:
            data = result.to_json(self.system)
            again = ShadowResult.from_json(data, self.system)
            self.assertEqual(again.representative, result.representative)
            self.assertEqual(again.deviation, result.deviation)
            self.assertEqual(again.period, result.period)
            self.assertEqual(again.certificate, result.certificate)
            self.assertEqual(again.spec.segments, result.spec.segments)
            self.assertTrue(again.check)
            self.assertEqual(again.to_json(self.system), data)


class ShiftShadowTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('specification_test')
        self.system = ShiftRegionSystem(full_shift(2))
        self.x1 = SymbolSequence.periodic((0, 1))
        self.x2 = SymbolSequence.periodic((1,))
        self.spec = SpecificationInstance([OrbitSegment(0, 1, self.x1),
                                           OrbitSegment(3, 3, self.x2)], 1, F(1, 2))

    def test_shadow(self):
        result = shadow(self.system, self.spec)
        self.assertEqual(result.representative, self.x1)
        self.assertEqual(result.deviation, F(1, 2))
        self.assertEqual(result.certificate[-1].words, ((0, 1, 0, 1), (0, 1, 1, 1)))

    def test_periodic_shadow(self):
        self.assertEqual(extension_period(self.spec), 6)
        result = periodic_shadow(self.system, self.spec)
        self.assertEqual(result.period, 6)
        self.assertEqual(result.representative.shift(6), result.representative)
        self.assertEqual(result.representative, self.x1)

    def test_result_json(self):
        result = shadow(self.system, self.spec)
        again = ShadowResult.from_json(result.to_json(self.system), self.system)
        self.assertEqual(again.representative, self.x1)
        self.assertEqual([R.words for R in again.certificate],
                         [R.words for R in result.certificate])

    def test_point_from_json(self):
        system = ShiftRegionSystem(golden_mean_shift())
        self.assertEqual(system.point_from_json({'prefix': [1], 'cycle': [0]}),
                         SymbolSequence((1,), (0,)))
        with self.assertRaises(ValueError):
            system.point_from_json([1])


class SpecFailureWitnessTest(unittest.TestCase):

    def setUp(self):
        self.log = logging.getLogger('specification_test')
        self.space = sigma_graph(12)

    def test_witness(self):
        for N in range(1, 11):
            witness = spec_failure_witness(self.space, N)
            self.assertEqual(witness.n, N + 2)
            self.assertEqual(witness.gap, N)
            self.assertEqual(witness.first_hit, N + 1)
            self.assertNotIn(1, witness.reachable)
            self.assertEqual(min(witness.reachable), 2)
            self.assertEqual(witness.to_json()['n'], N + 2)

            again = SpecificationFailureWitness.from_json(witness.to_json())
            self.assertEqual(again.to_json(), witness.to_json())
            self.assertEqual(again.spec.segments, witness.spec.segments)
            self.assertEqual(again.spec.eps, F(1, 4))

    def test_witness_cannot_be_shadowed(self):
        system = ShiftRegionSystem(self.space)
        for N in range(1, 7):
            witness = spec_failure_witness(self.space, N)
            with self.assertRaises(EmptyRefinement):
                shadow(system, witness.spec, covering=N)

    def test_errors(self):
        with self.assertRaises(NotApplicable):
            spec_failure_witness(full_shift(2), 3)
        with self.assertRaises(TruncationTooSmall):
            spec_failure_witness(sigma_graph(5), 4)
        with self.assertRaises(ValueError):
            spec_failure_witness(self.space, 0)


if __name__ == '__main__':
    unittest.main()
