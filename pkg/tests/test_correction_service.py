#!/usr/bin/env python3
"""
修正项与维数增量测试
"""
import unittest

from singgraph.core.config import settings
from singgraph.core.errors import DomainError, EmbeddingDimensionTooSmall, NotAlmostReduced
from singgraph.schemas.configuration import ConfigClass, ConfigTag
from singgraph.schemas.correction import CorrectionInterval, IntegerInterval
from singgraph.services.configuration_service import configuration_service
from singgraph.services.correction_service import correction_service
from singgraph.services.cycle_service import cycle_service
from singgraph.services.generator_service import generator_service
from singgraph.services.graph_service import graph_service
from singgraph.services.report_service import report_service
from tests.corpus import a_graph, chain, make_graph, random_trees, star


def correction(g):
    invariants = cycle_service.scalar_invariants(g)
    c = correction_service.correction_term(g, invariants.z)
    return invariants, c, correction_service.increments(invariants, c)


def two_three_a(shared_weight: int):
    """两个 ThreeA(q=2, m=1) 配置共用一条连出曲线 x"""
    return make_graph(
        {"c1": -2, "a1": -3, "a2": -3, "x": shared_weight, "c2": -2, "b1": -3, "b2": -3},
        [("c1", "a1"), ("c1", "a2"), ("c1", "x"), ("c2", "x"), ("c2", "b1"), ("c2", "b2")],
    )


class TestCorrectionTerm(unittest.TestCase):
    """c(X) 的区间"""

    def test_cone_series(self):
        for d in range(3, 11):
            with self.subTest(d=d):
                invariants, c, increments = correction(chain(-d))
                self.assertEqual(invariants.e, d + 1)
                self.assertEqual(invariants.mult, d)
                self.assertEqual((c.lo, c.hi), (0, 0))
                self.assertTrue(c.exact)
                self.assertEqual(increments.dt1, IntegerInterval(lo=d - 3, hi=d - 3))
                self.assertEqual(increments.dt2, IntegerInterval(lo=(d - 1) * (d - 3), hi=(d - 1) * (d - 3)))
                self.assertEqual(increments, correction_service.cone_increments(d))

    def test_single_minus_four(self):
        invariants, c, increments = correction(chain(-4))
        self.assertEqual(invariants.e, 5)
        self.assertTrue(c.exact)
        self.assertEqual(increments.dt1.lo, 1)
        self.assertEqual(increments.dt2.lo, 3)

    def test_three_a_with_negative_attachments(self):
        g = generator_service.gen_catalog(ConfigClass(tag=ConfigTag.THREE_A, q=2, m=1), [-3, -3, -3])
        invariants, c, increments = correction(g)
        self.assertEqual(invariants.e, 6)
        self.assertEqual((c.lo, c.hi), (1, 1))
        self.assertEqual(len(c.witnesses), 1)
        self.assertTrue(c.witnesses[0].counts_toward_lo)
        self.assertEqual(increments.dt1, IntegerInterval(lo=3, hi=3))
        self.assertEqual(increments.dt2, IntegerInterval(lo=9, hi=9))

    def test_three_a_with_undecided_attachment(self):
        g = generator_service.gen_catalog(ConfigClass(tag=ConfigTag.THREE_A, q=3, m=3), [-3, -3, -3])
        invariants, c, increments = correction(g)
        self.assertEqual(invariants.e, 6)
        self.assertEqual((c.lo, c.hi), (0, 1))
        self.assertFalse(c.exact)
        witness = c.witnesses[0]
        self.assertEqual(witness.adjacent, ("x1", "x2", "x3"))
        self.assertEqual(witness.adjacent_profile, {"x1": -1, "x2": 0, "x3": -1})
        self.assertFalse(witness.counts_toward_lo)
        self.assertEqual(increments.dt1, IntegerInterval(lo=2, hi=3))
        self.assertEqual(increments.dt2, IntegerInterval(lo=8, hi=9))

        g = generator_service.gen_catalog(ConfigClass(tag=ConfigTag.THREE_A, q=3, m=3), [-4, -4, -4])
        invariants, c, _ = correction(g)
        self.assertEqual(invariants.e, 9)
        self.assertEqual((c.lo, c.hi), (1, 1))

    def test_two_three_a_configurations(self):
        invariants, c, _ = correction(two_three_a(-5))
        self.assertEqual(invariants.e, 10)
        self.assertEqual((c.lo, c.hi), (2, 2))

        invariants, c, _ = correction(two_three_a(-4))
        self.assertEqual(invariants.e, 9)
        self.assertEqual((c.lo, c.hi), (0, 2))

    def test_requires_embedding_dimension_four(self):
        g = a_graph(5)
        with self.assertRaises(EmbeddingDimensionTooSmall) as ctx:
            correction_service.correction_term(g, graph_service.reduced_cycle(g))
        self.assertEqual(ctx.exception.code, "embedding_dimension_below_4")

    def test_requires_almost_reduced(self):
        g = star(-3, [-2, -2, -2, -2])
        with self.assertRaises(NotAlmostReduced):
            correction_service.correction_term(g, cycle_service.fundamental_cycle(g).final)

    def test_reduced_cycle_graphs_are_exact_zero(self):
        checked = 0
        for g in random_trees(300, 9, seed=settings.SEED + 20):
            invariants = cycle_service.scalar_invariants(g)
            if not invariants.rational or invariants.e < 4:
                continue
            if invariants.z != graph_service.reduced_cycle(g):
                continue
            _, c, _ = correction(g)
            self.assertEqual((c.lo, c.hi), (0, 0))
            checked += 1
        self.assertGreater(checked, 10)

    def test_bounds_on_random_trees(self):
        for g in random_trees(300, 9, seed=settings.SEED + 21):
            try:
                report_service.check_graph(g)
            except DomainError:
                continue
            invariants = cycle_service.scalar_invariants(g)
            if invariants.e < 4:
                continue
            configs = configuration_service.classify_all(g, invariants.z)
            c = correction_service.correction_term(g, invariants.z, configs)
            three_a = configuration_service.three_a_count(configs)
            self.assertEqual(c.hi, three_a)
            self.assertLessEqual(c.lo, c.hi)
            if three_a == 0:
                self.assertTrue(c.exact)
            profile = cycle_service.intersection_profile(g, invariants.z)
            if all(profile.values[v] < 0 for v, w in zip(g.vertices, g.weights) if w != -2):
                self.assertEqual((c.lo, c.hi), (three_a, three_a))

    def test_chains_are_exact_zero(self):
        for weights in ([-3], [-2, -5], [-2, -3, -2], [-3, -2, -2, -3], [-2, -2, -4, -2, -2]):
            _, c, _ = correction(chain(*weights))
            self.assertEqual((c.lo, c.hi), (0, 0))


class TestIncrements(unittest.TestCase):
    """dT1 / dT2"""

    def test_raising_correction_raises_increments(self):
        invariants = cycle_service.scalar_invariants(chain(-6))
        base = correction_service.increments(invariants, CorrectionInterval(lo=0, hi=1))
        raised = correction_service.increments(invariants, CorrectionInterval(lo=0, hi=2))
        self.assertEqual(raised.dt1.hi, base.dt1.hi + 1)
        self.assertEqual(raised.dt2.hi, base.dt2.hi + 1)
        self.assertEqual(raised.dt1.lo, base.dt1.lo)

    def test_interval_must_be_ordered(self):
        with self.assertRaises(ValueError):
            IntegerInterval(lo=2, hi=1)


if __name__ == "__main__":
    unittest.main()
