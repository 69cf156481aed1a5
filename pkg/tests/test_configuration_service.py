#!/usr/bin/env python3
"""
RDP 配置服务测试：抽取、分类、黑顶点重数、h¹(A)
"""
import random
import unittest
from collections import Counter

import networkx as nx

from singgraph.core.config import settings
from singgraph.core.errors import DomainError, InvalidParameters, NotAlmostReduced, NotInCatalog, NotRational
from singgraph.schemas.configuration import ConfigClass, ConfigTag
from singgraph.services.catalog_service import catalog_service
from singgraph.services.configuration_service import configuration_service
from singgraph.services.cycle_service import cycle_service
from singgraph.services.generator_service import generator_service
from singgraph.services.graph_service import graph_service
from singgraph.services.report_service import report_service
from tests.corpus import (
    a_graph,
    catalog_instances,
    chain,
    d_graph,
    e_graph,
    graph_json,
    random_trees,
    star,
)


def passes_check(g) -> bool:
    try:
        report_service.check_graph(g)
    except DomainError:
        return False
    return True


def classified(g):
    z = cycle_service.fundamental_cycle(g).final
    return z, configuration_service.classify_all(g, z)


def shuffled_copy(g, rng):
    """改名并打乱顶点顺序、边的顺序和每条边两端的顺序，再从 JSON 重新解析"""
    mapping = {v: f"p{i}" for i, v in enumerate(rng.sample(list(g.vertices), len(g)))}
    order = rng.sample(list(g.vertices), len(g))
    edges = [(mapping[a], mapping[b]) if rng.random() < 0.5 else (mapping[b], mapping[a]) for a, b in g.edges]
    rng.shuffle(edges)
    return mapping, graph_service.parse_graph(graph_json({mapping[v]: g.weight(v) for v in order}, edges))


class TestExtractConfigurations(unittest.TestCase):
    """抽取"""

    def test_no_minus_two_curves(self):
        g = chain(-4)
        self.assertEqual(configuration_service.extract_configurations(g, graph_service.reduced_cycle(g)), [])

    def test_d4(self):
        g = d_graph(4)
        z = cycle_service.fundamental_cycle(g).final
        configs = configuration_service.extract_configurations(g, z)
        self.assertEqual(len(configs), 1)
        config = configs[0]
        self.assertEqual(config.core_vertices, ("c", "u", "w", "a1"))
        self.assertEqual(config.n, 0)
        self.assertEqual(config.black_vertex, "c")
        self.assertEqual(config.s, 2)
        self.assertEqual(config.ade.name, "D4")
        self.assertIsNone(config.config_class)

    def test_two_attachments(self):
        g = chain(-3, -2, -2, -3)
        configs = configuration_service.extract_configurations(g, graph_service.reduced_cycle(g))
        self.assertEqual(len(configs), 1)
        self.assertEqual(configs[0].core_vertices, ("v2", "v3"))
        self.assertEqual(configs[0].attached_edges, (("v2", "v1"), ("v3", "v4")))
        self.assertEqual(configs[0].n, 2)
        self.assertIsNone(configs[0].black_vertex)
        self.assertEqual(configs[0].s, 1)

    def test_zero_a_chain_has_two_black_ends(self):
        g = a_graph(4)
        configs = configuration_service.extract_configurations(g, graph_service.reduced_cycle(g))
        self.assertEqual(configs[0].black_vertices, ("v1", "v4"))
        self.assertIsNone(configs[0].black_vertex)
        self.assertEqual(configs[0].s, 1)

    def test_several_cores_in_vertex_order(self):
        g = chain(-2, -2, -3, -2, -4, -2)
        configs = configuration_service.extract_configurations(g, graph_service.reduced_cycle(g))
        self.assertEqual([config.core_vertices for config in configs], [("v1", "v2"), ("v4",), ("v6",)])

    def test_requires_rational(self):
        g = star(-2, [-3, -3, -3, -3])
        with self.assertRaises(NotRational):
            configuration_service.extract_configurations(g, cycle_service.fundamental_cycle(g).final)


class TestClassify(unittest.TestCase):
    """分类"""

    def test_examples(self):
        _, configs = classified(d_graph(4))
        self.assertEqual(configs[0].config_class, ConfigClass(tag=ConfigTag.ZERO, ade="D4"))
        self.assertEqual(configs[0].config_class.label, "ZeroConfig(D4)")

        _, configs = classified(chain(-3, -2, -2, -3))
        self.assertEqual(configs[0].config_class, ConfigClass(tag=ConfigTag.TWO_AS, m=2))

        _, configs = classified(generator_service.gen_catalog(ConfigClass(tag=ConfigTag.ONE_E6), [-3]))
        self.assertEqual(configs[0].config_class.tag, ConfigTag.ONE_E6)

    def test_single_vertex_core(self):
        _, configs = classified(chain(-3, -2))
        self.assertEqual(configs[0].config_class, ConfigClass(tag=ConfigTag.ONE_A, q=1, m=1))
        _, configs = classified(chain(-3, -2, -3))
        self.assertEqual(configs[0].config_class, ConfigClass(tag=ConfigTag.TWO_AS, m=1))

    def test_three_a_minimal(self):
        g = star(-2, [-3, -3, -3])
        z, configs = classified(g)
        self.assertEqual(configs[0].config_class, ConfigClass(tag=ConfigTag.THREE_A, q=2, m=1))
        self.assertEqual(z["c"], 2)
        self.assertEqual(configs[0].s, 2)

    def test_exceptional_zero_configurations(self):
        for m in (6, 7, 8):
            _, configs = classified(e_graph(m))
            self.assertEqual(configs[0].config_class, ConfigClass(tag=ConfigTag.ZERO, ade=f"E{m}"))

    def test_requires_almost_reduced(self):
        g = star(-3, [-2, -2, -2, -2])
        z = cycle_service.fundamental_cycle(g).final
        configs = configuration_service.extract_configurations(g, z)
        with self.assertRaises(NotAlmostReduced):
            configuration_service.classify(configs[0], g, z)

    def test_unknown_pattern_is_reported(self):
        # 两条连出边都接在 A3 的中间顶点上
        core = nx.path_graph(["v1", "v2", "v3"])
        with self.assertRaises(NotInCatalog):
            catalog_service.match(core, {"v1": 1, "v2": 1, "v3": 1}, {"v1": 0, "v2": 2, "v3": 0})

    def test_non_ade_core_is_not_in_catalog(self):
        with self.assertRaises(NotInCatalog):
            catalog_service.recognize_shape(nx.star_graph(4))
        with self.assertRaises(NotInCatalog):
            catalog_service.recognize_shape(nx.cycle_graph(3))

    def test_catalog_round_trip(self):
        seen = set()
        for config_class, g in catalog_instances(max_rank=8):
            if not passes_check(g):
                continue
            z, configs = classified(g)
            core = next(config for config in configs if "c1" in config.core_vertices)
            template = catalog_service.template(config_class)
            with self.subTest(config_class=config_class.label):
                self.assertEqual(core.config_class, config_class)
                self.assertEqual(
                    tuple(z[f"c{i + 1}"] for i in range(template.shape.rank)),
                    template.multiplicities,
                )
            seen.add(config_class.tag)
        self.assertEqual(seen, set(ConfigTag))

    def test_degenerate_parameters_are_rejected(self):
        with self.assertRaises(InvalidParameters):
            catalog_service.template(ConfigClass(tag=ConfigTag.TWO_AR, q=3, m=4))
        with self.assertRaises(InvalidParameters):
            catalog_service.template(ConfigClass(tag=ConfigTag.ONE_D_I, k=4))
        with self.assertRaises(InvalidParameters):
            catalog_service.template(ConfigClass(tag=ConfigTag.ONE_A, q=3, m=4))
        with self.assertRaises(InvalidParameters):
            catalog_service.template(ConfigClass(tag=ConfigTag.THREE_A, m=2))
        # 拐点重合的 2-AL 由分类器统一给出
        g = generator_service.gen_catalog(ConfigClass(tag=ConfigTag.TWO_AL, q=3, m=4), [-3, -3])
        _, configs = classified(g)
        self.assertEqual(configs[0].config_class.tag, ConfigTag.TWO_AL)

    def test_classification_is_total_on_random_trees(self):
        checked = 0
        for g in random_trees(400, 9, seed=settings.SEED + 10):
            if not passes_check(g):
                continue
            z, configs = classified(g)
            for config in configs:
                self.assertIsNotNone(config.config_class)
                self.assertLessEqual(config.n, 3)
                self.assertEqual(config.n, config.config_class.n)
            checked += 1
        self.assertGreater(checked, 20)


class TestBlackWeight(unittest.TestCase):
    """黑顶点重数与 h¹(A)"""

    def test_black_weights(self):
        cases = [
            (ConfigClass(tag=ConfigTag.TWO_AS, m=2), [-3, -3], 1),
            (ConfigClass(tag=ConfigTag.ONE_E6), [-3], 2),
            (ConfigClass(tag=ConfigTag.ONE_E7), [-3], 3),
        ]
        for config_class, weights, s in cases:
            with self.subTest(config_class=config_class.label):
                _, configs = classified(generator_service.gen_catalog(config_class, weights))
                self.assertEqual(configuration_service.black_weight(configs[0]), s)

    def test_h1_examples(self):
        g = chain(-3, -2, -4, -2)
        z, configs = classified(g)
        self.assertEqual(configuration_service.h1_A(g, z, configs), 0)

        for config_class, expected in ((ConfigClass(tag=ConfigTag.ONE_E7), 2), (ConfigClass(tag=ConfigTag.ONE_E6), 1)):
            g = generator_service.gen_catalog(config_class, [-3])
            z, configs = classified(g)
            self.assertEqual(configuration_service.h1_A(g, z, configs), expected)
            self.assertEqual(configuration_service.identity_value(g, z), expected)

    def test_zero_configurations_satisfy_identity(self):
        for g, expected in ((d_graph(4), 1), (e_graph(8), 1), (a_graph(5), 0), (d_graph(7), 1)):
            z, configs = classified(g)
            self.assertEqual(configuration_service.h1_A(g, z, configs), expected)

    def test_identity_on_random_trees(self):
        for g in random_trees(300, 9, seed=settings.SEED + 11):
            if not passes_check(g):
                continue
            z, configs = classified(g)
            total = configuration_service.h1_A(g, z, configs)
            self.assertEqual(total, sum(config.s - 1 for config in configs))
            self.assertGreaterEqual(total, 0)

    def test_hints(self):
        g = star(-2, [-3, -3, -3])
        _, configs = classified(g)
        self.assertEqual(configuration_service.three_a_count(configs), 1)
        self.assertEqual(configuration_service.n_histogram(configs), {"0": 0, "1": 0, "2": 0, "3": 1})
        self.assertFalse(configuration_service.only_one_configurations(configs))

    def test_histogram_keeps_large_n(self):
        """n > 3 的配置也计入直方图"""
        _, configs = classified(star(-2, [-3, -3, -3]))
        config = configs[0]
        wide = config.model_copy(update={
            "attached_edges": config.attached_edges + (("c", "y1"), ("c", "y2")),
        })
        histogram = configuration_service.n_histogram([config, wide, wide])
        self.assertEqual(histogram, {"0": 0, "1": 0, "2": 0, "3": 1, "5": 2})
        self.assertEqual(list(histogram), ["0", "1", "2", "3", "5"])


class TestRelabeling(unittest.TestCase):
    """分类结果与顶点的命名、顺序以及边的顺序无关"""

    def test_classification_is_invariant(self):
        rng = random.Random(settings.SEED + 12)
        corpus = [g for _, g in catalog_instances(max_rank=7, max_vertices=10)]
        corpus += random_trees(200, 9, seed=settings.SEED + 13)
        checked = 0
        for g in corpus:
            if not passes_check(g):
                continue
            mapping, permuted = shuffled_copy(g, rng)
            z, configs = classified(g)
            z_permuted, configs_permuted = classified(permuted)
            with self.subTest(vertices=g.vertices, weights=g.weights):
                self.assertEqual(
                    Counter(config.config_class for config in configs),
                    Counter(config.config_class for config in configs_permuted),
                )
                self.assertEqual(
                    sorted((config.ade.name, config.n, config.s) for config in configs),
                    sorted((config.ade.name, config.n, config.s) for config in configs_permuted),
                )
                self.assertEqual(
                    {frozenset(mapping[v] for v in config.core_vertices) for config in configs},
                    {frozenset(config.core_vertices) for config in configs_permuted},
                )
                self.assertEqual(
                    configuration_service.identity_value(g, z),
                    configuration_service.identity_value(permuted, z_permuted),
                )
                self.assertEqual(
                    configuration_service.h1_A(g, z, configs),
                    configuration_service.h1_A(permuted, z_permuted, configs_permuted),
                )
            checked += 1
        self.assertGreater(checked, 20)


if __name__ == "__main__":
    unittest.main()
