"""
测试用的图语料和暴力算法
"""
import itertools
import json
import random
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy
from hypothesis import strategies as st

from singgraph.core.config import settings
from singgraph.core.errors import InvalidParameters
from singgraph.schemas.configuration import ConfigClass, ConfigTag
from singgraph.schemas.graph import DualGraph
from singgraph.services.generator_service import generator_service
from singgraph.services.graph_service import graph_service


def make_graph(weights: Dict[str, int], edges: Sequence[Tuple[str, str]]) -> DualGraph:
    return graph_service.build_graph(list(weights), weights, edges)


def graph_json(weights: Dict[str, int], edges: Sequence[Tuple[str, str]]) -> str:
    return json.dumps({
        "vertices": [{"id": v, "sq": w} for v, w in weights.items()],
        "edges": [list(edge) for edge in edges],
    })


def chain(*weights: int) -> DualGraph:
    return generator_service.gen_chain(list(weights))


def star(center: int, leaves: Sequence[int]) -> DualGraph:
    """中心 c，叶子 l1..lk"""
    weights = {"c": center}
    edges = []
    for i, w in enumerate(leaves):
        weights[f"l{i + 1}"] = w
        edges.append(("c", f"l{i + 1}"))
    return make_graph(weights, edges)


def a_graph(m: int) -> DualGraph:
    return chain(*([-2] * m))


def d_graph(m: int) -> DualGraph:
    """D_m：c 为分支点，叶子 u、w，长臂 a1..a_{m-3}（a1 与分支点相邻）"""
    weights = {"c": -2, "u": -2, "w": -2}
    edges = [("c", "u"), ("c", "w")]
    previous = "c"
    for i in range(m - 3):
        weights[f"a{i + 1}"] = -2
        edges.append((previous, f"a{i + 1}"))
        previous = f"a{i + 1}"
    return make_graph(weights, edges)


def e_graph(m: int) -> DualGraph:
    """E_m：分支点 c，臂 t1；p1-p2；r1..r_{m-4}"""
    weights = {"c": -2, "t1": -2, "p1": -2, "p2": -2}
    edges = [("c", "t1"), ("c", "p1"), ("p1", "p2")]
    previous = "c"
    for i in range(m - 4):
        weights[f"r{i + 1}"] = -2
        edges.append((previous, f"r{i + 1}"))
        previous = f"r{i + 1}"
    return make_graph(weights, edges)


def ade_graphs(max_vertices: int = 9) -> List[DualGraph]:
    graphs = [a_graph(m) for m in range(1, max_vertices + 1)]
    graphs += [d_graph(m) for m in range(4, max_vertices + 1)]
    graphs += [e_graph(m) for m in (6, 7, 8) if m <= max_vertices]
    return graphs


def catalog_classes(max_rank: int = 7) -> Iterator[ConfigClass]:
    """目录中参数较小的全部类（非法参数由模板自行拒绝）"""
    for name in [f"A{m}" for m in range(1, max_rank + 1)] + [f"D{m}" for m in range(4, max_rank + 1)] + ["E6", "E7", "E8"]:
        yield ConfigClass(tag=ConfigTag.ZERO, ade=name)
    for m in range(1, max_rank + 1):
        yield ConfigClass(tag=ConfigTag.TWO_AS, m=m)
        for q in range(1, m + 2):
            for tag in (ConfigTag.ONE_A, ConfigTag.TWO_AL, ConfigTag.TWO_AR, ConfigTag.THREE_A):
                yield ConfigClass(tag=tag, q=q, m=m)
    for k in range(2, max_rank // 2 + 1):
        for tag in (ConfigTag.TWO_D_EVEN, ConfigTag.TWO_D_ODD, ConfigTag.ONE_D_II_EVEN, ConfigTag.ONE_D_II_ODD):
            yield ConfigClass(tag=tag, k=k)
    for k in range(5, max_rank + 1):
        yield ConfigClass(tag=ConfigTag.ONE_D_I, k=k)
    yield ConfigClass(tag=ConfigTag.ONE_E6)
    yield ConfigClass(tag=ConfigTag.ONE_E7)


def catalog_instances(max_rank: int = 7, weight: int = -3, max_vertices: Optional[int] = None):
    """(类, 实例) 对，连出叶子的权重都取 weight"""
    from singgraph.services.catalog_service import catalog_service

    for config_class in catalog_classes(max_rank):
        try:
            template = catalog_service.template(config_class)
        except InvalidParameters:
            continue
        n = sum(template.attachments)
        if max_vertices is not None and template.shape.rank + n > max_vertices:
            continue
        yield config_class, generator_service.gen_catalog(config_class, [weight] * n)


def random_trees(count: int, max_vertices: int, seed: Optional[int] = None, weight_choices=None) -> List[DualGraph]:
    rng = random.Random(settings.SEED if seed is None else seed)
    options = {"weight_choices": weight_choices} if weight_choices else {}
    return [generator_service.random_tree(rng, max_vertices=max_vertices, **options) for _ in range(count)]


def brute_force_fundamental_cycle(g: DualGraph, bound: Dict[str, int]) -> Dict[str, int]:
    """
    枚举 1 ≤ r_v ≤ bound_v 的所有 cycle，取满足 r·E_v ≤ 0 的那些的逐分量最小值

    bound 取 Laufer 算法的结果即可：基本 cycle 若存在必在这个盒子里，逐分量最小值仍满足条件。
    """
    vertices = list(g.vertices)
    feasible = []
    for values in itertools.product(*(range(1, bound[v] + 1) for v in vertices)):
        r = dict(zip(vertices, values))
        if all(g.weight(v) * r[v] + sum(r[u] for u in g.neighbors(v)) <= 0 for v in vertices):
            feasible.append(r)
    if not feasible:
        raise AssertionError("盒子里没有满足条件的 cycle")
    return {v: min(r[v] for r in feasible) for v in vertices}


def sympy_negative_definite(g: DualGraph) -> bool:
    """用 sympy 计算 -M 的全部顺序主子式"""
    matrix = sympy.Matrix(graph_service.intersection_matrix(g))
    n = matrix.shape[0]
    return all((-matrix[:k, :k]).det() > 0 for k in range(1, n + 1))


@st.composite
def trees(draw, max_vertices: int = 7, weights=st.integers(min_value=-6, max_value=-2)):
    """随机树（不保证负定）"""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    ids = [f"t{i + 1}" for i in range(n)]
    parents = [draw(st.integers(min_value=0, max_value=i - 1)) for i in range(1, n)]
    vertex_weights = {v: draw(weights) for v in ids}
    edges = [(ids[p], ids[i + 1]) for i, p in enumerate(parents)]
    return make_graph(vertex_weights, edges)


@st.composite
def tree_with_cycles(draw, max_vertices: int = 6, max_multiplicity: int = 4):
    g = draw(trees(max_vertices=max_vertices))
    cycle_values = st.integers(min_value=-max_multiplicity, max_value=max_multiplicity)
    c1 = {v: draw(cycle_values) for v in g.vertices}
    c2 = {v: draw(cycle_values) for v in g.vertices}
    c3 = {v: draw(cycle_values) for v in g.vertices}
    return g, c1, c2, c3


@st.composite
def permutations_of(draw, g: DualGraph):
    return draw(st.permutations(list(g.vertices)))


def path_weights(g: DualGraph) -> List[int]:
    """链的自交数，从下标较小的端点开始"""
    ends = [v for v in g.vertices if g.degree(v) <= 1]
    order = [ends[0]]
    previous = None
    while True:
        nxt = [u for u in g.neighbors(order[-1]) if u != previous]
        if not nxt:
            break
        previous = order[-1]
        order.append(nxt[0])
    return [g.weight(v) for v in order]
