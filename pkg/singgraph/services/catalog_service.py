"""
RDP 配置目录服务
负责识别核心的 ADE 型、给出核心的规范顶点顺序，以及每一类配置在核心上的模板（重数与连出边数）
"""
import logging
from typing import Dict, List, Mapping, Sequence, Tuple

import networkx as nx

from singgraph.core.errors import InvalidParameters, NotInCatalog
from singgraph.schemas.configuration import AdeShape, ConfigClass, ConfigTag, CoreTemplate

logger = logging.getLogger(__name__)

# E 型三条臂（不含分支点）的长度
E_ARMS: Dict[int, Tuple[int, int, int]] = {6: (1, 2, 2), 7: (1, 2, 3), 8: (1, 2, 4)}


def _arm(graph: nx.Graph, branch, start) -> List:
    """从 branch 出发经 start 一直走到末端（branch 为 None 时 start 本身是链的一端）"""
    arm = [start]
    previous, current = branch, start
    while True:
        nxt = [u for u in graph.neighbors(current) if u != previous]
        if not nxt:
            return arm
        previous, current = current, nxt[0]
        arm.append(current)


class CatalogService:
    """配置目录"""

    def recognize_shape(self, core: nx.Graph) -> AdeShape:
        """
        识别由 -2 曲线构成的核心的 ADE 型

        Raises:
            NotInCatalog: 核心不是 A/D/E 型的树
        """
        m = core.number_of_nodes()
        if m == 0 or not nx.is_tree(core):
            raise NotInCatalog(f"核心（{m} 个顶点）不是树")
        degrees = sorted((d for _, d in core.degree()), reverse=True)
        if m == 1 or degrees[0] <= 2:
            return AdeShape(family="A", rank=m)
        branches = [v for v, d in core.degree() if d >= 3]
        if len(branches) != 1 or core.degree(branches[0]) != 3:
            raise NotInCatalog("核心有多于一个分支点或分支点度数大于 3")
        branch = branches[0]
        lengths = tuple(sorted(len(_arm(core, branch, u)) for u in core.neighbors(branch)))
        if lengths[0] == 1 and lengths[1] == 1:
            return AdeShape(family="D", rank=m)
        for rank, arms in E_ARMS.items():
            if lengths == arms:
                return AdeShape(family="E", rank=rank)
        raise NotInCatalog(f"臂长 {lengths} 不是 ADE 型")

    def orderings(self, core: nx.Graph, shape: AdeShape, order_key=None) -> List[List]:
        """
        核心的全部规范顶点顺序（模板编号与之对应），对称的核心会有多个

        order_key 用于在图自同构之外给出确定的枚举次序
        """
        key = order_key or (lambda v: v)
        nodes = sorted(core.nodes, key=key)
        if shape.family == "A":
            if len(nodes) == 1:
                return [nodes]
            end = next(v for v in nodes if core.degree(v) == 1)
            path = _arm(core, None, end)
            return [path, list(reversed(path))]

        branch = next(v for v in nodes if core.degree(v) == 3)
        arms = [_arm(core, branch, u) for u in sorted(core.neighbors(branch), key=key)]
        result = []
        if shape.family == "D":
            for i, long_arm in enumerate(arms):
                if shape.rank > 4 and len(long_arm) == 1:
                    continue
                leaves = [arm[0] for j, arm in enumerate(arms) if j != i]
                for u, w in (leaves, leaves[::-1]):
                    result.append(list(reversed(long_arm)) + [branch, u, w])
            return result

        lengths = E_ARMS[shape.rank]
        by_length: Dict[int, List[List]] = {}
        for arm in arms:
            by_length.setdefault(len(arm), []).append(arm)
        if shape.rank == 6:
            top = by_length[1][0]
            first, second = by_length[2]
            for a, b in ((first, second), (second, first)):
                result.append([branch] + top + a + b)
            return result
        return [[branch] + by_length[lengths[0]][0] + by_length[lengths[1]][0] + by_length[lengths[2]][0]]

    def shape_edges(self, shape: AdeShape) -> List[Tuple[int, int]]:
        """模板规范编号下的核心边"""
        m = shape.rank
        if shape.family == "A":
            return [(i, i + 1) for i in range(m - 1)]
        if shape.family == "D":
            branch = m - 3
            return [(i, i + 1) for i in range(branch)] + [(branch, m - 2), (branch, m - 1)]
        edges = []
        start = 1
        for length in E_ARMS[m]:
            edges.append((0, start))
            edges.extend((start + i, start + i + 1) for i in range(length - 1))
            start += length
        return edges

    def zero_multiplicities(self, shape: AdeShape) -> Tuple[int, ...]:
        """ADE 核心自身的基本 cycle（Laufer 算法），编号为模板规范顺序"""
        m = shape.rank
        neighbors: Dict[int, List[int]] = {i: [] for i in range(m)}
        for a, b in self.shape_edges(shape):
            neighbors[a].append(b)
            neighbors[b].append(a)
        z = [1] * m
        while True:
            for i in range(m):
                if -2 * z[i] + sum(z[j] for j in neighbors[i]) > 0:
                    z[i] += 1
                    break
            else:
                return tuple(z)

    def shape_of(self, config_class: ConfigClass) -> AdeShape:
        tag = config_class.tag
        if tag == ConfigTag.ZERO:
            name = config_class.ade or ""
            if len(name) < 2 or name[0] not in "ADE" or not name[1:].isdigit():
                raise InvalidParameters(f"无法识别的 ADE 型 {name!r}")
            shape = AdeShape(family=name[0], rank=int(name[1:]))
            if (shape.family == "A" and shape.rank < 1) or (shape.family == "D" and shape.rank < 4) \
                    or (shape.family == "E" and shape.rank not in E_ARMS):
                raise InvalidParameters(f"不存在 ADE 型 {name}")
            return shape
        if tag in (ConfigTag.ONE_A, ConfigTag.TWO_AL, ConfigTag.TWO_AR, ConfigTag.THREE_A, ConfigTag.TWO_AS):
            return AdeShape(family="A", rank=self._require(config_class.m, "m"))
        if tag in (ConfigTag.TWO_D_EVEN, ConfigTag.ONE_D_II_EVEN):
            return AdeShape(family="D", rank=2 * self._require(config_class.k, "k"))
        if tag in (ConfigTag.TWO_D_ODD, ConfigTag.ONE_D_II_ODD):
            return AdeShape(family="D", rank=2 * self._require(config_class.k, "k") + 1)
        if tag == ConfigTag.ONE_D_I:
            return AdeShape(family="D", rank=self._require(config_class.k, "k"))
        if tag == ConfigTag.ONE_E6:
            return AdeShape(family="E", rank=6)
        return AdeShape(family="E", rank=7)

    def _require(self, value, name: str) -> int:
        if value is None:
            raise InvalidParameters(f"缺少参数 {name}")
        return value

    def template(self, config_class: ConfigClass) -> CoreTemplate:
        """
        某一类配置在核心上的重数和连出边数

        Raises:
            InvalidParameters: 参数超出该类的取值范围
        """
        tag = config_class.tag
        shape = self.shape_of(config_class)
        m = shape.rank

        if tag == ConfigTag.ZERO:
            return CoreTemplate(shape=shape, multiplicities=self.zero_multiplicities(shape), attachments=(0,) * m)

        if tag == ConfigTag.TWO_AS:
            if m < 1:
                raise InvalidParameters("2-AS 需要 m ≥ 1")
            attachments = [0] * m
            attachments[0] += 1
            attachments[-1] += 1
            return CoreTemplate(shape=shape, multiplicities=(1,) * m, attachments=tuple(attachments))

        if shape.family == "A":
            alpha, beta = {
                ConfigTag.ONE_A: (0, 0),
                ConfigTag.TWO_AL: (0, 1),
                ConfigTag.TWO_AR: (1, 0),
                ConfigTag.THREE_A: (1, 1),
            }[tag]
            q = self._require(config_class.q, "q")
            minimum_q = 1 if tag == ConfigTag.ONE_A else 2
            if m < 1 or q < minimum_q or 2 * q > m + 1 + alpha + beta:
                raise InvalidParameters(f"{tag.value} 不接受 q={q}, m={m}")
            if tag == ConfigTag.TWO_AR and 2 * q == m + 2:
                # 两个拐点重合时与 2-AL 是同一个配置，统一记为 2-AL
                raise InvalidParameters(f"TwoAR(q={q}, m={m}) 与 TwoAL(q={q}, m={m}) 相同")
            multiplicities = tuple(min(i + alpha, q, m + 1 + beta - i) for i in range(1, m + 1))
            attachments = [0] * m
            attachments[0] += alpha
            attachments[-1] += beta
            attachments[q - alpha - 1] += 1
            return CoreTemplate(shape=shape, multiplicities=multiplicities, attachments=tuple(attachments))

        if shape.family == "D":
            k = self._require(config_class.k, "k")
            arm_length = m - 2
            if tag == ConfigTag.ONE_D_I:
                if k < 5:
                    # k = 4 时与 1-D^II_4 相同
                    raise InvalidParameters(f"OneD_I 需要 k ≥ 5，得到 {k}")
                multiplicities = (2,) * arm_length + (1, 1)
                attachments = (1,) + (0,) * (m - 1)
                return CoreTemplate(shape=shape, multiplicities=multiplicities, attachments=attachments)
            if k < 2:
                raise InvalidParameters(f"{tag.value} 需要 k ≥ 2，得到 {k}")
            alpha, leaves = {
                ConfigTag.TWO_D_EVEN: (1, (k, k)),
                ConfigTag.TWO_D_ODD: (1, (k, k + 1)),
                ConfigTag.ONE_D_II_EVEN: (0, (k - 1, k)),
                ConfigTag.ONE_D_II_ODD: (0, (k, k)),
            }[tag]
            arm = tuple(i + alpha for i in range(1, arm_length + 1))
            # 叶子 w 上总有一条连出边，2-D 另在长臂末端有一条
            attachments = [alpha] + [0] * (m - 1)
            attachments[m - 1] += 1
            return CoreTemplate(shape=shape, multiplicities=arm + leaves, attachments=tuple(attachments))

        if tag == ConfigTag.ONE_E6:
            return CoreTemplate(
                shape=shape,
                multiplicities=(4, 2, 3, 2, 3, 2),
                attachments=(0, 0, 0, 1, 0, 0),
            )
        return CoreTemplate(
            shape=shape,
            multiplicities=(6, 3, 4, 2, 5, 4, 3),
            attachments=(0, 0, 0, 0, 0, 0, 1),
        )

    def candidates(self, shape: AdeShape, n: int, max_multiplicity: int) -> List[ConfigClass]:
        """给定核心 ADE 型和连出边数时可能的类，按尝试顺序排列"""
        m = shape.rank
        if n == 0:
            return [ConfigClass(tag=ConfigTag.ZERO, ade=shape.name)]
        if shape.family == "A":
            q = max_multiplicity
            if n == 1:
                return [ConfigClass(tag=ConfigTag.ONE_A, q=q, m=m)]
            if n == 2:
                if q == 1:
                    return [ConfigClass(tag=ConfigTag.TWO_AS, m=m)]
                return [ConfigClass(tag=ConfigTag.TWO_AL, q=q, m=m), ConfigClass(tag=ConfigTag.TWO_AR, q=q, m=m)]
            if n == 3:
                return [ConfigClass(tag=ConfigTag.THREE_A, q=q, m=m)]
            return []
        if shape.family == "D":
            half = m // 2
            if n == 1:
                result = [ConfigClass(tag=ConfigTag.ONE_D_I, k=m)] if m >= 5 else []
                if m % 2 == 0:
                    result.append(ConfigClass(tag=ConfigTag.ONE_D_II_EVEN, k=half))
                else:
                    result.append(ConfigClass(tag=ConfigTag.ONE_D_II_ODD, k=half))
                return result
            if n == 2:
                if m % 2 == 0:
                    return [ConfigClass(tag=ConfigTag.TWO_D_EVEN, k=half)]
                return [ConfigClass(tag=ConfigTag.TWO_D_ODD, k=half)]
            return []
        if n == 1 and m == 6:
            return [ConfigClass(tag=ConfigTag.ONE_E6)]
        if n == 1 and m == 7:
            return [ConfigClass(tag=ConfigTag.ONE_E7)]
        return []

    def match(
        self,
        core: nx.Graph,
        multiplicities: Mapping,
        attachments: Mapping,
        order_key=None,
    ) -> ConfigClass:
        """
        在核心的所有规范顺序下与候选类的模板比较（重数和连出边数都要一致），返回第一个匹配的类

        Raises:
            NotInCatalog: 没有模板匹配
        """
        shape = self.recognize_shape(core)
        n = sum(attachments.values())
        orderings = self.orderings(core, shape, order_key)
        for candidate in self.candidates(shape, n, max(multiplicities.values())):
            try:
                template = self.template(candidate)
            except InvalidParameters:
                continue
            for ordering in orderings:
                if tuple(multiplicities[v] for v in ordering) == template.multiplicities and \
                        tuple(attachments[v] for v in ordering) == template.attachments:
                    return candidate
        raise NotInCatalog(f"{shape.name} 核心（n={n}）不匹配任何已知的配置")

    def instantiate(self, config_class: ConfigClass, attachment_weights: Sequence[int]):
        """
        按模板构造一个对偶图：核心顶点 c1..cm（规范顺序，-2），连出的叶子 x1..xn 依次取给定权重

        Returns:
            (vertices, weights, edges)
        """
        template = self.template(config_class)
        n = sum(template.attachments)
        if len(attachment_weights) != n:
            raise InvalidParameters(f"{config_class.tag.value} 需要 {n} 个连出权重，得到 {len(attachment_weights)}")
        for w in attachment_weights:
            if w > -3:
                raise InvalidParameters(f"连出的曲线自交数必须 ≤ -3，得到 {w}")
        m = template.shape.rank
        core_ids = [f"c{i + 1}" for i in range(m)]
        vertices = list(core_ids)
        weights = {v: -2 for v in core_ids}
        edges = [(core_ids[a], core_ids[b]) for a, b in self.shape_edges(template.shape)]
        leaf = 0
        for i, count in enumerate(template.attachments):
            for _ in range(count):
                leaf_id = f"x{leaf + 1}"
                vertices.append(leaf_id)
                weights[leaf_id] = attachment_weights[leaf]
                edges.append((core_ids[i], leaf_id))
                leaf += 1
        return vertices, weights, edges


catalog_service = CatalogService()
