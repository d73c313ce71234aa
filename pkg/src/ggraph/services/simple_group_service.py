from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional

import numpy as np
import pandas as pd
from sympy import factorint
from tqdm import tqdm

from ggraph.components.analysis.difference import isolated_element_indices
from ggraph.components.graphs.constructors import build_graph, class_edge_count
from ggraph.components.groups.builders import (
    identity_matrix,
    matrix_composer,
    matrix_labeler,
    projective_special_linear,
)
from ggraph.components.groups.cyclic_lattice import CyclicLattice
from ggraph.components.groups.finite_group import ClosureGroup, FiniteGroup
from ggraph.components.groups.galois_field import galois_field, prime_power_decomposition
from ggraph.config.config import Config
from ggraph.exception import GGraphError, InvalidParameter
from ggraph.logger_manager import LoggerManager
from ggraph.models.psl_verdict import PslNullVerdict, PslScanRow
from ggraph.services.graph_service import GraphService

logging = LoggerManager.get_logger(__name__)

DEFAULT_PSL_SCAN = (4, 5, 7, 8, 9, 11, 13, 16, 25)


def prime_power_or_two_primes(factors: dict[int, int]) -> bool:
    """A prime power (1 included) or a product of two distinct primes."""
    if len(factors) <= 1:
        return True
    return len(factors) == 2 and all(e == 1 for e in factors.values())


def psl2_null_predicate(q: int) -> PslNullVerdict:
    prime_power_decomposition(q)
    if q < 4:
        raise InvalidParameter(f"PSL(2,{q}) is not simple; need q >= 4")
    d = gcd(q - 1, 2)
    lower, upper = (q - 1) // d, (q + 1) // d
    lower_factors = {int(p): int(e) for p, e in factorint(lower).items()}
    upper_factors = {int(p): int(e) for p, e in factorint(upper).items()}
    return PslNullVerdict(
        q=q,
        d=d,
        lower=lower,
        lower_factors=lower_factors,
        upper=upper,
        upper_factors=upper_factors,
        predicate=prime_power_or_two_primes(lower_factors) and prime_power_or_two_primes(upper_factors),
    )


@dataclass
class Sl34Check:
    ok: bool
    violated: Optional[str] = None
    subgroup_order: int = 0
    involutions: int = 0
    order_four: int = 0
    details: dict[str, str] = field(default_factory=dict)


class SimpleGroupService:
    """
    PSL(2,q) construction and nullness scan, the dihedral reduction check and
    the quaternion subgroup of SL(3,4).
    """

    def __init__(self, config: Optional[Config] = None, graphs: Optional[GraphService] = None):
        self.config = config or Config()
        self.graphs = graphs or GraphService(self.config)

    def psl2(self, q: int) -> FiniteGroup:
        if q > 127:
            raise InvalidParameter(f"PSL(2,{q}): q must be at most 127")
        return projective_special_linear(q, self.config.order_cap, self.config.table_cap)

    def psl2_nullness_scan(self, q_list: Iterable[int] = DEFAULT_PSL_SCAN) -> list[PslScanRow]:
        rows = []
        for q in tqdm(list(q_list), desc="🔭 PSL(2,q)", unit="group", disable=not self.config.show_progress):
            verdict = psl2_null_predicate(q)
            try:
                lattice = CyclicLattice(self.psl2(q))
            except GGraphError as e:
                logging.warning(f"⚠️ PSL(2,{q}) skipped: {e}")
                rows.append(PslScanRow(q, 0, verdict.predicate, None, error=str(e), verdict=verdict))
                continue
            edges = class_edge_count(lattice, "diff_undeleted")
            row = PslScanRow(
                q=q,
                order=lattice.group.order,
                predicate=verdict.predicate,
                computed_null=edges == 0,
                difference_edges=edges,
                verdict=verdict,
            )
            logging.info(
                f"🔭 PSL(2,{q}) order {row.order}: predicate={row.predicate}, "
                f"null={row.computed_null}, agree={row.agree}"
            )
            rows.append(row)
        return rows

    @staticmethod
    def scan_frame(rows: list[PslScanRow]) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "q": r.q,
                    "order": r.order,
                    "lower": r.verdict.lower if r.verdict else None,
                    "upper": r.verdict.upper if r.verdict else None,
                    "predicate": r.predicate,
                    "computed_null": r.computed_null,
                    "difference_edges": r.difference_edges,
                    "agree": r.agree,
                }
                for r in rows
            ]
        )

    def dihedral_reduction_check(self, n: int) -> bool:
        """
        D(D_2n) equals D(Z_n) under r^k -> k: the rotations carry the same
        edges and every reflection is an isolated involution.
        """
        if n < 3:
            raise InvalidParameter(f"dihedral reduction needs n >= 3, got {n}")
        dihedral = self.graphs.lattice(f"D({2 * n})")
        cyclic = self.graphs.lattice(f"Z({n})")
        if not isolated_element_indices(dihedral) >= set(range(n, 2 * n)):
            return False
        dg = build_graph(dihedral, "diff", self.config.vertex_cap)
        cg = build_graph(cyclic, "diff", self.config.vertex_cap)
        # D(m) puts r^k at index k, matching k in Z(n)
        return dg.elements() == cg.elements() and dg.rows == cg.rows

    def sl34_quaternion_check(self) -> Sl34Check:
        field4 = galois_field(4)
        one = 1
        omega = field4.primitive_element
        dim = 3
        compose = matrix_composer(field4, dim)

        def mat(a: int) -> list[int]:
            return [one, a, 0, 0, one, int(field4.inv[a]), 0, 0, one]

        def mul(a: list[int], b: list[int]) -> list[int]:
            return compose(np.array([a]), np.array([b]))[0].tolist()

        def det(m: list[int]) -> int:
            a, b, c, d, e, f, g, h, i = m
            terms = [
                field4.mul[a, field4.add[field4.mul[e, i], field4.neg[field4.mul[f, h]]]],
                field4.neg[field4.mul[b, field4.add[field4.mul[d, i], field4.neg[field4.mul[f, g]]]]],
                field4.mul[c, field4.add[field4.mul[d, h], field4.neg[field4.mul[e, g]]]],
            ]
            total = 0
            for t in terms:
                total = int(field4.add[total, t])
            return total

        identity = identity_matrix(dim)
        z = [one, 0, one, 0, one, 0, 0, 0, one]
        result = Sl34Check(ok=True)
        for a in (one, omega, field4.power(omega, 2)):
            xa = mat(a)
            name = f"X_{field4.label(a)}"
            if det(xa) != one:
                return Sl34Check(ok=False, violated=f"det({name}) = {field4.label(det(xa))}")
            if mul(xa, xa) != z:
                return Sl34Check(ok=False, violated=f"{name}^2 != Z")
            result.details[name] = matrix_labeler(field4, dim)(xa)
        if mul(z, z) != identity:
            return Sl34Check(ok=False, violated="Z^2 != I")

        group = ClosureGroup(
            "<X_1, X_w>",
            identity,
            [mat(one), mat(omega)],
            compose,
            matrix_labeler(field4, dim),
            order_cap=64,
            table_cap=64,
        )
        orders = [group.element_order(g) for g in range(group.order)]
        result.subgroup_order = group.order
        result.involutions = orders.count(2)
        result.order_four = orders.count(4)
        if group.order != 8:
            result.ok, result.violated = False, f"|<X_1, X_w>| = {group.order}"
        elif result.involutions != 1 or result.order_four != 6:
            result.ok = False
            result.violated = f"{result.involutions} involutions and {result.order_four} elements of order 4"
        logging.debug(f"🧮 SL(3,4) quaternion check: order {group.order}, ok={result.ok}")
        return result
