"""
Claims read off the divisor lattice of n: which divisor families give
cliques in the graphs of Z(n), the clique numbers those families predict,
and the embedding of every small graph into some D(Z(n)).
"""

from itertools import combinations
from typing import Optional

import networkx as nx
import numpy as np

from ggraph.components.analysis.cliques import class_clique
from ggraph.components.claims.base_claim import BaseClaim, Finding
from ggraph.components.divisors.divisor_lattice import (
    DivisorFamily,
    classify_family,
    divisors_of,
    omega_via_divisors,
    symbolic_diff_adjacent,
)
from ggraph.components.divisors.sperner import embed_in_cyclic, graph_to_sperner
from ggraph.components.graphs.constructors import class_adjacency, expand_class_graph
from ggraph.components.graphs.graph import Graph
from ggraph.logger_manager import LoggerManager
from ggraph.services.group_catalog_service import CatalogEntry
from ggraph.utils.bit_utils import mask_of

logging = LoggerManager.get_logger(__name__)

FAMILY_SWEEP_MAX = 300
EXHAUSTIVE_FAMILY_SIZE = 3
OMEGA_CHECKS = (30, 60, 210, 2310)
ATLAS_LAST = 52  # graphs on 1..5 vertices
RANDOM_GRAPH_ORDER = 6


class DivisorCliqueClaim(BaseClaim):
    claim_id = "sec6-cliques"
    statement = (
        "in Z(n), C(S) is a clique of the power graph iff S is a chain, of the intersection power graph "
        "iff S is intersecting, and one element per order is a clique of D iff S is intersecting Sperner"
    )

    def instances(self) -> list[CatalogEntry]:
        sweep = self.catalog.cyclic(self.config.disc_max, start=2)
        exact = [CatalogEntry(f"Z({n})", "omega", {"order": n, "m": n}) for n in OMEGA_CHECKS]
        return sweep + exact

    def instance_range(self) -> str:
        return (
            f"divisor families of Z(n), n <= {FAMILY_SWEEP_MAX} (size <= {EXHAUSTIVE_FAMILY_SIZE} exhaustive, "
            f"up to {self.config.max_family_size} sampled); orders of Z(n), n <= {self.config.disc_max}; "
            f"exact clique numbers for n in {list(OMEGA_CHECKS)}"
        )

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        n = entry.params["m"]
        if entry.family == "omega":
            return self._clique_numbers(entry, n)
        finding = self._symbolic_orders(entry)
        if finding is None and n <= FAMILY_SWEEP_MAX:
            finding = self._families(entry, n)
        return finding

    def _symbolic_orders(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        rows = class_adjacency(lattice, "diff_undeleted")
        orders = lattice.subgroup_orders
        for a in range(len(orders)):
            for b in range(a + 1, len(orders)):
                if symbolic_diff_adjacent(orders[a], orders[b]) != bool(rows[a] >> b & 1):
                    return self.fail(entry, f"orders {orders[a]} and {orders[b]} disagree with D")
        return None

    def _subsets(self, n: int, candidates: list) -> list[tuple]:
        subsets = [
            s for k in range(1, EXHAUSTIVE_FAMILY_SIZE + 1) for s in combinations(candidates, k)
        ]
        rng = np.random.default_rng(self.config.random_seed + n)
        for k in range(EXHAUSTIVE_FAMILY_SIZE + 1, self.config.max_family_size + 1):
            if k > len(candidates):
                break
            for _ in range(self.config.pair_samples):
                picked = sorted(rng.choice(len(candidates), size=k, replace=False).tolist())
                subsets.append(tuple(candidates[i] for i in picked))
        return subsets

    def _families(self, entry: CatalogEntry, n: int) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        cap = self.config.vertex_cap
        power = expand_class_graph(lattice, "power", cap).rows
        ipg = expand_class_graph(lattice, "ipg", cap).rows
        diff = expand_class_graph(lattice, "diff_undeleted", cap).rows
        by_order = {c.subgroup_order: c for c in lattice.classes}
        candidates = [d for d in divisors_of(n) if d.value > 1]

        def covers(rows, members: int, reps) -> bool:
            return all((rows[x] | 1 << x) & members == members for x in reps)

        for subset in self._subsets(n, candidates):
            flags = classify_family(DivisorFamily(n, subset))
            classes = [by_order[d.value] for d in subset]
            reps = [c.representative for c in classes]
            members = mask_of(x for c in classes for x in c.members)
            values = [d.value for d in subset]
            if covers(power, members, reps) != flags.is_chain:
                return self.fail(entry, f"C({values}) in the power graph vs chain = {flags.is_chain}")
            if covers(ipg, members, reps) != flags.is_intersecting:
                return self.fail(entry, f"C({values}) in the intersection power graph vs intersecting = {flags.is_intersecting}")
            if covers(diff, mask_of(reps), reps) != flags.is_intersecting_sperner:
                return self.fail(entry, f"representatives of {values} in D vs intersecting Sperner")
            self.observe_count("families")
        return None

    def _clique_numbers(self, entry: CatalogEntry, n: int) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        budget = self.config.search_budget
        summary = {}
        for kind, graph_kind in (("power", "power"), ("ipg", "ipg")):
            predicted = omega_via_divisors(n, kind, budget).value
            exact = len(class_clique(lattice, graph_kind, budget))
            summary[kind] = {"divisor_optimum": predicted, "exact": exact}
            if predicted != exact:
                return self.fail(entry, f"{kind}: divisor optimum {predicted}, exact clique number {exact}")

        result = omega_via_divisors(n, "diff", budget)
        exact = len(class_clique(lattice, "diff", budget))
        summary["diff"] = {
            "cardinality": result.value,
            "cardinality_witness": result.witness,
            "weighted": result.weighted_value,
            "weighted_witness": result.weighted_witness,
            "exact": exact,
        }
        self.observations.setdefault("clique_numbers", {})[str(n)] = summary
        if result.value != exact:
            return self.fail(entry, f"max |S| = {result.value} but the exact clique number is {exact}")
        if result.weighted_value != exact:
            return self.discrepancy(
                entry,
                f"sum of totients over {result.weighted_witness} gives {result.weighted_value}, "
                f"exact clique number is {exact} = max |S| over {result.witness}",
            )
        return None


class UniversalityClaim(BaseClaim):
    claim_id = "t:univ"
    statement = "every finite graph is an induced subgraph of D(Z(n)) for some squarefree n"

    def instances(self) -> list[CatalogEntry]:
        atlas = nx.graph_atlas_g()
        entries = [
            CatalogEntry(f"atlas #{i}", "atlas", {"graph": atlas[i]}) for i in range(1, ATLAS_LAST + 1)
        ]
        for i in range(self.config.random_graphs):
            g = nx.gnp_random_graph(RANDOM_GRAPH_ORDER, 0.5, seed=self.config.random_seed + i)
            entries.append(CatalogEntry(f"G(6, 1/2) #{i}", "random", {"graph": g}))
        return entries

    def instance_range(self) -> str:
        return (
            f"all graphs on 1..5 vertices; {self.config.random_graphs} random graphs on "
            f"{RANDOM_GRAPH_ORDER} vertices (seed {self.config.random_seed})"
        )

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        graph = Graph.from_networkx(entry.params["graph"], name=entry.spec)
        family = graph_to_sperner(graph)
        if not family.is_sperner():
            return self.fail(entry, "the vertex sets do not form a Sperner family")
        if family.intersection_graph().rows != graph.rows:
            return self.fail(entry, "the intersection graph of the family differs from the input")
        embedding = embed_in_cyclic(graph)
        if not embedding.verified:
            return self.fail(entry, f"adjacency differs on {embedding.mismatches}")
        self.observe_max("largest_ground_set", len(embedding.primes))
        return None
