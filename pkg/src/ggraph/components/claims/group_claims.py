"""
Claims swept over group catalogs: isolated vertices, connectivity and
diameter, emptiness of p-group difference graphs, perfectness, bipartiteness,
degree parity and the structural facts the constructions rest on.

Most checks read the generator-class quotient; element-level graphs are
built only where a claim is about element identities.
"""

from typing import Optional

import numpy as np
from sympy import factorint, isprime

from ggraph.components.analysis.cograph import is_cograph
from ggraph.components.analysis.difference import (
    even_order_clique_check,
    even_order_fraction,
    isolated_classes,
    isolated_element_indices,
    odd_elements_are_powers_of_shift,
)
from ggraph.components.analysis.measures import analyze_blowup, bfs_distances
from ggraph.components.analysis.odd_holes import is_induced_cycle, is_perfect
from ggraph.components.claims.base_claim import BaseClaim, Finding
from ggraph.components.graphs.constructors import (
    assert_blowup,
    brute_force_graph,
    build_graph,
    class_edge_count,
    class_graph,
    expand_class_graph,
)
from ggraph.components.groups.cyclic_lattice import (
    CyclicLattice,
    is_cyclic,
    is_generalized_quaternion,
    maximal_cyclic_classes,
    pi_of_center,
    subgroup,
)
from ggraph.components.groups.spec_parser import parse_group_spec
from ggraph.exception import InvariantViolation
from ggraph.logger_manager import LoggerManager
from ggraph.models.verification_report import Outcome
from ggraph.services.group_catalog_service import CatalogEntry, is_pq

logging = LoggerManager.get_logger(__name__)

BLOWUP_MAX_ORDER = 200
BLOWUP_ABELIAN_MAX = 100
BLOWUP_DIHEDRAL_MAX = 50
EPG_BRUTE_FORCE_MAX = 64
SUBGROUP_MAX_ORDER = 120
SUBGROUP_SAMPLES = 8


def is_odd_cyclic_times_quaternion(spec: str) -> bool:
    """Spec of the form Z(m1) x ... x Q(2^n) with every cyclic factor of odd order."""
    factors = parse_group_spec(spec).factors
    quaternions = [a for a in factors if a.kind == "Q"]
    others = [a for a in factors if a.kind != "Q"]
    return len(quaternions) == 1 and all(a.kind == "Z" and a.params[0] % 2 == 1 for a in others)


def _labels(lattice: CyclicLattice, elements) -> str:
    return ", ".join(lattice.group.label(x) for x in sorted(elements))


class CatalogClaim(BaseClaim):
    """A claim over the full catalog: abelian sweep plus every named family."""

    def instances(self) -> list[CatalogEntry]:
        return self.catalog.full()

    def instance_range(self) -> str:
        c = self.config
        return (
            f"abelian groups of order <= {c.abelian_max_order}; D(2n), 3 <= n <= {c.dihedral_max}; "
            f"Q(8..64); Z(m) x Q(2^n); explicit list ({len(c.explicit_groups)} groups)"
        )

    def central_primes_ok(self, lattice: CyclicLattice) -> bool:
        if len(pi_of_center(lattice.group)) >= 2:
            return True
        self.observe_count("outside_hypothesis")
        return False


# === isolated vertices ===


class PrimeOrderIsolationClaim(CatalogClaim):
    claim_id = "p-elts"
    statement = "the identity and every element of prime order are isolated; so are the generators of a cyclic group"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        isolated = set(isolated_classes(lattice))
        expected = {
            c.class_id for c in lattice.classes if c.subgroup_order == 1 or isprime(c.subgroup_order)
        }
        if is_cyclic(lattice):
            expected.add(lattice.classes[-1].class_id)
        missing = sorted(expected - isolated)
        if missing:
            orders = sorted({lattice.classes[c].subgroup_order for c in missing})
            return self.fail(entry, f"elements of order {orders} have neighbours")
        return None


class IsolatedSetClaim(BaseClaim):
    claim_id = "t:isol"
    statement = "isolated vertices: all of Z(pq); generators and identity of other Z(m); prime-order elements and identity otherwise"

    def instances(self) -> list[CatalogEntry]:
        cyclic = [e for e in self.catalog.cyclic() if len(e.params["primes"]) >= 2]
        non_cyclic = [e for e in self.catalog.abelian(min_primes=2) if not e.params["cyclic"]]
        return cyclic + non_cyclic + self.catalog.cyclic_times_quaternion()

    def instance_range(self) -> str:
        return (
            f"Z(m), m <= {self.config.family_max}, at least two prime divisors; "
            f"non-cyclic abelian groups of order <= {self.config.abelian_max_order} "
            f"with at least two prime divisors; Z(m) x Q(2^n)"
        )

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        group = lattice.group
        computed = isolated_element_indices(lattice)
        identity = set(lattice.classes[lattice.identity_class].members)
        prime_order = {
            x for c in lattice.classes if isprime(c.subgroup_order) for x in c.members
        }

        if not is_cyclic(lattice):
            if len(pi_of_center(group)) < 2:
                self.observe_count("outside_hypothesis")
                return None
            if computed != prime_order | identity:
                return self.fail(entry, f"isolated set {{{_labels(lattice, computed)}}}")
            return None

        if is_pq(group.order):
            if computed != set(range(group.order)):
                return self.fail(entry, f"{group.order - len(computed)} element(s) have neighbours")
            return None

        stated = set(lattice.classes[-1].members) | identity
        if computed == stated:
            return None
        if computed == stated | prime_order:
            return self.discrepancy(
                entry,
                f"isolated set is the generators, the identity and the prime-order elements "
                f"{{{_labels(lattice, prime_order)}}}; the cyclic case lists only generators and identity",
            )
        return self.fail(entry, f"isolated set {{{_labels(lattice, computed)}}}")


class QuaternionIsolationClaim(BaseClaim):
    claim_id = "t:gq-isol"
    statement = "in Q(2^n) the isolated vertices are exactly the identity and the involution"

    def instances(self) -> list[CatalogEntry]:
        return self.catalog.quaternion(64)

    def instance_range(self) -> str:
        return "Q(8), Q(16), Q(32), Q(64)"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        z = lattice.group.unique_involution()
        computed = isolated_element_indices(lattice)
        if computed != {0, z}:
            return self.fail(entry, f"isolated set {{{_labels(lattice, computed)}}}")
        return None


# === emptiness ===


class TwoPrimesClaim(BaseClaim):
    claim_id = "t:twoprimes"
    statement = "for m with at least two prime divisors, D(Z(m)) is empty iff m = pq"

    def instances(self) -> list[CatalogEntry]:
        return [e for e in self.catalog.cyclic() if len(e.params["primes"]) >= 2]

    def instance_range(self) -> str:
        return f"Z(m), m <= {self.config.family_max}, at least two prime divisors"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        edges = class_edge_count(lattice, "diff_undeleted")
        if (edges == 0) != is_pq(entry.params["m"]):
            return self.fail(entry, f"{edges} edge(s) in D")
        return None


class PGroupEmptinessClaim(BaseClaim):
    claim_id = "t:empty"
    statement = "a p-group has empty D iff it is cyclic or a union of at least three proper cyclic subgroups"

    def instances(self) -> list[CatalogEntry]:
        return self.catalog.p_groups()

    def instance_range(self) -> str:
        return "abelian p-groups of order <= 256; Q(8..64)"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        edges = class_edge_count(lattice, "diff_undeleted")
        maximal = maximal_cyclic_classes(lattice)
        partition = all(
            not lattice.meets_nontrivially(a.class_id, b.class_id)
            for i, a in enumerate(maximal)
            for b in maximal[i + 1 :]
        )
        quaternion = is_generalized_quaternion(lattice)
        # maximal cyclic subgroups meeting trivially, quaternion groups excluded
        expected_empty = is_cyclic(lattice) or (partition and not quaternion)
        if (edges == 0) != expected_empty:
            return self.fail(entry, f"{edges} edge(s) in D, {len(maximal)} maximal cyclic subgroups")
        if quaternion and edges:
            return self.discrepancy(
                entry,
                f"a union of {len(maximal)} proper cyclic subgroups, yet D has {edges} edges; "
                f"emptiness needs the generalized quaternion groups excluded",
            )
        if edges and len(maximal) >= 3:
            self.observe_item("non_empty_unions", entry.spec)
        return None


class NullImpliesCographClaim(CatalogClaim):
    claim_id = "nulld-cograph"
    statement = "if D_undeleted(G) has no edges, the power graph of G is a cograph"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        null = class_edge_count(lattice, "diff_undeleted") == 0
        # the power graph blows classes up into closed twins, which never lie on an induced P4
        power = class_graph(lattice, "power")
        verdict = is_cograph(power)
        if null and not verdict.is_cograph:
            path = " - ".join(power.vertices[v].label for v in verdict.witness)
            return self.fail(entry, f"D is null but the power graph has the induced P4 {path}")
        if not null and verdict.is_cograph:
            self.observe_item("converse_fails", entry.spec)
        return None


# === connectivity and diameter ===


class ConnectivityClaim(CatalogClaim):
    claim_id = "t:conn"
    statement = "with |pi(Z(G))| >= 2, D(G) is connected iff G is not Z(pq); then its diameter is at most 6"
    diameter_bound = 6

    def instances(self) -> list[CatalogEntry]:
        return [e for e in self.catalog.full() if e.family != "abelian" or len(e.params["primes"]) >= 2]

    def in_scope(self, entry: CatalogEntry, lattice: CyclicLattice) -> bool:
        return self.central_primes_ok(lattice)

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        if not self.in_scope(entry, lattice):
            return None
        result = analyze_blowup(class_graph(lattice, "diff"))
        if is_cyclic(lattice) and is_pq(lattice.group.order):
            if result.connected:
                return self.fail(entry, "D(Z(pq)) is connected")
            return None
        if not result.connected:
            return self.fail(entry, f"D has {len(result.components)} components")
        self.observe_max("max_diameter", result.diameter, entry.family)
        if result.diameter > self.diameter_bound:
            return self.fail(entry, f"diameter {result.diameter} exceeds {self.diameter_bound}")
        return self.extra_checks(entry, lattice, result)

    def extra_checks(self, entry, lattice, result) -> Optional[Finding]:
        return None


class NonCyclicConnectivityClaim(ConnectivityClaim):
    claim_id = "t:conn2"
    statement = "with |pi(Z(G))| >= 2, G neither cyclic nor Z(odd) x Q(2^n): D(G) is connected, of diameter at most 5, with a triangle"
    diameter_bound = 5

    def in_scope(self, entry: CatalogEntry, lattice: CyclicLattice) -> bool:
        if is_cyclic(lattice) or is_odd_cyclic_times_quaternion(entry.spec):
            return False
        return self.central_primes_ok(lattice)

    def extra_checks(self, entry, lattice, result) -> Optional[Finding]:
        if result.girth != 3:
            return self.fail(entry, f"no triangle (girth {result.girth})")
        return None


class CyclicConnectivityClaim(BaseClaim):
    claim_id = "t:disc"
    statement = "for cyclic G with at least two primes, D(G) is disconnected iff G = Z(pq); otherwise diam <= 6"

    def instances(self) -> list[CatalogEntry]:
        return [e for e in self.catalog.cyclic(self.config.disc_max) if len(e.params["primes"]) >= 2]

    def instance_range(self) -> str:
        return f"Z(m), m <= {self.config.disc_max}, at least two prime divisors"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        graph = class_graph(lattice, "diff")
        result = analyze_blowup(graph)
        if is_pq(entry.params["m"]):
            return self.fail(entry, "D(Z(pq)) is connected") if result.connected else None
        if not result.connected:
            return self.fail(entry, f"D has {len(result.components)} components")
        self.observe_max("max_diameter", result.diameter)
        if result.diameter > 6:
            return self.fail(entry, f"diameter {result.diameter} exceeds 6")
        return self._weight_two_paths(entry, graph)

    def _weight_two_paths(self, entry: CatalogEntry, graph) -> Optional[Finding]:
        """Weight-2 vertices lie pairwise within distance 2 and every vertex is within 2 of one."""
        weight = [sum(factorint(v.order).values()) for v in graph.vertices]
        light = [c for c in range(graph.n) if weight[c] == 2]
        if not light:
            return self.fail(entry, "no vertex of weight 2")
        for c in range(graph.n):
            dist = bfs_distances(graph.rows, c)
            if weight[c] == 2:
                far = [d for d in light if d != c and dist[d] > 2]
                if far:
                    return self.fail(
                        entry, f"weight-2 vertices of orders {graph.vertices[c].order} and "
                        f"{graph.vertices[far[0]].order} are more than 2 apart"
                    )
            elif min(dist[d] for d in light) > 2:
                return self.fail(entry, f"order {graph.vertices[c].order} is more than 2 from every weight-2 vertex")
        return None


class CyclicTimesQuaternionClaim(BaseClaim):
    claim_id = "t:cxq"
    statement = "D(Z(m) x Q(2^n)), m odd, is connected with diameter at most 3"

    def instances(self) -> list[CatalogEntry]:
        return self.catalog.cyclic_times_quaternion()

    def instance_range(self) -> str:
        return "Z(m) x Q(2^n), m in {3, 5, 15, 21}, n in {3, 4}"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        result = analyze_blowup(class_graph(self.graphs.lattice(entry.spec), "diff"))
        if not result.connected:
            return self.fail(entry, f"D has {len(result.components)} components")
        self.observe_max("max_diameter", result.diameter)
        if result.diameter > 3:
            return self.fail(entry, f"diameter {result.diameter} exceeds 3")
        return None


# === perfectness, bipartiteness, degree parity ===


def explicit_hole_orders(primes: dict[int, int]) -> Optional[list[int]]:
    """
    Orders of a known induced 5-cycle in D(Z(m)) for m with three primes one
    of them squared, or with at least four primes; None otherwise.
    """
    ps = sorted(primes)
    if len(ps) >= 4:
        p1, p2, p3, p4 = ps[:4]
        return [p1 * p2, p1 * p3, p3 * p4, p1 * p2 * p3, p1 * p3 * p4]
    if len(ps) == 3:
        squared = [p for p in ps if primes[p] >= 2]
        if not squared:
            return None
        p1 = squared[0]
        p2, p3 = [p for p in ps if p != p1]
        return [p1 * p1, p1 * p2, p2 * p3, p1 * p1 * p2, p1 * p2 * p3]
    return None


class NilpotentPerfectClaim(BaseClaim):
    claim_id = "t:nilp"
    statement = "for nilpotent G with at least three primes, D(G) is perfect iff G = Z(p1 p2 p3)"

    def instances(self) -> list[CatalogEntry]:
        return self.catalog.abelian(self.config.family_max, min_primes=3)

    def instance_range(self) -> str:
        return f"abelian groups of order <= {self.config.family_max} with at least three prime divisors"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        graph = class_graph(lattice, "diff")
        verdict = is_perfect(graph, budget=self.config.search_budget)
        if verdict.perfect is None:
            return Finding(Outcome.UNKNOWN, entry.spec, "odd-hole search budget exhausted")
        fac = factorint(lattice.group.order)
        expected = is_cyclic(lattice) and len(fac) == 3 and all(e == 1 for e in fac.values())
        if verdict.perfect != expected:
            return self.fail(entry, f"is_perfect = {verdict.status}")
        if not verdict.perfect:
            holes = self.observations.setdefault("holes", {})
            holes[entry.spec] = {
                "orders": [graph.vertices[v].order for v in verdict.witness],
                "in_complement": verdict.in_complement,
            }
        if is_cyclic(lattice):
            return self._explicit_hole(entry, lattice, {int(p): int(e) for p, e in fac.items()})
        return None

    def _explicit_hole(self, entry, lattice: CyclicLattice, fac: dict[int, int]) -> Optional[Finding]:
        orders = explicit_hole_orders(fac)
        if orders is None:
            return None
        by_order = {c.subgroup_order: c.class_id for c in lattice.classes}
        cycle = [by_order[o] for o in orders]
        if not is_induced_cycle(class_graph(lattice, "diff_undeleted"), cycle):
            return self.fail(entry, f"orders {orders} do not form an induced 5-cycle")
        return None


class BipartiteClaim(BaseClaim):
    claim_id = "t:bip"
    statement = "with |pi(Z(G))| >= 2, D(G) is bipartite iff G = Z(p^a q)"

    def instances(self) -> list[CatalogEntry]:
        return (
            self.catalog.abelian(min_primes=2)
            + self.catalog.cyclic_times_quaternion()
            + self.catalog.explicit()
        )

    def instance_range(self) -> str:
        return (
            f"abelian groups of order <= {self.config.abelian_max_order} with at least two primes; "
            f"Z(m) x Q(2^n); explicit list"
        )

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        if len(pi_of_center(lattice.group)) < 2:
            self.observe_count("outside_hypothesis")
            return None
        result = analyze_blowup(class_graph(lattice, "diff"))
        fac = factorint(lattice.group.order)
        expected = is_cyclic(lattice) and len(fac) == 2 and min(fac.values()) == 1
        if result.bipartite != expected:
            return self.fail(entry, f"bipartite = {result.bipartite}, girth {result.girth}")
        return None


class DegreeParityClaim(CatalogClaim):
    claim_id = "t:euler"
    statement = "every vertex of D_undeleted(G) has even degree"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        result = analyze_blowup(class_graph(lattice, "diff_undeleted"))
        if not result.all_degrees_even:
            odd = [d for d in result.degree_set if d % 2]
            return self.fail(entry, f"vertex degrees {odd} are odd")
        if result.edges and not result.eulerian:
            # degree parity holds, but edges span several components
            self.observe_item("not_globally_eulerian", entry.spec)
        return None


# === unique involution ===


class EvenOrderCliqueClaim(BaseClaim):
    claim_id = "sec9-clique"
    statement = "with a unique involution z, the even-order elements form a clique in the intersection power graph"

    def instances(self) -> list[CatalogEntry]:
        return (
            [e for e in self.catalog.cyclic(start=2) if e.params["m"] % 2 == 0]
            + self.catalog.quaternion()
            + self.catalog.cyclic_times_quaternion()
            + self.catalog.explicit()
        )

    def instance_range(self) -> str:
        return f"Z(2k) <= {self.config.family_max}; Q(8..64); Z(m) x Q(2^n); explicit groups with one involution"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        group = lattice.group
        if group.unique_involution() is None:
            self.observe_count("outside_hypothesis")
            return None
        if not even_order_clique_check(group, lattice):
            return self.fail(entry, "two even-order elements generate subgroups meeting trivially")
        if even_order_fraction(group) < 0.5:
            return self.fail(entry, f"only {even_order_fraction(group):.3f} of the elements have even order")
        if not odd_elements_are_powers_of_shift(group):
            return self.fail(entry, "some odd-order g is not a power of gz")
        return None


# === structural facts behind the constructions ===


class SubgroupInductionClaim(BaseClaim):
    claim_id = "subgroup"
    statement = "for H <= G, D_undeleted(H) is the subgraph of D_undeleted(G) induced on H"

    def instances(self) -> list[CatalogEntry]:
        return self.catalog.explicit() + self.catalog.quaternion(32) + self.catalog.dihedral(12)

    def instance_range(self) -> str:
        return f"explicit list, Q(8..32), D(6..24); order <= {SUBGROUP_MAX_ORDER}; {SUBGROUP_SAMPLES} generated subgroups each"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        group = lattice.group
        if group.order > SUBGROUP_MAX_ORDER:
            self.observe_item("skipped", entry.spec)
            return None
        whole = expand_class_graph(lattice, "diff_undeleted", self.config.vertex_cap)
        reps = [c.representative for c in lattice.classes if c.subgroup_order > 1]
        rng = np.random.default_rng(self.config.random_seed)
        for _ in range(SUBGROUP_SAMPLES):
            gens = sorted(int(g) for g in rng.choice(reps, size=min(2, len(reps)), replace=False))
            h = subgroup(group, gens)
            inner = expand_class_graph(CyclicLattice(h), "diff_undeleted", self.config.vertex_cap)
            induced = whole.induced_subgraph(h.parent_indices)
            if inner.rows != induced.rows:
                return self.fail(entry, f"<{_labels(lattice, gens)}> of order {h.order} differs from the induced subgraph")
            self.observe_count("subgroups")
        return None


class TwoGeneratorClaim(BaseClaim):
    claim_id = "t:induct"
    statement = "in a group with trivial centre, elements generating G together are never adjacent in the intersection power graph"

    def instances(self) -> list[CatalogEntry]:
        odd_dihedral = [e for e in self.catalog.dihedral(25) if e.params["n"] % 2 == 1]
        return self.catalog.explicit() + odd_dihedral

    def instance_range(self) -> str:
        return f"explicit list and D(2n), n odd <= 25, trivial centre only; {self.config.pair_samples} sampled pairs each"

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        group = lattice.group
        if len(group.center) != 1:
            self.observe_count("outside_hypothesis")
            return None
        rng = np.random.default_rng(self.config.random_seed)
        pairs = rng.integers(1, group.order, size=(self.config.pair_samples, 2))
        for x, y in pairs.tolist():
            if len(group.generated([x, y])) != group.order:
                continue
            self.observe_count("generating_pairs")
            cx, cy = int(lattice.class_of[x]), int(lattice.class_of[y])
            if cx == cy or lattice.meets_nontrivially(cx, cy):
                return self.fail(entry, f"{group.label(x)} and {group.label(y)} generate G and share a non-identity power")
        return None


class BlowupClaim(BaseClaim):
    claim_id = "blowup"
    statement = "generator classes are independent in D and joined all-or-none; class-level graphs equal the element-level definitions"

    def instances(self) -> list[CatalogEntry]:
        return (
            self.catalog.abelian(BLOWUP_ABELIAN_MAX)
            + self.catalog.dihedral(BLOWUP_DIHEDRAL_MAX)
            + self.catalog.quaternion()
            + [e for e in self.catalog.cyclic_times_quaternion() if e.order <= BLOWUP_MAX_ORDER]
            + self.catalog.explicit()
        )

    def instance_range(self) -> str:
        return (
            f"abelian groups of order <= {BLOWUP_ABELIAN_MAX}; D(2n), n <= {BLOWUP_DIHEDRAL_MAX}; Q(8..64); "
            f"Z(m) x Q(2^n) and explicit groups of order <= {BLOWUP_MAX_ORDER}"
        )

    def check(self, entry: CatalogEntry) -> Optional[Finding]:
        lattice = self.graphs.lattice(entry.spec)
        group = lattice.group
        if group.order > BLOWUP_MAX_ORDER:
            self.observe_item("skipped", entry.spec)
            return None
        kinds = ["power", "ipg", "diff_undeleted", "diff"]
        if group.order <= EPG_BRUTE_FORCE_MAX:
            kinds += ["epg", "epg_diff"]
        for kind in kinds:
            built = build_graph(lattice, kind, self.config.vertex_cap)
            if built.rows != brute_force_graph(group, kind).rows:
                return self.fail(entry, f"{kind} graph differs from the definition")
        try:
            assert_blowup(lattice, build_graph(lattice, "diff", self.config.vertex_cap))
        except InvariantViolation as e:
            return self.fail(entry, str(e))
        return None
