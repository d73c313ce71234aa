import json
from typing import Optional

import pytest

from ggraph.components.analysis.difference import isolated_element_indices
from ggraph.components.claims.base_claim import BaseClaim, Finding, aggregate
from ggraph.components.claims.group_claims import is_odd_cyclic_times_quaternion
from ggraph.components.claims.registry import CLAIMS, claim_ids, get_claim, resolve_claims
from ggraph.exception import BudgetExceeded, OrderLimitExceeded, UnknownClaim
from ggraph.models.verification_report import Outcome, VerificationReport, Witness
from ggraph.pipelines.verify_pipeline import exit_code_for, summary_frame, write_report
from ggraph.services.group_catalog_service import CatalogEntry


@pytest.fixture
def small(config):
    """Catalog bounds small enough for a unit test run."""
    config.abelian_max_order = 24
    config.family_max = 30
    config.disc_max = 60
    config.dihedral_max = 6
    config.psl_qmax = 9
    config.random_graphs = 3
    config.pair_samples = 20
    config.explicit_groups = ["Sym(3)", "Alt(4)", "SL(2,3)", "Z(6) x Sym(3)"]
    return config


def evaluate(claim_id, config, graphs, catalog) -> VerificationReport:
    return get_claim(claim_id, config, graphs, catalog).evaluate()


class ScriptedClaim(BaseClaim):
    claim_id = "scripted"
    statement = "outcomes chosen per group"

    def __init__(self, script, **kwargs):
        super().__init__(**kwargs)
        self.script = script

    def instances(self):
        return [CatalogEntry(spec, "test") for spec in self.script]

    def instance_range(self):
        return "scripted"

    def check(self, entry) -> Optional[Finding]:
        action = self.script[entry.spec]
        if isinstance(action, Exception):
            raise action
        if action is None:
            return None
        return Finding(action, entry.spec, f"{action.value} on purpose")


class TestRegistry:
    def test_every_claim_is_registered(self):
        assert len(CLAIMS) == 23
        assert all(cid == cls.claim_id for cid, cls in CLAIMS.items())

    def test_all_skips_on_demand_claims(self):
        assert "m11" in claim_ids()
        assert "m11" not in resolve_claims("all")
        assert len(resolve_claims("all")) == 22

    def test_comma_list(self):
        assert resolve_claims("t:isol, psl2") == ["t:isol", "psl2"]

    @pytest.mark.parametrize("requested", ["t:nothing", "", "psl2,bogus"])
    def test_unknown(self, requested):
        with pytest.raises(UnknownClaim):
            resolve_claims(requested)

    def test_get_claim_unknown(self):
        with pytest.raises(UnknownClaim):
            get_claim("t:nothing")


class TestSweep:
    def test_findings_are_folded_into_a_report(self, config):
        claim = ScriptedClaim(
            {
                "Z(2)": None,
                "Z(3)": Outcome.DISCREPANCY,
                "Z(4)": Outcome.FAIL,
                "Z(5)": OrderLimitExceeded("Z(5)", 5, 4),
            },
            config=config,
        )
        report = claim.evaluate()
        assert report.outcome is Outcome.FAIL
        assert report.checked == 3
        assert [w.group for w in report.witnesses] == ["Z(4)", "Z(3)"]
        assert report.observations["skipped"] == ["Z(5)"]

    def test_exhausted_budget_is_unknown(self, config):
        claim = ScriptedClaim({"Z(2)": BudgetExceeded("search", 10)}, config=config)
        report = claim.evaluate()
        assert report.outcome is Outcome.UNKNOWN
        assert report.witnesses == []
        assert report.observations["unknown"][0].startswith("Z(2)")

    def test_aggregate_precedence(self):
        assert aggregate([]) is Outcome.PASS
        assert aggregate([Outcome.DISCREPANCY, Outcome.UNKNOWN]) is Outcome.UNKNOWN
        assert aggregate([Outcome.UNKNOWN, Outcome.FAIL]) is Outcome.FAIL

    def test_report_needs_a_witness_to_fail(self):
        with pytest.raises(ValueError):
            VerificationReport("x", "none", Outcome.FAIL)

    def test_report_json(self):
        report = VerificationReport("t:x", "Z(1)", Outcome.DISCREPANCY, [Witness("Z(12)", "differs")], 5, 1, {"k": 2})
        assert VerificationReport.from_json(report.to_json()) == report
        assert json.loads(report.to_json())["outcome"] == "DISCREPANCY"


class TestExitCodes:
    @pytest.mark.parametrize(
        "outcomes, allow, code",
        [
            ([Outcome.PASS], False, 0),
            ([Outcome.PASS, Outcome.DISCREPANCY], False, 1),
            ([Outcome.PASS, Outcome.DISCREPANCY], True, 0),
            ([Outcome.UNKNOWN, Outcome.DISCREPANCY], True, 3),
            ([Outcome.UNKNOWN, Outcome.FAIL], True, 1),
        ],
    )
    def test_exit_code_for(self, outcomes, allow, code):
        assert exit_code_for(outcomes, allow) == code

    def test_report_file_and_summary(self, tmp_path):
        report = VerificationReport("t:isol", "Z(m)", Outcome.PASS, checked=4)
        path = write_report(report, str(tmp_path))
        assert path.endswith("t_isol.json")
        with open(path, encoding="utf-8") as f:
            assert VerificationReport.from_json(f.read()).checked == 4
        frame = summary_frame([report])
        assert frame.loc[0, "outcome"] == "PASS"


class TestClaims:
    @pytest.mark.parametrize(
        "claim_id",
        [
            "p-elts",
            "nulld-cograph",
            "t:twoprimes",
            "t:gq-isol",
            "t:disc",
            "t:conn",
            "t:conn2",
            "t:cxq",
            "t:nilp",
            "t:bip",
            "t:euler",
            "t:univ",
            "sec9-clique",
            "subgroup",
            "t:induct",
            "dihedral",
            "sl34",
            "psl2",
        ],
    )
    def test_passes_on_a_small_catalog(self, small, graphs, catalog, claim_id):
        report = evaluate(claim_id, small, graphs, catalog)
        assert report.outcome is Outcome.PASS, report.witnesses
        assert report.checked > 0

    def test_isolated_set_discrepancy_names_z12(self, small, graphs, catalog):
        small.family_max = 12
        report = evaluate("t:isol", small, graphs, catalog)
        assert report.outcome is Outcome.DISCREPANCY
        assert [w.group for w in report.witnesses] == ["Z(12)"]

    def test_isolated_set_covers_non_cyclic_groups(self, small, graphs, catalog, entry):
        claim = get_claim("t:isol", small, graphs, catalog)
        specs = [e.spec for e in claim.instances()]
        assert {"Z(2) x Z(6)", "Z(3) x Q(8)"} <= set(specs)
        assert "Z(2) x Z(2)" not in specs
        for spec in ["Z(2) x Z(6)", "Z(2) x Z(30)", "Z(6) x Z(6)", "Z(2) x Z(2) x Z(15)", "Z(3) x Q(8)"]:
            assert claim.check(entry(spec)) is None, spec

    def test_isolated_set_of_a_non_cyclic_group(self, graphs):
        lattice = graphs.lattice("Z(2) x Z(6)")
        prime_order = {
            x for c in lattice.classes if c.subgroup_order in (2, 3) for x in c.members
        }
        identity = set(lattice.classes[lattice.identity_class].members)
        assert isolated_element_indices(lattice) == prime_order | identity

    def test_psl_scan_observations(self, small, graphs, catalog):
        report = evaluate("psl2", small, graphs, catalog)
        assert set(report.observations["scan"]) == {"4", "5", "7", "8", "9"}

    def test_psl_over_cap_is_unknown(self, small, graphs, catalog):
        small.order_cap = 100
        report = evaluate("psl2", small, graphs, catalog)
        assert report.outcome is Outcome.UNKNOWN

    def test_nilpotent_holes_are_recorded(self, small, graphs, catalog):
        small.family_max = 60
        report = evaluate("t:nilp", small, graphs, catalog)
        assert report.outcome is Outcome.PASS
        assert "Z(60)" in report.observations["holes"]

    @pytest.mark.slow
    def test_quaternion_groups_break_p_group_emptiness(self, small, graphs, catalog):
        report = evaluate("t:empty", small, graphs, catalog)
        assert report.outcome is Outcome.DISCREPANCY
        assert {w.group for w in report.witnesses} == {"Q(8)", "Q(16)", "Q(32)", "Q(64)"}

    @pytest.mark.slow
    def test_weighted_divisor_objective_is_a_discrepancy(self, small, graphs, catalog):
        report = evaluate("sec6-cliques", small, graphs, catalog)
        assert report.outcome is Outcome.DISCREPANCY
        assert report.observations["clique_numbers"]["30"]["diff"]["cardinality"] == 3

    @pytest.mark.slow
    def test_blowup(self, small, graphs, catalog):
        assert evaluate("blowup", small, graphs, catalog).outcome is Outcome.PASS


@pytest.mark.parametrize(
    "spec, expected",
    [("Z(3) x Q(8)", True), ("Z(15) x Q(16)", True), ("Z(2) x Q(8)", False), ("Q(8)", True), ("Z(3) x D(8)", False)],
)
def test_odd_cyclic_times_quaternion(spec, expected):
    assert is_odd_cyclic_times_quaternion(spec) is expected
