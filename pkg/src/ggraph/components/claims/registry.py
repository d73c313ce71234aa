from typing import Optional

from ggraph.components.claims.base_claim import BaseClaim
from ggraph.components.claims.divisor_claims import DivisorCliqueClaim, UniversalityClaim
from ggraph.components.claims.group_claims import (
    BipartiteClaim,
    BlowupClaim,
    ConnectivityClaim,
    CyclicConnectivityClaim,
    CyclicTimesQuaternionClaim,
    DegreeParityClaim,
    EvenOrderCliqueClaim,
    IsolatedSetClaim,
    NilpotentPerfectClaim,
    NonCyclicConnectivityClaim,
    NullImpliesCographClaim,
    PGroupEmptinessClaim,
    PrimeOrderIsolationClaim,
    QuaternionIsolationClaim,
    SubgroupInductionClaim,
    TwoGeneratorClaim,
    TwoPrimesClaim,
)
from ggraph.components.claims.simple_group_claims import (
    DihedralReductionClaim,
    M11Claim,
    PslNullnessClaim,
    Sl34QuaternionClaim,
)
from ggraph.config.config import Config
from ggraph.exception import UnknownClaim
from ggraph.services.graph_service import GraphService
from ggraph.services.group_catalog_service import GroupCatalogService

CLAIMS: dict[str, type[BaseClaim]] = {
    cls.claim_id: cls
    for cls in (
        PrimeOrderIsolationClaim,
        NullImpliesCographClaim,
        ConnectivityClaim,
        IsolatedSetClaim,
        TwoPrimesClaim,
        CyclicConnectivityClaim,
        CyclicTimesQuaternionClaim,
        PGroupEmptinessClaim,
        QuaternionIsolationClaim,
        NilpotentPerfectClaim,
        BipartiteClaim,
        DegreeParityClaim,
        UniversalityClaim,
        DivisorCliqueClaim,
        PslNullnessClaim,
        DihedralReductionClaim,
        EvenOrderCliqueClaim,
        M11Claim,
        SubgroupInductionClaim,
        TwoGeneratorClaim,
        BlowupClaim,
        NonCyclicConnectivityClaim,
        Sl34QuaternionClaim,
    )
}


def claim_ids(include_on_demand: bool = True) -> list[str]:
    return [cid for cid, cls in CLAIMS.items() if include_on_demand or not cls.on_demand]


def resolve_claims(requested: str) -> list[str]:
    """`all` (on-demand claims excluded) or a comma-separated list of claim ids."""
    if requested == "all":
        return claim_ids(include_on_demand=False)
    ids = [c.strip() for c in requested.split(",") if c.strip()]
    unknown = [c for c in ids if c not in CLAIMS]
    if unknown or not ids:
        raise UnknownClaim(
            f"unknown claim {', '.join(unknown) or repr(requested)}; registered: {', '.join(CLAIMS)}"
        )
    return ids


def get_claim(
    claim_id: str,
    config: Optional[Config] = None,
    graphs: Optional[GraphService] = None,
    catalog: Optional[GroupCatalogService] = None,
) -> BaseClaim:
    try:
        cls = CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}; registered: {', '.join(CLAIMS)}") from None
    return cls(config, graphs, catalog)
