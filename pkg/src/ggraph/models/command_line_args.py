from dataclasses import dataclass, field
from typing import Optional, Set


@dataclass
class CommandLineArgs:
    """
    Structured command-line arguments for ggraph.

    Supports:
    - build / analyze: one group spec and a graph kind
    - verify: claim id (or "all") swept over the catalog
    - clique / embed / psl-scan / m11
    """

    # === Core CLI ===
    command: str  # Subcommands: build, analyze, verify, clique, embed, psl-scan, m11
    config: Optional[str] = None  # Optional path to YAML config file
    debug: bool = False  # Enable verbose logging

    # === Graph selection ===
    spec: Optional[str] = None  # Group spec, e.g. "Z(3) x Q(8)"
    kind: str = "diff"
    format: str = "json"
    out: Optional[str] = None
    level: str = "element"  # element or class

    # === verify ===
    claim: Optional[str] = None
    max_order: Optional[int] = None
    allow_discrepancy: bool = False

    # === clique / embed / psl-scan ===
    n: Optional[int] = None
    graph_file: Optional[str] = None
    qmax: Optional[int] = None

    # === Caps and budgets ===
    search_budget: Optional[int] = None
    order_cap: Optional[int] = None
    vertex_cap: Optional[int] = None
    out_dir: Optional[str] = None

    _explicit_args: Set[str] = field(default_factory=set)
