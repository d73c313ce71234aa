import os
from typing import Any, Optional

import yaml
from dotenv import load_dotenv

from ggraph.models.singleton import SingletonMeta
from ggraph.utils.arg_utils import was_explicit as _was_explicit
from ggraph.utils.path_utils import ensure_all_dirs_exist, get_project_root

DEFAULT_EXPLICIT_GROUPS = [
    "Sym(3)",
    "Sym(4)",
    "Alt(4)",
    "Alt(5)",
    "D(10)",
    "D(14)",
    "SL(2,3)",
    "SL(2,5)",
    "Z(6) x Sym(3)",
    "Z(15) x Sym(3)",
    "Z(6) x D(8)",
    "Z(10) x Q(8)",
    "Z(3) x SL(2,3)",
    "Z(2) x Z(2) x Z(15)",
]


def _int_setting(name: str, minimum: int = 0) -> property:
    attr = f"_{name}"

    def getter(self) -> int:
        return getattr(self, attr)

    def setter(self, value: int):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"{name} must be an integer.")
        if value < minimum:
            raise ValueError(f"{name} must be >= {minimum}.")
        setattr(self, attr, value)

    return property(getter, setter)


def _bool_setting(name: str) -> property:
    attr = f"_{name}"

    def getter(self) -> bool:
        return getattr(self, attr)

    def setter(self, value: bool):
        if not isinstance(value, bool):
            raise ValueError(f"{name} must be a boolean.")
        setattr(self, attr, value)

    return property(getter, setter)


class Config(metaclass=SingletonMeta):
    """
    Process-wide settings. Precedence: built-in defaults < .env < YAML (--config) < CLI.
    """

    _is_initialized = False

    # settings accepted from YAML files and CLI flags
    _INT_KEYS = (
        "order_cap",
        "table_cap",
        "exhaustive_assoc_cap",
        "assoc_samples",
        "order_check_cap",
        "vertex_cap",
        "clique_cap",
        "cograph_cap",
        "search_budget",
        "abelian_max_order",
        "family_max",
        "disc_max",
        "psl_qmax",
        "dihedral_max",
        "max_family_size",
        "random_graphs",
        "random_seed",
        "pair_samples",
    )
    _BOOL_KEYS = ("debug", "allow_discrepancy", "validate_groups", "show_progress")

    order_cap = _int_setting("order_cap", 1)
    table_cap = _int_setting("table_cap", 1)
    exhaustive_assoc_cap = _int_setting("exhaustive_assoc_cap", 1)
    assoc_samples = _int_setting("assoc_samples", 0)
    order_check_cap = _int_setting("order_check_cap", 0)
    vertex_cap = _int_setting("vertex_cap", 1)
    clique_cap = _int_setting("clique_cap", 1)
    cograph_cap = _int_setting("cograph_cap", 4)
    search_budget = _int_setting("search_budget", 1)
    abelian_max_order = _int_setting("abelian_max_order", 1)
    family_max = _int_setting("family_max", 1)
    disc_max = _int_setting("disc_max", 1)
    psl_qmax = _int_setting("psl_qmax", 4)
    dihedral_max = _int_setting("dihedral_max", 3)
    max_family_size = _int_setting("max_family_size", 1)
    random_graphs = _int_setting("random_graphs", 0)
    random_seed = _int_setting("random_seed", 0)
    pair_samples = _int_setting("pair_samples", 1)
    debug = _bool_setting("debug")
    allow_discrepancy = _bool_setting("allow_discrepancy")
    validate_groups = _bool_setting("validate_groups")
    show_progress = _bool_setting("show_progress")

    def __init__(self):
        if Config._is_initialized:
            return

        load_dotenv()

        self.PROJECT_ROOT = get_project_root()

        # === Artifacts (auto-created if missing) ===
        base_dir_env = os.getenv("BASE_DIR", "artifacts")
        self.BASE_DIR = (
            base_dir_env
            if os.path.isabs(base_dir_env)
            else os.path.join(self.PROJECT_ROOT, base_dir_env)
        )
        self.LOG_DIR = os.path.join(self.BASE_DIR, "logs")
        self.GRAPHS_DIR = os.path.join(self.BASE_DIR, "graphs")
        self.REPORTS_DIR = os.path.join(self.BASE_DIR, "reports")

        self._config_path: Optional[str] = None

        # === Group construction ===
        self._order_cap = 50_000
        self._table_cap = 4096
        self._exhaustive_assoc_cap = 64
        self._assoc_samples = 100_000
        self._order_check_cap = 2000
        self._validate_groups = True

        # === Graph construction and search ===
        self._vertex_cap = 20_000
        self._clique_cap = 2000
        self._cograph_cap = 3000
        self._search_budget = 10**8

        # === Harness catalogs ===
        self._abelian_max_order = 400
        self._family_max = 210
        self._disc_max = 1000
        self._psl_qmax = 25
        self._dihedral_max = 100
        self._max_family_size = 5
        self._random_graphs = 50
        self._random_seed = 20240917
        self._pair_samples = 200
        self._explicit_groups = list(DEFAULT_EXPLICIT_GROUPS)

        # === Runtime ===
        self._debug = False
        self._allow_discrepancy = False
        self._show_progress = True
        self._output_dir = self.GRAPHS_DIR

        budget_env = os.getenv("GGRAPH_BUDGET")
        if budget_env:
            self.search_budget = self._parse_int("GGRAPH_BUDGET", budget_env)

        self._ensure_directories_exist()
        Config._is_initialized = True

    def _ensure_directories_exist(self):
        ensure_all_dirs_exist([self.LOG_DIR, self.GRAPHS_DIR, self.REPORTS_DIR])

    @staticmethod
    def _parse_int(source: str, raw: str) -> int:
        try:
            return int(float(raw)) if "e" in raw.lower() else int(raw)
        except ValueError as e:
            raise ValueError(f"{source} must be an integer, got {raw!r}") from e

    def _override(self, key: str, value: Any, source: str):
        current = getattr(self, key)
        print(f"[Config] Overriding '{key}' from {source}: {current} → {value}")
        setattr(self, key, value)

    def apply_cli_overrides(self, args):
        """
        Apply values the user typed on the command line. CLI flags use the same
        names as the settings (argparse dests), plus the `max_order` alias.
        """
        for key in self._INT_KEYS + self._BOOL_KEYS:
            if _was_explicit(args, key):
                self._override(key, getattr(args, key), "CLI")

        if _was_explicit(args, "max_order"):
            max_order = getattr(args, "max_order")
            for key in ("abelian_max_order", "family_max", "disc_max"):
                self._override(key, max_order, "CLI --max-order")

        if _was_explicit(args, "qmax"):
            self._override("psl_qmax", args.qmax, "CLI --qmax")

        if _was_explicit(args, "out_dir"):
            self._override("output_dir", args.out_dir, "CLI")

        # GGRAPH_BUDGET beats YAML; only a typed --search-budget beats it
        budget_env = os.getenv("GGRAPH_BUDGET")
        if budget_env and not _was_explicit(args, "search_budget"):
            self.search_budget = self._parse_int("GGRAPH_BUDGET", budget_env)

    def load_from_yaml(self, path: str):
        """
        Override config values from a YAML config file.
        Logs changes to config values.
        """
        if not os.path.exists(path):
            print(f"[Config] YAML config file not found: {path}")
            return

        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}

        print(f"[Config] Loaded YAML config: {path}")

        for key in self._INT_KEYS + self._BOOL_KEYS:
            if key in data:
                self._override(key, data[key], "YAML")

        if "explicit_groups" in data:
            self._override("explicit_groups", data["explicit_groups"], "YAML")

        if "output_dir" in data:
            self._override("output_dir", data["output_dir"], "YAML")

    @property
    def config_path(self):
        return self._config_path

    @config_path.setter
    def config_path(self, value):
        if not isinstance(value, str):
            raise ValueError("config_path must be a string.")
        self._config_path = value

    @property
    def explicit_groups(self) -> list[str]:
        return list(self._explicit_groups)

    @explicit_groups.setter
    def explicit_groups(self, value: list[str]):
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise ValueError("explicit_groups must be a list of group spec strings.")
        self._explicit_groups = list(value)

    @property
    def output_dir(self) -> str:
        return self._output_dir

    @output_dir.setter
    def output_dir(self, value: str):
        if not isinstance(value, str):
            raise ValueError("output_dir must be a string.")
        self._output_dir = self._resolve_path(value)

    def print_config_info(self):
        print("=" * 50)
        print("⚙️  ggraph configuration")
        print("-" * 50)
        print(f"{'Base dir:':25} {self.BASE_DIR}")
        print(f"{'Output dir:':25} {self.output_dir}")
        print(f"{'Reports dir:':25} {self.REPORTS_DIR}")
        print(f"{'Order cap:':25} {self.order_cap}")
        print(f"{'Vertex cap:':25} {self.vertex_cap}")
        print(f"{'Search budget:':25} {self.search_budget}")
        print("=" * 50)

    def _resolve_path(self, val: Optional[str]) -> Optional[str]:
        if not val:
            return None
        if os.path.isabs(val):
            return val
        # relative paths land under BASE_DIR unless they already exist under PROJECT_ROOT
        root_resolved = os.path.join(self.PROJECT_ROOT, val)
        if os.path.exists(root_resolved):
            return root_resolved
        return os.path.join(self.BASE_DIR, val)

    @classmethod
    def initialize(cls):
        if not cls._is_initialized:
            cls()

    @classmethod
    def is_initialized(cls):
        return cls._is_initialized

    @classmethod
    def reset(cls):
        cls._is_initialized = False
        SingletonMeta._instances.pop(cls, None)


def budget_or(default: Optional[int] = None) -> int:
    """The configured search budget unless a caller passes its own."""
    return default if default is not None else Config().search_budget
