from typing import Any


def was_explicit(args: Any, field: str) -> bool:
    """True if `field` was typed on the command line (not just defaulted)."""
    return hasattr(args, "_explicit_args") and field in args._explicit_args
