from .config import Config, budget_or

__all__ = ["Config", "budget_or"]
