from .singleton import SingletonMeta
from .verification_report import Outcome, VerificationReport, Witness

__all__ = ["SingletonMeta", "Outcome", "VerificationReport", "Witness"]
