from .custom_exception import (
    DomainError,
    IntegrityError,
    ResumeError,
    StraddlesIntegerError,
    UsageError,
    ZetaFracException,
)

__all__ = [
    "DomainError",
    "IntegrityError",
    "ResumeError",
    "StraddlesIntegerError",
    "UsageError",
    "ZetaFracException",
]
