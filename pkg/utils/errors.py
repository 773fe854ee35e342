from typing import Any


def _render(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_render(v) for v in value) + ")"
    return str(value)


class CrystalError(Exception):
    """Base of all library errors; details hold the offending names, points or shapes."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.details = dict(details or {})
        self.cause = cause

    def rendered_details(self) -> dict[str, str]:
        """Details as strings, in key order."""
        return {k: _render(v) for k, v in sorted(self.details.items())}

    def __str__(self) -> str:
        text = self.message
        if self.details:
            text += "".join(f"; {k} = {v}" for k, v in self.rendered_details().items())
        if self.cause is not None:
            text += f" (from {type(self.cause).__name__}: {self.cause})"
        return text

    def to_dict(self) -> dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.rendered_details(),
            "cause": None if self.cause is None else f"{type(self.cause).__name__}: {self.cause}",
        }


class ConfigError(CrystalError):
    def __init__(
        self,
        message: str,
        config_key: str | None = None,
        config_file: str | None = None,
        **kwargs: Any,
    ) -> None:
        details = kwargs.pop("details", {}) or {}
        if config_key:
            details["config_key"] = config_key
        if config_file:
            details["config_file"] = config_file
        super().__init__(message, details=details, **kwargs)
        self.config_key = config_key
        self.config_file = config_file


class StructuralError(CrystalError):
    """Operands do not share a variable table, or data has the wrong shape."""


class DomainError(CrystalError):
    """An operation is undefined on its input (division by zero, empty sum)."""


class EvaluationError(CrystalError):
    def __init__(
        self,
        message: str,
        point: dict[str, Any] | None = None,
        **kwargs: Any,
    ) -> None:
        details = kwargs.pop("details", {}) or {}
        if point is not None:
            details["point"] = {k: str(v) for k, v in point.items()}
        super().__init__(message, details=details, **kwargs)
        self.point = point


class PositivityError(CrystalError):
    """Raised when a function without a subtraction-free witness is tropicalized."""


class UndefinedValuationError(CrystalError):
    """The substitution x_k -> t^xi_k annihilates a numerator or denominator."""


class UnknownFormulaError(CrystalError):
    def __init__(self, name: str, known: list[str] | None = None) -> None:
        details = {"name": name}
        if known:
            details["known"] = ", ".join(known[:8]) + (", ..." if len(known) > 8 else "")
        super().__init__(f"Unknown formula or target: {name}", details=details)
        self.name = name
