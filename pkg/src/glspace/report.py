"""Labeled numeric results emitted by diagnostics and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def fmt_float(x: float) -> str:
    """Render a float with 17 significant digits, '.' decimal, no locale."""
    return f"{float(x):.17g}"


@dataclass
class ReportRecord:
    """A labeled numeric result with an error estimate and witnesses."""

    label: str
    value: float
    error: float = 0.0
    witnesses: dict[str, Any] = field(default_factory=dict)
    passed: bool | None = None

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "label": self.label,
            "value": self.value,
            "error": self.error,
            "witnesses": dict(self.witnesses),
        }
        if self.passed is not None:
            out["pass"] = self.passed
        return out
