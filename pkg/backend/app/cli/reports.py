"""Report models shared by every subcommand."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from app import DATA_FORMAT_VERSION, __version__


class RunConfig(BaseModel):
    command: str
    inputs: dict[str, str] = Field(default_factory=dict)
    params: dict[str, Any] = Field(default_factory=dict)
    jobs: int = Field(default=1, gt=0)
    cell_cap: int = Field(gt=0)
    tietze_budget: int = Field(gt=0)
    seed: int


class Claim(BaseModel):
    name: str
    value: Any
    provenance: str


class Report(BaseModel):
    format_version: int = DATA_FORMAT_VERSION
    tool_version: str = __version__
    command: str
    passed: bool
    verdict: str
    config: RunConfig
    claims: list[Claim] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)

    def claim(self, name: str, value: Any, provenance: str) -> None:
        self.claims.append(Claim(name=name, value=plain(value), provenance=provenance))

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [f"{self.command}: {self.verdict} ({'pass' if self.passed else 'fail'})"]
        for claim in self.claims:
            lines.append(f"  {claim.name} = {_short(claim.value)}  [{claim.provenance}]")
        return "\n".join(lines)


def plain(value: Any) -> Any:
    """JSON-ready copy: fractions as "p/q" strings, tuples as lists, dict keys as strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


def _short(value: Any, limit: int = 96) -> str:
    text = json.dumps(value, sort_keys=True)
    return text if len(text) <= limit else text[: limit - 3] + "..."


__all__ = ["Claim", "Report", "RunConfig", "plain"]
