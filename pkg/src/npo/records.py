"""Machine-readable run records emitted by the command-line interface."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import __version__


@dataclass(frozen=True)
class RunRecord:
    """One CLI invocation: full parameter set, results, and provenance."""

    command: str
    params: dict
    results: dict
    optimal_A: float = None
    D: int = None
    history: list = field(default_factory=list)
    wall_time_s: float = 0.0
    version: str = __version__
    notes: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        data = json.loads(text)
        data["history"] = [tuple(pair) for pair in data.get("history", [])]
        return cls(**data)

    def csv_lines(self) -> list:
        """Two-line CSV projection: parameters plus the headline values."""
        keys = sorted(self.params)
        result_keys = sorted(self.results)
        header = keys + result_keys
        row = [_csv_num(self.params[k]) for k in keys]
        row += [_csv_num(self.results[k]) for k in result_keys]
        return [",".join(header), ",".join(row)]

    def text_lines(self) -> list:
        lines = [f"{self.command}:"]
        for key in sorted(self.params):
            lines.append(f"  {key} = {self.params[key]}")
        for key, value in self.results.items():
            lines.append(f"  {key} = {_csv_num(value)}")
        if self.optimal_A is not None:
            lines.append(f"  optimal A = {self.optimal_A:.8g}")
        if self.history:
            lines.append("  convergence history (D, E):")
            for d, e in self.history:
                lines.append(f"    {d:3d}  {e:.15g}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append(f"  wall time = {self.wall_time_s:.3f} s")
        return lines


def _csv_num(value) -> str:
    if isinstance(value, float):
        return f"{value:.15g}"
    if isinstance(value, (list, tuple)):
        return ";".join(_csv_num(v) for v in value)
    return str(value)
