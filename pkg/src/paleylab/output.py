"""Frozen on-disk table formats for experiment outputs.

Every file embeds, ahead of the data section: the schema tag, a version
string, the full configuration echo as JSON, the PRNG seed, and a wall
clock stamp.  The data section (header plus rows, or the JSON "rows" array)
is a pure function of the configuration, so re-runs are byte-identical
there; only the wall clock line may differ.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__

SCHEMAS = {
    "spectrum": "paleylab.spectrum.v1",
    "overlay": "paleylab.overlay.v1",
    "distance": "paleylab.distance.v1",
    "mineig": "paleylab.mineig.v1",
    "theta": "paleylab.theta.v1",
    "quartic-esd": "paleylab.quartic-esd.v1",
    "quartic-mineig": "paleylab.quartic-mineig.v1",
    "necklace": "paleylab.necklace.v1",
    "bounds": "paleylab.bounds.v1",
    "traces": "paleylab.traces.v1",
}


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


@dataclass(frozen=True)
class Table:
    schema: str
    columns: tuple[str, ...]
    rows: list[tuple]
    config: dict
    seed: int = 0

    def meta(self) -> dict:
        return {
            "schema": self.schema,
            "version": f"paleylab-{__version__}",
            "config": self.config,
            "seed": self.seed,
            "wallclock": datetime.now(timezone.utc).isoformat(),
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        meta = self.meta()
        for key in ("schema", "version", "config", "seed", "wallclock"):
            val = json.dumps(meta[key], sort_keys=True) if key == "config" else meta[key]
            out.write(f"# {key}={val}\n")
        out.write(",".join(self.columns) + "\n")
        for row in self.rows:
            out.write(",".join(_fmt(x) for x in row) + "\n")
        return out.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            "meta": self.meta(),
            "columns": list(self.columns),
            "rows": [[x for x in row] for row in self.rows],
        }, sort_keys=False, indent=1)

    def write(self, path, fmt: str = "csv") -> Path:
        path = Path(path)
        if fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {fmt!r}")
        path.write_text(self.to_csv() if fmt == "csv" else self.to_json())
        return path


def sibling_path(path, tag: str) -> Path:
    """fig1.csv -> fig1.overlay.csv (companion table next to the main one)."""
    path = Path(path)
    return path.with_name(f"{path.stem}.{tag}{path.suffix}")
