"""Worked positions shipped with the package, with their expected values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources


@dataclass(frozen=True)
class Entry:
    name: str
    fen: str
    components: dict[str, str]
    winners: tuple[str, str]
    total: str | None = None
    parts: dict[str, str] = field(default_factory=dict)


@lru_cache(maxsize=None)
def entries() -> tuple[Entry, ...]:
    text = resources.files("pawncgt").joinpath("data/diagrams.json").read_text()
    out = []
    for d in json.loads(text)["diagrams"]:
        out.append(
            Entry(
                d["name"],
                d["fen"],
                dict(d["components"]),
                tuple(d["winners"]),
                d.get("total"),
                dict(d.get("parts", {})),
            )
        )
    return tuple(out)


def get(name: str) -> Entry:
    """Look up an entry; a bare number means ``diagramN``."""
    key = f"diagram{name}" if name.isdigit() else name
    for e in entries():
        if e.name == key:
            return e
    raise KeyError(f"no corpus entry {name!r}; known: {', '.join(e.name for e in entries())}")
