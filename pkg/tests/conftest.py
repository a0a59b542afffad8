from __future__ import annotations

import gzip
from functools import lru_cache
from pathlib import Path

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def corpus(name: str) -> tuple[str, ...]:
    """Non-blank graph6 lines of ``tests/data/<name>.g6.gz``."""
    with gzip.open(DATA / f"{name}.g6.gz", "rt", encoding="ascii") as fh:
        return tuple(ln.strip() for ln in fh if ln.strip())
