from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Limits:
    """Resource caps. Hitting any of them raises, it never truncates silently."""

    max_elements: int = 2_000_000
    max_roots: int = 100_000
    word_budget: int = 100_000
    cache_size: int = 1 << 16

    @classmethod
    def from_env(cls, **overrides) -> "Limits":
        """Defaults, then ``COX_<FIELD>`` environment variables, then explicit overrides."""
        values = {}
        for f in fields(cls):
            raw = os.environ.get("COX_" + f.name.upper())
            if raw is not None:
                values[f.name] = int(raw)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return replace(cls(), **values)


DEFAULT_LIMITS = Limits()
