"""Size caps.

``BRACE_FORGE_CAP`` (an integer) replaces the group-order cap used for class
and character analysis; the structural cap never drops below it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import SizeBound

ENV_VAR = "BRACE_FORGE_CAP"


@dataclass(frozen=True)
class Caps:
    brace_order: int = 4096
    analysis_order: int = 4096
    structural_order: int = 20736
    isoclinism: int = 64


def caps() -> Caps:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return Caps()
    try:
        value = int(raw)
    except ValueError:
        raise SizeBound(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise SizeBound(f"{ENV_VAR} must be positive")
    base = Caps()
    return Caps(
        brace_order=max(base.brace_order, value),
        analysis_order=value,
        structural_order=max(base.structural_order, value),
        isoclinism=base.isoclinism,
    )


def check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise SizeBound(f"{what}: size {size} exceeds cap {cap}", (size, cap))
