"""Named fixtures and the JSON file formats for groups, braces and reps."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .braces import SkewBrace, make_radical_brace, make_trivial_brace, opposite, validate_brace
from .errors import FormatError
from .groups import FiniteGroup, validate_group
from .named_groups import alternating, cyclic, dihedral, klein_four, quaternion, symmetric, symmetric3

# ------------------------------------------------------------ group names

_NAMED = {
    "V4": klein_four,
    "S3": symmetric3,
    "Q8": quaternion,
}


def group_by_name(name: str) -> FiniteGroup:
    """Z<n>, V4, S3, Q8, D<k> (order 2k), S<m>, A<m>."""
    if name in _NAMED:
        return _NAMED[name]()
    m = re.fullmatch(r"([ZDSA])(\d+)", name)
    if not m:
        raise FormatError(f"unknown group name {name!r}")
    kind, k = m.group(1), int(m.group(2))
    if k < 1:
        raise FormatError(f"bad group size in {name!r}")
    if kind == "Z":
        return cyclic(k)
    if kind == "D":
        return dihedral(k)
    if kind == "S":
        return symmetric(k)[0]
    return alternating(k)


# ----------------------------------------------------------------- corpus


@dataclass
class Corpus:
    entries: list[tuple[str, SkewBrace]] = field(default_factory=list)

    def add(self, name: str, A: SkewBrace) -> None:
        if any(name == k for k, _ in self.entries):
            raise FormatError(f"duplicate corpus name {name!r}")
        self.entries.append((name, A))

    def names(self) -> list[str]:
        return [k for k, _ in self.entries]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, name: str) -> SkewBrace:
        for k, A in self.entries:
            if k == name:
                return A
        raise KeyError(name)

    def select(self, selectors: list[str] | None) -> "Corpus":
        """Entries matching any selector: a full name, a family such as
        ``radical``, or ``opposite``. ``op(X)`` matches whatever X matches."""
        if not selectors:
            return self
        out = Corpus()
        for k, A in self.entries:
            if any(_matches(s, k) for s in selectors):
                out.add(k, A)
        return out


def _matches(sel: str, name: str) -> bool:
    if name == sel or name.startswith(sel + ":"):
        return True
    if name.startswith("op(") and name.endswith(")"):
        return sel == "opposite" or _matches(sel, name[3:-1])
    return False


TRIVIAL_GROUPS = ["Z2", "Z4", "V4", "S3", "D4", "Q8"]
RADICAL_PARAMS = [(2, 2, 1), (3, 2, 1), (3, 3, 1)]


def default_corpus() -> Corpus:
    """Trivial and radical braces plus every opposite that is a different brace."""
    c = Corpus()
    base: list[tuple[str, SkewBrace]] = []
    for g in TRIVIAL_GROUPS:
        base.append((f"trivial:{g}", make_trivial_brace(group_by_name(g))))
    for p, n, r in RADICAL_PARAMS:
        base.append((f"radical:{p},{n},{r}", make_radical_brace(p, n, r)))
    for name, A in base:
        c.add(name, A)
    for name, A in base:
        B = opposite(A)
        if B.add != A.add:
            c.add(f"op({name})", B)
    return c


# ------------------------------------------------------------------ files


def read_json(path: str | Path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _table(obj, key: str, n: int) -> np.ndarray:
    rows = obj[key]
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise FormatError(f"{key!r} must be an {n} x {n} list of lists")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
        raise FormatError(f"{key!r} must contain integers")
    return np.array(rows, dtype=np.int64)


def _size(obj) -> int:
    if not isinstance(obj, dict) or "n" not in obj:
        raise FormatError("expected an object with key 'n'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("'n' must be a positive integer")
    return n


def kind_of(obj) -> str:
    if isinstance(obj, dict) and "add" in obj and "circ" in obj:
        return "brace"
    if isinstance(obj, dict) and "table" in obj:
        return "group"
    raise FormatError("expected a group {n, table} or a brace {n, add, circ}")


def group_from_json(obj) -> FiniteGroup:
    n = _size(obj)
    return validate_group(_table(obj, "table", n))


def brace_from_json(obj) -> SkewBrace:
    n = _size(obj)
    return validate_brace(_table(obj, "add", n), _table(obj, "circ", n))


def load(path: str | Path) -> FiniteGroup | SkewBrace:
    obj = read_json(path)
    return brace_from_json(obj) if kind_of(obj) == "brace" else group_from_json(obj)
