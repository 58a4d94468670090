"""Extension functions Sigma^n -> Sigma used as skip fillers and family members.

An extension of arity n consumes a length-n prefix (letter indices) and
returns one letter index.  Three shapes cover everything the library needs:
projections onto a coordinate, constants, and explicit tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ExtensionFn:
    """Total function from length-`arity` index tuples to a letter index."""

    arity: int
    kind: str  # "project" | "const" | "table"
    index: int = 0
    table: tuple = field(default_factory=tuple)  # sorted ((prefix, letter), ...)
    default: int | None = None  # table fallback; None means table must be total

    def __call__(self, prefix: tuple[int, ...]) -> int:
        if len(prefix) != self.arity:
            raise ValueError(f"expected prefix of length {self.arity}, got {len(prefix)}")
        if self.kind == "project":
            return prefix[self.index]
        if self.kind == "const":
            return self.index
        for key, value in self.table:
            if key == prefix:
                return value
        if self.default is None:
            raise KeyError(prefix)
        return self.default

    def spec(self) -> dict:
        """JSON-ready description."""
        if self.kind == "project":
            return {"kind": "project", "index": self.index}
        if self.kind == "const":
            return {"kind": "const", "letter": self.index}
        out = {"kind": "table", "entries": {"".join(map(str, k)): v for k, v in self.table}}
        if self.default is not None:
            out["default"] = self.default
        return out


def projection(arity: int, index: int) -> ExtensionFn:
    return ExtensionFn(arity=arity, kind="project", index=index)


def constant(arity: int, letter: int) -> ExtensionFn:
    return ExtensionFn(arity=arity, kind="const", index=letter)


def table_fn(arity: int, entries: dict[tuple[int, ...], int], default: int | None = None) -> ExtensionFn:
    items = tuple(sorted(entries.items()))
    return ExtensionFn(arity=arity, kind="table", table=items, default=default)


def as_table(e: ExtensionFn, alphabet_size: int) -> dict[tuple[int, ...], int]:
    """Materialize `e` on all of Sigma^arity."""
    from itertools import product

    return {p: e(p) for p in product(range(alphabet_size), repeat=e.arity)}


def same_function(e1: ExtensionFn, e2: ExtensionFn, alphabet_size: int) -> bool:
    """Pointwise equality over Sigma^arity."""
    if e1.arity != e2.arity:
        return False
    return as_table(e1, alphabet_size) == as_table(e2, alphabet_size)


def extension_from_spec(spec: dict, arity: int) -> ExtensionFn:
    kind = spec["kind"]
    if kind == "project":
        return projection(arity, int(spec["index"]))
    if kind == "const":
        return constant(arity, int(spec["letter"]))
    if kind == "table":
        entries = {tuple(int(ch) for ch in key): int(value) for key, value in spec["entries"].items()}
        return table_fn(arity, entries, default=spec.get("default"))
    raise ValueError(f"unknown extension kind {kind!r}")
