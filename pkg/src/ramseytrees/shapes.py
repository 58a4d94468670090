"""Finite approximations of shape-preserving tree maps and their algebra.

A shape-preserving map is a level-preserving injection that weakly commutes
with the successor operation.  Finite approximations have domain T(<=n) for
some n.  Two interchangeable representations are used:

* explicit node tables (`TableMap`), valid on any successor tree;
* intensional maps on word trees (`WordSkipMap`): a level map plus one
  extension function per skipped level, identity on kept letters.

`ComposedMap` chains maps lazily, which is what envelope construction on
large trees needs (their truncations are far too big to tabulate).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DomainMismatch, IllegalSplitLevel
from .extensions import ExtensionFn, table_fn
from .stree import DEFAULT_NODE_BUDGET, STree
from .words import Word, WordTree


@dataclass(frozen=True)
class LevelMap:
    """Strictly increasing map of levels; entries[j] is the image of level j."""

    entries: tuple[int, ...]

    def __post_init__(self):
        for j, (a, b) in enumerate(zip(self.entries, self.entries[1:])):
            if b <= a:
                raise ValueError(f"level map not strictly increasing at {j}")
        if self.entries and any(e < j for j, e in enumerate(self.entries)):
            raise ValueError("level map must satisfy entries[j] >= j")

    def __len__(self) -> int:
        return len(self.entries)

    def __call__(self, j: int) -> int:
        return self.entries[j]

    @property
    def top(self) -> int:
        return self.entries[-1]

    def image(self) -> tuple[int, ...]:
        return self.entries

    def skipped(self) -> tuple[int, ...]:
        """Levels below the top image level that are not in the image."""
        img = set(self.entries)
        return tuple(p for p in range(self.top + 1) if p not in img)


class ShapeApprox:
    """Common behaviour of shape-map approximations.

    Subclasses provide `tree`, `dom_top` (domain is T(<= dom_top); None means
    total), `levels` and `apply`.
    """

    tree: STree
    dom_top: int | None
    levels: LevelMap

    def apply(self, node):
        raise NotImplementedError

    def __call__(self, node):
        return self.apply(node)

    def apply_all(self, nodes):
        return [self.apply(a) for a in nodes]

    def domain_levels(self, budget: int = DEFAULT_NODE_BUDGET) -> list[list]:
        if self.dom_top is None:
            raise DomainMismatch("total map has no finite domain to enumerate")
        return self.tree.truncation(self.dom_top, budget=budget)

    def as_table(self, budget: int = DEFAULT_NODE_BUDGET) -> dict:
        return {a: self.apply(a)
                for level in self.domain_levels(budget=budget) for a in level}

    def eq_on_domain(self, other: "ShapeApprox", budget: int = DEFAULT_NODE_BUDGET) -> bool:
        """Node-map equality on the shared domain; the representation is irrelevant."""
        if self.dom_top != other.dom_top:
            return False
        return self.as_table(budget) == other.as_table(budget)

    def __eq__(self, other):
        if not isinstance(other, ShapeApprox):
            return NotImplemented
        return self.tree is other.tree and self.eq_on_domain(other)

    __hash__ = None


class TableMap(ShapeApprox):
    """Explicit node table on an enumerable truncation."""

    def __init__(self, tree: STree, table: dict):
        self.tree = tree
        self.table = dict(table)
        if not self.table:
            raise ValueError("empty table")
        self.dom_top = max(tree.level(a) for a in self.table)
        by_level: dict[int, int] = {}
        for a, b in self.table.items():
            la, lb = tree.level(a), tree.level(b)
            if by_level.setdefault(la, lb) != lb:
                raise ValueError(f"table is not level-preserving at level {la}")
        missing = set(range(self.dom_top + 1)) - set(by_level)
        if missing:
            raise ValueError(f"table misses levels {sorted(missing)}")
        self.levels = LevelMap(tuple(by_level[j] for j in range(self.dom_top + 1)))

    def apply(self, node):
        return self.table[node]


class WordSkipMap(ShapeApprox):
    """Intensional shape map on a word tree.

    Determined by the domain height, the set of skipped image positions and
    one extension function per skipped position.  Kept positions copy the
    domain letters (this is exactly passing-number preservation).
    """

    def __init__(self, tree: WordTree, dom_top: int, fillers: dict[int, ExtensionFn]):
        self.tree = tree
        self.dom_top = dom_top
        self.fillers = dict(fillers)
        top_image = dom_top + len(self.fillers)
        if any(not (0 <= p <= top_image) for p in self.fillers):
            raise ValueError("filler positions outside the image range")
        kept = tuple(p for p in range(top_image + 1) if p not in self.fillers)
        if len(kept) != dom_top + 1:
            raise ValueError("skipped positions must lie below the top image level")
        self.levels = LevelMap(kept)

    def apply(self, node: Word) -> Word:
        if len(node) > self.dom_top:
            raise DomainMismatch(f"node level {len(node)} above domain top {self.dom_top}")
        target = self.levels(len(node))
        out: list[int] = []
        kept = self.levels.entries
        next_kept = 0
        for p in range(target):
            if next_kept < len(kept) and p == kept[next_kept]:
                out.append(node.indices[next_kept])
                next_kept += 1
            else:
                out.append(self.fillers[p](tuple(out)))
        return Word(node.alphabet, tuple(out))

    def spec(self) -> dict:
        """JSON-ready description: { levels, skipped }."""
        return {
            "levels": list(self.levels.entries),
            "skipped": {str(p): f.spec() for p, f in sorted(self.fillers.items())},
        }


def identity_map(tree: WordTree, dom_top: int) -> WordSkipMap:
    return WordSkipMap(tree, dom_top, {})


class ComposedMap(ShapeApprox):
    """Lazy composition; parts are applied first-to-last."""

    def __init__(self, parts: list[ShapeApprox]):
        if not parts:
            raise ValueError("need at least one part")
        self.parts = []
        for p in parts:  # flatten nested compositions
            self.parts.extend(p.parts if isinstance(p, ComposedMap) else [p])
        self.tree = self.parts[0].tree
        self.dom_top = self.parts[0].dom_top
        entries = list(self.parts[0].levels.entries)
        for nxt in self.parts[1:]:
            entries = [nxt.levels(v) for v in entries]
        self.levels = LevelMap(tuple(entries))

    def apply(self, node):
        for part in self.parts:
            node = part.apply(node)
        return node


def compose(f: ShapeApprox, g: ShapeApprox, budget: int = DEFAULT_NODE_BUDGET) -> ShapeApprox:
    """The map a -> f(g(a)); `f` is canonically extended when `g` reaches past it."""
    if f.tree is not g.tree:
        raise DomainMismatch("maps live on different trees")
    if f.dom_top is not None:
        needed = g.levels.top
        if needed > f.dom_top:
            f = canonical_extension(f, needed, budget=budget)
    return ComposedMap([g, f])


def canonical_extension(f: ShapeApprox, to_level: int, budget: int = DEFAULT_NODE_BUDGET) -> ShapeApprox:
    """Extend `f` so that no level of the image at or above its old top is skipped.

    The extension is unique: beyond the old domain each successor must land on
    the immediately next level, which pins it to the image of the successor
    operation.  `to_level` is the requested top image level.
    """
    if f.dom_top is None:
        return f
    top = f.levels.top
    if to_level < top:
        raise DomainMismatch(f"cannot extend image top {top} down to {to_level}")
    if to_level == top:
        return f
    extra = to_level - top
    if isinstance(f, WordSkipMap):
        return WordSkipMap(f.tree, f.dom_top + extra, f.fillers)
    # Generic path: grow the table one level at a time through successors.
    table = dict(f.as_table(budget=budget))
    tree = f.tree
    frontier = [a for a in table if tree.level(a) == f.dom_top]
    for _ in range(extra):
        nxt = []
        for a in frontier:
            for params, char in tree.successor_args(a):
                child = tree.successor(a, params, char)
                if child is None:
                    continue
                image = tree.successor(table[a], tuple(table[p] for p in params), char)
                if image is None:
                    raise DomainMismatch("canonical extension hit an undefined successor")
                table[child] = image
                nxt.append(child)
                if len(table) > budget:
                    raise DomainMismatch("canonical extension exceeds budget")
        frontier = nxt
    return TableMap(tree, table)


def check_shape_preserving(f: ShapeApprox, budget: int = DEFAULT_NODE_BUDGET):
    """Return (True, None) or (False, witness).

    Word trees get the exact passing-number test.  On generic trees the test
    is injectivity + level preservation + weak successor preservation inside
    the domain, plus definedness of image successors one level past the
    domain; that lookahead makes it a semi-decision at the interface level.
    """
    tree = f.tree
    if isinstance(tree, WordTree):
        for level in f.domain_levels(budget=budget):
            for a in level:
                fa = f.apply(a)
                if len(fa) != f.levels(len(a)):
                    return False, ("level", a, fa)
                for j in range(len(a)):
                    if fa.indices[f.levels(j)] != a.indices[j]:
                        return False, ("passing-number", a, j)
        return True, None

    levels = f.domain_levels(budget=budget)
    seen: dict = {}
    for level in levels:
        for a in level:
            fa = f.apply(a)
            if tree.level(fa) != f.levels(tree.level(a)):
                return False, ("level", a, fa)
            if fa in seen:
                return False, ("injectivity", seen[fa], a)
            seen[fa] = a
    for level in levels:
        for a in level:
            for params, char in tree.successor_args(a):
                child = tree.successor(a, params, char)
                if child is None:
                    continue
                image_succ = tree.successor(
                    f.apply(a), tuple(f.apply(p) for p in params), char)
                if image_succ is None:
                    return False, ("weak-successor-undefined", a, params, char)
                if tree.level(child) <= f.dom_top:
                    fc = f.apply(child)
                    if tree.restrict(fc, tree.level(image_succ)) != image_succ:
                        return False, ("weak-successor", a, params, char)
    return True, None


def check_basic_properties(f: ShapeApprox, budget: int = DEFAULT_NODE_BUDGET) -> dict:
    """Check the four basic consequences of shape preservation on the domain.

    (i) successor preservation, (ii) decomposition preservation,
    (iii) relative level order, (iv) meet preservation.  Returns a report
    with pass/fail and a witness per item.
    """
    tree = f.tree
    levels = f.domain_levels(budget=budget)
    nodes = [a for level in levels for a in level]
    report = {k: {"status": "pass", "witness": None}
              for k in ("successors", "decompositions", "level_order", "meets")}

    def fail(key, witness):
        if report[key]["status"] == "pass":
            report[key] = {"status": "fail", "witness": witness}

    for level in levels[:-1]:
        for a in level:
            for params, char in tree.successor_args(a):
                b = tree.successor(a, params, char)
                if b is None or tree.level(b) > f.dom_top:
                    continue
                fa, fb = f.apply(a), f.apply(b)
                if tree.restrict(fb, tree.level(fa)) != fa:
                    fail("successors", (a, b))
                image_succ = tree.successor(fa, tuple(f.apply(p) for p in params), char)
                if image_succ is None or tree.restrict(fb, tree.level(image_succ)) != image_succ:
                    fail("decompositions", (a, params, char))
    for a in nodes:
        for b in nodes:
            if tree.level(a) < tree.level(b):
                if not tree.level(f.apply(a)) < tree.level(f.apply(b)):
                    fail("level_order", (a, b))
    for a in nodes:
        for b in nodes:
            m = tree.meet(a, b)
            if m is None:
                continue
            fm = tree.meet(f.apply(a), f.apply(b))
            if f.apply(m) != fm:
                fail("meets", (a, b, m, fm))
    return report


def split_at(f: ShapeApprox, m: int, budget: int = DEFAULT_NODE_BUDGET):
    """Split `f` (domain T(<=n)) at image level m into (f_low, g), g o f_low = f.

    Legal m: strictly above the image of level n-1 and at most the image of
    level n (for n = 0: 0 <= m <= image of level 0).  `f_low` truncates the
    top-level images at m; `g` fixes T(<m) and raises level m to the old top.
    Word trees only: `g` is assembled from the skip fillers of `f`.
    """
    n = f.dom_top
    if n is None:
        raise DomainMismatch("split needs a finite approximation")
    top = f.levels(n)
    low = -1 if n == 0 else f.levels(n - 1)
    if not (low < m <= top):
        raise IllegalSplitLevel(f"m={m} outside ({low}, {top}]")
    if not isinstance(f.tree, WordTree):
        raise DomainMismatch("split_at is implemented for word trees")
    fi = to_intensional(f, budget=budget)
    f_low = WordSkipMap(fi.tree, n, {p: e for p, e in fi.fillers.items() if p < m})
    g = WordSkipMap(fi.tree, m, {p: e for p, e in fi.fillers.items() if p >= m})
    return f_low, g


def to_intensional(f: ShapeApprox, budget: int = DEFAULT_NODE_BUDGET) -> WordSkipMap:
    """Certified conversion of a word-tree approximation to intensional form.

    Skip fillers are read off the realized image prefixes; unrealized
    prefixes default to letter 0, which does not affect the node map.  The
    conversion is verified node-by-node before returning.
    """
    if isinstance(f, WordSkipMap):
        return f
    if not isinstance(f.tree, WordTree):
        raise DomainMismatch("intensional maps exist on word trees only")
    table = f.as_table(budget=budget)
    fillers: dict[int, ExtensionFn] = {}
    for p in f.levels.skipped():
        observed: dict[tuple[int, ...], int] = {}
        for a, fa in table.items():
            if len(fa) > p:
                prefix = fa.indices[:p]
                letter = fa.indices[p]
                if observed.setdefault(prefix, letter) != letter:
                    raise DomainMismatch(f"level {p} filler is not a function of the prefix")
        fillers[p] = table_fn(p, observed, default=0)
    out = WordSkipMap(f.tree, f.dom_top, fillers)
    if out.as_table(budget=budget) != table:
        raise DomainMismatch("intensional conversion failed verification")
    return out


def enumerate_shape_maps(tree: WordTree, n_fixed: int, k_moving: int, top_max: int,
                         family=None, budget: int = DEFAULT_NODE_BUDGET):
    """All approximations in AM^n_k with image top at most `top_max`.

    Without a family this enumerates every shape-preserving approximation
    (each skipped position carries an arbitrary letter per realized prefix).
    With a family, skip fillers range over the family's extensions at that
    arity, so the output enumerates approximations of the family's monoid.
    """
    dom_top = n_fixed + k_moving - 1
    if dom_top < 0:
        return
    s = len(tree.alphabet)
    if s ** dom_top > budget:
        raise DomainMismatch("domain too large to enumerate")
    fixed = tuple(range(n_fixed))
    for moving in _increasing_tuples(n_fixed, top_max, k_moving):
        kept = fixed + moving
        skips = tuple(p for p in range(kept[-1] + 1) if p not in set(kept))
        yield from _fill_skips(tree, dom_top, kept, skips, {}, family)


def _increasing_tuples(lo: int, hi: int, k: int):
    if k == 0:
        yield ()
        return
    for first in range(lo, hi - k + 2):
        for rest in _increasing_tuples(first + 1, hi, k - 1):
            yield (first,) + rest


def _fill_skips(tree, dom_top, kept, skips, fillers, family):
    if not skips:
        yield WordSkipMap(tree, dom_top, fillers)
        return
    p, rest = skips[0], skips[1:]
    partial = WordSkipMap(tree, dom_top, {q: e for q, e in fillers.items() if q < p})
    realized = sorted({
        partial.apply(a).indices[:p]
        for a in tree.nodes_at_level(dom_top)
        if partial.levels(len(a)) > p
    })
    s = len(tree.alphabet)
    if family is None:
        for letters in product(range(s), repeat=len(realized)):
            e = table_fn(p, dict(zip(realized, letters)), default=0)
            yield from _fill_skips(tree, dom_top, kept, rest, {**fillers, p: e}, family)
    else:
        for e in family.enumerate_level(p):
            yield from _fill_skips(tree, dom_top, kept, rest, {**fillers, p: e}, family)
