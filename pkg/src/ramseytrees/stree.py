"""Trees with a successor operation.

A successor tree is a countable, finitely branching, levelled tree together
with a partial operation ``successor(node, params, char)`` that builds every
immediate successor of a node from the node itself, a tuple of
lower-level parameter nodes, and a character.  The operation must be
injective and every edge of the tree must arise from it, so each non-root
node has a unique decomposition.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from .errors import DepthTooLarge

DEFAULT_NODE_BUDGET = 2**20


class STree(ABC):
    """Abstract successor tree.

    Nodes are hashable values; the tree object owns all structure.  The
    character set may depend on the tree (the partial-type tree draws its
    characters from its own level-1 nodes), so it is exposed as a method.
    """

    @abstractmethod
    def roots(self) -> list:
        """Level-0 nodes."""

    @abstractmethod
    def level(self, node) -> int:
        ...

    @abstractmethod
    def characters(self) -> list:
        """The character set used by the successor operation."""

    @abstractmethod
    def successor(self, node, params: tuple, char):
        """Apply the successor operation; return None where undefined."""

    @abstractmethod
    def decompose(self, node) -> tuple:
        """Return (parent, params, char) with successor(parent, params, char) == node."""

    @abstractmethod
    def successor_args(self, node) -> list:
        """All (params, char) pairs for which `successor` may be defined at `node`.

        Pairs for which the successor turns out undefined are permitted; the
        enumeration only has to cover every defined case.
        """

    # Derived structure ----------------------------------------------------

    def children(self, node) -> list:
        out = []
        for params, char in self.successor_args(node):
            child = self.successor(node, params, char)
            if child is not None:
                out.append(child)
        return out

    def restrict(self, node, n: int):
        """Predecessor of `node` at level `n` (written node|_n)."""
        lvl = self.level(node)
        if n > lvl:
            raise ValueError(f"cannot restrict level-{lvl} node to level {n}")
        current = node
        for _ in range(lvl - n):
            current, _, _ = self.decompose(current)
        return current

    def parameters(self, node) -> tuple:
        """Dp(node): the parameter tuple of the unique decomposition."""
        return self.decompose(node)[1]

    def character_of(self, node):
        """Dc(node): the character of the unique decomposition."""
        return self.decompose(node)[2]

    def meet(self, a, b):
        """Longest common predecessor, or None for nodes over distinct roots."""
        la, lb = self.level(a), self.level(b)
        n = min(la, lb)
        a, b = self.restrict(a, n), self.restrict(b, n)
        while a != b:
            if n == 0:
                return None
            a, _, _ = self.decompose(a)
            b, _, _ = self.decompose(b)
            n -= 1
        return a

    def nodes_at_level(self, n: int, budget: int = DEFAULT_NODE_BUDGET) -> list:
        current = list(self.roots())
        for _ in range(n):
            nxt = []
            for node in current:
                nxt.extend(self.children(node))
                if len(nxt) > budget:
                    raise DepthTooLarge(f"level {n} exceeds node budget {budget}")
            current = nxt
        return current

    def truncation(self, depth: int, budget: int = DEFAULT_NODE_BUDGET) -> list[list]:
        """Nodes of levels 0..depth as a list of per-level lists."""
        levels = [list(self.roots())]
        total = len(levels[0])
        for _ in range(depth):
            nxt = []
            for node in levels[-1]:
                nxt.extend(self.children(node))
            total += len(nxt)
            if total > budget:
                raise DepthTooLarge(f"truncation exceeds node budget {budget}")
            levels.append(nxt)
        return levels


@dataclass
class AxiomFinding:
    axiom: str
    message: str
    witness: object = None


@dataclass
class AxiomReport:
    depth: int
    level_sizes: list[int] = field(default_factory=list)
    findings: list[AxiomFinding] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.findings

    def by_axiom(self, axiom: str) -> list[AxiomFinding]:
        return [f for f in self.findings if f.axiom == axiom]

    def summary(self) -> dict:
        status = {ax: "pass" for ax in ("S1", "S2", "S3")}
        for f in self.findings:
            status[f.axiom] = "fail"
        return {
            "depth": self.depth,
            "level_sizes": self.level_sizes,
            "axioms": status,
            "failures": [
                {"axiom": f.axiom, "message": f.message} for f in self.findings
            ],
        }


def check_stree_axioms(tree: STree, depth: int, budget: int = DEFAULT_NODE_BUDGET) -> AxiomReport:
    """Verify S1 (definedness shape), S2 (injectivity), S3 (constructivity).

    All checks run on the truncation up to `depth`; failures carry witnesses.
    """
    levels = tree.truncation(depth, budget=budget)
    report = AxiomReport(depth=depth, level_sizes=[len(lv) for lv in levels])
    node_set = {node for lv in levels for node in lv}

    built: dict = {}
    for lv in levels[:-1]:
        for node in lv:
            for params, char in tree.successor_args(node):
                child = tree.successor(node, params, char)
                if child is None:
                    continue
                # S1: immediate successor, parameters strictly below the base.
                if tree.level(child) != tree.level(node) + 1:
                    report.findings.append(AxiomFinding(
                        "S1", "successor is not an immediate successor",
                        (node, params, char, child)))
                if any(tree.level(p) > tree.level(node) - 1 for p in params):
                    report.findings.append(AxiomFinding(
                        "S1", "parameter level exceeds base level - 1",
                        (node, params, char)))
                # S2: injectivity of the successor operation.
                key = child
                triple = (node, tuple(params), char)
                if key in built and built[key] != triple:
                    report.findings.append(AxiomFinding(
                        "S2", "two argument triples build the same node",
                        (built[key], triple, child)))
                built[key] = triple

    # S3: every non-root node decomposes, and the decomposition rebuilds it.
    for n, lv in enumerate(levels[1:], start=1):
        for node in lv:
            parent, params, char = tree.decompose(node)
            if parent not in node_set:
                report.findings.append(AxiomFinding(
                    "S3", "decomposition parent not in the tree", (node, parent)))
                continue
            rebuilt = tree.successor(parent, params, char)
            if rebuilt != node:
                report.findings.append(AxiomFinding(
                    "S3", "decomposition does not rebuild the node",
                    (node, parent, params, char, rebuilt)))
    return report


def check_e1(tree: STree, depth: int, budget: int = DEFAULT_NODE_BUDGET):
    """Spot-check that one-level skips transfer successor definedness downward.

    For every level i < depth, every node `a` of level >= i, and every
    candidate image `b` of `a` under a map skipping only level i, whenever
    some successor of `b` is defined so must be the matching successor of
    `a`.  Candidate images and the matching of parameters are delegated to
    the tree hooks `skip_insertions` / `skip_removal`; trees without these
    hooks are accepted when the successor operation is total.

    Returns None when no violation is found; otherwise a witness tuple.
    """
    levels = tree.truncation(depth, budget=budget)
    insertions = getattr(tree, "skip_insertions", None)
    removal = getattr(tree, "skip_removal", None)
    if insertions is None or removal is None:
        if getattr(tree, "successor_total", False):
            return None
        raise NotImplementedError("tree provides no skip hooks and is not total")
    for i in range(depth):
        for lv in levels[i:-1]:
            for a in lv:
                for b in insertions(a, i):
                    for params_b, char in tree.successor_args(b):
                        if tree.successor(b, params_b, char) is None:
                            continue
                        params_a, preimage = [], True
                        for p in params_b:
                            lp = tree.level(p)
                            if lp < i:
                                params_a.append(p)
                            elif lp == i:
                                preimage = False  # level i is skipped; not an image
                                break
                            else:
                                try:
                                    params_a.append(removal(p, i))
                                except ValueError:
                                    preimage = False
                                    break
                        if not preimage:
                            continue
                        if tree.successor(a, tuple(params_a), char) is None:
                            return (i, a, b, params_b, char)
    return None
