"""K6 minor models: verification and exact bounded search."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.graph.graph import Graph
from src.utils.budget import Budget, as_budget
from src.utils.errors import MalformedInputError

logger = logging.getLogger(__name__)

K = 6


@dataclass(frozen=True)
class MinorModel:
    """Six labelled branch sets realizing K6."""

    branch_sets: Tuple[FrozenSet[int], ...]

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "MinorModel":
        return cls(tuple(frozenset(s) for s in sets))

    def normalized(self) -> "MinorModel":
        """Branch sets ordered by their sorted member lists."""
        return MinorModel(tuple(sorted(self.branch_sets, key=lambda s: sorted(s))))

    def vertices(self) -> Set[int]:
        return {v for s in self.branch_sets for v in s}

    def to_dict(self) -> Dict[str, List[List[int]]]:
        return {"branch_sets": [sorted(s) for s in self.branch_sets]}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "MinorModel":
        try:
            return cls.of(data["branch_sets"])
        except (KeyError, TypeError) as e:
            raise MalformedInputError(f"invalid model JSON: {e}") from e


def explain_minor_model(g: Graph, m: MinorModel) -> Optional[str]:
    """
    Return the first violated model clause, or None when the model is valid.

    Raises:
        MalformedInputError: if a branch set names a vertex outside g
    """
    for s in m.branch_sets:
        g.check_vertices(s, "branch-set")
    if len(m.branch_sets) != K:
        return f"expected {K} branch sets, got {len(m.branch_sets)}"
    for i, s in enumerate(m.branch_sets):
        if not s:
            return f"branch set {i} is empty"
    for i in range(K):
        for j in range(i + 1, K):
            if m.branch_sets[i] & m.branch_sets[j]:
                return f"branch sets {i} and {j} intersect"
    for i, s in enumerate(m.branch_sets):
        if not g.is_connected(s):
            return f"branch set {i} is not connected"
    for i in range(K):
        for j in range(i + 1, K):
            a, b = m.branch_sets[i], m.branch_sets[j]
            if not any(g.neighbors(v) & b for v in a):
                return f"branch sets {i} and {j} are not adjacent"
    return None


def verify_minor_model(g: Graph, m: MinorModel) -> bool:
    """True iff m is a K6 minor model in g."""
    violated = explain_minor_model(g, m)
    if violated:
        logger.debug(f"Model rejected: {violated}")
    return violated is None


# ----------------------------------------------------------------------
# search state: super-vertex adjacency with the original members of each
# ----------------------------------------------------------------------
Adj = Dict[int, Set[int]]
Members = Dict[int, FrozenSet[int]]


def _copy(adj: Adj, members: Members) -> Tuple[Adj, Members]:
    return {v: set(nb) for v, nb in adj.items()}, dict(members)


def _remove(adj: Adj, members: Members, v: int) -> None:
    for u in adj.pop(v):
        adj[u].discard(v)
    members.pop(v)


def _contract(adj: Adj, members: Members, v: int, into: int) -> None:
    """Merge v into its neighbour ``into``."""
    for u in adj[v]:
        if u != into:
            adj[u].add(into)
            adj[into].add(u)
    members[into] = members[into] | members[v]
    _remove(adj, members, v)
    adj[into].discard(into)


def _reduce(adj: Adj, members: Members) -> None:
    """Drop vertices of degree <= 1 and suppress degree-2 vertices."""
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            if d <= 1:
                _remove(adj, members, v)
                changed = True
            elif d == 2:
                _contract(adj, members, v, min(adj[v]))
                changed = True


def _edge_count(adj: Adj) -> int:
    return sum(len(nb) for nb in adj.values()) // 2


def _to_nx(adj: Adj, skip: Optional[int] = None) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(v for v in adj if v != skip)
    h.add_edges_from((u, w) for u, nb in adj.items() if u != skip for w in nb if w != skip and u < w)
    return h


def _planar(adj: Adj, skip: Optional[int] = None) -> bool:
    planar, _ = nx.check_planarity(_to_nx(adj, skip))
    return planar


def _is_apex(adj: Adj) -> bool:
    if _planar(adj):
        return True
    return any(_planar(adj, skip=v) for v in sorted(adj))


def _find_clique(adj: Adj, size: int) -> Optional[List[int]]:
    """A clique of the given size, searched in the (size-1)-core."""
    core = {v: set(nb) for v, nb in adj.items()}
    pruned = True
    while pruned:
        pruned = False
        for v in list(core):
            if len(core[v]) < size - 1:
                for u in core.pop(v):
                    if u in core:
                        core[u].discard(v)
                pruned = True

    def grow(clique: List[int], candidates: List[int]) -> Optional[List[int]]:
        if len(clique) == size:
            return clique
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i < size:
                return None
            found = grow(clique + [v], [u for u in candidates[i + 1 :] if u in core[v]])
            if found:
                return found
        return None

    return grow([], sorted(core))


def _components(adj: Adj) -> List[Set[int]]:
    seen: Set[int] = set()
    comps: List[Set[int]] = []
    for s in sorted(adj):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(comp)
    return comps


class _K6Search:
    """Exact search: contraction/deletion branching with apex pruning.

    A vertex of degree at most four can never be a singleton branch set of
    a K6 model, so in a covering model it shares its set with a neighbour
    or is unused. Branching over those options is complete. When every
    vertex has degree at least five the remaining graph is handed to an
    exhaustive partition search.
    """

    def __init__(self, budget: Budget) -> None:
        self.budget = budget

    def run(self, adj: Adj, members: Members) -> Optional[List[FrozenSet[int]]]:
        self.budget.tick()
        _reduce(adj, members)
        comps = _components(adj)
        if len(comps) > 1:
            for comp in comps:
                if len(comp) < K:
                    continue
                sub = {v: adj[v] & comp for v in comp}
                found = self.run(*_copy(sub, {v: members[v] for v in comp}))
                if found:
                    return found
            return None
        n, m = len(adj), _edge_count(adj)
        if n < K or m < K * (K - 1) // 2:
            return None
        clique = _find_clique(adj, K)
        if clique:
            return [members[v] for v in clique]
        # apex graphs on n vertices have at most 4n - 10 edges
        if m <= 4 * n - 10 and _is_apex(adj):
            return None

        v = min(adj, key=lambda x: (len(adj[x]), x))
        if len(adj[v]) >= 5:
            return self.partition_search(adj, members)

        order = sorted(adj[v], key=lambda u: (len(adj[u] & adj[v]), u))
        for u in order:
            child_adj, child_members = _copy(adj, members)
            _contract(child_adj, child_members, v, u)
            found = self.run(child_adj, child_members)
            if found:
                return found
        child_adj, child_members = _copy(adj, members)
        _remove(child_adj, child_members, v)
        return self.run(child_adj, child_members)

    def partition_search(self, adj: Adj, members: Members) -> Optional[List[FrozenSet[int]]]:
        """Assign every super-vertex one of six labels (covering model)."""
        start = max(adj, key=lambda x: (len(adj[x]), -x))
        order: List[int] = [start]
        seen = {start}
        i = 0
        while i < len(order):
            for u in sorted(adj[order[i]]):
                if u not in seen:
                    seen.add(u)
                    order.append(u)
            i += 1
        index = {v: k for k, v in enumerate(order)}
        label: Dict[int, int] = {}
        classes: List[Set[int]] = []

        def class_ok(c: Set[int], pos: int) -> bool:
            # a class with no unassigned neighbours can no longer change
            frontier = any(index[u] > pos for v in c for u in adj[v])
            if frontier:
                return True
            if len(classes) < K:
                return False
            comp = {next(iter(c))}
            stack = list(comp)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in c and y not in comp:
                        comp.add(y)
                        stack.append(y)
            if comp != c:
                return False
            touched = {label[u] for v in c for u in adj[v] if u in label}
            return len(touched - {label[next(iter(c))]}) == K - 1

        def complete() -> bool:
            if len(classes) != K:
                return False
            for c in classes:
                if not _connected_within(adj, c):
                    return False
            for a in range(K):
                for b in range(a + 1, K):
                    if not any(adj[v] & classes[b] for v in classes[a]):
                        return False
            return True

        def assign(pos: int) -> bool:
            self.budget.tick()
            if pos == len(order):
                return complete()
            if K - len(classes) > len(order) - pos:
                return False
            v = order[pos]
            for lab in range(min(len(classes) + 1, K)):
                if lab == len(classes):
                    classes.append(set())
                classes[lab].add(v)
                label[v] = lab
                ok = all(class_ok(c, pos) for c in classes)
                if ok and assign(pos + 1):
                    return True
                classes[lab].discard(v)
                del label[v]
                if not classes[lab]:
                    classes.pop()
            return False

        if assign(0):
            return [frozenset().union(*(members[v] for v in c)) for c in classes]
        return None


def _connected_within(adj: Adj, c: Set[int]) -> bool:
    if not c:
        return False
    start = next(iter(c))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in c and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == c


def find_k6_minor(g: Graph, budget=None, within: Optional[Iterable[int]] = None) -> Optional[MinorModel]:
    """
    Exact K6 minor search.

    Args:
        g: Host graph (loops and parallel edges ignored)
        budget: Node limit (int or Budget); exhaustion raises BudgetExceeded
        within: Optional vertex subset restricting the search

    Returns:
        A verified MinorModel, or None when no K6 minor exists
    """
    budget = as_budget(budget, where="find_k6_minor")
    host = g if within is None else g.induced(within)
    adj: Adj = {v: set(host.neighbors(v)) for v in host.vertices}
    members: Members = {v: frozenset([v]) for v in host.vertices}
    logger.debug(f"find_k6_minor on {host!r}")
    found = _K6Search(budget).run(adj, members)
    if not found:
        logger.debug(f"find_k6_minor: no model after {budget.spent} nodes")
        return None
    model = MinorModel.of(found).normalized()
    if not verify_minor_model(host, model):
        raise AssertionError("internal error: K6 search produced an invalid model")
    logger.debug(f"find_k6_minor: model found after {budget.spent} nodes")
    return model
