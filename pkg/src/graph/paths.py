"""Paths, path systems and bounded path enumeration."""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from src.graph.graph import Graph
from src.utils.budget import Budget

logger = logging.getLogger(__name__)

Path = Tuple[int, ...]

# disjointness modes for a PathSystem
FULL = "full"
INTERNAL = "internal"
NONE = "none"


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists distinct vertices of g with consecutive ones adjacent."""
    if not seq:
        return False
    if len(set(seq)) != len(seq):
        return False
    if any(v not in g.vertices for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def interior(p: Sequence[int]) -> Tuple[int, ...]:
    return tuple(p[1:-1])


def ends(p: Sequence[int]) -> FrozenSet[int]:
    return frozenset((p[0], p[-1]))


def path_edges(p: Sequence[int]) -> List[Tuple[int, int]]:
    return [(min(p[i], p[i + 1]), max(p[i], p[i + 1])) for i in range(len(p) - 1)]


def subpath(p: Sequence[int], a: int, b: int) -> Path:
    """The subpath of p between vertices a and b (in either direction)."""
    i, j = p.index(a), p.index(b)
    if i <= j:
        return tuple(p[i : j + 1])
    return tuple(reversed(p[j : i + 1]))


def join(*parts: Sequence[int]) -> Path:
    """Concatenate paths that share consecutive end vertices."""
    out: List[int] = []
    for part in parts:
        part = list(part)
        if out and part and out[-1] == part[0]:
            part = part[1:]
        out.extend(part)
    return tuple(out)


@dataclass(frozen=True)
class PathSystem:
    """A list of paths with an explicit disjointness contract.

    ``mode`` is one of ``"full"`` (pairwise vertex-disjoint),
    ``"internal"`` (only shared ends allowed) or ``"none"``.
    """

    paths: Tuple[Path, ...]
    mode: str = FULL
    shared: FrozenSet[int] = field(default_factory=frozenset)

    @classmethod
    def of(cls, paths: Iterable[Sequence[int]], mode: str = FULL, shared: Iterable[int] = ()) -> "PathSystem":
        return cls(tuple(tuple(p) for p in paths), mode, frozenset(shared))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def vertices(self) -> Set[int]:
        return {v for p in self.paths for v in p}

    def verify(self, g: Graph) -> bool:
        if not all(is_path(g, p) for p in self.paths):
            return False
        if self.mode == NONE:
            return True
        for i, p in enumerate(self.paths):
            for q in self.paths[i + 1 :]:
                common = (set(p) & set(q)) - self.shared
                if self.mode == FULL and common:
                    return False
                if self.mode == INTERNAL and (common - (ends(p) & ends(q))):
                    return False
        return True

    def to_dict(self) -> Dict[str, object]:
        return {"paths": [list(p) for p in self.paths], "mode": self.mode, "shared": sorted(self.shared)}


def shortest_path(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    allowed: Optional[Set[int]] = None,
) -> Optional[Path]:
    """BFS shortest path from any source to any target inside ``allowed``.

    Sources and targets must themselves lie in ``allowed`` when it is given.
    Ties resolve toward smaller ids.
    """
    targets = set(targets)
    parent: Dict[int, Optional[int]] = {}
    queue = deque()
    for s in sorted(set(sources)):
        if s in g.vertices and (allowed is None or s in allowed):
            parent[s] = None
            queue.append(s)
    while queue:
        v = queue.popleft()
        if v in targets:
            out = [v]
            while parent[out[-1]] is not None:
                out.append(parent[out[-1]])
            return tuple(reversed(out))
        for u in sorted(g.neighbors(v)):
            if u not in parent and (allowed is None or u in allowed):
                parent[u] = v
                queue.append(u)
    return None


def enumerate_paths(
    g: Graph,
    start: int,
    is_target: Callable[[int], bool],
    allowed: Callable[[int], bool],
    budget: Optional[Budget] = None,
    chordless: bool = False,
    min_length: int = 1,
    max_length: Optional[int] = None,
) -> Iterator[Path]:
    """Depth-first enumeration of simple paths from ``start``.

    A path stops as soon as it reaches a target vertex (targets are never
    passed through). Interior vertices must satisfy ``allowed``. With
    ``chordless`` only induced paths are produced. Paths are yielded in
    lexicographic order of their vertex sequences.
    """
    stack: List[int] = [start]
    on_path: Set[int] = {start}

    def extend() -> Iterator[Path]:
        if budget is not None:
            budget.tick()
        v = stack[-1]
        for u in sorted(g.neighbors(v)):
            if u in on_path:
                continue
            if chordless and any(g.has_edge(u, w) for w in stack[:-1]):
                continue
            length = len(stack)
            if is_target(u):
                if length >= min_length:
                    yield tuple(stack) + (u,)
                continue
            if not allowed(u):
                continue
            if max_length is not None and length >= max_length:
                continue
            stack.append(u)
            on_path.add(u)
            yield from extend()
            stack.pop()
            on_path.discard(u)

    yield from extend()


def disjoint(*vertex_sets: Iterable[int]) -> bool:
    seen: Set[int] = set()
    for vs in vertex_sets:
        vs = set(vs)
        if seen & vs:
            return False
        seen |= vs
    return True
