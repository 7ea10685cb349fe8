"""
Brute-force oracles for small instances.

Nothing here imports the search code under test; the oracles only use
Graph/Society containers and plain enumeration.
"""

from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from src.graph.graph import Graph
from src.society.society import Society


def _connected(g: Graph, vs: Set[int]) -> bool:
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u in vs and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vs


def _adjacent(g: Graph, a: Set[int], b: Set[int]) -> bool:
    return any(g.neighbors(v) & b for v in a)


def branch_partitions(g: Graph, k: int) -> Iterator[List[Set[int]]]:
    """
    Every family of k disjoint nonempty connected vertex sets, each listed
    once up to relabelling (labels appear in order of their least vertex).
    """
    vertices = g.sorted_vertices()
    n = len(vertices)
    labels: List[Optional[int]] = [None] * n

    def extend(i: int, used: int) -> Iterator[List[Set[int]]]:
        if k - used > n - i:
            return
        if i == n:
            sets = [set() for _ in range(k)]
            for v, label in zip(vertices, labels):
                if label is not None:
                    sets[label].add(v)
            if all(_connected(g, s) for s in sets):
                yield sets
            return
        for label in [None] + list(range(min(used + 1, k))):
            labels[i] = label
            yield from extend(i + 1, used + 1 if label == used else used)
        labels[i] = None

    yield from extend(0, 0)


def has_clique_minor(g: Graph, k: int) -> bool:
    for sets in branch_partitions(g, k):
        if all(_adjacent(g, sets[i], sets[j]) for i, j in combinations(range(k), 2)):
            return True
    return False


def has_k33_minor(g: Graph) -> bool:
    for sets in branch_partitions(g, 6):
        for left in combinations(range(6), 3):
            if 0 not in left:
                continue
            right = [i for i in range(6) if i not in left]
            if all(_adjacent(g, sets[i], sets[j]) for i in left for j in right):
                return True
    return False


def kuratowski_planar(g: Graph) -> bool:
    """Planar iff neither K5 nor K3,3 is a minor."""
    simple = g.simplify()
    if simple.simple_edge_count() <= 8:
        return True
    return not has_clique_minor(simple, 5) and not has_k33_minor(simple)


def subset_min_cut(g: Graph, X: Set[int], Y: Set[int]) -> int:
    """Least |S| such that G - S has no path from X - S to Y - S."""
    vertices = g.sorted_vertices()
    for size in range(len(vertices) + 1):
        for cut in combinations(vertices, size):
            rest = g.vertices - set(cut)
            reach = g.bfs([x for x in X if x in rest], rest)
            if not reach & (set(Y) - set(cut)):
                return size
    return len(vertices)


def wheel_gadget_oracle(s: Society) -> Graph:
    """G plus the Ω cycle plus a hub joined to every Ω vertex."""
    g = s.graph
    ring = s.omega.ring
    hub = g.n
    edges = list(g.edges)
    if len(ring) >= 3:
        edges += [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    edges += [(hub, v) for v in ring]
    return Graph(g.n + 1, edges, set(g.vertices) | {hub})


def rural_oracle(s: Society) -> bool:
    if len(s.omega) <= 1:
        return kuratowski_planar(s.graph)
    if len(s.omega) == 2:
        u, v = s.omega.ring
        return kuratowski_planar(s.graph.add_edges([(u, v)]))
    return kuratowski_planar(wheel_gadget_oracle(s))


def all_bumps(s: Society) -> Iterator[Tuple[int, ...]]:
    """Every bump, each path listed in both directions."""
    omega = s.omega.vertices

    def extend(path: List[int]) -> Iterator[Tuple[int, ...]]:
        for u in sorted(s.graph.neighbors(path[-1])):
            if u in path:
                continue
            if u in omega:
                yield tuple(path + [u])
            else:
                path.append(u)
                yield from extend(path)
                path.pop()

    for a in sorted(omega):
        yield from extend([a])


def has_cross_oracle(s: Society) -> bool:
    bumps = list(all_bumps(s))
    for i, p in enumerate(bumps):
        for q in bumps[i + 1 :]:
            if set(p) & set(q):
                continue
            if s.omega.clockwise([p[0], q[0], p[-1], q[-1]]):
                return True
    return False


def disjoint_bump_count(s: Society, bumps: Sequence[Tuple[int, ...]]) -> int:
    """Largest number of pairwise disjoint bumps among those given."""
    best = 0

    def grow(start: int, used: Set[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        for i in range(start, len(bumps)):
            if not used & set(bumps[i]):
                grow(i + 1, used | set(bumps[i]), count + 1)

    grow(0, set(), 0)
    return best


def _induced_edges(g: Graph, vs: Set[int]) -> int:
    return sum(1 for u, v in g.edges if u in vs and v in vs)


def internally_4_connected_oracle(g: Graph) -> bool:
    """Every separation (A, B) written out, with |E(G[A])| and |E(G[B])| counted directly."""
    vertices = g.sorted_vertices()
    if len(vertices) < 5 or len(set(g.edges)) != len(g.edges) or any(u == v for u, v in g.edges):
        return False
    for size in range(3):
        for cut in combinations(vertices, size):
            if not _connected(g, set(vertices) - set(cut)):
                return False
    for cut in combinations(vertices, 3):
        rest = [v for v in vertices if v not in cut]
        for mask in range(1 << len(rest)):
            only_a = {v for i, v in enumerate(rest) if mask >> i & 1}
            only_b = set(rest) - only_a
            if _adjacent(g, only_a, only_b):
                continue
            a, b = only_a | set(cut), only_b | set(cut)
            if _induced_edges(g, a) > 3 and _induced_edges(g, b) > 3:
                return False
    return True
