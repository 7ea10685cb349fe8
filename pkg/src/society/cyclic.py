"""Cyclic orders over vertex subsets."""

from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from src.utils.errors import MalformedInputError


class CyclicOrder:
    """
    A cyclic permutation of distinct vertex ids.

    Two orders are equal iff one is a rotation of the other; reflection is
    a different order.
    """

    __slots__ = ("_ring", "_pos", "_canonical")

    def __init__(self, ring: Iterable[int]) -> None:
        ring = tuple(int(v) for v in ring)
        if len(set(ring)) != len(ring):
            raise MalformedInputError(f"cyclic order has repeated vertices: {list(ring)}")
        self._ring: Tuple[int, ...] = ring
        self._pos = {v: i for i, v in enumerate(ring)}
        if ring:
            k = ring.index(min(ring))
            self._canonical = ring[k:] + ring[:k]
        else:
            self._canonical = ()

    @property
    def ring(self) -> Tuple[int, ...]:
        return self._ring

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self._ring)

    def position(self, v: int) -> int:
        return self._pos[v]

    def succ(self, v: int) -> int:
        return self._ring[(self._pos[v] + 1) % len(self._ring)]

    def pred(self, v: int) -> int:
        return self._ring[(self._pos[v] - 1) % len(self._ring)]

    def _require(self, vs: Iterable[int]) -> None:
        missing = [v for v in vs if v not in self._pos]
        if missing:
            raise MalformedInputError(f"vertices not in the cyclic order: {missing[:5]}")

    def starting_at(self, v: int) -> Tuple[int, ...]:
        """The ring listed clockwise from v."""
        k = self._pos[v]
        return self._ring[k:] + self._ring[:k]

    def clockwise(self, seq: Sequence[int]) -> bool:
        """
        True iff ``seq`` lists distinct members of the order that appear in
        this cyclic order (up to rotation).

        Two-element sequences are clockwise by convention.

        Raises:
            MalformedInputError: repeated or foreign vertices
            ValueError: sequences of length at most one
        """
        seq = list(seq)
        if len(seq) <= 1:
            raise ValueError("clockwise needs at least two vertices")
        if len(set(seq)) != len(seq):
            raise MalformedInputError(f"clockwise sequence repeats a vertex: {seq}")
        self._require(seq)
        if len(seq) == 2:
            return True
        offsets = [(self._pos[v] - self._pos[seq[0]]) % len(self._ring) for v in seq]
        return all(offsets[i] < offsets[i + 1] for i in range(len(offsets) - 1))

    def arc(self, u: int, v: int) -> Tuple[int, ...]:
        """uΩv as a clockwise sequence from u to v (both included)."""
        self._require([u, v])
        out = [u]
        while out[-1] != v:
            out.append(self.succ(out[-1]))
        return tuple(out)

    def interval(self, u: int, v: int) -> FrozenSet[int]:
        """uΩv as a set; interval(u, u) is {u}."""
        return frozenset(self.arc(u, v))

    def arcs(self) -> Iterator[Tuple[int, ...]]:
        """Every proper nonempty arc, shortest first from each start."""
        n = len(self._ring)
        for length in range(1, n):
            for start in range(n):
                yield tuple(self._ring[(start + j) % n] for j in range(length))

    def restrict(self, xs: Iterable[int]) -> "CyclicOrder":
        """Ω|X: members of X in the order inherited from Ω."""
        keep = set(xs)
        return CyclicOrder(v for v in self._ring if v in keep)

    def delete(self, xs: Iterable[int]) -> "CyclicOrder":
        drop = set(xs)
        return CyclicOrder(v for v in self._ring if v not in drop)

    def reversed(self) -> "CyclicOrder":
        return CyclicOrder(reversed(self._ring))

    def to_list(self) -> List[int]:
        return list(self._ring)

    def __len__(self) -> int:
        return len(self._ring)

    def __iter__(self) -> Iterator[int]:
        return iter(self._ring)

    def __contains__(self, v: object) -> bool:
        return v in self._pos

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicOrder):
            return NotImplemented
        return self._canonical == other._canonical

    def __hash__(self) -> int:
        return hash(self._canonical)

    def __repr__(self) -> str:
        return f"CyclicOrder({list(self._ring)})"


def clockwise(omega: CyclicOrder, seq: Sequence[int]) -> bool:
    return omega.clockwise(seq)


def interval(omega: CyclicOrder, u: int, v: int) -> FrozenSet[int]:
    return omega.interval(u, v)


def restrict(omega: CyclicOrder, xs: Iterable[int]) -> CyclicOrder:
    return omega.restrict(xs)
