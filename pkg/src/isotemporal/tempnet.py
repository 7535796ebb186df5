"""Temporal networks: validation, temporal paths, reachability and isomorphism.

Edge times are rank-normalized on construction, so everything downstream of
:func:`validate_network` compares small integers rather than floats.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path

from .errors import (
    DuplicateEdge,
    DuplicateTime,
    NotACycle,
    SelfLoop,
    SizeMismatch,
    TooLarge,
    UnknownVertex,
)

GENERAL_SEARCH_CAP = 8


@dataclass(frozen=True)
class TemporalNetwork:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    times: tuple[float, ...]
    ranks: tuple[int, ...] = field(init=False)
    _rank_of: dict[frozenset[str], int] = field(init=False, repr=False, compare=False)
    _adjacency: dict[str, tuple[tuple[str, int], ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        order = sorted(range(len(self.times)), key=self.times.__getitem__)
        ranks = [0] * len(self.times)
        for r, i in enumerate(order, start=1):
            ranks[i] = r
        object.__setattr__(self, "ranks", tuple(ranks))
        object.__setattr__(
            self,
            "_rank_of",
            {frozenset(e): r for e, r in zip(self.edges, ranks)},
        )
        adj: dict[str, list[tuple[str, int]]] = {v: [] for v in self.vertices}
        for (u, v), r in zip(self.edges, ranks):
            adj[u].append((v, r))
            adj[v].append((u, r))
        object.__setattr__(
            self, "_adjacency", {v: tuple(nb) for v, nb in adj.items()}
        )

    def __len__(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._rank_of

    def rank(self, u: str, v: str) -> int:
        """Rank (1 = earliest) of the edge ``{u, v}``; KeyError if absent."""
        return self._rank_of[frozenset((u, v))]

    def neighbors(self, v: str) -> tuple[tuple[str, int], ...]:
        return self._adjacency[v]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"u": u, "v": v, "t": t} for (u, v), t in zip(self.edges, self.times)
            ],
        }


def validate_network(
    vertices: Iterable[str], edges: Iterable[tuple[str, str, float]]
) -> TemporalNetwork:
    """Build a :class:`TemporalNetwork` from a vertex list and ``(u, v, t)`` triples.

    Vertex order is preserved. Raises :class:`UnknownVertex`, :class:`SelfLoop`,
    :class:`DuplicateEdge` or :class:`DuplicateTime`.
    """
    verts = tuple(str(v) for v in vertices)
    if len(set(verts)) != len(verts):
        raise DuplicateEdge("duplicate vertex identifier in vertex list")
    known = set(verts)
    seen_edges: set[frozenset[str]] = set()
    seen_times: set[float] = set()
    pairs: list[tuple[str, str]] = []
    times: list[float] = []
    for u, v, t in edges:
        u, v = str(u), str(v)
        for x in (u, v):
            if x not in known:
                raise UnknownVertex(f"edge endpoint {x!r} is not a declared vertex")
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}")
        key = frozenset((u, v))
        if key in seen_edges:
            raise DuplicateEdge(f"duplicate edge {{{u}, {v}}}")
        if t in seen_times:
            raise DuplicateTime(f"time {t!r} is used by more than one edge")
        seen_edges.add(key)
        seen_times.add(t)
        pairs.append((u, v))
        times.append(t)
    return TemporalNetwork(verts, tuple(pairs), tuple(times))


def network_from_json(obj: Mapping) -> TemporalNetwork:
    try:
        vertices = obj["vertices"]
        raw_edges = obj["edges"]
        edges = []
        for e in raw_edges:
            t = e["t"]
            if isinstance(t, bool) or not isinstance(t, (int, float)):
                raise TypeError(f"edge time must be a number, got {t!r}")
            edges.append((e["u"], e["v"], t))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed network JSON: {exc}") from exc
    return validate_network(vertices, edges)


def load_network(path: str | Path) -> TemporalNetwork:
    with open(path, encoding="utf-8") as fh:
        return network_from_json(json.load(fh))


def _check_vertices(net: TemporalNetwork, seq: Iterable[str]) -> None:
    for v in seq:
        if v not in net._adjacency:
            raise UnknownVertex(f"{v!r} is not a vertex of the network")


def is_temporal_path(net: TemporalNetwork, seq: Sequence[str]) -> bool:
    """True iff consecutive pairs of ``seq`` are edges with strictly increasing times."""
    if len(seq) < 2:
        raise ValueError("a temporal path needs at least two vertices")
    _check_vertices(net, seq)
    last = 0
    for u, v in zip(seq, seq[1:]):
        if not net.has_edge(u, v):
            return False
        r = net.rank(u, v)
        if r <= last:
            return False
        last = r
    return True


def temporal_paths(net: TemporalNetwork) -> Iterator[tuple[str, ...]]:
    """Yield every temporal path (two or more vertices) by depth-first search."""

    def extend(path: list[str], last: int) -> Iterator[tuple[str, ...]]:
        for w, r in net.neighbors(path[-1]):
            if r > last:
                path.append(w)
                yield tuple(path)
                yield from extend(path, r)
                path.pop()

    for v in net.vertices:
        yield from extend([v], 0)


def temporal_reachable_set(net: TemporalNetwork, source: str) -> frozenset[str]:
    """Vertices that could hold an item that starts at ``source``, source included.

    Edges are swept once in time order; an edge carries the item across if one
    endpoint already held it strictly before the edge's time.
    """
    _check_vertices(net, [source])
    arrival = {source: 0}
    for r, (u, v) in sorted(zip(net.ranks, net.edges)):
        if arrival.get(u, r) < r and v not in arrival:
            arrival[v] = r
        elif arrival.get(v, r) < r and u not in arrival:
            arrival[u] = r
    return frozenset(arrival)


@dataclass(frozen=True)
class NGon:
    """A temporal cycle: ``order`` lists vertices around the cycle and
    ``ranks[i]`` is the rank of edge ``e_i = {order[i], order[i+1 mod n]}``."""

    order: tuple[str, ...]
    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.order)
        if n < 3:
            raise NotACycle("an n-gon needs at least three vertices")
        if len(self.ranks) != n or sorted(self.ranks) != list(range(1, n + 1)):
            raise DuplicateTime("n-gon ranks must be a permutation of 1..n")
        if len(set(self.order)) != n:
            raise DuplicateEdge("repeated vertex in cycle order")

    @property
    def n(self) -> int:
        return len(self.order)

    @classmethod
    def from_ranks(cls, ranks: Sequence[int], names: Sequence[str] | None = None) -> NGon:
        if names is None:
            names = [f"v{i + 1}" for i in range(len(ranks))]
        return cls(tuple(names), tuple(ranks))

    @classmethod
    def from_network(cls, net: TemporalNetwork) -> NGon:
        """Recover the cycle order of a network that is a single n-cycle.

        The walk starts at the first listed vertex and steps first to whichever
        neighbour is listed earlier.
        """
        n = len(net.vertices)
        if n < 3 or len(net.edges) != n:
            raise NotACycle("not an n-gon: need n >= 3 vertices and exactly n edges")
        if any(len(net.neighbors(v)) != 2 for v in net.vertices):
            raise NotACycle("not an n-gon: every vertex must have degree 2")
        position = {v: i for i, v in enumerate(net.vertices)}
        start = net.vertices[0]
        nxt = min((w for w, _ in net.neighbors(start)), key=position.__getitem__)
        order = [start]
        prev, cur = start, nxt
        while cur != start:
            order.append(cur)
            a, b = (w for w, _ in net.neighbors(cur))
            prev, cur = cur, (b if a == prev else a)
        if len(order) != n:
            raise NotACycle("not an n-gon: graph is a union of several cycles")
        ranks = tuple(net.rank(order[i], order[(i + 1) % n]) for i in range(n))
        return cls(tuple(order), ranks)

    def to_network(self) -> TemporalNetwork:
        n = self.n
        return validate_network(
            self.order,
            [(self.order[i], self.order[(i + 1) % n], self.ranks[i]) for i in range(n)],
        )

    def maximal_runs(self) -> list[tuple[str, ...]]:
        """Maximal temporal paths; every temporal path of the cycle is a sub-run."""
        n, r, v = self.n, self.ranks, self.order
        runs = []
        # forward: edge i then i+1; a run starts at i when r[i-1] > r[i]
        for i in range(n):
            if r[i - 1] > r[i]:
                path = [v[i], v[(i + 1) % n]]
                j = i
                while r[(j + 1) % n] > r[j % n]:
                    j += 1
                    path.append(v[(j + 1) % n])
                runs.append(tuple(path))
        # backward: edge i then i-1; a run starts at i when r[i+1] > r[i]
        for i in range(n):
            if r[(i + 1) % n] > r[i]:
                path = [v[(i + 1) % n], v[i]]
                j = i
                while r[(j - 1) % n] > r[j % n]:
                    j -= 1
                    path.append(v[j % n])
                runs.append(tuple(path))
        return runs


def _try_ngon(net: TemporalNetwork) -> NGon | None:
    try:
        return NGon.from_network(net)
    except NotACycle:
        return None


def _as_network(x: TemporalNetwork | NGon) -> TemporalNetwork:
    return x.to_network() if isinstance(x, NGon) else x


def is_temporal_isomorphism(
    N: TemporalNetwork | NGon,
    M: TemporalNetwork | NGon,
    mapping: Mapping[str, str],
) -> bool:
    """Decide whether ``mapping`` is a temporal isomorphism from N to M.

    The map must be a bijection that preserves edges and carries every temporal
    path of N to a temporal path of M. For cycles only the maximal runs of N
    are checked; for anything else all temporal paths are enumerated.
    """
    net_n, net_m = _as_network(N), _as_network(M)
    if len(net_n) != len(net_m):
        raise SizeMismatch(f"|V(N)| = {len(net_n)} but |V(M)| = {len(net_m)}")
    if set(mapping) != set(net_n.vertices):
        return False
    if set(mapping.values()) != set(net_m.vertices):
        return False
    for u, v in net_n.edges:
        if not net_m.has_edge(mapping[u], mapping[v]):
            return False
    ngon = N if isinstance(N, NGon) else _try_ngon(net_n)
    paths = ngon.maximal_runs() if ngon is not None else temporal_paths(net_n)
    return all(is_temporal_path(net_m, [mapping[x] for x in p]) for p in paths)


def dihedral_vertex_maps(a: NGon, b: NGon) -> Iterator[dict[str, str]]:
    """The 2n graph isomorphisms between two cycles: rotations, then reflections."""
    n = a.n
    for k in range(n):
        yield {a.order[i]: b.order[(i + k) % n] for i in range(n)}
    for k in range(n):
        yield {a.order[i]: b.order[(k - i) % n] for i in range(n)}


def find_temporal_isomorphism(
    N: TemporalNetwork | NGon, M: TemporalNetwork | NGon
) -> dict[str, str] | None:
    """First temporal isomorphism from N to M in a fixed search order, or None."""
    net_n, net_m = _as_network(N), _as_network(M)
    if len(net_n) != len(net_m):
        return None
    a = N if isinstance(N, NGon) else _try_ngon(net_n)
    b = M if isinstance(M, NGon) else _try_ngon(net_m)
    if a is not None and b is not None:
        for phi in dihedral_vertex_maps(a, b):
            if is_temporal_isomorphism(a, net_m, phi):
                return phi
        return None
    if len(net_n) > GENERAL_SEARCH_CAP:
        raise TooLarge(
            f"general isomorphism search is capped at {GENERAL_SEARCH_CAP} vertices"
        )
    if len(net_n.edges) != len(net_m.edges):
        return None
    for image in permutations(net_m.vertices):
        phi = dict(zip(net_n.vertices, image))
        if is_temporal_isomorphism(net_n, net_m, phi):
            return phi
    return None
