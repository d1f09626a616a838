"""Stallings graphs: folded core graphs of finitely generated subgroups of free groups."""

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from grouplab.core.alphabet import Word, free_reduce
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import UnsupportedOracleError

Edges = Tuple[Dict[int, int], ...]


@dataclass(frozen=True)
class StallingsGraph:
    """Folded labelled graph with vertices 0..n-1 and basepoint 0.

    ``out[v][i]`` is the end of the x_i-edge leaving v, ``inc[v][i]`` the start
    of the x_i-edge entering v. A letter -i walks an x_i-edge backwards.
    """

    rank: int
    out: Edges
    inc: Edges
    base: int = 0

    @property
    def num_vertices(self) -> int:
        return len(self.out)

    def edges(self) -> List[Tuple[int, int, int]]:
        return [
            (u, label, v)
            for u in range(self.num_vertices)
            for label, v in sorted(self.out[u].items())
        ]

    def step(self, vertex: int, letter: int) -> Optional[int]:
        if letter > 0:
            return self.out[vertex].get(letter)
        return self.inc[vertex].get(-letter)

    def trace(self, vertex: int, word: Iterable[int]) -> Optional[int]:
        """End of the path reading ``word`` from ``vertex``, or None when it falls off."""
        current: Optional[int] = vertex
        for letter in word:
            if current is None:
                return None
            current = self.step(current, letter)
        return current

    def degree(self, vertex: int) -> int:
        return len(self.out[vertex]) + len(self.inc[vertex])

    def is_folded(self) -> bool:
        seen_in: Dict[Tuple[int, int], int] = {}
        for u, label, v in self.edges():
            if (v, label) in seen_in and seen_in[(v, label)] != u:
                return False
            seen_in[(v, label)] = u
        return True

    def is_core(self) -> bool:
        return all(self.degree(v) >= 2 for v in range(self.num_vertices) if v != self.base)

    def is_covering(self) -> bool:
        """Every vertex has an outgoing and an incoming edge of every label."""
        labels = range(1, self.rank + 1)
        return all(
            label in self.out[v] and label in self.inc[v]
            for v in range(self.num_vertices)
            for label in labels
        )

    def tree_paths(self) -> List[Word]:
        """Shortlex-least label from the basepoint to each vertex, along a BFS spanning tree."""
        paths: List[Optional[Word]] = [None] * self.num_vertices
        paths[self.base] = ()
        queue = deque([self.base])
        while queue:
            v = queue.popleft()
            for label in range(1, self.rank + 1):
                for letter in (label, -label):
                    nxt = self.step(v, letter)
                    if nxt is not None and paths[nxt] is None:
                        paths[nxt] = paths[v] + (letter,)  # type: ignore[operator]
                        queue.append(nxt)
        return [p if p is not None else () for p in paths]

    def basis(self) -> List[Word]:
        """Free basis of the subgroup: one loop per edge outside the spanning tree."""
        paths = self.tree_paths()
        tree_edges = set()
        for v, path in enumerate(paths):
            if path:
                letter = path[-1]
                parent = self.step(v, -letter)
                tree_edges.add((parent, letter, v) if letter > 0 else (v, -letter, parent))
        out: List[Word] = []
        for u, label, v in self.edges():
            if (u, label, v) in tree_edges:
                continue
            out.append(free_reduce(paths[u] + (label,) + tuple(-x for x in reversed(paths[v]))))
        return out


class GraphFolder:
    """Mutable graph that folds as edges are inserted (union-find on vertices)."""

    def __init__(self) -> None:
        self.parent: List[int] = []
        self.out: List[Dict[int, int]] = []
        self.inc: List[Dict[int, int]] = []
        self.pending: List[Tuple[int, int, int]] = []

    def add_vertex(self) -> int:
        self.parent.append(len(self.parent))
        self.out.append({})
        self.inc.append({})
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def add_path(self, start: int, word: Sequence[int], end: Optional[int] = None) -> int:
        """Add a path reading ``word`` from ``start``; close it at ``end`` when given."""
        current = start
        for i, letter in enumerate(word):
            last = i == len(word) - 1
            target = end if (last and end is not None) else self.add_vertex()
            if letter > 0:
                self.pending.append((current, letter, target))
            else:
                self.pending.append((target, -letter, current))
            current = target
        if not word and end is not None:
            self.merge(start, end)
        return current

    def merge(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        self.parent[b] = a
        for label, target in self.out[b].items():
            self.pending.append((a, label, target))
        for label, source in self.inc[b].items():
            self.pending.append((source, label, a))
        self.out[b] = {}
        self.inc[b] = {}

    def fold(self) -> None:
        while self.pending:
            u, label, v = self.pending.pop()
            u, v = self.find(u), self.find(v)
            w = self.out[u].get(label)
            if w is not None and self.find(w) != v:
                self.merge(w, v)
                self.pending.append((u, label, v))
                continue
            x = self.inc[v].get(label)
            if x is not None and self.find(x) != u:
                self.merge(x, u)
                self.pending.append((u, label, v))
                continue
            self.out[u][label] = v
            self.inc[v][label] = u

    def export(
        self, rank: int, start: int, keep: Sequence[int] = (), prune: bool = False
    ) -> Tuple[StallingsGraph, Dict[int, int]]:
        """Freeze into a StallingsGraph numbered by shortlex BFS from ``start``."""
        start = self.find(start)
        keep_roots = {self.find(k) for k in keep} | {start}
        roots = [v for v in range(len(self.parent)) if self.find(v) == v]
        out = {v: {lab: self.find(t) for lab, t in self.out[v].items()} for v in roots}
        inc = {v: {lab: self.find(s) for lab, s in self.inc[v].items()} for v in out}

        if prune:
            alive = set(out)
            stack = [v for v in alive if v not in keep_roots]
            while stack:
                v = stack.pop()
                if v not in alive or v in keep_roots:
                    continue
                if len(out[v]) + len(inc[v]) >= 2:
                    continue
                alive.discard(v)
                for label, t in list(out[v].items()):
                    inc[t].pop(label, None)
                    stack.append(t)
                for label, s in list(inc[v].items()):
                    out[s].pop(label, None)
                    stack.append(s)
                out[v], inc[v] = {}, {}

        numbering: Dict[int, int] = {start: 0}
        order = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for label in range(1, rank + 1):
                for nxt in (out[v].get(label), inc[v].get(label)):
                    if nxt is not None and nxt not in numbering:
                        numbering[nxt] = len(order)
                        order.append(nxt)
                        queue.append(nxt)

        new_out = tuple({lab: numbering[t] for lab, t in out[v].items()} for v in order)
        new_inc = tuple({lab: numbering[s] for lab, s in inc[v].items()} for v in order)
        mapping = {
            v: numbering[self.find(v)]
            for v in range(len(self.parent))
            if self.find(v) in numbering
        }
        return StallingsGraph(rank=rank, out=new_out, inc=new_inc), mapping


def trivial_subgroup(rank: int) -> StallingsGraph:
    """The graph of the trivial subgroup: one vertex, no edges."""
    return StallingsGraph(rank=rank, out=({},), inc=({},))


def _require_free(oracle: GroupOracle) -> None:
    if not oracle.is_free:
        raise UnsupportedOracleError(
            f"Stallings graphs need a free group, got {oracle.describe()}"
        )


def stallings_from_generators(oracle: GroupOracle, gens: Sequence[Word]) -> StallingsGraph:
    """Fold a bouquet of generator loops into the Stallings graph of H = <gens>."""
    _require_free(oracle)
    words = [w for w in (oracle.normal_form(g) for g in gens) if w]
    if not words:
        return trivial_subgroup(oracle.alphabet.rank)

    folder = GraphFolder()
    base = folder.add_vertex()
    for w in words:
        folder.add_path(base, w, end=base)
    folder.fold()
    graph, _ = folder.export(oracle.alphabet.rank, base, prune=True)
    return graph


def membership(graph: StallingsGraph, word: Word) -> bool:
    """True iff the reduced word reads a loop at the basepoint."""
    return graph.trace(graph.base, free_reduce(word)) == graph.base


def is_infinite_index(graph: StallingsGraph) -> bool:
    """True iff the graph is not a covering of the rose."""
    return not graph.is_covering()


def subgroup_index(graph: StallingsGraph) -> Optional[int]:
    """[F : H] when finite (the number of sheets), else None."""
    return graph.num_vertices if graph.is_covering() else None


def subgroup_intersects_cyclic(graph: StallingsGraph, u: Word) -> Optional[int]:
    """Least n >= 1 with u^n in H, or None when <u> meets H trivially."""
    u = free_reduce(u)
    if not u:
        return 1
    conj: List[int] = []
    core = list(u)
    while len(core) > 1 and core[0] == -core[-1]:
        conj.append(core[0])
        core = core[1:-1]
    start = graph.trace(graph.base, conj)
    if start is None:
        return None
    vertex: Optional[int] = start
    for n in range(1, graph.num_vertices + 1):
        vertex = graph.trace(vertex, core) if vertex is not None else None
        if vertex is None:
            return None
        if vertex == start:
            return n
    return None


def subgroup_elements(graph: StallingsGraph, radius: int) -> List[Word]:
    """Elements of H of length <= radius, shortlex ordered: reduced basepoint loops."""
    found: List[Word] = [()]
    frontier: List[Tuple[int, Word]] = [(graph.base, ())]
    for _ in range(radius):
        nxt: List[Tuple[int, Word]] = []
        for vertex, word in frontier:
            last = word[-1] if word else 0
            for label in range(1, graph.rank + 1):
                for letter in (label, -label):
                    if letter == -last:
                        continue
                    target = graph.step(vertex, letter)
                    if target is None:
                        continue
                    extended = word + (letter,)
                    nxt.append((target, extended))
                    if target == graph.base:
                        found.append(extended)
        frontier = nxt
    return found
