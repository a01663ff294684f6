"""Directed multigraphs and their path semigroupoid.

A finite directed multigraph (loops and parallel edges allowed) is the base
object of the whole package.  Paths compose right-to-left, the way operator
products do: in ``p = e_k …​ e_2 e_1`` the edge ``e_1`` is traversed first, and
the product ``pq`` is defined when ``r(q) = s(p)``.  Vertices are paths of
length zero and act as local units.  A *cycle* is any path whose source and
target agree (so every vertex is a trivial cycle; most cycle machinery below
requires length ≥ 1 and says so).

This module provides the graph/path data model, a line-oriented text format,
strongly connected components with a classified condensation, primitive-root
extraction for cycles, the component-wise path decomposition, cycle
completion, and deterministic path enumeration.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    GraphParseError,
    LimitError,
    PathError,
    PreconditionError,
)

#: Default ceiling on the ``max_len`` argument of the enumeration helpers.
DEFAULT_MAX_LEN_LIMIT = 12

#: Default ceiling on the number of paths an enumeration may produce.
DEFAULT_MAX_PATHS = 200_000


@dataclass(frozen=True)
class Edge:
    """A directed edge: ``source`` and ``target`` are vertex names."""

    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path in the semigroupoid of a fixed graph.

    ``edges`` holds edge names in *composition order*: ``edges[0]`` is the
    last edge traversed (the leftmost factor), matching the right-to-left
    product convention.  ``traversal`` gives the walking order.  A path of
    length zero has ``edges == ()`` and ``source == target`` (a vertex).
    """

    source: str
    target: str
    edges: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    @property
    def is_cycle(self) -> bool:
        """True when source and target agree (vertices count, trivially)."""
        return self.source == self.target

    @property
    def traversal(self) -> tuple[str, ...]:
        """Edge names in walking order (first traversed first)."""
        return tuple(reversed(self.edges))

    def __repr__(self) -> str:
        if self.is_vertex:
            return f"Path<{self.source}>"
        word = ",".join(self.traversal)
        return f"Path<{self.source}-[{word}]->{self.target}>"


class ComponentClass(enum.Enum):
    """Structural class of a strongly connected component."""

    TRIVIAL = "Trivial"
    CYCLE = "Cycle"
    STRONGLY_TRANSITIVE = "StronglyTransitive"


#: Number of primitive cycles through a fixed vertex of the component,
#: as a class rather than a count.
LOOP_MULTIPLICITY = {
    ComponentClass.TRIVIAL: "Zero",
    ComponentClass.CYCLE: "One",
    ComponentClass.STRONGLY_TRANSITIVE: "Infinite",
}


@dataclass(frozen=True)
class Component:
    """One strongly connected component with its classification."""

    index: int
    vertices: tuple[str, ...]
    internal_edges: tuple[str, ...]
    component_class: ComponentClass

    @property
    def loop_multiplicity(self) -> str:
        return LOOP_MULTIPLICITY[self.component_class]

    @property
    def is_trivial(self) -> bool:
        return self.component_class is ComponentClass.TRIVIAL


@dataclass(frozen=True)
class Condensation:
    """SCC partition of a graph plus the acyclic quotient structure.

    ``components`` are ordered by first-declared member vertex.
    ``quotient_edges`` are the original edges whose endpoints lie in distinct
    components, in declaration order.
    """

    components: tuple[Component, ...]
    vertex_component: dict[str, int] = field(compare=False)
    quotient_edges: tuple[Edge, ...] = ()
    _reach: frozenset[tuple[int, int]] = field(default=frozenset(), repr=False, compare=False)

    def component_of(self, vertex: str) -> Component:
        return self.components[self.vertex_component[vertex]]

    def component_reaches(self, i: int, j: int) -> bool:
        """Reflexive reachability between component indices in the quotient."""
        return i == j or (i, j) in self._reach

    @property
    def crossing_edge_names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.quotient_edges)


@dataclass(frozen=True)
class PathDecomposition:
    """Factorization of a path into component-internal segments joined by
    crossing edges.

    ``segments[i]`` lies inside a single strongly connected component (or is
    a vertex), ``crossing[i]`` is the edge walked between ``segments[i]`` and
    ``segments[i+1]``; segments are listed in walking order, so there is
    always one more segment than crossing edge and the visited components are
    pairwise distinct.
    """

    segments: tuple[Path, ...]
    crossing: tuple[str, ...]

    def recompose(self, g: "DirectedGraph") -> Path:
        """Concatenate the decomposition back into the original path."""
        out = self.segments[0]
        for i, edge_name in enumerate(self.crossing):
            out = compose(g.edge_path(edge_name), out)
            out = compose(self.segments[i + 1], out)
        return out


class DirectedGraph:
    """A finite directed multigraph with ordered, uniquely named parts.

    Vertex and edge declaration order is significant: it fixes basis orders,
    enumeration orders and tie-breaks throughout the package.  Instances are
    immutable after construction.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.edges: tuple[Edge, ...] = tuple(Edge(n, s, t) for (n, s, t) in edges)

        self._vertex_index: dict[str, int] = {}
        for i, v in enumerate(self.vertices):
            if not v:
                raise GraphParseError("empty vertex name")
            if v in self._vertex_index:
                raise GraphParseError(f"duplicate vertex {v!r}")
            self._vertex_index[v] = i

        self._edge_index: dict[str, int] = {}
        self._out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        self._in: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            if not e.name:
                raise GraphParseError("empty edge name")
            if e.name in self._edge_index:
                raise GraphParseError(f"duplicate edge {e.name!r}")
            for endpoint in (e.source, e.target):
                if endpoint not in self._vertex_index:
                    raise GraphParseError(
                        f"edge {e.name!r} references undeclared vertex {endpoint!r}"
                    )
            self._edge_index[e.name] = i
            self._out[e.source].append(e)
            self._in[e.target].append(e)

    # -- basic lookups ----------------------------------------------------

    def vertex_index(self, v: str) -> int:
        try:
            return self._vertex_index[v]
        except KeyError:
            raise PathError(f"unknown vertex {v!r}") from None

    def edge(self, name: str) -> Edge:
        try:
            return self.edges[self._edge_index[name]]
        except KeyError:
            raise PathError(f"unknown edge {name!r}") from None

    def edge_index(self, name: str) -> int:
        try:
            return self._edge_index[name]
        except KeyError:
            raise PathError(f"unknown edge {name!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return tuple(self._out[v])

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return tuple(self._in[v])

    def loops_at(self, v: str) -> tuple[Edge, ...]:
        return tuple(e for e in self._out[v] if e.target == v)

    def sinks(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self._out[v])

    def sources(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self._in[v])

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.vertices, self.edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DirectedGraph) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"DirectedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    # -- path construction --------------------------------------------------

    def vertex_path(self, v: str) -> Path:
        self.vertex_index(v)
        return Path(v, v, ())

    def edge_path(self, name: str) -> Path:
        e = self.edge(name)
        return Path(e.source, e.target, (name,))

    def path_from_traversal(self, edge_names: Sequence[str]) -> Path:
        """Build a path from edge names in walking order, validating that
        consecutive edges compose."""
        if not edge_names:
            raise PathError("a positive-length path needs at least one edge; "
                            "use vertex_path for length zero")
        walked = [self.edge(n) for n in edge_names]
        for a, b in zip(walked, walked[1:]):
            if a.target != b.source:
                raise PathError(
                    f"edges {a.name!r} and {b.name!r} do not compose: "
                    f"{a.name!r} ends at {a.target!r} but {b.name!r} starts at {b.source!r}"
                )
        return Path(walked[0].source, walked[-1].target, tuple(reversed(edge_names)))

    def path_from_composition(self, edge_names: Sequence[str]) -> Path:
        """Build a path from edge names in product order (first name = last
        edge traversed)."""
        return self.path_from_traversal(tuple(reversed(tuple(edge_names))))

    def validate_path(self, p: Path) -> Path:
        """Check a path against this graph; returns it unchanged."""
        if p.is_vertex:
            self.vertex_index(p.source)
            if p.source != p.target:
                raise PathError(f"vertex path with mismatched endpoints: {p!r}")
            return p
        rebuilt = self.path_from_traversal(p.traversal)
        if (rebuilt.source, rebuilt.target) != (p.source, p.target):
            raise PathError(f"path endpoints disagree with its edges: {p!r}")
        return p

    def path_sort_key(self, p: Path) -> tuple[int, tuple[int, ...]]:
        """Deterministic path order: by length, then lexicographically by
        edge declaration index in walking order.  Length-0 paths compare by
        vertex declaration index."""
        if p.is_vertex:
            return (0, (self.vertex_index(p.source),))
        return (p.length, tuple(self._edge_index[n] for n in p.traversal))

    # -- graph transforms ----------------------------------------------------

    def transpose(self) -> "DirectedGraph":
        """Reverse every edge; vertex/edge names and order are kept."""
        return DirectedGraph(self.vertices, [(e.name, e.target, e.source) for e in self.edges])

    def add_tails(self, depth: int) -> "DirectedGraph":
        """Append a length-``depth`` chain of fresh vertices to every sink,
        so that (for depth ≥ 1) only the chain tips remain sinks."""
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        taken_v = set(self.vertices)
        taken_e = {e.name for e in self.edges}
        vertices = list(self.vertices)
        edges = [(e.name, e.source, e.target) for e in self.edges]

        def fresh(base: str, taken: set[str]) -> str:
            name = base
            while name in taken:
                name += "_"
            taken.add(name)
            return name

        for sink in self.sinks():
            prev = sink
            for i in range(1, depth + 1):
                v = fresh(f"{sink}_t{i}", taken_v)
                e = fresh(f"{sink}_te{i}", taken_e)
                vertices.append(v)
                edges.append((e, prev, v))
                prev = v
        return DirectedGraph(vertices, edges)


# -- composition -------------------------------------------------------------


def compose(p: Path, q: Path) -> Path:
    """Product ``pq``: walk ``q`` first, then ``p``; defined when the target
    of ``q`` is the source of ``p``.  Vertex paths act as units."""
    if q.target != p.source:
        raise PathError(
            f"paths do not compose: second factor ends at {q.target!r}, "
            f"first factor starts at {p.source!r}"
        )
    return Path(q.source, p.target, p.edges + q.edges)


def power(u: Path, n: int) -> Path:
    """n-th power of a cycle (n ≥ 0; the 0-th power is the base vertex)."""
    if not u.is_cycle:
        raise PathError(f"cannot take powers of a non-cycle {u!r}")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return Path(u.source, u.target, u.edges * n)


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> DirectedGraph:
    """Parse the line-oriented graph format.

    Lines are ``vertex <name>``, ``edge <name> <src> <dst>``, blank, or
    comments starting with ``#`` (trailing comments allowed).  Errors carry
    1-based line numbers.
    """
    vertices: list[str] = []
    edge_rows: list[tuple[int, str, str, str]] = []
    seen_v: dict[str, int] = {}
    seen_e: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex" and len(parts) == 2:
            name = parts[1]
            if name in seen_v:
                raise GraphParseError(
                    f"duplicate vertex {name!r} (first declared on line {seen_v[name]})",
                    line=lineno,
                )
            seen_v[name] = lineno
            vertices.append(name)
        elif parts[0] == "edge" and len(parts) == 4:
            name = parts[1]
            if name in seen_e:
                raise GraphParseError(
                    f"duplicate edge {name!r} (first declared on line {seen_e[name]})",
                    line=lineno,
                )
            seen_e[name] = lineno
            edge_rows.append((lineno, name, parts[2], parts[3]))
        else:
            raise GraphParseError(
                f"expected 'vertex <name>' or 'edge <name> <src> <dst>', got {line!r}",
                line=lineno,
            )
    for lineno, name, src, dst in edge_rows:
        for endpoint in (src, dst):
            if endpoint not in seen_v:
                raise GraphParseError(
                    f"edge {name!r} references undeclared vertex {endpoint!r}",
                    line=lineno,
                )
    return DirectedGraph(vertices, [(n, s, t) for (_, n, s, t) in edge_rows])


def format_graph(g: DirectedGraph) -> str:
    """Serialize a graph back to the text format (inverse of parse_graph)."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.name} {e.source} {e.target}" for e in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: DirectedGraph) -> dict:
    """JSON-ready structure: vertex list plus [name, source, target] edges."""
    return {
        "vertices": list(g.vertices),
        "edges": [[e.name, e.source, e.target] for e in g.edges],
    }


def graph_from_json(obj: object) -> DirectedGraph:
    """Inverse of graph_to_json; malformed input raises GraphParseError."""
    if not isinstance(obj, dict):
        raise GraphParseError("graph JSON must be an object")
    vertices = obj.get("vertices")
    edges = obj.get("edges")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphParseError("graph JSON needs a 'vertices' list of strings")
    if not isinstance(edges, list):
        raise GraphParseError("graph JSON needs an 'edges' list")
    triples = []
    for item in edges:
        if (
            not isinstance(item, list)
            or len(item) != 3
            or not all(isinstance(s, str) for s in item)
        ):
            raise GraphParseError(
                "each edge must be a [name, source, target] string triple"
            )
        triples.append(tuple(item))
    return DirectedGraph(vertices, triples)


# -- strongly connected structure ---------------------------------------------


def condensation(g: DirectedGraph) -> Condensation:
    """Strongly connected components, classified, with the acyclic quotient.

    Components are ordered by their first-declared vertex; the classification
    per component is Trivial (one vertex, no loop), Cycle (a single directed
    cycle), or StronglyTransitive (everything else).
    """
    n = len(g.vertices)
    index_of: dict[str, int] = {v: i for i, v in enumerate(g.vertices)}
    order = [0] * n          # discovery index, 0 = unvisited (we offset by 1)
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp_id = [-1] * n
    counter = 1
    raw_components: list[list[int]] = []

    # Tarjan, iterative.  Work items are (vertex, iterator over successors).
    for root in range(n):
        if order[root]:
            continue
        work: list[tuple[int, Iterator[int]]] = []
        order[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work.append((root, iter([index_of[e.target] for e in g.out_edges(g.vertices[root])])))
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if not order[w]:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter([index_of[e.target] for e in g.out_edges(g.vertices[w])])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], order[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == order[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    members.append(w)
                    if w == v:
                        break
                raw_components.append(members)

    # Deterministic order: by smallest declaration index of a member vertex.
    raw_components.sort(key=min)
    vertex_component: dict[str, int] = {}
    for ci, members in enumerate(raw_components):
        for vi in members:
            comp_id[vi] = ci
            vertex_component[g.vertices[vi]] = ci

    member_names = [
        tuple(g.vertices[vi] for vi in sorted(members)) for members in raw_components
    ]
    internal: list[list[str]] = [[] for _ in raw_components]
    crossing: list[Edge] = []
    for e in g.edges:
        cs = vertex_component[e.source]
        ct = vertex_component[e.target]
        if cs == ct:
            internal[cs].append(e.name)
        else:
            crossing.append(e)

    components = []
    for ci, verts in enumerate(member_names):
        internal_edges = tuple(internal[ci])
        if len(verts) == 1 and not internal_edges:
            cls = ComponentClass.TRIVIAL
        else:
            out_deg = {v: 0 for v in verts}
            in_deg = {v: 0 for v in verts}
            for name in internal_edges:
                e = g.edge(name)
                out_deg[e.source] += 1
                in_deg[e.target] += 1
            if all(out_deg[v] == 1 and in_deg[v] == 1 for v in verts):
                cls = ComponentClass.CYCLE
            else:
                cls = ComponentClass.STRONGLY_TRANSITIVE
        components.append(Component(ci, verts, internal_edges, cls))

    # Transitive closure of the quotient DAG (small: one bitset per component).
    m = len(components)
    succ: list[set[int]] = [set() for _ in range(m)]
    for e in crossing:
        succ[vertex_component[e.source]].add(vertex_component[e.target])
    reach: list[set[int]] = [set() for _ in range(m)]
    # Process in reverse topological order obtained by repeated relaxation
    # (m is small; a simple fixpoint is clear and fast enough).
    changed = True
    while changed:
        changed = False
        for i in range(m):
            before = len(reach[i])
            for j in succ[i]:
                reach[i].add(j)
                reach[i] |= reach[j]
            if len(reach[i]) != before:
                changed = True
    pairs = frozenset((i, j) for i in range(m) for j in reach[i])

    return Condensation(
        components=tuple(components),
        vertex_component=vertex_component,
        quotient_edges=tuple(crossing),
        _reach=pairs,
    )


def is_transitive_in_components(g: DirectedGraph) -> bool:
    """True when every edge has both endpoints in the same strongly connected
    component — equivalently, every edge lies on a cycle."""
    return not condensation(g).quotient_edges


def reaches(g: DirectedGraph, x: str, y: str) -> bool:
    """Reflexive reachability: is there a (possibly trivial) path x → y?"""
    g.vertex_index(x)
    g.vertex_index(y)
    if x == y:
        return True
    seen = {x}
    frontier = deque([x])
    while frontier:
        v = frontier.popleft()
        for e in g.out_edges(v):
            if e.target == y:
                return True
            if e.target not in seen:
                seen.add(e.target)
                frontier.append(e.target)
    return False


# -- cycles --------------------------------------------------------------------


def primitive_root(u: Path) -> tuple[Path, int]:
    """Express a cycle as ``u = v**p`` with ``v`` primitive (not itself a
    nontrivial power); returns ``(v, p)`` with ``p`` maximal.

    Works on the edge word alone: the smallest period of the word under
    cyclic rotation is the primitive root's length.
    """
    if not u.is_cycle or u.length < 1:
        raise PreconditionError(f"primitive_root needs a cycle of length ≥ 1, got {u!r}")
    word = u.traversal
    k = len(word)
    for d in range(1, k + 1):
        if k % d:
            continue
        if all(word[i] == word[i % d] for i in range(k)):
            root = Path(u.source, u.target, tuple(reversed(word[:d])))
            return root, k // d
    raise AssertionError("unreachable: d = k always matches")


def _bfs_shortest_lex(g: DirectedGraph, start: str, goal: str) -> list[str] | None:
    """Shortest path ``start → goal`` as a traversal-order edge-name list,
    breaking ties lexicographically by edge declaration order; None when
    unreachable.  A trivial path (start == goal) is the empty list."""
    if start == goal:
        return []
    parent: dict[str, tuple[str, str]] = {}  # vertex -> (previous vertex, edge name)
    seen = {start}
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        for e in g.out_edges(v):
            if e.target in seen:
                continue
            seen.add(e.target)
            parent[e.target] = (v, e.name)
            if e.target == goal:
                names: list[str] = []
                cur = goal
                while cur != start:
                    prev, name = parent[cur]
                    names.append(name)
                    cur = prev
                names.reverse()
                return names
            frontier.append(e.target)
    return None


def complete_to_cycle(g: DirectedGraph, w: Path) -> Path:
    """A shortest path ``v`` from the target of ``w`` back to its source, so
    that ``vw`` is a cycle; ties broken by edge declaration order.  Requires
    both endpoints in one strongly connected component."""
    g.validate_path(w)
    names = _bfs_shortest_lex(g, w.target, w.source)
    if names is None:
        raise PreconditionError(
            f"no completion to a cycle: {w.target!r} cannot reach {w.source!r} "
            "(endpoints lie in distinct strongly connected components)"
        )
    if not names:
        return g.vertex_path(w.source)
    return g.path_from_traversal(names)


def decompose_path(g: DirectedGraph, w: Path) -> PathDecomposition:
    """Factor ``w`` into maximal component-internal segments joined by
    component-crossing edges; segments in walking order, one more segment
    than crossing edge (vertex segments fill the gaps)."""
    g.validate_path(w)
    cond = condensation(g)
    comp = cond.vertex_component
    segments: list[Path] = []
    crossing: list[str] = []
    current: list[str] = []     # traversal-order edge names of the open segment
    seg_start = w.source
    cursor = w.source
    for name in w.traversal:
        e = g.edge(name)
        if comp[e.source] == comp[e.target]:
            current.append(name)
        else:
            segments.append(
                g.path_from_traversal(current) if current else g.vertex_path(seg_start)
            )
            crossing.append(name)
            current = []
            seg_start = e.target
        cursor = e.target
    segments.append(g.path_from_traversal(current) if current else g.vertex_path(seg_start))
    assert cursor == w.target or w.is_vertex
    return PathDecomposition(tuple(segments), tuple(crossing))


# -- enumeration -----------------------------------------------------------------


def _levels(g: DirectedGraph, start: str, max_len: int, max_paths: int) -> Iterator[list[Path]]:
    """Yield all paths out of ``start`` grouped by length, each level in
    lexicographic (declaration-order) order."""
    produced = 1
    level = [g.vertex_path(start)]
    yield level
    for _ in range(max_len):
        nxt: list[Path] = []
        for p in level:
            for e in g.out_edges(p.target):
                nxt.append(Path(p.source, e.target, (e.name,) + p.edges))
                produced += 1
                if produced > max_paths:
                    raise LimitError(
                        f"path enumeration exceeded {max_paths} paths; "
                        "restrict max_len or the graph"
                    )
        if not nxt:
            return
        yield nxt
        level = nxt


def enumerate_paths(
    g: DirectedGraph,
    source: str,
    target: str,
    max_len: int,
    *,
    max_len_limit: int = DEFAULT_MAX_LEN_LIMIT,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> list[Path]:
    """All paths ``source → target`` of length ≤ ``max_len``, ordered by
    length then lexicographically by edge declaration order.  The length-0
    vertex path is included when source == target."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if max_len > max_len_limit:
        raise LimitError(f"max_len {max_len} exceeds the configured limit {max_len_limit}")
    g.vertex_index(source)
    g.vertex_index(target)
    out: list[Path] = []
    for level in _levels(g, source, max_len, max_paths):
        out.extend(p for p in level if p.target == target)
    return out


def enumerate_cycles_through(
    g: DirectedGraph,
    x: str,
    max_len: int,
    *,
    max_len_limit: int = DEFAULT_MAX_LEN_LIMIT,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> list[Path]:
    """All cycles of length 1..max_len based at ``x``, in enumeration order."""
    return [
        p
        for p in enumerate_paths(
            g, x, x, max_len, max_len_limit=max_len_limit, max_paths=max_paths
        )
        if p.length >= 1
    ]


def all_cycles(
    g: DirectedGraph, max_len: int, *, max_len_limit: int = DEFAULT_MAX_LEN_LIMIT
) -> list[Path]:
    """All based cycles of length 1..max_len, grouped by base vertex in
    declaration order.  Rotations of one geometric cycle are distinct paths
    and are all listed."""
    out: list[Path] = []
    for x in g.vertices:
        out.extend(enumerate_cycles_through(g, x, max_len, max_len_limit=max_len_limit))
    return out
