"""Structural classification of finite directed multigraphs.

Each decision procedure here answers one representation-theoretic question
about the graph's path algebra purely combinatorially:

* semisimplicity (equivalently: every edge lies on a cycle, equivalently the
  radical has no generators),
* existence of a separating family of triangular representations (every
  cycle-supporting vertex carries a loop),
* existence of a faithful irreducible representation (strong transitivity),
* existence of a faithful nest representation (three conditions on the
  condensation),
* which naturally ordered nest case, if any, the graph matches at finite
  size.

``classify`` bundles everything into one deterministic report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    ComponentClass,
    DirectedGraph,
    condensation,
    is_transitive_in_components,
)


def is_strongly_transitive(g: DirectedGraph) -> bool:
    """A non-trivial transitive graph that is not a single cycle.

    One vertex with one loop is a cycle graph (not strongly transitive);
    one vertex with two loops is strongly transitive.
    """
    if not g.vertices:
        return False
    cond = condensation(g)
    return (
        len(cond.components) == 1
        and cond.components[0].component_class is ComponentClass.STRONGLY_TRANSITIVE
    )


def ut_separating_condition(g: DirectedGraph) -> bool:
    """Every vertex that supports a cycle also supports a loop edge.

    This is the graph condition under which triangular representations
    separate the path algebra; it holds vacuously for acyclic graphs.
    """
    cond = condensation(g)
    for comp in cond.components:
        if comp.component_class is ComponentClass.TRIVIAL:
            continue
        for v in comp.vertices:
            if not g.loops_at(v):
                return False
    return True


@dataclass(frozen=True)
class FaithfulNestConditions:
    """Breakdown of the three conditions for a faithful nest representation.

    1. the condensation's reachability relation is a total order,
    2. no component is a single cycle,
    3. the trivial components form an interval of that order and their
       induced subgraph is a simple directed path with exactly one edge
       between consecutive members (vacuously true with no trivial
       components; ``c3_vacuous`` records that).
    """

    quotient_totally_ordered: bool
    no_cycle_component: bool
    trivial_chain_interval: bool
    c3_vacuous: bool

    @property
    def satisfied(self) -> bool:
        return (
            self.quotient_totally_ordered
            and self.no_cycle_component
            and self.trivial_chain_interval
        )

    def to_json(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "conditions": {
                "quotient_totally_ordered": self.quotient_totally_ordered,
                "no_cycle_component": self.no_cycle_component,
                "trivial_chain_interval": self.trivial_chain_interval,
            },
            "c3_vacuous": self.c3_vacuous,
        }


def check_faithful_nest_conditions(g: DirectedGraph) -> FaithfulNestConditions:
    cond = condensation(g)
    m = len(cond.components)

    c1 = all(
        cond.component_reaches(i, j) or cond.component_reaches(j, i)
        for i in range(m)
        for j in range(i + 1, m)
    )
    c2 = all(
        comp.component_class is not ComponentClass.CYCLE for comp in cond.components
    )

    trivial = [c for c in cond.components if c.is_trivial]
    if not trivial:
        return FaithfulNestConditions(c1, c2, True, c3_vacuous=True)

    ok = True
    idxs = [c.index for c in trivial]
    # In a genuine total order the i-th member reaches exactly the members
    # after it; sorting by out-reach count descending linearizes, and the
    # consecutive checks below fail whenever the order was not total.
    order = sorted(
        idxs,
        key=lambda i: sum(1 for j in idxs if cond.component_reaches(i, j)),
        reverse=True,
    )
    for a, b in zip(order, order[1:]):
        if not cond.component_reaches(a, b):
            ok = False
            break

    if ok:
        vertex_of = {c.index: c.vertices[0] for c in trivial}
        chain = [vertex_of[i] for i in order]
        chain_set = set(chain)
        expected = list(zip(chain, chain[1:]))
        seen: list[tuple[str, str]] = []
        for e in g.edges:
            if e.source in chain_set and e.target in chain_set:
                seen.append((e.source, e.target))
        ok = sorted(seen) == sorted(expected)

    if ok:
        for comp in cond.components:
            if comp.is_trivial:
                continue
            before = any(cond.component_reaches(t, comp.index) for t in idxs)
            after = any(cond.component_reaches(comp.index, t) for t in idxs)
            if before and after:
                ok = False
                break

    return FaithfulNestConditions(c1, c2, ok, c3_vacuous=False)


@dataclass(frozen=True)
class NNestResult:
    """Which naturally ordered nest case the graph matches.

    ``case`` is "One" (strongly transitive with loops everywhere), "Three"
    (a looped strongly transitive core feeding a simple outgoing chain), or
    "None".  ``requires_infinite`` marks the finite graphs that are exactly
    a bare chain: at finite size no case applies, but they are prefixes of
    the infinite-chain pattern, which needs infinitely many vertices.
    """

    case: str
    requires_infinite: bool
    detail: str

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "requires_infinite": self.requires_infinite,
            "detail": self.detail,
        }


def _chain_order(g: DirectedGraph, chain_set: set[str]) -> list[str] | None:
    """If the induced subgraph on ``chain_set`` is a simple directed path
    covering it (one edge between consecutive members, nothing else), return
    the vertices in flow order; otherwise None."""
    internal = [
        e for e in g.edges if e.source in chain_set and e.target in chain_set
    ]
    n = len(chain_set)
    if len(internal) != n - 1:
        return None
    out_deg = {v: 0 for v in chain_set}
    in_deg = {v: 0 for v in chain_set}
    nxt: dict[str, str] = {}
    for e in internal:
        out_deg[e.source] += 1
        in_deg[e.target] += 1
        nxt[e.source] = e.target
    if any(d > 1 for d in out_deg.values()) or any(d > 1 for d in in_deg.values()):
        return None
    heads = [v for v in chain_set if in_deg[v] == 0]
    if len(heads) != 1:
        return None
    walk = [heads[0]]
    while walk[-1] in nxt:
        walk.append(nxt[walk[-1]])
    if len(walk) != n:
        return None
    return walk


def check_n_nest_case(g: DirectedGraph) -> NNestResult:
    cond = condensation(g)

    if is_strongly_transitive(g) and all(g.loops_at(x) for x in g.vertices):
        return NNestResult(
            "One", False, "strongly transitive with a loop at every vertex"
        )

    nontrivial = [c for c in cond.components if not c.is_trivial]
    trivial = [c for c in cond.components if c.is_trivial]

    if (
        len(nontrivial) == 1
        and nontrivial[0].component_class is ComponentClass.STRONGLY_TRANSITIVE
        and trivial
        and all(g.loops_at(x) for x in nontrivial[0].vertices)
    ):
        base = set(nontrivial[0].vertices)
        chain_set = {c.vertices[0] for c in trivial}
        if not any(e.source in chain_set and e.target in base for e in g.edges):
            walk = _chain_order(g, chain_set)
            if walk is not None:
                head = walk[0]
                if any(e.source in base and e.target == head for e in g.edges):
                    return NNestResult(
                        "Three",
                        False,
                        "looped strongly transitive core feeding a simple "
                        f"chain of {len(walk)} vertices",
                    )

    if not nontrivial:
        walk = _chain_order(g, set(g.vertices))
        if walk is not None:
            return NNestResult(
                "None",
                True,
                "finite bare chain: a prefix of the infinite-chain pattern, "
                "which needs infinitely many vertices",
            )

    return NNestResult("None", False, "no finite case pattern matches")


@dataclass(frozen=True)
class ClassificationReport:
    """All classification verdicts for one graph, with provenance slugs."""

    graph_stats: dict
    semisimple: bool
    strongly_semisimple: bool
    radical_generators: tuple[str, ...]
    ut_separating: bool
    faithful_irreducible: bool
    faithful_nest: FaithfulNestConditions
    n_nest: NNestResult
    theorems: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "graph": self.graph_stats,
            "semisimple": self.semisimple,
            "strongly_semisimple": self.strongly_semisimple,
            "radical_generators": list(self.radical_generators),
            "ut_separating": self.ut_separating,
            "faithful_irreducible": self.faithful_irreducible,
            "faithful_nest": self.faithful_nest.to_json(),
            "n_nest": self.n_nest.to_json(),
            "theorems": [dict(t) for t in self.theorems],
        }


_THEOREM_SLUGS = (
    {"field": "semisimple", "theorem": "semisimple-iff-transitive-in-components"},
    {"field": "strongly_semisimple", "theorem": "radical-equals-strong-radical-at-finite-size"},
    {"field": "radical_generators", "theorem": "radical-generated-by-cycle-free-edges"},
    {"field": "ut_separating", "theorem": "triangular-separation-iff-loops-at-cycle-vertices"},
    {"field": "faithful_irreducible", "theorem": "faithful-irreducible-iff-strongly-transitive"},
    {"field": "faithful_nest", "theorem": "faithful-nest-three-condensation-conditions"},
    {"field": "n_nest", "theorem": "naturally-ordered-nest-case-analysis"},
)


def classify(g: DirectedGraph) -> ClassificationReport:
    """Run every decision procedure and bundle the verdicts."""
    cond = condensation(g)
    stats = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "sinks": list(g.sinks()),
        "sources": list(g.sources()),
        "components": [
            {
                "vertices": list(c.vertices),
                "class": c.component_class.value,
                "loop_multiplicity": c.loop_multiplicity,
            }
            for c in cond.components
        ],
    }
    generators = tuple(e.name for e in cond.quotient_edges)
    return ClassificationReport(
        graph_stats=stats,
        semisimple=is_transitive_in_components(g),
        strongly_semisimple=not generators,
        radical_generators=generators,
        ut_separating=ut_separating_condition(g),
        faithful_irreducible=is_strongly_transitive(g),
        faithful_nest=check_faithful_nest_conditions(g),
        n_nest=check_n_nest_case(g),
        theorems=_THEOREM_SLUGS,
    )
