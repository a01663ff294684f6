"""Formal elements of a graph's path algebra.

A formal element is a finitely supported complex combination of paths — a
finite Fourier series Σ a_p L_p over the path semigroupoid.  Products follow
the semigroupoid: L_p·L_q = L_{pq} when the paths compose and vanish
otherwise.  This module also builds the truncated Fock basis (all paths up
to a length cap, ordered by length then declaration order) and the truncated
left regular representation on it.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import GraphParseError, LimitError
from .graphs import DirectedGraph, Path, compose, _levels
from .linalg import DEFAULT_TOLERANCES, ToleranceConfig
from .reps import FiniteRepresentation

#: Default ceiling on the truncated Fock basis size.
DEFAULT_MAX_BASIS = 20_000


class FormalElement:
    """A finitely supported map Path → coefficient over a fixed graph.

    Zero coefficients are never stored (exact-zero pruning only; floating
    arithmetic on coefficients is otherwise untouched).  Instances are
    immutable; arithmetic returns new elements.
    """

    __slots__ = ("graph", "_terms")

    def __init__(
        self,
        graph: DirectedGraph,
        terms: Mapping[Path, complex] | Iterable[tuple[Path, complex]] = (),
        *,
        validate: bool = True,
    ):
        self.graph = graph
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, complex] = {}
        for path, coeff in items:
            c = complex(coeff)
            if c == 0:
                continue
            if validate:
                graph.validate_path(path)
            acc[path] = acc.get(path, 0) + c
        self._terms = {p: c for p, c in acc.items() if c != 0}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, graph: DirectedGraph) -> "FormalElement":
        return cls(graph, ())

    @classmethod
    def single(cls, graph: DirectedGraph, path: Path, coeff: complex = 1.0) -> "FormalElement":
        return cls(graph, [(path, coeff)])

    # -- inspection -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Largest path length in the support (0 for the zero element)."""
        return max((p.length for p in self._terms), default=0)

    @property
    def support(self) -> tuple[Path, ...]:
        """Supported paths in deterministic (length, declaration) order."""
        return tuple(sorted(self._terms, key=self.graph.path_sort_key))

    def items(self) -> list[tuple[Path, complex]]:
        """Term list in deterministic (length, declaration) order."""
        return [(p, self._terms[p]) for p in self.support]

    def coefficient(self, p: Path) -> complex:
        return self._terms.get(p, 0j)

    # -- arithmetic -------------------------------------------------------------

    def _require_same_graph(self, other: "FormalElement"):
        if self.graph != other.graph:
            raise ValueError("formal elements live over different graphs")

    def __add__(self, other: "FormalElement") -> "FormalElement":
        if not isinstance(other, FormalElement):
            return NotImplemented
        self._require_same_graph(other)
        acc = dict(self._terms)
        for p, c in other._terms.items():
            acc[p] = acc.get(p, 0) + c
        return FormalElement(self.graph, acc, validate=False)

    def __sub__(self, other: "FormalElement") -> "FormalElement":
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self + (-1.0) * other

    def __neg__(self) -> "FormalElement":
        return (-1.0) * self

    def __mul__(self, other):
        if isinstance(other, FormalElement):
            self._require_same_graph(other)
            acc: dict[Path, complex] = {}
            for p, ap in self._terms.items():
                for q, bq in other._terms.items():
                    if q.target != p.source:
                        continue
                    r = compose(p, q)
                    acc[r] = acc.get(r, 0) + ap * bq
            return FormalElement(self.graph, acc, validate=False)
        if isinstance(other, numbers.Complex):
            return FormalElement(
                self.graph,
                {p: c * complex(other) for p, c in self._terms.items()},
                validate=False,
            )
        return NotImplemented

    def __rmul__(self, scalar):
        if isinstance(scalar, numbers.Complex):
            return self * scalar
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FormalElement)
            and self.graph == other.graph
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.graph, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "FormalElement<0>"
        bits = []
        for p, c in self.items()[:4]:
            label = p.source if p.is_vertex else ",".join(p.traversal)
            bits.append(f"{c:.3g}·[{label}]")
        more = "" if self.num_terms <= 4 else f" (+{self.num_terms - 4} terms)"
        return f"FormalElement<{' + '.join(bits)}{more}>"


# -- spec'd operations -----------------------------------------------------------


def multiply(a: FormalElement, b: FormalElement) -> FormalElement:
    """Semigroupoid convolution: (ab)_r = Σ over factorizations r = pq of
    a_p·b_q, with non-composable pairs contributing nothing."""
    return a * b


def cesaro_mean(a: FormalElement, k: int) -> FormalElement:
    """Weight coefficients by (1 − |p|/k) for |p| < k; drop the rest."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return FormalElement(
        a.graph,
        {p: c * (1 - p.length / k) for p, c in a._terms.items() if p.length < k},
        validate=False,
    )


def fourier_coefficient(a: FormalElement, w: Path) -> complex:
    """The coefficient a_w (0 when absent)."""
    return a.coefficient(w)


def degree(a: FormalElement) -> int:
    return a.degree


# -- truncated Fock space ------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedFockBasis:
    """All paths of length ≤ depth, ordered by length then declaration order.

    The basis contains every vertex and is closed under prefixes in the
    walking sense: removing the last walked edge of a member gives a member.
    """

    depth: int
    paths: tuple[Path, ...]

    @property
    def dimension(self) -> int:
        return len(self.paths)

    def index(self, p: Path) -> int:
        try:
            return self._index[p]  # type: ignore[attr-defined]
        except AttributeError:
            object.__setattr__(self, "_index", {q: i for i, q in enumerate(self.paths)})
            return self._index[p]  # type: ignore[attr-defined]

    def indices_of_length_at_most(self, m: int) -> list[int]:
        """Basis positions of paths with length ≤ m (the 'interior' of the
        truncation when m = depth − 1)."""
        return [i for i, p in enumerate(self.paths) if p.length <= m]


def truncated_fock_basis(
    g: DirectedGraph, depth: int, *, max_basis: int = DEFAULT_MAX_BASIS
) -> TruncatedFockBasis:
    """Enumerate all paths of length ≤ depth across the whole graph."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    collected: list[Path] = []
    for v in g.vertices:
        for level in _levels(g, v, depth, max_paths=max_basis + 1):
            collected.extend(level)
            if len(collected) > max_basis:
                raise LimitError(
                    f"truncated Fock basis would exceed {max_basis} paths at depth {depth}"
                )
    collected.sort(key=g.path_sort_key)
    return TruncatedFockBasis(depth, tuple(collected))


def truncated_left_regular(
    g: DirectedGraph,
    d: int,
    *,
    max_basis: int = DEFAULT_MAX_BASIS,
    tol: ToleranceConfig = DEFAULT_TOLERANCES,
) -> FiniteRepresentation:
    """Left multiplication on the span of {ξ_w : |w| ≤ d}.

    A vertex acts as the projection onto {ξ_w : r(w) = x}; an edge sends ξ_w
    to ξ_{ew} when the composition is defined and still fits the truncation,
    and to 0 otherwise.  The returned representation carries the basis on its
    ``fock_basis`` attribute.
    """
    basis = truncated_fock_basis(g, d, max_basis=max_basis)
    n = basis.dimension
    vertex_images = {}
    for x in g.vertices:
        m = np.zeros((n, n), dtype=np.complex128)
        for i, w in enumerate(basis.paths):
            if w.target == x:
                m[i, i] = 1.0
        vertex_images[x] = m
    edge_images = {}
    for e in g.edges:
        m = np.zeros((n, n), dtype=np.complex128)
        ep = g.edge_path(e.name)
        for i, w in enumerate(basis.paths):
            if w.target == e.source and w.length + 1 <= d:
                m[basis.index(compose(ep, w)), i] = 1.0
        edge_images[e.name] = m
    return FiniteRepresentation(
        graph=g,
        dimension=n,
        vertex_images=vertex_images,
        edge_images=edge_images,
        fock_basis=basis,
        tol=tol,
    )


# -- JSON encoding ------------------------------------------------------------------


def element_to_json(a: FormalElement) -> dict:
    """Stable JSON encoding; path arrays list edges in walking order."""
    terms = []
    for p, c in a.items():
        entry: dict = {"coeff": [float(c.real), float(c.imag)]}
        if p.is_vertex:
            entry["vertex"] = p.source
        else:
            entry["path"] = list(p.traversal)
        terms.append(entry)
    return {"terms": terms}


def element_from_json(g: DirectedGraph, obj) -> FormalElement:
    """Inverse of element_to_json; duplicate terms accumulate."""
    if not isinstance(obj, dict) or "terms" not in obj or not isinstance(obj["terms"], list):
        raise GraphParseError("element JSON must be an object with a 'terms' array")
    pairs: list[tuple[Path, complex]] = []
    for i, entry in enumerate(obj["terms"]):
        if not isinstance(entry, dict):
            raise GraphParseError(f"element term {i} is not an object")
        try:
            re, im = entry["coeff"]
            coeff = complex(float(re), float(im))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphParseError(f"element term {i} has a malformed coefficient") from exc
        if ("vertex" in entry) == ("path" in entry):
            raise GraphParseError(
                f"element term {i} must carry exactly one of 'vertex' or 'path'"
            )
        if "vertex" in entry:
            path = g.vertex_path(str(entry["vertex"]))
        else:
            names = entry["path"]
            if not isinstance(names, list) or not names:
                raise GraphParseError(f"element term {i} has a malformed path array")
            path = g.path_from_traversal([str(n) for n in names])
        pairs.append((path, coeff))
    return FormalElement(g, pairs)
