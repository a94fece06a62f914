"""Chromatic diagrams as abstract multigraphs with boundary legs.

An order-n diagram lives in a rectangle with n marked points on the bottom
edge and n on the top, labeled 1..2n counterclockwise from the bottom left
(see ncpartition.boundary_label).  Each boundary point is 1-valent.  Inner
vertices and edges are unconstrained; loops are allowed on inner vertices.

No planar embedding is stored.  Diagrams are abstract incidence data; for
the diagrams the basis bijection works with (no inner edges, inner valency
at least 3) the incidence data determines the diagram up to relabeling, and
equality goes through the canonical adjacency matrix.

Endpoints are encoded as ("b", label) for boundary points and ("v", id) for
inner vertices.
"""

from __future__ import annotations

from .errors import DiagramError, OrderMismatch
from .ncpartition import Partition, boundary_label

__all__ = [
    "Diagram",
    "Endpoint",
    "alpha",
    "beta",
    "identity_diagram",
    "generator_diagram",
    "adjacency_matrix",
    "stack",
    "diagrams_equal",
    "diagram_to_json",
    "diagram_from_json",
]

Endpoint = tuple[str, int]
Edge = tuple[Endpoint, Endpoint]


def _check_endpoint(ep, n: int, vertices: frozenset[int]) -> Endpoint:
    if (
        not isinstance(ep, tuple)
        or len(ep) != 2
        or ep[0] not in ("b", "v")
        or not isinstance(ep[1], int)
    ):
        raise DiagramError(f"malformed endpoint {ep!r}")
    kind, idx = ep
    if kind == "b" and not 1 <= idx <= 2 * n:
        raise DiagramError(f"boundary label {idx} out of range 1..{2 * n}")
    if kind == "v" and idx not in vertices:
        raise DiagramError(f"unknown inner vertex {idx}")
    return ep


class Diagram:
    """An immutable order-n diagram.

    Fields:
        n: the order.
        vertices: frozenset of inner vertex ids (opaque integers).
        edges: sorted tuple of unordered endpoint pairs; parallel edges
            appear as repeated pairs, loops as ((\"v\",i), (\"v\",i)).

    Invariants: every boundary label 1..2n has total incidence exactly 1,
    and no loop sits on a boundary label.
    """

    __slots__ = ("n", "vertices", "edges")

    def __init__(self, n: int, vertices, edges):
        if n < 1:
            raise DiagramError(f"order must be positive, got {n}")
        vertices = frozenset(vertices)
        canon: list[Edge] = []
        incidence = {l: 0 for l in range(1, 2 * n + 1)}
        for e in edges:
            u, v = e
            u = _check_endpoint(u, n, vertices)
            v = _check_endpoint(v, n, vertices)
            if u == v and u[0] == "b":
                raise DiagramError(f"loop on boundary label {u[1]}")
            for ep in (u, v):
                if ep[0] == "b":
                    incidence[ep[1]] += 1
            canon.append(tuple(sorted((u, v))))
        for label, count in incidence.items():
            if count != 1:
                raise DiagramError(
                    f"boundary label {label} has incidence {count}, expected 1"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def __setattr__(self, *args):
        raise AttributeError("Diagram is immutable")

    def valency(self, vertex: int) -> int:
        """Incidence count of an inner vertex; a loop counts twice."""
        ep = ("v", vertex)
        return sum((u == ep) + (v == ep) for u, v in self.edges)

    def inner_edges(self) -> list[Edge]:
        return [e for e in self.edges if e[0][0] == "v" and e[1][0] == "v"]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Diagram)
            and self.n == other.n
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Diagram(n={self.n}, vertices={sorted(self.vertices)}, edges={list(self.edges)})"


def _components(d: Diagram) -> list[set[Endpoint]]:
    parent: dict[Endpoint, Endpoint] = {}

    def find(x: Endpoint) -> Endpoint:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: Endpoint, y: Endpoint) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for l in range(1, 2 * d.n + 1):
        parent[("b", l)] = ("b", l)
    for v in d.vertices:
        parent[("v", v)] = ("v", v)
    for u, v in d.edges:
        union(u, v)
    comps: dict[Endpoint, set[Endpoint]] = {}
    for node in parent:
        comps.setdefault(find(node), set()).add(node)
    return list(comps.values())


def alpha(d: Diagram) -> Partition:
    """Partition of the boundary labels by connected components.

    Preconditions: no inner edges, every inner vertex at least 3-valent, and
    every component touches at least 2 boundary points.

    Raises:
        DiagramError: on any precondition violation.
    """
    if d.inner_edges():
        raise DiagramError("diagram has an inner edge")
    for v in d.vertices:
        val = d.valency(v)
        if val < 3:
            raise DiagramError(f"inner vertex {v} has valency {val} < 3")
    blocks = []
    for comp in _components(d):
        labels = sorted(idx for kind, idx in comp if kind == "b")
        if len(labels) < 2:
            raise DiagramError(
                f"component {sorted(comp)} touches {len(labels)} boundary points"
            )
        blocks.append(tuple(labels))
    return Partition(d.n, blocks)


def beta(p: Partition) -> Diagram:
    """The canonical diagram of a basis partition.

    Blocks of size 2 become plain strands (a single edge); larger blocks
    become one inner star vertex with a leg to each of its labels.
    """
    edges: list[Edge] = []
    vertices: list[int] = []
    next_id = 1
    for block in p.blocks:
        if len(block) == 2:
            edges.append((("b", block[0]), ("b", block[1])))
        else:
            vid = next_id
            next_id += 1
            vertices.append(vid)
            edges.extend((("b", x), ("v", vid)) for x in block)
    return Diagram(p.n, vertices, edges)


def identity_diagram(n: int) -> Diagram:
    """n vertical strands: bottom position j joined to top position j."""
    return Diagram(
        n,
        (),
        [
            (("b", boundary_label("bottom", j, n)), ("b", boundary_label("top", j, n)))
            for j in range(1, n + 1)
        ],
    )


def generator_diagram(i: int, j: int, n: int) -> Diagram:
    """One inner vertex joined to all top and bottom positions i..j, with
    vertical strands at the remaining positions."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    edges: list[Edge] = []
    for pos in range(1, n + 1):
        bot = ("b", boundary_label("bottom", pos, n))
        top = ("b", boundary_label("top", pos, n))
        if i <= pos <= j:
            edges.append((bot, ("v", 1)))
            edges.append((top, ("v", 1)))
        else:
            edges.append((bot, top))
    return Diagram(n, [1], edges)


def adjacency_matrix(d: Diagram) -> tuple[tuple[int, ...], ...]:
    """Symmetric edge-multiplicity matrix under the canonical node order.

    Rows 1..2n are the boundary labels; inner vertices follow, ordered by
    the smallest boundary label they connect to.  Defined for the same
    diagrams as alpha.
    """
    if d.inner_edges():
        raise DiagramError("diagram has an inner edge")
    for v in d.vertices:
        if d.valency(v) < 3:
            raise DiagramError(f"inner vertex {v} has valency < 3")
    neighbors: dict[int, list[int]] = {v: [] for v in d.vertices}
    for u, v in d.edges:
        if u[0] == "v" or v[0] == "v":
            vid = u[1] if u[0] == "v" else v[1]
            lab = v[1] if u[0] == "v" else u[1]
            neighbors[vid].append(lab)
    order = sorted(d.vertices, key=lambda v: min(neighbors[v]))
    index: dict[Endpoint, int] = {("b", l): l - 1 for l in range(1, 2 * d.n + 1)}
    for k, v in enumerate(order):
        index[("v", v)] = 2 * d.n + k
    size = 2 * d.n + len(order)
    m = [[0] * size for _ in range(size)]
    for u, v in d.edges:
        iu, iv = index[u], index[v]
        m[iu][iv] += 1
        if iu != iv:
            m[iv][iu] += 1
    return tuple(tuple(row) for row in m)


def diagrams_equal(a: Diagram, b: Diagram) -> bool:
    """Equality up to inner-vertex relabeling, for diagrams in the basis
    form accepted by alpha."""
    if a.n != b.n:
        return False
    return adjacency_matrix(a) == adjacency_matrix(b)


def stack(a: Diagram, b: Diagram) -> Diagram:
    """Vertical gluing with `a` on top and `b` below.

    Every glued pair (a's bottom point and b's top point at the same
    position) is replaced by a fresh 2-valent inner vertex joining the two
    incident edges.  Pure gluing: no relation is applied here.

    The result keeps b's bottom labels and a's top labels unchanged.
    """
    if a.n != b.n:
        raise OrderMismatch(f"cannot stack orders {a.n} and {b.n}")
    n = a.n
    b_map = {v: i for i, v in enumerate(sorted(b.vertices))}
    a_map = {v: len(b_map) + i for i, v in enumerate(sorted(a.vertices))}
    glue_base = len(b_map) + len(a_map)

    def map_b(ep: Endpoint) -> Endpoint:
        kind, idx = ep
        if kind == "v":
            return ("v", b_map[idx])
        if idx <= n:
            return ep  # b's bottom survives
        return ("v", glue_base + (2 * n + 1 - idx))  # b's top at position p

    def map_a(ep: Endpoint) -> Endpoint:
        kind, idx = ep
        if kind == "v":
            return ("v", a_map[idx])
        if idx > n:
            return ep  # a's top survives
        return ("v", glue_base + idx)  # a's bottom at position p

    edges = [(map_b(u), map_b(v)) for u, v in b.edges]
    edges += [(map_a(u), map_a(v)) for u, v in a.edges]
    vertices = list(range(glue_base + 1, glue_base + n + 1))
    vertices += list(b_map.values())
    vertices += list(a_map.values())
    return Diagram(n, vertices, edges)


def diagram_to_json(d: Diagram) -> dict:
    def ep(e: Endpoint) -> dict:
        return {e[0]: e[1]}

    return {
        "n": d.n,
        "vertices": sorted(d.vertices),
        "edges": [[ep(u), ep(v)] for u, v in d.edges],
    }


def diagram_from_json(data: dict) -> Diagram:
    def ep(obj: dict) -> Endpoint:
        if not isinstance(obj, dict) or len(obj) != 1:
            raise DiagramError(f"malformed endpoint {obj!r}")
        ((kind, idx),) = obj.items()
        return (kind, int(idx))

    return Diagram(
        int(data["n"]),
        [int(v) for v in data["vertices"]],
        [(ep(u), ep(v)) for u, v in data["edges"]],
    )
