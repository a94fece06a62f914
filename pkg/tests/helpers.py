"""Shared oracles for the test suite.

Everything here is deliberately independent of the package internals: the
naive reducer recurses on raw edge lists with sympy coefficients and applies
relations in a randomized order, the decomposition oracle solves an exact
linear system, and comparisons go through sympy.cancel or evaluation at
rational points.  Slow is fine, clever is not.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from chromalg import (
    Diagram,
    Partition,
    RationalFunctionQ,
    basis_element,
    beta,
    elem_add,
    elem_mul,
    elem_scale,
    enumerate_basis,
    generators,
    identity_element,
    stack,
    symbol_element,
)

QS = sympy.Symbol("Q")


def poly_to_sympy(p) -> sympy.Expr:
    return sympy.Add(
        *(sympy.Rational(c.numerator, c.denominator) * QS**e for e, c in p.terms)
    )


def rf_to_sympy(r: RationalFunctionQ) -> sympy.Expr:
    return sympy.cancel(poly_to_sympy(r.num) / poly_to_sympy(r.den))


def elem_to_sympy(x) -> dict[Partition, sympy.Expr]:
    return {p: rf_to_sympy(c) for p, c in x.terms}


def sympy_maps_equal(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(sympy.cancel(a.get(k, 0) - b.get(k, 0)) == 0 for k in keys)


# ---------------------------------------------------------------------------
# naive reducer: recursion on edge lists, randomized relation order


def _valencies(edges):
    val: dict = {}
    for u, v in edges:
        for ep in (u, v):
            if ep[0] == "v":
                val[ep] = val.get(ep, 0) + 1
    return val


def _leaf_partition(n, edges):
    parent = {("b", l): ("b", l) for l in range(1, 2 * n + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent.setdefault(x, x)
        parent.setdefault(y, y)
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for u, v in edges:
        union(u, v)
    blocks: dict = {}
    for l in range(1, 2 * n + 1):
        blocks.setdefault(find(("b", l)), []).append(l)
    return Partition(n, [tuple(sorted(b)) for b in blocks.values()])


def naive_reduce(n, edges, rng) -> dict[Partition, sympy.Expr]:
    """Apply the four relations in a random order until only basis diagrams
    remain.  Returns partition -> sympy coefficient.  Vertices are whatever
    ('v', i) endpoints occur in the edge list; isolated vertices contribute
    factor 1 and closed curves die through loop removal."""
    edges = [tuple(sorted(e)) for e in edges]
    val = _valencies(edges)

    if any(c == 1 for c in val.values()):
        return {}

    moves = []
    looped = set()
    for idx, (u, v) in enumerate(edges):
        if u == v:
            moves.append(("loop", idx))
            looped.add(u)
        elif u[0] == "v" and v[0] == "v":
            moves.append(("branch", idx))
    for w, c in val.items():
        # a vertex whose valency 2 comes from a self-loop is not smoothable
        if c == 2 and w not in looped:
            moves.append(("smooth", w))

    if not moves:
        return {_leaf_partition(n, edges): sympy.Integer(1)}

    kind, arg = moves[rng.randrange(len(moves))]

    if kind == "loop":
        rest = edges[:arg] + edges[arg + 1 :]
        return {p: (QS - 1) * c for p, c in naive_reduce(n, rest, rng).items()}

    if kind == "smooth":
        w = arg
        incident = [i for i, e in enumerate(edges) if w in e]
        (i1, i2) = incident
        far = []
        for i in (i1, i2):
            u, v = edges[i]
            far.append(v if u == w else u)
        rest = [e for i, e in enumerate(edges) if i not in (i1, i2)]
        rest.append(tuple(sorted((far[0], far[1]))))
        return naive_reduce(n, rest, rng)

    u, v = edges[arg]
    deleted = edges[:arg] + edges[arg + 1 :]
    contracted = [
        tuple(sorted((u if a == v else a, u if b == v else b))) for a, b in deleted
    ]
    out: dict[Partition, sympy.Expr] = {}
    for p, c in naive_reduce(n, contracted, rng).items():
        out[p] = out.get(p, 0) + c
    for p, c in naive_reduce(n, deleted, rng).items():
        out[p] = out.get(p, 0) - c
    return {p: sympy.expand(c) for p, c in out.items() if sympy.expand(c) != 0}


def naive_product(p: Partition, q: Partition, rng) -> dict[Partition, sympy.Expr]:
    d = stack(beta(p), beta(q))
    return naive_reduce(d.n, list(d.edges), rng)


# ---------------------------------------------------------------------------
# random diagram builders


def random_basis_partition(rng, n) -> Partition:
    basis = enumerate_basis(n)
    return basis[rng.randrange(len(basis))]


def random_diagram(rng, n, stack_depth=None, mutations=None) -> Diagram:
    """A planar diagram: a stack of random basis diagrams with some
    planarity-preserving edits (subdivide, parallel copy, self-loop)."""
    depth = stack_depth if stack_depth is not None else rng.randint(1, 3)
    d = beta(random_basis_partition(rng, n))
    for _ in range(depth - 1):
        d = stack(beta(random_basis_partition(rng, n)), d)
    edits = mutations if mutations is not None else rng.randint(0, 4)
    vertices = list(d.vertices)
    edges = list(d.edges)
    next_id = max(vertices, default=0) + 1
    for _ in range(edits):
        choice = rng.randrange(3)
        if choice == 0 and edges:
            # subdivide an edge with a 2-valent vertex
            u, v = edges.pop(rng.randrange(len(edges)))
            w = ("v", next_id)
            vertices.append(next_id)
            next_id += 1
            edges.extend([(u, w), (w, v)])
        elif choice == 1 and vertices:
            vid = ("v", vertices[rng.randrange(len(vertices))])
            edges.append((vid, vid))
        elif choice == 2:
            inner = [e for e in edges if e[0][0] == "v" and e[1][0] == "v"]
            if inner:
                edges.append(inner[rng.randrange(len(inner))])
    return Diagram(n, vertices, edges)


def plant_pendant(d: Diagram, rng) -> Diagram:
    """Attach a fresh 1-valent vertex somewhere inside d."""
    vertices = list(d.vertices)
    edges = list(d.edges)
    next_id = max(vertices, default=0) + 1
    if not vertices:
        u, v = edges.pop(rng.randrange(len(edges)))
        w = ("v", next_id)
        vertices.append(next_id)
        next_id += 1
        edges.extend([(u, w), (w, v)])
    host = ("v", vertices[rng.randrange(len(vertices))])
    vertices.append(next_id)
    edges.append((host, ("v", next_id)))
    return Diagram(d.n, vertices, edges)


# ---------------------------------------------------------------------------
# exact linear-algebra decomposition oracle


class WordSpan:
    """Echelon basis of the span of generator-word evaluations, kept as exact
    RationalFunctionQ vectors over the canonical basis order."""

    def __init__(self, n):
        self.n = n
        self.basis = enumerate_basis(n)
        self.index = {p: i for i, p in enumerate(self.basis)}
        self.rows = []  # (pivot, vector, combo word->coeff)
        zero = RationalFunctionQ.from_rational(0)
        self.zero = zero
        self._grow()

    def _vec(self, x):
        v = [self.zero] * len(self.basis)
        for p, c in x.terms:
            v[self.index[p]] = c
        return v

    def _reduce(self, vec, combo):
        for pivot, pvec, pcombo in self.rows:
            f = vec[pivot]
            if f.is_zero():
                continue
            vec = [a - f * b for a, b in zip(vec, pvec)]
            combo = _combo_sub(combo, f, pcombo)
        return vec, combo

    def _grow(self):
        dim = len(self.basis)
        gens = generators(self.n)
        frontier = [((), identity_element(self.n))]
        for _ in range(2 * self.n + 1):
            if len(self.rows) == dim:
                return
            for word, x in frontier:
                vec, combo = self._reduce(self._vec(x), {word: RationalFunctionQ.from_rational(1)})
                pivot = next((i for i, a in enumerate(vec) if not a.is_zero()), None)
                if pivot is None:
                    continue
                inv = vec[pivot].inv()
                vec = [a * inv for a in vec]
                combo = {w: c * inv for w, c in combo.items()}
                self.rows.append((pivot, vec, combo))
                if len(self.rows) == dim:
                    return
            frontier = [
                (word + (g,), elem_mul(x, symbol_element(g)))
                for word, x in frontier
                for g in gens
            ]
        raise AssertionError(f"span of words did not reach dimension {dim}")

    def solve(self, p: Partition):
        """A word combination evaluating to 1*p, or None."""
        target = basis_element(p)
        vec, combo = self._reduce(self._vec(target), {})
        if any(not a.is_zero() for a in vec):
            return None
        # residual combo has the wrong sign: target - sum == 0
        return {w: -c for w, c in combo.items() if not c.is_zero()}


def _combo_sub(combo, f, other):
    out = dict(combo)
    for w, c in other.items():
        cur = out.get(w)
        out[w] = cur - f * c if cur is not None else -(f * c)
    return out


def eval_words(n, combo) -> "object":
    out = identity_element(n) - identity_element(n)
    for word, c in combo.items():
        x = identity_element(n)
        for g in word:
            x = elem_mul(x, symbol_element(g))
        out = elem_add(out, elem_scale(c, x))
    return out


def eval_at_points(x, points=(Fraction(7), Fraction(-3), Fraction(5, 2))):
    """Cheap equality fingerprint: partition -> tuple of Fraction values."""
    return {p: tuple(c.eval(q) for q in points) for p, c in x.terms}
