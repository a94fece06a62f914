"""Pure-Python reduction kernel.

Reduces an integer-encoded multigraph to a map from boundary partitions to
integer coefficient vectors over powers of (Q-1).  The compiled twin
(_reduce_cy) implements the identical contract; chromalg.rewrite picks one
at import time.

Encoding: boundary label l (1..2n) is node -l; inner vertices are
0..num_vertices-1.  An edge is an (u, v) pair; loops are (v, v) on inner
nodes only.

Rewrite rules, applied until no inner structure remains:

  1. contraction-deletion   G = G/e - G\\e        for a non-loop inner edge
  2. loop removal           G = (Q-1) * (G - loop)
  3. smoothing              a 2-valent inner vertex joins its two edges
  4. annihilation           a 1-valent inner vertex kills the term
  isolated                  a 0-valent inner vertex drops with factor 1
  closed-curve              a vertexless closed strand drops with factor Q-1

Rules 2..4 and the two scalar rules are exhaustively interleaved between
branching steps of rule 1; every applicable order yields the same output.
The only scalars ever produced are +-(Q-1)^k, so a term's coefficient is
tracked as (power, sign) and the result accumulates integer vectors indexed
by the power.

The returned mapping is {blocks: {power: integer coefficient}} where blocks
is the tuple-of-tuples boundary partition of a fully reduced term.
"""

from __future__ import annotations

__all__ = ["reduce_terms"]


def _simplify(edges: list, k: int, num_vertices: int, trace, nterms) -> tuple[int, bool]:
    """Apply rules 2, 3, 4 and the scalar rules in place until stable.

    Returns (power, alive); alive is False when rule 4 killed the term.
    """
    reported_isolated: set[int] = set()
    while True:
        val = [0] * num_vertices
        for u, v in edges:
            if u >= 0:
                val[u] += 1
            if v >= 0:
                val[v] += 1

        dead = next((v for v in range(num_vertices) if val[v] == 1), None)
        if dead is not None:
            if trace is not None:
                trace({"rule": "4", "vertex": dead, "terms": nterms()})
            return k, False

        loops = [i for i, (u, v) in enumerate(edges) if u == v and u >= 0]
        if loops:
            closed = [i for i in loops if val[edges[i][0]] == 2]
            if closed:
                # the loop is the vertex's whole incidence: smoothing the
                # 2-valent vertex leaves a vertexless closed curve
                i = closed[0]
                if trace is not None:
                    trace({"rule": "closed-curve", "vertex": edges[i][0], "terms": nterms()})
            else:
                i = loops[0]
                if trace is not None:
                    trace({"rule": "2", "vertex": edges[i][0], "terms": nterms()})
            del edges[i]
            k += 1
            continue

        if trace is not None:
            for v in range(num_vertices):
                if val[v] == 0 and v not in reported_isolated:
                    reported_isolated.add(v)
                    trace({"rule": "isolated", "vertex": v, "terms": nterms()})

        two = next((v for v in range(num_vertices) if val[v] == 2), None)
        if two is None:
            return k, True
        slots = [i for i, (u, v) in enumerate(edges) if u == two or v == two]
        i1, i2 = slots  # exactly two incidences and no loop at this vertex
        a = edges[i1][0] if edges[i1][1] == two else edges[i1][1]
        b = edges[i2][0] if edges[i2][1] == two else edges[i2][1]
        if trace is not None:
            trace({"rule": "3", "vertex": two, "terms": nterms()})
        del edges[i2], edges[i1]
        edges.append((a, b) if a <= b else (b, a))


def _leaf_blocks(edges: list, n: int) -> tuple:
    """Boundary partition of a term with no inner edges left."""
    parent = list(range(2 * n + 1))  # indexed by boundary label

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    star: dict[int, int] = {}
    for u, v in edges:
        if u < 0 and v < 0:
            ru, rv = find(-u), find(-v)
            if ru != rv:
                parent[ru] = rv
        else:
            vid = u if u >= 0 else v
            lab = -v if u >= 0 else -u
            if vid in star:
                ru, rv = find(star[vid]), find(lab)
                if ru != rv:
                    parent[ru] = rv
            else:
                star[vid] = lab
    groups: dict[int, list[int]] = {}
    for lab in range(1, 2 * n + 1):
        groups.setdefault(find(lab), []).append(lab)
    return tuple(sorted(tuple(g) for g in groups.values()))


def reduce_terms(n, num_vertices, edges, rng=None, trace=None):
    """Reduce a diagram to {blocks: {power: coeff}}.

    Args:
        n: the order (2n boundary labels).
        num_vertices: inner vertices are 0..num_vertices-1.
        edges: iterable of (u, v) int pairs in the kernel encoding.
        rng: optional random.Random; when given, the branching edge of rule
            1 is chosen at random instead of smallest-first (used by the
            confluence suites).
        trace: optional callable receiving one dict per rewrite step.

    Returns:
        dict mapping blocks to {power: integer}, the coefficient being the
        sum of coeff * (Q-1)^power.
    """
    out: dict[tuple, dict[int, int]] = {}
    start = [(u, v) if u <= v else (v, u) for u, v in edges]
    stack: list[tuple[int, int, list]] = [(0, 1, start)]

    def nterms() -> int:
        return len(stack) + 1

    while stack:
        k, sign, cur = stack.pop()
        k, alive = _simplify(cur, k, num_vertices, trace, nterms)
        if not alive:
            continue
        inner = [i for i, (u, v) in enumerate(cur) if u >= 0 and v >= 0]
        if not inner:
            blocks = _leaf_blocks(cur, n)
            vec = out.setdefault(blocks, {})
            vec[k] = vec.get(k, 0) + sign
            if not vec[k]:
                del vec[k]
            continue
        if rng is None:
            pick = min(inner, key=lambda i: cur[i])
        else:
            pick = inner[rng.randrange(len(inner))]
        u, v = cur[pick]
        if trace is not None:
            trace({"rule": "1", "edge": [u, v], "terms": nterms()})
        deleted = cur[:pick] + cur[pick + 1 :]
        lo, hi = (u, v) if u < v else (v, u)
        contracted = [
            tuple(sorted((lo if x == hi else x, lo if y == hi else y)))
            for x, y in deleted
        ]
        stack.append((k, -sign, deleted))
        stack.append((k, sign, contracted))
    return {blocks: vec for blocks, vec in out.items() if vec}
