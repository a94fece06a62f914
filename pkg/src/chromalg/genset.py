"""The multiplicative generator set and constructive decomposition.

The generator e_{i,j} (1 <= i < j <= n) is the basis diagram with one inner
vertex joined to all top and bottom positions i..j and vertical strands
elsewhere.  Every basis partition decomposes into a polynomial in these
generators; decompose_basis builds one by structural recursion:

* a leading run of strands is stripped off (the remainder decomposes in a
  smaller order and its symbols shift right),
* an isolated block is re-created by merging it into a face-adjacent block
  and multiplying by one generator: if the k shared edges of that product
  are resolved, p = (-1)^k e_{i,j} * p' + (-1)^{k+1} c_k p' with p' the
  merged partition (generator on top for a top-isolated block, at the
  bottom for a bottom-isolated one),
* when every block crosses, the leftmost block occupies bottom positions
  1..b and top positions 1..a; for a = b it splits off as e_{1,a} times the
  shifted remainder, otherwise the same edge-count resolution applies with
  k = |a-b| against the partition p2 that replaces it by min(a,b) strands.

The coefficients c_k obey c_0 = 0, c_k = (Q-1)^{k-1} - c_{k-1}; they are
recomputed here and cross-checked against the rewrite engine's multi-edge
expansion in the test suite rather than hardcoded.

Correctness of an expression means exactly one thing: evaluate() returns
the original element.  Expressions are not simplified beyond merging
identical words, since shorter ones are not known to be minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .algebra import (
    AlgebraElement,
    basis_element,
    elem_add,
    elem_mul,
    elem_scale,
    identity_element,
)
from .errors import PartitionError
from .ncpartition import (
    Partition,
    boundary_label,
    boundary_position,
    classify_block,
    covers,
)
from .qscalar import ONE, Q_MINUS_1, RationalFunctionQ, ZERO, rf_from_json, rf_to_json

__all__ = [
    "GeneratorSymbol",
    "GeneratorExpression",
    "generators",
    "symbol_partition",
    "symbol_element",
    "evaluate",
    "c_coeff",
    "decompose_basis",
    "decompose_element",
    "expression_to_json",
    "expression_from_json",
]


@dataclass(frozen=True, order=True)
class GeneratorSymbol:
    """The symbol e_{i,j} of order n."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.n:
            raise ValueError(f"need 1 <= i < j <= n, got {self}")

    def __repr__(self) -> str:
        return f"e[{self.i},{self.j};{self.n}]"


Word = tuple[GeneratorSymbol, ...]


def generators(n: int) -> list[GeneratorSymbol]:
    """All n(n-1)/2 symbols, ordered by (i, j)."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return [
        GeneratorSymbol(i, j, n) for i in range(1, n) for j in range(i + 1, n + 1)
    ]


def symbol_partition(sym: GeneratorSymbol) -> Partition:
    """The basis partition of e_{i,j}: one block over positions i..j on both
    sides, strands elsewhere."""
    n = sym.n
    blocks = [
        tuple(range(sym.i, sym.j + 1))
        + tuple(2 * n + 1 - t for t in range(sym.j, sym.i - 1, -1))
    ]
    blocks.extend(
        (t, 2 * n + 1 - t) for t in range(1, n + 1) if not sym.i <= t <= sym.j
    )
    return Partition(n, blocks)


def symbol_element(sym: GeneratorSymbol) -> AlgebraElement:
    return basis_element(symbol_partition(sym))


class GeneratorExpression:
    """A formal linear combination of words in the symbols e_{i,j}.

    Words are tuples of symbols, top factor first; the empty word is the
    identity.  Identical words are merged and zero coefficients dropped.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms):
        acc: dict[Word, RationalFunctionQ] = {}
        for coeff, word in terms:
            word = tuple(word)
            for sym in word:
                if not isinstance(sym, GeneratorSymbol):
                    raise TypeError(f"word entry {sym!r} is not a GeneratorSymbol")
                if sym.n != n:
                    raise ValueError(f"symbol {sym!r} in an expression of order {n}")
            if word in acc:
                coeff = acc[word] + coeff
            if coeff.is_zero():
                acc.pop(word, None)
            else:
                acc[word] = coeff
        key = lambda w: tuple((s.i, s.j) for s in w)
        object.__setattr__(
            self, "terms", tuple((acc[w], w) for w in sorted(acc, key=key))
        )
        object.__setattr__(self, "n", n)

    def __setattr__(self, *args):
        raise AttributeError("GeneratorExpression is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def word_count(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneratorExpression)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return f"GeneratorExpression(n={self.n}, 0)"
        body = " + ".join(
            f"({c}) * {'·'.join(map(repr, w)) if w else '1'}" for c, w in self.terms
        )
        return f"GeneratorExpression(n={self.n}, {body})"


def evaluate(expr: GeneratorExpression) -> AlgebraElement:
    """Interpret an expression in the algebra: each word is the product of
    its symbols (first symbol on top), the empty word is the identity."""
    out = AlgebraElement(expr.n, {})
    one = identity_element(expr.n)
    for coeff, word in expr.terms:
        prod = reduce(elem_mul, (symbol_element(s) for s in word), one)
        out = elem_add(out, elem_scale(coeff, prod))
    return out


@lru_cache(maxsize=None)
def c_coeff(k: int) -> RationalFunctionQ:
    """Resolution coefficients: c_0 = 0 and c_k = (Q-1)^{k-1} - c_{k-1},
    so c_1 = 1 and c_2 = Q-2."""
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    if k == 0:
        return ZERO
    return Q_MINUS_1 ** (k - 1) - c_coeff(k - 1)


def _sign(k: int) -> RationalFunctionQ:
    return RationalFunctionQ.from_rational(1 if k % 2 == 0 else -1)


def _shift(expr: GeneratorExpression, s: int, n: int) -> GeneratorExpression:
    """Reinterpret an order-(n-s) expression at positions s+1..n of order n."""
    return GeneratorExpression(
        n,
        [
            (c, tuple(GeneratorSymbol(sym.i + s, sym.j + s, n) for sym in w))
            for c, w in expr.terms
        ],
    )


def _guard(parent: Partition, child: Partition) -> None:
    if len(child.blocks) >= len(parent.blocks):
        raise RuntimeError(
            f"recursion guard: {child!r} does not shrink below {parent!r}"
        )


def _side_positions(block, n: int) -> list[int]:
    return sorted(boundary_position(x, n)[1] for x in block)


@lru_cache(maxsize=None)
def decompose_basis(p: Partition) -> GeneratorExpression:
    """An expression E with evaluate(E) = 1*p, built by the recursion in the
    module docstring.  Every recursive call strictly decreases the block
    count, which is asserted."""
    n = p.n
    blocks = p.blocks

    # strip a maximal run of strands at the left edge
    s = 0
    while s < n and (s + 1, 2 * n - s) in blocks:
        s += 1
    if s == n:
        return GeneratorExpression(n, [(ONE, ())])
    if s > 0:
        strands = {(t, 2 * n + 1 - t) for t in range(1, s + 1)}
        rest = Partition(
            n - s, [tuple(x - s for x in b) for b in blocks if b not in strands]
        )
        _guard(p, rest)
        return _shift(decompose_basis(rest), s, n)

    iso = [(b, classify_block(p, b)) for b in blocks]
    iso = [(b, kind) for b, kind in iso if kind != "crossing"]
    if iso:
        candidates = []
        for b, kind in iso:
            same_side = [b2 for b2, k2 in iso if k2 == kind and b2 != b]
            if any(covers(p, b, other) for other in same_side):
                continue
            pos = _side_positions(b, n)
            candidates.append((pos[0], 0 if kind == "top-isolated" else 1, b, kind, pos))
        start, _, L, kind, pos = min(candidates)
        i, j = pos[0], pos[-1]
        if pos != list(range(i, j + 1)):
            raise PartitionError(f"isolated non-covering block {L} is not consecutive")
        k = j - i + 1
        side = "top" if kind == "top-isolated" else "bottom"
        if i > 1:
            target = boundary_label(side, i - 1, n)
        elif j < n:
            target = boundary_label(side, j + 1, n)
        else:
            # the block spans its whole side; merge around the corner
            target = n if kind == "top-isolated" else n + 1
        M = p.block_of(target)
        merged = Partition(
            n, [b for b in blocks if b != L and b != M] + [tuple(sorted(L + M))]
        )
        _guard(p, merged)
        sub = decompose_basis(merged)
        sym = GeneratorSymbol(i, j, n)
        sgn = _sign(k)
        ck = c_coeff(k)
        terms: list[tuple[RationalFunctionQ, Word]] = []
        for c, w in sub.terms:
            word = (sym,) + w if side == "top" else w + (sym,)
            terms.append((sgn * c, word))
            terms.append((-(sgn * ck) * c, w))
        return GeneratorExpression(n, terms)

    # all blocks crossing: the leftmost block occupies bottom positions 1..b
    # and top positions 1..a
    B1 = p.block_of(1)
    bot = [x for x in B1 if x <= n]
    top = [x for x in B1 if x > n]
    b, a = len(bot), len(top)
    if bot != list(range(1, b + 1)) or sorted(
        2 * n + 1 - x for x in top
    ) != list(range(1, a + 1)):
        raise PartitionError(f"crossing block {B1} is not left-aligned in {p!r}")

    if a == b:
        sym = GeneratorSymbol(1, a, n)
        if n == a:
            return GeneratorExpression(n, [(ONE, (sym,))])
        rest = Partition(n - a, [tuple(x - a for x in blk) for blk in blocks if blk != B1])
        _guard(p, rest)
        shifted = _shift(decompose_basis(rest), a, n)
        return GeneratorExpression(
            n, [(c, (sym,) + w) for c, w in shifted.terms]
        )

    B2 = p.block_of(b + 1)
    merged = Partition(
        n, [blk for blk in blocks if blk != B1 and blk != B2] + [tuple(sorted(B1 + B2))]
    )
    _guard(p, merged)
    sub1 = decompose_basis(merged)
    k = abs(a - b)
    if a > b:
        surplus = tuple(2 * n + 1 - t for t in range(b + 1, a + 1))  # top labels
        strip = b
        sym = GeneratorSymbol(1, a, n)
        on_top = True
    else:
        surplus = tuple(range(a + 1, b + 1))  # bottom labels
        strip = a
        sym = GeneratorSymbol(1, b, n)
        on_top = False
    rest_blocks = [tuple(sorted(B2 + surplus))] + [
        blk for blk in blocks if blk != B1 and blk != B2
    ]
    r2 = Partition(n - strip, [tuple(x - strip for x in blk) for blk in rest_blocks])
    _guard(p, r2)
    sub2 = _shift(decompose_basis(r2), strip, n)
    sgn = _sign(k)
    ck = c_coeff(k)
    terms = []
    for c, w in sub2.terms:
        word = (sym,) + w if on_top else w + (sym,)
        terms.append((sgn * c, word))
    for c, w in sub1.terms:
        terms.append((-(sgn * ck) * c, w))
    return GeneratorExpression(n, terms)


def decompose_element(x: AlgebraElement) -> GeneratorExpression:
    """Linear extension of decompose_basis; evaluate() returns x exactly."""
    terms: list[tuple[RationalFunctionQ, Word]] = []
    for p, c in x.terms:
        for ce, w in decompose_basis(p).terms:
            terms.append((c * ce, w))
    return GeneratorExpression(x.n, terms)


def expression_to_json(expr: GeneratorExpression) -> dict:
    return {
        "n": expr.n,
        "terms": [
            {"coeff": rf_to_json(c), "word": [[s.i, s.j] for s in w]}
            for c, w in expr.terms
        ],
    }


def expression_from_json(data: dict) -> GeneratorExpression:
    n = int(data["n"])
    terms = []
    for t in data["terms"]:
        word = tuple(GeneratorSymbol(int(i), int(j), n) for i, j in t["word"])
        terms.append((rf_from_json(t["coeff"]), word))
    return GeneratorExpression(n, terms)
