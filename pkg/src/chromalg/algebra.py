"""Algebra elements over the partition basis, multiplication by stacking,
and structure-constant tables.

An element is a finitely supported map Partition -> RationalFunctionQ.  The
product orientation is fixed once and for all: in `a * b` the first factor
is the TOP diagram of the stack.  Every serialized table repeats this
convention in its metadata, because the opposite convention exists in the
wild and silently transposes tables.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from .diagram import beta, stack
from .errors import CapExceeded, OrderMismatch
from .ncpartition import (
    Partition,
    enumerate_basis,
    identity_partition,
    partition_from_json,
)
from .qscalar import RationalFunctionQ, rf_from_json, rf_to_json

__all__ = [
    "AlgebraElement",
    "CONVENTION",
    "DEFAULT_TABLE_CAP",
    "elem_add",
    "elem_scale",
    "elem_mul",
    "identity_element",
    "basis_element",
    "structure_constants",
    "element_to_json",
    "element_from_json",
]

CONVENTION = "first-factor-on-top"

DEFAULT_TABLE_CAP = 4


class AlgebraElement:
    """An element of the order-n algebra in the partition basis.

    Immutable; zero coefficients are never stored, so structural equality
    is exact element equality.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Partition, RationalFunctionQ] = {}
        for p, c in items:
            if not isinstance(p, Partition):
                raise TypeError(f"basis key must be a Partition, got {type(p)}")
            if p.n != n:
                raise OrderMismatch(f"partition of order {p.n} in element of order {n}")
            if p in acc:
                c = acc[p] + c
            if c.is_zero():
                acc.pop(p, None)
            else:
                acc[p] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", tuple(sorted(acc.items(), key=lambda t: t[0])))

    def __setattr__(self, *args):
        raise AttributeError("AlgebraElement is immutable")

    @property
    def terms(self) -> tuple[tuple[Partition, RationalFunctionQ], ...]:
        """Canonically ordered (partition, coefficient) pairs."""
        return self._terms

    def coefficient(self, p: Partition) -> RationalFunctionQ:
        for q, c in self._terms:
            if q == p:
                return c
        from .qscalar import ZERO

        return ZERO

    def support(self) -> tuple[Partition, ...]:
        return tuple(p for p, _ in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return elem_add(self, other)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return elem_add(self, elem_scale(RationalFunctionQ.from_rational(-1), other))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return elem_mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self._terms))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"AlgebraElement(n={self.n}, 0)"
        body = " + ".join(f"({c}) * {p!r}" for p, c in self._terms)
        return f"AlgebraElement(n={self.n}, {body})"


def elem_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Coefficient-wise sum; zeros dropped."""
    if a.n != b.n:
        raise OrderMismatch(f"cannot add orders {a.n} and {b.n}")
    acc = dict(a.terms)
    for p, c in b.terms:
        acc[p] = acc[p] + c if p in acc else c
    return AlgebraElement(a.n, acc)


def elem_scale(s: RationalFunctionQ, a: AlgebraElement) -> AlgebraElement:
    """Scalar multiple; zeros dropped."""
    return AlgebraElement(a.n, {p: s * c for p, c in a.terms})


def identity_element(n: int) -> AlgebraElement:
    """Coefficient 1 on the identity partition."""
    from .qscalar import ONE

    return AlgebraElement(n, {identity_partition(n): ONE})


def basis_element(p: Partition) -> AlgebraElement:
    from .qscalar import ONE

    return AlgebraElement(p.n, {p: ONE})


@lru_cache(maxsize=None)
def _basis_product(p: Partition, q: Partition) -> AlgebraElement:
    """normalize(stack(beta(p), beta(q))): p is the top factor."""
    from .rewrite import normalize

    return normalize(stack(beta(p), beta(q)))


def elem_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of basis multiplication, first factor on top."""
    if a.n != b.n:
        raise OrderMismatch(f"cannot multiply orders {a.n} and {b.n}")
    acc: dict[Partition, RationalFunctionQ] = {}
    for p, cp in a.terms:
        for q, cq in b.terms:
            w = cp * cq
            for r, cr in _basis_product(p, q).terms:
                c = w * cr
                acc[r] = acc[r] + c if r in acc else c
    return AlgebraElement(a.n, acc)


def structure_constants(
    n: int, *, cap: int | None = DEFAULT_TABLE_CAP, parallel: int = 1
) -> dict[tuple[Partition, Partition, Partition], RationalFunctionQ]:
    """Sparse table {(p, q, r): coefficient of r in p*q} over the whole basis.

    Iteration order of the returned dict is deterministic: p, q in canonical
    enumeration order, then r in canonical order.  Omitted entries are zero.

    Raises:
        CapExceeded: if n exceeds the table cap.
    """
    if cap is not None and n > cap:
        raise CapExceeded(f"order {n} exceeds table cap {cap}")
    basis = enumerate_basis(n, cap=None)
    pairs = [(p, q) for p in basis for q in basis]
    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            # fills the product cache; assembly below stays deterministic
            list(pool.map(lambda pq: _basis_product(*pq), pairs))
    table: dict[tuple[Partition, Partition, Partition], RationalFunctionQ] = {}
    for p, q in pairs:
        for r, c in _basis_product(p, q).terms:
            table[(p, q, r)] = c
    return table


def element_to_json(x: AlgebraElement) -> dict:
    return {
        "n": x.n,
        "convention": CONVENTION,
        "terms": [
            {"blocks": [list(b) for b in p.blocks], "coeff": rf_to_json(c)}
            for p, c in x.terms
        ],
    }


def element_from_json(data: dict) -> AlgebraElement:
    n = int(data["n"])
    conv = data.get("convention", CONVENTION)
    if conv != CONVENTION:
        raise ValueError(f"unsupported product convention {conv!r}")
    terms: dict[Partition, RationalFunctionQ] = {}
    for t in data["terms"]:
        p = partition_from_json({"n": n, "blocks": t["blocks"]})
        c = rf_from_json(t["coeff"])
        terms[p] = terms[p] + c if p in terms else c
    return AlgebraElement(n, terms)
