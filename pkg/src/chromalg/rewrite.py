"""Normal-form engine: expand any diagram in the partition basis.

Reduction applies the rewrite rules listed in _reduce_py until every
surviving term is a basis diagram (no inner edges, all inner vertices at
least 3-valent), then maps each term through alpha and accumulates exact
coefficients.  Termination: every step strictly reduces the edge count or
kills a term.  The result does not depend on the order in which applicable
rules are fired; the engine picks the smallest inner edge by default and
the confluence suites re-run it with randomized picks.

Kernel selection: the compiled kernel (chromalg._reduce_cy) is used when it
imported successfully and CHROMALG_PURE is not set; otherwise the pure twin
(chromalg._reduce_py).  Traced runs always use the pure kernel, which is
the only one that reports steps.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import _reduce_py
from .diagram import Diagram
from .errors import OrderMismatch, PlanarityError
from .ncpartition import Partition
from .qscalar import ONE, Q_MINUS_1, RationalFunctionQ, ZERO

try:
    from . import _reduce_cy
except ImportError:  # extension not built; fall back to the pure kernel
    _reduce_cy = None

if _reduce_cy is not None and not os.environ.get("CHROMALG_PURE"):
    _kernel = _reduce_cy
    KERNEL = "cython"
else:
    _kernel = _reduce_py
    KERNEL = "python"

__all__ = ["RawCombination", "normalize", "normalize_combination", "KERNEL"]


@dataclass(frozen=True)
class RawCombination:
    """A formal linear combination of diagrams of one order."""

    n: int
    terms: tuple[tuple[RationalFunctionQ, Diagram], ...]

    def __post_init__(self):
        for _, d in self.terms:
            if d.n != self.n:
                raise OrderMismatch(
                    f"term of order {d.n} in a combination of order {self.n}"
                )


def _kernel_encoding(d: Diagram) -> tuple[int, list[tuple[int, int]]]:
    """Map endpoints to kernel ids: boundary label l -> -l, vertices -> 0..V-1."""
    vid = {v: i for i, v in enumerate(sorted(d.vertices))}

    def enc(ep) -> int:
        kind, idx = ep
        return -idx if kind == "b" else vid[idx]

    return len(vid), [(enc(u), enc(v)) for u, v in d.edges]


def _qm1_powers(up_to: int) -> list[RationalFunctionQ]:
    powers = [ONE]
    while len(powers) <= up_to:
        powers.append(powers[-1] * Q_MINUS_1)
    return powers


def normalize(d: Diagram, *, rng=None, trace=None):
    """The class of a diagram expanded in the partition basis.

    Args:
        d: any valid diagram arising from a planar drawing.
        rng: optional random.Random randomizing the branching-edge choice.
        trace: optional callable receiving one JSON-ready dict per step.

    Returns:
        AlgebraElement over the basis of order d.n.

    Raises:
        PlanarityError: if a fully reduced term yields a crossing partition,
            which means the input could not have been planar.
    """
    from .algebra import AlgebraElement

    num_vertices, edges = _kernel_encoding(d)
    kern = _reduce_py if trace is not None else _kernel
    raw = kern.reduce_terms(d.n, num_vertices, edges, rng=rng, trace=trace)
    max_power = max((k for vec in raw.values() for k in vec), default=0)
    powers = _qm1_powers(max_power)
    terms: dict[Partition, RationalFunctionQ] = {}
    for blocks, vec in raw.items():
        try:
            p = Partition(d.n, blocks)
        except Exception as exc:
            raise PlanarityError(
                f"reduction produced a non-basis partition {blocks}: {exc}"
            ) from exc
        coeff = ZERO
        for k, c in vec.items():
            coeff = coeff + powers[k] * RationalFunctionQ.from_rational(c)
        if not coeff.is_zero():
            terms[p] = coeff
    return AlgebraElement(d.n, terms)


def normalize_combination(c: RawCombination, *, rng=None, trace=None):
    """Linear extension of normalize; zero coefficients are dropped."""
    from .algebra import AlgebraElement, elem_add, elem_scale

    out = AlgebraElement(c.n, {})
    for coeff, d in c.terms:
        out = elem_add(out, elem_scale(coeff, normalize(d, rng=rng, trace=trace)))
    return out
