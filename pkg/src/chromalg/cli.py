"""Command line front end.

Subcommands: dim, basis, normalize, mul, table, decompose, verify.  All
output is JSON (one object, or NDJSON for streams); diagnostic text and
trace events go to stderr.  Exit codes: 0 success, 1 error or failed
verification, 2 order beyond the configured cap.

Caps come from defaults < config file (--config, JSON) < environment
(CHROMALG_MAX_ENUM_ORDER, CHROMALG_MAX_TABLE_ORDER).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .algebra import (
    CONVENTION,
    basis_element,
    element_from_json,
    element_to_json,
    elem_mul,
    identity_element,
    structure_constants,
)
from .diagram import beta, diagram_from_json, stack
from .errors import CapExceeded, DiagramError, OrderMismatch, PartitionError, PoleError
from .genset import decompose_basis, decompose_element, evaluate, expression_to_json
from .ncpartition import (
    enumerate_basis,
    partition_from_json,
    partition_to_json,
    riordan,
)
from .qscalar import rf_to_json
from .rewrite import normalize

__all__ = ["Config", "load_config", "build_parser", "main"]

ENV_ENUM_CAP = "CHROMALG_MAX_ENUM_ORDER"
ENV_TABLE_CAP = "CHROMALG_MAX_TABLE_ORDER"


@dataclass(frozen=True)
class Config:
    max_enumeration_order: int = 8
    max_table_order: int = 4
    parallelism: int = 1
    trace: bool = False
    out: str | None = None

    def __post_init__(self):
        if self.max_enumeration_order < 1 or self.max_table_order < 1:
            raise ValueError("caps must be positive")
        if self.max_table_order > self.max_enumeration_order:
            raise ValueError(
                f"table cap {self.max_table_order} exceeds enumeration cap "
                f"{self.max_enumeration_order}"
            )
        if self.parallelism < 1:
            raise ValueError("parallelism must be positive")


_CONFIG_KEYS = ("max_enumeration_order", "max_table_order", "parallelism")


def load_config(path: str | None = None, env=os.environ) -> Config:
    """Defaults, overridden by a JSON config file, overridden by environment
    variables (caps only)."""
    values = {}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
        for key, val in data.items():
            if key.startswith("_"):
                continue
            if key not in _CONFIG_KEYS:
                raise ValueError(f"unknown config key {key!r} in {path}")
            values[key] = int(val)
    if env.get(ENV_ENUM_CAP):
        values["max_enumeration_order"] = int(env[ENV_ENUM_CAP])
    if env.get(ENV_TABLE_CAP):
        values["max_table_order"] = int(env[ENV_TABLE_CAP])
    if "max_table_order" not in values:
        # a lowered enumeration cap drags the defaulted table cap down with it
        enum_cap = values.get("max_enumeration_order", Config.max_enumeration_order)
        values["max_table_order"] = min(Config.max_table_order, enum_cap)
    return Config(**values)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _emit(lines, out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _trace_callback(enabled: bool):
    if not enabled:
        return None
    return lambda event: print(_dumps(event), file=sys.stderr)


def cmd_dim(args, cfg: Config) -> int:
    n = args.n
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    rec = riordan(2 * n)
    if n > cfg.max_enumeration_order:
        _emit(
            [f"n={n} recurrence={rec} enumeration=skipped (cap {cfg.max_enumeration_order})"],
            cfg.out,
        )
        return 0
    count = len(enumerate_basis(n, cap=cfg.max_enumeration_order))
    verdict = "PASS" if count == rec else "FAIL"
    _emit([f"n={n} recurrence={rec} enumeration={count} {verdict}"], cfg.out)
    return 0 if verdict == "PASS" else 1


def cmd_basis(args, cfg: Config) -> int:
    basis = enumerate_basis(args.n, cap=cfg.max_enumeration_order)
    lines = [_dumps(partition_to_json(p)) for p in basis]
    lines.append(_dumps({"count": len(basis)}))
    _emit(lines, cfg.out)
    return 0


def cmd_normalize(args, cfg: Config) -> int:
    d = diagram_from_json(_load_json(args.diagram))
    x = normalize(d, trace=_trace_callback(cfg.trace))
    _emit([_dumps(element_to_json(x))], cfg.out)
    return 0


def cmd_mul(args, cfg: Config) -> int:
    a = element_from_json(_load_json(args.top))
    b = element_from_json(_load_json(args.bottom))
    _emit([_dumps(element_to_json(elem_mul(a, b)))], cfg.out)
    return 0


def cmd_table(args, cfg: Config) -> int:
    n = args.n
    table = structure_constants(n, cap=cfg.max_table_order, parallel=cfg.parallelism)
    basis = enumerate_basis(n, cap=cfg.max_enumeration_order)
    index = {p: i for i, p in enumerate(basis)}
    rows: dict[tuple[int, int], list] = {}
    for (p, q, r), c in table.items():
        rows.setdefault((index[p], index[q]), []).append([index[r], rf_to_json(c)])
    entries = []
    for i in range(len(basis)):
        for j in range(len(basis)):
            result = sorted(rows.get((i, j), []), key=lambda t: t[0])
            entries.append(_dumps({"left": i, "right": j, "result": result}))
    digest = hashlib.sha256(
        "".join(line + "\n" for line in entries).encode()
    ).hexdigest()
    header = _dumps(
        {
            "n": n,
            "convention": CONVENTION,
            "basis": [[list(b) for b in p.blocks] for p in basis],
            "entries": len(entries),
            "sha256": digest,
        }
    )
    _emit([header] + entries, cfg.out)
    return 0


def cmd_decompose(args, cfg: Config) -> int:
    data = _load_json(args.input)
    if not isinstance(data, dict):
        raise ValueError(f"{args.input} must hold a JSON object")
    if "blocks" in data:
        p = partition_from_json(data)
        if p.n > cfg.max_enumeration_order:
            raise CapExceeded(
                f"order {p.n} exceeds enumeration cap {cfg.max_enumeration_order}"
            )
        expr = decompose_basis(p)
        target = basis_element(p)
    elif "terms" in data:
        x = element_from_json(data)
        if x.n > cfg.max_enumeration_order:
            raise CapExceeded(
                f"order {x.n} exceeds enumeration cap {cfg.max_enumeration_order}"
            )
        expr = decompose_element(x)
        target = x
    else:
        raise ValueError(f"{args.input} is neither a partition nor an element")
    _emit([_dumps(expression_to_json(expr))], cfg.out)
    if args.verify:
        ok = evaluate(expr) == target
        print(f"verify: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
        return 0 if ok else 1
    return 0


def _warm_products(pairs, parallel: int) -> None:
    if parallel > 1 and pairs:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            list(pool.map(lambda pq: elem_mul(*pq), pairs))


def cmd_verify(args, cfg: Config) -> int:
    n = args.n
    if n > cfg.max_enumeration_order:
        print(
            f"order {n} exceeds enumeration cap {cfg.max_enumeration_order}; "
            "raise the cap to verify",
            file=sys.stderr,
        )
        return 2
    rng = random.Random(args.seed)
    basis = enumerate_basis(n, cap=cfg.max_enumeration_order)
    elems = [basis_element(p) for p in basis]
    results: list[tuple[str, bool]] = []

    results.append(("dimension", len(basis) == riordan(2 * n)))

    one = identity_element(n)
    sample = elems if len(elems) <= 15 else rng.sample(elems, 15)
    results.append(
        ("identity", all(elem_mul(one, x) == x == elem_mul(x, one) for x in sample))
    )

    if len(elems) ** 3 <= 27:
        triples = [(a, b, c) for a in elems for b in elems for c in elems]
    else:
        triples = [tuple(rng.choice(elems) for _ in range(3)) for _ in range(20)]
    _warm_products({(a, b) for a, b, _ in triples}, cfg.parallelism)
    results.append(
        (
            "associativity-sample",
            all(
                elem_mul(elem_mul(a, b), c) == elem_mul(a, elem_mul(b, c))
                for a, b, c in triples
            ),
        )
    )

    ok = True
    for _ in range(10):
        p, q = rng.choice(basis), rng.choice(basis)
        d = stack(beta(p), beta(q))
        base = normalize(d)
        for _ in range(3):
            alt = normalize(d, rng=random.Random(rng.randrange(2**32)))
            ok = ok and alt == base
    results.append(("confluence-sample", ok))

    sample_p = basis if len(basis) <= 20 else rng.sample(basis, 20)
    results.append(
        (
            "decomposition-round-trip",
            all(evaluate(decompose_basis(p)) == basis_element(p) for p in sample_p),
        )
    )

    for name, passed in results:
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
    return 0 if all(passed for _, passed in results) else 1


_COMMANDS = {
    "dim": cmd_dim,
    "basis": cmd_basis,
    "normalize": cmd_normalize,
    "mul": cmd_mul,
    "table": cmd_table,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="chromalg",
        description="exact computations in the chromatic algebra of planar diagrams",
    )
    ap.add_argument("--config", metavar="FILE", help="JSON file overriding caps")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    common.add_argument(
        "--parallel", type=int, default=1, metavar="K", help="worker threads"
    )
    common.add_argument(
        "--trace", action="store_true", help="NDJSON rewrite steps on stderr"
    )
    common.add_argument("--out", metavar="FILE", help="write output here, not stdout")
    common.add_argument("--format", choices=["json"], default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common], help="dimension by recurrence and count")
    p.add_argument("n", type=int)
    p = sub.add_parser("basis", parents=[common], help="stream the basis, NDJSON")
    p.add_argument("n", type=int)
    p = sub.add_parser("normalize", parents=[common], help="reduce a diagram file")
    p.add_argument("diagram", metavar="DIAGRAM.json")
    p = sub.add_parser("mul", parents=[common], help="multiply two element files")
    p.add_argument("top", metavar="TOP.json")
    p.add_argument("bottom", metavar="BOTTOM.json")
    p = sub.add_parser("table", parents=[common], help="structure-constant table")
    p.add_argument("n", type=int)
    p = sub.add_parser(
        "decompose", parents=[common], help="generator expression for a file"
    )
    p.add_argument("input", metavar="PARTITION_OR_ELEMENT.json")
    p.add_argument(
        "--verify", action="store_true", help="re-evaluate and report PASS/FAIL"
    )
    p = sub.add_parser("verify", parents=[common], help="run the built-in suites")
    p.add_argument("n", type=int)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        cfg = replace(
            cfg, parallelism=max(args.parallel, 1), trace=args.trace, out=args.out
        )
        return _COMMANDS[args.command](args, cfg)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: missing field {exc}", file=sys.stderr)
        return 1
    except (
        OrderMismatch,
        PartitionError,
        DiagramError,
        PoleError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
