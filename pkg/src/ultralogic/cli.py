"""Command-line front end.  Every subcommand prints one JSON report."""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import acceptance, algebra, consequence as cq, superstructure as ss
from .config import RunConfig, load_config
from .engines import operators
from .engines.behavior import (
    BPWord,
    Incomparable,
    adjective_close,
    better_than,
    bpc_bar,
    coerce,
    pi_w_close,
    sort_key,
)
from .engines.formula import parse
from .engines.perfect import pi_close, pi_prove_bounded
from .engines.propositional import hilbert_derives, mp_close, s0_derives
from .errors import UltralogicError
from .words import (
    Alphabet,
    Word,
    all_subword_codes,
    decode,
    encode,
    enumerate_class,
)

SCHEMA_VERSION = 1
CONFIG_ENV = "ULTRALOGIC_CONFIG"
COMMANDS = ("encode", "class", "close", "prove", "audit", "order", "chain", "basis", "superstructure", "suite")


class UsageError(Exception):
    pass


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc}") from None


def _json_list(text: str, what: str) -> list:
    value = _json_arg(text, what)
    if not isinstance(value, list):
        raise UsageError(f"{what} must be a JSON array")
    return value


def _sorted_formulas(xs) -> list[str]:
    return sorted((str(x) for x in xs), key=lambda s: (len(s), s))


def _sorted_words(xs) -> list[str]:
    return [str(x) for x in sorted(xs, key=sort_key)]


# ---------------------------------------------------------------- operator specs


def resolve_op(spec: str, cfg: RunConfig, size: int | None = None, universe=None) -> cq.ClosureOperator:
    """``name[:param]``: cap for ``mp``, depth for word engines, size for units."""
    name, _, param = spec.partition(":")
    value = int(param) if param else None
    if name in ("identity", "upper"):
        if universe is None:
            universe = range(value if value is not None else (size or 4))
        return operators.build(name, universe=universe)
    if name == "mp":
        return operators.mp_operator(value)
    if name in ("adjective", "pi_w"):
        return operators.build(name, base=tuple(cfg.base), depth=value if value is not None else cfg.depth)
    if name == "pi":
        return operators.build(name, base=tuple(cfg.base), depth=value if value is not None else cfg.depth)
    if name == "s0":
        return operators.s0_operator(operators.mp_universe())
    raise UsageError(f"unknown operator {spec!r}")


def resolve_family(specs: list[str], cfg: RunConfig, size: int | None = None) -> list[cq.ClosureOperator]:
    """Units pick up the universe of the first non-unit operator in the list."""
    concrete = [s for s in specs if s.partition(":")[0] not in ("identity", "upper")]
    shared = resolve_op(concrete[0], cfg).universe if concrete else None
    return [resolve_op(s, cfg, size, shared if s.partition(":")[0] in ("identity", "upper") else None) for s in specs]


def lookup_elements(op: cq.ClosureOperator, items: list) -> frozenset:
    table = {str(x): x for x in op.universe}
    out = set()
    for item in items:
        key = str(item)
        if key not in table:
            try:
                key = str(parse(key))
            except ValueError:
                pass
        if key not in table:
            raise UsageError(f"{item!r} is not in the universe of {op.name}")
        out.add(table[key])
    return frozenset(out)


# ---------------------------------------------------------------- commands


def cmd_encode(args, cfg):
    alphabet = Alphabet(tuple(_json_list(args.alphabet, "--alphabet") if args.alphabet else cfg.alphabet))
    inputs = {"alphabet": list(alphabet.symbols), "word": args.word, "code": args.code}
    if args.word is not None:
        w = Word.parse(args.word, alphabet)
        results = {"word": str(w), "glyphs": list(w.glyphs), "code": encode(w, alphabet)}
    elif args.code is not None:
        w = decode(args.code, alphabet)
        results = {"word": str(w), "glyphs": list(w.glyphs), "code": args.code}
    else:
        raise UsageError("encode needs --word or --code")
    return inputs, results


def cmd_class(args, cfg):
    alphabet = Alphabet(tuple(_json_list(args.alphabet, "--alphabet") if args.alphabet else cfg.alphabet))
    w = Word.parse(args.word, alphabet)
    H = _json_list(args.codes, "--codes") if args.codes else sorted(all_subword_codes(w, alphabet))
    cls = enumerate_class(w, H, alphabet)
    members = sorted(cls.members, key=lambda f: (f.dom_upper, f.entries))
    inputs = {"alphabet": list(alphabet.symbols), "word": args.word, "codes": H}
    results = {
        "word": str(w),
        "size": len(cls),
        "degrees": {str(k): v for k, v in cls.degrees().items()},
        "members": [
            {"entries": list(f.entries), "segments": [str(s) for s in f.segments(alphabet)]}
            for f in members
        ],
    }
    return inputs, results


def cmd_close(args, cfg):
    items = _json_list(args.inp, "--in")
    engine = args.engine
    inputs = {"engine": engine, "in": items, "cap": args.cap, "depth": args.depth}
    if engine == "adjective":
        out = _sorted_words(adjective_close(items))
    elif engine == "pi_w":
        given = [coerce(x) for x in items]
        words = [x for x in given if isinstance(x, BPWord)]
        base = list(dict.fromkeys(list(cfg.base) + [x.base for x in words]))
        depth = max([args.depth if args.depth is not None else cfg.depth] + [x.very_count for x in words])
        out = _sorted_words(pi_w_close(given, bpc_bar(base, depth)))
    elif engine == "pi":
        out = _sorted_formulas(pi_close(items))
    elif engine == "mp":
        out = _sorted_formulas(mp_close(items, args.cap))
    elif engine == "s0":
        universe = _json_list(args.universe, "--universe") if args.universe else None
        formulas = [parse(x) for x in items]
        if universe is None:
            pool = {s for f in formulas for s in f.subformulas()}
        else:
            pool = {parse(x) for x in universe}
        inputs["universe"] = universe
        out = _sorted_formulas(x for x in pool if s0_derives(formulas, x))
    elif engine == "identity":
        out = sorted(str(x) for x in items)
    else:
        raise UsageError(f"close does not support engine {engine!r}")
    return inputs, {"closure": out, "size": len(out)}


def cmd_prove(args, cfg):
    premises = _json_list(args.premises, "--premises")
    budget = args.max_steps if args.max_steps is not None else cfg.step_budget
    inputs = {"pi": args.pi, "premises": premises, "goal": args.goal, "max_steps": budget}
    if args.pi:
        proof = pi_prove_bounded(premises, args.goal, budget)
        results = {"found": proof is not None, "in_closed_form": parse(args.goal) in pi_close(premises)}
        if proof is not None:
            results["proof"] = proof.to_dict()
            results["valid"] = proof.validate(premises)
        return inputs, results
    results = {"derivable": s0_derives(premises, args.goal)}
    if args.hilbert:
        results["hilbert"] = hilbert_derives(premises, args.goal)
    return inputs, results


def cmd_audit(args, cfg):
    op = resolve_op(args.op, cfg, args.universe_size)
    which = [int(a) for a in args.axioms.split(",")]
    samples = args.samples if args.samples is not None else (cfg.samples if len(op.universe) > cq.EXHAUSTIVE_CAP else None)
    inputs = {"op": args.op, "universe_size": args.universe_size, "axioms": which, "samples": samples}
    report = cq.check_axioms(op, which, samples=samples, seed=cfg.seed)
    return inputs, report.to_dict()


def cmd_order(args, cfg):
    if args.ops:
        family = resolve_family(args.ops, cfg, args.universe_size)
        matrix = [[algebra.stronger_than(a, b) for b in family] for a in family]
        return {"ops": args.ops}, {"names": [c.name for c in family], "stronger_than": matrix}
    left = _json_list(args.left, "--left")
    right = _json_list(args.right, "--right")
    inputs = {"kind": args.kind, "left": left, "right": right}
    if args.kind == "length":
        return inputs, {"left_le_right": algebra.length_order(left, right), "right_le_left": algebra.length_order(right, left)}
    if args.kind == "better":
        pairs = []
        for x in left:
            for y in right:
                r = better_than(x, y)
                pairs.append({"left": x, "right": y, "le": "incomparable" if r is Incomparable else r})
        return inputs, {"pairs": pairs, "set_le": algebra.set_better_than(left, right)}
    raise UsageError("order needs --ops or --kind with --left/--right")


def cmd_chain(args, cfg):
    if args.premises:
        B = [parse(x) for x in _json_list(args.premises, "--premises")]
        per_cap = {}
        top = max((i for f in B for i in f.primitive_indices()), default=-1)
        for n in range(top + 1):
            per_cap[str(n)] = _sorted_formulas(mp_close(B, n))
        results = {
            "per_cap": per_cap,
            "union": _sorted_formulas(algebra.chain_union_closure(B)),
            "uncapped": _sorted_formulas(mp_close(B)),
            "stabilization_cap": algebra.stabilization_cap(B),
        }
        results["union_equals_uncapped"] = results["union"] == results["uncapped"]
        return {"premises": [str(f) for f in B]}, results
    specs = args.ops or ["mp:0", "mp:1", "mp:2", "mp:3"]
    report = algebra.is_chain(resolve_family(specs, cfg, args.universe_size))
    return {"ops": specs}, report.to_dict()


def cmd_basis(args, cfg):
    op = resolve_op(args.op, cfg)
    items = _json_list(args.inp, "--in")
    B = lookup_elements(op, items)
    F = algebra.minimal_finite_basis(op, B)
    show = _sorted_words if isinstance(next(iter(op.universe)), BPWord) else _sorted_formulas
    return {"op": args.op, "in": items}, {"basis": show(F), "closure": show(op(B))}


def cmd_superstructure(args, cfg):
    ground_value = ss.parse_vset(args.ground)
    if ss.is_atom(ground_value):
        raise UsageError("--ground must be a set literal")
    depth = args.depth if args.depth is not None else cfg.superstructure_depth
    s = ss.build_superstructure(ground_value, depth)
    levels = []
    for n in range(depth + 1):
        ok, mode = s.is_x0_transitive(n)
        row = {"level": n, "size": s.size(n).to_dict(), "x0_transitive": ok, "mode": mode, "n_atomic": ss.is_n_atomic(s.ground, n, s)}
        if n < depth:
            drop, drop_mode = s.members_drop_a_level(n)
            row["members_drop_a_level"] = drop
        levels.append(row)
    tc = ss.transitive_closure(ground_value)
    results = {
        "ground": ss.render(ground_value),
        "levels": levels,
        "transitive_closure": ss.render(tc),
        "atomicity_premise": ss.atomicity_premise(s.ground),
    }
    return {"ground": args.ground, "depth": depth}, results


def cmd_suite(args, cfg):
    criteria = acceptance.run_suite(cfg.seed)
    for c in criteria:
        print(c.line(), file=sys.stderr)
    results = {
        "passed": all(c.passed for c in criteria),
        "criteria": [c.to_dict(timing=args.timing) for c in criteria],
    }
    return {"seed": cfg.seed}, results


HANDLERS = {
    "encode": cmd_encode,
    "class": cmd_class,
    "close": cmd_close,
    "prove": cmd_prove,
    "audit": cmd_audit,
    "order": cmd_order,
    "chain": cmd_chain,
    "basis": cmd_basis,
    "superstructure": cmd_superstructure,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=f"JSON config file (default: ${CONFIG_ENV})")
    common.add_argument("--seed", type=int, help="override the config seed")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")

    parser = argparse.ArgumentParser(prog="ultralogic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="word <-> code")
    p.add_argument("--word")
    p.add_argument("--code", type=int)
    p.add_argument("--alphabet", help="JSON list of glyphs")

    p = sub.add_parser("class", parents=[common], help="all partial sequences reading a word")
    p.add_argument("--word", required=True)
    p.add_argument("--codes", help="JSON list of allowed codes (default: every subword)")
    p.add_argument("--alphabet", help="JSON list of glyphs")

    p = sub.add_parser("close", parents=[common], help="run one engine's closure")
    p.add_argument("--engine", required=True, choices=["identity", "adjective", "pi_w", "pi", "mp", "s0"])
    p.add_argument("--in", dest="inp", required=True, help="JSON list")
    p.add_argument("--cap", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--universe", help="JSON list of candidate conclusions (s0)")

    p = sub.add_parser("prove", parents=[common], help="bounded proof search or entailment")
    p.add_argument("--pi", action="store_true", help="use the strong perfect calculus")
    p.add_argument("--premises", required=True, help="JSON list")
    p.add_argument("--goal", required=True)
    p.add_argument("--max-steps", type=int)
    p.add_argument("--hilbert", action="store_true", help="also run the bounded Hilbert cross-check")

    p = sub.add_parser("audit", parents=[common], help="check the closure axioms")
    p.add_argument("--op", required=True)
    p.add_argument("--universe-size", type=int)
    p.add_argument("--axioms", default="2,3,4,5")
    p.add_argument("--samples", type=int)

    p = sub.add_parser("order", parents=[common], help="stronger-than, length and better-than orders")
    p.add_argument("--ops", nargs="+")
    p.add_argument("--kind", choices=["length", "better"])
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--universe-size", type=int)

    p = sub.add_parser("chain", parents=[common], help="chain test or capped-closure union")
    p.add_argument("--ops", nargs="+")
    p.add_argument("--premises", help="JSON list of formulas")
    p.add_argument("--universe-size", type=int)

    p = sub.add_parser("basis", parents=[common], help="minimal generating subset")
    p.add_argument("--op", required=True)
    p.add_argument("--in", dest="inp", required=True, help="JSON list")

    p = sub.add_parser("superstructure", parents=[common], help="levels, transitivity, closure")
    p.add_argument("--ground", required=True, help="set literal, e.g. '{a, {a}}'")
    p.add_argument("--depth", type=int)

    sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    return parser


def _config(args) -> RunConfig:
    path = args.config or os.environ.get(CONFIG_ENV)
    cfg = load_config(path) if path else RunConfig().validate()
    if args.seed is not None:
        cfg.seed = args.seed
    return cfg


def digest(inputs: dict) -> str:
    blob = json.dumps(inputs, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(blob.encode()).hexdigest()


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        cfg = _config(args)
        inputs, results = HANDLERS[args.command](args, cfg)
    except (UsageError, UltralogicError, ValueError) as exc:
        print(f"ultralogic {args.command}: error: {exc}", file=sys.stderr)
        return 2
    inputs = dict(inputs, config=cfg.to_dict())
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": inputs,
        "inputs_digest": digest(inputs),
        "results": results,
    }
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    text = json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    out = args.out or cfg.output
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.command == "suite" and not results["passed"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
