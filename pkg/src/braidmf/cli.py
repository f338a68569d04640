"""Batch verification front-end.

One subcommand per verified result; deterministic seeds; JSON reports
with a versioned schema (same inputs and seed give byte-identical
output).  Exit status: 0 all checks pass, 1 any check failed, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bmf import (
    SurfaceParams,
    cusp_cluster_factorization,
    distinguishable,
    factor_census,
    generate_bmf,
    stable_profile,
    surface_counts,
    tangent_cluster_factorization,
)
from .braid import BraidElement, BraidWord, braid_equal
from .f2sym import (
    arf,
    arf_oracle,
    build_cross_space,
    classify_cross,
    horizontal_obstruction,
    omitted_vectors,
    q_eval,
    quadratic_from_basis,
    symplectic_basis,
)
from .hurwitz import Factorization, act_moves, orbit_search
from .perm import Perm
from .s4orbit import (
    WINDOW_DERIVATIONS,
    property_run,
    replay_derivation,
    snake_table,
    verify_nonconjugacy,
)

SCHEMA = 1


def _check(name, ok, details=""):
    return {
        "name": name,
        "status": "pass" if ok else "fail",
        "details": details,
    }


def _skip(name, details=""):
    return {"name": name, "status": "skipped", "details": details}


def _report(command, params, checks, notes=(), seed=None, trials=None):
    return {
        "schema": SCHEMA,
        "command": command,
        "params": params,
        "notes": list(notes),
        "checks": checks,
        "seed": seed,
        "trials": trials,
    }


def _emit(report, as_json):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"command: {report['command']}")
        if report["params"]:
            print(f"params: {report['params']}")
        for note in report["notes"]:
            print(f"note: {note}")
        for c in report["checks"]:
            line = f"{c['status'].upper():7s} {c['name']}"
            if c["details"]:
                line += f" — {c['details']}"
            print(line)
    failed = any(c["status"] == "fail" for c in report["checks"])
    return 1 if failed else 0


def _ints(text):
    return tuple(int(x) for x in text.split(",") if x.strip())


# ---------------------------------------------------------------------------
# verify subcommands


def cmd_verify_snake_table(args):
    checks = []
    rows = snake_table()
    agree = sum(r["agree"] for r in rows)
    checks.append(
        _check(
            "snake window table",
            agree == 16,
            f"{agree}/16 windows: direct rule == word action",
        )
    )
    for idx, lines in enumerate(WINDOW_DERIVATIONS, start=1):
        replay = replay_derivation(lines[0])
        checks.append(
            _check(
                f"worked derivation {idx}",
                replay == lines,
                "all 6 lines reproduced"
                if replay == lines
                else "line mismatch",
            )
        )
    return _emit(_report("verify snake-table", {}, checks), args.json)


def cmd_verify_nonconj(args):
    rep = verify_nonconjugacy(args.b, args.d, trials=args.trials, seed=args.seed)
    checks = [
        _check(
            "pair-twist non-conjugacy",
            rep["verdict"].startswith("not conjugate"),
            f"M_left={rep['M_left']} (parities {rep['left_parities']}), "
            f"M_right={rep['M_right']} (parity {rep['right_parity']})",
        )
    ]
    rep = _report(
        "verify nonconj",
        {"b": args.b, "d": args.d},
        checks,
        notes=[rep["convention"]],
        seed=args.seed,
        trials=args.trials,
    )
    return _emit(rep, args.json)


def cmd_verify_s7(args):
    checks = []
    rows = snake_table(args.b, args.d)
    agree = sum(r["agree"] for r in rows)
    checks.append(
        _check("snake window table", agree == 16, f"{agree}/16 windows")
    )
    run = property_run(args.b, args.d, trials=args.trials, seed=args.seed)
    v = run["violations"]
    checks.append(
        _check(
            "orbit-superset closure",
            v["orbit"] == 0,
            f"{v['orbit']} violations / {args.trials} words",
        )
    )
    checks.append(
        _check(
            "change-count evenness",
            v["evenness"] == 0,
            f"{v['evenness']} violations",
        )
    )
    checks.append(
        _check(
            "M-parity conservation",
            v["m_parity"] == 0,
            f"{v['m_parity']} violations",
        )
    )
    rep = verify_nonconjugacy(args.b, args.d, trials=args.trials, seed=args.seed)
    checks.append(
        _check(
            "pair-twist non-conjugacy",
            rep["verdict"].startswith("not conjugate"),
            f"M values {rep['M_left']}/{rep['M_right']}, "
            f"parities {rep['left_parities']} vs {rep['right_parity']}",
        )
    )
    rep = _report(
        "verify s7",
        {"b": args.b, "d": args.d},
        checks,
        notes=[rep["convention"]],
        seed=args.seed,
        trials=args.trials,
    )
    return _emit(rep, args.json)


def _exp_sum(elt):
    return sum(s for _, s in elt.word.letters)


def cmd_verify_cluster(args):
    checks = []
    start, target, product_word = cusp_cluster_factorization()
    stated = BraidElement(product_word)
    checks.append(
        _check(
            "cusp-cluster target product",
            target.product().equal_as_braids(stated),
            "product of the four factors equals the stated word",
        )
    )
    checks.append(
        _check(
            "cusp-cluster start product",
            start.product().equal_as_braids(stated),
            "scrambled start has the same product",
        )
    )
    exps = [_exp_sum(f) for f in target.elements]
    checks.append(
        _check(
            "cusp-cluster factor types",
            sorted(exps) == [1, 3, 3, 3],
            f"exponent sums {exps}: three cubes, one tangency twist",
        )
    )
    res = orbit_search(start, target, max_depth=args.max_depth)
    checks.append(
        _check(
            "cusp-cluster search path",
            res.found,
            f"path of {len(res.moves)} moves within depth bound "
            f"{args.max_depth}; {res.visited} nodes visited",
        )
    )
    tang = tangent_cluster_factorization()
    checks.append(
        _check(
            "tangent-cluster shape",
            tang.elements[0] == tang.elements[2]
            and tang.elements[1] == tang.elements[3]
            and all(_exp_sum(f) == 1 for f in tang.elements),
            "factors 1=3 and 2=4, all conjugated single twists",
        )
    )
    return _emit(
        _report("verify cluster", {"max_depth": args.max_depth}, checks),
        args.json,
    )


# ---------------------------------------------------------------------------
# bmf subcommands


def cmd_bmf_gen(args):
    p = SurfaceParams(args.a, args.b, args.c, args.d)
    f = generate_bmf(p)
    doc = f.to_json()
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"params: {doc['params']}")
        if p.toy:
            print("note: outside geometric hypothesis (some parameter < 3)")
        if p.excluded:
            print("note: excluded parameter line for the weighted counts")
        print(f"blocks: {len(f.blocks)}, factors: {doc['census']['length']}")
        print(f"census: {doc['census']}")
    return 0


def cmd_bmf_counts(args):
    p = SurfaceParams(args.a, args.b, args.c, args.d)
    c = surface_counts(p)
    doc = dict(vars(c))
    checks = [
        _check(
            "holomorphic-invariant identity",
            8 * c.chi - c.K2 == 8 * (p.a * p.b + p.c * p.d),
            "chi - K2/8 == ab + cd",
        ),
        _check(
            "branch-genus expanded form",
            c.gR
            == 1
            + 8 * (p.a + p.c) * (p.b + p.d)
            - 4 * (p.a + p.b + p.c + p.d),
            "gR matches its expanded form",
        ),
    ]
    rep = _report(
        "bmf counts",
        {"a": p.a, "b": p.b, "c": p.c, "d": p.d},
        checks,
    )
    rep["counts"] = doc
    code = _emit(rep, args.json)
    if not args.json:
        print(f"counts: {doc}")
    return code


def cmd_bmf_distinguish(args):
    p = SurfaceParams(args.a, args.b, args.c, args.d)
    p2 = SurfaceParams(args.a2, args.b2, args.c2, args.d2)
    verdict = distinguishable(p, p2)
    rep = _report(
        "bmf distinguish",
        {
            "first": [p.a, p.b, p.c, p.d],
            "second": [p2.a, p2.b, p2.c, p2.d],
        },
        [_check("distinguishability", True, verdict)],
    )
    rep["verdict"] = verdict
    rep["profiles"] = [stable_profile(p), stable_profile(p2)]
    return _emit(rep, args.json)


# ---------------------------------------------------------------------------
# f2 subcommands


def cmd_arf(args):
    space = build_cross_space(args.a, args.c)
    q = quadratic_from_basis(space)
    bit = arf(q)
    checks = [_check("arf", True, f"Arf = {bit}")]
    if space.dim <= 20:
        oracle = arf_oracle(q)
        checks.append(
            _check(
                "arf oracle",
                bit == oracle,
                f"zero-count oracle gives {oracle}",
            )
        )
    else:
        checks.append(
            _skip("arf oracle", f"dimension {space.dim} beyond oracle cap")
        )
    if (args.a + args.c) % 2 == 0:
        checks.append(
            _check(
                "arf parity",
                bit == args.a % 2,
                "Arf = a mod 2 for even a+c",
            )
        )
    rep = _report(
        "arf",
        {"a": args.a, "c": args.c, "dim": space.dim},
        checks,
        notes=[f"basis labels: {', '.join(space.labels)}"],
    )
    rep["arf"] = bit
    return _emit(rep, args.json)


def cmd_classify(args):
    info = classify_cross(args.a, args.c)
    rep = _report(
        "classify",
        {"a": args.a, "c": args.c},
        [_check("transvection group", True, info["verdict"])],
        notes=["criterion-based classification (diagram shape + q values)"],
    )
    rep["result"] = info
    return _emit(rep, args.json)


def cmd_obstruct(args):
    verdict = horizontal_obstruction(args.a, args.c, args.a2, args.c2)
    rep = _report(
        "obstruct",
        {"a": args.a, "c": args.c, "a2": args.a2, "c2": args.c2},
        [_check("horizontal obstruction", True, verdict["verdict"])],
    )
    rep["result"] = verdict
    return _emit(rep, args.json)


# ---------------------------------------------------------------------------
# braid / hurwitz subcommands


def cmd_braid_eq(args):
    w1 = BraidWord.from_signed(args.strands, _ints(args.word1))
    w2 = BraidWord.from_signed(args.strands, _ints(args.word2))
    equal = braid_equal(w1, w2)
    rep = _report(
        "braid eq",
        {
            "strands": args.strands,
            "word1": list(_ints(args.word1)),
            "word2": list(_ints(args.word2)),
        },
        [
            _check(
                "braid equality",
                equal,
                "words are equal as braids"
                if equal
                else "words differ as braids",
            )
        ],
    )
    return _emit(rep, args.json)


def _load_elements(doc):
    group = doc["group"]
    if group == "s4":
        return tuple(Perm.from_json(e) for e in doc["elements"]), group
    if group == "braid":
        n = doc["strands"]
        return (
            tuple(
                BraidElement(BraidWord.from_signed(n, tuple(e)))
                for e in doc["elements"]
            ),
            group,
        )
    raise ValueError(f"unsupported factorization group {group!r}")


def _dump_elements(elements, group, doc):
    if group == "s4":
        out = [e.to_json() for e in elements]
    else:
        out = [list(e.word.to_signed()) for e in elements]
    result = {"group": group, "elements": out}
    if "strands" in doc:
        result["strands"] = doc["strands"]
    return result


def cmd_hurwitz_act(args):
    with open(args.file) as fh:
        doc = json.load(fh)
    elements, group = _load_elements(doc)
    moves = _ints(args.moves)
    out = act_moves(Factorization(elements), moves)
    print(
        json.dumps(
            _dump_elements(out.elements, group, doc), indent=2, sort_keys=True
        )
    )
    return 0


def cmd_hurwitz_search(args):
    with open(args.file) as fh:
        doc = json.load(fh)
    start, group = _load_elements({**doc, "elements": doc["start"]})
    target, _ = _load_elements({**doc, "elements": doc["target"]})
    res = orbit_search(
        Factorization(start), Factorization(target), max_depth=args.max_depth
    )
    rep = _report(
        "hurwitz search",
        {"file": args.file, "max_depth": args.max_depth},
        [
            _check(
                "path search",
                res.found,
                f"moves {list(res.moves)}, visited {res.visited}, "
                f"depth reached {res.depth_reached}",
            )
        ],
    )
    return _emit(rep, args.json)


# ---------------------------------------------------------------------------
# parser


def _add_json(p):
    p.add_argument("--json", action="store_true", help="emit a JSON report")


def _add_rand(p):
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)


def _add_abcd(p, suffix=""):
    for name in ("a", "b", "c", "d"):
        p.add_argument(f"--{name}{suffix}", type=int, required=True)


def build_parser():
    top = argparse.ArgumentParser(
        prog="braidmf", description=__doc__.splitlines()[0]
    )
    sub = top.add_subparsers(dest="command", required=True)

    ver = sub.add_parser("verify", help="verification suites")
    vsub = ver.add_subparsers(dest="subcommand", required=True)

    p = vsub.add_parser("snake-table")
    _add_json(p)
    p.set_defaults(func=cmd_verify_snake_table)

    p = vsub.add_parser("nonconj")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_rand(p)
    _add_json(p)
    p.set_defaults(func=cmd_verify_nonconj)

    p = vsub.add_parser("s7")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_rand(p)
    _add_json(p)
    p.set_defaults(func=cmd_verify_s7)

    p = vsub.add_parser("cluster")
    p.add_argument("--max-depth", type=int, default=6)
    _add_json(p)
    p.set_defaults(func=cmd_verify_cluster)

    bmf = sub.add_parser("bmf", help="factorization generator and counts")
    bsub = bmf.add_subparsers(dest="subcommand", required=True)

    p = bsub.add_parser("gen")
    _add_abcd(p)
    _add_json(p)
    p.set_defaults(func=cmd_bmf_gen)

    p = bsub.add_parser("counts")
    _add_abcd(p)
    _add_json(p)
    p.set_defaults(func=cmd_bmf_counts)

    p = bsub.add_parser("distinguish")
    _add_abcd(p)
    _add_abcd(p, "2")
    _add_json(p)
    p.set_defaults(func=cmd_bmf_distinguish)

    p = sub.add_parser("arf")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=cmd_arf)

    p = sub.add_parser("classify")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("obstruct")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=cmd_obstruct)

    braid = sub.add_parser("braid")
    brsub = braid.add_subparsers(dest="subcommand", required=True)
    p = brsub.add_parser("eq")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word1", required=True, help="comma-separated signed indices")
    p.add_argument("--word2", required=True)
    _add_json(p)
    p.set_defaults(func=cmd_braid_eq)

    hur = sub.add_parser("hurwitz")
    hsub = hur.add_subparsers(dest="subcommand", required=True)
    p = hsub.add_parser("act")
    p.add_argument("--file", required=True)
    p.add_argument("--moves", required=True, help="comma-separated signed moves")
    p.set_defaults(func=cmd_hurwitz_act)
    p = hsub.add_parser("search")
    p.add_argument("--file", required=True)
    p.add_argument("--max-depth", type=int, default=6)
    _add_json(p)
    p.set_defaults(func=cmd_hurwitz_search)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
