"""Command-line front end.

Exit codes: 0 success, 1 invariant failure, 2 input error, 3 resource refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import corpus as cp
from .core import PointConfig, complex_to_json, f_vector, format_complex, format_face
from .latpath import (
    LatticePath,
    PathError,
    demarcation,
    lpm,
    marking_path,
    parse_path,
    paths_between,
    statistic,
    weakly_above,
)
from .matroid import MatroidError, matroid_from_descriptor
from .oracle import MAX_COORDS, OracleError, standard_complex
from .stdcomplex import LexCache, lambda_table, lex_standard_complex_matroid

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_json(text: str):
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from None
    elif text == "-":
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def cmd_std(args) -> int:
    M = matroid_from_descriptor(_load_json(args.descriptor), validate=not args.skip_validate)
    S = lex_standard_complex_matroid(M)
    out = {"faces": complex_to_json(S), "f_vector": f_vector(S), "n_bases": len(M.bases)}
    text = "\n".join(
        [
            f"faces: {format_complex(S)}",
            f"f_vector: {f_vector(S)}",
            f"bases: {len(M.bases)}",
        ]
    )
    _emit(out, args.json, text)
    return EXIT_OK


def cmd_bijection(args) -> int:
    desc = _load_json(args.descriptor)
    M = matroid_from_descriptor(desc, validate=not args.skip_validate)
    T = lambda_table(M)
    S = lex_standard_complex_matroid(M)
    out = {"faces": complex_to_json(S), "f_vector": f_vector(S), "bijection": T.to_json()}
    lines = [f"{format_face(B)} -> {format_face(F)}" for B, F in T.sorted_items()]
    status = EXIT_OK
    if desc.get("type") == "lattice_path":
        L = parse_path(desc["L"])
        rows = []
        for c in paths_between(desc["U"], L):
            C = LatticePath(c)
            st = statistic(C, L)
            agree = st == T[C.east_set]
            status = status if agree else EXIT_FAIL
            rows.append({"path": c, "statistic": sorted(st), "agrees": agree})
            lines.append(f"{c}: st={format_face(st)}{'' if agree else '  MISMATCH'}")
        out["statistics"] = rows
    _emit(out, args.json, "\n".join(lines))
    return status


def cmd_lpm(args) -> int:
    U, L = parse_path(args.U), parse_path(args.L)
    if not weakly_above(U, L):
        raise PathError(f"{U.word} is not weakly above {L.word}")
    M = lpm(U, L)
    S = lex_standard_complex_matroid(M)
    out = {
        "U": U.word,
        "L": L.word,
        "n": len(U),
        "d": U.d,
        "n_bases": len(M.bases),
        "faces": complex_to_json(S),
        "f_vector": f_vector(S),
    }
    lines = [
        f"M[{U.word}, {L.word}]  n={len(U)} d={U.d} bases={len(M.bases)}",
        f"S_lex: {format_complex(S)}",
        f"f_vector: {f_vector(S)}",
    ]
    if args.bijection_table:
        T = lambda_table(M)
        out["bijection"] = T.to_json()
        lines.append("bijection:")
        lines.extend(f"  {format_face(B)} -> {format_face(F)}" for B, F in T.sorted_items())
    if args.stat is not None:
        C = parse_path(args.stat)
        mar = marking_path(C, L)
        st = statistic(C, L)
        out.update(
            path=C.word,
            statistic=sorted(st),
            marked=sorted(mar.marked),
            demarcation=list(demarcation(C, L).word),
            marking=mar.word,
        )
        lines += [
            f"C = {C.word}",
            f"demarcation: {demarcation(C, L)}",
            f"marking: {mar}",
            f"statistic: {format_face(st)}",
        ]
        if args.render == "ascii":
            from .render import render_ascii

            lines += ["", render_ascii(C, L, U)]
        elif args.render == "svg":
            from .render import render_svg

            lines = [render_svg(C, L, U)]
    elif args.render:
        raise InputError("--render needs a path given with --stat")
    if args.render == "svg" and args.stat is not None and not args.json:
        print(lines[0])
    else:
        _emit(out, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_oracle(args) -> int:
    obj = _load_json(args.config)
    try:
        V = PointConfig.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"config needs 'coords' and 'points': {exc}") from None
    if len(V.coords) > MAX_COORDS:
        raise cp.ResourceLimit(f"{len(V.coords)} coordinates exceed the cap of {MAX_COORDS}")
    S = standard_complex(V, args.order)
    _emit({"faces": complex_to_json(S), "f_vector": f_vector(S)}, args.json, format_complex(S))
    return EXIT_OK


def _verify_plan(args, spec: cp.CorpusSpec):
    if args.max_n > cp.MAX_LPM_N:
        raise cp.ResourceLimit(f"--max-n {args.max_n} exceeds the cap of {cp.MAX_LPM_N}")
    if spec.max_n() > MAX_COORDS:
        raise cp.ResourceLimit(f"corpus max_n {spec.max_n()} exceeds the oracle cap of {MAX_COORDS}")
    corpus = cp.build_corpus(spec)
    ms = corpus.matroids
    cache = LexCache()
    seed = args.seed
    sweep = args.max_n
    checks = [
        ("validation", lambda: [f"{name}: {msg}" for name, msg in corpus.invalid] + cp.check_exchange(ms)),
        ("oracle equivalence", lambda: cp.check_oracle_equivalence(ms, cache)),
        ("slice recursion agreement", lambda: cp.check_config_agreement(ms, cache)),
        ("cardinality and subcomplex", lambda: cp.check_cardinality_subcomplex(ms, cache)),
        ("duality", lambda: cp.check_duality(ms, cache)),
        ("bijection axioms", lambda: cp.check_lambda_axioms(ms, cache)),
        ("pointwise bijection", lambda: cp.check_pointwise_lambda(ms, cache)),
        ("mapping cone", lambda: cp.check_mapping_cone(ms, cache)),
        ("vanishing generators", lambda: cp.check_vanishing(ms)),
        ("random configurations vs oracle", lambda: cp.check_random_config_oracle(seed, per_n=args.per_n)),
        ("reflection", lambda: cp.check_reflection(seed, per_n=args.per_n)),
        ("statistic = bijection", lambda: cp.check_statistic_lambda(sweep, cache)),
        ("hooks = scan = marking", lambda: cp.check_hooks(min(cp.MAX_LPM_N, sweep + 2))),
        ("restriction", lambda: cp.check_restriction(seed, args.triples, sweep, cache)),
        ("statistic decomposition", lambda: cp.check_decomposition(sweep)),
    ]
    return len(ms), checks


def cmd_verify(args) -> int:
    spec = cp.CorpusSpec.from_json(_load_json(args.corpus)) if args.corpus else cp.CorpusSpec()
    size, checks = _verify_plan(args, spec)
    results = []
    for name, run in checks:
        t0 = time.perf_counter()
        bad = run()
        results.append((name, bad, time.perf_counter() - t0))
    results.sort(key=lambda r: r[0])
    ok = all(not bad for _, bad, _ in results)
    if args.json:
        print(
            json.dumps(
                {
                    "corpus_size": size,
                    "passed": ok,
                    "checks": [{"name": n, "passed": not b, "counterexamples": b[:20]} for n, b, _ in results],
                },
                sort_keys=True,
            )
        )
    else:
        print(f"corpus: {size} matroids")
        for name, bad, _ in results:
            print(f"{'PASS' if not bad else 'FAIL'}  {name}")
            for line in bad[:20]:
                print(f"      {line}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stdcomplexes",
        description="Lexicographic standard complexes of matroids and lattice path matroids.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")

    def descriptor(sp):
        sp.add_argument("descriptor", help="JSON text, @file, or - for stdin")
        sp.add_argument("--skip-validate", action="store_true", help="trust the basis list without exchange checks")

    sp = sub.add_parser("std", help="standard complex of a matroid descriptor")
    descriptor(sp)
    common(sp)
    sp.set_defaults(func=cmd_std)

    sp = sub.add_parser("bijection", help="basis -> face table")
    descriptor(sp)
    common(sp)
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("lpm", help="lattice path matroid between two boundaries")
    sp.add_argument("--U", required=True, help="upper boundary word")
    sp.add_argument("--L", required=True, help="lower boundary word")
    sp.add_argument("--stat", metavar="PATH", help="report statistic of this path")
    sp.add_argument("--render", choices=("ascii", "svg"))
    sp.add_argument("--bijection-table", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_lpm)

    sp = sub.add_parser("oracle", help="standard complex of a 0/1 configuration")
    sp.add_argument("--order", choices=("lex", "grlex"), default="lex")
    sp.add_argument("--config", required=True, help='{"coords":[...],"points":[[...],...]}')
    common(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="run the invariant suite over a corpus")
    sp.add_argument("--corpus", help="CorpusSpec JSON, @file, or -")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-n", type=int, default=7, help="largest n for exhaustive path sweeps")
    sp.add_argument("--per-n", type=int, default=20, help="random configurations per n")
    sp.add_argument("--triples", type=int, default=200, help="random boundary chains")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except cp.ResourceLimit as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, MatroidError, PathError, OracleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
