"""Command-line front end.

Machine mode (--json) prints exactly one JSON object on stdout; diagnostics
go to stderr. Exit codes: 0 success, 1 usage or input error, 2 search
exhausted / nothing recovered.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .attack import (
    AttackConfig,
    AttackStatus,
    DeltaVariant,
    attack,
    recover_private_key,
)
from .bench import CSV_HEADER, run_bench, rows_to_csv
from .confrac import cf_expand, convergents, make_rational
from .curve import Factorization, enumerate_points, ratio_of_point
from .parallel import parallel_attack
from .rsa import keygen, wiener_attack
from .verify import SUITES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EXHAUSTED = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return data


def _resolve(args, config: dict, key: str, default):
    """Explicit flags win over config values, which win over defaults."""
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        return config[key]
    return default


def _parse_variants(text: str) -> tuple[DeltaVariant, ...]:
    variants = []
    for part in text.split(","):
        part = part.strip().lower()
        if not part:
            continue
        try:
            variants.append(DeltaVariant(part))
        except ValueError:
            raise ValueError(f"unknown variant {part!r}; choose from raw, scaled")
    if not variants:
        raise ValueError("no variants given")
    return tuple(variants)


def _open_csv_target(path: str):
    if path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", newline="", encoding="utf-8"), True
    except OSError as exc:
        raise ValueError(f"cannot write {path}: {exc}")


def cmd_attack(args, config: dict) -> int:
    n = args.n
    bound_exp = int(_resolve(args, config, "bound_exp", 4))
    workers = int(_resolve(args, config, "workers", 1))
    variants = _parse_variants(str(_resolve(args, config, "variants", "raw,scaled")))
    max_convergents = _resolve(args, config, "max_convergents", None)
    attack_config = AttackConfig(
        bound_exponent=bound_exp,
        variants=variants,
        max_convergents=None if max_convergents is None else int(max_convergents),
        workers=workers,
        progress_interval=args.progress_interval,
        legacy_exponent=args.legacy_exponent,
    )
    runner = parallel_attack if workers > 1 else attack
    result = runner(n, attack_config)

    d = None
    if args.e is not None and result.status is AttackStatus.FACTORED:
        d = recover_private_key(result.factor_small, result.factor_large, args.e)

    record = {
        "command": "attack",
        "n": n,
        "status": result.status.value,
        "factors": None
        if result.factor_small is None
        else [result.factor_small, result.factor_large],
        "i": result.delta_used.i if result.delta_used else None,
        "variant": result.delta_used.variant.value if result.delta_used else None,
        "delta": _fraction_str(result.delta_used.value) if result.delta_used else None,
        "convergent": str(result.convergent) if result.convergent else None,
        "convergent_index": result.convergent_index,
        "candidates_tried": result.candidates_tried,
        "gcd_tests": result.gcd_tests,
        "bound_exponent": bound_exp,
        "workers": workers,
        "d": d,
        "elapsed_ms": round(result.elapsed * 1000.0, 3),
    }
    if args.json:
        print(json.dumps(record))
    else:
        print(f"n = {n}: {result.status.value}")
        if result.status is AttackStatus.FACTORED:
            print(f"factors: {result.factor_small} * {result.factor_large}")
            if result.delta_used:
                print(
                    f"delta = {_fraction_str(result.delta_used.value)} "
                    f"(i={result.delta_used.i}, {result.delta_used.variant.value}), "
                    f"convergent {result.convergent} (k={result.convergent_index})"
                )
            if d is not None:
                print(f"d = {d}")
        print(
            f"candidates tried: {result.candidates_tried}, "
            f"gcd tests: {result.gcd_tests}, "
            f"elapsed: {result.elapsed * 1000.0:.1f} ms"
        )
    return EXIT_OK if result.status is AttackStatus.FACTORED else EXIT_EXHAUSTED


def cmd_enumerate(args, config: dict) -> int:
    fact = Factorization.parse(args.factors)
    points = enumerate_points(fact)
    n = fact.n

    def ratio_parts(pt):
        if pt.y == 0:
            return None
        r = ratio_of_point(pt)
        return r.numerator, r.denominator

    if args.csv:
        handle, owned = _open_csv_target(args.csv)
        try:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(("n", "x", "y", "ratio_num", "ratio_den"))
            for pt in points:
                parts = ratio_parts(pt)
                writer.writerow(
                    (n, pt.x, pt.y, *(parts if parts else ("", "")))
                )
        finally:
            if owned:
                handle.close()
        return EXIT_OK

    label = " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in fact.factors
    )
    print(f"n = {n} = {label}")
    width = len(str(points[-1].x))
    print(f"{'x':>{width}}  {'y':>{width}}  x/y")
    for pt in points:
        parts = ratio_parts(pt)
        ratio = "-" if parts is None else (
            str(parts[0]) if parts[1] == 1 else f"{parts[0]}/{parts[1]}"
        )
        print(f"{pt.x:>{width}}  {pt.y:>{width}}  {ratio}")
    return EXIT_OK


def cmd_cf(args, config: dict) -> int:
    r = make_rational(args.num, args.den)
    cf = cf_expand(r)
    print(f"terms: {cf}")
    for conv in convergents(cf):
        print(f"k={conv.k}  {conv}")
    return EXIT_OK


def cmd_keygen(args, config: dict) -> int:
    key = keygen(args.bits, args.seed, small_d=args.small_d)
    record = {
        "command": "keygen",
        "bits": args.bits,
        "seed": args.seed,
        "small_d": args.small_d,
        "p": key.p,
        "q": key.q,
        "n": key.n,
        "e": key.e,
        "d": key.d,
        "phi": key.phi,
    }
    if args.json:
        print(json.dumps(record))
    else:
        for name in ("p", "q", "n", "e", "d", "phi"):
            print(f"{name} = {record[name]}")
    return EXIT_OK


def cmd_wiener(args, config: dict) -> int:
    d = wiener_attack(args.n, args.e)
    if args.json:
        print(json.dumps({"command": "wiener", "n": args.n, "e": args.e, "d": d}))
    else:
        print(f"d = {d}" if d is not None else "no recovery")
    return EXIT_OK if d is not None else EXIT_EXHAUSTED


def cmd_recover(args, config: dict) -> int:
    d = recover_private_key(args.p, args.q, args.e)
    if args.json:
        print(
            json.dumps(
                {"command": "recover", "p": args.p, "q": args.q, "e": args.e, "d": d}
            )
        )
    else:
        print(f"d = {d}")
    return EXIT_OK


def cmd_verify(args, config: dict) -> int:
    suite = SUITES[args.suite]
    checks = suite(trials=args.trials, seed=args.seed, max_bits=args.max_bits)
    for check in checks:
        print(check.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} properties passed")
    return EXIT_OK if not failed else EXIT_USAGE


def cmd_bench(args, config: dict) -> int:
    bits_list = [int(b) for b in args.bits_list.split(",") if b.strip()]
    workers_list = [int(w) for w in args.workers_list.split(",") if w.strip()]
    if not bits_list:
        raise ValueError("empty bits list")
    if not workers_list:
        raise ValueError("empty workers list")
    rows = run_bench(bits_list, args.bound_exp, workers_list, seed=args.seed)
    text = rows_to_csv(rows)
    if args.csv == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(args.csv, "w", newline="", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise ValueError(f"cannot write {args.csv}: {exc}")
        print(f"wrote {len(rows)} rows to {args.csv}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="hypercf", description=__doc__)
    parser.add_argument(
        "--config", help="JSON file with default values for the flags below"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_attack = sub.add_parser("attack", help="factor an odd modulus")
    p_attack.add_argument("--n", type=int, required=True)
    p_attack.add_argument("--bound-exp", dest="bound_exp", type=int)
    p_attack.add_argument("--variants", help="comma list: raw,scaled")
    p_attack.add_argument("--workers", type=int)
    p_attack.add_argument("--max-convergents", dest="max_convergents", type=int)
    p_attack.add_argument("--e", type=int, help="also recover d for this exponent")
    p_attack.add_argument("--progress-interval", type=int)
    p_attack.add_argument("--legacy-exponent", action="store_true")
    p_attack.add_argument("--json", action="store_true")
    p_attack.set_defaults(func=cmd_attack)

    p_enum = sub.add_parser("enumerate", help="list curve points for a factored n")
    p_enum.add_argument("--factors", required=True, help='e.g. "3,5" or "3^2"')
    p_enum.add_argument("--csv", help="write CSV to this path ('-' for stdout)")
    p_enum.set_defaults(func=cmd_enumerate)

    p_cf = sub.add_parser("cf", help="continued fraction of num/den")
    p_cf.add_argument("--num", type=int, required=True)
    p_cf.add_argument("--den", type=int, required=True)
    p_cf.set_defaults(func=cmd_cf)

    p_keygen = sub.add_parser("keygen", help="deterministic toy RSA key")
    p_keygen.add_argument("--bits", type=int, required=True)
    p_keygen.add_argument("--seed", type=int, required=True)
    p_keygen.add_argument("--small-d", dest="small_d", action="store_true")
    p_keygen.add_argument("--json", action="store_true")
    p_keygen.set_defaults(func=cmd_keygen)

    p_wiener = sub.add_parser("wiener", help="small-d baseline attack")
    p_wiener.add_argument("--n", type=int, required=True)
    p_wiener.add_argument("--e", type=int, required=True)
    p_wiener.add_argument("--json", action="store_true")
    p_wiener.set_defaults(func=cmd_wiener)

    p_recover = sub.add_parser("recover", help="private exponent from p, q, e")
    p_recover.add_argument("--p", type=int, required=True)
    p_recover.add_argument("--q", type=int, required=True)
    p_recover.add_argument("--e", type=int, required=True)
    p_recover.add_argument("--json", action="store_true")
    p_recover.set_defaults(func=cmd_recover)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("--suite", choices=sorted(SUITES), required=True)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--max-bits", dest="max_bits", type=int, default=32)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="counter/time CSV over seeded moduli")
    p_bench.add_argument("--bits-list", dest="bits_list", required=True)
    p_bench.add_argument("--bound-exp", dest="bound_exp", type=int, default=2)
    p_bench.add_argument("--workers-list", dest="workers_list", default="1")
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--csv", required=True, help="output path ('-' for stdout)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _load_config(args.config)
        return args.func(args, config)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
