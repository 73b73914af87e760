"""Command-line entry point: ``skewsxp <subcommand> ...``.

Every subcommand writes one JSON document to standard output.  Exit status is
0 on success, 1 when a requested verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .abacus import quotient_from_json, quotient_to_json, r_core, r_quotient, r_weight, sgn_r, skew_quotient, star
from .coplactic import G_with_k, is_latticed, lr_coefficient, rightmost_violation
from .errors import CombinatoricsError
from .frontier import carre_leclerc_check, reproduce_table, verify_conjecture
from .partitions import SkewShape, format_partition, parse_partition, parse_skew
from .ribbon import (
    column_word,
    count_ribbon_tableaux,
    enumerate_ribbon_tableaux,
    plethystic_mn,
    render_ascii,
    render_svg,
    row_number_tableau,
)
from .symfunc import oracle_product_plethysm
from .sxp import pipeline_trace, sxp_expand
from .tableaux import enumerate_ssyt, multitableau_from_json, multitableau_to_json, word

DATA_DIR_ENV = "SKEWSXP_DATA_DIR"


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except (ValueError, CombinatoricsError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _skew_arg(text: str) -> SkewShape:
    try:
        return parse_skew(text)
    except (ValueError, CombinatoricsError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _composition_arg(text: str):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc.msg}") from exc
    if not isinstance(value, list) or not all(isinstance(x, int) and x >= 0 for x in value):
        raise argparse.ArgumentTypeError(f"expected a list of non-negative integers, got {text!r}")
    return tuple(value)


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc.msg}") from exc


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def diagram(s: SkewShape) -> str:
    """Young diagram: ``.`` for boxes of the inner shape, ``#`` for the rest."""
    return "\n".join("." * lo + "#" * (hi - lo) for lo, hi in s.row_bounds())


# Handlers return (payload, exit status, ASCII art or None).

def cmd_quotient(a) -> tuple[Any, int, str | None]:
    q = skew_quotient(a.shape, a.r, a.beads)
    return {"shape": str(a.shape), "r": a.r, "quotient": quotient_to_json(q)}, 0, diagram(a.shape)


def cmd_core(a):
    core = r_core(a.partition, a.r)
    return {"partition": list(a.partition), "r": a.r, "core": list(core),
            "weight": r_weight(a.partition, a.r), "quotient": [list(c) for c in r_quotient(a.partition, a.r)]}, 0, None


def cmd_star(a):
    q = quotient_from_json(a.quotient)
    nu = star(q, a.tau, a.r)
    return {"tau": list(a.tau), "r": a.r, "quotient": quotient_to_json(q), "nu": list(nu)}, 0, diagram(SkewShape(nu, a.tau))


def cmd_sign(a):
    return {"shape": str(a.shape), "r": a.r, "sign": sgn_r(a.shape, a.r)}, 0, diagram(a.shape)


def cmd_ssyt_count(a):
    n = sum(1 for _ in enumerate_ssyt(a.shape, a.content))
    return {"shape": str(a.shape), "content": list(a.content), "count": n}, 0, None


def cmd_lattice_check(a):
    if (a.word is None) == (a.tableau is None):
        raise UsageError("give exactly one of --word and --tableau")
    if a.word is not None:
        if not isinstance(a.word, list) or not all(isinstance(x, int) and x > 0 for x in a.word):
            raise UsageError("--word must be a JSON list of positive integers")
        w = tuple(a.word)
    else:
        w = word(multitableau_from_json(a.tableau))
    v = rightmost_violation(w)
    out = {"word": list(w), "latticed": is_latticed(w)}
    if v is not None:
        out["violation"] = {"k": v[0], "position": v[1] + 1}
    return out, 0, None


def cmd_lr(a):
    q = quotient_from_json(a.multishape)
    return {"lambda": list(a.lam), "multishape": quotient_to_json(q), "lr": lr_coefficient(a.lam, q)}, 0, None


def cmd_g_orbit(a):
    t = multitableau_from_json(a.tableau)
    image, k = G_with_k(t, a.lam)
    back, _ = G_with_k(image, a.lam)
    out = {"tableau": multitableau_to_json(t), "image": multitableau_to_json(image), "k": k,
           "swap": None if k is None else [k, k + 1], "fixed": image == t, "involution": back == t}
    art = "\n\n".join("\n".join(str(c) for c in x) for x in (t, image))
    return out, 0 if back == t else 1, art


def cmd_ribbon_count(a):
    return {"shape": str(a.shape), "r": a.r, "weight": list(a.weight),
            "count": count_ribbon_tableaux(a.shape, a.weight, a.r)}, 0, None


def cmd_ribbon_show(a):
    tableaux = list(enumerate_ribbon_tableaux(a.shape, a.weight, a.r))
    items = []
    for T in tableaux:
        rnt = row_number_tableau(T)
        items.append({
            "chain": [list(p) for p in T.chain],
            "strips": [{"label": label, "row": rn, "boxes": [[x + 1, y + 1] for x, y in boxes]}
                       for label, rn, boxes in T.border_strips()],
            "column_word": list(column_word(T)),
            "row_number_tableau": [list(row) for row in rnt.rows],
        })
    if a.svg:
        out_dir = Path(a.svg)
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, T in enumerate(tableaux, start=1):
            (out_dir / f"ribbon_{i}.svg").write_text(render_svg(T))
    art = "\n\n".join(render_ascii(T) for T in tableaux)
    return {"shape": str(a.shape), "r": a.r, "weight": list(a.weight), "tableaux": items}, 0, art


def cmd_mn(a):
    return plethystic_mn(a.tau, a.weight, a.r).to_json(), 0, None


def cmd_sxp(a):
    e = sxp_expand(a.tau, a.skew, a.r)
    status = 0
    if a.verify and oracle_product_plethysm(a.tau, a.skew, a.r) != e:
        status = 1
    if a.trace:
        tr = pipeline_trace(a.tau, a.skew, a.r, a.nu)
        return {"expansion": e.to_json(), "trace": tr.to_json()}, status, None
    return e.to_json(), status, None


def cmd_oracle(a):
    return oracle_product_plethysm(a.tau, a.skew, a.r).to_json(), 0, None


def cmd_cl_check(a):
    ok = carre_leclerc_check(a.tau, a.lam, a.nu)
    return {"tau": list(a.tau), "lambda": list(a.lam), "nu": list(a.nu), "ok": ok}, 0 if ok else 1, None


def cmd_verify_conjecture(a):
    out = a.out
    if out is None:
        out = Path(os.environ.get(DATA_DIR_ENV, ".")) / f"conjecture_r{a.r_max}_n{a.n_max}.jsonl"
    report = verify_conjecture(a.r_max, a.n_max, out, resume=a.resume, jobs=a.jobs, seed=a.seed)
    return report.to_json(), 0 if report.ok else 1, None


def cmd_table(a):
    rows = reproduce_table()
    art = "\n".join(
        f"tau={format_partition(r.tau)} lambda={format_partition(r.lam)} r={r.r} nu={format_partition(r.nu)}: "
        f"mult={r.mult} rt={r.rt} cwl={r.cwl} rntl={r.rntl}" for r in rows)
    return [r.to_json() for r in rows], 0, art


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewsxp", description="Plethysms s_tau (s_{lam/mu} o p_r) and ribbon tableaux.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--pretty", action="store_true", help="indent JSON and add ASCII diagrams")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return sp

    sp = add("quotient", cmd_quotient, "r-quotient of a skew partition")
    sp.add_argument("-r", type=_positive, required=True)
    sp.add_argument("--beads", type=_nonnegative)
    sp.add_argument("shape", type=_skew_arg)

    sp = add("core", cmd_core, "r-core, r-weight and r-quotient of a partition")
    sp.add_argument("-r", type=_positive, required=True)
    sp.add_argument("partition", type=_partition_arg)

    sp = add("star", cmd_star, "the partition nu with nu/tau of given r-quotient")
    sp.add_argument("-r", type=_positive, required=True)
    sp.add_argument("--tau", type=_partition_arg, default=())
    sp.add_argument("--quotient", type=_json_arg, required=True)

    sp = add("sign", cmd_sign, "the r-sign of a skew partition")
    sp.add_argument("-r", type=_positive, required=True)
    sp.add_argument("shape", type=_skew_arg)

    sp = add("ssyt-count", cmd_ssyt_count, "number of semistandard tableaux")
    sp.add_argument("shape", type=_skew_arg)
    sp.add_argument("--content", type=_composition_arg, required=True)

    sp = add("lattice-check", cmd_lattice_check, "is a word or (multi)tableau latticed")
    sp.add_argument("--word", type=_json_arg)
    sp.add_argument("--tableau", type=_json_arg)

    sp = add("lr", cmd_lr, "generalised Littlewood-Richardson coefficient")
    sp.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    sp.add_argument("--multishape", "--shape", dest="multishape", type=_json_arg, required=True)

    sp = add("g-orbit", cmd_g_orbit, "apply the involution G to a multitableau")
    sp.add_argument("tableau", type=_json_arg, help="multitableau as JSON: a list of tableaux, each a list of rows")
    sp.add_argument("--lambda", dest="lam", type=_partition_arg)

    sp = add("ribbon-count", cmd_ribbon_count, "number of r-ribbon tableaux")
    sp.add_argument("-r", type=_positive, required=True)
    sp.add_argument("shape", type=_skew_arg)
    sp.add_argument("--weight", type=_composition_arg, required=True)

    sp = add("ribbon-show", cmd_ribbon_show, "list r-ribbon tableaux with their statistics")
    sp.add_argument("-r", type=_positive, required=True)
    sp.add_argument("shape", type=_skew_arg)
    sp.add_argument("--weight", type=_composition_arg, required=True)
    sp.add_argument("--svg", metavar="DIR", help="write one SVG per tableau into DIR")

    sp = add("mn", cmd_mn, "s_tau (h_alpha o p_r) by signed ribbon counts")
    sp.add_argument("-r", type=_positive, required=True)
    sp.add_argument("--tau", type=_partition_arg, default=())
    sp.add_argument("--weight", type=_composition_arg, required=True)

    for name, func, help_ in (("sxp", cmd_sxp, "s_tau (s_{lam/mu} o p_r) by the signed pipeline"),
                              ("oracle", cmd_oracle, "s_tau (s_{lam/mu} o p_r) by brute force")):
        sp = add(name, func, help_)
        sp.add_argument("-r", type=_positive, required=True)
        sp.add_argument("--tau", type=_partition_arg, default=())
        sp.add_argument("--skew", type=_skew_arg, required=True)
        if name == "sxp":
            sp.add_argument("--trace", action="store_true")
            sp.add_argument("--nu", type=_partition_arg, help="restrict the trace to one output shape")
            sp.add_argument("--verify", action="store_true", help="compare with the brute-force oracle")

    sp = add("cl-check", cmd_cl_check, "the r = 2 column-word rule at one coefficient")
    sp.add_argument("--tau", type=_partition_arg, default=())
    sp.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    sp.add_argument("--nu", type=_partition_arg, required=True)

    sp = add("verify-conjecture", cmd_verify_conjecture, "two-row row-number-tableau bound sweep")
    sp.add_argument("--r-max", type=_positive, required=True)
    sp.add_argument("--n-max", type=_nonnegative, required=True)
    sp.add_argument("--out", help=f"JSON-lines report (default: ${DATA_DIR_ENV} or the working directory)")
    sp.add_argument("--resume", action="store_true")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--seed", type=int, default=0, help="seed for choosing the oracle-audited cells")

    add("table", cmd_table, "the four counterexample rows")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        payload, status, art = args.func(args)
    except UsageError as exc:
        parser.error(f"{args.command}: {exc}")
    except CombinatoricsError as exc:
        print(f"skewsxp {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.pretty:
        print(json.dumps(payload, indent=2))
        if art:
            print()
            print(art)
    else:
        print(json.dumps(payload, separators=(",", ":")))
    return status


if __name__ == "__main__":
    sys.exit(main())
