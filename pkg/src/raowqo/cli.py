"""Command-line front end.

Exit codes: 0 = affirmative with verifiable evidence, 1 = definitive
negative, 2 = input/usage error, 3 = inconclusive (the sufficiency-only
path could not decide). Stdout is deterministic for identical inputs and
flags; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from raowqo import degseq, orders, rao
from raowqo.degseq import DegreeSequence
from raowqo.errors import CapExceeded, Error, NotGraphic, OrderMismatch, ParseError

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_INCONCLUSIVE = 3

CAP_ENV = "RAO_WQO_CAP"


@dataclass
class Verdict:
    answer: str  # "yes" | "no" | "inconclusive"
    method: str = ""
    witness_path: str | None = None
    elapsed: float = 0.0


def _print_verdict(v: Verdict) -> None:
    print(f"answer: {v.answer}")
    if v.method:
        print(f"method: {v.method}")
    if v.witness_path:
        print(f"witness: {v.witness_path}")
    print(f"elapsed: {v.elapsed:.3f}s", file=sys.stderr)


def _exit_code(v: Verdict) -> int:
    return {"yes": EXIT_YES, "no": EXIT_NO, "inconclusive": EXIT_INCONCLUSIVE}[v.answer]


def _load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def _parse_degrees(obj: object, path: str) -> DegreeSequence:
    if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
        raise ParseError(f"{path}: degree sequence must be a JSON array of integers")
    try:
        return DegreeSequence(obj)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _parse_sequence(obj: object, path: str) -> rao.LabelledGraphicSequence:
    """Bare integer arrays are accepted as unlabelled sequences."""
    try:
        if isinstance(obj, list):
            if not all(isinstance(x, int) for x in obj):
                raise ValueError("bare sequences must contain only integers")
            return rao.unlabelled(obj)
        return rao.sequence_from_json(obj)
    except (ValueError, Error) as exc:
        raise ParseError(f"{path}: {exc}") from None


def _parse_order(text: str) -> orders.OrderOracle:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = {"t": text}  # shorthand: --order nat
    try:
        return orders.order_from_json(obj)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _resolve_cap(flag_value: int | None, default: int, what: str) -> int:
    cap = flag_value
    if cap is None:
        env = os.environ.get(CAP_ENV)
        if env is not None:
            try:
                cap = int(env)
            except ValueError:
                raise ParseError(f"{CAP_ENV} must be an integer, got {env!r}") from None
    if cap is None:
        cap = default
    if cap > default:
        print(
            f"warning: {what} cap {cap} exceeds default {default}; "
            "exhaustive search may be slow",
            file=sys.stderr,
        )
    return cap


def _write_witness(w: rao.EmbeddingWitness, path: str) -> None:
    payload = json.dumps(rao.witness_to_json(w), sort_keys=True, separators=(",", ":"))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload + "\n")


def cmd_graphic(args: argparse.Namespace) -> int:
    seq = _parse_degrees(_load_json(args.file), args.file)
    t0 = time.perf_counter()
    yes = degseq.is_graphic(seq)
    by_size = degseq.graphic_by_size(seq)
    v = Verdict("yes" if yes else "no", "erdos-gallai", elapsed=time.perf_counter() - t0)
    _print_verdict(v)
    print(f"size sufficiency alone decides: {'yes' if by_size else 'no'}")
    return _exit_code(v)


def cmd_realize(args: argparse.Namespace) -> int:
    seq = _parse_degrees(_load_json(args.file), args.file)
    cap = _resolve_cap(args.cap, degseq.ENUM_CAP_DEFAULT, "enumeration")
    if args.all:
        graphs = degseq.enumerate_realizations(seq, cap=cap)
        if not graphs:
            print("error: sequence is not graphic", file=sys.stderr)
            return EXIT_NO
        payload = [degseq.graph_to_json(g) for g in graphs]
    else:
        try:
            payload = degseq.graph_to_json(degseq.havel_hakimi(seq))
        except NotGraphic:
            print("error: sequence is not graphic", file=sys.stderr)
            return EXIT_NO
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_YES


def cmd_rao_le(args: argparse.Namespace) -> int:
    d1 = _parse_sequence(_load_json(args.file1), args.file1)
    d2 = _parse_sequence(_load_json(args.file2), args.file2)
    cap = _resolve_cap(args.cap, rao.EXACT_CAP_DEFAULT, "exact decision")
    t0 = time.perf_counter()
    witness = None
    verdict: Verdict
    if args.method in ("padding", "auto"):
        witness = rao.rao_le_padding(d1, d2, budget=args.budget)
    if witness is not None:
        verdict = Verdict("yes", "padding")
    elif args.method == "padding":
        verdict = Verdict("inconclusive", "padding")
    elif args.method == "exact" or len(d2) <= cap:
        witness = rao.rao_le_exact(d1, d2, cap=cap)  # CapExceeded -> exit 2
        verdict = Verdict("yes" if witness is not None else "no", "exact")
    else:
        verdict = Verdict("inconclusive", "padding")  # auto, over the exact cap
    verdict.elapsed = time.perf_counter() - t0
    if witness is not None and args.witness:
        _write_witness(witness, args.witness)
        verdict.witness_path = args.witness
    _print_verdict(verdict)
    return _exit_code(verdict)


def cmd_good_pair(args: argparse.Namespace) -> int:
    obj = _load_json(args.file)
    if not isinstance(obj, list):
        raise ParseError(f"{args.file}: expected a JSON array of sequences")
    ds = [_parse_sequence(item, f"{args.file}[{k}]") for k, item in enumerate(obj)]
    t0 = time.perf_counter()
    found = rao.good_pair_almost_bounded(
        ds, args.max_degree, budget=args.budget, variants=args.variants
    )
    elapsed = time.perf_counter() - t0
    if found is None:
        _print_verdict(Verdict("no", "good-pair", elapsed=elapsed))
        return EXIT_NO
    i, j, witness = found
    v = Verdict("yes", "good-pair", elapsed=elapsed)
    if args.witness:
        _write_witness(witness, args.witness)
        v.witness_path = args.witness
    _print_verdict(v)
    print(f"pair: {i} {j}")
    return EXIT_YES


def cmd_verify_witness(args: argparse.Namespace) -> int:
    obj = _load_json(args.file)
    try:
        witness = rao.witness_from_json(obj)
    except (ValueError, Error) as exc:
        raise ParseError(f"{args.file}: {exc}") from None
    t0 = time.perf_counter()
    result = rao.verify_witness(witness)
    v = Verdict("yes" if result.ok else "no", "verify", elapsed=time.perf_counter() - t0)
    _print_verdict(v)
    if not result.ok:
        print(f"reason: {result.reason}")
    return _exit_code(v)


def cmd_higman_le(args: argparse.Namespace) -> int:
    order = _parse_order(args.order)
    obj_a, obj_b = _load_json(args.file_a), _load_json(args.file_b)
    try:
        labels_a = [orders.label_from_json(x) for x in obj_a]
        labels_b = [orders.label_from_json(x) for x in obj_b]
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    t0 = time.perf_counter()
    picks = orders.higman_le(labels_a, labels_b, order)  # TypeMismatch -> exit 2
    v = Verdict(
        "yes" if picks is not None else "no",
        "higman-greedy",
        elapsed=time.perf_counter() - t0,
    )
    _print_verdict(v)
    if picks is not None:
        print(" ".join(str(k) for k in picks))
    return _exit_code(v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raowqo",
        description="Containment order on labelled graphic degree sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graphic", help="test whether a degree sequence is graphic")
    p.add_argument("file", help="JSON array of degrees")
    p.set_defaults(func=cmd_graphic)

    p = sub.add_parser("realize", help="build realization(s) of a graphic sequence")
    p.add_argument("file", help="JSON array of degrees")
    p.add_argument("--all", action="store_true", help="enumerate every realization")
    p.add_argument("--cap", type=int, default=None, help="enumeration vertex cap")
    p.add_argument("--output", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("rao-le", help="decide containment of two labelled sequences")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument(
        "--method", choices=("exact", "padding", "auto"), default="auto",
        help="auto tries padding first, then exact under the cap",
    )
    p.add_argument("--witness", default=None, help="write the witness JSON here")
    p.add_argument("--cap", type=int, default=None, help="exact-decision entry cap")
    p.add_argument(
        "--budget", type=int, default=rao.PADDING_BUDGET_DEFAULT,
        help="padding matching budget",
    )
    p.set_defaults(func=cmd_rao_le)

    p = sub.add_parser("good-pair", help="find i < j with sequence i <= sequence j")
    p.add_argument("file", help="JSON array of sequences")
    p.add_argument(
        "--max-degree", type=int, required=True,
        help="almost-bounded parameter N: at most N entries may exceed N",
    )
    p.add_argument(
        "--budget", type=int, default=rao.GOOD_PAIR_BUDGET_DEFAULT,
        help="maximum pair containment attempts",
    )
    p.add_argument(
        "--variants", type=int, default=1,
        help="retry with this many alternative realizations per sequence",
    )
    p.add_argument("--witness", default=None, help="write the witness JSON here")
    p.set_defaults(func=cmd_good_pair)

    p = sub.add_parser("verify-witness", help="re-check an embedding witness file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_witness)

    p = sub.add_parser("higman-le", help="subsequence embedding between label lists")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument(
        "--order", default="nat",
        help='order descriptor JSON (or shorthand tag), e.g. \'{"t":"fin","n":3}\'',
    )
    p.set_defaults(func=cmd_higman_le)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, OrderMismatch, NotGraphic, ParseError, Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entry() -> None:
    sys.exit(main())
