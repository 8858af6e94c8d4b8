"""Command-line entry point: ``ordalib <area> <command> ...``.

Exit codes: 0 verdict produced, 1 undetermined or inconclusive, 2 usage
error, 3 an internal guard tripped (step caps, ball caps, oracle limits).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .archimedean import NotArchimedean, OrderVector, holder_phi, vector_compare, zn_compare
from .braid import (
    BraidError,
    BraidWord,
    NonTermination,
    NormalizationFailure,
    alexander_from_braid,
    compare_dehornoy,
    dehornoy_floor,
    genus_bound,
    provably_prime,
    sigma_sign,
)
from .decide import (
    CompleteCertificate,
    DecideError,
    Outcome,
    PartitionCertificate,
    count_k_partitions,
    enumerate_k_partitions,
    find_blockers,
    is_complete,
    load_certificate,
    nonlo_by_partitions,
    semigroup_sign_test,
)
from .knots import KnotError, KnotInput, fibred_table, read_table, verdict_row
from .magnus import compare as magnus_compare
from .oracle import BallTooLarge, OracleConfig, OracleError, OracleIncomplete, ball
from .parallel import default_threads, pmap
from .presentation import Presentation, PresentationError, abelianization, catalog, coset_enumeration, lookup
from .words import Alphabet, WordError, parse

SCHEMA = "ordalib.report/1"

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    oracle: OracleConfig = field(default_factory=OracleConfig)
    k: int = 4
    max_product_len: int = 10
    generations: int = 2
    max_len: int = 10
    max_count: int = 20000
    format: str = "json"
    threads: int = 1
    seed: int = 0

    def __post_init__(self):
        for name in ("k", "max_product_len", "max_len", "max_count", "threads"):
            if getattr(self, name) <= 0:
                raise UsageError(f"{name} must be positive")
        if self.generations < 0:
            raise UsageError("generations must be >= 0")
        if self.format not in ("json", "text"):
            raise UsageError("format must be json or text")

    @classmethod
    def from_toml(cls, text: str) -> "RunConfig":
        data = tomllib.loads(text)
        run = dict(data.get("run", {}))
        unknown = set(run) - {"k", "max_product_len", "generations", "max_len", "max_count", "format", "threads", "seed"}
        if unknown:
            raise UsageError(f"unknown [run] keys: {sorted(unknown)}")
        return cls(oracle=OracleConfig.from_mapping(data.get("oracle", {})), **run)


# --- output ---------------------------------------------------------------------

def _text_lines(obj, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        out = []
        for k in sorted(obj):
            v = obj[k]
            key = f"{prefix}{k}"
            if isinstance(v, (dict, list)) and v:
                out += _text_lines(v, key + ".")
            else:
                out.append(f"{key}: {_scalar(v)}")
        return out
    if isinstance(obj, list):
        out = []
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list)):
                out += _text_lines(v, f"{prefix}{i}.")
            else:
                out.append(f"{prefix}{i}: {_scalar(v)}")
        return out
    return [f"{prefix.rstrip('.')}: {_scalar(obj)}"]


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def emit_report(results: dict, fmt: str) -> bytes:
    """Deterministic bytes: sorted keys, fixed separators, trailing newline."""
    if fmt == "json":
        body = {"schema": SCHEMA, **results}
        return (json.dumps(body, sort_keys=True, indent=2) + "\n").encode()
    return ("\n".join(_text_lines(results)) + "\n").encode()


# --- helpers ----------------------------------------------------------------------

def _presentation(ref: str) -> Presentation:
    if ref.startswith("@"):
        text = Path(ref[1:]).read_text()
        if text.lstrip().startswith("{"):
            return Presentation.from_json(text)
        return Presentation.parse(text, name=Path(ref[1:]).stem)
    if ref.lstrip().startswith("gens"):
        return Presentation.parse(ref, name="inline")
    return lookup(ref)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from e


def _free_alphabet(words: list[str], gens: str | None) -> Alphabet:
    if gens:
        return Alphabet.of(*gens.split(","))
    # every label that appears, in sorted order
    labels = set()
    for w in words:
        for tok in w.replace("*", " ").split():
            labels.add(tok.split("^")[0])
    return Alphabet.of(*sorted(labels))


def _order_name(sign: int) -> str:
    return {-1: "Less", 0: "Equal", 1: "Greater"}[sign]


# --- commands -----------------------------------------------------------------------

def cmd_order_compare_free(args, cfg):
    alpha = _free_alphabet([args.u, args.v], args.gens)
    r = magnus_compare(parse(args.u, alpha), parse(args.v, alpha))
    return {"command": "order compare-free", "u": args.u, "v": args.v, "result": r.value}, 0


def _braid(args, text):
    return BraidWord.parse(text, args.strands)


def cmd_braid(args, cfg):
    out = {"command": f"braid {args.braid_cmd}", "strands": args.strands}
    b = _braid(args, args.word)
    out["braid"] = str(b)
    if args.braid_cmd == "sign":
        out["sign"] = str(sigma_sign(b))
    elif args.braid_cmd == "compare":
        out["other"] = str(_braid(args, args.other))
        out["result"] = _order_name(compare_dehornoy(b, _braid(args, args.other)))
    elif args.braid_cmd == "floor":
        out["floor"] = dehornoy_floor(b)
    elif args.braid_cmd == "prime":
        out["provably_prime"] = provably_prime(b)
    elif args.braid_cmd == "genus":
        out["genus_lower_bound"] = genus_bound(b)
    elif args.braid_cmd == "alexander":
        out["alexander"] = str(alexander_from_braid(b))
    return out, 0


def _verdict_dict(k: KnotInput) -> dict:
    return verdict_row(k).to_dict()


def cmd_knot_verdict(args, cfg):
    if args.table:
        rows = read_table(Path(args.table).read_text().splitlines())
    elif args.braid or args.poly or args.two_bridge or args.twist:
        d = {"name": args.name, "fibred": args.fibred}
        if args.braid:
            if not args.strands:
                raise UsageError("--braid needs --strands")
            d.update(braid=args.braid, strands=args.strands)
        if args.poly:
            d["polynomial"] = args.poly
        if args.two_bridge:
            d["two_bridge"] = list(_ints(args.two_bridge))
        if args.twist:
            d["twist_m"] = args.twist
        rows = [KnotInput.from_dict(d)]
    else:
        rows = fibred_table()
    results = pmap(_verdict_dict, rows, cfg.threads)
    inconclusive = any(r["verdict"] == "Inconclusive" for r in results)
    code = 1 if inconclusive and len(results) == 1 else 0
    return {"command": "knot verdict", "rows": results}, code


def cmd_group(args, cfg):
    sub = args.group_cmd
    if sub == "catalog":
        rows = []
        for name in catalog():
            p = lookup(name)
            rows.append({"name": name, "generators": [g.label for g in p.alphabet],
                         "relators": [str(r) for r in p.relators], "oracle": p.oracle})
        return {"command": "group catalog", "entries": rows}, 0
    p = _presentation(args.group)
    head = {"command": f"group {sub}", "group": p.name}
    if sub == "abelianize":
        inv = abelianization(p)
        return {**head, "rank": inv.rank, "torsion": list(inv.torsion), "text": str(inv)}, 0
    if sub == "order":
        r = coset_enumeration(p, args.max_cosets)
        if r.order is None:
            return {**head, "result": "ExceededBound", "max_cosets": args.max_cosets}, 1
        return {**head, "result": "Order", "order": r.order}, 0
    if sub == "kpartitions":
        backend = p.backend(cfg.oracle)
        b = ball(backend, None, args.k or cfg.k, cfg.oracle.ball_cap)
        out = {**head, "k": b.radius, "ball_size": len(b), "conradian": args.conradian}
        if args.count_only:
            out["count"] = count_k_partitions(b, args.conradian)
        else:
            parts = enumerate_k_partitions(b, args.conradian, cfg.threads)
            out["count"] = len(parts)
            out["partitions"] = [[str(w) for w in part.words()] for part in parts]
        return out, 0
    if sub == "complete":
        return _complete(p, head, args, cfg)
    if sub == "nonlo":
        return _nonlo(p, head, args, cfg)
    raise UsageError(f"unknown group command {sub}")


def _write_cert(path: str | None, default: str, text: str) -> str:
    target = Path(path or default)
    target.write_text(text + "\n")
    return str(target)


def _complete(p, head, args, cfg):
    res = is_complete(p)
    cons = []
    generation = 0
    if not res.complete:
        found = find_blockers(p, cfg.max_len, cfg.max_count, cfg.generations)
        if not found.complete:
            return {**head, "result": "Unknown", "unblocked": [list(s) for s in res.unblocked]}, 1
        res, cons, generation = found.result, found.used, found.generation
    cert = CompleteCertificate.build(p, res, cons)
    return {**head, "result": "Complete", "generation": generation,
            "blockers": {"".join("+" if s > 0 else "-" for s in k): str(cert.words[v]) for k, v in cert.blockers.items()},
            "certificate": cert.to_json()}, 0


def _nonlo(p, head, args, cfg):
    method = args.method
    out = {**head, "method": method}
    if method == "partitions":
        backend = p.backend(cfg.oracle)
        k = args.k or cfg.k
        v = nonlo_by_partitions(backend, None, k, cfg.threads)
        out.update(k=k, ball_size=v.ball_size, partitions=v.count, result=v.outcome.value)
        if v.outcome is Outcome.NON_LEFT_ORDERABLE:
            cert = PartitionCertificate(p.name, p.oracle, p.to_json(), k, v.ball_size)
            out["certificate"] = cert.to_json()
            out["certificate_file"] = _write_cert(args.cert, f"{p.name}.cert.json", cert.dumps())
            return out, 0
        return out, 1
    if method == "signs":
        texts = args.words or p.expected.get("sign_words") or [g.label for g in p.alphabet]
        X = [parse(t, p.alphabet) for t in texts]
        L = args.max_product_len or cfg.max_product_len
        r = semigroup_sign_test(p, X, L, p.backend(cfg.oracle), deep=args.deep, threads=cfg.threads)
        out.update(X=[str(x) for x in X], max_product_len=L, result=("Refuted" if r.certificate else "Undetermined"))
        if r.certificate is None:
            out["unrefuted"] = ["".join("+" if s > 0 else "-" for s in e) for e in r.unrefuted]
            return out, 1
        out["witnesses"] = {"".join("+" if s > 0 else "-" for s in w.signs): str(w.word(X))
                            for w in r.certificate.witnesses}
        out["certificate"] = r.certificate.to_json()
        out["certificate_file"] = _write_cert(args.cert, f"{p.name}.cert.json", r.certificate.dumps())
        return out, 0
    if method == "complete":
        res, code = _complete(p, head, args, cfg)
        res["method"] = method
        if code == 0:
            res["result"] = "NonLeftOrderable"
            res["certificate_file"] = _write_cert(args.cert, f"{p.name}.cert.json",
                                                  json.dumps(res["certificate"], sort_keys=True, indent=1))
        return res, code
    raise UsageError(f"unknown method {method}")


def cmd_zn(args, cfg):
    v = OrderVector.parse(args.v, args.tiebreak or ())
    if args.zn_cmd == "compare":
        r = zn_compare(v, _ints(args.m), _ints(args.n))
        return {"command": "zn compare", "v": str(v), "m": list(_ints(args.m)), "n": list(_ints(args.n)),
                "result": r.value}, 0
    phi = holder_phi(vector_compare(v), _ints(args.f), _ints(args.g), args.k)
    return {"command": "zn holder", "v": str(v), "k": args.k, "phi": f"{phi.numerator}/{phi.denominator}",
            "phi_float": float(phi)}, 0


def cmd_verify_cert(args, cfg):
    cert = load_certificate(Path(args.file).read_text())
    ok = cert.replay()
    return {"command": "verify-cert", "file": args.file, "group": cert.group,
            "schema": type(cert).__name__, "valid": ok}, (0 if ok else 1)


# --- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ordalib", description="Orderable groups toolkit.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--config", help="TOML file with [oracle] and [run] sections")
    ap.add_argument("--format", choices=("json", "text"))
    ap.add_argument("--threads", type=int, help="worker processes (default: ORDALIB_THREADS or 1)")
    ap.add_argument("--seed", type=int)
    top = ap.add_subparsers(dest="area", required=True)

    order = top.add_parser("order", help="Magnus ordering of free groups").add_subparsers(dest="order_cmd", required=True)
    cf = order.add_parser("compare-free")
    cf.add_argument("u")
    cf.add_argument("v")
    cf.add_argument("--gens", help="comma-separated generator labels (default: those appearing)")
    cf.set_defaults(func=cmd_order_compare_free)

    braid = top.add_parser("braid", help="Dehornoy ordering and braid invariants")
    bsub = braid.add_subparsers(dest="braid_cmd", required=True)
    for name in ("sign", "compare", "floor", "prime", "genus", "alexander"):
        sp = bsub.add_parser(name)
        sp.add_argument("--strands", "-n", type=int, required=True)
        sp.add_argument("word")
        if name == "compare":
            sp.add_argument("other")
        sp.set_defaults(func=cmd_braid)

    knot = top.add_parser("knot", help="bi-orderability verdicts").add_subparsers(dest="knot_cmd", required=True)
    kv = knot.add_parser("verdict")
    kv.add_argument("--table", help="JSONL file, one knot per line (default: built-in fibred list)")
    kv.add_argument("--name", default="K")
    kv.add_argument("--braid")
    kv.add_argument("--strands", type=int)
    kv.add_argument("--poly")
    kv.add_argument("--fibred", action="store_true", default=None)
    kv.add_argument("--two-bridge")
    kv.add_argument("--twist", type=int)
    kv.set_defaults(func=cmd_knot_verdict)

    group = top.add_parser("group", help="finitely presented groups")
    gsub = group.add_subparsers(dest="group_cmd", required=True)
    gsub.add_parser("catalog").set_defaults(func=cmd_group)
    for name in ("abelianize", "order", "nonlo", "kpartitions", "complete"):
        sp = gsub.add_parser(name)
        sp.add_argument("group", help="catalog name (name:args), inline 'gens: ...; rels: ...', or @file")
        sp.set_defaults(func=cmd_group)
        if name == "order":
            sp.add_argument("--max-cosets", type=int, default=100000)
        if name in ("nonlo", "kpartitions"):
            sp.add_argument("--k", type=int)
        if name == "kpartitions":
            sp.add_argument("--count-only", action="store_true")
            sp.add_argument("--conradian", action="store_true")
        if name == "nonlo":
            sp.add_argument("--method", choices=("partitions", "signs", "complete"), default="signs")
            sp.add_argument("--words", nargs="+", help="the list X for the sign test")
            sp.add_argument("--max-product-len", type=int)
            sp.add_argument("--deep", action="store_true", help="allow bounded search beyond relator lookup")
        if name in ("nonlo", "complete"):
            sp.add_argument("--cert", help="certificate output path (default: <group>.cert.json)")

    zn = top.add_parser("zn", help="Archimedean orderings of Z^n")
    zsub = zn.add_subparsers(dest="zn_cmd", required=True)
    zc = zsub.add_parser("compare")
    zc.add_argument("--v", required=True)
    zc.add_argument("--m", required=True)
    zc.add_argument("--n", required=True)
    zc.add_argument("--tiebreak", action="append")
    zc.set_defaults(func=cmd_zn)
    zh = zsub.add_parser("holder")
    zh.add_argument("--v", required=True)
    zh.add_argument("--f", required=True)
    zh.add_argument("--g", required=True)
    zh.add_argument("--k", type=int, default=20)
    zh.add_argument("--tiebreak", action="append")
    zh.set_defaults(func=cmd_zn)

    vc = top.add_parser("verify-cert", help="replay a non-left-orderability certificate")
    vc.add_argument("file")
    vc.set_defaults(func=cmd_verify_cert)
    return ap


def _config(args) -> RunConfig:
    cfg = RunConfig.from_toml(Path(args.config).read_text()) if args.config else RunConfig()
    if args.format:
        cfg.format = args.format
    if args.threads is not None:
        cfg.threads = args.threads
    elif not args.config or "ORDALIB_THREADS" in os.environ:
        cfg.threads = default_threads()
    if args.seed is not None:
        cfg.seed = args.seed
    cfg.__post_init__()
    return cfg


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _config(args)
        random.seed(cfg.seed)
        result, code = args.func(args, cfg)
    except (UsageError, WordError, PresentationError, BraidError, KnotError, DecideError, ValueError,
            FileNotFoundError, KeyError, tomllib.TOMLDecodeError) as e:
        print(f"ordalib: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except (NonTermination, NormalizationFailure, BallTooLarge, OracleIncomplete, OracleError, NotArchimedean,
            RecursionError) as e:
        print(f"ordalib: guard tripped: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    sys.stdout.buffer.write(emit_report(result, cfg.format))
    sys.stdout.flush()
    return code


def main() -> None:
    sys.exit(dispatch())
