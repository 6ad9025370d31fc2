"""Command-line driver: ``latticehom <command> [options]``.

Commands: basis, betti, character, decompose, stability-scan, verify-all.
All numbers printed are exact (integers or ``p/q``).  Guard violations and bad
input are reported as a JSON object on stderr with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

from .acceptance import CRITERIA, GUARD_ERRORS, AcceptanceConfig, _bell, run_criterion
from .homology import betti_top, export_basis, ribbon_basis_beta, ribbon_basis_wh
from .lattices import GeometricLattice, GuardError, Matroid, atom_order, boolean_lattice, lattice_of_flats, partition_lattice
from .linear import fraction_text
from .partitions import partition_text
from .repstab import (
    character_alpha,
    character_beta,
    character_wh,
    chain_module_stability,
    scan_beta,
    scan_wh,
)
from .symfunc import decompose, decompositions_to_csv, decompositions_to_json

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
COMMANDS = ("basis", "betti", "character", "decompose", "stability-scan", "verify-all")
KINDS = ("beta", "wh", "alpha")


@dataclass(frozen=True)
class JobConfig:
    command: str
    family: str = "partition"
    matroid: str | None = None
    S: tuple[int, ...] = ()
    n_range: tuple[int, int] = (4, 4)
    kind: str = "beta"
    d: int = 1
    atom_order: str = "natural"
    out: str | None = None
    fmt: str = "csv"
    threads: int = 1
    element_cap: int = 1 << 17
    groupsum_cap: int = 10**7
    criteria: tuple[int, ...] = tuple(sorted(CRITERIA))
    samples: int = 100
    seed: int = 0

    def __post_init__(self) -> None:
        if self.element_cap < 1 or self.groupsum_cap < 1 or self.threads < 1:
            raise ValueError("guards and thread count must be positive")
        lo, hi = self.n_range
        if lo > hi:
            raise ValueError(f"empty n range {lo}..{hi}")
        if self.d < 1:
            raise ValueError("d must be positive")

    @property
    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    def cache_key(self) -> str:
        fields = asdict(self)
        for k in ("out", "threads"):
            fields.pop(k)
        return hashlib.sha256(json.dumps(fields, sort_keys=True).encode()).hexdigest()[:24]


def parse_rank_set(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}")
    if not text:
        return ()
    try:
        S = tuple(sorted({int(t) for t in text.split(",") if t.strip()}))
    except ValueError:
        raise ValueError(f"rank set must be a comma list of integers, got {text!r}") from None
    if S and S[0] < 1:
        raise ValueError(f"ranks must be positive, got {S}")
    return S


def parse_n_range(text: str) -> tuple[int, int]:
    """``"7"`` or ``"4..10"`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValueError(f"n must be an integer or a range a..b, got {text!r}") from None
    if lo > hi or lo < 1:
        raise ValueError(f"empty or invalid n range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default="partition", choices=["boolean", "partition", "matroid"])
    common.add_argument("--matroid", help="JSON file with a matroid (family matroid)")
    common.add_argument("--S", dest="S", default="", help="rank set as a comma list, e.g. 2,3")
    common.add_argument("--n", default="4", help="n or an inclusive range a..b")
    common.add_argument("--atom-order", default="natural", help='"natural", "reverse", "colex" or a list of atom labels')
    common.add_argument("--out", help="write the artifact here instead of stdout")
    common.add_argument("--format", dest="fmt", default="csv", choices=["csv", "json"])
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--element-cap", type=int, default=1 << 17)
    common.add_argument("--groupsum-cap", type=int, default=10**7)

    parser = argparse.ArgumentParser(prog="latticehom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    p = sub.add_parser("basis", parents=[common], help="export a ribbon basis as JSON")
    p.add_argument("--whitney", action="store_true", help="Whitney homology basis instead of rank-selected")
    p = sub.add_parser("betti", parents=[common], help="top Betti numbers and basis sizes")
    p.add_argument("--whitney", action="store_true")
    for name in ("character", "decompose", "stability-scan"):
        p = sub.add_parser(name, parents=[common], help=f"{name.replace('-', ' ')} of an S_n-module family")
        p.add_argument("--kind", default="beta", choices=KINDS, help="rank-selected homology, Whitney homology, or chains")
        p.add_argument("--d", type=int, default=1, help="scale ranks by d (d-divisible Boolean lattices)")
    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", default="", help="comma list of criterion ids")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    extra: dict[str, Any] = {}
    if ns.command in ("character", "decompose", "stability-scan"):
        extra.update(kind=ns.kind, d=ns.d)
    if ns.command == "verify-all":
        extra.update(samples=ns.samples, seed=ns.seed)
        if ns.only:
            ids = parse_rank_set(ns.only)
            unknown = set(ids) - set(CRITERIA)
            if unknown:
                raise ValueError(f"unknown criteria {sorted(unknown)}")
            extra["criteria"] = ids
    if ns.command in ("basis", "betti") and ns.whitney:
        extra["kind"] = "wh"
    return JobConfig(
        command=ns.command,
        family=ns.family,
        matroid=ns.matroid,
        S=parse_rank_set(ns.S),
        n_range=parse_n_range(ns.n),
        atom_order=ns.atom_order,
        out=ns.out,
        fmt=ns.fmt,
        threads=ns.threads,
        element_cap=ns.element_cap,
        groupsum_cap=ns.groupsum_cap,
        **extra,
    )


# --- commands -----------------------------------------------------------------


def build_lattice(cfg: JobConfig, n: int) -> GeometricLattice:
    if cfg.family == "matroid":
        if not cfg.matroid:
            raise ValueError("family matroid needs --matroid FILE")
        L = lattice_of_flats(Matroid.from_json(Path(cfg.matroid).read_text()), max_flats=cfg.element_cap)
    else:
        size = 2**n if cfg.family == "boolean" else _bell(n)
        if size > cfg.element_cap:
            raise GuardError(f"{cfg.family} lattice at n = {n} has {size} elements, above the cap {cfg.element_cap}")
        L = boolean_lattice(n) if cfg.family == "boolean" else partition_lattice(n)
    if cfg.atom_order != "natural":
        L = L.with_atom_order(atom_order(L, cfg.atom_order))
    return L


def _check_ranks(L: GeometricLattice, S: tuple[int, ...], whitney: bool) -> None:
    hi = L.height if whitney else L.height - 1
    if any(s > hi for s in S):
        raise ValueError(f"rank set {S} does not fit {L.name} (ranks 1..{hi})")


def cmd_basis(cfg: JobConfig) -> tuple[str, int]:
    out = []
    for n in cfg.ns:
        L = build_lattice(cfg, n)
        entry: dict[str, Any] = {"lattice": L.name, "n": n, "S": list(cfg.S)}
        if not cfg.S:
            # the empty rank selection is a point: one trivial class
            entry.update(dimension=1, vectors=[{"chain_terms": [{"chain": [], "coeff": "1"}]}])
        elif cfg.kind == "wh":
            _check_ranks(L, cfg.S, True)
            blocks = ribbon_basis_wh(L, cfg.S)
            entry["intervals"] = [
                {"u": L.labels[u], "vectors": json.loads(export_basis(vs, L))} for u, vs in blocks.items() if vs
            ]
            entry["dimension"] = sum(len(vs) for vs in blocks.values())
        else:
            _check_ranks(L, cfg.S, False)
            vecs = ribbon_basis_beta(L, cfg.S)
            entry.update(dimension=len(vecs), vectors=json.loads(export_basis(vecs, L)))
        out.append(entry)
        if cfg.family == "matroid":
            break
    return json.dumps(out, indent=1) + "\n", EXIT_OK


def cmd_betti(cfg: JobConfig) -> tuple[str, int]:
    rows = []
    for n in cfg.ns:
        L = build_lattice(cfg, n)
        if cfg.kind == "wh":
            _check_ranks(L, cfg.S, True)
            inner = cfg.S[:-1]
            top = cfg.S[-1] if cfg.S else 0
            betti = sum(betti_top(L, inner, u) for u in L.levels[top])
            count = sum(len(v) for v in ribbon_basis_wh(L, cfg.S).values()) if cfg.S else 1
        else:
            _check_ranks(L, cfg.S, False)
            betti = betti_top(L, cfg.S)
            count = len(ribbon_basis_beta(L, cfg.S)) if cfg.S else 1
        rows.append({"lattice": L.name, "n": n, "S": list(cfg.S), "betti": betti, "basis_count": count})
        if cfg.family == "matroid":
            break
    status = EXIT_OK if all(r["betti"] == r["basis_count"] for r in rows) else EXIT_FAIL
    if cfg.fmt == "json":
        return json.dumps(rows, indent=1) + "\n", status
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lattice", "n", "S", "betti", "basis_count"])
    for r in rows:
        w.writerow([r["lattice"], r["n"], ",".join(map(str, r["S"])), r["betti"], r["basis_count"]])
    return buf.getvalue(), status


def _module_family(cfg: JobConfig) -> str:
    if cfg.family == "matroid":
        raise ValueError("characters need a symmetric-group family (boolean or partition)")
    if cfg.d != 1 and (cfg.family != "boolean" or cfg.kind != "beta"):
        raise ValueError("--d applies to rank-selected homology of the Boolean family only")
    if cfg.kind != "alpha" and not cfg.S and cfg.command == "stability-scan":
        raise ValueError("stability scans need a nonempty rank set")
    return cfg.family


def _character(cfg: JobConfig, n: int):
    family = _module_family(cfg)
    size = 2**n if family == "boolean" else _bell(n)
    if size > cfg.element_cap:
        raise GuardError(f"{family} lattice at n = {n} has {size} elements, above the cap {cfg.element_cap}")
    ranks = tuple(cfg.d * s for s in cfg.S)
    if cfg.kind == "wh":
        return character_wh(family, ranks, n)
    if cfg.kind == "alpha":
        return character_alpha(family, ranks, n)
    return character_beta(family, ranks, n)


def cmd_character(cfg: JobConfig) -> tuple[str, int]:
    rows = []
    for n in cfg.ns:
        chi = _character(cfg, n)
        rows += [(n, partition_text(rho), fraction_text(v)) for rho, v in sorted(chi.values.items(), reverse=True)]
    if cfg.fmt == "json":
        data = [{"n": n, "cycle_type": rho, "value": v} for n, rho, v in rows]
        return json.dumps(data, indent=1) + "\n", EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "cycle_type", "value"])
    w.writerows(rows)
    return buf.getvalue(), EXIT_OK


def cmd_decompose(cfg: JobConfig) -> tuple[str, int]:
    decs = [decompose(_character(cfg, n)) for n in cfg.ns]
    text = decompositions_to_json(decs) + "\n" if cfg.fmt == "json" else decompositions_to_csv(decs)
    return text, EXIT_OK


def cmd_stability_scan(cfg: JobConfig) -> tuple[str, int]:
    family = _module_family(cfg)
    if cfg.kind == "wh":
        rep, decs = scan_wh(family, cfg.S, cfg.ns)
    elif cfg.kind == "alpha":
        rep, decs = chain_module_stability(family, cfg.S, cfg.ns)
    else:
        rep, decs = scan_beta(family, cfg.S, cfg.ns, d=cfg.d)
    report = {"family": family, "kind": cfg.kind, "S": list(cfg.S), "d": cfg.d, **rep.to_json()}
    report["n_range"] = list(rep.n_range)
    report["padded"] = {
        str(n): [] if dec is None else [{"lambda": list(lam), "mult": m} for lam, m in sorted(dec.padded().mults.items())]
        for n, dec in decs.items()
    }
    status = EXIT_OK if rep.verdict == "certified" else EXIT_FAIL
    return json.dumps(report, indent=1) + "\n", status


def cmd_verify_all(cfg: JobConfig) -> tuple[str, int]:
    acfg = AcceptanceConfig(cfg.groupsum_cap, cfg.element_cap, cfg.samples, cfg.seed)
    if cfg.threads > 1:
        with ProcessPoolExecutor(cfg.threads) as pool:
            results = list(pool.map(run_criterion, cfg.criteria, [acfg] * len(cfg.criteria)))
    else:
        results = [run_criterion(i, acfg) for i in cfg.criteria]
    for r in results:
        print(r.line(), file=sys.stderr)
    ok = all(r.status == "pass" for r in results)
    summary = {"ok": ok, "criteria": [r.to_json() for r in results]}
    return json.dumps(summary, indent=1) + "\n", EXIT_OK if ok else EXIT_FAIL


HANDLERS = {
    "basis": cmd_basis,
    "betti": cmd_betti,
    "character": cmd_character,
    "decompose": cmd_decompose,
    "stability-scan": cmd_stability_scan,
    "verify-all": cmd_verify_all,
}
CACHEABLE = {"betti", "character", "decompose", "stability-scan"}


def run(cfg: JobConfig) -> tuple[str, int]:
    """Run one command; results of cacheable commands are memoized under ``$LATTICEHOM_CACHE``."""
    cache_dir = os.environ.get("LATTICEHOM_CACHE")
    path = None
    if cache_dir and cfg.command in CACHEABLE:
        path = Path(cache_dir) / f"{cfg.command}-{cfg.cache_key()}.json"
        if path.exists():
            hit = json.loads(path.read_text())
            return hit["text"], hit["status"]
    text, status = HANDLERS[cfg.command](cfg)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"text": text, "status": status}))
    return text, status


def _error(kind: str, exc: BaseException, code: int) -> int:
    print(json.dumps({"error": kind, "type": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        text, status = run(cfg)
    except GUARD_ERRORS as exc:
        return _error("guard", exc, EXIT_GUARD)
    except (ValueError, OSError, KeyError) as exc:
        return _error("input", exc, EXIT_INPUT)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
