"""Command line front end: tree listings, decorations, chains, torsion and claim runs."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__, tree
from .curves import CONVENTIONS
from .decoration import POLICIES, VARIANTS, decorate, discriminant_certificate
from .fields import parse_rational
from .towers import CLAIMS, SPECIALIZATIONS, Workbench, verify

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

# claims whose level is fixed, or clamped, regardless of --level
FIXED_LEVEL = {"k1prime-equals-k1": 1, "k2prime-pairwise": 2, "k2-root-adjunction": 2, "zeta8-in-k3": 3,
               "tree-invariants": 8}
MIN_LEVEL = {"xfield-plus-root": 2, "division-sandwich": 2, "main-theorem-pairs": 2, "division-index": 3}
MAX_LEVEL = {"scalar-stabilizer": 3}
# need level 3 fields; in generic mode these only run with --long
LONG_IN_GENERIC = ("division-index", "zeta8-in-k3")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str = "specialized"
    alphas: tuple = (0, 1, 3)
    max_level: int = 2
    convention: str = "twisted"
    recursion_variant: str = "construction-consistent"
    policies: tuple = ("first", "swapped")
    claims: list = field(default_factory=list)
    output: str | None = None
    seed: int = 0
    long: bool = False
    zeta_level: int = 2

    def validate(self) -> "RunConfig":
        if self.mode not in ("specialized", "generic"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.max_level < 1:
            raise ConfigError("level must be at least 1")
        if self.mode == "specialized":
            if len(self.alphas) != 3:
                raise ConfigError("--alphas needs exactly three rationals")
            if len(set(self.alphas)) != 3:
                raise ConfigError("Weierstrass roots must be distinct")
        if self.convention not in CONVENTIONS:
            raise ConfigError(f"unknown convention {self.convention!r}")
        if self.recursion_variant not in VARIANTS:
            raise ConfigError(f"unknown variant {self.recursion_variant!r}")
        for p in self.policies:
            if p not in POLICIES:
                raise ConfigError(f"unknown policy {p!r}")
        for c in self.claims:
            if c not in CLAIMS:
                raise ConfigError(f"unknown claim {c!r}; known: {', '.join(sorted(CLAIMS))}")
        return self

    def describe(self) -> dict:
        d = asdict(self)
        d["alphas"] = None if self.mode == "generic" else [str(a) for a in self.alphas]
        return d

    def bench(self) -> Workbench:
        alphas = None if self.mode == "generic" else self.alphas
        return Workbench(alphas, zeta_level=self.zeta_level, convention=self.convention, long=self.long)


def parse_alphas(text: str) -> tuple:
    try:
        return tuple(parse_rational(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse --alphas {text!r}: {exc}") from None


def claim_level(claim: str, n: int) -> int:
    if claim in FIXED_LEVEL:
        return FIXED_LEVEL[claim]
    n = max(n, MIN_LEVEL.get(claim, 1))
    return min(n, MAX_LEVEL.get(claim, n))


def default_claims(cfg: RunConfig) -> list[str]:
    claims = sorted(CLAIMS)
    if cfg.mode == "generic" and not cfg.long:
        claims = [c for c in claims if c not in LONG_IN_GENERIC]
    return claims


# -- output helpers -------------------------------------------------------------


def write_report(report: dict, path: str | None):
    if path:
        Path(path).write_text(json.dumps(report, indent=2, sort_keys=False) + "\n")


def table(rows, headers) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[j]) for r in rows)) if rows else len(h) for j, h in enumerate(headers)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    out = [line, "  ".join("-" * w for w in widths)]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(out)


# -- subcommands ------------------------------------------------------------------


def cmd_tree(cfg: RunConfig) -> int:
    n = cfg.max_level
    rows, records = [], []
    for v in [tree.ROOT] + tree.vertices_up_to(n):
        par = "" if v.is_root else str(tree.parent(v))
        tw = "" if v.is_root else str(tree.twin(v))
        label = "E[1] (root)" if v.is_root else v.label_str()
        rows.append([str(v), label, par, tw])
        records.append({"vertex": str(v), "level": v.level, "label": None if v.is_root else list(v.label),
                        "parent": par or None, "twin": tw or None})
    print(table(rows, ["vertex", "subgroup", "parent", "twin"]))
    write_report({"command": "tree", "level": n, "vertices": records}, cfg.output)
    return EXIT_OK


def cmd_decorate(cfg: RunConfig) -> int:
    n = max(cfg.max_level, 1)
    bench = cfg.bench()
    layout = "ambient" if n <= 3 else "branch"
    d = decorate(bench.a_values, n, variant=cfg.recursion_variant, policy=cfg.policies[0],
                 layout=layout, ambient=bench.ambient if layout == "ambient" else None,
                 seed=cfg.seed, strict=False)
    cert = discriminant_certificate(d)
    rows = [[str(v), v.label_str(), repr(x)] for v, x in sorted(d.values.items())]
    print(table(rows, ["vertex", "subgroup", "value"]))
    degrees = []
    if layout == "ambient":
        K1 = bench.K1()
        for m in range(1, n + 1):
            gens = [d.values[v] for k in range(1, m + 1) for v in tree.enumerate_level(k)]
            F = K1.subfield.extended(gens)
            degrees.append({"level": m, "over_base": F.degree, "over_K1": F.degree // K1.degree})
        print()
        print(table([[e["level"], e["over_base"], e["over_K1"]] for e in degrees],
                    ["level", "[K_n' : base]", "[K_n' : K1]"]))
    print()
    print(f"discriminant certificate: {'holds' if cert['holds'] else 'FAILS'} on {cert['quadratics']} quadratics")
    if d.defects:
        print("defects: " + "; ".join(d.defects))
    report = {"command": "decorate", "config": cfg.describe(), "workbench": bench.describe(),
              "radicands": [repr(r) for r in (bench.ambient.field.radicands if layout == "ambient" else ())],
              "decoration": d.to_dict(), "degrees": degrees, "discriminants": cert, "defects": d.defects}
    write_report(report, cfg.output)
    return EXIT_OK if cert["holds"] and not d.defects else EXIT_FAIL


def cmd_chain(cfg: RunConfig, labeled: bool = False) -> int:
    n = max(cfg.max_level, 1)
    bench = cfg.bench()
    chain = bench.chain(n, mode="labeled" if labeled else "unlabeled")
    rows = []
    for v in sorted(chain.nodes):
        node = chain.nodes[v]
        rows.append([str(v), "E" if v.is_root else v.label_str(), repr(node.a_value) if node.a_value is not None else "",
                     f"x^3 + ({node.curve.c2})x^2 + ({node.curve.c1})x + ({node.curve.c0})"])
    print(table(rows, ["vertex", "kernel", "a-value", "curve"]))
    ok = all(c["holds"] for c in chain.kernel_checks)
    if labeled:
        print(f"\nkernel checks: {sum(c['holds'] for c in chain.kernel_checks)}/{len(chain.kernel_checks)} hold")
    report = {"command": "chain", "config": cfg.describe(), "workbench": bench.describe(),
              "radicands": [repr(r) for r in bench.ambient.field.radicands], "chain": chain.to_dict()}
    write_report(report, cfg.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_torsion(cfg: RunConfig) -> int:
    n = max(cfg.max_level, 1)
    bench = cfg.bench()
    tb = bench.torsion
    tb.ensure(n)
    rows, records, ok = [], [], True
    for m in range(1, n + 1):
        P, Q = tb.P[m], tb.Q[m]
        halves_ok = m == 1 or (P.double() == tb.P[m - 1] and Q.double() == tb.Q[m - 1])
        pts = tb.all_points(m) if m <= 3 else None
        distinct = None
        if pts is not None:
            distinct = sum(1 for i, p in enumerate(pts) if all(p != q for q in pts[:i])) == len(pts)
        Km, Kx = bench.Kn(m), bench.Kx(m)
        ok = ok and halves_ok and distinct is not False
        rows.append([m, "yes" if halves_ok else "NO", len(pts) if pts else "-", "yes" if distinct else "-",
                     Km.degree, Kx.degree])
        records.append({"level": m, "P": [repr(P.x), repr(P.y)], "Q": [repr(Q.x), repr(Q.y)],
                        "doubles_to_previous": halves_ok, "points": len(pts) if pts else None,
                        "points_distinct": distinct, "K_n_degree": Km.degree, "Kx_degree": Kx.degree})
    print(table(rows, ["n", "2*basis = previous", "#E[2^n]", "distinct", "[K_n : base]", "[K(x(E[2^n])) : base]"]))
    report = {"command": "torsion", "config": cfg.describe(), "workbench": bench.describe(),
              "radicands": [repr(r) for r in bench.ambient.field.radicands], "levels": records}
    write_report(report, cfg.output)
    return EXIT_OK if ok else EXIT_FAIL


def run_claims(cfg: RunConfig, timings: bool = False) -> tuple[dict, list]:
    bench = cfg.bench()
    claims = sorted(cfg.claims) if cfg.claims else default_claims(cfg)
    verdicts = []
    for claim in claims:
        started = time.perf_counter()
        v = verify(claim, claim_level(claim, cfg.max_level), bench)
        v.runtime = time.perf_counter() - started
        verdicts.append(v)
    rows = []
    for v in verdicts:
        d = v.to_dict()
        if not timings:
            d.pop("runtime_s")
        d["level"] = claim_level(v.claim, cfg.max_level)
        rows.append(d)
    report = {
        "command": "verify",
        "version": __version__,
        "config": cfg.describe(),
        "workbench": bench.describe(),
        "claims": rows,
        "summary": {"passed": sum(v.passed for v in verdicts), "failed": sum(not v.passed for v in verdicts)},
    }
    return report, verdicts


def cmd_verify(cfg: RunConfig, timings: bool = False) -> int:
    report, verdicts = run_claims(cfg, timings)
    rows = [[v.claim, claim_level(v.claim, cfg.max_level), v.status,
             sum(c["holds"] == c["expected"] for c in v.checks), len(v.checks), f"{v.runtime:.2f}s"] for v in verdicts]
    print(table(rows, ["claim", "n", "status", "ok", "checks", "time"]))
    for v in verdicts:
        for note in v.notes:
            print(f"  {v.claim}: {note}")
        for c in v.checks:
            if c["holds"] != c["expected"]:
                print(f"  {v.claim}: FAILED {c['check']}")
    s = report["summary"]
    print(f"\n{s['passed']} passed, {s['failed']} failed")
    write_report(report, cfg.output)
    return EXIT_OK if s["failed"] == 0 else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["specialized", "generic"], default="specialized")
    common.add_argument("--alphas", default="0,1,3", help="three distinct rationals, e.g. 0,1,3 or 1/2,3,-4")
    common.add_argument("--level", "-n", type=int, default=2, help="maximum tree level (default 2)")
    common.add_argument("--convention", choices=CONVENTIONS, default="twisted")
    common.add_argument("--variant", choices=VARIANTS, default="construction-consistent")
    common.add_argument("--policy", choices=POLICIES, default="first", help="root assignment for decorate")
    common.add_argument("--zeta-level", type=int, default=2,
                        help="constant field QQ(zeta_{2^N}); 1 means QQ (default 2)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write a JSON report here")
    common.add_argument("--long", action="store_true", help="allow long generic-mode computations")

    parser = argparse.ArgumentParser(prog="divtower", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("tree", parents=[common], help="list tree vertices with labels, parents and twins")
    sub.add_parser("decorate", parents=[common], help="build a decoration and certify its quadratics")
    p = sub.add_parser("chain", parents=[common], help="build the isogeny chain")
    p.add_argument("--labeled", action="store_true", help="assign roots by pushing torsion points; checks kernels")
    sub.add_parser("torsion", parents=[common], help="torsion basis by halving, with field degrees")
    p = sub.add_parser("verify", parents=[common], help="run claims and emit a report")
    p.add_argument("--claims", default="", help="comma separated claim ids (default: the standard suite)")
    p.add_argument("--timings", action="store_true", help="include runtimes in the JSON report")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    return parser


def config_from_args(args) -> RunConfig:
    alphas = parse_alphas(args.alphas) if args.mode == "specialized" else ()
    policies = (args.policy, "swapped" if args.policy != "swapped" else "first")
    claims = [c.strip() for c in getattr(args, "claims", "").split(",") if c.strip()]
    return RunConfig(mode=args.mode, alphas=alphas, max_level=args.level, convention=args.convention,
                     recursion_variant=args.variant, policies=policies, claims=claims, output=args.out,
                     seed=args.seed, long=args.long, zeta_level=args.zeta_level).validate()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list:
        for claim in sorted(CLAIMS):
            print(claim)
        return EXIT_OK
    try:
        cfg = config_from_args(args)
        if args.command == "tree":
            return cmd_tree(cfg)
        if args.command == "decorate":
            return cmd_decorate(cfg)
        if args.command == "chain":
            return cmd_chain(cfg, labeled=args.labeled)
        if args.command == "torsion":
            return cmd_torsion(cfg)
        return cmd_verify(cfg, timings=args.timings)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
