"""Command-line interface.

Exit codes: 0 success, 1 theorem or agreement violation, 2 usage or parse
error, 3 enumeration budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import arrangement, chromatic, csf, isf, orientations
from .errors import BudgetExceeded, GraphError, TheoremViolation
from .graph import FAMILIES, Graph, family, parse_edge_list, random_graph
from .polynomial import log_concavity

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

GRAPH_COMMANDS = ("poly", "eval", "chromatic-number", "nbc", "orient", "arrangement",
                  "isf", "csf", "check")


@dataclass
class RunConfig:
    command: str
    path: str | None = None
    family: str | None = None
    n: int | None = None
    p: float = 0.5
    method: str = "dc"
    t: int | None = None
    t_max: int | None = None
    pairs: bool = False
    list_all: bool = False
    max_n: int = 9
    json: bool = False
    seed: int | None = None
    max_subsets: int = chromatic.DEFAULT_MAX_SUBSETS
    max_colorings: int = chromatic.DEFAULT_MAX_COLORINGS

    def validate(self):
        if self.max_subsets < 1 or self.max_colorings < 1:
            raise UsageError("budgets must be positive")
        if self.command in GRAPH_COMMANDS:
            if (self.path is None) == (self.family is None):
                raise UsageError("give exactly one input: a graph file or --family")
        if self.family is not None and self.n is None:
            raise UsageError("--family needs -n")


class UsageError(Exception):
    pass


def parse_graph_file(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def _family_graph(cfg: RunConfig) -> Graph:
    if cfg.family == "random":
        return random_graph(cfg.n, cfg.p, cfg.seed if cfg.seed is not None else 0)
    return family(cfg.family, cfg.n)


def _load(cfg: RunConfig) -> Graph:
    return parse_graph_file(cfg.path) if cfg.path is not None else _family_graph(cfg)


def _order(cfg: RunConfig, G: Graph):
    if cfg.seed is None or cfg.family == "random":
        return chromatic.lex_order(G)
    return chromatic.random_order(G, random.Random(cfg.seed))


def _edge_str(e) -> str:
    return f"{e[0]}-{e[1]}"


def _set_str(A) -> str:
    return "{" + ",".join(_edge_str(e) for e in sorted(A)) + "}"


# ----------------------------------------------------------------------------
# Commands. Each returns (text, json-able object).


def cmd_poly(cfg, G):
    if cfg.method == "dc":
        P = chromatic.chromatic_poly_dc(G)
    elif cfg.method == "nbc":
        P = chromatic.chromatic_poly_nbc(G, _order(cfg, G), cfg.max_subsets)
    elif cfg.method == "interp":
        P = chromatic.chromatic_poly_interp(G, cfg.max_colorings)
    else:
        raise UsageError(f"unknown method {cfg.method!r}")
    return str(P), {"method": cfg.method, "poly": P.to_json(), "text": str(P)}


def cmd_eval(cfg, G):
    if cfg.t is None:
        raise UsageError("eval needs -t")
    value = chromatic.chromatic_poly_dc(G).eval(cfg.t)
    return str(value), {"t": cfg.t, "value": str(value) if abs(value) >= 2**63 else value}


def cmd_chromatic_number(cfg, G):
    k = chromatic.chromatic_number(G)
    return str(k), {"chromatic_number": k}


def cmd_nbc(cfg, G):
    rep = chromatic.nbc_report(G, _order(cfg, G), cfg.max_subsets)
    lines = ["order: " + " < ".join(_edge_str(e) for e in rep.order),
             "broken circuits: " + (", ".join(sorted(_set_str(b) for b in rep.broken_circuits))
                                    or "none")]
    for k, sets in enumerate(rep.nbc_sets_by_k):
        shown = ", ".join(sorted(_set_str(A) for A in sets)) if sets else "none"
        lines.append(f"k={k} nbc={len(sets)}: {shown}")
    obj = {
        "order": [list(e) for e in rep.order],
        "broken_circuits": sorted(sorted(list(e) for e in b) for b in rep.broken_circuits),
        "nbc_counts": list(rep.nbc_counts),
        "nbc_sets": [sorted(sorted(list(e) for e in A) for A in sets) for sets in rep.nbc_sets_by_k],
    }
    return "\n".join(lines), obj


def cmd_orient(cfg, G):
    count, found = orientations.acyclic_orientations(G, collect=cfg.list_all, budget=cfg.max_subsets)
    lines = [f"orientations: {2 ** G.m}", f"acyclic: {count}"]
    obj = {"orientations": 2 ** G.m, "acyclic": count}
    if found is not None:
        arcs = [[list(a) for a in O.arcs] for O in found]
        lines += [" ".join(f"{u}->{v}" for u, v in O.arcs) for O in found]
        obj["acyclic_orientations"] = arcs
    if cfg.pairs:
        if cfg.t is None or cfg.t < 1:
            raise UsageError("--pairs needs -t K with K >= 1")
        pairs = orientations.compatible_pairs_count(G, cfg.t, cfg.max_colorings)
        lines.append(f"compatible pairs (t={cfg.t}): {pairs}")
        obj["t"] = cfg.t
        obj["compatible_pairs"] = pairs
    return "\n".join(lines), obj


def cmd_arrangement(cfg, G):
    L = arrangement.bond_lattice(G, cfg.max_subsets)
    mu = L.mobius
    chi = arrangement.characteristic_poly(L)
    lines = [f"flats: {len(L)}"]
    lines += [f"{F}  dim={F.dim}  mu={mu[F]}" for F in L.flats]
    lines.append(f"characteristic polynomial: {chi}")
    obj = {"flats": [{"flat": str(F), "dim": F.dim, "mu": mu[F]} for F in L.flats],
           "char_poly": chi.to_json(), "text": str(chi)}
    return "\n".join(lines), obj


def cmd_isf(cfg, G):
    levels = isf.level_sets(G)
    poly = isf.isf_poly(G)
    counts = [len(fs) for fs in isf.enumerate_isf(G, cfg.max_subsets)]
    peo = isf.is_natural_peo(G)
    lines = [f"E_{j}: {_set_str(levels[j]) if levels[j] else '{}'}" for j in G.vertices]
    lines.append(f"ISF: {poly}")
    lines.append("isf counts: " + " ".join(map(str, counts)))
    if peo.ok:
        lines.append("natural order is a perfect elimination ordering")
    else:
        lines.append(f"natural order is not a perfect elimination ordering: "
                     f"vertex {peo.vertex} misses edge {_edge_str(peo.missing)}")
    obj = {"level_sets": [[list(e) for e in levels[j]] for j in G.vertices],
           "isf_poly": poly.to_json(), "text": str(poly), "isf_counts": counts,
           "peo": peo.ok,
           "peo_witness": None if peo.ok else {"vertex": peo.vertex, "missing": list(peo.missing)}}
    return "\n".join(lines), obj


def cmd_csf(cfg, G):
    X = csf.csf_nbc(G, _order(cfg, G), cfg.max_subsets)
    return str(X), X.to_json()


def cmd_gen(cfg, G=None):
    if cfg.family is None or cfg.n is None:
        raise UsageError("gen needs --family and -n")
    H = _family_graph(cfg)
    return H.to_text().rstrip("\n"), {"n": H.n, "edges": [list(e) for e in H.edges]}


def cmd_trees(cfg, G=None):
    rep = csf.tree_scan(cfg.max_n)
    lines = [f"n={n}: {c} classes" for n, c in rep.class_counts.items()]
    lines.append("chromatic polynomials t(t-1)^(n-1): " + ("PASS" if not rep.bad_chromatic else "FAIL"))
    lines.append("symmetric functions pairwise distinct: " + ("PASS" if not rep.collisions else "FAIL"))
    for a, b in rep.collisions:
        lines.append(f"collision: {a!r} and {b!r}")
    obj = {"class_counts": {str(n): c for n, c in rep.class_counts.items()},
           "chromatic_ok": not rep.bad_chromatic,
           "distinct": not rep.collisions,
           "collisions": [[a.to_text(), b.to_text()] for a, b in rep.collisions]}
    if not rep.passed:
        raise _Failed("\n".join(lines), obj)
    return "\n".join(lines), obj


class _Failed(Exception):
    def __init__(self, text, obj):
        super().__init__(text)
        self.text = text
        self.obj = obj


def cmd_check(cfg, G):
    """Run every cross-check on one graph; FAIL lines make the exit code 1."""
    results = []

    def record(name, fn):
        try:
            detail = fn()
            results.append((name, True, detail))
        except TheoremViolation as exc:
            results.append((name, False, str(exc)))

    def three_way():
        dc = chromatic.chromatic_poly_dc(G)
        nbc = chromatic.chromatic_poly_nbc(G, budget=cfg.max_subsets)
        interp = chromatic.chromatic_poly_interp(G, cfg.max_colorings)
        if not dc == nbc == interp:
            raise TheoremViolation("three-way agreement", G, dc, f"{nbc} / {interp}")
        return str(dc)

    def stanley():
        t_max = cfg.t_max if cfg.t_max is not None else (3 if G.n <= 5 else 2)
        rep = orientations.verify_stanley(G, t_max, cfg.max_colorings)
        return "; ".join(f"t={t}: P(-t)={p} pairs={q}" for t, p, q in rep.rows)

    def zaslavsky():
        rep = arrangement.verify_zaslavsky(G, cfg.max_subsets)
        return f"chi(-1)={rep.value_at_minus_one} regions={rep.regions} flats={rep.flats}"

    def isf_theorems():
        rep = isf.verify_isf_theorems(G, cfg.max_subsets)
        return (f"isf={list(rep.isf_counts)} nbc={list(rep.nbc_counts)} "
                f"peo={rep.peo.ok} equal={rep.polys_equal}")

    def csf_specialization():
        X = csf.csf_nbc(G, budget=cfg.max_subsets)
        P = chromatic.chromatic_poly_dc(G)
        S = csf.specialize(X)
        if S != P:
            raise TheoremViolation("symmetric function specialization", G, S, P)
        return str(X)

    def log_concave():
        P = chromatic.chromatic_poly_dc(G)
        lc = log_concavity(P)
        if not lc.log_concave:
            raise TheoremViolation("log-concavity", G, str(P), "log-concave coefficients")
        if not lc.alternating:
            raise TheoremViolation("sign alternation", G, str(P), "alternating coefficients")
        return "coefficients log-concave and alternating"

    record("three-way polynomial agreement", three_way)
    record("acyclic orientations / compatible pairs", stanley)
    record("graphical arrangement regions", zaslavsky)
    record("increasing spanning forests", isf_theorems)
    record("symmetric function specialization", csf_specialization)
    record("log-concavity", log_concave)

    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in results]
    obj = {"graph": {"n": G.n, "edges": [list(e) for e in G.edges]},
           "checks": [{"name": name, "passed": ok, "detail": detail} for name, ok, detail in results]}
    if not all(ok for _, ok, _ in results):
        raise _Failed("\n".join(lines), obj)
    return "\n".join(lines), obj


COMMANDS = {
    "poly": cmd_poly,
    "eval": cmd_eval,
    "chromatic-number": cmd_chromatic_number,
    "nbc": cmd_nbc,
    "orient": cmd_orient,
    "arrangement": cmd_arrangement,
    "isf": cmd_isf,
    "csf": cmd_csf,
    "gen": cmd_gen,
    "trees": cmd_trees,
    "check": cmd_check,
}


def _render(cfg, obj, text) -> str:
    if cfg.json:
        return json.dumps(obj, sort_keys=True)
    return text


def run(cfg: RunConfig) -> tuple[int, str, str]:
    """Execute one command; returns (exit code, stdout text, stderr text)."""
    try:
        cfg.validate()
        G = _load(cfg) if cfg.command in GRAPH_COMMANDS else None
        text, obj = COMMANDS[cfg.command](cfg, G)
        return EXIT_OK, _render(cfg, obj, text), ""
    except _Failed as exc:
        return EXIT_VIOLATION, _render(cfg, exc.obj, exc.text), "theorem check failed"
    except TheoremViolation as exc:
        return EXIT_VIOLATION, "", str(exc)
    except BudgetExceeded as exc:
        return EXIT_BUDGET, "", str(exc)
    except (GraphError, UsageError) as exc:
        return EXIT_USAGE, "", str(exc)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None,
                        help="random edge order (nbc, csf, poly --method nbc) or random family seed")
    common.add_argument("--max-subsets", type=int, default=chromatic.DEFAULT_MAX_SUBSETS)
    common.add_argument("--max-colorings", type=int, default=chromatic.DEFAULT_MAX_COLORINGS)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", default=None, help="edge-list file, or - for stdin")
    source.add_argument("--family", choices=FAMILIES + ("random",))
    source.add_argument("-n", type=int, default=None)
    source.add_argument("--p", type=float, default=0.5, help="edge probability for --family random")

    parser = argparse.ArgumentParser(prog="chrompoly", description="Exact chromatic polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common, source], help="chromatic polynomial")
    p.add_argument("--method", choices=("dc", "nbc", "interp"), default="dc")
    p = sub.add_parser("eval", parents=[common, source], help="evaluate P(G;t)")
    p.add_argument("-t", type=int, required=True)
    sub.add_parser("chromatic-number", parents=[common, source])
    sub.add_parser("nbc", parents=[common, source], help="broken circuits and NBC sets")
    p = sub.add_parser("orient", parents=[common, source], help="acyclic orientations")
    p.add_argument("--pairs", action="store_true", help="also count compatible pairs")
    p.add_argument("-t", type=int, default=None)
    p.add_argument("--list", dest="list_all", action="store_true")
    sub.add_parser("arrangement", parents=[common, source], help="bond lattice and Mobius function")
    sub.add_parser("isf", parents=[common, source], help="increasing spanning forests")
    sub.add_parser("csf", parents=[common, source], help="chromatic symmetric function")
    p = sub.add_parser("gen", parents=[common], help="print a standard or random graph")
    p.add_argument("--family", choices=FAMILIES + ("random",), required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p = sub.add_parser("trees", parents=[common], help="scan trees up to isomorphism")
    p.add_argument("--max-n", type=int, default=9)
    p = sub.add_parser("check", parents=[common, source], help="run every theorem check")
    p.add_argument("--t-max", type=int, default=None)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        path=getattr(ns, "input", None),
        family=getattr(ns, "family", None),
        n=getattr(ns, "n", None),
        p=getattr(ns, "p", 0.5),
        method=getattr(ns, "method", "dc"),
        t=getattr(ns, "t", None),
        t_max=getattr(ns, "t_max", None),
        pairs=getattr(ns, "pairs", False),
        list_all=getattr(ns, "list_all", False),
        max_n=getattr(ns, "max_n", 9),
        json=ns.json,
        seed=ns.seed,
        max_subsets=ns.max_subsets,
        max_colorings=ns.max_colorings,
    )


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    code, out, err = run(config_from_args(ns))
    if out:
        print(out)
    if err:
        print(f"chrompoly: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
