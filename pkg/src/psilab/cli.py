"""psilab command line.

Exit codes: 0 success / no violation, 1 theorem violation, 2 input error,
3 cap exceeded, 4 counterexample found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from psilab import corpora, fixtures
from psilab import setsystem as ss
from psilab import stability as st
from psilab import theorems as th
from psilab.errors import CapExceeded, GraphParseError, UnknownPredicate
from psilab.graph import (
    DEFAULT_MAX_N,
    Graph,
    bits,
    parse_edgelist,
    parse_gen_spec,
    to_graph6,
)
from psilab.matching import MAX_MATCHINGS_LIMIT

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP, EXIT_FOUND = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    fixture: str | None = None
    graph6: str | None = None
    edges: str | None = None
    gen: str | None = None
    family: str | None = None
    letters: str | None = None
    sweep_n: int | None = None
    trees_n: int | None = None
    corona_n: int | None = None
    theorems: list[str] | None = None
    hypothesis: str | None = None
    conclusion: str | None = None
    fmt: str = "text"
    jobs: int = 1
    max_n: int = DEFAULT_MAX_N
    max_matchings: int = MAX_MATCHINGS_LIMIT
    limit: int | None = None

    def sources(self) -> list[str]:
        names = ["fixture", "graph6", "edges", "gen", "family", "sweep_n", "trees_n", "corona_n"]
        return [k for k in names if getattr(self, k) is not None]


def _default_max_n() -> int:
    raw = os.environ.get("PSILAB_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="psilab", description="Local maximum stable sets and greedoids.")
    p.add_argument("--list-fixtures", action="store_true", help="print fixture names with edge lists")
    sub = p.add_subparsers(dest="command")

    def inputs(sp, corpus: bool):
        g = sp.add_argument_group("input (exactly one)")
        g.add_argument("--fixture", metavar="NAME")
        g.add_argument("--graph6", metavar="FILE", help="graph6 lines; '-' reads stdin")
        g.add_argument("--edges", metavar="FILE", help="edge-list file; '-' reads stdin")
        g.add_argument("--gen", metavar="SPEC", help="generator, e.g. path:5, cycle:4, star:3")
        if corpus:
            g.add_argument("--sweep-n", type=_positive, metavar="K", help="all labelled graphs with 1..K vertices")
            g.add_argument("--trees-n", type=_positive, metavar="K", help="all labelled trees with 1..K vertices")
            g.add_argument("--corona-n", type=_positive, metavar="K",
                           help="coronas over all labelled X with 1..K vertices and the standard part pool")
        else:
            g.add_argument("--family", metavar="LITERAL", help="family literal, e.g. '∅;a;b;ab'")
            sp.add_argument("--letters", metavar="NAMES", help="vertex letters for --family, e.g. abcd")

    def common(sp):
        sp.add_argument("--format", dest="fmt", choices=["json", "text"], default="text")
        sp.add_argument("--max-n", type=_positive, default=None, help="vertex cap (env PSILAB_MAX_N)")
        sp.add_argument("--max-matchings", type=_positive, default=MAX_MATCHINGS_LIMIT)
        sp.add_argument("--jobs", type=_positive, default=1)
        sp.add_argument("--limit", type=_positive, default=None, help="stop after this many graphs")

    sp = sub.add_parser("psi", help="enumerate local maximum stable sets")
    inputs(sp, corpus=False)
    common(sp)
    sp = sub.add_parser("classify", help="greedoid classification of Psi(G) or of a family")
    inputs(sp, corpus=False)
    common(sp)
    sp = sub.add_parser("verify", help="check theorems over a corpus")
    inputs(sp, corpus=True)
    common(sp)
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--theorem", metavar="ID[,ID...]")
    which.add_argument("--all", action="store_true")
    sp = sub.add_parser("search", help="first graph meeting a hypothesis but not a conclusion")
    inputs(sp, corpus=True)
    common(sp)
    sp.add_argument("--hypothesis", required=True, help="predicate names joined by '+', '!' negates")
    sp.add_argument("--conclusion", required=True)
    sub.add_parser("fixtures", help="same as --list-fixtures")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    theorems = None
    if getattr(ns, "all", False):
        theorems = list(th.THEOREM_IDS)
    elif getattr(ns, "theorem", None):
        theorems = th.parse_theorem_ids(ns.theorem)
    return RunConfig(
        command=ns.command,
        fixture=getattr(ns, "fixture", None),
        graph6=getattr(ns, "graph6", None),
        edges=getattr(ns, "edges", None),
        gen=getattr(ns, "gen", None),
        family=getattr(ns, "family", None),
        letters=getattr(ns, "letters", None),
        sweep_n=getattr(ns, "sweep_n", None),
        trees_n=getattr(ns, "trees_n", None),
        corona_n=getattr(ns, "corona_n", None),
        theorems=theorems,
        hypothesis=getattr(ns, "hypothesis", None),
        conclusion=getattr(ns, "conclusion", None),
        fmt=getattr(ns, "fmt", "text"),
        jobs=getattr(ns, "jobs", 1),
        max_n=ns.max_n if getattr(ns, "max_n", None) else _default_max_n(),
        max_matchings=getattr(ns, "max_matchings", MAX_MATCHINGS_LIMIT),
        limit=getattr(ns, "limit", None),
    )


# ---------------------------------------------------------------------------
# input


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_graphs(cfg: RunConfig) -> list[Graph]:
    """Graphs for the single-graph commands."""
    if cfg.fixture is not None:
        return [fixtures.fixture(cfg.fixture)]
    if cfg.graph6 is not None:
        return list(corpora.read_graph6(_read(cfg.graph6).splitlines(), cfg.max_n))
    if cfg.edges is not None:
        return [parse_edgelist(_read(cfg.edges), cfg.max_n, label=os.path.basename(cfg.edges))]
    if cfg.gen is not None:
        G = parse_gen_spec(cfg.gen)
        if G.n > cfg.max_n:
            raise CapExceeded(f"n={G.n} exceeds cap {cfg.max_n}")
        return [G]
    raise GraphParseError("no input given", 0)


def corpus_of(cfg: RunConfig):
    """``(stream, description)`` for the sweep commands."""
    if cfg.sweep_n is not None:
        return corpora.labeled_upto(cfg.sweep_n), {"kind": "labelled", "max_n": cfg.sweep_n}
    if cfg.trees_n is not None:
        info = {"kind": "trees", "max_n": cfg.trees_n}
        if cfg.trees_n > corpora.TREE_SWEEP_CAP:
            info["note"] = f"above the default tree cap of {corpora.TREE_SWEEP_CAP}"
        return corpora.trees_upto(cfg.trees_n), info
    if cfg.corona_n is not None:
        return corpora.coronas_upto(cfg.corona_n), {"kind": "corona", "max_n": cfg.corona_n}
    if cfg.fixture is not None:
        names = fixtures.fixture_names() if cfg.fixture == "all" else cfg.fixture.split(",")
        return [fixtures.fixture(n) for n in names], {"kind": "fixtures", "names": names}
    if cfg.graph6 is not None:
        return corpora.read_graph6(_read(cfg.graph6).splitlines(), cfg.max_n), {"kind": "graph6", "source": cfg.graph6}
    return load_graphs(cfg), {"kind": "single"}


def _limited(stream, limit):
    for k, item in enumerate(stream):
        if limit is not None and k >= limit:
            return
        yield item


# ---------------------------------------------------------------------------
# rendering


def fmt_set(G_or_names, S: int) -> str:
    names = G_or_names.names if isinstance(G_or_names, Graph) else G_or_names
    return "{" + ",".join(names[v] if names else str(v) for v in bits(S)) + "}"


def _names(G: Graph):
    return lambda S: G.render(S)


def cmd_psi(cfg: RunConfig, out) -> int:
    docs = []
    for G in load_graphs(cfg):
        psi = st.enumerate_psi(G, cfg.max_n)
        omega = st.max_stable(G, cfg.max_n)
        docs.append({
            "graph": G.label,
            "graph6": to_graph6(G),
            "n": G.n,
            "alpha": omega.alpha,
            "omega_size": len(omega.sets),
            "psi_size": len(psi.sets),
            "psi": [G.render(A) for A in psi.sets],
            "omega": [G.render(S) for S in omega.sets],
        })
        if cfg.fmt == "text":
            print(f"graph {G.label or to_graph6(G)}  n={G.n}", file=out)
            print(f"alpha={omega.alpha}  |Omega|={len(omega.sets)}  |Psi|={len(psi.sets)}", file=out)
            for A in psi.sets:
                print("  " + fmt_set(G, A), file=out)
    if cfg.fmt == "json":
        print(json.dumps(docs[0] if len(docs) == 1 else docs, sort_keys=True, indent=2), file=out)
    return EXIT_OK


def _classify_doc(label, g6, F: ss.SetSystem, render) -> dict:
    report = ss.classify(F)
    doc = {"graph": label, "graph6": g6, "family_size": len(F)}
    doc.update(report.flags())
    doc["witnesses"] = {k: w.render(render) for k, w in sorted(report.witnesses.items())}
    return doc


def cmd_classify(cfg: RunConfig, out) -> int:
    docs = []
    if cfg.family is not None:
        letters = list(cfg.letters) if cfg.letters else None
        F = ss.parse_family(cfg.family, letters)
        render = (lambda S: [letters[v] for v in bits(S)]) if letters else (lambda S: list(bits(S)))
        docs.append(_classify_doc(None, None, F, render))
    else:
        for G in load_graphs(cfg):
            docs.append(_classify_doc(G.label, to_graph6(G), st.enumerate_psi(G, cfg.max_n).sets, _names(G)))
    if cfg.fmt == "json":
        print(json.dumps(docs[0] if len(docs) == 1 else docs, sort_keys=True, indent=2), file=out)
    else:
        for doc in docs:
            print(f"graph {doc['graph'] or doc['graph6'] or 'family'}  |F|={doc['family_size']}", file=out)
            for flag in ss.FLAGS:
                line = f"  {flag:<18} {str(doc[flag]).lower()}"
                if flag in doc["witnesses"]:
                    w = doc["witnesses"][flag]
                    line += "  witness " + w["rule"] + " " + " ".join(
                        "{" + ",".join(map(str, s)) + "}" for s in w["sets"]
                    )
                print(line, file=out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out) -> int:
    stream, info = corpus_of(cfg)
    report = th.sweep(_limited(stream, cfg.limit), cfg.theorems, jobs=cfg.jobs, max_n=cfg.max_n, corpus_info=info)
    if cfg.fmt == "json":
        print(report.to_json(), file=out)
    else:
        print(f"corpus {json.dumps(info, sort_keys=True)}", file=out)
        for t in report.tallies.values():
            print(
                f"  {t.theorem:<18} checked={t.checked} applicable={t.applicable} held={t.held} "
                f"violated={t.violated} skipped={t.skipped} unconfirmed={t.unconfirmed}",
                file=out,
            )
            for w in sorted(t.witnesses, key=lambda w: w["graph6"]):
                print(f"    VIOLATION {w['graph6']} {w['label'] or ''} {json.dumps(w['detail'], sort_keys=True)}", file=out)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_search(cfg: RunConfig, out) -> int:
    stream, info = corpus_of(cfg)
    found = th.search_counterexample(stream, cfg.hypothesis, cfg.conclusion, cfg.limit, cfg.max_n)
    if found is None:
        doc = {"found": False, "corpus": info, "hypothesis": cfg.hypothesis, "conclusion": cfg.conclusion}
        if cfg.fmt == "json":
            print(json.dumps(doc, sort_keys=True, indent=2), file=out)
        else:
            print("none found", file=out)
        return EXIT_OK
    G, detail = found
    doc = {"found": True, "corpus": info, "graph6": to_graph6(G), "label": G.label,
           "edges": [list(e) for e in G.edges()], "detail": detail}
    if cfg.fmt == "json":
        print(json.dumps(doc, sort_keys=True, indent=2), file=out)
    else:
        print(f"counterexample {doc['graph6']} edges={doc['edges']}", file=out)
        print(f"  Psi: {detail['psi']}", file=out)
        print(f"  Omega: {detail['omega']}", file=out)
    return EXIT_FOUND


def cmd_fixtures(out) -> int:
    for name in fixtures.fixture_names():
        G = fixtures.fixture(name)
        edges = " ".join(f"{G.name(u)}-{G.name(v)}" for u, v in G.edges())
        print(f"{name:<10} n={G.n:<2} {edges}", file=out)
    return EXIT_OK


COMMANDS = {"psi": cmd_psi, "classify": cmd_classify, "verify": cmd_verify, "search": cmd_search}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if ns.list_fixtures or ns.command == "fixtures":
        return cmd_fixtures(out)
    if ns.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT
    try:
        cfg = config_from_args(ns)
        if len(cfg.sources()) != 1:
            print(f"psilab: exactly one input source required, got {cfg.sources() or 'none'}", file=sys.stderr)
            return EXIT_INPUT
        if cfg.command in ("search",):
            th.compile_predicate(cfg.hypothesis)
            th.compile_predicate(cfg.conclusion)
        return COMMANDS[cfg.command](cfg, out)
    except (GraphParseError, UnknownPredicate, KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"psilab: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"psilab: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
