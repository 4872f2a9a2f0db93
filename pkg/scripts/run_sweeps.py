"""Run the theorem sweeps and write one JSON report per corpus.

    python3 scripts/run_sweeps.py --out reports --jobs 2
    python3 scripts/run_sweeps.py --only trees --tree-n 9   # about half an hour
"""

import argparse
import json
import pathlib
import time
from dataclasses import asdict, dataclass

from psilab import theorems as th
from psilab.corpora import TREE_SWEEP_CAP, coronas_upto, labeled_upto, trees_upto

LABELLED_IDS = [
    "NT1", "BERGE5", "UNION3", "ACC_IFF_INTERVAL", "LEM_UNIQUE4", "LEM_UNION1", "ANTI8",
    "MATROID6", "SIMPLICIAL7", "SIMP_LOCAL_POSET2", "TRI33", "TRI_MATROID_C1", "BIP22",
]
TREE_IDS = ["FOREST2", "TREE_ANTI_C2", "TREE_TRIMMED"]


@dataclass
class SweepConfig:
    out: str = "reports"
    jobs: int = 1
    labelled_n: int = 6
    tree_n: int = TREE_SWEEP_CAP
    corona_n: int = 3
    only: str | None = None


def corpora(cfg: SweepConfig):
    yield "labelled", labeled_upto(cfg.labelled_n), LABELLED_IDS, {"kind": "labelled", "max_n": cfg.labelled_n}
    info = {"kind": "trees", "max_n": cfg.tree_n}
    if cfg.tree_n <= TREE_SWEEP_CAP:
        info["cap_note"] = f"capped at n={TREE_SWEEP_CAP}; n=9 (4782969 trees) takes about 30 minutes on one core"
    yield "trees", trees_upto(cfg.tree_n), TREE_IDS, info
    yield "corona", coronas_upto(cfg.corona_n), ["CORONA333"], {"kind": "corona", "max_n": cfg.corona_n}


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    p.add_argument("--out", default=defaults.out)
    p.add_argument("--jobs", type=int, default=defaults.jobs)
    p.add_argument("--labelled-n", type=int, default=defaults.labelled_n)
    p.add_argument("--tree-n", type=int, default=defaults.tree_n)
    p.add_argument("--corona-n", type=int, default=defaults.corona_n)
    p.add_argument("--only", choices=["labelled", "trees", "corona"])
    cfg = SweepConfig(**vars(p.parse_args()))

    out = pathlib.Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    status = 0
    summary = {"config": asdict(cfg), "runs": []}
    for name, stream, ids, info in corpora(cfg):
        if cfg.only and name != cfg.only:
            continue
        t0 = time.perf_counter()
        report = th.sweep(stream, ids, jobs=cfg.jobs, corpus_info=info)
        elapsed = time.perf_counter() - t0
        (out / f"{name}.json").write_text(report.to_json() + "\n")
        checked = next(iter(report.tallies.values())).checked
        print(f"{name:<9} graphs={checked:<7} violations={report.violations} skipped={report.skipped} "
              f"time={elapsed:.1f}s -> {out / (name + '.json')}")
        summary["runs"].append({"corpus": name, "graphs": checked, "violations": report.violations,
                                "skipped": report.skipped, "seconds": round(elapsed, 1)})
        status |= bool(report.violations)
    (out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
