"""Count labelled trees whose Psi is a trimmed matroid but not a matroid.

The constructed witness (hereditary closure, union closure) certifies
trimmedness; any tree it certifies without Psi being a matroid shows that
trimmedness alone does not force the matroid property.  A tree the
construction fails on may still be trimmed by some other pair (P4 is one).

    python3 scripts/trimmed_trees.py --max-n 7
"""

import argparse
from collections import Counter

from psilab.corpora import trees_upto
from psilab.graph import to_graph6
from psilab.theorems import PREDICATES, GraphFacts


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=7)
    args = p.parse_args()

    counts: Counter = Counter()
    first = {}
    trimmed = PREDICATES["psi-trimmed-witness"]
    for T in trees_upto(args.max_n):
        f = GraphFacts(T)
        key = (T.n, f.matroid[0], trimmed(f))
        counts[key] += 1
        first.setdefault(key, to_graph6(T))
    print(f"{'n':>2} {'matroid':>8} {'certified':>9} {'trees':>8}  example")
    for (n, m, t), c in sorted(counts.items()):
        print(f"{n:>2} {str(m):>8} {str(t):>9} {c:>8}  {first[(n, m, t)]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
