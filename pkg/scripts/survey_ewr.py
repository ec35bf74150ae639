"""Run the planar weakly reversible construction on random strongly
endotactic boundary networks and report output sizes and edge kinds.

    python3 scripts/survey_ewr.py --count 60 --seed 0
"""

import argparse
import random
import time
from collections import Counter

from crnet.classify import is_strongly_endotactic
from crnet.egraph import is_weakly_reversible
from crnet.equivalence import dynamics_included
from crnet.generate import random_strongly_endotactic_boundary
from crnet.realize import ewr_realize_2d


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=60)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-sources", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    kinds: Counter = Counter()
    done = already = failed = 0
    edges_in = edges_out = 0
    start = time.time()
    while done < args.count:
        G = random_strongly_endotactic_boundary(rng, rng.randint(3, args.max_sources))
        if G is None:
            continue
        if is_weakly_reversible(G):
            already += 1
            continue
        res = ewr_realize_2d(G)
        H = res.graph
        ok = is_weakly_reversible(H) and is_strongly_endotactic(H)[0] and dynamics_included(G, H).holds
        failed += not ok
        done += 1
        edges_in += len(G.edges)
        edges_out += len(H.edges)
        kinds.update(p.kind for p in res.provenance)
    print(f"inputs: {done} (plus {already} already weakly reversible)")
    print(f"postcondition failures: {failed}")
    print(f"mean edges: {edges_in / done:.2f} in, {edges_out / done:.2f} out")
    print("new edges by kind: " + ", ".join(f"{k} {v}" for k, v in sorted(kinds.items())))
    print(f"elapsed {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
