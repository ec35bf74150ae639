"""How often each classification flag holds on random networks, per dimension.

    python3 scripts/survey_classes.py --count 300 --seed 0
"""

import argparse
import random
from collections import Counter

from crnet.classify import ClassificationReport, classify
from crnet.generate import GeneratorConfig, random_network, random_weakly_reversible


def survey(dim: int, count: int, seed: int, cfg: GeneratorConfig) -> Counter:
    rng = random.Random(seed)
    tally: Counter = Counter()
    for i in range(count):
        if i % 2:
            G = random_weakly_reversible(rng, dim, rng.randint(2, 4), cfg)
        else:
            G = random_network(rng, dim, rng.randint(1, 4), cfg)
        rep = classify(G)
        for name, value in rep.flags().items():
            tally[name] += value
        tally["chain_violations"] += not (
            (not rep.reversible or rep.weakly_reversible)
            and (not rep.weakly_reversible or rep.endotactic)
            and (not rep.strongly_endotactic or rep.endotactic)
            and (not rep.endotactic or rep.consistent)
        )
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-coord", type=int, default=3)
    args = ap.parse_args()
    cfg = GeneratorConfig(max_coord=args.max_coord)
    names = list(ClassificationReport.FLAGS) + ["chain_violations"]
    print(f"{'flag':32}" + "".join(f"{'d=' + str(d):>8}" for d in (1, 2, 3)))
    tallies = {d: survey(d, args.count, args.seed + d, cfg) for d in (1, 2, 3)}
    for name in names:
        print(f"{name:32}" + "".join(f"{tallies[d][name]:>8}" for d in (1, 2, 3)))
    print(f"({args.count} networks per dimension, half built weakly reversible)")


if __name__ == "__main__":
    main()
