#!/usr/bin/env python3
"""Writes the small TU-format fixture under tests/data/MOLS (seeded, stdlib only)."""
import random
import sys
from pathlib import Path

def molecule(rng):
    n = rng.randint(8, 18)
    edges = set()
    # random tree backbone, then a few ring closures
    for v in range(1, n):
        u = rng.randrange(max(0, v - 3), v)
        edges.add((u, v))
    for _ in range(rng.randint(0, 3)):
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    labels = [rng.choices(range(6), weights=[8, 3, 2, 1, 1, 1])[0] for _ in range(n)]
    return n, sorted(edges), labels

def main(out):
    rng = random.Random(20240611)
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    A, ind, cls, nl = [], [], [], []
    offset = 0
    for g in range(24):
        n, edges, labels = molecule(rng)
        for u, v in edges:
            A.append(f"{offset + u + 1}, {offset + v + 1}")
            A.append(f"{offset + v + 1}, {offset + u + 1}")
        ind += [str(g + 1)] * n
        nl += [str(x) for x in labels]
        cls.append("1" if len(edges) - n + 1 >= 2 or labels.count(0) < n / 2 else "-1")
        offset += n
    for suffix, rows in (("A", A), ("graph_indicator", ind), ("graph_labels", cls), ("node_labels", nl)):
        (out / f"MOLS_{suffix}.txt").write_text("\n".join(rows) + "\n")

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/MOLS")
