#!/usr/bin/env python3
"""Cross-checks a graph6 corpus against networkx.

Decodes every line with networkx's own graph6 reader and, for n <= 7, checks
that the corpus holds exactly one representative of every connected graph in
the networkx graph atlas.
"""
import sys
from collections import defaultdict

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main(path):
    graphs = []
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(nx.from_graph6_bytes(line))

    atlas = defaultdict(list)
    for g in graph_atlas_g():
        if g.number_of_nodes() >= 1 and nx.is_connected(g):
            atlas[(g.number_of_nodes(), g.number_of_edges())].append(g)

    by_key = defaultdict(list)
    for g in graphs:
        if not nx.is_connected(g):
            print("disconnected graph in corpus:", nx.to_graph6_bytes(g, header=False))
            return 1
        by_key[(g.number_of_nodes(), g.number_of_edges())].append(g)

    for key, reps in by_key.items():
        if key[0] > 7:
            continue
        ref = atlas[key]
        if len(ref) != len(reps):
            print("count mismatch for (n, m) =", key, len(reps), "vs", len(ref))
            return 1
        matched = [False] * len(ref)
        for g in reps:
            hits = [i for i, h in enumerate(ref) if nx.is_isomorphic(g, h)]
            if len(hits) != 1 or matched[hits[0]]:
                print("isomorphism mismatch for", key)
                return 1
            matched[hits[0]] = True

    counts = defaultdict(int)
    for g in graphs:
        counts[g.number_of_nodes()] += 1
    print("ok", dict(sorted(counts.items())))
    for s in (b"A_", b"Bw", b"A?"):
        g = nx.from_graph6_bytes(s)
        print(s.decode(), g.number_of_nodes(), sorted(g.edges()))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
