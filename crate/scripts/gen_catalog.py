#!/usr/bin/env python3
"""Regenerate the graph6 fixture catalogs used by the test suites.

graphs_upto7.g6    every graph on 0..7 vertices up to isomorphism (networkx atlas)
connected8.g6      every connected graph on 8 vertices up to isomorphism
"""
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def relabel(g):
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


def atlas_upto7():
    return [relabel(g) for g in nx.graph_atlas_g()]


def graphs8(seven):
    buckets = defaultdict(list)
    out = []
    for base in seven:
        for mask in range(1 << 7):
            g = base.copy()
            g.add_node(7)
            for i in range(7):
                if mask >> i & 1:
                    g.add_edge(i, 7)
            key = (
                tuple(sorted(d for _, d in g.degree())),
                nx.weisfeiler_lehman_graph_hash(g, iterations=3),
            )
            bucket = buckets[key]
            if any(nx.is_isomorphic(g, h) for h in bucket):
                continue
            bucket.append(g)
            out.append(g)
    return out


def main(dest):
    dest = Path(dest)
    graphs = atlas_upto7()
    counts = defaultdict(int)
    for g in graphs:
        counts[g.number_of_nodes()] += 1
    assert [counts[k] for k in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044], counts
    # the atlas encodes the null graph as "?" which networkx refuses to emit
    lines = ["?"] + [g6(g) for g in graphs if g.number_of_nodes() > 0]
    (dest / "graphs_upto7.g6").write_text("\n".join(lines) + "\n")

    seven = [g for g in graphs if g.number_of_nodes() == 7]
    eight = graphs8(seven)
    assert len(eight) == 12346, len(eight)
    conn = [g for g in eight if nx.is_connected(g)]
    assert len(conn) == 11117, len(conn)
    (dest / "connected8.g6").write_text("\n".join(g6(g) for g in conn) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/fixtures")
