#!/usr/bin/env python3
"""Regenerate the graph6 corpora under tests/data.

Graphs are enumerated up to isomorphism by one-vertex augmentation with
canonical-form deduplication (pynauty). Output is sorted so the files are
stable across runs.

    pip install pynauty networkx
    python3 tools/corpus/generate_corpus.py tests/data
"""
import itertools
import os
import sys

import networkx as nx
import pynauty


def canon(n, adj):
    g = pynauty.Graph(n, adjacency_dict={v: list(adj[v]) for v in range(n)})
    return pynauty.certificate(g)


def extend_all(graphs, n, keep):
    """All graphs on n vertices obtained by adding vertex n-1 to graphs on n-1."""
    seen = {}
    for adj in graphs:
        for mask in range(1 << (n - 1)):
            nbrs = [v for v in range(n - 1) if mask >> v & 1]
            if not keep(adj, nbrs):
                continue
            new = [set(s) for s in adj] + [set(nbrs)]
            for v in nbrs:
                new[v].add(n - 1)
            cert = canon(n, new)
            if cert not in seen:
                seen[cert] = new
    return list(seen.values())


def any_graph(adj, nbrs):
    return True


def triangle_free_ext(adj, nbrs):
    s = set(nbrs)
    return all(not (adj[v] & s) for v in nbrs)


def to_g6(adj):
    g = nx.Graph()
    g.add_nodes_from(range(len(adj)))
    g.add_edges_from((u, v) for u in range(len(adj)) for v in adj[u] if u < v)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def write(path, graphs):
    lines = sorted(to_g6(a) for a in graphs)
    lines.sort(key=lambda s: (len(s), s))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(path, len(lines))


def main(out):
    os.makedirs(out, exist_ok=True)

    every = []
    level = [[[set()]]]
    every += level[0]
    for n in range(2, 9):
        level.append(extend_all(level[-1], n, any_graph))
        every += level[-1]
    write(os.path.join(out, "all_graphs_n1_8.g6"), every)

    tf = [[[set()]]]
    connected = []
    for n in range(2, 11):
        tf.append(extend_all(tf[-1], n, triangle_free_ext))
        for adj in tf[-1]:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from((u, v) for u in range(n) for v in adj[u] if u < v)
            if nx.is_connected(g):
                connected.append(adj)
    write(os.path.join(out, "connected_triangle_free_n2_10.g6"), connected)

    # independent reference encodings for the graph6 codec tests
    import random
    rng = random.Random(20181)
    with open(os.path.join(out, "graph6_reference.txt"), "w") as f:
        for n in range(1, 9):
            for _ in range(6):
                g = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
                edges = " ".join(f"{u}-{v}" for u, v in sorted(g.edges()))
                f.write(f"{nx.to_graph6_bytes(g, header=False).decode().strip()}\t{n}\t{edges}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
