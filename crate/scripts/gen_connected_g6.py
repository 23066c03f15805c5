"""Write all connected simple graphs of a given order as graph6 lines.

Uses nauty (via pynauty) certificates for isomorphism dedup, growing each
order from the previous one by attaching a new vertex to a nonempty subset.
Every connected graph has a non-cut vertex, so this reaches every class.

    python3 scripts/gen_connected_g6.py 8 > connected_8.g6
"""
import itertools
import sys

import networkx as nx
import pynauty


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def connected_graphs(order):
    level = {certificate(1, []): []}
    for n in range(2, order + 1):
        nxt = {}
        for edges in level.values():
            for k in range(1, n):
                for nbrs in itertools.combinations(range(n - 1), k):
                    grown = edges + [(u, n - 1) for u in nbrs]
                    cert = certificate(n, grown)
                    if cert not in nxt:
                        nxt[cert] = grown
        level = nxt
    return level.values()


def main():
    order = int(sys.argv[1])
    lines = []
    for edges in connected_graphs(order):
        g = nx.Graph()
        g.add_nodes_from(range(order))
        g.add_edges_from(edges)
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    for line in sorted(lines):
        print(line)


if __name__ == "__main__":
    main()
