"""Brute-force minimal collider path counts for the bipartite bidirected G_k.

Independent of the C++ implementation: enumerates every simple path,
keeps collider paths, and tests minimality over all endpoint-preserving
proper subsequences.
"""
import itertools
import sys


def gk(k):
    v1 = [f"x{i}" for i in range(1, k + 1)]
    adj = {a: set() for a in v1}
    for i, j in itertools.combinations(range(1, k + 1), 2):
        c = f"v_x{i}_x{j}"
        adj[c] = {f"x{i}", f"x{j}"}
        adj[f"x{i}"].add(c)
        adj[f"x{j}"].add(c)
    return adj


def is_collider_path(adj, p):
    # every edge is bidirected, so only adjacency matters
    return all(p[i + 1] in adj[p[i]] for i in range(len(p) - 1))


def minimal(adj, p):
    inner = p[1:-1]
    for r in range(len(inner)):
        for keep in itertools.combinations(inner, r):
            if is_collider_path(adj, [p[0], *keep, p[-1]]):
                return False
    return True


def count(k):
    adj = gk(k)
    seen = set()

    def dfs(path):
        if len(path) >= 2 and minimal(adj, path):
            key = tuple(path) if path[0] <= path[-1] else tuple(reversed(path))
            seen.add(key)
        for u in sorted(adj[path[-1]]):
            if u not in path:
                path.append(u)
                dfs(path)
                path.pop()

    for s in sorted(adj):
        dfs([s])
    return len(seen)


if __name__ == "__main__":
    for k in range(2, int(sys.argv[1]) + 1):
        print(k, count(k), flush=True)
