#!/usr/bin/env python3
"""Brute-force reference values frozen into the C++ tests.

Independent of the library: graphs are built from labels with plain Python
sets and every quantity is computed by direct enumeration.
"""
from itertools import combinations, product
import sys


def johnson(m, k):
    verts = [frozenset(c) for c in combinations(range(1, m + 1), k)]
    adj = {u: {w for w in verts if len(u & w) == k - 1} for u in verts}
    return verts, adj


def hamming(d, q):
    verts = list(product(range(q), repeat=d))
    def dist(a, b):
        return sum(x != y for x, y in zip(a, b))
    adj = {u: {w for w in verts if dist(u, w) == 1} for u in verts}
    return verts, adj


def rook(m, n):
    verts = [(r, c) for r in range(m) for c in range(n)]
    adj = {u: {w for w in verts if w != u and (w[0] == u[0] or w[1] == u[1])} for u in verts}
    return verts, adj


def complete(n):
    verts = list(range(n))
    return verts, {u: set(verts) - {u} for u in verts}


def traces(adj, a):
    aset = set(a)
    return {frozenset(adj[w] & aset) for w in adj}


def shattered(adj, a):
    return len(traces(adj, a)) == 2 ** len(a)


def vc(adj, verts):
    if not verts:
        return None
    best = 0
    for n in range(1, len(verts) + 1):
        if 2 ** n > len(verts):
            break
        if any(shattered(adj, a) for a in combinations(verts, n)):
            best = n
        else:
            break
    return best


def pi(adj, verts, n):
    return max(len(traces(adj, a)) for a in combinations(verts, n))


def closed(adj):
    return {u: s | {u} for u, s in adj.items()}


def delete(verts, adj, x):
    keep = [v for v in verts if v != x]
    return keep, {u: adj[u] - {x} for u in keep}


def subdivided(n):
    verts = [frozenset([i]) for i in range(1, n + 1)] + [frozenset(c) for c in combinations(range(1, n + 1), 2)]
    adj = {u: {w for w in verts if len(u) != len(w) and (u <= w or w <= u)} for u in verts}
    return verts, adj


def edges(adj):
    return sum(len(s) for s in adj.values()) // 2


def main():
    what = sys.argv[1] if len(sys.argv) > 1 else "all"
    v, a = johnson(7, 2)
    print("J(7,2) edges", edges(a))
    v, a = rook(3, 3)
    print("R(3,3) edges", edges(a))
    for name, g in [("J(5,2)", johnson(5, 2)), ("J(6,2)", johnson(6, 2)),
                    ("H(2,3)", hamming(2, 3)), ("H(3,2)", hamming(3, 2)),
                    ("H(2,2)", hamming(2, 2)), ("K5", complete(5))]:
        print("VC", name, vc(g[1], g[0]))
    for m in range(1, 11):
        v, a = johnson(m, 1)
        print("VC J(%d,1)" % m, vc(a, v))
    for name, g in [("R(3,4)", rook(3, 4)), ("R(4,4)", rook(4, 4)), ("S(K4)", subdivided(4)),
                    ("S(K5)", subdivided(5))]:
        print("VC", name, vc(g[1], g[0]))
    for name, g in [("J(5,2)", johnson(5, 2)), ("H(2,3)", hamming(2, 3)), ("R(3,3)", rook(3, 3)),
                    ("K5", complete(5))]:
        print("VC closed", name, vc(closed(g[1]), g[0]))
    for name, g in [("J(5,2)", johnson(5, 2)), ("H(3,2)", hamming(3, 2))]:
        verts, adj = g
        print("VC after deleting one vertex", name, sorted({vc(*reversed(delete(verts, adj, x))) for x in verts}))
    if what in ("all", "pi"):
        for name, g, nmax in [("J(7,2)", johnson(7, 2), 5), ("J(6,3)", johnson(6, 3), 5),
                              ("J(7,3)", johnson(7, 3), 5), ("H(3,3)", hamming(3, 3), 5),
                              ("H(2,4)", hamming(2, 4), 5), ("R(3,3)", rook(3, 3), 5),
                              ("R(2,5)", rook(2, 5), 5)]:
            vals = [pi(g[1], g[0], n) for n in range(0, nmax + 1)]
            print("PI", name, vals)


if __name__ == "__main__":
    main()
