"""Shared test utilities: exhaustive complex enumeration, random samples,
and independent brute-force oracles."""

import itertools
from math import gcd

from coxkit.simplicial import Graph, SimplicialComplex


def all_complexes(m):
    """Every simplicial complex on exactly m labelled vertices (all
    singletons present), as SimplicialComplex objects."""
    subsets = [s for s in range(1 << m) if bin(s).count("1") >= 2]
    subsets.sort(key=lambda s: (bin(s).count("1"), s))
    base = {0} | {1 << i for i in range(m)}
    out = []

    def closed_under(faces, s):
        for b in range(m):
            if s >> b & 1:
                t = s & ~(1 << b)
                if bin(t).count("1") >= 2 and t not in faces:
                    return False
        return True

    def rec(i, faces):
        if i == len(subsets):
            out.append(SimplicialComplex(m, base | faces))
            return
        rec(i + 1, faces)
        s = subsets[i]
        if closed_under(faces, s):
            faces.add(s)
            rec(i + 1, faces)
            faces.remove(s)

    rec(0, set())
    return out


def random_complex(m, rng, edge_p=0.45, tri_p=0.18, quad_p=0.06):
    verts = range(1, m + 1)
    maximal = [list(c) for c in itertools.combinations(verts, 2)
               if rng.random() < edge_p]
    maximal += [list(c) for c in itertools.combinations(verts, 3)
                if rng.random() < tri_p]
    maximal += [list(c) for c in itertools.combinations(verts, 4)
                if rng.random() < quad_p]
    return SimplicialComplex.from_maximal_faces(m, maximal)


def random_graph(m, rng, p=0.5):
    edges = [c for c in itertools.combinations(range(1, m + 1), 2)
             if rng.random() < p]
    return Graph(m, edges)


# -- brute-force oracles ------------------------------------------------------

def minor_gcd_invariant_factors(dense):
    """Invariant factors from first principles: the product of the first k
    factors is the gcd of all k x k minors."""
    r = len(dense)
    c = len(dense[0]) if r else 0

    def det(mat):
        n = len(mat)
        if n == 0:
            return 1
        if n == 1:
            return mat[0][0]
        total = 0
        for j in range(n):
            sub = [row[:j] + row[j + 1:] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * det(sub)
        return total

    prev = 1
    factors = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = gcd(g, det([[dense[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def has_chordless_cycle(graph):
    """Exhaustive search: is some induced subgraph on >= 4 vertices a
    single cycle?"""
    m = graph.m
    for subset in range(1 << m):
        verts = [i for i in range(m) if subset >> i & 1]
        if len(verts) < 4:
            continue
        if any(bin(graph.adj[v] & subset).count("1") != 2 for v in verts):
            continue
        comp = {verts[0]}
        stack = [verts[0]]
        while stack:
            x = stack.pop()
            for y in verts:
                if graph.adj[x] >> y & 1 and y not in comp:
                    comp.add(y)
                    stack.append(y)
        if len(comp) == len(verts):
            return True
    return False


def brute_missing_faces(K):
    """All minimal non-faces by direct enumeration (m small)."""
    out = []
    for s in range(1 << K.m):
        if s in K.faces:
            continue
        if all((s & ~(1 << b)) in K.faces for b in range(K.m) if s >> b & 1):
            out.append(tuple(i + 1 for i in range(K.m) if s >> i & 1))
    return sorted(out)


def all_graphs(m):
    """Every labelled graph on m vertices."""
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(m, [p for i, p in enumerate(pairs) if mask >> i & 1])
