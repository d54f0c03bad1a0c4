#!/usr/bin/env python3
"""Regenerates the simplicial fixtures under fixtures/ and their golden homology.

The golden values come from a small pure-Python Smith normal form so they stay
independent of the C++ engine that the test suite checks.
"""
import itertools
import os
import sys
from math import gcd

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, os.pardir, "fixtures")


def boundary_dicts(facets):
    faces = {}
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            for s in itertools.combinations(f, k):
                faces.setdefault(k - 1, set()).add(s)
    return {k: sorted(v) for k, v in faces.items()}


def boundary_matrix(simp, k):
    rows = {s: i for i, s in enumerate(simp.get(k - 1, []))}
    cols = simp.get(k, [])
    m = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            m[rows[face]][j] += (-1) ** i
    return m


def smith_diagonal(mat):
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if not done:
                best = None
                for i in range(t, rows):
                    if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best][t])):
                        best = (i, 'r')
                for j in range(t, cols):
                    if a[t][j] and (best is None or abs(a[t][j]) < abs(
                            a[best[0]][t] if best[1] == 'r' else a[t][best[0]])):
                        best = (j, 'c')
                if best[1] == 'r':
                    a[t], a[best[0]] = a[best[0]], a[t]
                else:
                    for r in a:
                        r[t], r[best[0]] = r[best[0]], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    # normalise to a divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                g = gcd(diag[i], diag[j])
                l = diag[i] * diag[j] // g if g else 0
                if (g, l) != (diag[i], diag[j]):
                    diag[i], diag[j] = g, l
                    changed = True
    return diag


def homology(facets):
    simp = boundary_dicts(facets)
    top = max(simp)
    diags = {}
    for k in range(0, top + 2):
        if k == 0 or k > top:
            diags[k] = []
        else:
            diags[k] = smith_diagonal(boundary_matrix(simp, k))
    out = []
    for k in range(top + 1):
        n = len(simp[k])
        rank_out = sum(1 for d in diags[k] if d)
        rank_in = sum(1 for d in diags[k + 1] if d)
        tors = [d for d in diags[k + 1] if d > 1]
        out.append((n - rank_out - rank_in, tors))
    return out


def render(free, tors):
    parts = []
    if free:
        parts.append("Z^%d" % free)
    parts += ["Z/%d" % d for d in tors]
    return " + ".join(parts) if parts else "0"


def write(name, facets, comment, manifold=False):
    facets = [tuple(sorted(f)) for f in facets]
    with open(os.path.join(OUT, name + ".cplx"), "w") as fh:
        fh.write("# %s\n" % comment)
        if manifold:
            fh.write("orient: auto\n")
        for f in facets:
            fh.write("f " + " ".join(map(str, f)) + "\n")
    with open(os.path.join(OUT, name + ".golden"), "w") as fh:
        for k, (free, tors) in enumerate(homology(facets)):
            fh.write("H%d = %s\n" % (k, render(free, tors)))


def torus7():
    return [(i % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + \
           [(i % 7, (i + 2) % 7, (i + 3) % 7) for i in range(7)]


def kuhn_torus3(period=3):
    idx = lambda p: (p[0] % period) + period * ((p[1] % period) + period * (p[2] % period))
    facets = []
    for base in itertools.product(range(period), repeat=3):
        for perm in itertools.permutations(range(3)):
            cur = list(base)
            verts = [idx(cur)]
            for axis in perm:
                cur[axis] += 1
                verts.append(idx(cur))
            facets.append(tuple(verts))
    return facets


def rp3_from_cross_polytope():
    # Barycentric subdivision of the boundary of the 4-dimensional cross
    # polytope, divided by the antipodal map.
    verts = [(axis, sign) for axis in range(4) for sign in (1, -1)]
    faces = []
    for k in range(1, 5):
        for axes in itertools.combinations(range(4), k):
            for signs in itertools.product((1, -1), repeat=k):
                faces.append(frozenset(zip(axes, signs)))
    neg = lambda f: frozenset((a, -s) for a, s in f)
    classes = {}
    for f in faces:
        key = min(sorted(f), sorted(neg(f)))
        classes.setdefault(frozenset(key) if sorted(f) == key else neg(f), None)
    reps = sorted(classes, key=lambda f: (len(f), sorted(f)))
    label = {}
    for i, f in enumerate(reps):
        label[f] = i
        label[neg(f)] = i
    facets = set()
    tops = [f for f in faces if len(f) == 4]
    for top in tops:
        for order in itertools.permutations(sorted(top)):
            chain = [frozenset(order[:i]) for i in range(1, 5)]
            facets.add(tuple(sorted(label[c] for c in chain)))
    facets = sorted(facets)
    assert len(facets) == 192, len(facets)
    return facets


RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
       (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]


def main():
    os.makedirs(OUT, exist_ok=True)
    write("circle", [(0, 1), (1, 2), (0, 2)], "triangle boundary, a circle")
    write("point", [(0,)], "a single vertex")
    write("s2", list(itertools.combinations(range(4), 3)),
          "boundary of the 3-simplex, a 2-sphere", manifold=True)
    write("s3", list(itertools.combinations(range(5), 4)),
          "boundary of the 4-simplex, a 3-sphere", manifold=True)
    write("t2", torus7(), "7-vertex torus, 14 triangles", manifold=True)
    write("rp2", [tuple(v - 1 for v in f) for f in RP2],
          "6-vertex projective plane (antipodal quotient of the icosahedron)",
          manifold=True)
    write("t3", kuhn_torus3(), "3-torus, 3x3x3 grid with Kuhn subdivision", manifold=True)
    write("rp3", rp3_from_cross_polytope(),
          "projective 3-space: antipodal quotient of the subdivided 16-cell boundary",
          manifold=True)
    for name, gens, rels, note in [
        ("z2", "a", "aa", "cyclic group of order 2"),
        ("z3", "a", "aaa", "cyclic group of order 3"),
        ("z4", "a", "aaaa", "cyclic group of order 4"),
        ("z2xz2", "a b", "aa bb abab", "Klein four-group"),
        ("sym3", "a b", "aa bbb abab", "symmetric group on three letters"),
        ("f2", "a b", "", "free group of rank 2 (infinite)"),
    ]:
        with open(os.path.join(OUT, name + ".pres"), "w") as fh:
            fh.write("# %s\ngens: %s\nrels: %s\n" % (note, gens, rels))


if __name__ == "__main__":
    sys.exit(main())
