"""Independent oracles the test suite checks the library against.

Each function here recomputes a result by a different route than the library
(closure-operator enumeration instead of universal-arrow search, raw square
scans instead of the lifting helpers, minor gcds instead of the diagonal
form), so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, product as iproduct
from math import gcd

from loclab.fincat import FinCat


# -- closure operators on a thin category ------------------------------------------


def thin_leq(cat: FinCat) -> dict:
    return {(a, b): bool(cat.hom(a, b)) for a in cat.objects for b in cat.objects}


def closure_operator_fixed_sets(cat: FinCat) -> set[frozenset]:
    """Fixed-point sets of all closure operators on a thin category.

    A closure operator is an inflationary, monotone, idempotent self-map; its
    fixed sets are exactly the reflective full sub-posets.
    """
    objs = cat.objects
    leq = thin_leq(cat)
    out: set[frozenset] = set()
    for images in iproduct(objs, repeat=len(objs)):
        cl = dict(zip(objs, images))
        if not all(leq[(x, cl[x])] for x in objs):
            continue
        if not all(leq[(cl[x], cl[y])] for x in objs for y in objs if leq[(x, y)]):
            continue
        if not all(cl[cl[x]] == cl[x] for x in objs):
            continue
        out.add(frozenset(x for x in objs if cl[x] == x))
    return out


def coclosure_operator_fixed_sets(cat: FinCat) -> set[frozenset]:
    """Fixed sets of interior (co-closure) operators: the coreflective sub-posets."""
    objs = cat.objects
    leq = thin_leq(cat)
    out: set[frozenset] = set()
    for images in iproduct(objs, repeat=len(objs)):
        cl = dict(zip(objs, images))
        if not all(leq[(cl[x], x)] for x in objs):
            continue
        if not all(leq[(cl[x], cl[y])] for x in objs for y in objs if leq[(x, y)]):
            continue
        if not all(cl[cl[x]] == cl[x] for x in objs):
            continue
        out.add(frozenset(x for x in objs if cl[x] == x))
    return out


# -- reflectivity via the adjunction hom-set bijection ---------------------------------


def reflective_by_hom_bijection(cat: FinCat, members: frozenset) -> bool:
    """For each X some (a, u) must make precomposition a bijection
    hom(a, a') -> hom(X, a') for every member a'."""
    if not members:
        return False
    for x in cat.objects:
        found = False
        for a in sorted(members):
            for u in cat.hom(x, a):
                bij = True
                for a2 in sorted(members):
                    image = [cat.comp(w, u) for w in cat.hom(a, a2)]
                    if len(set(image)) != len(image) or set(image) != set(cat.hom(x, a2)):
                        bij = False
                        break
                if bij:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def coreflective_members_direct(cat: FinCat) -> set[frozenset]:
    """Coreflective full subcategories by direct universal-arrow-from search."""
    objs = cat.objects
    out: set[frozenset] = set()
    for k in range(1, len(objs) + 1):
        for combo in combinations(objs, k):
            members = frozenset(combo)
            if _is_coreflective(cat, members):
                out.add(members)
    return out


def _is_coreflective(cat: FinCat, members: frozenset) -> bool:
    for x in cat.objects:
        found = False
        for a in sorted(members):
            for u in cat.hom(a, x):
                ok = True
                for a2 in sorted(members):
                    for v in cat.hom(a2, x):
                        if sum(1 for w in cat.hom(a2, a) if cat.comp(u, w) == v) != 1:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


# -- lifting re-enumeration ----------------------------------------------------------


def rlp_members_oracle(cat: FinCat, left_members) -> frozenset:
    """Raw double loop over all squares, no helper reuse, bottom-first order."""
    out = set()
    for f in cat.morphisms:
        ok = True
        for g in sorted(left_members):
            for bottom in cat.hom(cat.dst[g], cat.dst[f]):
                for top in cat.hom(cat.src[g], cat.src[f]):
                    if cat.comp(f, top) != cat.comp(bottom, g):
                        continue
                    if not any(cat.comp(h, g) == top and cat.comp(f, h) == bottom
                               for h in cat.hom(cat.dst[g], cat.src[f])):
                        ok = False
        if ok:
            out.add(f)
    return frozenset(out)


def recheck_limit_certificate(cat: FinCat, result) -> bool:
    """Re-enumerate competing cones independently and compare with the stored
    mediators (coverage, existence, uniqueness)."""
    if not result.found:
        return True
    shape, args = result.shape, result.args
    dual = shape in ("initial", "binary-coproduct", "pushout", "coequalizer")
    if dual:
        from loclab.fincat import opposite
        cat = opposite(cat)
    apex, legs = result.apex, result.legs
    if shape in ("terminal", "initial"):
        expected = {}
        for x in cat.objects:
            hom = cat.hom(x, apex)
            if len(hom) != 1:
                return False
            expected[x] = hom[0]
        return expected == result.mediators
    if shape in ("binary-product", "binary-coproduct"):
        a, b = args
        p, q = legs
        expected = {}
        for x in cat.objects:
            for f in cat.hom(x, a):
                for g in cat.hom(x, b):
                    ms = [m for m in cat.hom(x, apex)
                          if cat.comp(p, m) == f and cat.comp(q, m) == g]
                    if len(ms) != 1:
                        return False
                    expected[(x, f, g)] = ms[0]
        return expected == result.mediators
    if shape in ("equalizer", "coequalizer"):
        f, g = args
        (e,) = legs
        x = cat.src[f]
        if cat.comp(f, e) != cat.comp(g, e):
            return False
        expected = {}
        for w in cat.objects:
            for u in cat.hom(w, x):
                if cat.comp(f, u) != cat.comp(g, u):
                    continue
                ms = [m for m in cat.hom(w, apex) if cat.comp(e, m) == u]
                if len(ms) != 1:
                    return False
                expected[(w, u)] = ms[0]
        return expected == result.mediators
    if shape in ("pullback", "pushout"):
        f, g = args
        p, q = legs
        a, b = cat.src[f], cat.src[g]
        if cat.comp(f, p) != cat.comp(g, q):
            return False
        expected = {}
        for w in cat.objects:
            for u in cat.hom(w, a):
                for v in cat.hom(w, b):
                    if cat.comp(f, u) != cat.comp(g, v):
                        continue
                    ms = [m for m in cat.hom(w, apex)
                          if cat.comp(p, m) == u and cat.comp(q, m) == v]
                    if len(ms) != 1:
                        return False
                    expected[(w, u, v)] = ms[0]
        return expected == result.mediators
    raise AssertionError(f"unknown shape {shape}")


# -- ring epimorphism cancellation ---------------------------------------------------


def ring_map_is_epi_on(hom, test_rings) -> bool:
    """Cancellation against the supplied rings: u . phi = v . phi forces u = v."""
    from loclab.ringmod import ring_homs

    s = hom.codomain
    for t in test_rings:
        for u in ring_homs(s, t):
            for v in ring_homs(s, t):
                if u == v:
                    continue
                if all(u[hom(r)] == v[hom(r)] for r in hom.domain.elements):
                    return False
    return True


# -- minor-gcd invariant factors --------------------------------------------------------


def invariant_factors_by_minors(matrix: list[list[int]]) -> list[int]:
    """d_1 ... d_k = gcd of all k x k minors; independent of any reduction."""
    m, n = len(matrix), len(matrix[0]) if matrix else 0
    factors = []
    previous = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                sub = [[matrix[i][j] for j in cols] for i in rows]
                g = gcd(g, _det(sub))
        if g == 0:
            factors.extend([0] * (min(m, n) - len(factors)))
            break
        factors.append(g // previous)
        previous = g
    return factors


def _det(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * _det(minor)
    return total
