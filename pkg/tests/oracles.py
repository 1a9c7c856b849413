"""Brute-force reference computations used only by the tests.

Everything here works with explicit tensors over Q and never uses the
orbit-class formula of the library.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial


def odd_inversions(t, par):
    return sum(1 for k in range(len(t)) for l in range(k + 1, len(t))
               if par[t[k]] and par[t[l]] and t[k] > t[l])


def y_tensor(t, par, cal):
    """y_t expanded by brute force over all d! place permutations."""
    d = len(t)
    counts = {}
    for b in t:
        counts[b] = counts.get(b, 0) + 1
    fc = 1
    for b, m in counts.items():
        if cal[b] == "c":
            fc *= factorial(m)
    stab = 1
    for m in counts.values():
        stab *= factorial(m)
    acc = {}
    for perm in itertools.permutations(range(d)):
        u = tuple(t[p] for p in perm)
        s = -1 if odd_inversions(u, par) % 2 else 1
        acc[u] = acc.get(u, 0) + Fraction(s * fc, stab)
    return {k: v for k, v in acc.items() if v}


def koszul(left, right, pl, pr):
    return sum(1 for k in range(len(left)) for l in range(k) if pl[left[k]] and pr[right[l]])


def tensor_product(x, v, prod, pl, pr, right=False):
    """Multiply tensors position-wise: x acting on v (or v acted on by x from the right)."""
    out = {}
    for a, ca in x.items():
        for c, cc in v.items():
            if right:
                s = koszul(c, a, pr, pl)
            else:
                s = koszul(a, c, pl, pr)
            facs = [prod(a[k], c[k]) for k in range(len(a))]
            if any(not f for f in facs):
                continue
            for choice in itertools.product(*(f.items() for f in facs)):
                t = tuple(b for b, _ in choice)
                coeff = ca * cc * (-1 if s % 2 else 1)
                for _, z in choice:
                    coeff *= z
                out[t] = out.get(t, 0) + coeff
    return {k: v for k, v in out.items() if v}


def to_y_basis(tensor, par, cal):
    """Read off y-coordinates of a symmetric tensor (coefficient of sorted tuples / [b]!)."""
    out = {}
    for t, x in tensor.items():
        if list(t) != sorted(t):
            continue
        if any(par[t[k]] and t[k] == t[k + 1] for k in range(len(t) - 1)):
            assert x == 0
            continue
        fc = 1
        counts = {}
        for b in t:
            counts[b] = counts.get(b, 0) + 1
        for b, m in counts.items():
            if cal[b] == "c":
                fc *= factorial(m)
        out[t] = Fraction(x) / fc
    return {k: v for k, v in out.items() if v}


def is_symmetric(tensor, par):
    """Invariance under all adjacent place transpositions with the odd swap sign."""
    if not tensor:
        return True
    d = len(next(iter(tensor)))
    for k in range(d - 1):
        sw = {}
        for t, x in tensor.items():
            u = t[:k] + (t[k + 1], t[k]) + t[k + 2:]
            s = -1 if par[t[k]] and par[t[k + 1]] else 1
            sw[u] = sw.get(u, 0) + s * x
        sw = {a: b for a, b in sw.items() if b}
        if sw != tensor:
            return False
    return True


def oracle_eta_product(a, c, prod, apar, acal, vpar, vcal, right=False):
    x = y_tensor(a, apar, acal)
    v = y_tensor(c, vpar, vcal)
    t = tensor_product(x, v, prod, apar, vpar, right)
    assert is_symmetric(t, vpar)
    return to_y_basis(t, vpar, vcal)


def tensor_form(u, w, phi, par):
    total = 0
    for t, x in u.items():
        for s, y in w.items():
            val = x * y
            for k in range(len(t)):
                val *= phi.get((t[k], s[k]), 0)
            if val:
                total += -val if koszul(t, s, par, par) % 2 else val
    return total


# ------------------------------------------------------------ tableaux

def brute_tableaux(shape, letters, parities):
    """Fillings of one Young diagram by letter positions, checked cell by cell.

    Rows weakly increase with equality only for even letters; columns weakly
    increase with equality only for odd letters.
    """
    shape = [x for x in shape if x]
    nodes = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    out = []
    for fill in itertools.product(range(len(letters)), repeat=len(nodes)):
        f = dict(zip(nodes, fill))
        ok = True
        for (r, c), x in f.items():
            if c > 0:
                y = f[(r, c - 1)]
                if x < y or (x == y and parities[x]):
                    ok = False
                    break
            if r > 0:
                y = f[(r - 1, c)]
                if x < y or (x == y and not parities[x]):
                    ok = False
                    break
        if ok:
            out.append([letters[f[nd]] for nd in nodes])
    return out


def brute_kostka_table(lam, alphabet):
    """Counter of left weights over all colored tableaux, by brute force."""
    from collections import Counter
    n, ell = alphabet.n, alphabet.ell
    comps = []
    for i, shape in enumerate(lam):
        letters = alphabet.letters(i)
        par = [alphabet.colors[i][x][1] for (_, x) in letters]
        comps.append(brute_tableaux(shape, letters, par))
    cnt = Counter()
    for T in itertools.product(*comps):
        w = [[0] * n for _ in range(ell + 1)]
        for i, comp in enumerate(T):
            for (l, x) in comp:
                w[alphabet.colors[i][x][2]][l] += 1
        cnt[tuple(tuple(r) for r in w)] += 1
    return cnt


# ------------------------------------------------------------ symmetric functions

def schur_poly(lam, k):
    """Schur polynomial in k variables as {exponent tuple: coeff}, from brute-force SSYT."""
    lam = [x for x in lam if x]
    if len(lam) > k:
        return {}
    nodes = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    out = {}
    for fill in itertools.product(range(k), repeat=len(nodes)):
        f = dict(zip(nodes, fill))
        if any(c > 0 and f[(r, c)] < f[(r, c - 1)] for (r, c) in nodes):
            continue
        if any(r > 0 and f[(r, c)] <= f[(r - 1, c)] for (r, c) in nodes):
            continue
        e = [0] * k
        for x in fill:
            e[x] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return out


def _pmul(a, b):
    out = {}
    for e1, x in a.items():
        for e2, y in b.items():
            e = tuple(p + q for p, q in zip(e1, e2))
            out[e] = out.get(e, 0) + x * y
    return {e: v for e, v in out.items() if v}


def lr_by_expansion(mu, nu):
    """{lambda: c^lambda_{mu,nu}} by expanding s_mu s_nu and peeling leading monomials."""
    mu = tuple(x for x in mu if x)
    nu = tuple(x for x in nu if x)
    k = max(len(mu) + len(nu), 1)
    poly = _pmul(schur_poly(mu, k), schur_poly(nu, k))
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        out[tuple(x for x in lead if x)] = c
        for e, v in schur_poly(lead, k).items():
            y = poly.get(e, 0) - c * v
            if y:
                poly[e] = y
            else:
                poly.pop(e, None)
    return out


# ------------------------------------------------------------ counting and commutants

def brute_tri_count(parities, d):
    """|{d-tuples of basis elements}/S_d| with odd repeats removed, by canonical sorting."""
    seen = set()
    for t in itertools.product(range(len(parities)), repeat=d):
        s = tuple(sorted(t))
        if any(parities[s[k]] and s[k] == s[k + 1] for k in range(d - 1)):
            continue
        seen.add(s)
    return len(seen)


def dense_commutant_dims(ops, parities):
    """(even, odd) dims of the signed commutant of dense sympy operators, via nullspace."""
    import sympy
    n = len(parities)
    res = []
    for par in (0, 1):
        pos = [(u, v) for u in range(n) for v in range(n) if (parities[u] + parities[v] + par) % 2 == 0]
        idx = {p: k for k, p in enumerate(pos)}
        rows = []
        for X, px in ops:
            s = -1 if par and px else 1
            # (F X - s X F)[u, v]
            for u in range(n):
                for v in range(n):
                    row = [0] * len(pos)
                    for w in range(n):
                        if X[w, v] and (u, w) in idx:
                            row[idx[(u, w)]] += X[w, v]
                        if X[u, w] and (w, v) in idx:
                            row[idx[(w, v)]] -= s * X[u, w]
                    if any(row):
                        rows.append(row)
        m = sympy.Matrix(rows) if rows else sympy.zeros(0, len(pos))
        res.append(len(pos) - (m.rank() if rows else 0))
    return tuple(res)
