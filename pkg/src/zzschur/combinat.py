"""Multipartitions, orders, LR coefficients and colored tableaux.

A weight (multicomposition) is a tuple with one entry per color i in
0..ell, each entry a length-n tuple of nonnegative ints.  Dominant weights
(multipartitions) have weakly decreasing entries.
"""
from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Sequence

Weight = tuple  # tuple[tuple[int, ...], ...]


# ------------------------------------------------------------ enumeration

def compositions(d: int, parts: int):
    """All length-``parts`` tuples of nonnegative ints summing to d (lex decreasing)."""
    if parts == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in compositions(d - first, parts - 1):
            yield (first,) + rest


def partitions(d: int, maxparts: int, maxpart: int | None = None):
    """Partitions of d with at most maxparts parts, padded with zeros to maxparts."""
    if maxpart is None:
        maxpart = d
    if d == 0:
        yield (0,) * maxparts
        return
    if maxparts == 0:
        return
    for first in range(min(d, maxpart), 0, -1):
        for rest in partitions(d - first, maxparts - 1, first):
            yield (first,) + rest


def _split(total: int, slots: int):
    return compositions(total, slots)


def all_weights(n: int, d: int, ell: int) -> list[Weight]:
    """Lambda^I(n, d)."""
    out = []
    for sizes in _split(d, ell + 1):
        for comps in itertools.product(*(list(compositions(s, n)) for s in sizes)):
            out.append(tuple(comps))
    return out


def dominant_weights(n: int, d: int, ell: int) -> list[Weight]:
    """Lambda^I_+(n, d)."""
    out = []
    for sizes in _split(d, ell + 1):
        for parts in itertools.product(*(list(partitions(s, n)) for s in sizes)):
            out.append(tuple(parts))
    return out


def iota(i: int, lam: Sequence[int], n: int, ell: int) -> Weight:
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) > n:
        raise ValueError("too many parts")
    zero = (0,) * n
    return tuple(lam if j == i else zero for j in range(ell + 1))


def eps(l: int, n: int) -> tuple:
    """Composition with a single 1 in slot l (0-based)."""
    return tuple(1 if r == l else 0 for r in range(n))


def one_d(d: int, n: int) -> tuple:
    return (1,) * d + (0,) * (n - d)


def row_d(d: int, n: int) -> tuple:
    return (d,) + (0,) * (n - 1)


def wsize(lam: Weight) -> tuple:
    return tuple(sum(c) for c in lam)


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(tuple(x + y for x, y in zip(p, q)) for p, q in zip(a, b))


def is_dominant(lam: Weight) -> bool:
    return all(all(c[k] >= c[k + 1] for k in range(len(c) - 1)) for c in lam)


# ------------------------------------------------------------ orders

def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam is dominated by mu (partial sums of lam never exceed those of mu)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for x, y in zip(lam, mu):
        a += x
        b += y
        if a > b:
            return False
    return True


def size_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """(a_i) below (b_i) in the order comparing tail sums over j >= i."""
    sa = sb = 0
    for x, y in zip(reversed(a), reversed(b)):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def leq_I(lam: Weight, mu: Weight) -> bool:
    sl, sm = wsize(lam), wsize(mu)
    if sl != sm:
        return size_leq(sl, sm)
    return all(dominates(p, q) for p, q in zip(lam, mu))


# ------------------------------------------------------------ involutions

def conjugate_partition(lam: Sequence[int], n: int | None = None) -> tuple:
    parts = [x for x in lam if x]
    if n is None:
        n = len(lam)
    conj = [sum(1 for x in parts if x > k) for k in range(parts[0] if parts else 0)]
    if len(conj) > n:
        raise ValueError("conjugate has more than n parts")
    return tuple(conj) + (0,) * (n - len(conj))


def conjugate(lam: Weight) -> Weight:
    return tuple(conjugate_partition(c, len(c)) for c in lam)


def reverse(mu: Weight) -> Weight:
    return tuple(reversed(mu))


# ------------------------------------------------------------ LR coefficients

def _cells(outer: Sequence[int], inner: Sequence[int]):
    inner = list(inner) + [0] * (len(outer) - len(inner))
    return [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam, mu}: LR tableaux of shape nu/lam and content mu."""
    lam = [x for x in lam if x]
    mu = [x for x in mu if x]
    nu = [x for x in nu if x]
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(lam) > len(nu) or any(lam[r] > nu[r] for r in range(len(lam))):
        return 0
    return _lr(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def _lr(lam, mu, nu) -> int:
    cells = _cells(nu, lam)
    k = len(mu)
    fill: dict = {}
    count = 0

    def lattice_ok():
        # reading word: rows top to bottom, each right to left
        seen = [0] * (k + 1)
        for r in range(len(nu)):
            row = [fill[(r, c)] for c in range(nu[r] - 1, -1, -1) if (r, c) in fill]
            for x in row:
                seen[x] += 1
                if x > 1 and seen[x] > seen[x - 1]:
                    return False
        return True

    used = [0] * (k + 1)

    def rec(idx):
        nonlocal count
        if idx == len(cells):
            if lattice_ok():
                count += 1
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in fill:
            lo = max(lo, fill[(r, c - 1)])
        if (r - 1, c) in fill:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for x in range(lo, k + 1):
            if used[x] >= mu[x - 1]:
                continue
            fill[(r, c)] = x
            used[x] += 1
            rec(idx + 1)
            used[x] -= 1
            del fill[(r, c)]

    rec(0)
    return count


def multi_lr(lam: Weight, mu: Weight, nu: Weight) -> int:
    out = 1
    for a, b, c in zip(lam, mu, nu):
        out *= lr_coeff(a, b, c)
        if not out:
            return 0
    return out


# ------------------------------------------------------------ colored tableaux

class ColoredAlphabet:
    """Per-color ordered letters (row, color) with parity and left vertex.

    ``colors[i]`` is a list of (name, parity, left_vertex) in the alphabet order;
    letters of component i are ordered by (color position, row).
    """

    def __init__(self, n: int, colors: dict):
        self.n = n
        self.colors = colors
        self.ell = max(colors)

    def letters(self, i: int):
        return [(l, x) for x in range(len(self.colors[i])) for l in range(self.n)]


def zigzag_alphabet(Z, n: int) -> ColoredAlphabet:
    """Colors X(i) of the zigzag heredity data, left vertex resolved by e_j x = x."""
    H = Z.heredity
    colors = {}
    for i in H.labels:
        cl = []
        for x in H.X[i]:
            hits = [j for j in H.labels if Z.mul_vec(H.e[j], x) == x]
            if len(hits) != 1:
                raise ValueError(f"color {x} has no unique left idempotent")
            (b,) = x
            cl.append((Z.names[b], Z.parity[b], hits[0]))
        colors[i] = cl
    return ColoredAlphabet(n, colors)


def _component_tableaux(shape: Sequence[int], alphabet: ColoredAlphabet, i: int):
    """All standard colored fillings of one component, as lists of letters in reading order."""
    shape = [x for x in shape if x]
    letters = alphabet.letters(i)
    par = [alphabet.colors[i][x][1] for (_, x) in letters]
    nodes = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    fill: dict = {}
    out = []

    def rec(idx):
        if idx == len(nodes):
            out.append([letters[fill[nd]] for nd in nodes])
            return
        r, c = nodes[idx]
        for li in range(len(letters)):
            if c > 0:
                left = fill[(r, c - 1)]
                if li < left or (li == left and par[li]):
                    continue
            if r > 0:
                up = fill[(r - 1, c)]
                if li < up or (li == up and not par[li]):
                    continue
            fill[(r, c)] = li
            rec(idx + 1)
            del fill[(r, c)]

    rec(0)
    return out


def colored_tableaux(lam: Weight, alphabet: ColoredAlphabet, mu: Weight | None = None):
    """Standard colored tableaux of shape lam (optionally of left weight mu).

    Each tableau is a tuple over components of letter lists (row, color index).
    """
    comps = [_component_tableaux(lam[i], alphabet, i) for i in range(len(lam))]
    res = []
    for T in itertools.product(*comps):
        if mu is None or left_weight(T, alphabet) == mu:
            res.append(T)
    return res


def left_weight(T, alphabet: ColoredAlphabet) -> Weight:
    n, ell = alphabet.n, alphabet.ell
    w = [[0] * n for _ in range(ell + 1)]
    for i, comp in enumerate(T):
        for (l, x) in comp:
            v = alphabet.colors[i][x][2]
            w[v][l] += 1
    return tuple(tuple(r) for r in w)


_WEIGHT_CACHE: dict = {}


def tableau_weights(lam: Weight, alphabet: ColoredAlphabet) -> Counter:
    key = (lam, alphabet.n, tuple((i, tuple(c)) for i, c in sorted(alphabet.colors.items())))
    hit = _WEIGHT_CACHE.get(key)
    if hit is None:
        hit = Counter(left_weight(T, alphabet) for T in colored_tableaux(lam, alphabet))
        _WEIGHT_CACHE[key] = hit
    return hit


def kostka(lam: Weight, mu: Weight, alphabet: ColoredAlphabet) -> int:
    """k_{lam, mu} = number of standard colored lam-tableaux of left weight mu."""
    return tableau_weights(lam, alphabet).get(mu, 0)


def delta_character(lam: Weight, alphabet: ColoredAlphabet, check_d: bool = True) -> dict:
    d = sum(wsize(lam))
    if check_d and d > alphabet.n:
        raise ValueError("characters of standard modules need d <= n")
    return dict(tableau_weights(lam, alphabet))


# ------------------------------------------------------------ characters

def char_product(a: dict, b: dict) -> dict:
    out: dict = {}
    for u, x in a.items():
        for v, y in b.items():
            w = wadd(u, v)
            out[w] = out.get(w, 0) + x * y
    return {k: v for k, v in out.items() if v}


def char_add(acc: dict, b: dict, scale: int = 1) -> dict:
    for k, v in b.items():
        y = acc.get(k, 0) + scale * v
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


# ------------------------------------------------------------ Xi and Omega

def beta(i: int, d: int, s: int, n: int, ell: int) -> Weight:
    """iota_{i-1}((s)) + iota_i((1^{d-s})); for i = 0 only s = 0 is allowed."""
    if i == 0:
        if s != 0:
            raise ValueError("beta_0 needs s = 0")
        return iota(0, one_d(d, n), n, ell)
    return wadd(iota(i - 1, row_d(s, n) if s else (0,) * n, n, ell), iota(i, one_d(d - s, n), n, ell))


def xi_set(d: int, i: int, n: int, ell: int) -> list[Weight]:
    if i == 0:
        return [beta(0, d, 0, n, ell)]
    return [beta(i, d, s, n, ell) for s in range(d + 1)]


def _strips(part: Sequence[int], k: int, horizontal: bool):
    """Partitions obtained from part by removing a horizontal/vertical strip of k boxes."""
    n = len(part)
    for sub in itertools.product(*(range(x + 1) for x in part)):
        if sum(part) - sum(sub) != k:
            continue
        if any(sub[r] < sub[r + 1] for r in range(n - 1)):
            continue
        if horizontal:
            # at most one removed box per column: sub_r >= part_{r+1}
            if any(sub[r] < part[r + 1] for r in range(n - 1)):
                continue
        else:
            if any(part[r] - sub[r] > 1 for r in range(n)):
                continue
        yield tuple(sub)


def omega_set(lam: Weight, i: int, r: int, s: int) -> list[Weight]:
    """Omega^lam_beta for beta = beta_i(r, s), by box removal."""
    out = []
    if i == 0:
        for sub in _strips(lam[0], r, horizontal=False):
            out.append((sub,) + tuple(lam[1:]))
        return out
    for top in _strips(lam[i - 1], s, horizontal=True):
        for bot in _strips(lam[i], r - s, horizontal=False):
            a = list(lam)
            a[i - 1] = top
            a[i] = bot
            out.append(tuple(a))
    return out
