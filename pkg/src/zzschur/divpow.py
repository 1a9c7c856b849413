"""Modified divided powers of calibrated superalgebras and supermodules.

A basis index of the d-th divided power is a sorted tuple of carrier basis
indices in which odd entries do not repeat.  ``y_b = [b]!_c x_b`` where ``x_b``
is the signed orbit sum of the pure tensor ``b``.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .superalg import CalBasisElement, CalModule, SuperAlgebra


# ------------------------------------------------------------ combinatorics

def seq_orbits(parities: Sequence[int], d: int) -> list[tuple]:
    """Sorted d-multisets over range(len(parities)) with odd entries distinct."""
    n = len(parities)
    out: list[tuple] = []

    def rec(start, prefix):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        for b in range(start, n):
            prefix.append(b)
            rec(b + 1 if parities[b] else b, prefix)
            prefix.pop()

    rec(0, [])
    return out


def sign_angle(t: Sequence[int], parities: Sequence[int]) -> int:
    """Number of pairs k < l with t_k, t_l odd and t_k > t_l."""
    odd = [b for b in t if parities[b]]
    return sum(1 for k in range(len(odd)) for l in range(k + 1, len(odd)) if odd[k] > odd[l])


def pair_angle(left: Sequence[int], right: Sequence[int], pl: Sequence[int], pr: Sequence[int]) -> int:
    """#{(k, l): k > l, left_k odd, right_l odd}: the sign of (u1..)(w1..) = +-(u1w1)..."""
    count = 0
    odd_right = 0
    for k in range(len(left)):
        if pl[left[k]]:
            count += odd_right
        if pr[right[k]]:
            odd_right += 1
    return count


def factorial_c(t: Sequence[int], cal: Sequence[str]) -> int:
    out = 1
    for b, m in Counter(t).items():
        if cal[b] == "c" and m > 1:
            out *= factorial(m)
    return out


def is_valid_index(t: Sequence[int], parities: Sequence[int]) -> bool:
    if any(t[k] > t[k + 1] for k in range(len(t) - 1)):
        return False
    return all(not (parities[t[k]] and t[k] == t[k + 1]) for k in range(len(t) - 1))


_PERM_CACHE: dict = {}


def orbit(t: tuple, parities: Sequence[int]) -> list[tuple]:
    """Distinct rearrangements t' of t with the sign (-1)^<t'>."""
    key = (t, tuple(parities[b] for b in t))
    hit = _PERM_CACHE.get(key)
    if hit is not None:
        return hit
    perms = sorted(set(itertools.permutations(t)))
    res = [(p, -1 if sign_angle(p, parities) % 2 else 1) for p in perms]
    _PERM_CACHE[key] = res
    return res


def expand_y(t: tuple, parities: Sequence[int], cal: Sequence[str]) -> dict:
    """y_t as a dict {positional tuple: integer coefficient} in V^{tensor d}."""
    if not is_valid_index(t, parities):
        raise ValueError(f"{t} is not a sorted index with distinct odd entries")
    f = factorial_c(t, cal)
    return {p: s * f for p, s in orbit(t, parities)}


def place_permute(tensor: dict, sigma: Sequence[int], parities: Sequence[int]) -> dict:
    """Right place-permutation action (v_1..v_d)^sigma = sign v_{sigma(1)}..v_{sigma(d)}."""
    d = len(sigma)
    inv = [0] * d
    for pos, s in enumerate(sigma):
        inv[s] = pos
    out: dict = {}
    for t, c in tensor.items():
        # count k < l (original positions) that end up reversed, both odd
        n = 0
        for k in range(d):
            if not parities[t[k]]:
                continue
            for l in range(k + 1, d):
                if parities[t[l]] and inv[k] > inv[l]:
                    n += 1
        u = tuple(t[s] for s in sigma)
        out[u] = out.get(u, 0) + (-c if n % 2 else c)
    return {k: v for k, v in out.items() if v}


# ------------------------------------------------------------ core formula

def _runs(t):
    runs, start = [], 0
    for k in range(1, len(t) + 1):
        if k == len(t) or t[k] != t[start]:
            runs.append((start, k))
            start = k
    return runs


def gapr_coefficients(prod, xpar, vpar, a: tuple, c: tuple, right: bool = False) -> dict:
    """f^b_{a,c} for every valid b: coefficient of x_b in xi^a x_c.

    Summation runs over pairs (a', c') of rearrangements modulo the stabiliser
    of b; each class is taken once at its representative (pairs sorted within
    runs of equal b) and weighted by its size [S_b : S_b n S_a' n S_c'].
    With ``right`` the product is x_c xi^a (module on the right).
    """
    out: dict = {}
    d = len(a)
    for ap, sa in orbit(a, xpar):
        for cp, sc in orbit(c, vpar):
            facs = []
            for k in range(d):
                f = prod(ap[k], cp[k])
                if not f:
                    break
                facs.append(f)
            else:
                if right:
                    kos = pair_angle(cp, ap, vpar, xpar)
                else:
                    kos = pair_angle(ap, cp, xpar, vpar)
                s0 = sa * sc * (-1 if kos % 2 else 1)
                for choice in itertools.product(*(f.items() for f in facs)):
                    t = tuple(b for b, _ in choice)
                    if not is_valid_index(t, vpar):
                        continue
                    index = 1
                    ok = True
                    for lo, hi in _runs(t):
                        if hi - lo == 1:
                            continue
                        pairs = [(ap[k], cp[k]) for k in range(lo, hi)]
                        if any(pairs[k] > pairs[k + 1] for k in range(len(pairs) - 1)):
                            ok = False
                            break
                        m = factorial(hi - lo)
                        for mult in Counter(pairs).values():
                            m //= factorial(mult)
                        index *= m
                    if not ok:
                        continue
                    coeff = s0 * index
                    for _, x in choice:
                        coeff *= x
                    out[t] = out.get(t, 0) + coeff
    return {k: v for k, v in out.items() if v}


def eta_product(prod, xpar, xcal, vpar, vcal, a: tuple, c: tuple, right: bool = False) -> dict:
    """eta^a y_c (or y_c eta^a) in the y basis, asserted integral."""
    f = gapr_coefficients(prod, xpar, vpar, a, c, right)
    scale = factorial_c(a, xcal) * factorial_c(c, vcal)
    out = {}
    for b, x in f.items():
        num = scale * x
        den = factorial_c(b, vcal)
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError(
                f"non-integral coefficient {Fraction(num, den)} for {a} . {c} -> {b}")
        if q:
            out[b] = q
    return out


# ------------------------------------------------------------ objects

def _idem_key(labels, t):
    if labels is None:
        return None
    return tuple(sorted(labels[b] for b in t))


def _index_name(names, t):
    if not t:
        return "1"
    parts = []
    for b, m in sorted(Counter(t).items()):
        parts.append(names[b] if m == 1 else f"{names[b]}^{m}")
    return "(" + ",".join(parts) + ")"


def divided_power_algebra(A: SuperAlgebra, d: int, check: bool = False) -> SuperAlgebra:
    """The modified divided power of A in degree d, as a SuperAlgebra on the eta basis.

    Extra attributes: ``indices`` (sorted tuples), ``pos`` (tuple -> basis
    position), ``carrier`` and ``d``.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    idx = seq_orbits(A.parity, d)
    pos = {t: i for i, t in enumerate(idx)}
    basis = []
    for t in idx:
        p = sum(A.parity[b] for b in t) % 2
        if p:
            cal = "o"
        else:
            cal = "a" if all(A.cal[b] == "a" for b in t) else "c"
        basis.append(CalBasisElement(_index_name(A.names, t), p, cal))
    li = ri = None
    if A.left_idem is not None:
        li = [_idem_key(A.left_idem, t) for t in idx]
        ri = [_idem_key(A.right_idem, t) for t in idx]
    ap, ac = A.parity, A.cal

    def mult(i, j):
        if li is not None and ri[i] != li[j]:
            return {}
        r = eta_product(A.mul, ap, ac, ap, ac, idx[i], idx[j])
        return {pos[t]: x for t, x in r.items()}

    # unit: the d-th tensor power of the unit of A, written in the y basis
    unit = {}
    ukeys = sorted(A.unit)
    for t in itertools.combinations_with_replacement(ukeys, d):
        coeff = 1
        for b in t:
            coeff *= A.unit[b]
        unit[pos[t]] = coeff
    tau = None
    if A.tau is not None:
        tau = [tau_power_index(A, t, pos) for t in idx]
    G = SuperAlgebra(basis, mult, unit, tau, None, li, ri, name=f"G{d}({A.name})", check=check)
    G.indices = idx
    G.pos = pos
    G.carrier = A
    G.d = d
    return G


def gamma_mult(G: SuperAlgebra, a: tuple, b: tuple) -> dict:
    """eta^a eta^b as {sorted tuple: integer}."""
    A = G.carrier
    return eta_product(A.mul, A.parity, A.cal, A.parity, A.cal, tuple(a), tuple(b))


def divided_power_module(G: SuperAlgebra, V: CalModule, check: bool = False) -> CalModule:
    """The divided power of V in degree G.d as a module over G (same side as V)."""
    A = G.carrier
    if V.algebra is not A:
        raise ValueError("module is over a different algebra")
    if not V.calibrated:
        raise ValueError("divided powers need a calibrated module")
    d = G.d
    idx = seq_orbits(V.parity, d)
    pos = {t: i for i, t in enumerate(idx)}
    basis = []
    for t in idx:
        p = sum(V.parity[b] for b in t) % 2
        cal = "o" if p else ("a" if all(V.cal[b] == "a" for b in t) else "c")
        basis.append(CalBasisElement(_index_name(V.names, t), p, cal))
    right = V.side == "right"
    idem = [_idem_key(V.idem, t) for t in idx] if V.idem is not None else None
    if right:
        akeys = G.left_idem
    else:
        akeys = G.right_idem
    ap, ac, vp, vc = A.parity, A.cal, V.parity, V.cal
    gidx = G.indices

    def act(i, j):
        if idem is not None and akeys is not None and akeys[i] != idem[j]:
            return {}
        r = eta_product(V.act, ap, ac, vp, vc, gidx[i], idx[j], right)
        return {pos[t]: x for t, x in r.items()}

    M = CalModule(G, basis, act, V.side, idem, f"G{d}({V.name})", check=check, calibrated=False)
    M.indices = idx
    M.pos = pos
    M.carrier = V
    return M


def gamma_action(GM: CalModule, a: tuple, v: tuple) -> dict:
    """eta^a . y_v (or y_v . eta^a for right modules) as {sorted tuple: integer}."""
    V = GM.carrier
    A = V.algebra
    return eta_product(V.act, A.parity, A.cal, V.parity, V.cal, tuple(a), tuple(v),
                       V.side == "right")


# ------------------------------------------------------------ star product

def star_disjoint(t1: tuple, t2: tuple, offset: int) -> tuple:
    """y_{t1} * y_{t2} in the divided power of a direct sum: W indices shifted by offset."""
    return tuple(t1) + tuple(b + offset for b in t2)


def star(t1: tuple, t2: tuple, parities: Sequence[int], cal: Sequence[str]) -> dict:
    """y_{t1} * y_{t2} for two indices over the same ordered basis."""
    joint = tuple(t1) + tuple(t2)
    srt = tuple(sorted(joint))
    if not is_valid_index(srt, parities):
        return {}
    coeff = -1 if sign_angle(joint, parities) % 2 else 1
    m1 = Counter(t1)
    for b, m in Counter(srt).items():
        if cal[b] != "c":
            coeff *= comb(m, m1.get(b, 0))
    return {srt: coeff}


def star_vec(y1: dict, y2: dict, parities, cal) -> dict:
    out: dict = {}
    for t1, x1 in y1.items():
        for t2, x2 in y2.items():
            for t, c in star(t1, t2, parities, cal).items():
                out[t] = out.get(t, 0) + x1 * x2 * c
    return {k: v for k, v in out.items() if v}


# ------------------------------------------------------------ forms

def lifted_gram(phi: dict, parities: Sequence[int], cal: Sequence[str], d: int,
                indices: Sequence[tuple] | None = None) -> tuple[list, dict]:
    """Gram data of (z, w)_~ = (z, w)_d / d! on the y basis of the degree d divided power.

    ``phi`` maps basis pairs (i, j) to the integer value of the form on V.
    Returns (indices, {(p, q): value}) with integral values.
    """
    if indices is None:
        indices = seq_orbits(parities, d)
    right_of: dict = {}
    for (i, j), x in phi.items():
        if x:
            right_of.setdefault(i, {})[j] = x
    gram = {}
    df = factorial(d)
    for p, b in enumerate(indices):
        ob = len(orbit(b, parities))
        fb = factorial_c(b, cal)
        cands = [right_of.get(x, {}) for x in b]
        for q, c in enumerate(indices):
            total = 0
            for cp, sc in orbit(c, parities):
                val = sc
                for k in range(d):
                    x = cands[k].get(cp[k])
                    if not x:
                        val = 0
                        break
                    val *= x
                if val:
                    if pair_angle(b, cp, parities, parities) % 2:
                        val = -val
                    total += val
            if total:
                num = total * ob * fb * factorial_c(c, cal)
                qv, r = divmod(num, df)
                if r:
                    raise ArithmeticError("lifted form value not divisible by d!")
                gram[(p, q)] = qv
    return list(indices), gram


def tensor_form(u: dict, w: dict, phi: dict, parities: Sequence[int]) -> int:
    """(u, w)_d for tensors given as {positional tuple: coeff}."""
    total = 0
    for t, x in u.items():
        for s, y in w.items():
            val = x * y
            for k in range(len(t)):
                f = phi.get((t[k], s[k]), 0)
                if not f:
                    val = 0
                    break
                val *= f
            if val:
                if pair_angle(t, s, parities, parities) % 2:
                    val = -val
                total += val
    return total


# ------------------------------------------------------------ anti-involution

def tau_power_index(A: SuperAlgebra, t: tuple, pos=None) -> dict:
    """tau^{tensor d}(eta^t) in the eta basis; tau must send basis to signed basis."""
    tau = A.tau
    if tau is None:
        raise ValueError("algebra has no anti-involution")
    image = []
    sign = 1
    for b in t:
        tb = tau[b]
        if len(tb) != 1:
            raise ValueError("tau_power needs tau to map basis elements to signed basis elements")
        (k, s), = tb.items()
        if A.cal[k] != A.cal[b] and "a" in (A.cal[k], A.cal[b]):
            raise ValueError("tau does not preserve the a-part")
        image.append(k)
        sign *= s
    if sign_angle(image, A.parity) % 2:
        sign = -sign
    srt = tuple(sorted(image))
    key = srt if pos is None else pos[srt]
    return {key: sign}


def tau_power(A: SuperAlgebra, d: int) -> dict:
    """tau_d on every eta basis index: {index: {index: sign}}."""
    return {t: tau_power_index(A, t) for t in seq_orbits(A.parity, d)}
