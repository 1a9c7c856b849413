"""The full tilting module of the zigzag algebra and its endomorphism algebra.

T = Pi L(0) + Z e_0 + ... + Z e_{ell-1}.  Summand i of T (i = 0..ell) is the
parity-shifted tilting module: summand 0 is spanned by the odd vector v0,
summand i > 0 is the left ideal Z e_{i-1}.

Endomorphisms are ExactMatrix objects over Q on the T basis.  The Ringel dual
uses the sop product x . y = (-1)^{|x||y|} y o x.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exact_linalg import QQ, Echelon, ExactMatrix, det, super_commutant
from .superalg import (AuditReport, CalBasisElement, CalModule, HeredityData, SuperAlgebra,
                       _zz_names, hom_dims, vec_add, zigzag, zigzag_modules)


@dataclass
class TiltingBimodule:
    Z: SuperAlgebra
    basis: list                      # CalBasisElement
    summand: list                    # left summand label i of each basis vector
    zpart: list                      # Z basis index inside Z e_{i-1}, or None for v0
    left: CalModule
    primed: dict = field(default_factory=dict)    # name -> (ExactMatrix, parity)
    Zp: SuperAlgebra | None = None
    right: CalModule | None = None
    right_summands: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def parity(self):
        return [b.parity for b in self.basis]

    def index(self, name):
        return [b.name for b in self.basis].index(name)


def _tilting_left(Z: SuperAlgebra):
    ell = Z.ell
    basis = [CalBasisElement("v0", 1, "o")]
    summand, zpart = [0], [None]
    pos = {}
    for i in range(1, ell + 1):
        for b in range(Z.dim):
            if Z.right_idem[b] == i - 1:
                pos[(i, b)] = len(basis)
                el = Z.basis[b]
                basis.append(CalBasisElement(f"T{i}:{el.name}", el.parity, el.cal))
                summand.append(i)
                zpart.append(b)
    e0 = Z.index("e0")

    def act(a, v):
        if v == 0:
            # Pi L(0): only e_0 acts, with the sign (-1)^{|a|} = 1
            return {0: 1} if a == e0 else {}
        i, b = summand[v], zpart[v]
        return {pos[(i, k)]: c for k, c in Z.mul(a, b).items()}

    idem = [0] + [Z.left_idem[zpart[v]] for v in range(1, len(basis))]
    M = CalModule(Z, basis, act, "left", idem, f"T(Z{ell})", check=True, calibrated=True)
    return basis, summand, zpart, pos, M


def _proj(T_summand, i, dim):
    return ExactMatrix(dim, dim, QQ, {(v, v): 1 for v in range(dim) if T_summand[v] == i})


def _right_mult(Z, pos, summand, zpart, src, dst, z, dim, twist):
    """v -> (+-) v z from summand src (Z e_{src-1}) into summand dst."""
    ents = {}
    for v in range(dim):
        if summand[v] != src:
            continue
        b = zpart[v]
        s = -1 if (twist and Z.parity[b]) else 1
        for k, c in Z.mul(b, z).items():
            ents[(pos[(dst, k)], v)] = ents.get((pos[(dst, k)], v), 0) + s * c
    return ExactMatrix(dim, dim, QQ, ents)


def primed_generators(ell: int, literal: bool = False):
    """The primed elements as endomorphisms of T, in the basis order of Z.

    With ``literal`` the embedding f: v0 -> c_0 is used as written; otherwise
    f is replaced by -f so that every defining relation of Z is transported.
    """
    Z = zigzag(ell)
    basis, summand, zpart, pos, M = _tilting_left(Z)
    dim = len(basis)
    sep = _zz_names(ell)
    out = {}
    for i in range(ell + 1):
        out[f"e{i}"] = (_proj(summand, ell - i, dim), 0)
    for i in range(ell):
        c = Z.index(f"c{ell - i - 1}")
        out[f"c{i}"] = (_right_mult(Z, pos, summand, zpart, ell - i, ell - i, c, dim, False), 0)
    for i in range(ell - 1):
        a_up = Z.index(f"a{ell-i-2}{sep}{ell-i-1}")
        a_dn = Z.index(f"a{ell-i-1}{sep}{ell-i-2}")
        out[f"a{i+1}{sep}{i}"] = (_right_mult(Z, pos, summand, zpart, ell - i - 1, ell - i, a_up, dim, True), 1)
        out[f"a{i}{sep}{i+1}"] = (_right_mult(Z, pos, summand, zpart, ell - i, ell - i - 1, a_dn, dim, True), 1)
    c0 = pos[(1, Z.index("c0"))]
    e0 = pos[(1, Z.index("e0"))]
    fsign = 1 if literal else -1
    out[f"a{ell}{sep}{ell-1}"] = (ExactMatrix(dim, dim, QQ, {(c0, 0): fsign}), 1)
    out[f"a{ell-1}{sep}{ell}"] = (ExactMatrix(dim, dim, QQ, {(0, e0): 1}), 1)
    ordered = {Z.names[k] + "'": out[Z.names[k]] for k in range(Z.dim)}
    return Z, (basis, summand, zpart, pos, M), ordered


def _flat(m: ExactMatrix) -> dict:
    n = m.ncols
    return {r * n + c: x for r, row in m.rows.items() for c, x in row.items()}


def _scale(m: ExactMatrix, s) -> ExactMatrix:
    return ExactMatrix(m.nrows, m.ncols, m.field,
                       {(r, c): s * x for r, row in m.rows.items() for c, x in row.items()})


def _express(ech_rows, mats, target: ExactMatrix):
    """Coordinates of target in the span of mats (exact solve), or None."""
    from .exact_linalg import solve
    dim2 = target.nrows * target.ncols
    cols = {}
    for j, m in enumerate(mats):
        for k, x in _flat(m).items():
            cols[(k, j)] = x
    A = ExactMatrix(dim2, len(mats), QQ, cols)
    return solve(A, _flat(target))


def sop_product(x, y):
    """x . y = (-1)^{|x||y|} y o x for (matrix, parity) pairs."""
    (mx, px), (my, py) = x, y
    prod = my @ mx
    return (_scale(prod, -1) if px and py else prod, (px + py) % 2)


@dataclass
class LZReport:
    ok: bool
    dim_end: tuple
    independent: bool
    in_end: bool
    mismatches: list
    witness: dict


def ringel_dual_zigzag(ell: int, literal: bool = False):
    """Build Z' from the primed generators and compare it with Z.

    Returns (Zp, T, report).  ``Zp`` is a SuperAlgebra whose basis is the
    primed elements (same order as Z); its structure constants are read off
    from the sop composition.  ``report.mismatches`` lists (x, y, in Z, in Z')
    whenever the structure constants differ under e_i -> e_i' etc.
    """
    Z, (basis, summand, zpart, pos, M), gens = primed_generators(ell, literal)
    names = list(gens)
    mats = [gens[k] for k in names]
    dim = len(basis)
    # (i) endomorphisms of T as a left Z-module
    ops = [(M.operator(a), Z.parity[a]) for a in range(Z.dim)]
    de, do, _ = super_commutant(ops, [b.parity for b in basis], QQ)
    ech = Echelon(QQ)
    independent = all(ech.add(_flat(m)) for m, _ in mats)
    in_end = True
    for m, p in mats:
        for a in range(Z.dim):
            lhs = m @ ops[a][0]
            rhs = ops[a][0] @ m
            if p and Z.parity[a]:
                rhs = _scale(rhs, -1)
            if lhs != rhs:
                in_end = False
    # (ii) structure constants in the sop product
    table = {}
    mismatches = []
    for i, x in enumerate(mats):
        for j, y in enumerate(mats):
            pm, pp = sop_product(x, y)
            coords = _express(None, [m for m, _ in mats], pm)
            if coords is None:
                mismatches.append((Z.names[i], Z.names[j], "not in span"))
                continue
            coords = {k: int(v) for k, v in coords.items() if v}
            if coords:
                table[(i, j)] = coords
            if coords != Z.mul(i, j):
                mismatches.append((Z.names[i], Z.names[j], dict(Z.mul(i, j)), coords))
    pb = [CalBasisElement(k, Z.parity[t], Z.cal[t]) for t, k in enumerate(names)]
    unit = {Z.index(f"e{i}"): 1 for i in range(ell + 1)}
    her = HeredityData(list(range(ell + 1)), Z.heredity.X, Z.heredity.Y, Z.heredity.e)
    # idempotent labels read off from the products with the e_i'
    li, ri = [], []
    for b in range(Z.dim):
        li.append(next(i for i in range(ell + 1) if table.get((i, b), {}) == {b: 1}))
        ri.append(next(i for i in range(ell + 1) if table.get((b, i), {}) == {b: 1}))
    Zp = SuperAlgebra(pb, table, unit, Z.tau, her, li, ri, name=f"Z{ell}'", check=not mismatches)
    Zp.ell = ell
    Zp.mats = mats

    def ract(a, v):
        m, p = mats[a]
        col = m.columns().get(v, {})
        s = -1 if p and basis[v].parity else 1
        return {w: s * int(x) for w, x in col.items()}

    ridem = []
    for v in range(dim):
        hit = [i for i in range(ell + 1) if ract(i, v) == {v: 1}]
        ridem.append(hit[0] if len(hit) == 1 else None)
    R = CalModule(Zp, basis, ract, "right", ridem, f"T(Z{ell})'", check=not mismatches,
                  calibrated=True)
    T = TiltingBimodule(Z, basis, summand, zpart, M, gens, Zp, R)
    T.right_summands = right_summands(T)
    ok = not mismatches and independent and in_end and (de + do) == Z.dim
    rep = LZReport(ok, (de, do), independent, in_end, mismatches,
                   {"dim_end": de + do, "expected": Z.dim})
    return Zp, T, rep


def tilting_bimodule(ell: int, literal: bool = False) -> TiltingBimodule:
    return ringel_dual_zigzag(ell, literal)[1]


# ------------------------------------------------------------ right summands

def right_summands(T: TiltingBimodule) -> dict:
    """The spans Pi T'(i) as lists of T basis positions."""
    ell = T.Z.ell
    sep = _zz_names(ell)
    pos = {b.name: k for k, b in enumerate(T.basis)}

    def at(i, name):
        return pos.get(f"T{i}:{name}")

    out = {0: [at(ell, f"a{ell}{sep}{ell-1}")]}
    top = [0, at(1, "e0"), at(1, "c0")]
    if ell > 1:
        top.append(at(2, f"a0{sep}1"))
    out[ell] = top
    for i in range(1, ell):
        j = ell - i
        span = [at(j + 1, f"e{j}"), at(j, f"a{j}{sep}{j-1}")]
        if i != 1:
            span.append(at(j + 2, f"a{j}{sep}{j+1}"))
        span.append(at(j + 1, f"c{j}"))
        out[i] = span
    for k, v in out.items():
        if any(x is None for x in v):
            raise AssertionError(f"missing basis vector in summand {k}")
        out[k] = sorted(v)
    return dict(sorted(out.items()))


def tilting_audit(T: TiltingBimodule) -> AuditReport:
    rep = AuditReport()
    Z, Zp, L, R = T.Z, T.Zp, T.left, T.right
    # commuting actions (z t) z' = z (t z')
    bad = None
    for z in range(Z.dim):
        for t in range(T.dim):
            zt = L.act(z, t)
            for zp in range(Zp.dim):
                lhs = R.act_vec({zp: 1}, zt)
                rhs = L.act_vec({z: 1}, R.act(zp, t))
                if lhs != rhs:
                    bad = bad or (Z.names[z], T.basis[t].name, Zp.names[zp])
    rep.record("left and right actions commute", bad is None, bad)
    # right summands: stable, direct, exhaustive
    spans = T.right_summands
    flat = sorted(x for v in spans.values() for x in v)
    rep.record("right summands partition the basis", flat == list(range(T.dim)), flat)
    bad = None
    for i, span in spans.items():
        s = set(span)
        for t in span:
            for zp in range(Zp.dim):
                if not set(R.act(zp, t)) <= s:
                    bad = bad or (i, T.basis[t].name, Zp.names[zp])
    rep.record("right summands are Z'-stable", bad is None, bad)
    # a . T_a . a' inside T_a
    a_alg = [k for k in range(Z.dim) if Z.cal[k] == "a"]
    a_mod = [k for k in range(T.dim) if T.basis[k].cal == "a"]
    bad = None
    for z in a_alg:
        for t in a_mod:
            for zp in [k for k in range(Zp.dim) if Zp.cal[k] == "a"]:
                w = R.act_vec({zp: 1}, L.act(z, t))
                if any(T.basis[k].cal != "a" for k in w):
                    bad = bad or (Z.names[z], T.basis[t].name, Zp.names[zp])
    rep.record("a T_a a' in T_a", bad is None, bad)
    # left summand dims and Delta filtration bookkeeping
    dims = {}
    for s in T.summand:
        dims[s] = dims.get(s, 0) + 1
    want = {0: 1, 1: 3}
    for i in range(2, Z.ell + 1):
        want[i] = 4
    rep.record("left summand dimensions", dims == want, dims)
    return rep


def hom_orthogonality(ell: int) -> dict:
    """dim Hom_Z(Delta(i), nabla(j)) (even + odd) for all i, j."""
    Z = zigzag(ell)
    mods = {i: zigzag_modules(Z, i) for i in range(ell + 1)}
    return {(i, j): sum(hom_dims(mods[i]["Delta"], mods[j]["nabla"]))
            for i in range(ell + 1) for j in range(ell + 1)}


# ------------------------------------------------------------ forms

def pit_submodule(T: TiltingBimodule, i: int) -> CalModule:
    """Pi T(i) as a standalone left Z-module (basis in T order)."""
    idx = [k for k in range(T.dim) if T.summand[k] == i]
    where = {k: n for n, k in enumerate(idx)}
    L = T.left

    def act(a, v):
        return {where[w]: c for w, c in L.act(a, idx[v]).items()}

    basis = [T.basis[k] for k in idx]
    basis = [CalBasisElement(b.name.split(":")[-1], b.parity, b.cal) for b in basis]
    idem = [T.left.idem[k] for k in idx]
    return CalModule(T.Z, basis, act, "left", idem, f"PiT({i})", check=True, calibrated=True)


def pit_form(ell: int, i: int):
    """Gram data {(p, q): value} of the form on Pi T(i), i >= 1, in the module basis."""
    if i < 1 or i > ell:
        raise ValueError("the form is defined for 1 <= i <= ell")
    Z = zigzag(ell)
    sep = _zz_names(ell)
    V = pit_submodule(tilting_bimodule(ell), i)
    k = {n: p for p, n in enumerate(V.names)}
    e, c = k[f"e{i-1}"], k[f"c{i-1}"]
    g = {(e, c): 1, (c, e): -1, (k[f"a{i}{sep}{i-1}"], k[f"a{i}{sep}{i-1}"]): 1}
    if i > 1:
        a = k[f"a{i-2}{sep}{i-1}"]
        g[(a, a)] = 1
    return Z, V, g


def form_audit(Z: SuperAlgebra, V: CalModule, g: dict) -> AuditReport:
    rep = AuditReport()
    n = V.dim
    rep.record("even", all(V.parity[p] == V.parity[q] for (p, q) in g), None)
    m = ExactMatrix(n, n, QQ, g)
    dt = det(m)
    rep.record("non-degenerate", dt != 0, dt)
    anti = all(g.get((q, p), 0) == -(-1) ** (V.parity[p] * V.parity[q]) * x
               for (p, q), x in g.items())
    rep.record("superantisymmetric", anti, None)
    bad = None
    for a in range(Z.dim):
        ta = Z.tau[a]
        for p in range(n):
            for q in range(n):
                lhs = sum(c * g.get((w, q), 0) for w, c in V.act(a, p).items())
                tw: dict = {}
                for b, s in ta.items():
                    vec_add(tw, V.act(b, q), s)
                rhs = sum(c * g.get((p, w), 0) for w, c in tw.items())
                if Z.parity[a] and V.parity[p]:
                    rhs = -rhs
                if lhs != rhs:
                    bad = bad or (Z.names[a], V.names[p], V.names[q])
    rep.record("tau-contravariant", bad is None, bad)
    rep.record("a-part isotropic", all(not (V.cal[p] == "a" and V.cal[q] == "a") for (p, q) in g), None)
    return rep


# ------------------------------------------------------------ JSON

def tilting_to_json(T: TiltingBimodule) -> str:
    left = [[a, v, w, str(c)] for a in range(T.Z.dim) for v in range(T.dim)
            for w, c in sorted(T.left.act(a, v).items())]
    right = [[a, v, w, str(c)] for a in range(T.Zp.dim) for v in range(T.dim)
             for w, c in sorted(T.right.act(a, v).items())]
    d = {"schema": 1, "kind": "TiltingBimodule", "ell": T.Z.ell,
         "basis": [{"name": b.name, "parity": b.parity, "cal": b.cal} for b in T.basis],
         "left_summand": T.summand,
         "right_summands": {str(k): v for k, v in T.right_summands.items()},
         "left_action": left, "right_action": right,
         "right_algebra_basis": T.Zp.names}
    return json.dumps(d, sort_keys=True)
