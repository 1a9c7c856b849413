"""The tilting bimodule of T^Z(n, d) and the checks around its endomorphisms.

scrT = Gamma~^d M_n(T) is a left T^Z(n,d)- and right T^Z'(n,d)-module.  A
basis vector is a sorted tuple over M_n(T), whose entries are (t, r, s) with
t in the T basis, r a row and s a column.  Its content counts, per summand i
and column s, the entries with t in summand i.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import combinat
from .divpow import divided_power_module, lifted_gram
from .exact_linalg import Echelon, ExactMatrix, Field, field_from, hom_space, rank, solve
from .schur import col_module, eta_idempotent, gamma_col_module, schur_algebra
from .superalg import AuditReport, CalBasisElement, CalModule, mat_unpack
from .tilting_core import TiltingBimodule, pit_form, pit_submodule, tilting_bimodule


@dataclass
class ScrT:
    n: int
    d: int
    ell: int
    field: Field
    T: TiltingBimodule
    S: object
    Sp: object
    left: CalModule
    right: CalModule
    indices: list
    content: list
    weight: list
    rweight: list
    blocks: dict = field(default_factory=dict)
    _lcols: dict = field(default_factory=dict)
    _rcols: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.indices)

    @property
    def parity(self):
        return self.left.parity

    def left_columns(self, x: int) -> dict:
        """{v: {w: c}} for the action of S basis element x (integers)."""
        hit = self._lcols.get(x)
        if hit is None:
            hit = {}
            for v in range(self.dim):
                r = self.left.act(x, v)
                if r:
                    hit[v] = r
            self._lcols[x] = hit
        return hit

    def right_columns(self, y: int) -> dict:
        hit = self._rcols.get(y)
        if hit is None:
            hit = {}
            for v in range(self.dim):
                r = self.right.act(y, v)
                if r:
                    hit[v] = r
            self._rcols[y] = hit
        return hit


def _mt_modules(T: TiltingBimodule, M, Mp, n: int):
    """M_n(T) as a left M_n(Z)-module and a right M_n(Z')-module (same basis)."""
    nn = n * n
    basis = [CalBasisElement(f"{b.name}[{r+1},{s+1}]", b.parity, b.cal)
             for b in T.basis for r in range(n) for s in range(n)]

    def unpack(j):
        t, rs = divmod(j, nn)
        r, s = divmod(rs, n)
        return t, r, s

    def lact(i, j):
        b, r, r1 = mat_unpack(M, i)
        t, r2, s = unpack(j)
        if r1 != r2:
            return {}
        return {(w * n + r) * n + s: c for w, c in T.left.act(b, t).items()}

    def ract(i, j):
        b, s1, s = mat_unpack(Mp, i)
        t, r, s2 = unpack(j)
        if s1 != s2:
            return {}
        return {(w * n + r) * n + s: c for w, c in T.right.act(b, t).items()}

    lidem = [(T.left.idem[unpack(j)[0]], unpack(j)[1]) for j in range(len(basis))]
    ridem = [(T.right.idem[unpack(j)[0]], unpack(j)[2]) for j in range(len(basis))]
    L = CalModule(M, basis, lact, "left", lidem, "M_n(T)", check=False, calibrated=True)
    R = CalModule(Mp, basis, ract, "right", ridem, "M_n(T)'", check=False, calibrated=True)
    return L, R, unpack


def build_scrT(n: int, d: int, ell: int, field="Q", literal: bool = False) -> ScrT:
    if d > n:
        raise ValueError("the tilting bimodule is only built for d <= n")
    F = field_from(field)
    T = tilting_bimodule(ell, literal)
    S = schur_algebra(T.Z, n, d)
    Sp = schur_algebra(T.Zp, n, d)
    L, R, unpack = _mt_modules(T, S.matrix, Sp.matrix, n)
    GL = divided_power_module(S, L)
    GR = divided_power_module(Sp, R)
    assert GL.indices == GR.indices
    content, weight, rweight = [], [], []
    for t in GL.indices:
        c = [[0] * n for _ in range(ell + 1)]
        w = [[0] * n for _ in range(ell + 1)]
        rw = [[0] * n for _ in range(ell + 1)]
        for x in t:
            tb, r, s = unpack(x)
            c[T.summand[tb]][s] += 1
            w[T.left.idem[tb]][r] += 1
            rw[T.right.idem[tb]][s] += 1
        content.append(tuple(map(tuple, c)))
        weight.append(tuple(map(tuple, w)))
        rweight.append(tuple(map(tuple, rw)))
    blocks: dict = {}
    for k, c in enumerate(content):
        blocks.setdefault(c, []).append(k)
    return ScrT(n, d, ell, F, T, S, Sp, GL, GR, list(GL.indices), content, weight, rweight,
                dict(sorted(blocks.items())))


# ------------------------------------------------------------ content blocks

def content_decompose(X: ScrT, check: bool = True) -> dict:
    """content -> list of basis positions; closure under the left action is checked."""
    if check:
        where = {}
        for c, vs in X.blocks.items():
            for v in vs:
                where[v] = c
        for x in range(X.S.dim):
            for v, col in X.left_columns(x).items():
                if any(where[w] != where[v] for w in col):
                    raise AssertionError(f"left action leaves content block at {x}, {v}")
    return X.blocks


def weight_diagonal_check(X: ScrT) -> bool:
    """Each eta_lambda acts on the basis as the projection onto its weight vectors."""
    for lam in combinat.all_weights(X.n, X.d, X.ell):
        vec = eta_idempotent(X.S, lam)
        if len(vec) != 1 or next(iter(vec.values())) != 1:
            return False
        (x,) = vec
        cols = X.left_columns(x)
        for v in range(X.dim):
            want = {v: 1} if X.weight[v] == lam else {}
            if cols.get(v, {}) != want:
                return False
    return True


def block_character(X: ScrT, c) -> dict:
    return dict(Counter(X.weight[v] for v in X.blocks.get(c, [])))


# ------------------------------------------------------------ filtration multiplicities

@dataclass
class FiltrationReport:
    content: tuple
    multiplicities: dict
    predicted: dict
    ok: bool


def solve_multiplicities(ch: dict, n: int, d: int, ell: int, alphabet) -> dict | None:
    """The unique m with ch = sum m_lambda ch Delta(lambda), or None if not integral."""
    lams = combinat.dominant_weights(n, d, ell)
    weights = sorted(set(ch) | {w for l in lams for w in combinat.tableau_weights(l, alphabet)})
    wpos = {w: k for k, w in enumerate(weights)}
    cols = {}
    for j, l in enumerate(lams):
        for w, x in combinat.tableau_weights(l, alphabet).items():
            cols[(wpos[w], j)] = x
    A = ExactMatrix(len(weights), len(lams), field_from("Q"), cols)
    sol = solve(A, {wpos[w]: x for w, x in ch.items()})
    if sol is None:
        return None
    out = {}
    for j, l in enumerate(lams):
        x = Fraction(sol.get(j, 0))
        if x.denominator != 1 or x < 0:
            return None
        if x:
            out[l] = int(x)
    return out


def predicted_multiplicities(mu, n: int, d: int, ell: int, alphabet) -> dict:
    """lambda -> k(conj(rev(lambda)), rev(mu))."""
    out = {}
    rmu = combinat.reverse(mu)
    for lam in combinat.dominant_weights(n, d, ell):
        k = combinat.kostka(combinat.conjugate(combinat.reverse(lam)), rmu, alphabet)
        if k:
            out[lam] = k
    return out


def filtration_multiplicities(X: ScrT, mu) -> FiltrationReport:
    alph = combinat.zigzag_alphabet(X.T.Z, X.n)
    m = solve_multiplicities(block_character(X, mu), X.n, X.d, X.ell, alph)
    pred = predicted_multiplicities(mu, X.n, X.d, X.ell, alph)
    return FiltrationReport(mu, m, pred, m is not None and m == pred)


def one_row_multiplicities(n: int, d: int, ell: int, i: int, alphabet) -> dict:
    """Multiplicities of the column divided power of summand i, from its character."""
    T = tilting_bimodule(ell)
    S = schur_algebra(T.Z, n, d)
    G = gamma_col_module(S, pit_submodule(T, i))
    ch = dict(Counter(_col_weight(G, T, i, n, ell)))
    return solve_multiplicities(ch, n, d, ell, alphabet)


def _col_weight(G, T, i, n, ell):
    idx = [k for k in range(T.dim) if T.summand[k] == i]
    out = []
    for t in G.indices:
        w = [[0] * n for _ in range(ell + 1)]
        for x in t:
            v, r = divmod(x, n)
            w[T.left.idem[idx[v]]][r] += 1
        out.append(tuple(map(tuple, w)))
    return out


# ------------------------------------------------------------ tilting weights

def tilt_weight_audit(n: int, d: int, ell: int, i: int) -> AuditReport:
    rep = AuditReport()
    T = tilting_bimodule(ell)
    S = schur_algebra(T.Z, n, d)
    V = pit_submodule(T, i)
    G = gamma_col_module(S, V)
    wts = Counter(_col_weight(G, T, i, n, ell))
    top = combinat.iota(i, combinat.one_d(d, n), n, ell)
    rep.record("top weight multiplicity 1", wts.get(top) == 1, wts.get(top))
    maximal = [w for w in wts if not any(u != w and combinat.leq_I(w, u) for u in wts)]
    rep.record("unique maximal weight", maximal == [top], maximal)
    if i == 0:
        rep.record("dimension C(n,d)", G.dim == comb(n, d), G.dim)
        dom = [w for w in wts if combinat.is_dominant(w)]
        rep.record("single dominant weight", dom == [top], dom)
        return rep
    # explicit isomorphism with S eta for eta = eta_{iota_{i-1}((d))}
    M = S.matrix
    Z = T.Z
    eta = eta_idempotent(S, combinat.iota(i - 1, combinat.row_d(d, n), n, ell))
    (ex,) = eta
    gen_entry = V.names.index(f"e{i-1}") * n      # (e_{i-1}, row 1)
    gen = G.pos[(gen_entry,) * d]
    # basis of S eta: all columns 1 and every entry in Z e_{i-1}
    zcol = {b: V.names.index(Z.names[b]) for b in range(Z.dim) if Z.right_idem[b] == i - 1}
    B = [k for k, t in enumerate(S.indices)
         if all(mat_unpack(M, x)[2] == 0 and mat_unpack(M, x)[0] in zcol for x in t)]
    ok_idem = all(S.mul(k, ex) == {k: 1} for k in B)
    Bset = set(B)
    ok_span = all(set(S.mul(k, ex)) <= Bset for k in range(S.dim))
    rep.record("S eta spanned by column-one elements", ok_idem and ok_span, len(B))
    images = {}
    bij = True
    for k in B:
        img = G.act(k, gen)
        t = S.indices[k]
        want = tuple(sorted(zcol[mat_unpack(M, x)[0]] * n + mat_unpack(M, x)[1] for x in t))
        if set(img) != {G.pos.get(want)} or abs(next(iter(img.values()))) != 1:
            bij = False
        images[k] = img
    hit = {next(iter(v)) for v in images.values() if v}
    bij = bij and len(hit) == len(B) == G.dim
    rep.record("eta -> eta . generator is a basis bijection", bij, (len(B), G.dim))
    inter = True
    for x in range(S.dim):
        for k in B:
            lhs: dict = {}
            for j, c in S.mul(x, k).items():
                for w, z in images[j].items():
                    lhs[w] = lhs.get(w, 0) + c * z
            lhs = {w: z for w, z in lhs.items() if z}
            rhs = G.act_vec({x: 1}, images[k])
            if lhs != rhs:
                inter = False
                break
        if not inter:
            break
    rep.record("map is S-linear", inter, None)
    return rep


def tilting_form_audit(n: int, d: int, ell: int, i: int, contravariance: bool = True) -> AuditReport:
    """Lifted form on the column divided power of Pi T(i): pairing, non-degeneracy, contravariance."""
    rep = AuditReport()
    Z, V, g = pit_form(ell, i)
    C = col_module(_dummy_matrix(Z, n), V)
    phi = {(p * n + r, q * n + r): x for (p, q), x in g.items() for r in range(n)}
    idx, gram = lifted_gram(phi, C.parity, C.cal, d)
    # dual basis: e* = c, c* = -e, a* = a (columnwise)
    dual = {}
    for (p, q), x in g.items():
        dual.setdefault(p, (q, x))
    pos = {t: k for k, t in enumerate(idx)}
    pairing_ok = True
    for k, t in enumerate(idx):
        star = tuple(sorted(dual[v // n][0] * n + v % n for v in t))
        q = pos.get(star)
        row = {qq: x for (pp, qq), x in gram.items() if pp == k}
        if q is None or set(row) != {q} or abs(row[q]) != 1:
            pairing_ok = False
    rep.record("|(y_b, y_b*)| = 1 on matched pairs only", pairing_ok, None)
    m = ExactMatrix(len(idx), len(idx), field_from("Q"), gram)
    rep.record("non-degenerate", rank(m) == len(idx), len(idx))
    if contravariance:
        S = schur_algebra(Z, n, d)
        G = divided_power_module(S, col_module(S.matrix, V))
        assert list(G.indices) == idx
        bad = None
        for x in range(S.dim):
            tx = S.tau[x]
            for v in range(G.dim):
                xv = G.act(x, v)
                for w in range(G.dim):
                    lhs = sum(c * gram.get((u, w), 0) for u, c in xv.items())
                    tw: dict = {}
                    for y, s in tx.items():
                        for u, c in G.act(y, w).items():
                            tw[u] = tw.get(u, 0) + s * c
                    rhs = sum(c * gram.get((v, u), 0) for u, c in tw.items())
                    if S.parity[x] and G.parity[v]:
                        rhs = -rhs
                    if lhs != rhs:
                        bad = bad or (x, v, w)
        rep.record("tau_d-contravariant", bad is None, bad)
    return rep


def _dummy_matrix(Z, n):
    from .superalg import matrix_superalgebra
    return matrix_superalgebra(Z, n, check=False)


# ------------------------------------------------------------ endomorphisms

def _operator_order(X: ScrT) -> list:
    """S basis elements with diagonal-idempotent-heavy ones first."""
    M = X.S.matrix
    Z = X.T.Z
    idem = {k for k in range(Z.dim) if Z.cal[k] == "a"}

    def key(k):
        t = X.S.indices[k]
        off = 0
        for x in t:
            b, r, s = mat_unpack(M, x)
            if not (b in idem and r == s):
                off += 1
        return (off, k)

    return sorted(range(X.S.dim), key=key)


def _restrict(cols: dict, rows_ok: dict, p: int):
    out = {}
    for v, col in cols.items():
        lv = rows_ok.get(v)
        if lv is None:
            continue
        c = {}
        for w, x in col.items():
            lw = rows_ok.get(w)
            if lw is not None:
                x = x % p if p else x
                if x:
                    c[lw] = x
        if c:
            out[lv] = c
    return out


@dataclass
class EndReport:
    even: int
    odd: int
    blocks: dict
    kernels: dict
    seconds: float

    @property
    def total(self):
        return self.even + self.odd


def end_dimension(X: ScrT, keep_kernels: bool = True) -> EndReport:
    """dim End_{T^Z(n,d)}(scrT), block by block over content pairs."""
    t0 = time.time()
    F = X.field
    p = F.p
    order = _operator_order(X)
    lcols = {x: X.left_columns(x) for x in order}
    blocks = X.blocks
    local = {c: {v: k for k, v in enumerate(vs)} for c, vs in blocks.items()}
    ops_by_block: dict = {}
    for c in blocks:
        lst = []
        for x in order:
            r = _restrict(lcols[x], local[c], p)
            lst.append(r)
        ops_by_block[c] = lst
    par = X.parity
    ev = od = 0
    per = {}
    kernels = {}
    for mu, src in blocks.items():
        for nu, dst in blocks.items():
            sp = [par[v] for v in src]
            dp = [par[u] for u in dst]
            allowed = [(a, b) for b, v in enumerate(src) for a, u in enumerate(dst)
                       if X.weight[u] == X.weight[v]]
            if not allowed:
                per[(mu, nu)] = (0, 0)
                continue
            res = []
            for parity in (0, 1):
                ops = ((ops_by_block[mu][k], ops_by_block[nu][k], X.S.parity[x])
                       for k, x in enumerate(order)
                       if ops_by_block[mu][k] or ops_by_block[nu][k])
                unk, ker = hom_space(ops, sp, dp, parity, F, allowed)
                res.append(len(ker))
                if keep_kernels:
                    kernels[(mu, nu, parity)] = (unk, ker)
            per[(mu, nu)] = tuple(res)
            ev += res[0]
            od += res[1]
    return EndReport(ev, od, per, kernels, time.time() - t0)


def right_operator(X: ScrT, y: int) -> dict:
    """phi_y(v) = (-1)^{|y||v|} v . y as columns {v: {w: c}}."""
    out = {}
    py = X.Sp.parity[y]
    for v, col in X.right_columns(y).items():
        s = -1 if py and X.parity[v] else 1
        out[v] = {w: s * c for w, c in col.items()}
    return out


def faithfulness_rank(X: ScrT) -> int:
    """Rank of T^Z'(n,d) -> End(scrT), y -> phi_y, over the field."""
    p = X.field.p
    dim = X.dim
    ech = Echelon(X.field)
    for y in range(X.Sp.dim):
        row = {}
        for v, col in right_operator(X, y).items():
            for w, c in col.items():
                c = c % p if p else c
                if c:
                    row[w * dim + v] = c
        ech.add(row)
    return ech.rank


def right_in_commutant(X: ScrT, E: EndReport) -> tuple[bool, object]:
    """Every phi_y lies in the computed Hom spaces (so commutes with the left action)."""
    p = X.field.p
    local = {c: {v: k for k, v in enumerate(vs)} for c, vs in X.blocks.items()}
    where = {}
    for c, vs in X.blocks.items():
        for v in vs:
            where[v] = c
    echs = {}
    for y in range(X.Sp.dim):
        py = X.Sp.parity[y]
        parts: dict = {}
        for v, col in right_operator(X, y).items():
            for w, c in col.items():
                c = c % p if p else c
                if c:
                    parts.setdefault((where[v], where[w]), {})[(local[where[w]][w], local[where[v]][v])] = c
        for (mu, nu), ent in parts.items():
            key = (mu, nu, py)
            if key not in E.kernels:
                return False, (y, mu, nu, "no kernel")
            unk, ker = E.kernels[key]
            upos = {u: k for k, u in enumerate(unk)}
            if any(u not in upos for u in ent):
                return False, (y, mu, nu, "outside weight-preserving maps")
            if key not in echs:
                e = Echelon(X.field)
                for k in ker:
                    e.add(k)
                echs[key] = e
            r = echs[key].reduce({upos[u]: c for u, c in ent.items()})
            if r:
                return False, (y, mu, nu)
    return True, None


def commute_sample(X: ScrT, limit: int | None = None, seed: int = 0) -> tuple[bool, object]:
    """(x v) y == x (v y) on basis triples (all, or a seeded sample of size limit)."""
    import random
    triples = [(x, v, y) for x in range(X.S.dim) for v in range(X.dim) for y in range(X.Sp.dim)] \
        if limit is None else None
    if triples is None:
        rng = random.Random(seed)
        triples = []
        while len(triples) < limit:
            x = rng.randrange(X.S.dim)
            cols = X.left_columns(x)
            if not cols:
                continue
            v = rng.choice(sorted(cols))
            triples.append((x, v, rng.randrange(X.Sp.dim)))
    for x, v, y in triples:
        lhs = X.right.act_vec({y: 1}, X.left.act(x, v))
        rhs = X.left.act_vec({x: 1}, X.right.act(y, v))
        if lhs != rhs:
            return False, (x, v, y)
    return True, None


def kostka_identities(n: int, d: int, ell: int, Z) -> dict:
    alph = combinat.zigzag_alphabet(Z, n)
    lams = combinat.dominant_weights(n, d, ell)
    mus = combinat.all_weights(n, d, ell)
    plain = sum(sum(combinat.kostka(l, m, alph) for m in mus) ** 2 for l in lams)
    flipped = sum(sum(combinat.kostka(combinat.conjugate(combinat.reverse(l)), combinat.reverse(m), alph)
                      for m in mus) ** 2 for l in lams)
    return {"sum_k_squared": plain, "sum_k_flipped_squared": flipped}


def hom_block_check(E: EndReport, fil: dict) -> bool:
    """dim Hom(block mu, block nu) = sum over lambda of m_mu(lambda) m_nu(lambda)."""
    for (mu, nu), (ev, od) in E.blocks.items():
        a, b = fil[mu].predicted, fil[nu].predicted
        if ev + od != sum(x * b.get(l, 0) for l, x in a.items()):
            return False
    return True


def one_row_check(X: ScrT) -> AuditReport:
    """Single-row contents: multiplicity 1 exactly on the Xi set."""
    rep = AuditReport()
    for i in range(X.ell + 1):
        mu = combinat.iota(i, combinat.row_d(X.d, X.n), X.n, X.ell)
        f = filtration_multiplicities(X, mu)
        want = {b: 1 for b in combinat.xi_set(X.d, i, X.n, X.ell)}
        rep.record(f"one-row content, summand {i}", f.multiplicities == want, f.multiplicities)
    return rep


def lr_omega_check(n: int, d: int, ell: int) -> tuple[bool, object]:
    """multi_lr(alpha, beta, lambda) is 1 on Omega and 0 elsewhere, for every beta in Xi."""
    for r in range(d + 1):
        alphas = combinat.dominant_weights(n, d - r, ell)
        for lam in combinat.dominant_weights(n, d, ell):
            for i in range(ell + 1):
                for s in ([0] if i == 0 else range(r + 1)):
                    b = combinat.beta(i, r, s, n, ell)
                    om = set(combinat.omega_set(lam, i, r, s))
                    for a in alphas:
                        if combinat.multi_lr(a, b, lam) != (1 if a in om else 0):
                            return False, (a, b, lam)
    return True, None


def kostka_audit(n: int, d: int, ell: int, field="Q") -> AuditReport:
    """Filtration multiplicities of every content block against the reindexed Kostka numbers."""
    rep = AuditReport()
    X = build_scrT(n, d, ell, field)
    bad = [mu for mu in X.blocks if not filtration_multiplicities(X, mu).ok]
    rep.record("multiplicities equal reindexed Kostka numbers", not bad, bad[:3])
    rep.checks.update(one_row_check(X).checks)
    ki = kostka_identities(n, d, ell, X.T.Z)
    rep.record("sum of squared row sums equals dim", ki["sum_k_squared"] == X.S.dim,
               (ki["sum_k_squared"], X.S.dim))
    rep.record("reindexing preserves the sum", ki["sum_k_flipped_squared"] == ki["sum_k_squared"], ki)
    ok, wit = lr_omega_check(n, d, ell)
    rep.record("LR coefficient is the Omega indicator", ok, wit)
    return rep


def verify_ringel(n: int, d: int, ell: int, field="Q", commute_limit: int | None = 20000) -> dict:
    """All legs of the self-duality check; returns a JSON-ready dict."""
    t0 = time.time()
    X = build_scrT(n, d, ell, field)
    out = {"n": n, "d": d, "ell": ell, "field": X.field.name, "dim_scrT": X.dim,
           "dim_TZ": X.S.dim, "dim_TZprime": X.Sp.dim}
    legs = {}
    legs["weights_diagonal"] = weight_diagonal_check(X)
    content_decompose(X)
    E = end_dimension(X)
    sp_even = sum(1 for p in X.Sp.parity if p == 0)
    sp_odd = X.Sp.dim - sp_even
    out["end"] = {"even": E.even, "odd": E.odd, "total": E.total, "seconds": round(E.seconds, 2)}
    out["TZprime_split"] = {"even": sp_even, "odd": sp_odd}
    legs["end_dimension"] = E.total == X.S.dim
    legs["end_parity_split"] = (E.even, E.odd) == (sp_even, sp_odd)
    fr = faithfulness_rank(X)
    out["faithful_rank"] = fr
    legs["faithful"] = fr == X.Sp.dim
    ok, wit = right_in_commutant(X, E)
    legs["right_action_in_commutant"] = ok
    if not ok:
        out["commutant_witness"] = str(wit)
    small = X.S.dim * X.dim * X.Sp.dim <= 2_000_000
    ok2, wit2 = commute_sample(X, None if small else commute_limit)
    legs["actions_commute"] = ok2
    if not ok2:
        out["commute_witness"] = str(wit2)
    fil = {mu: filtration_multiplicities(X, mu) for mu in X.blocks}
    legs["filtration_multiplicities"] = all(f.ok for f in fil.values())
    legs["hom_blocks_match_multiplicities"] = hom_block_check(E, fil)
    ki = kostka_identities(n, d, ell, X.T.Z)
    out.update(ki)
    legs["k_identity"] = ki["sum_k_squared"] == X.S.dim
    legs["k_reindexing"] = ki["sum_k_flipped_squared"] == ki["sum_k_squared"]
    out["legs"] = legs
    out["ok"] = all(legs.values())
    out["seconds"] = round(time.time() - t0, 2)
    return out
