"""Generalized Schur algebras T^A(n, d) = modified divided powers of M_n(A).

The algebra is an ordinary SuperAlgebra on the eta basis; extra attributes
``base`` (A), ``matrix`` (M_n(A)), ``n`` and ``d`` are attached.  Weights are
tuples over colors of length-n compositions (see ``combinat``).
"""
from __future__ import annotations

import json
from fractions import Fraction

from . import combinat
from .divpow import (divided_power_algebra, divided_power_module, expand_y, factorial_c,
                     is_valid_index, star_vec)
from .exact_linalg import QQ, ExactMatrix, Field, rank
from .superalg import (CalBasisElement, CalModule, SuperAlgebra, anti_involution_audit,
                       mat_index, mat_unpack, matrix_superalgebra)


def schur_algebra(A: SuperAlgebra, n: int, d: int, check: bool = False) -> SuperAlgebra:
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    M = matrix_superalgebra(A, n, check=False)
    S = divided_power_algebra(M, d, check=check)
    S.base = A
    S.matrix = M
    S.n = n
    S.quasi_hereditary = d <= n
    S.name = f"T^{A.name}({n},{d})"
    return S


def eta_triples(S: SuperAlgebra, t: tuple):
    """Index as a list of (carrier basis index, row, column), 0-based."""
    return [mat_unpack(S.matrix, x) for x in t]


def index_of_triples(S: SuperAlgebra, triples) -> tuple:
    return tuple(sorted(mat_index(S.matrix, b, r, s) for b, r, s in triples))


# ------------------------------------------------------------ idempotents

def _single(S: SuperAlgebra, b: int, comp) -> dict:
    """eta^{b^k}_{l, l} for the row sequence l of composition comp, as a y-vector."""
    t = []
    for r, m in enumerate(comp):
        t.extend([mat_index(S.matrix, b, r, r)] * m)
    return {tuple(sorted(t)): 1}


def eta_idempotent(S: SuperAlgebra, lam) -> dict:
    """eta_lambda = eta^{e_0}_{lambda^(0)} * ... * eta^{e_ell}_{lambda^(ell)} as an S-vector."""
    A = S.base
    H = A.heredity
    if len(lam) != len(H.labels):
        raise ValueError("weight has the wrong number of colors")
    if sum(sum(c) for c in lam) != S.d or any(len(c) != S.n for c in lam):
        raise ValueError("weight size does not match (n, d)")
    M = S.matrix
    acc = {(): 1}
    for i, comp in zip(H.labels, lam):
        (e,) = H.e[i]
        acc = star_vec(acc, _single(S, e, comp), M.parity, M.cal)
    return {S.pos[t]: x for t, x in acc.items()}


def idempotent_table(S: SuperAlgebra, ell: int | None = None) -> dict:
    ell = len(S.base.heredity.labels) - 1 if ell is None else ell
    return {mu: eta_idempotent(S, mu) for mu in combinat.all_weights(S.n, S.d, ell)}


def weight_character(M: CalModule, idempotents: dict, field: Field = QQ) -> dict:
    """mu -> rank of the action of eta_mu on M, for mu with nonzero rank."""
    out = {}
    for mu, vec in idempotents.items():
        ents: dict = {}
        for a, x in vec.items():
            for v in range(M.dim):
                for w, c in M.act(a, v).items():
                    ents[(w, v)] = ents.get((w, v), 0) + x * c
        r = rank(ExactMatrix(M.dim, M.dim, field, {k: v for k, v in ents.items() if v}))
        if r:
            out[mu] = r
    return out


# ------------------------------------------------------------ column and row modules

def col_module(M: SuperAlgebra, V: CalModule, name: str | None = None) -> CalModule:
    """Col_n(V) as a left M_n(A)-module; basis (v, r) at index v*n + r."""
    if V.side != "left":
        raise ValueError("columns need a left module")
    n = M.n
    basis = [CalBasisElement(f"{b.name}[{r+1}]", b.parity, b.cal)
             for b in V.basis for r in range(n)]
    idem = None if V.idem is None else [(V.idem[v], r) for v in range(V.dim) for r in range(n)]

    def act(i, j, _V=V):
        b, r, s = mat_unpack(M, i)
        v, s2 = divmod(j, n)
        if s != s2:
            return {}
        return {w * n + r: c for w, c in _V.act(b, v).items()}

    return CalModule(M, basis, act, "left", idem, name or f"Col{n}({V.name})",
                     check=False, calibrated=V.calibrated)


def row_module(M: SuperAlgebra, V: CalModule, name: str | None = None) -> CalModule:
    """Row_n(V) as a right M_n(A)-module; basis (v, s) at index v*n + s."""
    if V.side != "right":
        raise ValueError("rows need a right module")
    n = M.n
    basis = [CalBasisElement(f"{b.name}[{s+1}]", b.parity, b.cal)
             for b in V.basis for s in range(n)]
    idem = None if V.idem is None else [(V.idem[v], s) for v in range(V.dim) for s in range(n)]

    def act(i, j, _V=V):
        b, r, s = mat_unpack(M, i)
        v, r2 = divmod(j, n)
        if r != r2:
            return {}
        return {w * n + s: c for w, c in _V.act(b, v).items()}

    return CalModule(M, basis, act, "right", idem, name or f"Row{n}({V.name})",
                     check=False, calibrated=V.calibrated)


def gamma_col_module(S: SuperAlgebra, V: CalModule) -> CalModule:
    return divided_power_module(S, col_module(S.matrix, V))


def gamma_row_module(S: SuperAlgebra, V: CalModule) -> CalModule:
    return divided_power_module(S, row_module(S.matrix, V))


# ------------------------------------------------------------ anti-involution

def tau_nd(S: SuperAlgebra) -> list:
    if S.tau is None:
        raise ValueError("carrier algebra has no anti-involution")
    return S.tau


def tau_audit(S: SuperAlgebra, pairs=None) -> bool:
    return anti_involution_audit(S, S.tau, pairs)


# ------------------------------------------------------------ coproduct

def coproduct(S: SuperAlgebra, t: tuple) -> dict:
    """Image of eta^t under the coproduct, as {(c, t1, t2): coeff}.

    Brute force: expand y_t in M^{tensor d}, cut after position c, and read
    off y_{t1} (x) y_{t2} coordinates from the sorted-sorted pure tensors.
    """
    M = S.matrix
    return _coproduct_index(M.parity, M.cal, tuple(t))


def _coproduct_index(par, cal, t: tuple) -> dict:
    d = len(t)
    tensor = expand_y(t, par, cal)
    out = {}
    for c in range(d + 1):
        for u, x in tensor.items():
            t1, t2 = u[:c], u[c:]
            if list(t1) != sorted(t1) or list(t2) != sorted(t2):
                continue
            if not (is_valid_index(t1, par) and is_valid_index(t2, par)):
                continue
            f = factorial_c(t1, cal) * factorial_c(t2, cal)
            q, r = divmod(x, f)
            if r:
                raise ArithmeticError(f"non-integral coproduct coefficient {Fraction(x, f)}")
            out[(c, t1, t2)] = out.get((c, t1, t2), 0) + q
        # reconstruct the split tensor to make sure nothing was lost
        rebuilt: dict = {}
        for (cc, t1, t2), q in out.items():
            if cc != c:
                continue
            for u1, x1 in expand_y(t1, par, cal).items():
                for u2, x2 in expand_y(t2, par, cal).items():
                    k = u1 + u2
                    rebuilt[k] = rebuilt.get(k, 0) + q * x1 * x2
        rebuilt = {k: v for k, v in rebuilt.items() if v}
        if rebuilt != tensor:
            raise ArithmeticError("coproduct re-expression does not reproduce the tensor")
    return {k: v for k, v in out.items() if v}


def coassociativity_sides(par, cal, t: tuple):
    """((D x 1) D)(y_t) and ((1 x D) D)(y_t) as dicts over (t1, t2, t3)."""
    left: dict = {}
    right: dict = {}
    for (c, t1, t2), q in _coproduct_index(par, cal, t).items():
        for (c1, u1, u2), q1 in _coproduct_index(par, cal, t1).items():
            k = (u1, u2, t2)
            left[k] = left.get(k, 0) + q * q1
        for (c2, w1, w2), q2 in _coproduct_index(par, cal, t2).items():
            k = (t1, w1, w2)
            right[k] = right.get(k, 0) + q * q2
    return ({k: v for k, v in left.items() if v}, {k: v for k, v in right.items() if v})


# ------------------------------------------------------------ JSON

def basis_to_json(S: SuperAlgebra) -> str:
    A = S.base
    rows = []
    for t in S.indices:
        trip = {}
        for b, r, s in eta_triples(S, t):
            key = (A.names[b], r + 1, s + 1)
            trip[key] = trip.get(key, 0) + 1
        rows.append({"triples": [[b, r, s, str(m)] for (b, r, s), m in sorted(trip.items())],
                     "parity": sum(A.parity[b] for b, _, _ in eta_triples(S, t)) % 2})
    return json.dumps({"schema": 1, "kind": "EtaBasis", "algebra": A.name, "n": S.n, "d": S.d,
                       "dim": S.dim, "basis": rows}, sort_keys=True)


def character_to_json(ch: dict) -> str:
    items = [{"weight": [list(c) for c in mu], "dim": str(v)} for mu, v in sorted(ch.items())]
    return json.dumps({"schema": 1, "kind": "Character", "terms": items}, sort_keys=True)


def character_from_json(s: str) -> dict:
    d = json.loads(s)
    return {tuple(tuple(c) for c in t["weight"]): int(t["dim"]) for t in d["terms"]}
