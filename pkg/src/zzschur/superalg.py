"""Calibrated superalgebras and supermodules with integral structure constants.

Elements are sparse integer vectors ``{basis index: coeff}``.  Every basis
element carries a parity (0 or 1) and a calibration class: ``"a"`` (the
distinguished even subalgebra part), ``"c"`` (its even complement) or ``"o"``
(odd).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .exact_linalg import QQ, ExactMatrix, Field, hom_space, rank

CAL_CLASSES = ("a", "c", "o")


@dataclass(frozen=True)
class CalBasisElement:
    name: str
    parity: int
    cal: str

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"bad parity {self.parity!r}")
        if self.cal not in CAL_CLASSES:
            raise ValueError(f"bad calibration class {self.cal!r}")
        if (self.cal == "o") != (self.parity == 1):
            raise ValueError(f"{self.name}: odd elements and only they have class 'o'")


def vec_add(acc: dict, v: dict, scale: int = 1) -> dict:
    for k, x in v.items():
        y = acc.get(k, 0) + scale * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def vec_scale(v: dict, s: int) -> dict:
    return {k: s * x for k, x in v.items()} if s else {}


@dataclass
class HeredityData:
    """Poset I (labels with ``less(i, j)``), families X(i), Y(i) of elements and e_i.

    X and Y entries are sparse vectors in the algebra.
    """
    labels: list
    X: dict
    Y: dict
    e: dict
    order: Callable = field(default=lambda i, j: i < j)

    def greater(self, i):
        return [j for j in self.labels if self.order(i, j)]


class SuperAlgebra:
    """A finite-dimensional calibrated superalgebra.

    ``mult`` is either a dict ``{(i, j): {k: coeff}}`` or a callable
    ``(i, j) -> {k: coeff}``.  ``left_idem[b]`` / ``right_idem[b]`` label the
    idempotent ``e`` with ``e b = b`` / ``b e = b``; they are used only to skip
    products that must vanish.
    """

    def __init__(self, basis: Sequence[CalBasisElement], mult, unit: dict, tau=None,
                 heredity: HeredityData | None = None, left_idem=None, right_idem=None,
                 name: str = "A", check: bool = True):
        self.basis = tuple(basis)
        self.name = name
        self.names = [b.name for b in self.basis]
        self._index = {b.name: i for i, b in enumerate(self.basis)}
        if len(self._index) != len(self.basis):
            raise ValueError("duplicate basis names")
        self.parity = [b.parity for b in self.basis]
        self.cal = [b.cal for b in self.basis]
        if callable(mult):
            self._mult_fn = mult
            self._table: dict = {}
        else:
            self._mult_fn = None
            self._table = {k: dict(v) for k, v in mult.items() if v}
        self.unit = dict(unit)
        self.tau = None if tau is None else [dict(t) for t in tau]
        self.heredity = heredity
        self.left_idem = None if left_idem is None else list(left_idem)
        self.right_idem = None if right_idem is None else list(right_idem)
        if check:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        return self._index[name]

    def elt(self, name: str) -> dict:
        return {self._index[name]: 1}

    def mul(self, i: int, j: int) -> dict:
        key = (i, j)
        t = self._table
        if key in t:
            return t[key]
        if self._mult_fn is None:
            return {}
        r = self._mult_fn(i, j)
        t[key] = r
        return r

    def mul_vec(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mul(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def parity_of(self, v: dict):
        ps = {self.parity[k] for k in v}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def structure_constants(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in sorted(self.mul(i, j).items()):
                    yield i, j, k, c

    # ------------------------------------------------------------ validation
    def validate(self, exhaustive_limit: int = 64, samples: int = 4000, seed: int = 0):
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in self.mul(i, j):
                    if self.parity[k] != (self.parity[i] + self.parity[j]) % 2:
                        raise ValueError(f"product {self.names[i]}*{self.names[j]} breaks parity")
        for b in range(n):
            e = {b: 1}
            if self.mul_vec(self.unit, e) != e or self.mul_vec(e, self.unit) != e:
                raise ValueError("unit is not a two-sided identity")
        if any(self.cal[k] != "a" for k in self.unit):
            raise ValueError("unit is not an a-part combination")
        a_part = [i for i in range(n) if self.cal[i] == "a"]
        for i in a_part:
            for j in a_part:
                if any(self.cal[k] != "a" for k in self.mul(i, j)):
                    raise ValueError("a-part is not closed under multiplication")
        if n <= exhaustive_limit:
            triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
        for i, j, k in triples:
            lhs = self.mul_vec(self.mul(i, j), {k: 1})
            rhs = self.mul_vec({i: 1}, self.mul(j, k))
            if lhs != rhs:
                raise ValueError(f"associativity fails on {self.names[i]},{self.names[j]},{self.names[k]}")
        self._check_idem_labels()
        return True

    def _check_idem_labels(self):
        if self.left_idem is None:
            return
        for i in range(self.dim):
            for j in range(self.dim):
                if self.right_idem[i] != self.left_idem[j] and self.mul(i, j):
                    raise ValueError("idempotent labels inconsistent with products")

    def tau_vec(self, v: dict) -> dict:
        out: dict = {}
        for k, x in v.items():
            vec_add(out, self.tau[k], x)
        return out

    def __repr__(self):
        return f"SuperAlgebra({self.name}, dim={self.dim})"


class CalModule:
    """A left or right supermodule over a SuperAlgebra.

    ``action`` is a dict ``{(a, v): {w: coeff}}`` or a callable ``(a, v) -> dict``;
    for a right module the key is still ``(a, v)`` and means ``v . a``.
    ``idem[v]`` labels the idempotent fixing ``v`` on the acting side.
    """

    def __init__(self, algebra: SuperAlgebra, basis: Sequence[CalBasisElement], action,
                 side: str = "left", idem=None, name: str = "V", check: bool = True,
                 calibrated: bool = True):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        self.algebra = algebra
        self.basis = tuple(basis)
        self.names = [b.name for b in self.basis]
        self.parity = [b.parity for b in self.basis]
        self.cal = [b.cal for b in self.basis]
        self.side = side
        self.name = name
        self.idem = None if idem is None else list(idem)
        if callable(action):
            self._fn = action
            self._table: dict = {}
        else:
            self._fn = None
            self._table = {k: dict(v) for k, v in action.items() if v}
        self.calibrated = calibrated
        if check:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def act(self, a: int, v: int) -> dict:
        key = (a, v)
        t = self._table
        if key in t:
            return t[key]
        if self._fn is None:
            return {}
        r = self._fn(a, v)
        t[key] = r
        return r

    def act_vec(self, x: dict, v: dict) -> dict:
        out: dict = {}
        for a, s in x.items():
            for b, t in v.items():
                for w, c in self.act(a, b).items():
                    out[w] = out.get(w, 0) + s * t * c
        return {k: val for k, val in out.items() if val}

    def operator(self, a: int, field: Field = QQ) -> ExactMatrix:
        """Matrix of the action of basis element a (columns = module basis)."""
        ents = {}
        for v in range(self.dim):
            for w, c in self.act(a, v).items():
                ents[(w, v)] = c
        return ExactMatrix(self.dim, self.dim, field, ents)

    def validate(self):
        A = self.algebra
        for a in range(A.dim):
            for v in range(self.dim):
                for w in self.act(a, v):
                    if self.parity[w] != (A.parity[a] + self.parity[v]) % 2:
                        raise ValueError(f"{self.name}: action breaks parity")
        for v in range(self.dim):
            if self.act_vec(A.unit, {v: 1}) != {v: 1}:
                raise ValueError(f"{self.name}: unit does not act as identity")
        for a in range(A.dim):
            for b in range(A.dim):
                ab = A.mul(a, b)
                for v in range(self.dim):
                    if self.side == "left":
                        lhs = self.act_vec(ab, {v: 1})
                        rhs = self.act_vec({a: 1}, self.act(b, v))
                    else:
                        lhs = self.act_vec(ab, {v: 1})
                        rhs = self.act_vec({b: 1}, self.act(a, v))
                    if lhs != rhs:
                        raise ValueError(f"{self.name}: action is not associative")
        if self.calibrated:
            for a in range(A.dim):
                if A.cal[a] != "a":
                    continue
                for v in range(self.dim):
                    if self.cal[v] == "a" and any(self.cal[w] != "a" for w in self.act(a, v)):
                        raise ValueError(f"{self.name}: a-part of the algebra does not preserve V_a")
        return True

    def __repr__(self):
        return f"CalModule({self.name}, {self.side}, dim={self.dim})"


def parity_shift(M: CalModule, name: str | None = None) -> CalModule:
    """Pi M: parities flipped, action twisted by a . v = (-1)^|a| a v."""
    if M.side != "left":
        raise ValueError("parity shift implemented for left modules")
    A = M.algebra
    basis = []
    for b in M.basis:
        p = 1 - b.parity
        basis.append(CalBasisElement(b.name, p, "o" if p else "c"))

    def act(a, v, _M=M, _A=A):
        r = _M.act(a, v)
        return vec_scale(r, -1) if _A.parity[a] else dict(r)

    return CalModule(A, basis, act, "left", M.idem, name or f"Pi{M.name}", calibrated=False)


# ------------------------------------------------------------------ zigzag

@dataclass(frozen=True)
class _Path:
    head: int
    tail: int
    length: int


def _zz_names(ell: int):
    sep = "" if ell < 10 else ","
    return sep


def zigzag(ell: int) -> SuperAlgebra:
    """The extended zigzag superalgebra on vertices 0..ell.

    Basis order: e_0..e_ell, then a_{j,j+1}, a_{j+1,j} for each j, then c_j.
    a_{i,j} lies in e_i Z e_j.
    """
    if ell < 1:
        raise ValueError("ell must be at least 1")
    sep = _zz_names(ell)
    basis, paths = [], []
    for i in range(ell + 1):
        basis.append(CalBasisElement(f"e{i}", 0, "a"))
        paths.append(_Path(i, i, 0))
    for j in range(ell):
        basis.append(CalBasisElement(f"a{j}{sep}{j+1}", 1, "o"))
        paths.append(_Path(j, j + 1, 1))
        basis.append(CalBasisElement(f"a{j+1}{sep}{j}", 1, "o"))
        paths.append(_Path(j + 1, j, 1))
    for j in range(ell):
        basis.append(CalBasisElement(f"c{j}", 0, "c"))
        paths.append(_Path(j, j, 2))
    n = len(basis)
    c_index = {j: ell + 1 + 2 * ell + j for j in range(ell)}
    table = {}
    for x in range(n):
        px = paths[x]
        for y in range(n):
            py = paths[y]
            if px.tail != py.head or px.length + py.length > 2:
                continue
            if px.length == 0:
                table[(x, y)] = {y: 1}
            elif py.length == 0:
                table[(x, y)] = {x: 1}
            elif px.head == py.tail and px.head < ell:
                # 2-cycle at vertex head; the one at ell vanishes
                table[(x, y)] = {c_index[px.head]: 1}
    tau = []
    for x, b in enumerate(basis):
        pth = paths[x]
        if pth.length == 0:
            tau.append({x: 1})
        elif pth.length == 1:
            tau.append({basis.index(CalBasisElement(f"a{pth.tail}{sep}{pth.head}", 1, "o")): 1})
        else:
            tau.append({x: -1})
    e = {i: {i: 1} for i in range(ell + 1)}
    X = {0: [{0: 1}]}
    Y = {0: [{0: 1}]}
    for i in range(1, ell + 1):
        X[i] = [{i: 1}, {ell + 1 + 2 * (i - 1): 1}]        # e_i, a_{i-1,i}
        Y[i] = [{i: 1}, {ell + 1 + 2 * (i - 1) + 1: 1}]    # e_i, a_{i,i-1}
    her = HeredityData(list(range(ell + 1)), X, Y, e)
    alg = SuperAlgebra(basis, table, {i: 1 for i in range(ell + 1)}, tau, her,
                       [p.head for p in paths], [p.tail for p in paths], name=f"Z{ell}")
    alg.paths = paths
    alg.ell = ell
    return alg


def path_length(Z: SuperAlgebra, b: int) -> int:
    return Z.paths[b].length


# ------------------------------------------------------------ matrix algebra

def matrix_superalgebra(A: SuperAlgebra, n: int, check: bool | None = None) -> SuperAlgebra:
    """M_n(A) with basis xi^b_{r,s} ordered lexicographically by (b, r, s)."""
    if n < 1:
        raise ValueError("n must be positive")
    nn = n * n
    basis = []
    for b, el in enumerate(A.basis):
        for r in range(n):
            for s in range(n):
                basis.append(CalBasisElement(f"{el.name}[{r+1},{s+1}]", el.parity, el.cal))

    def mult(i, j, _A=A):
        b, rs = divmod(i, nn)
        r, s = divmod(rs, n)
        b2, rs2 = divmod(j, nn)
        r2, s2 = divmod(rs2, n)
        if s != r2:
            return {}
        return {k * nn + r * n + s2: c for k, c in _A.mul(b, b2).items()}

    unit = {}
    for u, c in A.unit.items():
        for r in range(n):
            unit[u * nn + r * n + r] = c
    tau = None
    if A.tau is not None:
        tau = []
        for i in range(len(basis)):
            b, rs = divmod(i, nn)
            r, s = divmod(rs, n)
            tau.append({k * nn + s * n + r: c for k, c in A.tau[b].items()})
    li = ri = None
    if A.left_idem is not None:
        li, ri = [], []
        for i in range(len(basis)):
            b, rs = divmod(i, nn)
            r, s = divmod(rs, n)
            li.append((A.left_idem[b], r))
            ri.append((A.right_idem[b], s))
    if check is None:
        check = len(basis) <= 64
    M = SuperAlgebra(basis, mult, unit, tau, None, li, ri, name=f"M{n}({A.name})", check=check)
    M.carrier = A
    M.n = n
    return M


def mat_index(M: SuperAlgebra, b: int, r: int, s: int) -> int:
    """Index of xi^b_{r,s} (0-based rows and columns)."""
    n = M.n
    return (b * n + r) * n + s


def mat_unpack(M: SuperAlgebra, i: int):
    n = M.n
    b, rs = divmod(i, n * n)
    r, s = divmod(rs, n)
    return b, r, s


# ------------------------------------------------------------------ audits

@dataclass
class AuditReport:
    checks: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness=None):
        self.checks[name] = (bool(ok), witness)

    @property
    def ok(self) -> bool:
        return all(v[0] for v in self.checks.values())

    def failures(self):
        return {k: w for k, (ok, w) in self.checks.items() if not ok}

    def as_dict(self):
        return {k: {"ok": ok, "witness": None if w is None else str(w)}
                for k, (ok, w) in sorted(self.checks.items())}


def _span_rank(vecs, dim):
    m = ExactMatrix(len(vecs), dim, QQ, {(r, c): x for r, v in enumerate(vecs) for c, x in v.items()})
    return rank(m)


def heredity_audit(A: SuperAlgebra) -> AuditReport:
    """Check axioms (a)-(c) of heredity data and conformity of the a-part."""
    H = A.heredity
    if H is None:
        raise ValueError("algebra carries no heredity data")
    rep = AuditReport()
    n = A.dim
    prods = {i: [A.mul_vec(x, y) for x in H.X[i] for y in H.Y[i]] for i in H.labels}
    allp = [v for i in H.labels for v in prods[i]]
    rk = _span_rank(allp, n)
    rep.record("a: products form a basis", len(allp) == n and rk == n,
               None if rk == n and len(allp) == n else f"{len(allp)} products, rank {rk}, dim {n}")

    def above(i):
        return [v for j in H.greater(i) for v in prods[j]]

    bad_b = None
    for i in H.labels:
        up = above(i)
        for side, fam in (("left", H.X[i]), ("right", H.Y[i])):
            base = up + list(fam)
            r0 = _span_rank(base, n)
            for a in range(n):
                for x in fam:
                    v = A.mul_vec({a: 1}, x) if side == "left" else A.mul_vec(x, {a: 1})
                    if v and _span_rank(base + [v], n) != r0:
                        bad_b = bad_b or (i, side, A.names[a], x)
    rep.record("b: stability modulo higher ideal", bad_b is None, bad_b)

    bad_c = None
    for i in H.labels:
        ei = H.e[i]
        for x in H.X[i]:
            if A.mul_vec(x, ei) != x:
                bad_c = bad_c or ("x e_i != x", i, x)
            want = x if x == ei else {}
            if A.mul_vec(ei, x) != want:
                bad_c = bad_c or ("e_i x", i, x)
            for j in H.labels:
                ex = A.mul_vec(H.e[j], x)
                if ex and ex != x:
                    bad_c = bad_c or ("e_j x not in {x,0}", i, j, x)
        for y in H.Y[i]:
            if A.mul_vec(ei, y) != y:
                bad_c = bad_c or ("e_i y != y", i, y)
            want = y if y == ei else {}
            if A.mul_vec(y, ei) != want:
                bad_c = bad_c or ("y e_i", i, y)
            for j in H.labels:
                ye = A.mul_vec(y, H.e[j])
                if ye and ye != y:
                    bad_c = bad_c or ("y e_j not in {y,0}", i, j, y)
    rep.record("c: idempotent relations", bad_c is None, bad_c)

    def par(v):
        return A.parity_of(v)

    b_a = [A.mul_vec(x, y) for i in H.labels for x in H.X[i] for y in H.Y[i]
           if par(x) == 0 and par(y) == 0]
    ra = _span_rank(b_a, n)
    closed = all(_span_rank(b_a + [A.mul_vec(u, v)], n) == ra for u in b_a for v in b_a)
    has_unit = _span_rank(b_a + [A.unit], n) == ra
    rep.record("conforming: B_a spans a unital subalgebra", closed and has_unit,
               None if closed and has_unit else ("closed" if closed else "not closed", has_unit))
    return rep


def anti_involution_audit(A: SuperAlgebra, tau=None, pairs=None) -> bool:
    """tau even, tau^2 = id, tau(ab) = (-1)^{|a||b|} tau(b) tau(a) on basis pairs."""
    tau = A.tau if tau is None else tau
    if tau is None:
        raise ValueError("no anti-involution")

    def t(v):
        out: dict = {}
        for k, x in v.items():
            vec_add(out, tau[k], x)
        return out

    n = A.dim
    for b in range(n):
        if any(A.parity[k] != A.parity[b] for k in tau[b]):
            return False
        if t(tau[b]) != {b: 1}:
            return False
    it = pairs if pairs is not None else ((a, b) for a in range(n) for b in range(n))
    for a, b in it:
        lhs = t(A.mul(a, b))
        rhs = A.mul_vec(tau[b], tau[a])
        if A.parity[a] and A.parity[b]:
            rhs = vec_scale(rhs, -1)
        if lhs != rhs:
            return False
    return True


# ------------------------------------------------------------ zigzag modules

def zigzag_modules(Z: SuperAlgebra, i: int) -> dict:
    """The simple L(i), standard Delta(i) and costandard nabla(i) for zigzag Z."""
    ell = Z.ell
    if not 0 <= i <= ell:
        raise ValueError(f"vertex {i} out of range 0..{ell}")
    ei = Z.index(f"e{i}")
    L = CalModule(Z, [CalBasisElement(f"v{i}", 0, "a")], {(ei, 0): {0: 1}}, "left", [i], f"L({i})")
    if i == 0:
        return {"L": L, "Delta": L, "nabla": L}
    sep = _zz_names(ell)
    em = Z.index(f"e{i-1}")
    a_down = Z.index(f"a{i-1}{sep}{i}")   # a_{i-1,i}
    a_up = Z.index(f"a{i}{sep}{i-1}")     # a_{i,i-1}
    dbasis = [CalBasisElement(f"v{i}", 0, "a"), CalBasisElement(f"w{i}", 1, "o")]
    D = CalModule(Z, dbasis, {(ei, 0): {0: 1}, (em, 1): {1: 1}, (a_down, 0): {1: 1}},
                  "left", [i, i - 1], f"Delta({i})")
    nbasis = [CalBasisElement(f"v{i}*", 0, "a"), CalBasisElement(f"w{i}*", 1, "o")]
    N = CalModule(Z, nbasis, {(ei, 0): {0: 1}, (em, 1): {1: 1}, (a_up, 1): {0: -1}},
                  "left", [i, i - 1], f"nabla({i})")
    return {"L": L, "Delta": D, "nabla": N}


def hom_dims(M: CalModule, N: CalModule, field: Field = QQ) -> tuple[int, int]:
    """(even, odd) dimensions of Hom_A(M, N) for left modules."""
    A = M.algebra
    ops = []
    for a in range(A.dim):
        xs = M.operator(a, field).columns()
        xd = N.operator(a, field).columns()
        ops.append((xs, xd, A.parity[a]))
    dims = []
    for par in (0, 1):
        _, ker = hom_space(ops, M.parity, N.parity, par, field)
        dims.append(len(ker))
    return dims[0], dims[1]


# ------------------------------------------------------------------ JSON

def _lab(x):
    if isinstance(x, tuple):
        return [_lab(y) for y in x]
    return x


def _unlab(x):
    if isinstance(x, list):
        return tuple(_unlab(y) for y in x)
    return x


def algebra_to_json(A: SuperAlgebra) -> str:
    d = {
        "schema": 1,
        "kind": "SuperAlgebra",
        "name": A.name,
        "basis": [{"name": b.name, "parity": b.parity, "cal": b.cal} for b in A.basis],
        "structure": [[i, j, k, str(c)] for i, j, k, c in A.structure_constants()],
        "unit": [[k, str(c)] for k, c in sorted(A.unit.items())],
    }
    if A.tau is not None:
        d["tau"] = [[i, k, str(c)] for i, t in enumerate(A.tau) for k, c in sorted(t.items())]
    if A.left_idem is not None:
        d["left_idem"] = [_lab(x) for x in A.left_idem]
        d["right_idem"] = [_lab(x) for x in A.right_idem]
    H = A.heredity
    if H is not None:
        enc = lambda vs: [[[k, str(c)] for k, c in sorted(v.items())] for v in vs]
        d["heredity"] = {
            "labels": [_lab(i) for i in H.labels],
            "X": [[_lab(i), enc(H.X[i])] for i in H.labels],
            "Y": [[_lab(i), enc(H.Y[i])] for i in H.labels],
            "e": [[_lab(i), enc([H.e[i]])[0]] for i in H.labels],
        }
    return json.dumps(d, sort_keys=True)


def algebra_from_json(s: str) -> SuperAlgebra:
    d = json.loads(s)
    if d.get("schema") != 1 or d.get("kind") != "SuperAlgebra":
        raise ValueError("not a schema-1 SuperAlgebra dump")
    basis = [CalBasisElement(b["name"], b["parity"], b["cal"]) for b in d["basis"]]
    table: dict = {}
    for i, j, k, c in d["structure"]:
        table.setdefault((i, j), {})[k] = int(c)
    unit = {k: int(c) for k, c in d["unit"]}
    tau = None
    if "tau" in d:
        tau = [{} for _ in basis]
        for i, k, c in d["tau"]:
            tau[i][k] = int(c)
    li = ri = None
    if "left_idem" in d:
        li = [_unlab(x) for x in d["left_idem"]]
        ri = [_unlab(x) for x in d["right_idem"]]
    her = None
    if "heredity" in d:
        h = d["heredity"]
        dec = lambda vs: [{k: int(c) for k, c in v} for v in vs]
        labels = [_unlab(i) for i in h["labels"]]
        her = HeredityData(labels,
                           {_unlab(i): dec(v) for i, v in h["X"]},
                           {_unlab(i): dec(v) for i, v in h["Y"]},
                           {_unlab(i): dec([v])[0] for i, v in h["e"]})
    return SuperAlgebra(basis, table, unit, tau, her, li, ri, name=d["name"])


def module_to_json(M: CalModule) -> str:
    acts = []
    for a in range(M.algebra.dim):
        for v in range(M.dim):
            for w, c in sorted(M.act(a, v).items()):
                acts.append([a, v, w, str(c)])
    d = {
        "schema": 1,
        "kind": "CalModule",
        "name": M.name,
        "side": M.side,
        "algebra": json.loads(algebra_to_json(M.algebra)),
        "basis": [{"name": b.name, "parity": b.parity, "cal": b.cal} for b in M.basis],
        "action": acts,
    }
    if M.idem is not None:
        d["idem"] = [_lab(x) for x in M.idem]
    return json.dumps(d, sort_keys=True)


def module_from_json(s: str) -> CalModule:
    d = json.loads(s)
    if d.get("schema") != 1 or d.get("kind") != "CalModule":
        raise ValueError("not a schema-1 CalModule dump")
    A = algebra_from_json(json.dumps(d["algebra"]))
    basis = [CalBasisElement(b["name"], b["parity"], b["cal"]) for b in d["basis"]]
    act: dict = {}
    for a, v, w, c in d["action"]:
        act.setdefault((a, v), {})[w] = int(c)
    idem = [_unlab(x) for x in d["idem"]] if "idem" in d else None
    return CalModule(A, basis, act, d["side"], idem, d["name"], calibrated=False)
