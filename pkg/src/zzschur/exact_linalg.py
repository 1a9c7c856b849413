"""Exact scalars and sparse linear algebra over Q and F_p.

Vectors are plain dicts ``{index: value}`` with no stored zeros.  Over Q the
values are ints or Fractions, over F_p they are ints in ``[0, p)``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence


class Field:
    """Q (``p == 0``) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p < 0 or (p and not _is_prime(p)):
            raise ValueError(f"F{p}: {p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"F{self.p}"

    def __repr__(self):
        return f"Field({self.name})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __call__(self, x) -> int | Fraction:
        """Base change of an integer or rational into the field."""
        p = self.p
        if p == 0:
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            return int(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in F{p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def zero(self):
        return 0

    def one(self):
        return 1

    def inv(self, x):
        if self.p:
            return pow(x, -1, self.p)
        return Fraction(1) / x

    def neg_one(self):
        return self.p - 1 if self.p else -1

    def sign(self, e: int):
        """(-1)^e as a field element."""
        return 1 if e % 2 == 0 else self.neg_one()

    def vec(self, v: dict) -> dict:
        """Base change of a sparse integer/rational vector, dropping zeros."""
        out = {}
        for k, x in v.items():
            y = self(x)
            if y:
                out[k] = y
        return out


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


QQ = Field(0)


def field_from(spec: str | int | Field) -> Field:
    """Parse ``"Q"`` or ``"F<p>"`` (also accepts a Field or an int p)."""
    if isinstance(spec, Field):
        return spec
    if isinstance(spec, int):
        return Field(spec)
    s = spec.strip()
    if s in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"F_?(\d+)", s)
    if not m:
        raise ValueError(f"unknown field descriptor {spec!r}")
    return Field(int(m.group(1)))


def _bits(x) -> int:
    if isinstance(x, Fraction):
        return abs(x.numerator).bit_length() + x.denominator.bit_length()
    return abs(x).bit_length()


class ExactMatrix:
    """Sparse matrix stored as ``rows[r] = {c: value}``."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows: int, ncols: int, field: Field = QQ, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self.rows: dict[int, dict[int, object]] = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (r, c), x in items:
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise IndexError((r, c))
                y = field(x)
                if y:
                    row = self.rows.setdefault(r, {})
                    y = field(row.get(c, 0) + y)
                    if y:
                        row[c] = y
                    else:
                        del row[c]
                        if not row:
                            del self.rows[r]

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], field: Field = QQ) -> "ExactMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        ents = {(r, c): x for r, row in enumerate(data) for c, x in enumerate(row) if x}
        return cls(nrows, ncols, field, ents)

    @classmethod
    def from_columns(cls, cols: dict, nrows: int, ncols: int, field: Field = QQ) -> "ExactMatrix":
        """Build from ``{col: {row: value}}``."""
        ents = {(r, c): x for c, col in cols.items() for r, x in col.items()}
        return cls(nrows, ncols, field, ents)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "ExactMatrix":
        return cls(n, n, field, {(i, i): 1 for i in range(n)})

    def get(self, r: int, c: int):
        return self.rows.get(r, {}).get(c, 0)

    def columns(self) -> dict[int, dict[int, object]]:
        cols: dict[int, dict[int, object]] = {}
        for r, row in self.rows.items():
            for c, x in row.items():
                cols.setdefault(c, {})[r] = x
        return cols

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, row in self.rows.items():
            for c, x in row.items():
                out[r][c] = x
        return out

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows or self.field != other.field:
            raise ValueError("shape or field mismatch")
        out = ExactMatrix(self.nrows, other.ncols, self.field)
        f = self.field
        for r, row in self.rows.items():
            acc: dict = {}
            for k, x in row.items():
                orow = other.rows.get(k)
                if orow:
                    for c, y in orow.items():
                        acc[c] = acc.get(c, 0) + x * y
            acc = f.vec(acc)
            if acc:
                out.rows[r] = acc
        return out

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, {self.field.name}, nnz={self.nnz()})"


# ---------------------------------------------------------------- elimination

def _axpy(row: dict, scale, other: dict, p: int) -> None:
    """row -= scale * other, in place."""
    if p:
        for k, x in other.items():
            y = (row.get(k, 0) - scale * x) % p
            if y:
                row[k] = y
            else:
                row.pop(k, None)
    else:
        for k, x in other.items():
            y = row.get(k, 0) - scale * x
            if y:
                row[k] = y
            else:
                row.pop(k, None)


class Echelon:
    """Incremental row echelon form.

    Every stored row has its pivot at its smallest column with pivot entry 1,
    so reducing a new row in increasing column order terminates.
    """

    def __init__(self, field: Field = QQ):
        self.field = field
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        p = self.field.p
        piv = self.pivots
        done: set = set()
        while True:
            cand = [c for c in row if c in piv and c not in done]
            if not cand:
                return row
            c = min(cand)
            x = row.get(c)
            done.add(c)
            if x:
                _axpy(row, x, piv[c], p)

    def add(self, row: dict) -> bool:
        """Insert a row; True iff the rank grew."""
        r = self.reduce(row)
        if not r:
            return False
        p = self.field.p
        # pivot at the smallest column; re-reduce because the new leading
        # entry may sit left of pivots that were skipped
        while True:
            c = min(r)
            if c not in self.pivots:
                break
            _axpy(r, r[c], self.pivots[c], p)
            if not r:
                return False
        inv = self.field.inv(r[c])
        if inv != 1:
            if p:
                r = {k: x * inv % p for k, x in r.items()}
            else:
                r = {k: x * inv for k, x in r.items()}
        self.pivots[c] = r
        return True

    def rref(self) -> dict[int, dict]:
        """Fully reduced rows keyed by pivot column."""
        p = self.field.p
        done: dict[int, dict] = {}
        for c in sorted(self.pivots, reverse=True):
            r = dict(self.pivots[c])
            for k in [k for k in r if k != c and k in done]:
                x = r.get(k)
                if x:
                    _axpy(r, x, done[k], p)
            done[c] = r
        return done

    def kernel(self, ncols: int) -> list[dict]:
        """Basis of the right null space of the stored rows."""
        red = self.rref()
        p = self.field.p
        free = [c for c in range(ncols) if c not in red]
        col_hits: dict[int, list] = {}
        for pc, r in red.items():
            for k, x in r.items():
                if k != pc:
                    col_hits.setdefault(k, []).append((pc, x))
        out = []
        for f in free:
            v = {f: 1}
            for pc, x in col_hits.get(f, ()):
                v[pc] = (-x) % p if p else -x
            out.append(v)
        return out


def _eliminate(m: ExactMatrix) -> dict[int, dict]:
    """Gaussian elimination choosing the simplest available pivot per column.

    Returns reduced rows keyed by pivot column (row echelon, not reduced).
    """
    f = m.field
    p = f.p
    rows = [dict(r) for r in m.rows.values() if r]
    by_col: dict[int, dict] = {}
    active = rows
    for c in range(m.ncols):
        hits = [r for r in active if c in r]
        if not hits:
            continue
        best = min(hits, key=lambda r: (_bits(r[c]), len(r)))
        inv = f.inv(best[c])
        if p:
            piv = {k: x * inv % p for k, x in best.items()}
        else:
            piv = {k: x * inv for k, x in best.items()}
        rest = []
        for r in active:
            if r is best:
                continue
            x = r.get(c)
            if x:
                _axpy(r, x, piv, p)
            if r:
                rest.append(r)
        by_col[c] = piv
        active = rest
        if not active:
            break
    return by_col


def rank(m: ExactMatrix) -> int:
    return len(_eliminate(m))


def kernel_basis(m: ExactMatrix) -> list[dict]:
    """Right null space as sparse vectors ``{col: value}``."""
    ech = Echelon(m.field)
    ech.pivots = _eliminate(m)
    return ech.kernel(m.ncols)


def solve(m: ExactMatrix, b: dict) -> dict | None:
    """One solution x of m x = b, or None if inconsistent."""
    aug = ExactMatrix(m.nrows, m.ncols + 1, m.field)
    for r, row in m.rows.items():
        aug.rows[r] = dict(row)
    for r, x in m.field.vec(b).items():
        aug.rows.setdefault(r, {})[m.ncols] = x
    ech = Echelon(m.field)
    ech.pivots = _eliminate(aug)
    if m.ncols in ech.pivots:
        return None
    red = ech.rref()
    return {c: r[m.ncols] for c, r in red.items() if m.ncols in r}


def det(m: ExactMatrix):
    """Exact determinant of a square matrix (dense Bareiss-free elimination)."""
    if m.nrows != m.ncols:
        raise ValueError("square matrix required")
    f = m.field
    p = f.p
    a = [dict(m.rows.get(r, {})) for r in range(m.nrows)]
    d = 1
    for c in range(m.ncols):
        piv = None
        for r in range(c, m.nrows):
            if a[r].get(c):
                if piv is None or _bits(a[r][c]) < _bits(a[piv][c]):
                    piv = r
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        x = a[c][c]
        d = d * x
        inv = f.inv(x)
        for r in range(c + 1, m.nrows):
            y = a[r].get(c)
            if y:
                _axpy(a[r], y * inv, a[c], p)
    return f(d) if p else d


# ---------------------------------------------------------------- commutants

def _constraint_rows(ops_src, ops_dst, sign, by_src, by_dst_col, p):
    """Rows of F X_src - sign X_dst F = 0, keyed by the output position (u, v)."""
    eqs: dict = {}
    # F X_src: entry (u, v) gets X_src[v', v] F[u, v']
    for v, col in ops_src.items():
        for vp, x in col.items():
            for u, idx in by_src.get(vp, ()):
                key = (u, v)
                row = eqs.get(key)
                if row is None:
                    row = eqs[key] = {}
                row[idx] = row.get(idx, 0) + x
    # X_dst F: entry (u, v) gets X_dst[u, w] F[w, v]
    for w, col in ops_dst.items():
        for v, idx in by_dst_col.get(w, ()):
            for u, x in col.items():
                key = (u, v)
                row = eqs.get(key)
                if row is None:
                    row = eqs[key] = {}
                row[idx] = row.get(idx, 0) - sign * x
    out = []
    for row in eqs.values():
        if p:
            row = {k: x % p for k, x in row.items() if x % p}
        else:
            row = {k: x for k, x in row.items() if x}
        if row:
            out.append(row)
    return out


def _dot(row: dict, vec: dict, p: int):
    if len(row) > len(vec):
        row, vec = vec, row
    s = 0
    for k, x in row.items():
        y = vec.get(k)
        if y:
            s += x * y
    return s % p if p else s


def hom_space(operators, src_parities: Sequence[int], dst_parities: Sequence[int],
              parity: int, field: Field = QQ, allowed=None, check_threshold: int = 8):
    """Homogeneous supermodule maps F: src -> dst of the given parity.

    ``operators`` yields triples ``(X_src, X_dst, op_parity)`` where each X is a
    column dict ``{col: {row: value}}`` already reduced into ``field``.  The
    condition is ``F X_src = (-1)^(parity*op_parity) X_dst F``.  ``allowed``
    optionally restricts the unknown positions to pairs ``(u, v)``.

    Returns ``(unknowns, kernel)`` where kernel vectors are dicts over unknown
    indices.  Once the solution space is small, each further operator is first
    tested against the current kernel and only contributes rows if it cuts it.
    """
    p = field.p
    if allowed is None:
        allowed = [(u, v) for v in range(len(src_parities)) for u in range(len(dst_parities))
                   if (dst_parities[u] - src_parities[v] - parity) % 2 == 0]
    else:
        allowed = [(u, v) for (u, v) in allowed
                   if (dst_parities[u] - src_parities[v] - parity) % 2 == 0]
    unknowns = list(allowed)
    by_src: dict = {}      # v' -> [(u, idx)]
    by_dst_col: dict = {}  # w -> [(v, idx)]
    for idx, (u, v) in enumerate(unknowns):
        by_src.setdefault(v, []).append((u, idx))
        by_dst_col.setdefault(u, []).append((v, idx))
    n = len(unknowns)
    ech = Echelon(field)
    kernel: list[dict] | None = None
    for xs, xd, px in operators:
        if n == 0 or ech.rank == n:
            break  # nothing left to cut
        sign = -1 if (parity * px) % 2 else 1
        rows = _constraint_rows(xs, xd, sign, by_src, by_dst_col, p)
        if not rows:
            continue
        if kernel is not None and len(kernel) <= check_threshold:
            if all(_dot(r, k, p) == 0 for r in rows for k in kernel):
                continue
        grew = False
        for r in rows:
            if ech.add(r):
                grew = True
        if grew:
            kernel = None
        if kernel is None and n - ech.rank <= check_threshold:
            kernel = ech.kernel(n)
    if kernel is None:
        kernel = ech.kernel(n)
    return unknowns, kernel


def _op_columns(m: ExactMatrix) -> dict:
    return m.columns()


def super_commutant(operators, module_parities: Sequence[int], field: Field | None = None,
                    blocks: Iterable[Sequence[int]] | None = None):
    """Even and odd endomorphisms commuting in the signed sense with operators.

    ``operators`` is a list of ``(ExactMatrix, parity)``.  Returns
    ``(dim_even, dim_odd, {0: basis, 1: basis})`` with basis elements given as
    ExactMatrix.  With ``blocks`` the unknowns are restricted to maps that
    preserve the given partition of the basis.
    """
    npar = len(module_parities)
    ops = list(operators)
    if field is None:
        field = ops[0][0].field if ops else QQ
    for m, _ in ops:
        if m.nrows != npar or m.ncols != npar:
            raise ValueError("operator size does not match module")
    allowed = None
    if blocks is not None:
        allowed = [(u, v) for b in blocks for u in b for v in b]
    cols = [(m.columns(), px) for m, px in ops]
    result = {}
    for parity in (0, 1):
        unknowns, ker = hom_space(((c, c, px) for c, px in cols), module_parities,
                                  module_parities, parity, field, allowed)
        mats = []
        for k in ker:
            mats.append(ExactMatrix(npar, npar, field,
                                    {unknowns[i]: x for i, x in k.items()}))
        result[parity] = mats
    # sanity: every solution satisfies the signed commutation
    for parity, mats in result.items():
        for f in mats:
            for m, px in ops:
                s = field.sign(parity * px)
                lhs = f @ m
                rhs = m @ f
                rhs = ExactMatrix(npar, npar, field,
                                  {(r, c): s * x for r, row in rhs.rows.items() for c, x in row.items()})
                assert lhs == rhs, "commutant solution fails a constraint"
    return len(result[0]), len(result[1]), result
