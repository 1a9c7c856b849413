import json

import pytest

from zzschur.exact_linalg import QQ, ExactMatrix
from zzschur.superalg import anti_involution_audit, heredity_audit
from zzschur.tilting_core import (form_audit, hom_orthogonality, pit_form, pit_submodule, primed_generators,
                                  right_summands, ringel_dual_zigzag, sop_product, tilting_audit,
                                  tilting_bimodule, tilting_to_json)


def test_basis_of_tilting_module_l1():
    T = tilting_bimodule(1)
    assert [b.name for b in T.basis] == ["v0", "T1:e0", "T1:a10", "T1:c0"]
    assert T.parity == [1, 0, 1, 0]
    assert T.summand == [0, 1, 1, 1]


@pytest.mark.parametrize("ell,dim", [(1, 4), (2, 8), (3, 12)])
def test_tilting_dimension(ell, dim):
    assert tilting_bimodule(ell).dim == dim


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_primed_algebra_is_zigzag(ell):
    Zp, T, rep = ringel_dual_zigzag(ell)
    assert rep.ok, rep.mismatches
    assert Zp.dim == 4 * ell + 1
    assert sum(rep.dim_end) == 4 * ell + 1
    assert rep.dim_end == (2 * ell + 1, 2 * ell)
    Z = T.Z
    for i in range(Z.dim):
        for j in range(Z.dim):
            assert Zp.mul(i, j) == Z.mul(i, j)
    assert heredity_audit(Zp).ok
    assert anti_involution_audit(Zp)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_literal_embedding_breaks_one_relation(ell):
    _, _, rep = ringel_dual_zigzag(ell, literal=True)
    assert not rep.ok
    assert len(rep.mismatches) == 1
    x, y, want, got = rep.mismatches[0]
    assert (x, y) == (f"a{ell-1}{ell}", f"a{ell}{ell-1}")
    assert got == {k: -v for k, v in want.items()}


def test_primed_idempotents():
    Z, (basis, *_), gens = primed_generators(2)
    dim = len(basis)
    es = [gens[f"e{i}'"] for i in range(3)]
    total = ExactMatrix(dim, dim, QQ)
    for i, (a, _) in enumerate(es):
        for j, (b, _) in enumerate(es):
            prod = a @ b
            assert prod == (a if i == j else ExactMatrix(dim, dim, QQ))
        total = ExactMatrix(dim, dim, QQ, {**{(r, c): x for r, row in total.rows.items() for c, x in row.items()},
                                            **{(r, c): x for r, row in a.rows.items() for c, x in row.items()}})
    assert total == ExactMatrix.identity(dim)


@pytest.mark.parametrize("ell", [1, 2])
def test_end_vertex_cycle_vanishes(ell):
    _, _, gens = primed_generators(ell)
    x = gens[f"a{ell}{ell-1}'"]
    y = gens[f"a{ell-1}{ell}'"]
    prod, par = sop_product(x, y)
    assert par == 0 and prod.nnz() == 0


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_tilting_audit(ell):
    rep = tilting_audit(tilting_bimodule(ell))
    assert rep.ok, rep.failures()


def test_right_summands_l1():
    assert right_summands(tilting_bimodule(1)) == {0: [2], 1: [0, 1, 3]}


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_hom_orthogonality(ell):
    dims = hom_orthogonality(ell)
    assert dims == {(i, j): int(i == j) for i in range(ell + 1) for j in range(ell + 1)}


def test_form_on_first_summand():
    Z, V, g = pit_form(1, 1)
    k = {n: p for p, n in enumerate(V.names)}
    assert g == {(k["e0"], k["c0"]): 1, (k["c0"], k["e0"]): -1, (k["a10"], k["a10"]): 1}


@pytest.mark.parametrize("ell,i", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)])
def test_form_audit(ell, i):
    rep = form_audit(*pit_form(ell, i))
    assert rep.ok, rep.failures()


def test_form_audit_detects_wrong_sign():
    Z, V, g = pit_form(2, 2)
    k = {n: p for p, n in enumerate(V.names)}
    g = dict(g)
    g[(k["a21"], k["a21"])] = -1
    assert not form_audit(Z, V, g).checks["tau-contravariant"][0]


def test_pit_submodule_bookkeeping():
    T = tilting_bimodule(2)
    assert pit_submodule(T, 0).dim == 1
    assert pit_submodule(T, 1).dim == 3
    assert pit_submodule(T, 2).dim == 4
    with pytest.raises(ValueError):
        pit_form(2, 0)


def test_json_dump():
    d = json.loads(tilting_to_json(tilting_bimodule(1)))
    assert d["schema"] == 1 and d["kind"] == "TiltingBimodule"
    assert len(d["basis"]) == 4
    assert d["right_summands"] == {"0": [2], "1": [0, 1, 3]}
