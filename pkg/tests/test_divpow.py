import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from oracles import (is_symmetric, oracle_eta_product, tensor_form as oracle_form, to_y_basis, y_tensor)
from zzschur.divpow import (divided_power_algebra, divided_power_module, expand_y,
                            factorial_c, gamma_action, gamma_mult, lifted_gram, place_permute,
                            seq_orbits, sign_angle, star, star_disjoint, star_vec, tau_power,
                            tau_power_index)
from zzschur.schur import col_module
from zzschur.superalg import CalBasisElement, CalModule, SuperAlgebra, matrix_superalgebra, zigzag
from zzschur.tilting_core import pit_form


def toy_dual_numbers():
    basis = [CalBasisElement("e", 0, "a"), CalBasisElement("c", 0, "c")]
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return SuperAlgebra(basis, table, {0: 1}, name="D")


def test_seq_orbits_examples():
    assert seq_orbits([0], 3) == [(0, 0, 0)]
    assert len(seq_orbits([0, 0, 0, 1, 1], 2)) == 13
    assert seq_orbits([1, 1], 3) == []
    assert seq_orbits([0, 1], 0) == [()]


def test_sign_angle_examples():
    par = [1, 1, 0]        # o1 = 0, o2 = 1, e = 2
    assert sign_angle((0, 1), par) == 0
    assert sign_angle((1, 0), par) == 1
    assert sign_angle((1, 2, 0), par) == 1


def test_expand_y_examples():
    par, cal = [0, 0, 1, 1], ["a", "c", "o", "o"]
    assert expand_y((0,), par, cal) == {(0,): 1}
    assert expand_y((1, 1), par, cal) == {(1, 1): 2}
    assert expand_y((2, 3), par, cal) == {(2, 3): 1, (3, 2): -1}
    with pytest.raises(ValueError):
        expand_y((2, 2), par, cal)


def test_factorial_c():
    assert factorial_c((0, 0, 1, 1, 1), ["a", "c"]) == 6


def _algebra_matches_oracle(A, d):
    G = divided_power_algebra(A, d)
    for i, a in enumerate(G.indices):
        for j, c in enumerate(G.indices):
            got = {G.indices[k]: v for k, v in G.mul(i, j).items()}
            want = oracle_eta_product(a, c, A.mul, A.parity, A.cal, A.parity, A.cal)
            assert got == want, (a, c)
    return G


def test_gamma_two_zigzag_matches_oracle():
    Z = zigzag(1)
    G = _algebra_matches_oracle(Z, 2)
    g = Z.index
    a, b = (g("a01"), g("a10")), (g("e0"), g("e1"))
    assert gamma_mult(G, a, b) == oracle_eta_product(a, b, Z.mul, Z.parity, Z.cal, Z.parity, Z.cal)


def test_c_part_integrality_on_dual_numbers():
    D = toy_dual_numbers()
    G = _algebra_matches_oracle(D, 2)
    r = gamma_mult(G, (1, 1), (0, 0))
    assert r == {(1, 1): 1}
    # the x-basis coefficient is 1/2 of the y-basis one
    assert factorial_c((1, 1), D.cal) == 2


def test_unit():
    Z = zigzag(1)
    G = divided_power_algebra(Z, 2)
    for j in range(G.dim):
        assert G.mul_vec(G.unit, {j: 1}) == {j: 1}


def test_regular_module_agrees_with_product():
    Z = zigzag(1)
    G = divided_power_algebra(Z, 2)
    R = CalModule(Z, Z.basis, lambda a, v: Z.mul(a, v), "left", Z.left_idem, "reg", check=False)
    GM = divided_power_module(G, R)
    for i in range(G.dim):
        for j in range(GM.dim):
            assert GM.act(i, j) == G.mul(i, j)


def test_column_module_action_matches_oracle():
    Z = zigzag(1)
    M = matrix_superalgebra(Z, 2)
    G = divided_power_algebra(M, 2)
    # Z e_0 as a left module
    keep = [b for b in range(Z.dim) if Z.right_idem[b] == 0]
    where = {b: k for k, b in enumerate(keep)}
    V = CalModule(Z, [Z.basis[b] for b in keep],
                  lambda a, v: {where[w]: c for w, c in Z.mul(a, keep[v]).items()},
                  "left", [Z.left_idem[b] for b in keep], "Ze0")
    C = col_module(M, V)
    GM = divided_power_module(G, C)
    a01, e1 = Z.index("a01"), Z.index("e1")
    x = tuple(sorted((M.n * M.n * a01 + 0, M.n * M.n * e1 + 3)))   # xi^{a01}_{1,1}, xi^{e1}_{2,2}
    for v in GM.indices:
        want = oracle_eta_product(x, v, C.act, M.parity, M.cal, C.parity, C.cal)
        assert gamma_action(GM, x, v) == want
    for i, a in enumerate(G.indices[:40]):
        for j, v in enumerate(GM.indices):
            got = {GM.indices[k]: c for k, c in GM.act(i, j).items()}
            assert got == oracle_eta_product(a, v, C.act, M.parity, M.cal, C.parity, C.cal)


def test_right_module_matches_oracle():
    Z = zigzag(1)
    G = divided_power_algebra(Z, 2)
    R = CalModule(Z, Z.basis, lambda a, v: Z.mul(v, a), "right", Z.right_idem, "reg_r", check=False)
    GM = divided_power_module(G, R)
    for i, a in enumerate(G.indices):
        for j, v in enumerate(GM.indices):
            got = {GM.indices[k]: c for k, c in GM.act(i, j).items()}
            want = oracle_eta_product(a, v, R.act, Z.parity, Z.cal, R.parity, R.cal, right=True)
            assert got == want


def test_star_examples():
    par, cal = [0, 0, 1], ["a", "c", "o"]
    assert star((), (0, 1), par, cal) == {(0, 1): 1}
    assert star((0,), (0,), par, cal) == {(0, 0): 2}
    assert star((1,), (1,), par, cal) == {(1, 1): 1}
    assert star((2,), (2,), par, cal) == {}
    r = star((0,), (1, 2), par, cal)
    assert len(next(iter(r))) == 3
    assert star_disjoint((0, 1), (0,), 5) == (0, 1, 5)


def test_star_matches_tensor_symmetrisation():
    # y_{t1} * y_{t2} is the shuffle product of the tensors
    par, cal = [0, 0, 1, 1], ["a", "c", "o", "o"]
    for t1 in seq_orbits(par, 1) + seq_orbits(par, 2):
        for t2 in seq_orbits(par, 1):
            u, w = y_tensor(t1, par, cal), y_tensor(t2, par, cal)
            d1, d2 = len(t1), len(t2)
            shuffle = {}
            for pos in itertools.combinations(range(d1 + d2), d1):
                rest = [k for k in range(d1 + d2) if k not in pos]
                for a, x in u.items():
                    for b, y in w.items():
                        word = [None] * (d1 + d2)
                        for k, p in enumerate(pos):
                            word[p] = a[k]
                        for k, p in enumerate(rest):
                            word[p] = b[k]
                        # sign: odd letters of b passing odd letters of a
                        s = sum(1 for k, p in enumerate(pos) for kk, q in enumerate(rest)
                                if q < p and par[a[k]] and par[b[kk]])
                        key = tuple(word)
                        shuffle[key] = shuffle.get(key, 0) + (-1) ** s * x * y
            shuffle = {k: v for k, v in shuffle.items() if v}
            assert star(t1, t2, par, cal) == {k: int(v) for k, v in to_y_basis(shuffle, par, cal).items()}


def test_lifted_gram_degree_one():
    Z, V, g = pit_form(1, 1)
    idx, gram = lifted_gram(g, V.parity, V.cal, 1)
    assert {(idx[p][0], idx[q][0]): x for (p, q), x in gram.items()} == g


@pytest.mark.parametrize("ell,i,d", [(1, 1, 2), (2, 2, 2), (1, 1, 3), (2, 1, 3)])
def test_lifted_gram_matches_tensor_form(ell, i, d):
    Z, V, g = pit_form(ell, i)
    idx, gram = lifted_gram(g, V.parity, V.cal, d)
    for p, b in enumerate(idx):
        for q, c in enumerate(idx):
            val = oracle_form(y_tensor(b, V.parity, V.cal), y_tensor(c, V.parity, V.cal), g, V.parity)
            assert val == factorial(d) * gram.get((p, q), 0)


def _tau_oracle(Z, t):
    """tau applied entrywise to the tensor y_t, read back in the y basis."""
    tens = {}
    for u, x in y_tensor(t, Z.parity, Z.cal).items():
        img, s = [], 1
        for b in u:
            (k, sb), = Z.tau[b].items()
            img.append(k)
            s *= sb
        key = tuple(img)
        tens[key] = tens.get(key, 0) + s * x
    return {k: int(v) for k, v in to_y_basis({k: v for k, v in tens.items() if v}, Z.parity, Z.cal).items()}


def test_tau_power_examples():
    Z = zigzag(1)
    c0, a01, a10 = Z.index("c0"), Z.index("a01"), Z.index("a10")
    assert tau_power_index(Z, (c0, c0)) == {(c0, c0): 1}
    assert tau_power_index(Z, (a01, a10)) == {(a01, a10): -1}


@pytest.mark.parametrize("ell,d", [(1, 2), (1, 3), (2, 2)])
def test_tau_power_matches_entrywise_oracle(ell, d):
    Z = zigzag(ell)
    for t in seq_orbits(Z.parity, d):
        assert tau_power_index(Z, t) == _tau_oracle(Z, t)


def test_tau_power_is_involution():
    Z = zigzag(2)
    tp = tau_power(Z, 2)
    for t, img in tp.items():
        (u, s), = img.items()
        (w, s2), = tp[u].items()
        assert w == t and s * s2 == 1


@given(st.data())
def test_expand_y_is_symmetric(data):
    par = data.draw(st.lists(st.integers(0, 1), min_size=1, max_size=4))
    cal = ["o" if p else data.draw(st.sampled_from("ac")) for p in par]
    d = data.draw(st.integers(1, 4))
    idx = seq_orbits(par, d)
    if not idx:
        return
    t = data.draw(st.sampled_from(idx))
    y = expand_y(t, par, cal)
    assert is_symmetric(y, par)
    assert y == {k: int(v) for k, v in y_tensor(t, par, cal).items()}
    perm = data.draw(st.permutations(range(d)))
    assert place_permute(y, perm, par) == y


@given(st.data())
def test_star_commutes_up_to_sign(data):
    par = [0, 0, 1, 1]
    cal = ["a", "c", "o", "o"]
    t1 = data.draw(st.sampled_from(seq_orbits(par, 2)))
    t2 = data.draw(st.sampled_from(seq_orbits(par, 1)))
    t3 = data.draw(st.sampled_from(seq_orbits(par, 1)))
    p1 = sum(par[b] for b in t1) % 2
    p2 = sum(par[b] for b in t2) % 2
    a = star(t1, t2, par, cal)
    b = star(t2, t1, par, cal)
    assert a == {k: (-1) ** (p1 * p2) * v for k, v in b.items()}
    # associativity
    left = star_vec(star_vec({t1: 1}, {t2: 1}, par, cal), {t3: 1}, par, cal)
    right = star_vec({t1: 1}, star_vec({t2: 1}, {t3: 1}, par, cal), par, cal)
    assert left == right


@given(st.integers(1, 2), st.data())
def test_eta_product_integral_and_associative(ell, data):
    Z = zigzag(ell)
    G = divided_power_algebra(Z, 2)
    i, j, k = (data.draw(st.integers(0, G.dim - 1)) for _ in range(3))
    assert all(isinstance(v, int) for v in G.mul(i, j).values())
    assert G.mul_vec(G.mul(i, j), {k: 1}) == G.mul_vec({i: 1}, G.mul(j, k))
