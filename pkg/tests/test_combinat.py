
import pytest
from hypothesis import given, strategies as st

from oracles import brute_kostka_table, lr_by_expansion
from zzschur import combinat as C
from zzschur.exact_linalg import ExactMatrix, rank
from zzschur.superalg import zigzag


def alph(n, ell):
    return C.zigzag_alphabet(zigzag(ell), n)


def test_weight_counts():
    assert len(C.dominant_weights(2, 2, 1)) == 5
    assert len(C.all_weights(2, 2, 1)) == 10
    assert len(C.dominant_weights(1, 1, 1)) == 2
    for w in C.all_weights(3, 3, 2):
        assert sum(map(sum, w)) == 3


def test_partitions_and_compositions():
    assert list(C.partitions(3, 2)) == [(3, 0), (2, 1)]
    assert len(list(C.compositions(2, 3))) == 6


def test_order_examples():
    ws = C.dominant_weights(2, 2, 1)
    bottom = C.iota(0, C.one_d(2, 2), 2, 1)
    for a in ws:
        assert C.leq_I(a, a)
        assert C.leq_I(bottom, a)
        for b in ws:
            if a != b:
                assert not (C.leq_I(a, b) and C.leq_I(b, a))


def test_dominance():
    # dominates(a, b): a lies below b
    assert C.dominates((1, 1), (2, 0))
    assert not C.dominates((2, 0), (1, 1))
    assert C.size_leq((1, 0), (0, 1)) and not C.size_leq((0, 1), (1, 0))


def test_involutions():
    lam = ((2, 1, 0), (1, 0, 0))
    assert C.conjugate(lam) == ((2, 1, 0), (1, 0, 0))
    assert C.conjugate(((3, 0, 0), (0, 0, 0))) == ((1, 1, 1), (0, 0, 0))
    assert C.reverse(lam) == ((1, 0, 0), (2, 1, 0))


@given(st.integers(1, 3), st.integers(0, 3), st.integers(1, 2), st.data())
def test_involution_properties(n, d, ell, data):
    lam = data.draw(st.sampled_from(C.dominant_weights(n, d, ell)))
    mu = data.draw(st.sampled_from(C.all_weights(n, d, ell)))
    assert C.reverse(C.reverse(mu)) == mu
    if all(len([x for x in c if x]) <= n and (max(c) if c else 0) <= n for c in lam):
        assert C.conjugate(C.conjugate(lam)) == lam
    assert C.wsize(C.reverse(mu)) == tuple(reversed(C.wsize(mu)))


def test_lr_examples():
    assert C.lr_coeff((1,), (1,), (2,)) == 1
    assert C.lr_coeff((1,), (1,), (1, 1)) == 1
    assert C.lr_coeff((1,), (1, 1), (2, 1)) == 1
    assert C.lr_coeff((2, 1), (2, 1), (3, 2, 1)) == 2
    assert C.lr_coeff((1,), (1,), (3,)) == 0


small_parts = st.lists(st.integers(1, 3), min_size=0, max_size=3).map(lambda xs: tuple(sorted(xs, reverse=True)))


@given(small_parts, small_parts)
def test_lr_matches_schur_expansion(mu, nu):
    if sum(mu) + sum(nu) > 6:
        return
    want = lr_by_expansion(mu, nu)
    size = sum(mu) + sum(nu)
    for lam in C.partitions(size, size):
        key = tuple(x for x in lam if x)
        assert C.lr_coeff(mu, nu, lam) == want.get(key, 0)


def test_kostka_examples():
    A = alph(2, 1)
    lam = C.iota(1, (1, 0), 2, 1)
    assert len(C.colored_tableaux(lam, A)) == 4
    assert C.kostka(lam, C.iota(1, (1, 0), 2, 1), A) == 1
    assert C.kostka(lam, C.iota(0, (1, 0), 2, 1), A) == 1
    for d in (1, 2, 3):
        A3 = alph(3, 1)
        lam = C.iota(0, C.one_d(d, 3), 3, 1)
        assert C.kostka(lam, lam, A3) == 1
        ch = C.delta_character(lam, A3)
        assert set(ch) == {C.iota(0, w, 3, 1) for w in C.compositions(d, 3) if max(w) <= 1}
        assert set(ch.values()) == {1}


@pytest.mark.parametrize("n,d,ell", [(2, 2, 1), (3, 2, 1), (2, 2, 2), (3, 3, 1), (2, 3, 1)])
def test_kostka_matches_brute_force(n, d, ell):
    A = alph(n, ell)
    for lam in C.dominant_weights(n, d, ell):
        assert C.tableau_weights(lam, A) == brute_kostka_table(lam, A)
        assert sum(C.kostka(lam, mu, A) for mu in C.all_weights(n, d, ell)) == len(C.colored_tableaux(lam, A))


@given(st.sampled_from([(2, 2, 1), (3, 2, 1), (3, 3, 1), (2, 2, 2)]), st.data())
def test_kostka_symmetric_in_rows(params, data):
    n, d, ell = params
    A = alph(n, ell)
    lam = data.draw(st.sampled_from(C.dominant_weights(n, d, ell)))
    mu = data.draw(st.sampled_from(C.all_weights(n, d, ell)))
    perm = data.draw(st.permutations(range(n)))
    pmu = tuple(tuple(c[p] for p in perm) for c in mu)
    assert C.kostka(lam, mu, A) == C.kostka(lam, pmu, A)


def test_zigzag_alphabet_left_vertices():
    A = alph(2, 2)
    assert A.colors[0] == [("e0", 0, 0)]
    assert A.colors[1] == [("e1", 0, 1), ("a01", 1, 0)]
    assert A.colors[2] == [("e2", 0, 2), ("a12", 1, 1)]


def test_delta_character_rejects_large_degree():
    with pytest.raises(ValueError):
        C.delta_character(C.iota(0, (2, 1), 2, 1), alph(2, 1))


def _char_matrix(n, d, ell):
    A = alph(n, ell)
    lams = C.dominant_weights(n, d, ell)
    ws = sorted({w for l in lams for w in C.tableau_weights(l, A)})
    pos = {w: k for k, w in enumerate(ws)}
    ents = {(pos[w], j): x for j, l in enumerate(lams) for w, x in C.tableau_weights(l, A).items()}
    return ExactMatrix(len(ws), len(lams), entries=ents), len(lams)


@pytest.mark.parametrize("n,d,ell", [(n, d, ell) for n in (1, 2, 3) for d in range(0, n + 1) for ell in (1, 2)])
def test_characters_independent(n, d, ell):
    m, k = _char_matrix(n, d, ell)
    assert rank(m) == k


@pytest.mark.parametrize("n,d,ell", [(2, 2, 1), (3, 3, 1), (3, 2, 2)])
def test_delta_factorises_over_colors(n, d, ell):
    A = alph(n, ell)
    for lam in C.dominant_weights(n, d, ell):
        prod = {tuple((0,) * n for _ in range(ell + 1)): 1}
        for i in range(ell + 1):
            prod = C.char_product(prod, C.delta_character(C.iota(i, lam[i], n, ell), A))
        assert prod == C.delta_character(lam, A)


@pytest.mark.parametrize("n,ell", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_lr_expansion_of_products(n, ell):
    A = alph(n, ell)
    for d in range(1, n):
        for e in range(1, n - d + 1):
            for lam in C.dominant_weights(n, d, ell):
                for mu in C.dominant_weights(n, e, ell):
                    lhs = C.char_product(C.delta_character(lam, A), C.delta_character(mu, A))
                    rhs = {}
                    for nu in C.dominant_weights(n, d + e, ell):
                        c = C.multi_lr(lam, mu, nu)
                        if c:
                            C.char_add(rhs, C.delta_character(nu, A), c)
                    assert lhs == rhs


def test_xi_sets():
    xs = C.xi_set(2, 1, 2, 1)
    assert len(xs) == 3
    assert xs == [C.beta(1, 2, s, 2, 1) for s in range(3)]
    assert C.xi_set(3, 0, 3, 2) == [C.iota(0, (1, 1, 1), 3, 2)]
    with pytest.raises(ValueError):
        C.beta(0, 2, 1, 2, 1)


def test_omega_matches_lr_exhaustively():
    n, d, ell = 3, 3, 1
    for r in range(d + 1):
        for lam in C.dominant_weights(n, d, ell):
            for i in range(ell + 1):
                for s in ([0] if i == 0 else range(r + 1)):
                    b = C.beta(i, r, s, n, ell)
                    om = set(C.omega_set(lam, i, r, s))
                    for a in C.dominant_weights(n, d - r, ell):
                        assert C.multi_lr(a, b, lam) == (1 if a in om else 0)


@pytest.mark.parametrize("n,d,ell,dim", [(2, 1, 1, 20), (2, 2, 1, 202), (3, 2, 1, 1017),
                                         (3, 3, 1, 15405), (2, 2, 2, 650)])
def test_sum_of_squares_identity(n, d, ell, dim):
    A = alph(n, ell)
    total = sum(sum(C.kostka(l, m, A) for m in C.all_weights(n, d, ell)) ** 2
                for l in C.dominant_weights(n, d, ell))
    assert total == dim
