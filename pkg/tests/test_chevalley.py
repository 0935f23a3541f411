import itertools
import random

import pytest

from onsagerkit.chevalley import (
    ChevElement,
    NotAPositiveRoot,
    NotFixedError,
    bracket_g,
    eta,
    invariant_form,
    omega,
    preset_table,
    sl_realization,
    sp_realization,
    sp_sign_reconciliation,
    sp_structure_table,
    verify_gl_presentation,
    y_basis,
)
from onsagerkit.exact_math import ExactMatrix, I
from onsagerkit.roots import height
from onsagerkit.serre_coeffs import coeff_row

TEST_PRESETS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"]


def _simple(rs, i):
    return tuple(1 if k == i else 0 for k in range(rs.rank))


def test_n_magnitudes():
    t = preset_table("A2")
    assert abs(t.n_value((1, 0), (0, 1))) == 1
    t2 = preset_table("C2")
    assert abs(t2.n_value((1, 0), (1, 1))) == 2


@pytest.mark.parametrize("name", TEST_PRESETS)
def test_e_minus_e_gives_coroot(name):
    t = preset_table(name)
    for alpha in t.rs.positive_roots:
        neg = tuple(-c for c in alpha)
        got = t.bracket(t.e(alpha), t.e(neg))
        assert got == t.h_alpha(alpha), alpha


def test_cartan_action_and_sl2_triples():
    t = preset_table("C2")
    a = t.rs.cartan.a
    # [h_i, e_j] = a_ij e_j
    for i in range(2):
        for j in range(2):
            got = t.bracket(t.h(i), t.e(_simple(t.rs, j)))
            assert got == a[i][j] * t.e(_simple(t.rs, j))
    # [e_i, f_j] = delta_ij h_i
    for i in range(2):
        for j in range(2):
            fj = t.e(tuple(-c for c in _simple(t.rs, j)))
            got = t.bracket(t.e(_simple(t.rs, i)), fj)
            assert got == (t.h(i) if i == j else ChevElement())


def test_bracket_alternating_random():
    rng = random.Random(17)
    t = preset_table("B3")
    keys = t.basis_keys()
    for _ in range(20):
        x = ChevElement()
        for key in rng.sample(keys, 4):
            x = x + rng.randint(-3, 3) * t.element_for_key(key)
        assert t.bracket(x, x).is_zero()


@pytest.mark.parametrize("name", TEST_PRESETS + ["E6"])
def test_sign_laws(name):
    t = preset_table(name)
    for (a, b), n in t.N.items():
        assert t.N[(b, a)] == -n
        na = tuple(-c for c in a)
        nb = tuple(-c for c in b)
        assert t.N[(na, nb)] == -n
        assert abs(n) == t.chain_p(a, b) + 1


@pytest.mark.parametrize("name", ["A2", "C2", "B3", "G2"])
def test_jacobi_on_basis(name):
    t = preset_table(name)
    keys = t.basis_keys()
    for k1, k2, k3 in itertools.combinations(keys, 3):
        x, y, z = (t.element_for_key(k) for k in (k1, k2, k3))
        total = (
            t.bracket(x, t.bracket(y, z))
            + t.bracket(y, t.bracket(z, x))
            + t.bracket(z, t.bracket(x, y))
        )
        assert total.is_zero(), (k1, k2, k3)


@pytest.mark.parametrize("name", TEST_PRESETS)
def test_omega_is_involutive_automorphism(name):
    t = preset_table(name)
    keys = t.basis_keys()
    for k in keys:
        x = t.element_for_key(k)
        assert t.omega(t.omega(x)) == x
    for k1 in keys:
        x = t.element_for_key(k1)
        for k2 in keys:
            y = t.element_for_key(k2)
            assert t.omega(t.bracket(x, y)) == t.bracket(t.omega(x), t.omega(y))


def test_omega_examples():
    t = preset_table("A2")
    assert omega(t, t.h(0)) == -1 * t.h(0)
    e1 = t.e((1, 0))
    assert omega(t, e1) == -1 * t.e((-1, 0))


def test_y_basis_examples():
    t = preset_table("C2")
    for i in range(2):
        yi = y_basis(t, _simple(t.rs, i))
        assert yi == t.e(_simple(t.rs, i)) - t.e(tuple(-c for c in _simple(t.rs, i)))
        assert t.omega(yi) == yi
    with pytest.raises(NotAPositiveRoot):
        y_basis(t, (-1, 0))


@pytest.mark.parametrize("name", ["A2", "C2", "C3", "G2"])
def test_y_structure_constants(name):
    # [y_a, y_b] = N(a,b) y_{a+b} - N(a,-b) y_{a-b} for positive a != b
    t = preset_table(name)
    pos = t.rs.positive_roots
    for alpha in pos:
        for beta in pos:
            if alpha == beta:
                continue
            got = bracket_g(t, t.y_basis(alpha), t.y_basis(beta))
            want = ChevElement()
            s = tuple(x + y for x, y in zip(alpha, beta))
            d = tuple(x - y for x, y in zip(alpha, beta))
            if t.n_value(alpha, beta):
                want = want + t.n_value(alpha, beta) * t.y_any(s)
            nb = tuple(-x for x in beta)
            if t.n_value(alpha, nb):
                want = want - t.n_value(alpha, nb) * t.y_any(d)
            assert got == want, (alpha, beta)


@pytest.mark.parametrize("name,expected", [("A1", 1), ("A2", 3), ("A3", 6), ("C2", 4), ("C3", 9)])
def test_fixed_subalgebra_dimension(name, expected):
    # dim k = |Phi_+|; for A_r this is dim so_{r+1}, for C_r it is dim gl_r
    t = preset_table(name)
    assert len(t.rs.positive_roots) == expected
    r = t.rs.rank
    if name.startswith("A"):
        assert expected == (r + 1) * r // 2
    if name.startswith("C"):
        assert expected == r * r


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B3", "C2", "C3", "G2"])
def test_mixed_serre_identity(name):
    # sum_s c_s[r] (ad Y_i)^s Y_j = (ad e_i)^r e_j + (-1)^(r-1) (ad f_i)^r f_j
    t = preset_table(name)
    n = t.rs.rank
    a = t.rs.cartan.a
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            yi = t.y_basis(_simple(t.rs, i))
            yj = t.y_basis(_simple(t.rs, j))
            ei, ej = t.e(_simple(t.rs, i)), t.e(_simple(t.rs, j))
            fi = t.e(tuple(-c for c in _simple(t.rs, i)))
            fj = t.e(tuple(-c for c in _simple(t.rs, j)))
            for r in range(0, 2 - a[i][j] + 1):
                row = coeff_row(a[i][j], r)
                lhs = ChevElement()
                term = yj
                for s in range(r + 1):
                    if row.c[s]:
                        lhs = lhs + row.c[s] * term
                    term = t.bracket(yi, term)
                rhs_e = ej
                rhs_f = fj
                for _ in range(r):
                    rhs_e = t.bracket(ei, rhs_e)
                    rhs_f = t.bracket(fi, rhs_f)
                sign = 1 if (r - 1) % 2 == 0 else -1
                rhs = rhs_e + sign * rhs_f
                assert lhs == rhs, (name, i, j, r)


# ---------------------------------------------------------------------------
# matrix realizations
# ---------------------------------------------------------------------------

def test_sl_images():
    rz = sl_realization(1)
    assert rz.images[("e", (1,))] == ExactMatrix(2, 2, {(0, 1): 1})
    rz2 = sl_realization(2)
    y1 = rz2.table.y_basis((1, 0))
    m = rz2.matrix_of(y1)
    assert m == ExactMatrix(3, 3, {(0, 1): 1, (1, 0): -1})
    assert m.transpose() == -m


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sl_homomorphism_and_fixed_antisymmetry(r):
    rz = sl_realization(r)
    assert not rz.homomorphism_failures()
    vecs = []
    for alpha in rz.table.rs.positive_roots:
        m = rz.matrix_of(rz.table.y_basis(alpha))
        assert m.transpose() == -m
        vecs.append(m.entries)
    # the fixed images span all antisymmetric matrices: dim so_{r+1}
    from onsagerkit.exact_math import span_rank

    assert span_rank(vecs) == (r + 1) * r // 2


@pytest.mark.parametrize("r", [2, 3])
def test_sl_serre_relations_as_matrices(r):
    rz = sl_realization(r)
    a = rz.table.rs.cartan.a
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            e_i = rz.images[("e", _simple(rz.table.rs, i))]
            x = rz.images[("e", _simple(rz.table.rs, j))]
            for _ in range(1 - a[i][j]):
                x = e_i.commutator(x)
            assert x.is_zero()


@pytest.mark.parametrize("r", [1, 2, 3])
def test_omega_compatibility_matrices(r):
    for rz in (sl_realization(r), sp_realization(r)):
        for key in rz.table.basis_keys():
            x = rz.table.element_for_key(key)
            assert rz.matrix_of(rz.table.omega(x)) == -rz.matrix_of(x).transpose()
        for i in range(rz.table.rs.rank):
            assert all(p == q for (p, q) in rz.images[("h", i)].entries)


def test_sp_display_examples():
    r = 2
    rz = sp_realization(r)
    # h_r = diag(E_rr, -E_rr)
    assert rz.images[("h", r - 1)] == ExactMatrix(4, 4, {(1, 1): 1, (3, 3): -1})
    # [e_{2eps_r}, e_{-2eps_r}] = h_r: the long simple root is alpha_r
    lng = (0, 1)
    m1 = rz.images[("e", lng)]
    m2 = rz.images[("e", (0, -1))]
    assert m1.commutator(m2) == rz.images[("h", r - 1)]
    assert m1 == ExactMatrix(4, 4, {(1, 3): 1})


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sp_fixed_point_block_shape(r):
    rz = sp_realization(r)
    t = rz.table
    for alpha in t.rs.positive_roots:
        m = rz.matrix_of(t.y_basis(alpha))
        b = m.block(0, r, 0, r)
        c = m.block(0, r, r, 2 * r)
        assert m.block(r, 2 * r, 0, r) == -c
        assert m.block(r, 2 * r, r, 2 * r) == b
        assert b.transpose() == -b
        assert c.transpose() == c


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sp_reconciliation_exists(r):
    signs = sp_sign_reconciliation(r)
    assert all(v in (1, -1) for v in signs.values())
    for alpha in preset_table("C%d" % r).rs.positive_roots:
        if height(alpha) == 1:
            assert signs[alpha] == 1


def test_eta_generator_images():
    r = 3
    t = sp_structure_table(r)
    for j in range(r - 1):
        k = eta(r, t.y_basis(_simple(t.rs, j)))
        assert k == ExactMatrix(r, r, {(j, j + 1): 1, (j + 1, j): -1})
    kr = eta(r, t.y_basis(_simple(t.rs, r - 1)))
    assert kr == ExactMatrix(r, r, {(r - 1, r - 1): I})


def test_eta_root_vector_images():
    r = 3

    def root_from_eps(eps):
        from onsagerkit.chevalley import _sp_eps_coords

        t = sp_structure_table(r)
        for alpha in t.rs._all:
            if _sp_eps_coords(r, alpha) == eps:
                return alpha
        raise AssertionError(eps)

    t = sp_structure_table(r)
    # eta(y_{eps_j - eps_k}) = E_jk - E_kj
    alpha = root_from_eps((1, -1, 0))
    assert eta(r, t.y_basis(alpha)) == ExactMatrix(r, r, {(0, 1): 1, (1, 0): -1})
    # eta(y_{eps_j + eps_k}) = i(E_jk + E_kj)
    beta = root_from_eps((1, 1, 0))
    assert eta(r, t.y_basis(beta)) == ExactMatrix(r, r, {(0, 1): I, (1, 0): I})
    # eta(y_{2 eps_l}) = i E_ll
    gam = root_from_eps((0, 2, 0))
    assert eta(r, t.y_basis(gam)) == ExactMatrix(r, r, {(1, 1): I})


@pytest.mark.parametrize("r", [1, 2, 3])
def test_eta_is_bracket_homomorphism(r):
    t = sp_structure_table(r)
    ys = [t.y_basis(alpha) for alpha in t.rs.positive_roots]
    for x in ys:
        for y in ys:
            lhs = eta(r, t.bracket(x, y))
            assert lhs == eta(r, x).commutator(eta(r, y))


def test_eta_rejects_unfixed():
    t = sp_structure_table(2)
    with pytest.raises(NotFixedError):
        eta(2, t.e((1, 0)))


@pytest.mark.parametrize("r", [2, 3])
def test_gl_presentation(r):
    rep = verify_gl_presentation(r)
    assert rep.passed, rep.failures


def test_gl_presentation_specific_relations():
    rep = verify_gl_presentation(3)
    names = dict(rep.checks)
    assert names["[K1,K3] = 0"]
    assert names["[K2,[K2,K1]] = -K1"]
    assert names["[K2,[K2,[K2,K3]]] = -4[K2,K3]"]


def test_invariant_form_values():
    t = preset_table("C2")
    # (e_a, e_{-a}) = 2/(a,a): 2 for short, 1 for long
    short = (1, 0)
    lng = (0, 1)
    assert invariant_form(t, t.e(short), t.e(tuple(-c for c in short))) == 2
    assert invariant_form(t, t.e(lng), t.e(tuple(-c for c in lng))) == 1
    # theta condition for the affine extension: (E_0, omega(E_0)) = -1
    e0 = t.e(tuple(-c for c in t.rs.theta))
    assert invariant_form(t, e0, t.omega(e0)) == -1


@pytest.mark.parametrize("name", ["A2", "C2", "G2"])
def test_form_invariance_finite(name):
    rng = random.Random(23)
    t = preset_table(name)
    keys = t.basis_keys()

    def rand_elt():
        x = ChevElement()
        for key in rng.sample(keys, 3):
            x = x + rng.randint(-2, 2) * t.element_for_key(key)
        return x

    for _ in range(25):
        x, y, z = rand_elt(), rand_elt(), rand_elt()
        assert invariant_form(t, t.bracket(x, y), z) + invariant_form(t, y, t.bracket(x, z)) == 0
