import random
from fractions import Fraction

import pytest

from onsagerkit.chevalley import preset_table
from onsagerkit.loop import (
    LoopElement,
    NotExpandable,
    YIndex,
    bracket_loop,
    central,
    derivation,
    e_at,
    h_at,
    k_bracket_expand,
    loop_form,
    omega_tilde,
    onsager_basis,
    y_affine,
    y_coordinates,
    y_real,
    y_imag,
)
from onsagerkit.roots import AffineRoot


def test_central_extension_bracket():
    t = preset_table("C2")
    for alpha in t.rs.positive_roots:
        neg = tuple(-c for c in alpha)
        got = bracket_loop(t, e_at(alpha, 1), e_at(neg, -1))
        want = LoopElement({(("h", i), 0): k for i, k in enumerate(t.rs.coroot_coords(alpha)) if k})
        want = want + Fraction(2) / t.rs.norm2(alpha) * central()
        assert got == want, alpha


def test_derivation_and_center():
    t = preset_table("A2")
    x = e_at((1, 0), 3)
    assert bracket_loop(t, derivation(), x) == 3 * x
    assert bracket_loop(t, x, derivation()) == -3 * x
    rng = random.Random(2)
    for _ in range(10):
        y = _random_loop(rng, t)
        assert bracket_loop(t, central(), y).is_zero()
        assert bracket_loop(t, derivation(), derivation()).is_zero()


def _random_loop(rng, t, with_cd=True):
    keys = t.basis_keys()
    x = LoopElement()
    for _ in range(3):
        key = rng.choice(keys)
        x = x + rng.randint(-2, 2) * LoopElement({(key, rng.randint(-3, 3)): 1})
    if with_cd:
        x = x + rng.randint(-1, 1) * central() + rng.randint(-1, 1) * derivation()
    return x


@pytest.mark.parametrize("name", ["A1", "A2", "C2"])
def test_loop_jacobi_random(name):
    rng = random.Random(31)
    t = preset_table(name)
    for _ in range(30):
        x, y, z = (_random_loop(rng, t) for _ in range(3))
        total = (
            bracket_loop(t, x, bracket_loop(t, y, z))
            + bracket_loop(t, y, bracket_loop(t, z, x))
            + bracket_loop(t, z, bracket_loop(t, x, y))
        )
        assert total.is_zero()


@pytest.mark.parametrize("name", ["A1", "A2", "C2"])
def test_loop_form_invariance_random(name):
    rng = random.Random(37)
    t = preset_table(name)
    for _ in range(30):
        x, y, z = (_random_loop(rng, t) for _ in range(3))
        assert loop_form(t, bracket_loop(t, x, y), z) + loop_form(t, y, bracket_loop(t, x, z)) == 0


def test_omega_tilde_examples():
    t = preset_table("A2")
    alpha = (1, 0)
    assert omega_tilde(e_at(alpha, 2)) == -1 * e_at((-1, 0), -2)
    assert omega_tilde(derivation()) == -1 * derivation()
    assert omega_tilde(central()) == -1 * central()
    rng = random.Random(5)
    for _ in range(20):
        x = _random_loop(rng, t)
        assert omega_tilde(omega_tilde(x)) == x


@pytest.mark.parametrize("name", ["A1", "C2"])
def test_omega_tilde_is_automorphism(name):
    t = preset_table(name)
    keys = t.basis_keys()
    elems = [LoopElement({(key, k): 1}) for key in keys for k in (-2, -1, 0, 1, 2)]
    elems += [central(), derivation()]
    for x in elems:
        for y in elems:
            assert omega_tilde(bracket_loop(t, x, y)) == bracket_loop(
                t, omega_tilde(x), omega_tilde(y)
            )


def test_y_affine_examples():
    t = preset_table("C2")
    rank = 2
    zero = (0, 0)
    g = y_affine(YIndex(AffineRoot(zero, 3), 2))
    assert g == h_at(1, 3) - h_at(1, -3)
    theta = t.rs.theta
    y0 = y_affine(YIndex(AffineRoot(tuple(-c for c in theta), 1)))
    assert y0 == e_at(tuple(-c for c in theta), 1) - e_at(theta, -1)
    for idx in (YIndex(AffineRoot((1, 1), 2)), YIndex(AffineRoot(zero, 1), 1)):
        assert omega_tilde(y_affine(idx)) == y_affine(idx)


def test_y_sign_conventions():
    # y_{-gamma} = -y_gamma comes out of the defining formula
    assert y_real((1, 0), -2) == -1 * y_real((-1, 0), 2)
    # G_0 = 0
    assert y_imag(1, 0, 1).is_zero()


def test_y_coordinates_roundtrip_and_integrality():
    t = preset_table("C2")
    zero = (0, 0)
    indices = [YIndex(AffineRoot(a, k)) for a in sorted(t.rs._all) for k in (-2, -1, 0, 1, 2)]
    indices += [YIndex(AffineRoot(zero, k), i) for k in (1, 2) for i in (1, 2)]
    for i1 in indices:
        for i2 in indices:
            coords = k_bracket_expand(t, i1, i2)
            for idx, coeff in coords.items():
                assert Fraction(coeff).denominator == 1
                # every output index is a canonical positive one
                g = idx.gamma
                assert g.level > 0 or (g.level == 0 and all(c >= 0 for c in g.finite))


def test_not_expandable():
    t = preset_table("A1")
    with pytest.raises(NotExpandable):
        y_coordinates(central(), 1)
    with pytest.raises(NotExpandable):
        y_coordinates(e_at((1,), 0), 1)
    with pytest.raises(NotExpandable):
        y_coordinates(h_at(0, 0), 1)


def test_onsager_identities():
    t = preset_table("A1")
    # A_m = -y_{alpha_0 - (m+1) delta}: alpha_0 = -alpha_1 + delta, so
    # alpha_0 - (m+1)delta has finite part -alpha_1 at level -m
    for m in range(-3, 4):
        a_m, g_m = onsager_basis(m)
        assert a_m == -1 * y_real((-1,), -m)
        if m > 0:
            assert g_m == -1 * onsager_basis(-m)[1]
    assert onsager_basis(0)[1].is_zero()


def test_onsager_structure_small():
    t = preset_table("A1")
    for k in range(-3, 4):
        for l in range(-3, 4):
            assert bracket_loop(t, onsager_basis(k)[0], onsager_basis(l)[0]) == onsager_basis(l - k)[1]
    for m in range(1, 4):
        for k in range(-3, 4):
            lhs = bracket_loop(t, onsager_basis(m)[1], onsager_basis(k)[0])
            assert lhs == 2 * onsager_basis(k + m)[0] - 2 * onsager_basis(k - m)[0]
        for n in range(1, 4):
            assert bracket_loop(t, onsager_basis(m)[1], onsager_basis(n)[1]).is_zero()
