"""Named verification checks for a given Cartan matrix.

Each check returns (name, passed, detail).  The CLI `verify` subcommand runs
the applicable ones and reports one PASS/FAIL line per check; failures name
the identity that broke.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .cartan import FINITE, UNTWISTED_AFFINE, CartanMatrix
from .characters import character_space, even_column_set
from .chevalley import sl_realization, sp_sign_reconciliation, sp_realization, verify_gl_presentation
from .loop import YIndex, bracket_loop, k_bracket_expand, onsager_basis, _sl2_table
from .onsager import (
    Realization,
    filtration_dims,
    generation_check,
    psi_eval,
    realization_for,
)
from .roots import AffineRoot
from .serre_coeffs import serre_relation


def thread_count():
    """ONSAGER_KIT_THREADS environment override; 0 or unset means auto."""
    raw = os.environ.get("ONSAGER_KIT_THREADS", "0")
    try:
        val = int(raw)
    except ValueError:
        val = 0
    if val <= 0:
        return min(8, os.cpu_count() or 1)
    return val


def check_relations_killed(c: CartanMatrix, rz: Realization):
    bad = []
    labels = list(c.labels)
    for i in labels:
        for j in labels:
            if i == j:
                continue
            if not psi_eval(rz, serre_relation(c, i, j)).is_zero():
                bad.append((i, j))
    name = "inhomogeneous Serre relations evaluate to zero"
    if bad:
        return name, False, "nonzero image for generator pairs %s" % (bad,)
    return name, True, "%d relations" % (len(labels) * (len(labels) - 1))


def check_filtration(c: CartanMatrix, rz: Realization, jmax):
    rep = filtration_dims(rz, jmax)
    name = "graded dimensions match root multiplicities (jmax=%d)" % jmax
    detail = "dims %s expected %s" % (rep.dims, rep.expected)
    return name, rep.matches, detail


def check_generation(c: CartanMatrix, rz: Realization, H):
    rep = generation_check(rz, H)
    name = "evaluated bracket words span every level up to height %d" % H
    return name, rep.matches, "rank %d expected %d" % (rep.rank, rep.expected)


def check_character_dimension(c: CartanMatrix, rz: Realization, H):
    space = character_space(rz, H)
    expected = len(even_column_set(c))
    name = "character space dimension equals the even-column count"
    return (
        name,
        space.dimension == expected,
        "dim %d expected %d (window %d)" % (space.dimension, expected, H),
    )


def check_onsager_structure(bound=4):
    """[A_k,A_l] = G_{l-k}, [G_m,G_n] = 0, [G_m,A_k] = 2(A_{k+m} - A_{k-m})."""
    t = _sl2_table()
    for k in range(-bound, bound + 1):
        for l in range(-bound, bound + 1):
            if bracket_loop(t, onsager_basis(k)[0], onsager_basis(l)[0]) != onsager_basis(l - k)[1]:
                return "classical A/G bracket table", False, "[A_%d,A_%d] != G_%d" % (k, l, l - k)
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            if not bracket_loop(t, onsager_basis(m)[1], onsager_basis(n)[1]).is_zero():
                return "classical A/G bracket table", False, "[G_%d,G_%d] != 0" % (m, n)
        for k in range(-bound, bound + 1):
            lhs = bracket_loop(t, onsager_basis(m)[1], onsager_basis(k)[0])
            rhs = 2 * onsager_basis(k + m)[0] - 2 * onsager_basis(k - m)[0]
            if lhs != rhs:
                return (
                    "classical A/G bracket table",
                    False,
                    "[G_%d,A_%d] != 2A_%d - 2A_%d" % (m, k, k + m, k - m),
                )
    return "classical A/G bracket table", True, "|k|,|l|,m,n <= %d" % bound


def _expected_y_bracket(rz, idx1, idx2):
    """Closed-form bracket of two fixed-basis vectors over the y-basis."""
    t = rz.table
    rs = t.rs
    r = rs.rank
    zero = (0,) * r

    def canon(gamma, i, coeff):
        if gamma.is_imaginary:
            if gamma.level == 0:
                return {}
            if gamma.level < 0:
                return {YIndex(AffineRoot(zero, -gamma.level), i): -coeff}
            return {YIndex(gamma, i): coeff}
        pos = gamma.level > 0 or (
            gamma.level == 0 and all(x >= 0 for x in gamma.finite)
        )
        if pos:
            return {YIndex(gamma): coeff}
        return {YIndex(-gamma): -coeff}

    def merge(*dicts):
        out = {}
        for d in dicts:
            for k, v in d.items():
                s = out.get(k, Fraction(0)) + v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    g1, g2 = idx1.gamma, idx2.gamma
    if not g1.is_imaginary and not g2.is_imaginary:
        alpha, l = g1.finite, g1.level
        beta, m = g2.finite, g2.level
        nega = tuple(-x for x in alpha)
        if beta == alpha:
            k = rs.coroot_coords(alpha)
            return merge(*[canon(AffineRoot(zero, m - l), i + 1, Fraction(k[i])) for i in range(r)])
        if beta == nega:
            k = rs.coroot_coords(alpha)
            return merge(*[canon(AffineRoot(zero, m + l), i + 1, Fraction(k[i])) for i in range(r)])
        out = {}
        nab = t.n_value(alpha, beta)
        if nab:
            out = merge(out, canon(AffineRoot(tuple(a + b for a, b in zip(alpha, beta)), l + m), 1, Fraction(nab)))
        namb = t.n_value(alpha, tuple(-x for x in beta))
        if namb:
            out = merge(out, canon(AffineRoot(tuple(a - b for a, b in zip(alpha, beta)), l - m), 1, Fraction(-namb)))
        return out
    if g1.is_imaginary and g2.is_imaginary:
        return {}
    if g1.is_imaginary:
        i = idx1.i - 1
        l = g1.level
        alpha, m = g2.finite, g2.level
        ahi = rs.pairing(alpha, i)
        return merge(
            canon(AffineRoot(alpha, l + m), 1, Fraction(ahi)),
            canon(AffineRoot(alpha, m - l), 1, Fraction(-ahi)),
        )
    flipped = _expected_y_bracket(rz, idx2, idx1)
    return {k: -v for k, v in flipped.items()}


def check_affine_structure_constants(rz: Realization, level_bound=2):
    """Fixed-basis bracket expansions against their closed forms, with
    integrality of every coefficient."""
    t = rz.table
    rs = t.rs
    r = rs.rank
    zero = (0,) * r
    name = "fixed-basis bracket expansions match closed forms"
    indices = []
    for alpha in sorted(rs._all):
        for l in range(-level_bound, level_bound + 1):
            indices.append(YIndex(AffineRoot(alpha, l)))
    for i in range(1, r + 1):
        for l in range(-level_bound, level_bound + 1):
            if l:
                indices.append(YIndex(AffineRoot(zero, l), i))
    for idx1 in indices:
        for idx2 in indices:
            got = k_bracket_expand(t, idx1, idx2)
            want = _expected_y_bracket(rz, idx1, idx2)
            if got != want:
                return name, False, "[%s, %s] expansion differs" % (idx1, idx2)
            for coeff in got.values():
                if Fraction(coeff).denominator != 1:
                    return name, False, "non-integer coefficient in [%s, %s]" % (idx1, idx2)
    return name, True, "%d index pairs, levels |l| <= %d" % (len(indices) ** 2, level_bound)


def check_gl_presentation(r):
    rep = verify_gl_presentation(r)
    name = "gl_%d presentation through the fixed-subalgebra isomorphism" % r
    return name, rep.passed, ("all %d relation checks" % len(rep.checks)) if rep.passed else str(rep.failures)


def check_sl_homomorphism(r):
    rz = sl_realization(r)
    bad = rz.homomorphism_failures()
    name = "special linear matrix realization is a bracket homomorphism"
    return name, not bad, "rank %d" % r if not bad else str(bad[:3])


def check_sp_reconciliation(r):
    sp_sign_reconciliation(r)
    rz = sp_realization(r)
    bad = rz.homomorphism_failures()
    name = "symplectic realization matches its table and reconciles with the generic one"
    return name, not bad, "rank %d" % r


def verification_suite(c: CartanMatrix, jmax=None, height=None):
    """All applicable checks for a matrix, as (name, passed, detail) rows."""
    if c.kind not in (FINITE, UNTWISTED_AFFINE):
        raise ValueError(
            "verification needs a finite or untwisted affine matrix; "
            "this one classifies as %s" % c.kind
        )
    rz = realization_for(c)
    checks = []
    if c.kind == FINITE:
        maxht = rz.table.rs.max_height
        jmax = jmax or maxht
        height = height or maxht
        checks.append(lambda: check_relations_killed(c, rz))
        checks.append(lambda: check_filtration(c, rz, jmax))
        checks.append(lambda: check_generation(c, rz, height))
        checks.append(lambda: check_character_dimension(c, rz, maxht))
        name = c.typename or ""
        if name.startswith("C") and c.n <= 4 and c.a == tuple(tuple(row) for row in _c_preset(c.n)):
            if c.n >= 2:
                checks.append(lambda: check_gl_presentation(c.n))
            checks.append(lambda: check_sp_reconciliation(c.n))
        if name.startswith("A") and c.n <= 4:
            checks.append(lambda: check_sl_homomorphism(c.n))
    elif c.kind == UNTWISTED_AFFINE:
        jmax = jmax or 6
        checks.append(lambda: check_relations_killed(c, rz))
        checks.append(lambda: check_filtration(c, rz, jmax))
        checks.append(lambda: check_generation(c, rz, height or jmax))
        delta = rz.affine.delta_height
        if 2 * delta + 2 <= 20:
            checks.append(lambda: check_character_dimension(c, rz, 2 * delta + 2))
        if rz.affine.rank <= 3:
            checks.append(lambda: check_affine_structure_constants(rz))
        if c.typename == "A1~":
            checks.append(lambda: check_onsager_structure())

    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return [f.result() for f in [pool.submit(ch) for ch in checks]]
    return [ch() for ch in checks]


def _c_preset(r):
    from .cartan import preset

    return preset("C%d" % r).a
