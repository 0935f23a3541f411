"""Finite-type Chevalley bases with exact integer structure constants.

The table stores N[alpha, beta] with [e_alpha, e_beta] = N e_{alpha+beta} for
all root pairs whose sum is a root, plus [e_alpha, e_{-alpha}] = h_alpha and
[h, e_alpha] = alpha(h) e_alpha.  Signs are fixed by the extraspecial-pair
convention: order the positive roots by (height, lex); for each non-simple
gamma the minimal decomposition pair gets N = +(p+1); everything else follows
from the Jacobi identity and the cyclic identity of the invariant form.  The
resulting table automatically satisfies N[-a,-b] = -N[a,b], which makes
h -> -h, e_alpha -> -e_{-alpha} an involutive automorphism.

Also here: explicit matrix realizations (special linear and symplectic), the
fixed-subalgebra basis y_alpha = e_alpha - e_{-alpha}, and the isomorphism of
the symplectic fixed subalgebra with gl_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import CartanMatrix, preset
from .exact_math import ExactMatrix, I
from .roots import RootSystem, height


class NotAPositiveRoot(ValueError):
    pass


class NotFixedError(ValueError):
    """Element is not fixed by the involution."""


def _vadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _vsub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _vneg(x):
    return tuple(-a for a in x)


class ChevElement:
    """h-part over h_1..h_r plus e-part over root vectors, exact coefficients."""

    __slots__ = ("h", "e")

    def __init__(self, h=None, e=None):
        self.h = {i: Fraction(c) for i, c in (h or {}).items() if c}
        self.e = {tuple(a): Fraction(c) for a, c in (e or {}).items() if c}

    def is_zero(self):
        return not self.h and not self.e

    def __eq__(self, other):
        if not isinstance(other, ChevElement):
            return NotImplemented
        return self.h == other.h and self.e == other.e

    def __add__(self, other):
        h = dict(self.h)
        for i, c in other.h.items():
            s = h.get(i, Fraction(0)) + c
            if s:
                h[i] = s
            else:
                h.pop(i, None)
        e = dict(self.e)
        for a, c in other.e.items():
            s = e.get(a, Fraction(0)) + c
            if s:
                e[a] = s
            else:
                e.pop(a, None)
        out = ChevElement()
        out.h, out.e = h, e
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        out = ChevElement()
        if scalar:
            out.h = {i: scalar * c for i, c in self.h.items()}
            out.e = {a: scalar * c for a, c in self.e.items()}
        return out

    __mul__ = __rmul__

    def coordinates(self):
        """Sparse coordinate dict over keys ('h', i) and ('e', root)."""
        out = {("h", i): c for i, c in self.h.items()}
        out.update({("e", a): c for a, c in self.e.items()})
        return out

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for i in sorted(self.h):
            bits.append("%s*h%d" % (self.h[i], i + 1))
        for a in sorted(self.e, key=lambda t: (height(t), t)):
            bits.append("%s*e%s" % (self.e[a], list(a)))
        return " + ".join(bits)


class StructureTable:
    """Complete bracket table of a finite-type algebra in a Chevalley basis."""

    def __init__(self, rootsystem: RootSystem, n_table):
        self.rs = rootsystem
        self.N = dict(n_table)
        self._check_sign_laws()

    # -- constructors for basis elements ------------------------------------
    def e(self, alpha):
        alpha = tuple(alpha)
        if not self.rs.is_root(alpha):
            raise ValueError("%r is not a root" % (alpha,))
        return ChevElement(e={alpha: 1})

    def h(self, i):
        return ChevElement(h={i: 1})

    def h_alpha(self, alpha):
        return ChevElement(h=dict(enumerate(self.rs.coroot_coords(alpha))))

    def y_basis(self, alpha):
        """y_alpha = e_alpha - e_{-alpha}; requires alpha positive."""
        alpha = tuple(alpha)
        if not self.rs.is_positive(alpha):
            raise NotAPositiveRoot("%r is not a positive root" % (alpha,))
        return ChevElement(e={alpha: 1, _vneg(alpha): -1})

    def y_any(self, alpha):
        """y_alpha for alpha of either sign (y_{-a} = -y_a)."""
        return ChevElement(e={tuple(alpha): 1, _vneg(alpha): -1})

    def basis_keys(self):
        keys = [("h", i) for i in range(self.rs.rank)]
        keys += [("e", a) for a in sorted(self.rs._all)]
        return keys

    def element_for_key(self, key):
        kind, val = key
        return self.h(val) if kind == "h" else self.e(val)

    # -- structure ------------------------------------------------------------
    def n_value(self, alpha, beta):
        return self.N.get((tuple(alpha), tuple(beta)), 0)

    def bracket(self, x: ChevElement, y: ChevElement) -> ChevElement:
        rs = self.rs
        h_out = {}
        e_out = {}

        def bump(d, k, v):
            s = d.get(k, Fraction(0)) + v
            if s:
                d[k] = s
            else:
                d.pop(k, None)

        for i, ci in x.h.items():
            for beta, cb in y.e.items():
                bump(e_out, beta, ci * cb * rs.pairing(beta, i))
        for i, ci in y.h.items():
            for beta, cb in x.e.items():
                bump(e_out, beta, -ci * cb * rs.pairing(beta, i))
        for al, ca in x.e.items():
            for be, cb in y.e.items():
                coeff = ca * cb
                s = _vadd(al, be)
                if not any(s):
                    for i, k in enumerate(rs.coroot_coords(al)):
                        if k:
                            bump(h_out, i, coeff * k)
                elif rs.is_root(s):
                    n = self.N[(al, be)]
                    bump(e_out, s, coeff * n)
        out = ChevElement()
        out.h, out.e = h_out, e_out
        return out

    def omega(self, x: ChevElement) -> ChevElement:
        out = ChevElement()
        out.h = {i: -c for i, c in x.h.items()}
        out.e = {_vneg(a): -c for a, c in x.e.items()}
        return out

    def invariant_form(self, x: ChevElement, y: ChevElement):
        """Normalized invariant form: (e_a, e_{-a}) = 2/(a,a), h-block from
        the symmetrized Cartan data, (h, e) = 0."""
        rs = self.rs
        total = Fraction(0)
        for i, ci in x.h.items():
            for j, cj in y.h.items():
                total += ci * cj * 4 * rs.form[i][j] / (rs.form[i][i] * rs.form[j][j])
        for a, ca in x.e.items():
            cb = y.e.get(_vneg(a))
            if cb:
                total += ca * cb * 2 / rs.norm2(a)
        return total

    def decomposition(self, gamma):
        """Some pair of positive roots (xi, eta) with xi + eta = gamma and
        nonzero table entry."""
        for xi in self.rs.positive_roots:
            eta = _vsub(gamma, xi)
            if self.rs.is_positive(eta) and self.N.get((xi, eta)):
                return xi, eta
        raise ValueError("no decomposition for %r" % (gamma,))

    def chain_p(self, alpha, beta):
        """Largest p with beta - p*alpha a root."""
        p = 0
        cur = _vsub(beta, alpha)
        while self.rs.is_root(cur):
            p += 1
            cur = _vsub(cur, alpha)
        return p

    def _check_sign_laws(self):
        for (a, b), n in self.N.items():
            assert self.N[(b, a)] == -n, "antisymmetry fails at %r, %r" % (a, b)
            assert self.N[(_vneg(a), _vneg(b))] == -n, "negation law fails at %r, %r" % (a, b)
            assert abs(n) == self.chain_p(a, b) + 1, "magnitude rule fails at %r, %r" % (a, b)


def _mixed_n(rs, npp, xi, rho):
    """N_{-xi, rho} for positive roots xi, rho, from the positive-pair table.

    Cyclic identity of the invariant form: with sigma = rho - xi a positive
    root, N_{-xi, rho} = (sigma,sigma)/(rho,rho) * N_{xi, sigma}.
    """
    sigma = _vsub(rho, xi)
    if not rs.is_root(sigma):
        return Fraction(0)
    assert all(c >= 0 for c in sigma)
    return Fraction(rs.norm2(sigma), 1) / rs.norm2(rho) * npp[(xi, sigma)]


def build_chevalley(c: CartanMatrix) -> StructureTable:
    """Structure table for a finite-type matrix, extraspecial-pair signs."""
    rs = RootSystem(c)
    pos = rs.positive_roots
    posset = set(pos)
    order = {a: k for k, a in enumerate(pos)}

    def chain_p(alpha, beta):
        p = 0
        cur = _vsub(beta, alpha)
        while cur in rs._all:
            p += 1
            cur = _vsub(cur, alpha)
        return p

    npp = {}
    for gamma in pos:
        if height(gamma) < 2:
            continue
        decomps = sorted(
            ((a, _vsub(gamma, a))
             for a in pos
             if _vsub(gamma, a) in posset and order[a] < order[_vsub(gamma, a)]),
            key=lambda pair: order[pair[0]],
        )
        xi, eta = decomps[0]
        n0 = chain_p(xi, eta) + 1
        npp[(xi, eta)] = n0
        npp[(eta, xi)] = -n0
        denom = _mixed_n(rs, npp, xi, gamma)
        assert denom
        for alpha, beta in decomps[1:]:
            t1 = Fraction(0)
            amx = _vsub(alpha, xi)
            if amx in posset:
                t1 = _mixed_n(rs, npp, xi, alpha) * npp[(amx, beta)]
            t2 = Fraction(0)
            bmx = _vsub(beta, xi)
            if bmx in posset:
                t2 = _mixed_n(rs, npp, xi, beta) * npp[(alpha, bmx)]
            val = (t1 + t2) / denom
            assert val.denominator == 1, "non-integer structure constant at %r+%r" % (alpha, beta)
            val = int(val)
            assert abs(val) == chain_p(alpha, beta) + 1
            npp[(alpha, beta)] = val
            npp[(beta, alpha)] = -val

    # extend to all pairs of roots with root sum
    full = {}
    allroots = sorted(rs._all)
    for x in allroots:
        xpos = all(cc >= 0 for cc in x)
        for y in allroots:
            s = _vadd(x, y)
            if not any(s) or s not in rs._all:
                continue
            ypos = all(cc >= 0 for cc in y)
            if xpos and ypos:
                full[(x, y)] = npp[(x, y)]
            elif not xpos and not ypos:
                full[(x, y)] = -npp[(_vneg(x), _vneg(y))]
            elif xpos:
                # x positive, y negative: reduce through the cyclic identity
                eps = _vneg(y)
                if all(cc >= 0 for cc in s):
                    val = -Fraction(rs.norm2(s), 1) / rs.norm2(x) * npp[(eps, s)]
                else:
                    val = -Fraction(rs.norm2(s), 1) / rs.norm2(eps) * npp[(x, _vneg(s))]
                assert val.denominator == 1
                full[(x, y)] = int(val)
            else:
                # negative, positive: antisymmetry off the case above
                eps = _vneg(x)
                if all(cc >= 0 for cc in s):
                    val = Fraction(rs.norm2(s), 1) / rs.norm2(y) * npp[(eps, s)]
                else:
                    val = Fraction(rs.norm2(s), 1) / rs.norm2(eps) * npp[(y, _vneg(s))]
                assert val.denominator == 1
                full[(x, y)] = int(val)
    return StructureTable(rs, full)


def bracket_g(t: StructureTable, x, y):
    return t.bracket(x, y)


def omega(t: StructureTable, x):
    return t.omega(x)


def y_basis(t: StructureTable, alpha):
    return t.y_basis(alpha)


def invariant_form(t: StructureTable, x, y):
    return t.invariant_form(x, y)


@lru_cache(maxsize=None)
def preset_table(name) -> StructureTable:
    return build_chevalley(preset(name))


# ---------------------------------------------------------------------------
# matrix realizations
# ---------------------------------------------------------------------------

class MatrixRealization:
    """Images of the Chevalley basis as exact matrices."""

    def __init__(self, dim, images, table: StructureTable):
        self.dim = dim
        self.images = images
        self.table = table

    def matrix_of(self, x: ChevElement) -> ExactMatrix:
        out = ExactMatrix.zeros(self.dim, self.dim)
        for i, c in x.h.items():
            out = out + c * self.images[("h", i)]
        for a, c in x.e.items():
            out = out + c * self.images[("e", a)]
        return out

    def homomorphism_failures(self):
        """Basis pairs where bracket-of-images differs from image-of-bracket."""
        bad = []
        keys = self.table.basis_keys()
        for k1 in keys:
            m1 = self.images[k1]
            x1 = self.table.element_for_key(k1)
            for k2 in keys:
                m2 = self.images[k2]
                x2 = self.table.element_for_key(k2)
                if m1.commutator(m2) != self.matrix_of(self.table.bracket(x1, x2)):
                    bad.append((k1, k2))
        return bad


def _extend_images(table: StructureTable, images):
    """Fill images of all root vectors from the simple-root images.

    Non-simple positive root vectors come from any decomposition with nonzero
    table constant; negatives are transposes, matching the involution being
    X -> -X^T in both realizations here.
    """
    for gamma in table.rs.positive_roots:
        if height(gamma) < 2:
            continue
        xi, eta = table.decomposition(gamma)
        n = table.N[(xi, eta)]
        m = images[("e", xi)].commutator(images[("e", eta)]) * Fraction(1, n)
        images[("e", gamma)] = m
        images[("e", _vneg(gamma))] = m.transpose()
    return images


@lru_cache(maxsize=None)
def sl_realization(r) -> MatrixRealization:
    """Trace-zero (r+1) x (r+1) matrices: e_i = E_{i,i+1}, f_i = E_{i+1,i}."""
    table = preset_table("A%d" % r)
    n = r + 1

    def unit(i, j):
        return ExactMatrix(n, n, {(i, j): 1})

    images = {}
    for i in range(r):
        images[("h", i)] = unit(i, i) - unit(i + 1, i + 1)
        simple = tuple(1 if k == i else 0 for k in range(r))
        images[("e", simple)] = unit(i, i + 1)
        images[("e", _vneg(simple))] = unit(i + 1, i)
    _extend_images(table, images)
    rz = MatrixRealization(n, images, table)
    assert not rz.homomorphism_failures()
    return rz


def _sp_eps_coords(r, alpha):
    """epsilon-coordinates of a type-C root: alpha_k = eps_k - eps_{k+1}
    (k < r), alpha_r = 2 eps_r."""
    eps = [0] * r
    for k, c in enumerate(alpha):
        if k < r - 1:
            eps[k] += c
            eps[k + 1] -= c
        else:
            eps[r - 1] += 2 * c
    return tuple(eps)


def _sp_display_matrix(r, eps):
    """The displayed 2r x 2r symplectic root vector for a type-C root."""

    def unit(i, j):
        return ExactMatrix(2 * r, 2 * r, {(i, j): 1})

    pos = [j for j, c in enumerate(eps) if c > 0]
    neg = [j for j, c in enumerate(eps) if c < 0]
    if len(pos) == 1 and len(neg) == 1:
        k, l = pos[0], neg[0]  # eps_k - eps_l
        return unit(k, l) - unit(r + l, r + k)
    if len(neg) == 0:
        if len(pos) == 1:
            j = pos[0]  # 2 eps_j
            return unit(j, r + j)
        k, l = pos  # eps_k + eps_l
        return unit(k, r + l) + unit(l, r + k)
    if len(pos) == 0:
        if len(neg) == 1:
            j = neg[0]
            return unit(r + j, j)
        k, l = neg
        return unit(r + k, l) + unit(r + l, k)
    raise ValueError("not a type-C root pattern: %r" % (eps,))


@lru_cache(maxsize=None)
def _sp_images(r):
    c = preset("C%d" % r)
    rs = RootSystem(c)

    def unit(i, j):
        return ExactMatrix(2 * r, 2 * r, {(i, j): 1})

    images = {}
    for j in range(r - 1):
        images[("h", j)] = unit(j, j) - unit(j + 1, j + 1) - unit(r + j, r + j) + unit(r + j + 1, r + j + 1)
    images[("h", r - 1)] = unit(r - 1, r - 1) - unit(2 * r - 1, 2 * r - 1)
    for alpha in sorted(rs._all):
        images[("e", alpha)] = _sp_display_matrix(r, _sp_eps_coords(r, alpha))
    return rs, images


@lru_cache(maxsize=None)
def sp_structure_table(r) -> StructureTable:
    """Type-C table whose constants come from the displayed symplectic
    matrices (so all downstream sign-sensitive identities match the explicit
    realization)."""
    rs, images = _sp_images(r)
    n_table = {}
    for x in sorted(rs._all):
        mx = images[("e", x)]
        for y in sorted(rs._all):
            s = _vadd(x, y)
            if not any(s):
                # [e_a, e_{-a}] must be h_a
                k = rs.coroot_coords(x)
                want = ExactMatrix.zeros(2 * r, 2 * r)
                for i, ki in enumerate(k):
                    if ki:
                        want = want + ki * images[("h", i)]
                assert mx.commutator(images[("e", y)]) == want
                continue
            if s not in rs._all:
                continue
            comm = mx.commutator(images[("e", y)])
            ms = images[("e", s)]
            pos_entry = next(iter(ms.entries))
            val = comm.entry(*pos_entry) / ms.entry(*pos_entry)
            assert comm == val * ms
            assert val.is_rational and val.re.denominator == 1
            n_table[(x, y)] = int(val.re)
    return StructureTable(rs, n_table)


@lru_cache(maxsize=None)
def sp_realization(r) -> MatrixRealization:
    """The displayed 2r x 2r symplectic realization, bound to its own table."""
    rs, images = _sp_images(r)
    rz = MatrixRealization(2 * r, images, sp_structure_table(r))
    assert not rz.homomorphism_failures()
    return rz


@lru_cache(maxsize=None)
def sp_sign_reconciliation(r):
    """Diagonal +-1 basis change from the generic type-C table onto the
    displayed symplectic one; asserted to exist."""
    generic = preset_table("C%d" % r)
    display = sp_structure_table(r)
    rs = generic.rs
    signs = {}
    for alpha in rs.positive_roots:
        if height(alpha) == 1:
            signs[alpha] = 1
            signs[_vneg(alpha)] = 1
    for gamma in rs.positive_roots:
        if height(gamma) < 2:
            continue
        xi, eta = generic.decomposition(gamma)
        s = Fraction(signs[xi] * signs[eta] * display.N[(xi, eta)], generic.N[(xi, eta)])
        assert s.denominator == 1 and abs(s) == 1
        signs[gamma] = int(s)
        signs[_vneg(gamma)] = int(s)
    for (a, b), n in generic.N.items():
        assert n * signs[_vadd(a, b)] == signs[a] * signs[b] * display.N[(a, b)]
    return signs


def eta(r, x: ChevElement) -> ExactMatrix:
    """Isomorphism of the symplectic fixed subalgebra onto gl_r:
    (B, C; -C, B) -> B + iC."""
    rz = sp_realization(r)
    if rz.table.omega(x) != x:
        raise NotFixedError("element is not involution-fixed")
    m = rz.matrix_of(x)
    b = m.block(0, r, 0, r)
    c = m.block(0, r, r, 2 * r)
    assert m.block(r, 2 * r, 0, r) == -c and m.block(r, 2 * r, r, 2 * r) == b
    assert b.transpose() == -b and c.transpose() == c
    return b + I * c


@dataclass
class GlPresentationReport:
    r: int
    checks: list

    @property
    def passed(self):
        return all(ok for _, ok in self.checks)

    @property
    def failures(self):
        return [name for name, ok in self.checks if not ok]


def verify_gl_presentation(r) -> GlPresentationReport:
    """Check the gl_r relations satisfied by the images K_j of the fixed
    generators, plus the expression of K_r through the center and the
    diagonal elements."""
    assert r >= 2
    table = sp_structure_table(r)
    rs = table.rs

    def simple(k):
        return tuple(1 if i == k else 0 for i in range(r))

    K = [eta(r, table.y_basis(simple(k))) for k in range(r)]
    zero = ExactMatrix.zeros(r, r)
    checks = []
    for j in range(r):
        for k in range(j + 2, r):
            ok = K[j].commutator(K[k]) == zero
            checks.append(("[K%d,K%d] = 0" % (j + 1, k + 1), ok))
    for j in range(r - 2):
        lhs = K[j].commutator(K[j].commutator(K[j + 1]))
        checks.append(("[K%d,[K%d,K%d]] = -K%d" % (j + 1, j + 1, j + 2, j + 2), lhs == -K[j + 1]))
    for j in range(r - 1):
        lhs = K[j + 1].commutator(K[j + 1].commutator(K[j]))
        checks.append(("[K%d,[K%d,K%d]] = -K%d" % (j + 2, j + 2, j + 1, j + 1), lhs == -K[j]))
    a, b = K[r - 2], K[r - 1]
    lhs = a.commutator(a.commutator(a.commutator(b)))
    checks.append(
        ("[K%d,[K%d,[K%d,K%d]]] = -4[K%d,K%d]" % (r - 1, r - 1, r - 1, r, r - 1, r),
         lhs == -4 * a.commutator(b))
    )
    # K_r = (i/r)(Z - sum_j j * (E_jj - E_{j+1,j+1}))
    Z = ExactMatrix.identity(r)
    acc = ExactMatrix.zeros(r, r)
    for j in range(1, r):
        acc = acc + j * (ExactMatrix(r, r, {(j - 1, j - 1): 1}) - ExactMatrix(r, r, {(j, j): 1}))
    rhs = (I * Fraction(1, r)) * (Z - acc)
    checks.append(("K%d = (i/%d)(Z - sum j*diag_j)" % (r, r), K[r - 1] == rhs))
    checks.append(("K%d = i*E_%d%d" % (r, r, r), K[r - 1] == ExactMatrix(r, r, {(r - 1, r - 1): I})))
    return GlPresentationReport(r, checks)
