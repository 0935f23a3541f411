"""Root systems: finite positive roots with the normalized form; affine roots.

Roots are integer coordinate tuples over the simple roots.  The bilinear form
is normalized so long roots have squared length 2; all other lengths follow
from the symmetrizer.  Affine roots are (finite part, delta level) pairs with
multiplicity 1 (real) or r (imaginary).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _closure
from .cartan import FINITE, UNTWISTED_AFFINE, CartanMatrix, NotAffine, NotFinite


class NotARoot(ValueError):
    pass


def height(root):
    return sum(root)


class RootSystem:
    """Positive roots of a finite-type Cartan matrix plus the normalized form."""

    def __init__(self, cartan: CartanMatrix):
        if cartan.kind != FINITE:
            raise NotFinite("root enumeration requires a finite-type matrix")
        self.cartan = cartan
        n = cartan.n
        all_roots = _closure.root_closure(cartan.a)
        self.positive_roots = sorted(
            (v for v in all_roots if all(c >= 0 for c in v)),
            key=lambda v: (height(v), v),
        )
        self._all = frozenset(all_roots)
        dmax = max(cartan.d)
        self.form = tuple(
            tuple(Fraction(cartan.d[i] * cartan.a[i][j], dmax) for j in range(n))
            for i in range(n)
        )
        self.theta = self.positive_roots[-1]
        if self.form_value(self.theta, self.theta) != 2:
            raise ValueError("highest root is not long; matrix is decomposable")

    @property
    def rank(self):
        return self.cartan.n

    def is_root(self, v):
        return tuple(v) in self._all

    def is_positive(self, v):
        v = tuple(v)
        return v in self._all and all(c >= 0 for c in v)

    def roots_of_height(self, h):
        return [v for v in self.positive_roots if height(v) == h]

    @property
    def max_height(self):
        return height(self.theta)

    def form_value(self, alpha, beta):
        """(alpha, beta) for arbitrary lattice vectors."""
        n = self.rank
        return sum(
            alpha[i] * beta[j] * self.form[i][j]
            for i in range(n)
            for j in range(n)
            if alpha[i] and beta[j]
        )

    def norm2(self, alpha):
        return self.form_value(alpha, alpha)

    def is_long(self, alpha):
        return self.norm2(alpha) == 2

    def pairing(self, alpha, i):
        """alpha(h_i) = sum_j r_j(alpha) a[i][j]."""
        return sum(alpha[j] * self.cartan.a[i][j] for j in range(self.rank))

    def coroot_coords(self, alpha):
        """Integer coordinates k_i with h_alpha = sum_i k_i(alpha) h_i."""
        alpha = tuple(alpha)
        if alpha not in self._all:
            raise NotARoot("%r is not a root" % (alpha,))
        norm = self.norm2(alpha)
        coords = []
        for i in range(self.rank):
            k = Fraction(alpha[i]) * self.form[i][i] / norm
            assert k.denominator == 1, "coroot coordinate %s is not an integer" % k
            coords.append(int(k))
        return tuple(coords)


def enumerate_positive_roots(c: CartanMatrix) -> RootSystem:
    return RootSystem(c)


def coroot_coords(rs: RootSystem, alpha):
    return rs.coroot_coords(alpha)


# ---------------------------------------------------------------------------
# affine roots
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class AffineRoot:
    """finite part + level * delta; the finite part is the all-zero tuple for
    imaginary roots."""

    finite: tuple
    level: int

    @property
    def is_imaginary(self):
        return not any(self.finite)

    @property
    def is_real(self):
        return any(self.finite)

    def __neg__(self):
        return AffineRoot(tuple(-c for c in self.finite), -self.level)

    def __str__(self):
        if self.is_imaginary:
            return "%dd" % self.level
        bits = []
        for i, c in enumerate(self.finite):
            if not c:
                continue
            if c == 1:
                bits.append("+a%d" % (i + 1))
            elif c == -1:
                bits.append("-a%d" % (i + 1))
            else:
                bits.append("%+da%d" % (c, i + 1))
        fin = "".join(bits).lstrip("+")
        if self.level == 0:
            return fin
        return "%s%+dd" % (fin, self.level)


class AffineData:
    """Finite part and bookkeeping of an untwisted affine Cartan matrix."""

    def __init__(self, cartan: CartanMatrix):
        if cartan.kind != UNTWISTED_AFFINE:
            raise NotAffine("expected an untwisted affine matrix")
        self.cartan = cartan
        self.finite_cartan = cartan.finite_part()
        self.rootsystem = RootSystem(self.finite_cartan)
        self.theta = self.rootsystem.theta
        self.delta_height = 1 + height(self.theta)
        self.rank = self.finite_cartan.n

    def height(self, gamma: AffineRoot):
        """Height over the affine simple roots (delta = alpha_0 + theta)."""
        return gamma.level * self.delta_height + height(gamma.finite)

    def multiplicity(self, gamma: AffineRoot):
        return self.rank if gamma.is_imaginary else 1

    def is_positive(self, gamma: AffineRoot):
        if gamma.level > 0:
            return gamma.is_imaginary or self.rootsystem.is_root(gamma.finite)
        if gamma.level == 0:
            return self.rootsystem.is_positive(gamma.finite) and any(gamma.finite)
        return False

    def simple_root(self, label):
        """Affine simple root for a generator label (0 = -theta + delta)."""
        if label == 0:
            return AffineRoot(tuple(-c for c in self.theta), 1)
        unit = tuple(1 if i == label - 1 else 0 for i in range(self.rank))
        return AffineRoot(unit, 0)

    def positive_up_to(self, H):
        """All positive affine roots of height <= H with multiplicities."""
        if H < 1:
            return []
        out = []
        rs = self.rootsystem
        zero = (0,) * self.rank
        for alpha in rs.positive_roots:
            if height(alpha) <= H:
                out.append((AffineRoot(alpha, 0), 1))
        k = 1
        while k * self.delta_height - rs.max_height <= H:
            if k * self.delta_height <= H:
                out.append((AffineRoot(zero, k), self.rank))
            for alpha in self._all_finite_roots():
                ht = k * self.delta_height + height(alpha)
                if 1 <= ht <= H:
                    out.append((AffineRoot(alpha, k), 1))
            k += 1
        out.sort(key=lambda pair: (self.height(pair[0]), pair[0]))
        return out

    def _all_finite_roots(self):
        return sorted(self.rootsystem._all)

    def mult_by_height(self, H):
        """dict height -> total multiplicity of positive roots at that height."""
        out = {}
        for gamma, m in self.positive_up_to(H):
            h = self.height(gamma)
            out[h] = out.get(h, 0) + m
        return out


def affine_positive_roots(c: CartanMatrix, H: int):
    """Positive affine roots of height <= H as (root, multiplicity) pairs."""
    return AffineData(c).positive_up_to(H)
