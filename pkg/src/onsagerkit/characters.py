"""One-dimensional representations of the fixed subalgebra.

A character kills every bracket, so its values on the fixed basis solve the
linear system chi([u, v]) = 0 over all basis pairs whose bracket stays inside
a height window.  The solution space has one free parameter per generator
whose Cartan column is even; for the symplectic types the solved functional
has closed-form values, reproduced here and cross-checked against the linear
solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .cartan import CartanMatrix, preset
from .chevalley import sp_structure_table
from .exact_math import ExactMatrix, nullspace_basis
from .loop import YIndex, k_bracket_expand
from .onsager import Realization, affine_realization, finite_realization
from .roots import AffineRoot, RootSystem, height


class WindowTooSmall(ValueError):
    """Height window leaves some basis vector untouched by any constraint."""


class NotCType(ValueError):
    pass


class NotCAffine(ValueError):
    pass


def even_column_set(c: CartanMatrix):
    """Labels j with a_ij even for every i."""
    n = c.n
    out = []
    for j in range(n):
        if all(c.a[i][j] % 2 == 0 for i in range(n)):
            out.append(c.labels[j])
    return frozenset(out)


@dataclass
class CharacterSpace:
    """Solution space of the abelianization constraints on a height window."""

    window: int
    keys: list          # fixed-basis indices inside the window, ordered
    basis: list         # list of functionals, each a dict key -> Fraction
    generator_keys: dict  # generator label -> fixed-basis key

    @property
    def dimension(self):
        return len(self.basis)


def _window_keys(rz: Realization, H):
    """Fixed-basis indices of height <= H, with their heights."""
    if rz.kind == "finite":
        rs = rz.table.rs
        return [(a, height(a)) for a in rs.positive_roots if height(a) <= H]
    out = []
    for gamma, mult in rz.affine.positive_up_to(H):
        for i in range(1, mult + 1):
            out.append((YIndex(gamma, i), rz.affine.height(gamma)))
    return out


def _bracket_coords(rz: Realization, u, v):
    if rz.kind == "finite":
        x = rz.table.y_basis(u)
        y = rz.table.y_basis(v)
        return rz.y_coordinates(rz.table.bracket(x, y))
    return k_bracket_expand(rz.table, u, v)


def _generator_keys(rz: Realization):
    out = {}
    if rz.kind == "finite":
        n = rz.cartan.n
        for pos, label in enumerate(rz.cartan.labels):
            out[label] = tuple(1 if k == pos else 0 for k in range(n))
        return out
    for label in rz.cartan.labels:
        out[label] = YIndex(rz.affine.simple_root(label))
    return out


def character_space(rz: Realization, H: int) -> CharacterSpace:
    """Solve chi([u, v]) = 0 over all window pairs; return the solution basis.

    Raises WindowTooSmall unless every basis vector of height <= H-1 appears
    in the expansion of some in-window bracket.
    """
    keyed = _window_keys(rz, H)
    keys = [k for k, _ in keyed]
    col = {k: j for j, k in enumerate(keys)}
    rows = []
    touched = set()
    for (u, hu), (v, hv) in combinations(keyed, 2):
        coords = _bracket_coords(rz, u, v)
        if not coords:
            continue
        if any(k not in col for k in coords):
            continue
        touched.update(coords)
        rows.append({col[k]: c for k, c in coords.items()})
    required = {k for k, h in keyed if h <= H - 1}
    missing = required - touched
    if missing:
        raise WindowTooSmall(
            "window %d leaves %d basis vectors unconstrained, e.g. %s"
            % (H, len(missing), next(iter(sorted(missing, key=str))))
        )
    matrix = ExactMatrix(len(rows), len(keys), {
        (r, j): c for r, row in enumerate(rows) for j, c in row.items()
    })
    basis = []
    for vec in nullspace_basis(matrix):
        func = {}
        for k, j in col.items():
            if vec[j]:
                assert vec[j].is_rational
                func[k] = vec[j].re
        basis.append(func)
    return CharacterSpace(H, keys, basis, _generator_keys(rz))


@dataclass
class Character:
    """A one-dimensional representation, determined by its values on the
    generators (necessarily zero off the even-column set)."""

    values: dict      # generator label -> scalar
    functional: dict  # fixed-basis key -> scalar

    def __call__(self, key):
        return self.functional.get(key, 0)


def solve_character(rz: Realization, H: int, values: dict) -> Character:
    """The character with the given generator values, from the window solve."""
    allowed = even_column_set(rz.cartan)
    for label, val in values.items():
        if val and label not in allowed:
            raise ValueError(
                "generator %r is outside the even-column set %s; its value must be 0"
                % (label, sorted(allowed))
            )
    space = character_space(rz, H)
    func = character_from_values(space, values)
    return Character(dict(values), func)


def character_from_values(space: CharacterSpace, values: dict):
    """The unique functional in the solved space with the given generator
    values (scalars may be rational or Gaussian rational)."""
    nb = len(space.basis)
    pivots = []  # (column, unit-pivot row vector, rhs) in elimination order
    for lab in sorted(values):
        key = space.generator_keys[lab]
        vec = [b.get(key, Fraction(0)) for b in space.basis]
        val = values[lab]
        for col, pvec, pval in pivots:
            f = vec[col]
            if f:
                vec = [a - f * b for a, b in zip(vec, pvec)]
                val = val - f * pval
        piv = next((j for j, a in enumerate(vec) if a), None)
        if piv is None:
            if val:
                raise ValueError("generator values are not attained by any character")
            continue
        inv = vec[piv]
        pivots.append((piv, [a / inv for a in vec], val / inv))
    solution = [Fraction(0)] * nb
    for col, vec, val in reversed(pivots):
        acc = val
        for j in range(nb):
            if j != col and vec[j]:
                acc = acc - vec[j] * solution[j]
        solution[col] = acc
    out = {}
    for j, x in enumerate(solution):
        if not x:
            continue
        for k, c in space.basis[j].items():
            s = out.get(k, 0) + x * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# closed forms for the symplectic types
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _c_rootsystem(r):
    return RootSystem(preset("C%d" % r))


def chi_finite(r, t, alpha):
    """Character normalized by chi(Y_r) = t on the type-C fixed basis:
    t on long positive roots, 0 on short ones."""
    rs = _c_rootsystem(r)
    alpha = tuple(alpha)
    if len(alpha) != r or not rs.is_positive(alpha):
        raise NotCType("%r is not a positive type-C%d root" % (alpha, r))
    return t if rs.is_long(alpha) else 0


def chi_affine(r, s, t, gamma: AffineRoot, i=1):
    """Character normalized by chi(Y_0) = s, chi(Y_r) = t on the affine
    type-C fixed basis.

    Long finite part alpha at even delta level: sign(alpha) * t; at odd
    level: -sign(alpha) * s; short finite parts and imaginary roots: 0.
    """
    rs = _c_rootsystem(r)
    if len(gamma.finite) != r:
        raise NotCAffine("root has rank %d, expected %d" % (len(gamma.finite), r))
    if gamma.is_imaginary:
        if gamma.level == 0:
            raise NotCAffine("zero is not a root")
        if not 1 <= i <= r:
            raise NotCAffine("imaginary slot %d outside 1..%d" % (i, r))
        return 0
    if not rs.is_root(gamma.finite):
        raise NotCAffine("%r is not a type-C%d root" % (gamma.finite, r))
    if not rs.is_long(gamma.finite):
        return 0
    sign = 1 if all(c >= 0 for c in gamma.finite) else -1
    if gamma.level % 2 == 0:
        return sign * t
    return -1 * sign * s


def finite_character_realization(r):
    """Type-C realization on the displayed symplectic table (the basis the
    closed form refers to)."""
    return finite_realization(preset("C%d" % r), sp_structure_table(r))


def affine_character_realization(r):
    return affine_realization(preset("C%d~" % r), sp_structure_table(r))
