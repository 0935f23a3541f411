"""Generalized Cartan matrices: validation, symmetrizers, classification, presets.

Conventions.  A Cartan matrix entry is a[i][j] = alpha_j(h_i).  Finite presets
use Bourbaki node numbering with labels 1..n; untwisted affine presets append
the extra node first, with labels 0..r.  For type C_r the last node is the
long simple root, so a[r-1][r] = -2 and a[r][r-1] = -1 (0-based rows).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _closure


class NotGCM(ValueError):
    """The matrix violates the generalized-Cartan-matrix axioms."""


class NotSymmetrizable(ValueError):
    """No positive diagonal matrix symmetrizes the given matrix."""


class UnknownPreset(ValueError):
    """Preset name is not in the supported list."""


class NotFinite(ValueError):
    """Operation requires a finite-type Cartan matrix."""


class NotAffine(ValueError):
    """Operation requires an untwisted-affine Cartan matrix."""


FINITE = "Finite"
UNTWISTED_AFFINE = "UntwistedAffine"
OTHER = "Other"


@dataclass(frozen=True)
class CartanMatrix:
    """A validated generalized Cartan matrix with symmetrizer and type tag."""

    a: tuple
    d: tuple
    kind: str
    labels: tuple
    typename: str | None = None
    affine_node: int | None = None

    @property
    def n(self):
        return len(self.a)

    def entry(self, i, j):
        """Cartan entry by generator label."""
        return self.a[self.labels.index(i)][self.labels.index(j)]

    def position(self, label):
        return self.labels.index(label)

    def finite_part(self):
        """The finite-type matrix left after deleting the affine node (labels 1..r)."""
        if self.kind != UNTWISTED_AFFINE:
            raise NotAffine("finite_part requires an untwisted affine matrix")
        keep = [i for i in range(self.n) if i != self.affine_node]
        sub = tuple(tuple(self.a[i][j] for j in keep) for i in keep)
        return validate(sub, labels=tuple(range(1, len(keep) + 1)))

    def is_symmetric_after_d(self):
        n = self.n
        return all(
            self.d[i] * self.a[i][j] == self.d[j] * self.a[j][i]
            for i in range(n)
            for j in range(n)
        )

    def __str__(self):
        name = self.typename or self.kind
        body = "; ".join(" ".join(str(x) for x in row) for row in self.a)
        return "%s[%s]" % (name, body)


def _check_gcm_axioms(a):
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise NotGCM("matrix is not square")
        if a[i][i] != 2:
            raise NotGCM("diagonal entry a[%d][%d] = %d, expected 2" % (i, i, a[i][i]))
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise NotGCM("positive off-diagonal entry a[%d][%d] = %d" % (i, j, a[i][j]))
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise NotGCM("zero pattern is not symmetric at (%d, %d)" % (i, j))


def symmetrizer(a):
    """Minimal positive integer vector d with diag(d) * a symmetric.

    Solved per connected component of the nonzero pattern; each component is
    scaled to coprime positive integers, so the whole vector is primitive.
    """
    _check_gcm_axioms(a)
    n = len(a)
    vals = [None] * n
    for start in range(n):
        if vals[start] is not None:
            continue
        vals[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in range(n):
                if v == u or a[u][v] == 0:
                    continue
                # d_u * a[u][v] = d_v * a[v][u]
                ratio = Fraction(a[u][v], a[v][u])
                want = vals[u] * ratio
                if vals[v] is None:
                    vals[v] = want
                    component.append(v)
                    stack.append(v)
                elif vals[v] != want:
                    raise NotSymmetrizable("inconsistent cycle through nodes %d and %d" % (u, v))
        denom = 1
        for i in component:
            denom = denom * vals[i].denominator // gcd(denom, vals[i].denominator)
        nums = [int(vals[i] * denom) for i in component]
        g = 0
        for x in nums:
            g = gcd(g, x)
        for i, x in zip(component, nums):
            vals[i] = x // g
    return tuple(int(v) for v in vals)


def _det(a):
    """Exact determinant of an integer matrix."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if not m[r][col]:
                continue
            f = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    assert det.denominator == 1
    return int(det)


def _submatrix(a, keep):
    return tuple(tuple(a[i][j] for j in keep) for i in keep)


def _leading_minors_positive(a):
    return all(_det(_submatrix(a, range(k + 1))) > 0 for k in range(len(a)))


def _coroot_coords_raw(a, d, root):
    """Coroot coordinates k_i of a root over a finite matrix with symmetrizer d.

    h_root = sum_i k_i h_i with k_i = r_i (alpha_i, alpha_i) / (root, root);
    computed with the unnormalized form diag(d) * a, which has the same ratios.
    """
    n = len(a)
    norm = sum(
        root[i] * root[j] * d[i] * a[i][j] for i in range(n) for j in range(n)
    )
    coords = []
    for i in range(n):
        k = Fraction(root[i] * 2 * d[i], norm)
        if k.denominator != 1:
            raise ValueError("non-integer coroot coordinate")
        coords.append(int(k))
    return tuple(coords)


def _affine_node_matches(a, node):
    """Whether row/column `node` follows the extended-matrix pattern.

    Deleting the node must leave a finite-type matrix whose highest root theta
    satisfies a[node][j] = -alpha_j(h_theta) and a[j][node] = -theta(h_j).
    """
    n = len(a)
    keep = [i for i in range(n) if i != node]
    sub = _submatrix(a, keep)
    if not _leading_minors_positive(sub):
        return False
    try:
        theta = _closure.highest_root(sub)
        d_sub = symmetrizer(sub)
        ktheta = _coroot_coords_raw(sub, d_sub, theta)
    except (ValueError, RuntimeError, NotSymmetrizable):
        return False
    r = len(keep)
    for jj, j in enumerate(keep):
        want_row = -sum(ktheta[m] * sub[m][jj] for m in range(r))
        want_col = -sum(theta[m] * sub[jj][m] for m in range(r))
        if a[node][j] != want_row or a[j][node] != want_col:
            return False
    return True


def validate(a, labels=None):
    """Validate an integer matrix and classify it.

    Finite iff all leading principal minors are positive.  UntwistedAffine iff
    the determinant is 0, every proper principal submatrix is of finite type,
    and some node completes an extended finite matrix.  Everything else is
    Other.
    """
    a = tuple(tuple(int(x) for x in row) for row in a)
    _check_gcm_axioms(a)
    d = symmetrizer(a)
    n = len(a)
    if labels is None:
        labels = tuple(range(1, n + 1))
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise ValueError("labels must be %d distinct values" % n)

    if _leading_minors_positive(a):
        name = _match_finite_name(a)
        return CartanMatrix(a, d, FINITE, labels, typename=name)

    if _det(a) == 0 and all(
        _leading_minors_positive(_submatrix(a, [i for i in range(n) if i != k]))
        for k in range(n)
    ):
        for node in range(n):
            if _affine_node_matches(a, node):
                keep = [i for i in range(n) if i != node]
                name = _match_finite_name(_submatrix(a, keep))
                return CartanMatrix(
                    a,
                    d,
                    UNTWISTED_AFFINE,
                    labels,
                    typename=(name + "~") if name else None,
                    affine_node=node,
                )
    return CartanMatrix(a, d, OTHER, labels)


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

def _chain(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def _finite_preset_matrix(family, r):
    if family == "A" and r >= 1:
        return _chain(r)
    if family == "B" and r >= 2:
        m = _chain(r)
        m[r - 1][r - 2] = -2  # alpha_r short: a_{r,r-1} = -2, a_{r-1,r} = -1
        return m
    if family == "C" and r >= 1:
        m = _chain(r)
        if r >= 2:
            m[r - 2][r - 1] = -2  # alpha_r long: a_{r-1,r} = -2, a_{r,r-1} = -1
        return m
    if family == "D" and r >= 3:
        m = _chain(r)
        m[r - 1][r - 2] = m[r - 2][r - 1] = 0
        m[r - 1][r - 3] = m[r - 3][r - 1] = -1
        return m
    if family == "E" and r in (6, 7, 8):
        # Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4
        m = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, r)]
        for u, v in edges:
            m[u - 1][v - 1] = m[v - 1][u - 1] = -1
        return m
    if family == "F" and r == 4:
        m = _chain(4)
        m[2][1] = -2  # alpha_3, alpha_4 short
        return m
    if family == "G" and r == 2:
        return [[2, -3], [-1, 2]]
    raise UnknownPreset("no finite preset %s%d" % (family, r))


def _affine_extension(fin):
    """Extend a finite matrix by the standard affine node, placed first."""
    theta = _closure.highest_root(fin)
    d = symmetrizer(fin)
    ktheta = _coroot_coords_raw(fin, d, theta)
    r = len(fin)
    row0 = [2] + [-sum(ktheta[m] * fin[m][j] for m in range(r)) for j in range(r)]
    out = [row0]
    for j in range(r):
        col0 = -sum(theta[m] * fin[j][m] for m in range(r))
        out.append([col0] + list(fin[j]))
    return tuple(tuple(x) for x in out)


_PRESET_RE = re.compile(r"^([A-G])(\d+)(~?)$")


@lru_cache(maxsize=None)
def preset(name):
    """Standard Cartan matrix by name, e.g. "A2", "C3", "G2", "A1~", "C2~"."""
    m = _PRESET_RE.match(name.strip())
    if not m:
        raise UnknownPreset("cannot parse preset name %r" % name)
    family, rank, affine = m.group(1), int(m.group(2)), m.group(3) == "~"
    fin = _finite_preset_matrix(family, rank)
    if not affine:
        c = validate(fin, labels=tuple(range(1, rank + 1)))
        assert c.kind == FINITE
        return c
    if family == "A" and rank == 1:
        ext = ((2, -2), (-2, 2))
    else:
        ext = _affine_extension(fin)
    c = validate(ext, labels=tuple(range(rank + 1)))
    assert c.kind == UNTWISTED_AFFINE and c.affine_node == 0
    return c


def preset_names(max_rank=8):
    """All supported preset names up to a rank bound (both finite and affine)."""
    names = []
    for family, lo in (("A", 1), ("B", 2), ("C", 1), ("D", 4), ("G", 2), ("F", 4)):
        hi = {"G": 2, "F": 4}.get(family, max_rank)
        lo_ = {"G": 2, "F": 4}.get(family, lo)
        for r in range(lo_, hi + 1):
            names.append("%s%d" % (family, r))
            names.append("%s%d~" % (family, r))
    for r in (6, 7, 8):
        if r <= max_rank:
            names.append("E%d" % r)
            names.append("E%d~" % r)
    return names


# ---------------------------------------------------------------------------
# type recognition (naming only; classification never depends on it)
# ---------------------------------------------------------------------------

def _node_invariant(a, i):
    n = len(a)
    return tuple(sorted((a[i][j], a[j][i]) for j in range(n) if j != i and a[i][j] != 0))


def _perm_match(a, b):
    """A permutation sigma with a[sigma[i]][sigma[j]] == b[i][j], else None."""
    n = len(a)
    if len(b) != n:
        return None
    inv_a = [_node_invariant(a, i) for i in range(n)]
    inv_b = [_node_invariant(b, i) for i in range(n)]
    if sorted(inv_a) != sorted(inv_b):
        return None
    sigma = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for cand in range(n):
            if used[cand] or inv_a[cand] != inv_b[i]:
                continue
            ok = True
            for j in range(i):
                if a[cand][sigma[j]] != b[i][j] or a[sigma[j]][cand] != b[j][i]:
                    ok = False
                    break
            if ok:
                sigma[i] = cand
                used[cand] = True
                if extend(i + 1):
                    return True
                used[cand] = False
        return False

    return tuple(sigma) if extend(0) else None


def _finite_candidates(n):
    for family, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        if n >= lo:
            yield family, n
    if n in (6, 7, 8):
        yield "E", n
    if n == 4:
        yield "F", 4
    if n == 2:
        yield "G", 2


def _match_finite_name(a):
    n = len(a)
    candidates = []
    for family, r in _finite_candidates(n):
        try:
            candidates.append(("%s%d" % (family, r), _finite_preset_matrix(family, r)))
        except UnknownPreset:
            continue
    # exact match first so that e.g. B2 and C2 (isomorphic diagrams) keep
    # their own names; isomorphism search only for renumbered input
    for name, cand in candidates:
        if a == tuple(tuple(row) for row in cand):
            return name
    for name, cand in candidates:
        if _perm_match(a, cand) is not None:
            return name
    return None


def parse_matrix_text(text):
    """Integer matrix from text: one row per line, whitespace-separated."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split()])
    if not rows:
        raise ValueError("no matrix rows found")
    return rows
