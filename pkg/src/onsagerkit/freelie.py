"""Free Lie algebra over the rationals in the Lyndon basis.

Generators carry integer labels (any distinct integers; finite realizations
use 1..n, affine ones 0..r).  Words are label tuples; a word is Lyndon when
it is strictly smaller than each of its proper suffixes.  Normal forms are
computed by expanding bracketings in the free associative algebra and peeling
off Lyndon leading terms: the expansion of the standard bracketing of a
Lyndon word w is w plus lexicographically larger words of the same length,
which makes the extraction triangular and canonical.
"""

from __future__ import annotations

from fractions import Fraction


class ParseError(ValueError):
    """Bracket-expression syntax error; `pos` is the byte offset."""

    def __init__(self, message, pos):
        super().__init__("%s (at offset %d)" % (message, pos))
        self.pos = pos


class UnbalancedBracketError(ParseError):
    pass


class BracketExpr:
    """Binary bracket tree; leaves hold generator labels."""

    __slots__ = ("label", "left", "right")

    def __init__(self, label=None, left=None, right=None):
        if (label is None) == (left is None or right is None):
            raise ValueError("either a label or both children")
        self.label = label
        self.left = left
        self.right = right

    @classmethod
    def leaf(cls, label):
        return cls(label=int(label))

    @classmethod
    def node(cls, left, right):
        return cls(left=left, right=right)

    @property
    def is_leaf(self):
        return self.label is not None

    def degree(self):
        if self.is_leaf:
            return 1
        return self.left.degree() + self.right.degree()

    def labels(self):
        if self.is_leaf:
            return {self.label}
        return self.left.labels() | self.right.labels()

    def __eq__(self, other):
        if not isinstance(other, BracketExpr):
            return NotImplemented
        if self.is_leaf != other.is_leaf:
            return False
        if self.is_leaf:
            return self.label == other.label
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        if self.is_leaf:
            return hash(("leaf", self.label))
        return hash(("node", self.left, self.right))

    def __repr__(self):
        if self.is_leaf:
            return "B%d" % self.label
        return "[%r,%r]" % (self.left, self.right)


def ad_power(i, j, s):
    """(ad B_i)^s B_j as a BracketExpr."""
    expr = BracketExpr.leaf(j)
    for _ in range(s):
        expr = BracketExpr.node(BracketExpr.leaf(i), expr)
    return expr


def parse_bracket(text) -> BracketExpr:
    """Parse "B<nat>" | "[" expr "," expr "]" with optional whitespace."""

    def skip_ws(pos):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        return pos

    def parse_expr(pos):
        pos = skip_ws(pos)
        if pos >= len(text):
            raise UnbalancedBracketError("unexpected end of input", pos)
        ch = text[pos]
        if ch == "B":
            start = pos + 1
            end = start
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == start:
                raise ParseError("expected digits after 'B'", start)
            return BracketExpr.leaf(int(text[start:end])), end
        if ch == "[":
            left, pos = parse_expr(pos + 1)
            pos = skip_ws(pos)
            if pos >= len(text) or text[pos] != ",":
                raise ParseError("expected ','", pos)
            right, pos = parse_expr(pos + 1)
            pos = skip_ws(pos)
            if pos >= len(text) or text[pos] != "]":
                raise UnbalancedBracketError("expected ']'", pos)
            return BracketExpr.node(left, right), pos + 1
        if ch == "]":
            raise UnbalancedBracketError("unmatched ']'", pos)
        raise ParseError("expected 'B<n>' or '['", pos)

    expr, pos = parse_expr(0)
    pos = skip_ws(pos)
    if pos != len(text):
        if text[pos] == "]":
            raise UnbalancedBracketError("unmatched ']'", pos)
        raise ParseError("trailing input", pos)
    return expr


# ---------------------------------------------------------------------------
# Lyndon words
# ---------------------------------------------------------------------------

def is_lyndon(word):
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def lyndon_words(labels, length):
    """All Lyndon words of the given length over the sorted label alphabet
    (Duval's generation)."""
    alphabet = sorted(set(labels))
    k = len(alphabet)
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == length:
            out.append(tuple(alphabet[c] for c in w))
        while len(w) < length:
            w.append(w[-m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def standard_factorization(word):
    """(u, v) with word = u + v and v the longest proper Lyndon suffix."""
    assert len(word) >= 2
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError("not factorizable; %r is not Lyndon" % (word,))


def lyndon_bracketing(word) -> BracketExpr:
    """Standard bracketing of a Lyndon word."""
    if len(word) == 1:
        return BracketExpr.leaf(word[0])
    u, v = standard_factorization(word)
    return BracketExpr.node(lyndon_bracketing(u), lyndon_bracketing(v))


# Memo of word expansions.  Entries are never mutated after insertion and
# recomputation is deterministic, so concurrent readers are safe.
_EXPAND_CACHE = {}


def _expand_lyndon(word):
    """Associative expansion (dict word -> int coeff) of the standard
    bracketing of a Lyndon word; memoized."""
    cached = _EXPAND_CACHE.get(word)
    if cached is not None:
        return cached
    if len(word) == 1:
        out = {word: 1}
    else:
        u, v = standard_factorization(word)
        out = _commutator(_expand_lyndon(u), _expand_lyndon(v))
    _EXPAND_CACHE[word] = out
    return out


def _concat_product(p, q):
    out = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            key = w1 + w2
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def _commutator(p, q):
    out = _concat_product(p, q)
    for key, c in _concat_product(q, p).items():
        s = out.get(key, 0) - c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _extract_lyndon(assoc):
    """Write an associative-algebra Lie element in the Lyndon basis.

    Repeatedly peels the (length, lex)-smallest word, which must be Lyndon
    for a genuine Lie element.
    """
    assoc = {w: Fraction(c) for w, c in assoc.items() if c}
    out = {}
    while assoc:
        w = min(assoc, key=lambda t: (len(t), t))
        assert is_lyndon(w), "leading word %r is not Lyndon: not a Lie element" % (w,)
        c = assoc[w]
        for word, k in _expand_lyndon(w).items():
            s = assoc.get(word, Fraction(0)) - c * k
            if s:
                assoc[word] = s
            else:
                assoc.pop(word, None)
        out[w] = c
    return out


class FreeLieElement:
    """Exact-rational combination of Lyndon basis words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        store = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    store[tuple(w)] = c
        self.terms = store

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def generator(cls, label):
        return cls({(int(label),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    def degree_component(self, d):
        return FreeLieElement({w: c for w, c in self.terms.items() if len(w) == d})

    def __eq__(self, other):
        if not isinstance(other, FreeLieElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return FreeLieElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return FreeLieElement()
        return FreeLieElement({w: scalar * c for w, c in self.terms.items()})

    __mul__ = __rmul__

    def _assoc(self):
        out = {}
        for w, c in self.terms.items():
            for word, k in _expand_lyndon(w).items():
                s = out.get(word, Fraction(0)) + c * k
                if s:
                    out[word] = s
                else:
                    out.pop(word, None)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            c = self.terms[w]
            word = ".".join(str(x) for x in w)
            if c == 1:
                parts.append("+(%s)" % word)
            elif c == -1:
                parts.append("-(%s)" % word)
            else:
                sign = "+" if c > 0 else "-"
                parts.append("%s%s*(%s)" % (sign, abs(c), word))
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    __repr__ = __str__


def to_lyndon(expr: BracketExpr) -> FreeLieElement:
    """Image of a bracket expression in the Lyndon basis."""

    def expand(e):
        if e.is_leaf:
            return {(e.label,): 1}
        return _commutator(expand(e.left), expand(e.right))

    return FreeLieElement(_extract_lyndon(expand(expr)))


def lie_bracket(x: FreeLieElement, y: FreeLieElement) -> FreeLieElement:
    """Bilinear bracket, result in Lyndon normal form."""
    return FreeLieElement(_extract_lyndon(_commutator(x._assoc(), y._assoc())))


def _mobius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(n, d):
    """Dimension of the degree-d component of the free Lie algebra on n
    generators: (1/d) sum_{e | d} mu(e) n^(d/e)."""
    assert n >= 1 and d >= 1
    total = sum(_mobius(e) * n ** (d // e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d
