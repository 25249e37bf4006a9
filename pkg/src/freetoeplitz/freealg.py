"""Words, exact scalars and elements of the free *-algebra on 2n generators.

A word is a tuple of nonzero integers: ``+j`` encodes the generator
``t_j`` (theta_j) and ``-j`` its conjugate ``b_j`` (theta-bar_j).  The
empty tuple is the identity word.  A multi-index is a tuple of positive
generator indices; ``theta_word(i)`` is the holomorphic word it labels.

All values here are immutable and all operations are pure functions, so
everything is safe to share between threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class Kind(enum.Enum):
    THETA = "theta"
    BAR = "bar"
    BOTH = "both"


def begins_with(word):
    """Kind of the first letter; the empty word begins with both kinds."""
    if not word:
        return Kind.BOTH
    return Kind.THETA if word[0] > 0 else Kind.BAR


def swap_alphabet(word):
    """Letter-kind involution: t_j <-> b_j, index and order preserved."""
    return tuple(-c for c in word)


def word_star(word):
    """Reverse the word and flip every letter's kind."""
    return tuple(-c for c in reversed(word))


def theta_word(indices):
    """Holomorphic word t_{i1}...t_{ir} for a multi-index."""
    return tuple(int(j) for j in indices)


def bar_word(indices):
    return tuple(-int(j) for j in indices)


def word_multi_index(word):
    """Multi-index of an all-theta word.

    Raises ValueError if the word contains a bar letter.
    """
    if any(c < 0 for c in word):
        raise ValueError("word is not holomorphic: %r" % (word,))
    return tuple(word)


def is_holomorphic_word(word):
    return all(c > 0 for c in word)


def check_word(word, n):
    """Validate letter indices against the ambient generator count."""
    for c in word:
        if c == 0 or abs(c) > n:
            raise ValueError("generator index out of range: %d (n=%d)" % (c, n))
    return tuple(word)


@dataclass(frozen=True)
class Decomposition:
    """Canonical run decomposition of a nonempty word.

    ``head`` is the maximal leading run of the first letter's kind and
    ``mid`` the maximal following run of the opposite kind, both recorded
    as multi-indices; ``tail`` is the remaining word.  By maximality the
    tail is empty or begins with the same kind as the head, and an empty
    ``mid`` forces an empty tail.
    """

    kind: Kind
    head: tuple
    mid: tuple
    tail: tuple

    def reassemble(self):
        s = 1 if self.kind is Kind.THETA else -1
        return (
            tuple(s * j for j in self.head)
            + tuple(-s * j for j in self.mid)
            + self.tail
        )


def decompose(word):
    """Unique head-run / opposite-run / tail representation of a word."""
    if not word:
        raise ValueError("cannot decompose identity")
    s = 1 if word[0] > 0 else -1
    m = len(word)
    p = 0
    while p < m and word[p] * s > 0:
        p += 1
    q = p
    while q < m and word[q] * s < 0:
        q += 1
    head = tuple(word[t] * s for t in range(p))
    mid = tuple(-word[t] * s for t in range(p, q))
    return Decomposition(
        Kind.THETA if s > 0 else Kind.BAR, head, mid, word[q:]
    )


class Scalar:
    """Exact Gaussian-rational number re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other)
        return None

    def conjugate(self):
        return Scalar(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return "Scalar(%s, %s)" % (self.re, self.im)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


class AlgebraElement:
    """Finite linear combination of words with Gaussian-rational scalars.

    Stored zero-free, so equality of elements is equality of the
    underlying term dictionaries.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, Scalar):
                    c = Scalar(c)
                if w in clean:
                    c = clean[w] + c
                if c.is_zero():
                    clean.pop(w, None)
                else:
                    clean[w] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def from_word(cls, word, coeff=ONE):
        return cls({tuple(word): coeff})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): ONE})

    def items(self):
        return self.terms.items()

    def coefficient(self, word):
        return self.terms.get(tuple(word), ZERO)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_holomorphic(self):
        return all(is_holomorphic_word(w) for w in self.terms)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return AlgebraElement(out)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) - c
        return AlgebraElement(out)

    def __neg__(self):
        return AlgebraElement({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            out = {}
            for wa, ca in self.terms.items():
                for wb, cb in other.terms.items():
                    w = wa + wb
                    c = ca * cb
                    out[w] = out.get(w, ZERO) + c
            return AlgebraElement(out)
        c = Scalar._coerce(other)
        if c is None:
            return NotImplemented
        return AlgebraElement({w: t * c for w, t in self.terms.items()})

    def __rmul__(self, other):
        c = Scalar._coerce(other)
        if c is None:
            return NotImplemented
        return AlgebraElement({w: c * t for w, t in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a nonnegative integer")
        out = AlgebraElement.one()
        for _ in range(k):
            out = out * self
        return out

    def star(self):
        """Anti-linear, anti-multiplicative conjugation."""
        return AlgebraElement(
            {word_star(w): c.conjugate() for w, c in self.terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "AlgebraElement(0)"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            bits.append("%r: %r" % (w, self.terms[w]))
        return "AlgebraElement({%s})" % ", ".join(bits)


def star(a):
    return a.star()


def multiply(a, b):
    return a * b


class FreeAlgebra:
    """Ambient algebra context: fixes the generator count n and validates
    letter indices on construction of words and elements."""

    def __init__(self, n):
        if not isinstance(n, int) or n < 1:
            raise ValueError("generator count must be a positive integer")
        self.n = n

    def theta(self, j):
        self._check_index(j)
        return AlgebraElement.from_word((j,))

    def bar(self, j):
        self._check_index(j)
        return AlgebraElement.from_word((-j,))

    def one(self):
        return AlgebraElement.one()

    def zero(self):
        return AlgebraElement.zero()

    def word(self, letters):
        return check_word(letters, self.n)

    def element(self, terms):
        for w in terms:
            check_word(w, self.n)
        return AlgebraElement(terms)

    def _check_index(self, j):
        if not 1 <= j <= self.n:
            raise ValueError(
                "generator index out of range: %d (n=%d)" % (j, self.n)
            )
