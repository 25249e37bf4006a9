"""Projection of the free *-algebra onto its holomorphic subalgebra.

``project_word`` uses the closed form: for a theta-initial word with run
decomposition (k, l, tail) the expansion over the orthonormal basis has
at most one surviving candidate, the prefix of k left over after the
reversed mid-run l is peeled off its end.  ``project_oracle`` evaluates
the defining basis sum by brute force and exists purely as an
independent cross-check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .freealg import AlgebraElement, Scalar, decompose, theta_word


def project_word(ws, g):
    """Projection of a single word, as a canonical element."""
    g = tuple(g)
    if not g:
        return AlgebraElement.one()
    if g[0] < 0:
        c = ws.form_words((), g)
        if not c:
            return AlgebraElement.zero()
        return AlgebraElement.from_word((), Scalar(c))
    d = decompose(g)
    k, l = d.head, d.mid
    t, u = len(k), len(l)
    if t < u or k[t - u:] != tuple(reversed(l)):
        return AlgebraElement.zero()
    i = k[: t - u]
    c = ws.form_words((), d.tail)
    if not c:
        return AlgebraElement.zero()
    coeff = ws.weight(k) / ws.weight(i) * c
    return AlgebraElement.from_word(theta_word(i), Scalar(coeff))


def project(ws, a):
    """Linear extension of project_word; idempotent with holomorphic range."""
    out = AlgebraElement.zero()
    for w, c in a.items():
        p = project_word(ws, w)
        if p:
            out = out + c * p
    return out


def project_oracle(ws, g, slack=0):
    """Brute-force expansion over all candidate multi-indices.

    Enumerates every multi-index of length up to len(g) + slack and
    accumulates (<theta_i, g> / w(i)) * theta_i; candidates longer than
    the word itself always pair to zero because the pairing consumes at
    least one letter of g per factor entry, so slack=0 is exhaustive.
    Exponential in len(g); use only at desk scale.
    """
    g = tuple(g)
    out = AlgebraElement.zero()
    n = ws.n
    for r in range(len(g) + slack + 1):
        for i in itertools.product(range(1, n + 1), repeat=r):
            v = ws.form_words(theta_word(i), g)
            if v:
                coeff = Scalar(Fraction(v) / ws.weight(i))
                out = out + AlgebraElement.from_word(theta_word(i), coeff)
    return out
