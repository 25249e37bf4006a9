"""Toeplitz operators, ladder operators and the property checkers.

An operator is represented by its symbol; its action on a holomorphic
element phi is the projection of phi times the symbol.  The checkers
verify (or exhibit the failure of) the adjoint and star-compatibility
identities, exactly, with seeded reproducible sampling where sampling is
involved.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .expr import format_element
from .freealg import AlgebraElement, Scalar, theta_word, word_star
from .projection import project


class ToeplitzOperator:
    """Right-symbol Toeplitz operator phi -> P(phi * symbol)."""

    def __init__(self, symbol, weights):
        self.symbol = symbol
        self.weights = weights

    def apply(self, phi):
        if not phi.is_holomorphic():
            raise ValueError("argument must lie in the holomorphic subalgebra")
        return project(self.weights, phi * self.symbol)

    __call__ = apply


def creation(ws, j, phi):
    """Append the j-th holomorphic generator; equals T_{t_j}."""
    _check_index(ws, j)
    op = ToeplitzOperator(AlgebraElement.from_word((j,)), ws)
    return op.apply(phi)


def annihilation(ws, j, phi):
    """Strip a trailing t_j with its weight ratio; equals T_{b_j}."""
    _check_index(ws, j)
    op = ToeplitzOperator(AlgebraElement.from_word((-j,)), ws)
    return op.apply(phi)


def commutator_apply(ws, g, h, phi):
    """T_g T_h phi - T_h T_g phi."""
    tg = ToeplitzOperator(g, ws)
    th = ToeplitzOperator(h, ws)
    return tg.apply(th.apply(phi)) - th.apply(tg.apply(phi))


def _check_index(ws, j):
    if not 1 <= j <= ws.n:
        raise ValueError("generator index out of range: %d (n=%d)" % (j, ws.n))


@dataclass(frozen=True)
class AdjointViolation:
    f1: AlgebraElement
    f2: AlgebraElement
    lhs: Scalar
    rhs: Scalar


@dataclass
class AdjointReport:
    symbol: AlgebraElement
    seed: int
    trials: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def format(self):
        """One violation per line: f1 <TAB> f2 <TAB> lhs <TAB> rhs."""
        lines = []
        for v in self.violations:
            lines.append(
                "\t".join(
                    (
                        format_element(v.f1),
                        format_element(v.f2),
                        _scalar_text(v.lhs),
                        _scalar_text(v.rhs),
                    )
                )
            )
        return "\n".join(lines)


def _scalar_text(c):
    from .expr import format_scalar

    return format_scalar(c)


# small pool of exact coefficients for sampled elements
_COEFF_POOL = (
    Scalar(1),
    Scalar(-1),
    Scalar(2),
    Scalar(Fraction(1, 2)),
    Scalar(0, 1),
    Scalar(0, -1),
    Scalar(1, 1),
    Scalar(Fraction(-1, 3), Fraction(1, 2)),
)


def random_holomorphic(rnd, n, max_terms=4, max_len=6):
    """Seeded random element of the holomorphic subalgebra."""
    terms = {}
    for _ in range(rnd.randint(1, max_terms)):
        length = rnd.randint(0, max_len)
        w = tuple(rnd.randint(1, n) for _ in range(length))
        c = rnd.choice(_COEFF_POOL)
        terms[w] = terms.get(w, Scalar(0)) + c
    return AlgebraElement(terms)


def random_element(rnd, n, max_terms=4, max_len=6):
    """Seeded random element of the full algebra."""
    terms = {}
    for _ in range(rnd.randint(1, max_terms)):
        length = rnd.randint(0, max_len)
        w = tuple(
            rnd.choice((1, -1)) * rnd.randint(1, n) for _ in range(length)
        )
        c = rnd.choice(_COEFF_POOL)
        terms[w] = terms.get(w, Scalar(0)) + c
    return AlgebraElement(terms)


def check_adjoint(ws, g, trials=500, seed=0):
    """Sample <f1, T_g f2> against <T_{g*} f1, f2> on holomorphic pairs.

    For symbols in the holomorphic subalgebra or its conjugate the
    violation list must come back empty; for general symbols it may not.
    """
    rnd = random.Random(seed)
    tg = ToeplitzOperator(g, ws)
    tgs = ToeplitzOperator(g.star(), ws)
    report = AdjointReport(symbol=g, seed=seed, trials=trials)
    for _ in range(trials):
        f1 = random_holomorphic(rnd, ws.n)
        f2 = random_holomorphic(rnd, ws.n)
        lhs = ws.form(f1, tg.apply(f2))
        rhs = ws.form(tgs.apply(f1), f2)
        if lhs != rhs:
            report.violations.append(AdjointViolation(f1, f2, lhs, rhs))
    return report


class CounterexampleValues(NamedTuple):
    ce1_lhs: Fraction
    ce1_rhs: Fraction
    ce2_lhs: Fraction
    ce2_rhs: Fraction


def reproduce_counterexamples(ws):
    """The two star-compatibility failures, computed from the form.

    First: f1 = t1, f2 = t1*t2, g = b2*t1*b1 gives
    <f1, f2 g> = w(1,2) w(1) against <f1 g*, f2> = 0.  Second:
    f1 = f2 = t1, g = t2*b2 gives w(1,2) against 0.  Requires n >= 2.
    """
    if ws.n < 2:
        raise ValueError("counterexamples require n >= 2")
    g1 = (-2, 1, -1)
    ce1_lhs = ws.form_words((1,), (1, 2) + g1)
    ce1_rhs = ws.form_words((1,) + word_star(g1), (1, 2))
    g2 = (2, -2)
    ce2_lhs = ws.form_words((1,), (1,) + g2)
    ce2_rhs = ws.form_words((1,) + word_star((1,)), g2)
    return CounterexampleValues(ce1_lhs, ce1_rhs, ce2_lhs, ce2_rhs)


@dataclass(frozen=True)
class CompatibilityViolation:
    """Failure of one of the two star-compatibility identities.

    prop 1 is <f1, f2 g> = <f1 g*, f2>; prop 2 is
    <f1, f2 g> = <f1 f2*, g>.  f1 and f2 are holomorphic words, g an
    arbitrary word.
    """

    prop: int
    f1: tuple
    f2: tuple
    g: tuple
    lhs: Fraction
    rhs: Fraction


def _balance(word):
    return sum(1 if c > 0 else -1 for c in word)


def check_compatibility(n, max_len, ws):
    """Exhaustively test both identities on all words within max_len.

    A word pairing is nonzero only when the theta-excess of both sides
    matches, which for the triples here means len(f1) = len(f2) +
    balance(g); triples outside that class have every side zero and are
    skipped.
    """
    holo = [
        theta_word(i)
        for r in range(max_len + 1)
        for i in itertools.product(range(1, n + 1), repeat=r)
    ]
    letters = [c for j in range(1, n + 1) for c in (j, -j)]
    words = [
        w
        for r in range(max_len + 1)
        for w in itertools.product(letters, repeat=r)
    ]
    by_len = {}
    for f in holo:
        by_len.setdefault(len(f), []).append(f)
    violations = []
    for g in words:
        bal = _balance(g)
        gs = word_star(g)
        for f2 in holo:
            f1s = by_len.get(len(f2) + bal)
            if not f1s:
                continue
            for f1 in f1s:
                lhs = ws.form_words(f1, f2 + g)
                rhs1 = ws.form_words(f1 + gs, f2)
                if lhs != rhs1:
                    violations.append(
                        CompatibilityViolation(1, f1, f2, g, lhs, rhs1)
                    )
                rhs2 = ws.form_words(f1 + word_star(f2), g)
                if lhs != rhs2:
                    violations.append(
                        CompatibilityViolation(2, f1, f2, g, lhs, rhs2)
                    )
    return violations
