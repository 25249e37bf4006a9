import itertools
import random
from fractions import Fraction

import pytest

from freetoeplitz.freealg import AlgebraElement, Scalar, theta_word
from freetoeplitz.form import WeightSystem, parse_rational, parse_weight_config

from conftest import all_words, random_word


def test_weight_product_mode():
    ws = WeightSystem(2, mu=(1, 1))
    assert ws.weight((1, 2)) == 1
    ws = WeightSystem(2, mu=(2, 3))
    assert ws.weight((1, 2, 1)) == 12
    assert ws.weight(()) == 1


def test_weight_custom_mode():
    ws = WeightSystem.custom(2, {(1,): Fraction(2), (1, 2): Fraction(5)})
    assert ws.weight(()) == 1
    assert ws.weight((1, 2)) == 5
    with pytest.raises(ValueError, match="weight undefined"):
        ws.weight((2,))


def test_weight_positivity_enforced():
    with pytest.raises(ValueError):
        WeightSystem(1, mu=(0,))
    with pytest.raises(ValueError):
        WeightSystem.custom(1, {(1,): Fraction(-1)})


def test_form_words_known_values(ws2, ws23):
    # one factor survives: <t1, t1*t2*b2> = w(1,2)
    assert ws2.form_words((1,), (1, 2, -2)) == 1
    assert ws23.form_words((1,), (1, 2, -2)) == 6
    # two factors: w(1,2) * w(1)
    assert ws23.form_words((1,), (1, 2, -2, 1, -1)) == 12
    # index mismatch kills the delta
    assert ws2.form_words((1, -1), (2, -2)) == 0
    # opposite begins-with kinds
    assert ws2.form_words((1, -2), (-2, 1)) == 0


def test_form_words_dual_uses_same_weights(ws23):
    assert ws23.form_words((), (-1, 1)) == 2
    assert ws23.form_words((-1,), (-1,)) == 2
    assert ws23.form_words((-1, -2), (-1, -2)) == ws23.form_words((1, 2), (1, 2))


def test_form_sesquilinear(ws2):
    t1 = AlgebraElement.from_word((1,))
    t2 = AlgebraElement.from_word((2,))
    i = Scalar(0, 1)
    assert ws2.form(i * t1, t1) == Scalar(0, -1)
    assert ws2.form(t1 + t2, t1) == Scalar(1)
    assert ws2.form(t1, AlgebraElement.zero()) == Scalar(0)


def test_orthogonality_on_holomorphic_words():
    ws = WeightSystem(2, mu=(2, 3))
    idxs = [
        i
        for r in range(6)
        for i in itertools.product((1, 2), repeat=r)
    ]
    for i in idxs:
        for k in idxs:
            v = ws.form_words(theta_word(i), theta_word(k))
            assert v == (ws.weight(i) if i == k else 0)


def test_complex_symmetry_random():
    rnd = random.Random(42)
    ws = WeightSystem(3, mu=(2, 3, Fraction(1, 2)))
    for _ in range(1000):
        f = random_word(rnd, 3, 8)
        g = random_word(rnd, 3, 8)
        assert ws.form_words(f, g) == ws.form_words(g, f)
    from freetoeplitz.toeplitz import random_element

    for _ in range(300):
        a = random_element(rnd, 3)
        b = random_element(rnd, 3)
        assert ws.form(a, b).conjugate() == ws.form(b, a)


def test_positive_definite_on_holomorphic():
    rnd = random.Random(5)
    ws = WeightSystem(2, mu=(2, Fraction(1, 3)))
    from freetoeplitz.toeplitz import random_holomorphic

    for _ in range(200):
        p = random_holomorphic(rnd, 2)
        if p.is_zero():
            continue
        v = ws.form(p, p)
        assert v.im == 0 and v.re > 0


def test_star_shift_for_holomorphic_symbols(ws23):
    # <f1, f2 g> = <f1 g*, f2> for f1, f2 holomorphic and g in P or P*
    rnd = random.Random(9)
    from freetoeplitz.freealg import word_star

    for _ in range(400):
        f1 = random_word(rnd, 2, 5, holomorphic=True)
        f2 = random_word(rnd, 2, 5, holomorphic=True)
        g = random_word(rnd, 2, 4, holomorphic=True)
        if rnd.random() < 0.5:
            g = word_star(g)
        lhs = ws23.form_words(f1, f2 + g)
        rhs = ws23.form_words(f1 + word_star(g), f2)
        assert lhs == rhs


def test_normalized_basis_word():
    ws = WeightSystem(2, mu=(1, 1))
    nb = ws.normalized_basis_word((1, 2))
    assert nb.exact and nb.element == AlgebraElement.from_word((1, 2))

    ws = WeightSystem(2, mu=(4, 9))
    nb = ws.normalized_basis_word((1, 2))
    assert nb.exact
    assert nb.element == Scalar(Fraction(1, 6)) * AlgebraElement.from_word((1, 2))

    ws = WeightSystem(2, mu=(2, 1))
    nb = ws.normalized_basis_word((1,))
    assert not nb.exact
    assert nb.element == AlgebraElement.from_word((1,))
    assert nb.weight == 2


def test_recursion_depth_bound(ws2):
    # each factor consumes at least two letters, so the factor count is
    # bounded by the total length
    from freetoeplitz.kernel import form_factors

    for f in all_words(2, 4):
        for g in all_words(2, 4):
            factors = form_factors(f, g)
            if factors is not None:
                assert len(factors) <= len(f) + len(g) + 1


def test_parse_rational():
    assert parse_rational("3") == 3
    assert parse_rational("2/3") == Fraction(2, 3)
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("-2")


def test_parse_weight_config():
    assert parse_weight_config("mu = 1, 2/3, 5") == [1, Fraction(2, 3), 5]
    assert parse_weight_config("# comment\nmu = 2\n") == [2]
    with pytest.raises(ValueError):
        parse_weight_config("nu = 1")
    with pytest.raises(ValueError):
        parse_weight_config("")
