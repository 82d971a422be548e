import random
from fractions import Fraction

import pytest

from nkoszul.freealg import (
    Tensor,
    all_words,
    concat,
    index_word,
    pair,
    shuffle_pairs,
    word_index,
    z_index,
)


def test_word_index_roundtrip():
    for n in (1, 2, 3, 5):
        for k in range(4):
            words = list(all_words(n, k))
            assert len(words) == n**k
            assert words == sorted(words)  # lex order
            for i, w in enumerate(words):
                assert word_index(w, n) == i
                assert index_word(i, k, n) == w


def test_concat_words():
    a = Tensor.from_word(2, (0,), Fraction(1))
    b = Tensor.from_word(2, (1,), Fraction(1))
    assert concat(a, b).terms == {(0, 1): Fraction(1)}


def test_concat_bilinear():
    x1 = Tensor.from_word(2, (0,), Fraction(1))
    x2 = Tensor.from_word(2, (1,), Fraction(1))
    left = concat(x1 - x2, x1)
    assert left.terms == {(0, 0): Fraction(1), (1, 0): Fraction(-1)}


def _random_tensor(rng, n, k):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        w = tuple(rng.randrange(n) for _ in range(k))
        terms[w] = Fraction(rng.randint(-3, 3))
    return Tensor(n, k, terms)


def test_concat_associative_random():
    rng = random.Random(7)
    for _ in range(30):
        a = _random_tensor(rng, 3, 2)
        b = _random_tensor(rng, 3, 1)
        c = _random_tensor(rng, 3, 2)
        assert concat(a, concat(b, c)) == concat(concat(a, b), c)


def test_pair_examples():
    xi = Tensor.from_word(2, (0, 1), Fraction(1))
    assert pair(xi, Tensor.from_word(2, (0, 1), Fraction(1))) == 1
    assert pair(xi, Tensor.from_word(2, (1, 0), Fraction(1))) == 0


def test_pair_antisymmetrizer_kills_symmetric():
    # n=3, k=2: the antisymmetric dual tensor pairs to zero with any
    # symmetric tensor; expected value written out by direct expansion
    n = 3
    xi = Tensor(n, 2, {(0, 1): Fraction(1), (1, 0): Fraction(-1)})
    sym = Tensor(n, 2, {(0, 1): Fraction(5), (1, 0): Fraction(5), (2, 2): Fraction(1)})
    # direct expansion: 1*5 + (-1)*5 + 0 = 0
    assert pair(xi, sym) == 0


def test_pair_perfect_on_word_basis():
    n, k = 2, 3
    for u in all_words(n, k):
        for v in all_words(n, k):
            got = pair(Tensor.from_word(n, u, Fraction(1)), Tensor.from_word(n, v, Fraction(1)))
            assert got == (1 if u == v else 0)


def test_pair_grade_mismatch():
    with pytest.raises(ValueError):
        pair(Tensor.from_word(2, (0,), Fraction(1)), Tensor.from_word(2, (0, 1), Fraction(1)))


def test_shuffle_pairs_flat_index():
    # N=1: dual letter j=0 (x^1), vector letter i=1 (x_2), n=2 -> z_2^1 = 1*2+0
    xi = Tensor.from_word(2, (0,), Fraction(1))
    v = Tensor.from_word(2, (1,), Fraction(1))
    out = shuffle_pairs(xi, v)
    assert out.n == 4
    assert out.terms == {(z_index(1, 0, 2),): Fraction(1)}
    assert z_index(1, 0, 2) == 2


def test_shuffle_pairs_words():
    # N=2, n=2: (x^1⊗x^2)⊗(x_1⊗x_2) -> (z_1^1, z_2^2)
    xi = Tensor.from_word(2, (0, 1), Fraction(1))
    v = Tensor.from_word(2, (0, 1), Fraction(1))
    out = shuffle_pairs(xi, v)
    assert out.terms == {(z_index(0, 0, 2), z_index(1, 1, 2)): Fraction(1)}


def test_shuffle_pairs_linear():
    rng = random.Random(8)
    for _ in range(20):
        x1 = _random_tensor(rng, 2, 2)
        x2 = _random_tensor(rng, 2, 2)
        v = _random_tensor(rng, 2, 2)
        assert shuffle_pairs(x1 + x2, v) == shuffle_pairs(x1, v) + shuffle_pairs(x2, v)


def test_shuffle_pairs_injective_on_words():
    n, N = 2, 2
    seen = {}
    for jw in all_words(n, N):
        for iw in all_words(n, N):
            out = shuffle_pairs(
                Tensor.from_word(n, jw, Fraction(1)), Tensor.from_word(n, iw, Fraction(1))
            )
            [word] = out.terms
            assert word not in seen
            seen[word] = (jw, iw)


def test_tensor_vec_roundtrip():
    rng = random.Random(9)
    for _ in range(10):
        t = _random_tensor(rng, 3, 3)
        assert Tensor.from_vec(3, 3, t.to_vec()) == t
