import json
from fractions import Fraction

import pytest

from nkoszul import jsonio
from nkoszul.algebras import antisymmetrizer, polynomial, quantum_space
from nkoszul.freealg import Tensor
from nkoszul.scalar import QQ
from nkoszul.series import INTS, MultiSeries, UniSeries


def test_scalar_strings():
    assert jsonio.scalar_to_str(QQ, Fraction(3, 4)) == "3/4"
    assert jsonio.scalar_to_str(QQ, Fraction(-5)) == "-5"
    assert jsonio.scalar_from_str(QQ, "7/2") == Fraction(7, 2)
    assert jsonio.scalar_from_str(QQ, "7") == Fraction(7)


def test_tensor_roundtrip():
    t = Tensor(2, 2, {(0, 1): Fraction(1, 3), (1, 0): Fraction(-2)})
    obj = jsonio.tensor_to_obj(t, QQ)
    assert obj == {
        "grade": 2,
        "terms": [
            {"coeff": "1/3", "word": [0, 1]},
            {"coeff": "-2", "word": [1, 0]},
        ],
    }
    assert jsonio.tensor_from_obj(obj, 2, QQ) == t


def test_tensor_duplicate_word_rejected():
    obj = {"grade": 1, "terms": [{"coeff": "1", "word": [0]}, {"coeff": "2", "word": [0]}]}
    with pytest.raises(ValueError):
        jsonio.tensor_from_obj(obj, 2, QQ)


def test_algebra_roundtrip_rational():
    A = antisymmetrizer(3, 3)
    obj = jsonio.algebra_to_obj(A)
    assert json.dumps(obj)  # serializable
    assert "parameters" not in obj
    back = jsonio.algebra_from_obj(obj)
    assert back.n == 3 and back.N == 3
    assert back.ideal_component(3) == A.ideal_component(3)


def test_algebra_roundtrip_parametric():
    Q = quantum_space(2)
    obj = jsonio.algebra_to_obj(Q)
    assert obj["parameters"] == ["q12"]
    back = jsonio.algebra_from_obj(obj)
    assert back.field == Q.field
    assert back.ideal_component(2).dim == 1
    assert back.dim_component(3) == 4


def test_matrix_roundtrip():
    Z = [[Fraction(1, 2), Fraction(0)], [Fraction(-3), Fraction(7, 9)]]
    obj = jsonio.matrix_to_obj(Z)
    assert obj == {"n": 2, "entries": [["1/2", "0"], ["-3", "7/9"]]}
    assert jsonio.matrix_from_obj(obj) == Z
    with pytest.raises(ValueError):
        jsonio.matrix_from_obj({"n": 2, "entries": [["1"]]})


def test_character_element_schema():
    from nkoszul.manin import build_end, chi_A

    B = build_end(polynomial(2))
    obj = jsonio.character_to_obj(chi_A(B, 1), QQ)
    assert obj == {
        "degree": 1,
        "coordinates": [
            {"word": [0], "coeff": "1"},
            {"word": [3], "coeff": "1"},
        ],
    }


def test_series_objects():
    s = UniSeries(INTS, 3, [1, -2, 0, 5])
    assert jsonio.uniseries_to_obj(s) == [
        {"degree": 0, "coeff": "1"},
        {"degree": 1, "coeff": "-2"},
        {"degree": 2, "coeff": "0"},
        {"degree": 3, "coeff": "5"},
    ]
    m = MultiSeries(QQ, 2, 3, {(1, 0): Fraction(1, 2)})
    assert jsonio.multiseries_to_obj(m) == [
        {"exponents": [1, 0], "coeff": "1/2"}
    ]
