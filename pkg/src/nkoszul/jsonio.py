"""JSON schemas for the exchangeable objects.

Rationals serialize as "p/q" (or "p" when the denominator is 1); parameter
fractions serialize as their canonical string form.  Tensors carry grade and
a term list; algebras carry label, n, N and relations (plus the parameter
names when the coefficient field has any); matrices carry n and a dense
entry grid; series are lists of degree/exponents records.
"""

from __future__ import annotations

from .freealg import Tensor
from .homog import AlgebraPresentation
from .scalar import QQ, ParameterField
from .series import MultiSeries, UniSeries


def scalar_to_str(field, value) -> str:
    return field.format(value)


def scalar_from_str(field, text: str):
    return field.parse(text)


def tensor_to_obj(t: Tensor, field) -> dict:
    terms = [
        {"coeff": scalar_to_str(field, c), "word": list(w)}
        for w, c in sorted(t.terms.items())
    ]
    return {"grade": t.grade, "terms": terms}


def tensor_from_obj(obj: dict, n: int, field) -> Tensor:
    terms = {}
    for item in obj["terms"]:
        word = tuple(item["word"])
        coeff = scalar_from_str(field, item["coeff"])
        if word in terms:
            raise ValueError(f"duplicate word {word} in tensor JSON")
        terms[word] = coeff
    return Tensor(n, obj["grade"], terms)


def algebra_to_obj(A: AlgebraPresentation) -> dict:
    obj = {
        "label": A.label,
        "n": A.n,
        "N": A.N,
        "relations": [tensor_to_obj(r, A.field) for r in A.relations],
    }
    if A.field.parameters:
        obj["parameters"] = list(A.field.parameters)
    return obj


def algebra_from_obj(obj: dict) -> AlgebraPresentation:
    params = obj.get("parameters") or []
    field = ParameterField(params) if params else QQ
    n = obj["n"]
    rels = [tensor_from_obj(r, n, field) for r in obj["relations"]]
    return AlgebraPresentation(n, obj["N"], rels, label=obj.get("label", ""), field=field)


def matrix_to_obj(Z, field=QQ) -> dict:
    return {
        "n": len(Z),
        "entries": [[scalar_to_str(field, v) for v in row] for row in Z],
    }


def matrix_from_obj(obj: dict, field=QQ):
    n = obj["n"]
    entries = obj["entries"]
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ValueError("matrix entries do not form an n×n grid")
    return [[scalar_from_str(field, v) for v in row] for row in entries]


def character_to_obj(c, field) -> dict:
    """A character element: degree plus coordinates over the envelope's
    normal basis, keyed by words of flat z-indices."""
    return {
        "degree": c.degree,
        "coordinates": [
            {"word": list(w), "coeff": scalar_to_str(field, v)}
            for w, v in sorted(c.value.coords.items())
        ],
    }


def uniseries_to_obj(s: UniSeries, formatter=str) -> list:
    return [{"degree": d, "coeff": formatter(c)} for d, c in enumerate(s.coeffs)]


def multiseries_to_obj(s: MultiSeries) -> list:
    return [
        {"exponents": list(e), "coeff": scalar_to_str(s.field, c)}
        for e, c in sorted(s.terms.items())
    ]
