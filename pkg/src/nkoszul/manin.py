"""Manin's bialgebra end(A), the coaction, and the character-map identities.

end(A) is the N-homogeneous algebra on the n² generators z_i^j (flat index
i·n + j) with relation space R^⊥ ⊗ R, interleaved factor-wise.  A is a left
end(A)-comodule via δ(x_i) = Σ_j z_i^j ⊗ x_j, and so is every J_m; the
character of a comodule is the trace of its coaction, an element of end(A).
The coproduct Δ(z_i^j) = Σ_k z_i^k ⊗ z_k^j plays no computational role here
and is not implemented.

The product of the character series of A and the alternating character
series of the J spaces is the unit series whenever A is Koszul; applying
the counit z_i^j ↦ δ_ij coefficient-wise recovers the numeric
Hilbert-series duality.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .algebras import perm_sign, polynomial
from .freealg import Tensor, all_words, index_word, shuffle_pairs, word_index
from .homog import AlgebraClass, AlgebraPresentation
from .koszul import dual_koszul_subspace, nu
from .series import GradedRing, UniSeries


class ManinBialgebra:
    """The pair (A, end(A)); owns the graded caches of the envelope."""

    __slots__ = ("base", "env", "_ferm_convention")

    def __init__(self, base: AlgebraPresentation, env: AlgebraPresentation):
        self.base = base
        self.env = env
        self._ferm_convention = None

    def __repr__(self):
        return f"ManinBialgebra({self.base!r})"


def build_end(A: AlgebraPresentation) -> ManinBialgebra:
    """Construct end(A) = A(V*⊗V, R^⊥⊗R) from echelon bases of R^⊥ and R."""
    n = A.n
    r_span = A.ideal_component(A.N)
    r_basis = [Tensor.from_vec(n, A.N, dict(row)) for row in r_span.rows]
    perp_basis = A.dual().relations
    rels = [shuffle_pairs(xi, r) for xi in perp_basis for r in r_basis]
    env = AlgebraPresentation(
        n * n, A.N, rels, label=f"end({A.label or 'A'})", field=A.field
    )
    expected = len(perp_basis) * len(r_basis)
    if env.ideal_rank(A.N) != expected:
        raise RuntimeError(
            "relation space of end(A) has unexpected dimension; internal error"
        )
    return ManinBialgebra(A, env)


class CharacterElement:
    """χ of a comodule: a degree-k class in end(A)."""

    __slots__ = ("degree", "value")

    def __init__(self, degree: int, value: AlgebraClass):
        self.degree = degree
        self.value = value

    def __eq__(self, other):
        return (
            isinstance(other, CharacterElement)
            and self.degree == other.degree
            and self.value == other.value
        )

    def __repr__(self):
        return f"CharacterElement(deg={self.degree}, {self.value.coords!r})"


def coaction_on_A(B: ManinBialgebra, word):
    """δ on the class of a word: the list of (z-word class, x-word class)
    summands of δ(x_{i_1}...x_{i_k}) = Σ z_{i_1}^{j_1}...z_{i_k}^{j_k} ⊗
    x_{j_1}...x_{j_k}, both factors reduced."""
    n = B.base.n
    word = tuple(word)
    out = []
    for jw in all_words(n, len(word)):
        zword = tuple(i * n + j for i, j in zip(word, jw))
        out.append((B.env.class_of_word(zword), B.base.class_of_word(jw)))
    return out


def coaction_on_tensor(B: ManinBialgebra, t: Tensor):
    """δ(t) as a map {A normal word: end(A) class}; the well-definedness of
    the coaction means this is identically zero when t is a relation."""
    n = B.base.n
    acc = {}
    for w, cw in t.terms.items():
        for jw in all_words(n, t.grade):
            acls = B.base.class_of_word(jw)
            if not acls.coords:
                continue
            zword = tuple(i * n + j for i, j in zip(w, jw))
            zcls = B.env.class_of_word(zword)
            if not zcls.coords:
                continue
            for aw, ca in acls.coords.items():
                slot = acc.setdefault(aw, {})
                scale = cw * ca
                for zw, cz in zcls.coords.items():
                    cur = slot.get(zw)
                    upd = scale * cz if cur is None else cur + scale * cz
                    if upd:
                        slot[zw] = upd
                    elif cur is not None:
                        del slot[zw]
    return {
        aw: AlgebraClass(B.env, t.grade, coords)
        for aw, coords in acc.items()
        if any(coords.values())
    }


def coaction_on_J(B: ManinBialgebra, ell: int, verify: bool = False):
    """Coaction data on J_{ν(ℓ)}: for each pair of basis indices (a, b) the
    end(A)-class T_{ab} with δ(u_b) = Σ_a T_{ab} ⊗ u_a.

    With ``verify=True`` the membership δ(J) ⊆ end(A) ⊗ J is checked by
    reducing the full x-part against the echelon basis; this is the
    computational content of the comodule structure of the complex.
    """
    A, E = B.base, B.env
    n = A.n
    m = nu(A.N, ell)
    space = dual_koszul_subspace(A, m)
    pivot_words = [index_word(p, m, n) for p in space.pivots]
    # raw[b][w'] accumulates the end(A)-coordinates of the w' component
    table = {}
    raw = []
    for b, row in enumerate(space.rows):
        slots = {}
        for idx, c in row.items():
            w = index_word(idx, m, n)
            for jw in all_words(n, m):
                zword = tuple(i * n + j for i, j in zip(w, jw))
                zcls = E.class_of_word(zword)
                if not zcls.coords:
                    continue
                slot = slots.setdefault(jw, {})
                for zw, cz in zcls.coords.items():
                    cur = slot.get(zw)
                    upd = c * cz if cur is None else cur + c * cz
                    if upd:
                        slot[zw] = upd
                    elif cur is not None:
                        del slot[zw]
        raw.append(slots)
        for a, pw in enumerate(pivot_words):
            coords = slots.get(pw)
            if coords and any(coords.values()):
                table[(a, b)] = AlgebraClass(E, m, coords)
    if verify:
        for b, slots in enumerate(raw):
            for jw, coords in slots.items():
                residual = dict(coords)
                jidx = word_index(jw, n)
                for a, arow in enumerate(space.rows):
                    c = arow.get(jidx)
                    if not c:
                        continue
                    pw = pivot_words[a]
                    pcoords = slots.get(pw, {})
                    for zw, cz in pcoords.items():
                        cur = residual.get(zw)
                        upd = -c * cz if cur is None else cur - c * cz
                        if upd:
                            residual[zw] = upd
                        elif cur is not None:
                            del residual[zw]
                if any(residual.values()):
                    raise RuntimeError(
                        f"coaction does not preserve J_{m}; internal error"
                    )
    return table


def chi_A(B: ManinBialgebra, k: int) -> CharacterElement:
    """Character of A_k: trace of the coaction over the normal basis."""
    A, E = B.base, B.env
    n = A.n
    acc = {}
    for jw in all_words(n, k):
        acls = A.class_of_word(jw)
        for e, ce in acls.coords.items():
            zword = tuple(i * n + j for i, j in zip(e, jw))
            zcls = E.class_of_word(zword)
            for zw, cz in zcls.coords.items():
                cur = acc.get(zw)
                upd = ce * cz if cur is None else cur + ce * cz
                if upd:
                    acc[zw] = upd
                elif cur is not None:
                    del acc[zw]
    return CharacterElement(k, AlgebraClass(E, k, acc))


def chi_J(B: ManinBialgebra, ell: int) -> CharacterElement:
    """Character of J_{ν(ℓ)}: trace via the pivot coordinate functionals of
    the echelon basis (any linear extension of the coordinates works since
    the coaction maps J into end(A) ⊗ J)."""
    A, E = B.base, B.env
    n = A.n
    m = nu(A.N, ell)
    space = dual_koszul_subspace(A, m)
    acc = {}
    for p, row in zip(space.pivots, space.rows):
        pword = index_word(p, m, n)
        for idx, c in row.items():
            w = index_word(idx, m, n)
            zword = tuple(i * n + j for i, j in zip(w, pword))
            zcls = E.class_of_word(zword)
            for zw, cz in zcls.coords.items():
                cur = acc.get(zw)
                upd = c * cz if cur is None else cur + c * cz
                if upd:
                    acc[zw] = upd
                elif cur is not None:
                    del acc[zw]
    return CharacterElement(m, AlgebraClass(E, m, acc))


def counit(B: ManinBialgebra, c: CharacterElement):
    """Evaluate a character by z_i^j ↦ δ_ij; independent of representative
    since every relation of end(A) pairs R^⊥ against R."""
    n = B.base.n
    total = B.base.field.zero
    for zw, coeff in c.value.coords.items():
        if all(letter // n == letter % n for letter in zw):
            total = total + coeff
    return total


def character_series(B: ManinBialgebra, max_degree: int) -> UniSeries:
    """Σ_k χ(A_k) t^k as a graded-coefficient series."""
    ring = GradedRing(B.env)
    coeffs = [chi_A(B, k).value for k in range(max_degree + 1)]
    return UniSeries(ring, max_degree, coeffs)


def dual_character_series(B: ManinBialgebra, max_degree: int) -> UniSeries:
    """Σ_ℓ (-1)^ℓ χ(J_{ν(ℓ)}) t^{ν(ℓ)} as a graded-coefficient series."""
    E = B.env
    ring = GradedRing(E)
    coeffs = [E.zero_class(d) for d in range(max_degree + 1)]
    ell = 0
    while True:
        d = nu(B.base.N, ell)
        if d > max_degree:
            break
        value = chi_J(B, ell).value
        if ell % 2:
            value = -value
        coeffs[d] = coeffs[d] + value
        ell += 1
    return UniSeries(ring, max_degree, coeffs)


class KmtResult:
    __slots__ = ("passed", "max_degree", "first_failure", "product")

    def __init__(self, passed, max_degree, first_failure, product):
        self.passed = passed
        self.max_degree = max_degree
        self.first_failure = first_failure
        self.product = product

    def __bool__(self):
        return self.passed


def kmt_ambient(n: int, max_degree: int) -> int:
    """Ambient dimension n^{2D} that the degree-D check must echelonize in."""
    return (n * n) ** max_degree


def kmt_check(B: ManinBialgebra, max_degree: int) -> KmtResult:
    """The character-map identity: the product of the character series of A
    and the alternating character series of the J spaces is 1 in end(A),
    checked per degree up to the bound.

    Meaningful for algebras whose exactness certificate passes at the same
    bound; on non-Koszul input the product simply fails at some degree.
    """
    if max_degree < 1:
        raise ValueError("bound must be >= 1")
    p = character_series(B, max_degree)
    q = dual_character_series(B, max_degree)
    product = p * q
    first_failure = None
    unit = B.env.unit()
    if product.coeffs[0] != unit:
        first_failure = 0
    else:
        for d in range(1, max_degree + 1):
            if not product.coeffs[d].is_zero():
                first_failure = d
                break
    return KmtResult(first_failure is None, max_degree, first_failure, product)


def evaluate_character(B: ManinBialgebra, value: AlgebraClass, Z):
    """Specialize an end(A) class at a numeric matrix, z_i^j ↦ Z[i][j]."""
    n = B.base.n
    total = B.base.field.zero
    for zw, coeff in value.coords.items():
        factor = coeff
        for letter in zw:
            i, j = divmod(letter, n)
            factor = factor * Z[i][j]
            if not factor:
                break
        if factor:
            total = total + factor
    return total


# ----------------------------------------------------------------------
# bosonic / fermionic cross-check for the polynomial algebra


def is_polynomial_presentation(A: AlgebraPresentation) -> bool:
    if A.N != 2 or A.n < 1:
        return False
    model = polynomial(A.n, field=A.field)
    return A.ideal_component(2) == model.ideal_component(2)


def _bos_elements(B: ManinBialgebra, max_degree: int):
    """Ordered products of the transformed generators, by exponent vector.

    Elements of end(A) ⊗ A are maps {A normal word: end(A)-coordinate dict};
    the product over X_i = Σ_j z_i^j ⊗ x_j is taken with ascending generator
    index, matching the ordered monomial convention.
    """
    A, E = B.base, B.env
    n = A.n
    one = A.field.one
    elems = {(0,) * n: {(): {(): one}}}
    frontier = dict(elems)
    for _ in range(max_degree):
        new_frontier = {}
        for expv, elem in frontier.items():
            start = 0
            for i in range(n - 1, -1, -1):
                if expv[i]:
                    start = i
                    break
            for i in range(start, n):
                target = list(expv)
                target[i] += 1
                target = tuple(target)
                if target in elems:
                    continue
                out = {}
                for aw, ecoords in elem.items():
                    for j in range(n):
                        acls = A.class_of_word(aw + (j,))
                        if not acls.coords:
                            continue
                        letter = i * n + j
                        emult = {}
                        for ew, ce in ecoords.items():
                            for fw, cf in E.class_of_word(ew + (letter,)).coords.items():
                                cur = emult.get(fw)
                                upd = ce * cf if cur is None else cur + ce * cf
                                if upd:
                                    emult[fw] = upd
                                elif cur is not None:
                                    del emult[fw]
                        for aw2, ca in acls.coords.items():
                            slot = out.setdefault(aw2, {})
                            for fw, c in emult.items():
                                cur = slot.get(fw)
                                upd = c * ca if cur is None else cur + c * ca
                                if upd:
                                    slot[fw] = upd
                                elif cur is not None:
                                    del slot[fw]
                elems[target] = out
                new_frontier[target] = out
        frontier = new_frontier
    return elems


def _monomial_key_word(A: AlgebraPresentation, expv):
    word = []
    for i, e in enumerate(expv):
        word.extend([i] * e)
    cls = A.class_of_word(tuple(word))
    [(key, coeff)] = cls.coords.items()
    if coeff != 1:
        raise RuntimeError("monomial class is not a unit coordinate; internal error")
    return key


def bos_series(B: ManinBialgebra, max_degree: int) -> UniSeries:
    """Bos: coefficient of t^k is Σ_{|m|=k} G(m), where G(m) is the
    x^m-coefficient of the ordered product X^m inside end(A) ⊗ A."""
    if not is_polynomial_presentation(B.base):
        raise ValueError("bosonic sum is defined for the polynomial algebra")
    A, E = B.base, B.env
    elems = _bos_elements(B, max_degree)
    ring = GradedRing(E)
    coeffs = []
    for k in range(max_degree + 1):
        acc = E.zero_class(k)
        for expv, elem in elems.items():
            if sum(expv) != k:
                continue
            key = _monomial_key_word(A, expv)
            coords = elem.get(key)
            if coords:
                acc = acc + AlgebraClass(E, k, coords)
        coeffs.append(acc)
    return UniSeries(ring, max_degree, coeffs)


def _noncommutative_minor(B: ManinBialgebra, subset, transpose: bool) -> AlgebraClass:
    """det(Z_J) in end(A) under one of the two orderings: column-ascending
    with permuted row indices (default), or its transpose."""
    E = B.env
    n = B.base.n
    ell = len(subset)
    terms = {}
    for perm in permutations(range(ell)):
        sign = perm_sign(perm)
        if transpose:
            word = tuple(subset[s] * n + subset[perm[s]] for s in range(ell))
        else:
            word = tuple(subset[perm[s]] * n + subset[s] for s in range(ell))
        cur = terms.get(word)
        upd = sign if cur is None else cur + sign
        if upd:
            terms[word] = upd
        elif cur is not None:
            del terms[word]
    return E.reduce(Tensor(n * n, ell, terms))


def ferm_series(B: ManinBialgebra, max_degree: int, transpose: bool = False) -> UniSeries:
    """Ferm: Σ_J (-1)^{|J|} det(Z_J) t^{|J|} over subsets of the generators."""
    if not is_polynomial_presentation(B.base):
        raise ValueError("fermionic sum is defined for the polynomial algebra")
    E = B.env
    n = B.base.n
    ring = GradedRing(E)
    coeffs = []
    for ell in range(max_degree + 1):
        acc = E.zero_class(ell)
        if ell <= n:
            for subset in combinations(range(n), ell):
                acc = acc + _noncommutative_minor(B, subset, transpose)
            if ell % 2:
                acc = -acc
        coeffs.append(acc)
    return UniSeries(ring, max_degree, coeffs)


def ferm_convention(B: ManinBialgebra, max_degree: int = 4) -> str:
    """Which determinant ordering matches the character series; cached.

    The fermionic series must agree with Σ (-1)^ℓ χ(J_ℓ) t^ℓ; the ordering
    that validates is recorded ("row-permuted" is the default convention,
    "column-permuted" its transpose).
    """
    if B._ferm_convention is None:
        target = dual_character_series(B, max_degree)
        if ferm_series(B, max_degree, transpose=False) == target:
            B._ferm_convention = "row-permuted"
        elif ferm_series(B, max_degree, transpose=True) == target:
            B._ferm_convention = "column-permuted"
        else:
            raise RuntimeError(
                "neither determinant ordering matches the character series"
            )
    return B._ferm_convention


def bos_ferm(B: ManinBialgebra, max_degree: int):
    """The bosonic and fermionic series, Ferm under the ordering that
    matches the character series (see ferm_convention)."""
    convention = ferm_convention(B, max_degree)
    bos = bos_series(B, max_degree)
    ferm = ferm_series(B, max_degree, transpose=(convention == "column-permuted"))
    return bos, ferm
