"""Numeric master-theorem identities.

Specializing the generators z_i^j of end(A) at a rational matrix Z turns
the character identities into numeric generating-function identities:
the original MacMahon identity for the polynomial algebra, and the
N-analog for antisymmetrizer algebras, whose right-hand side is an
alternating sum of principal minors of ZT over subsets of size ≡ 0, 1
mod N.  The specialization is sound exactly when span(R) is invariant
under Z^{⊗N}, which the guard below checks.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from . import linalg
from .algebras import (
    antisymmetrizer,
    enumerate_admissible,
    is_admissible,
    perm_sign,
    polynomial,
)
from .freealg import Tensor, index_word
from .homog import AlgebraPresentation
from .series import MultiSeries, exponents_of_total


def random_rational_matrix(n: int, seed: int):
    """Deterministic n×n matrix of fractions p/q, p in [-9, 9], q in [1, 9],
    drawn row-major from Python's Mersenne-Twister generator."""
    rng = random.Random(seed)
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        for _ in range(n)
    ]


def matrix_det(entries):
    """Exact determinant by the Leibniz expansion (sizes here are tiny)."""
    size = len(entries)
    if size == 0:
        return Fraction(1)
    total = None
    for perm in permutations(range(size)):
        prod = entries[0][perm[0]]
        for i in range(1, size):
            if not prod:
                break
            prod = prod * entries[i][perm[i]]
        if not prod:
            continue
        if perm_sign(perm) < 0:
            prod = -prod
        total = prod if total is None else total + prod
    if total is None:
        total = entries[0][0] - entries[0][0]
    return total


def _transform_tensor(Z, t: Tensor) -> Tensor:
    """Apply Z factor-wise: x_w ↦ Σ_{w'} (Π_s Z[w_s][w'_s]) x_{w'}."""
    n = t.n
    terms = {}
    for w, c in t.terms.items():
        partial = {(): c}
        for letter in w:
            nxt = {}
            row = Z[letter]
            for prefix, coeff in partial.items():
                for j in range(n):
                    z = row[j]
                    if not z:
                        continue
                    key = prefix + (j,)
                    cur = nxt.get(key)
                    upd = coeff * z if cur is None else cur + coeff * z
                    if upd:
                        nxt[key] = upd
                    elif cur is not None:
                        del nxt[key]
            partial = nxt
        for w2, coeff in partial.items():
            cur = terms.get(w2)
            upd = coeff if cur is None else cur + coeff
            if upd:
                terms[w2] = upd
            elif cur is not None:
                del terms[w2]
    return Tensor(n, t.grade, terms)


def check_specializable(A: AlgebraPresentation, Z) -> bool:
    """True iff span(R) is invariant under Z^{⊗N}, which makes z_i^j ↦ Z_ij
    kill every relation of end(A).  Always true for the polynomial and
    antisymmetrizer algebras; generically false for quantum spaces."""
    if len(Z) != A.n:
        raise ValueError("matrix size does not match the generator count")
    span = A.ideal_component(A.N)
    key = tuple(tuple(row) for row in Z)
    memo = A._extra.setdefault("specializable", {})
    cached = memo.get(key)
    if cached is not None:
        return cached
    ok = True
    for r in A.relations:
        moved = _transform_tensor(Z, r)
        if not span.contains(moved.to_vec()):
            ok = False
            break
    memo[key] = ok
    return ok


def _admissible_solver(A: AlgebraPresentation, k: int):
    """Coordinate solver for the admissible-word basis of A_k.

    Raises when the admissible classes do not form a basis (they do for the
    built-in polynomial and antisymmetrizer algebras)."""
    cache = A._extra.setdefault("admissible_solver", {})
    data = cache.get(k)
    if data is not None:
        return data
    words = enumerate_admissible(A.n, A.N, k)
    normal = A.normal_basis(k)
    if len(words) != len(normal):
        raise ValueError(
            f"admissible word count {len(words)} != dim A_{k} = {len(normal)}"
        )
    pos = {w: i for i, w in enumerate(normal)}
    rows = []
    for w in words:
        cls = A.class_of_word(w)
        rows.append({pos[nw]: c for nw, c in cls.coords.items()})
    solver = linalg.BasisSolver(rows, len(normal))
    index = {w: i for i, w in enumerate(words)}
    data = (solver, index, pos)
    cache[k] = data
    return data


def _product_vector(A: AlgebraPresentation, Z, word, start=None):
    """Normal coordinates of X_{i_1}···X_{i_k}, X_i = Σ_j Z_ij x_j."""
    n = A.n
    cur = {(): A.field.one} if start is None else start
    for i in word:
        row = Z[i]
        nxt = {}
        for w, c in cur.items():
            for j in range(n):
                z = row[j]
                if not z:
                    continue
                scale = c * z
                for w2, c2 in A.class_of_word(w + (j,)).coords.items():
                    cur2 = nxt.get(w2)
                    upd = scale * c2 if cur2 is None else cur2 + scale * c2
                    if upd:
                        nxt[w2] = upd
                    elif cur2 is not None:
                        del nxt[w2]
        cur = nxt
    return cur


def g_coefficient(A: AlgebraPresentation, Z, word):
    """G(i_1,...,i_k): the coefficient of the class of x_{i_1}...x_{i_k} in
    the reduced product X_{i_1}...X_{i_k}, in admissible-basis coordinates."""
    word = tuple(word)
    if not is_admissible(word, A.N):
        raise ValueError(f"word {word} has an {A.N}-descent")
    if not check_specializable(A, Z):
        raise ValueError("matrix does not specialize this algebra's envelope")
    k = len(word)
    if k == 0:
        return A.field.one
    solver, index, pos = _admissible_solver(A, k)
    vec = _product_vector(A, Z, word)
    coords = solver.coordinates({pos[w]: c for w, c in vec.items()})
    return coords.get(index[word], A.field.zero)


def g_table(A: AlgebraPresentation, Z, max_degree: int):
    """All G values on admissible words of length ≤ max_degree, sharing
    prefix products along the admissible-word tree."""
    if not check_specializable(A, Z):
        raise ValueError("matrix does not specialize this algebra's envelope")
    n, N = A.n, A.N
    one = A.field.one
    table = {(): one}
    # stack entries: (word, run length of current descent, product vector)
    stack = [((), 0, {(): one})]
    while stack:
        word, run, vec = stack.pop()
        k = len(word)
        if k:
            solver, index, pos = _admissible_solver(A, k)
            coords = solver.coordinates({pos[w]: c for w, c in vec.items()})
            table[word] = coords.get(index[word], A.field.zero)
        if k == max_degree:
            continue
        for b in range(n - 1, -1, -1):
            if word and word[-1] > b:
                if run + 1 >= N:
                    continue
                nrun = run + 1
            else:
                nrun = 1
            stack.append((word + (b,), nrun, _product_vector(A, Z, (b,), start=vec)))
    return table


def _lhs_series(A: AlgebraPresentation, Z, max_degree: int) -> MultiSeries:
    table = g_table(A, Z, max_degree)
    terms = {}
    n = A.n
    for word, value in table.items():
        if not value:
            continue
        exps = [0] * n
        for letter in word:
            exps[letter] += 1
        key = tuple(exps)
        cur = terms.get(key)
        upd = value if cur is None else cur + value
        if upd:
            terms[key] = upd
        elif cur is not None:
            del terms[key]
    return MultiSeries(A.field, n, max_degree, terms)


class MasterResult:
    __slots__ = ("passed", "max_degree", "first_mismatch", "lhs", "rhs")

    def __init__(self, passed, max_degree, first_mismatch, lhs, rhs):
        self.passed = passed
        self.max_degree = max_degree
        self.first_mismatch = first_mismatch  # (exponents, lhs value, rhs value)
        self.lhs = lhs
        self.rhs = rhs

    def __bool__(self):
        return self.passed


def _compare(lhs: MultiSeries, rhs: MultiSeries, max_degree: int) -> MasterResult:
    first = None
    for total in range(max_degree + 1):
        for exps in exponents_of_total(lhs.nvars, total):
            a = lhs.coefficient(exps)
            b = rhs.coefficient(exps)
            if a != b:
                first = (exps, a, b)
                break
        if first:
            break
    return MasterResult(first is None, max_degree, first, lhs, rhs)


def mmt_check(n: int, Z, max_degree: int, algebra=None) -> MasterResult:
    """Original master identity: Σ_m G(m) t^m = det(I - ZT)^{-1} exactly,
    up to total degree ``max_degree``."""
    A = algebra if algebra is not None else polynomial(n)
    field = A.field
    lhs = _lhs_series(A, Z, max_degree)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {}
            if i == j:
                terms[(0,) * n] = field.one
            z = Z[i][j]
            if z:
                exps = [0] * n
                exps[j] = 1
                key = tuple(exps)
                terms[key] = terms.get(key, field.zero) - z
            row.append(MultiSeries(field, n, max_degree, terms))
        entries.append(row)
    det = _series_det(entries, field, n, max_degree)
    return _compare(lhs, det.invert(), max_degree)


def _series_det(entries, field, nvars, trunc) -> MultiSeries:
    size = len(entries)
    total = MultiSeries(field, nvars, trunc, {})
    for perm in permutations(range(size)):
        prod = MultiSeries.one(field, nvars, trunc)
        for i in range(size):
            prod = prod * entries[i][perm[i]]
        if perm_sign(perm) < 0:
            prod = -prod
        total = total + prod
    return total


def nmt_rhs_denominator(n: int, N: int, Z, field, max_degree: int) -> MultiSeries:
    """Σ over J ⊆ {1..n} with |J| ≡ 0, 1 (mod N) of ε(|J|) det(Z_J) Π_{j∈J} t_j,
    where ε is +1 on sizes ≡ 0 and -1 on sizes ≡ 1 mod N."""
    terms = {}
    for r in range(n + 1):
        rem = r % N
        if rem not in (0, 1):
            continue
        eps = 1 if rem == 0 else -1
        for subset in combinations(range(n), r):
            minor = matrix_det([[Z[i][j] for j in subset] for i in subset])
            if not minor:
                continue
            exps = [0] * n
            for j in subset:
                exps[j] = 1
            key = tuple(exps)
            value = minor if eps > 0 else -minor
            cur = terms.get(key)
            upd = value if cur is None else cur + value
            if upd:
                terms[key] = upd
            elif cur is not None:
                del terms[key]
    return MultiSeries(field, n, max_degree, terms)


def nmt_check(n: int, N: int, Z, max_degree: int, algebra=None) -> MasterResult:
    """N-analog: the admissible G series equals the inverse of the ε-signed
    principal-minor sum, exactly, up to total degree ``max_degree``."""
    A = algebra if algebra is not None else antisymmetrizer(n, N)
    lhs = _lhs_series(A, Z, max_degree)
    denom = nmt_rhs_denominator(n, N, Z, A.field, max_degree)
    return _compare(lhs, denom.invert(), max_degree)


def restricted_trace(Z, space: linalg.Subspace, n: int, m: int):
    """Trace of Z^{⊗m} on an invariant subspace of V^{⊗m}, via the pivot
    coordinate functionals of the echelon basis (rational matrices only)."""
    total = Fraction(0)
    for p, row in zip(space.pivots, space.rows):
        pword = index_word(p, m, n)
        for idx, c in row.items():
            w = index_word(idx, m, n)
            factor = c
            for a, b in zip(w, pword):
                factor = factor * Z[a][b]
                if not factor:
                    break
            if factor:
                total = total + factor
    return total


def char_poly_coeffs(M, one=None):
    """Coefficients c_0..c_n with det(λI - M) = Σ c_r λ^{n-r}, by the
    trace recursion; entries may be scalars or any commutative ring elements
    supporting +, *, and scaling by Fraction.

    The identity c_r = (-1)^r · (sum of principal r×r minors) is asserted
    for scalar matrices.
    """
    size = len(M)
    for row in M:
        if len(row) != size:
            raise ValueError("matrix is not square")
    if one is None:
        one = Fraction(1)
    coeffs = [one]
    if size == 0:
        return coeffs
    mk = [row[:] for row in M]
    for k in range(1, size + 1):
        tr = mk[0][0]
        for i in range(1, size):
            tr = tr + mk[i][i]
        ck = tr * Fraction(-1, k)
        coeffs.append(ck)
        if k < size:
            adjusted = [
                [mk[i][j] + ck if i == j else mk[i][j] for j in range(size)]
                for i in range(size)
            ]
            mk = [
                [
                    _dot(M[i], [adjusted[t][j] for t in range(size)])
                    for j in range(size)
                ]
                for i in range(size)
            ]
    if isinstance(M[0][0], (int, Fraction)):
        for r in range(size + 1):
            expected = principal_minor_sum(M, r)
            if r % 2:
                expected = -expected
            assert coeffs[r] == expected, "characteristic coefficients disagree with principal minors"
    return coeffs


def _dot(row, col):
    total = row[0] * col[0]
    for a, b in zip(row[1:], col[1:]):
        total = total + a * b
    return total


def principal_minor_sum(M, r: int):
    """Sum of the r×r principal minors (the elementary symmetric function
    of the eigenvalues)."""
    size = len(M)
    if r == 0:
        return Fraction(1)
    total = Fraction(0)
    for subset in combinations(range(size), r):
        total = total + matrix_det([[M[i][j] for j in subset] for i in subset])
    return total
