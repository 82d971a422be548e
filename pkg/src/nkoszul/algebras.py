"""Built-in algebra presentations and descent-avoiding word combinatorics.

Provides the polynomial algebra, the degree-N antisymmetrizer algebras, the
multiparameter quantum space, and the free algebra, together with the count
and enumeration of admissible words (words with no N consecutive strictly
decreasing letters).
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

from .freealg import Tensor
from .homog import AlgebraPresentation
from .scalar import QQ, ParameterField


def perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = perm[pos]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def polynomial(n: int, field=QQ) -> AlgebraPresentation:
    """S(V): relations x_i⊗x_j - x_j⊗x_i for i < j."""
    if n < 1:
        raise ValueError("polynomial algebra needs n >= 1")
    one = field.one
    rels = [
        Tensor(n, 2, {(i, j): one, (j, i): -one})
        for i, j in combinations(range(n), 2)
    ]
    return AlgebraPresentation(n, 2, rels, label=f"poly({n})", field=field)


def antisymmetrizer(n: int, N: int, field=QQ) -> AlgebraPresentation:
    """Relations = all degree-N antisymmetrizers over ascending index tuples.

    For each 1 <= i_1 < ... < i_N <= n the relation is the signed sum over
    all position permutations; N = 2 recovers the polynomial algebra.
    """
    if not 2 <= N <= n:
        raise ValueError(f"antisymmetrizer needs 2 <= N <= n, got N={N}, n={n}")
    one = field.one
    rels = []
    for combo in combinations(range(n), N):
        terms = {}
        for perm in permutations(range(N)):
            word = tuple(combo[p] for p in perm)
            terms[word] = one if perm_sign(perm) == 1 else -one
        rels.append(Tensor(n, N, terms))
    return AlgebraPresentation(n, N, rels, label=f"antisym({n},{N})", field=field)


def quantum_space(n: int, q=None, field=None) -> AlgebraPresentation:
    """The quantum space x_j x_i = q_ij x_i x_j for i < j.

    With ``q=None`` the coefficients are independent generic parameters
    q_ij over the rational function field; a single number or a
    ``{(i, j): value}`` dict (0-based, i < j) gives a numeric presentation
    over the rationals.  Zero parameters are rejected.
    """
    if n < 1:
        raise ValueError("quantum space needs n >= 1")
    pairs = list(combinations(range(n), 2))
    if q is None:
        names = [f"q{i + 1}{j + 1}" for i, j in pairs]
        field = ParameterField(names) if names else QQ
        coeff = {
            (i, j): field.parameter(f"q{i + 1}{j + 1}") for i, j in pairs
        }
    else:
        field = field or QQ
        if isinstance(q, dict):
            coeff = {}
            for i, j in pairs:
                if (i, j) not in q:
                    raise ValueError(f"missing parameter q for pair {(i, j)}")
                coeff[(i, j)] = _as_scalar(field, q[(i, j)])
        else:
            value = _as_scalar(field, q)
            coeff = {pair: value for pair in pairs}
        for pair, value in coeff.items():
            if not value:
                raise ValueError(f"parameter q{pair} must be nonzero")
    one = field.one
    rels = [
        Tensor(n, 2, {(j, i): one, (i, j): -coeff[(i, j)]})
        for i, j in pairs
    ]
    return AlgebraPresentation(n, 2, rels, label=f"qspace({n})", field=field)


def _as_scalar(field, value):
    if isinstance(value, int):
        return field.from_int(value)
    if isinstance(value, Fraction):
        return field.rational(value.numerator, value.denominator)
    return value


def free_algebra(n: int, field=QQ) -> AlgebraPresentation:
    """T(V): no relations (N recorded as 2, irrelevant for an empty R)."""
    return AlgebraPresentation(n, 2, [], label=f"free({n})", field=field)


# ----------------------------------------------------------------------
# admissible (descent-avoiding) words


def is_admissible(word, N: int) -> bool:
    """True when the word has no N consecutive strictly decreasing letters."""
    run = 1
    for s in range(1, len(word)):
        run = run + 1 if word[s - 1] > word[s] else 1
        if run >= N:
            return False
    return True


def count_admissible(n: int, N: int, k: int) -> int:
    """Number of admissible length-k words, by dynamic programming over
    (last letter, length of the current strictly decreasing run)."""
    if k == 0:
        return 1
    if n == 0:
        return 0
    # state[(a, r)] = number of admissible words ending in letter a whose
    # maximal strictly decreasing suffix has length r (1 <= r <= N-1)
    state = {(a, 1): 1 for a in range(n)}
    for _ in range(k - 1):
        nxt = {}
        for (a, r), cnt in state.items():
            for b in range(n):
                if b < a:
                    if r + 1 >= N:
                        continue
                    key = (b, r + 1)
                else:
                    key = (b, 1)
                nxt[key] = nxt.get(key, 0) + cnt
        state = nxt
    return sum(state.values())


def enumerate_admissible(n: int, N: int, k: int):
    """All admissible length-k words in lex order."""
    out = []

    def extend(word, last, run):
        if len(word) == k:
            out.append(tuple(word))
            return
        for b in range(n):
            if last is not None and b < last:
                if run + 1 >= N:
                    continue
                word.append(b)
                extend(word, b, run + 1)
            else:
                word.append(b)
                extend(word, b, 1)
            word.pop()

    extend([], None, 0)
    return out


def dual_dims_closed_form(n: int, N: int, m: int) -> int:
    """dim A^!_m for the antisymmetrizer algebra: n^m below degree N,
    binomial in the middle range, zero above n."""
    if not 2 <= N <= n:
        raise ValueError(f"need 2 <= N <= n, got N={N}, n={n}")
    if m < 0:
        raise ValueError("degree must be >= 0")
    if m <= N - 1:
        return n**m
    if m <= n:
        return math.comb(n, m)
    return 0
