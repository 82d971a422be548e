"""The generalized Koszul complex and its degree-bounded exactness checks.

The complex of an N-homogeneous algebra A has components A ⊗ J_{ν(ℓ)},
where ν is the jump map and J_m realizes the dual coalgebra component
A^{!*}_m concretely inside V^{⊗m}:

    J_m = V^{⊗m}                       for m < N,
    J_m = ∩_{i+N+j=m} V^{⊗i}⊗R⊗V^{⊗j}  for m ≥ N.

J_m is the annihilator of the degree-m ideal component of R^⊥, so
dim J_m = dim A^!_m; that identity is what makes dual dimensions computable
without echelonizing the (huge) ideal of R^⊥.  J is built by the two-window
recursion J_m = (V⊗J_{m-1}) ∩ (J_{m-1}⊗V) seeded at J_N = span(R).

A certificate at bound M is degree-bounded evidence of Koszulity, never a
proof: it checks homology vanishing in homological degrees ℓ ≥ 1 and, for
the Euler-characteristic argument behind the Hilbert-series duality,
surjectivity of d_1 onto A_m, for every total degree 0 < m ≤ M.
"""

from __future__ import annotations

import math

from . import linalg, series
from .algebras import count_admissible
from .freealg import index_word
from .homog import AlgebraPresentation


def nu(N: int, ell: int) -> int:
    """Jump map: ν(2i) = N·i, ν(2i+1) = N·i + 1."""
    if ell < 0:
        raise ValueError("homological degree must be >= 0")
    i, r = divmod(ell, 2)
    return N * i + r


def _j_cache(A: AlgebraPresentation) -> dict:
    return A._extra.setdefault("koszul_J", {})


def dual_koszul_subspace(A: AlgebraPresentation, m: int) -> linalg.Subspace:
    """The space J_m ⊆ V^{⊗m} (concrete model of A^{!*}_m)."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    cache = _j_cache(A)
    space = cache.get(m)
    if space is not None:
        return space
    n, N = A.n, A.N
    if m < N:
        space = linalg.full_space(n**m)
    elif m == N:
        space = A.ideal_component(N)
    else:
        prev = dual_koszul_subspace(A, m - 1)
        if prev.dim == 0:
            space = linalg.zero_space(n**m)
        else:
            stride = n ** (m - 1)
            left_rows = []
            left_piv = []
            for a in range(n):
                off = a * stride
                for p, row in zip(prev.pivots, prev.rows):
                    left_piv.append(off + p)
                    left_rows.append({off + idx: c for idx, c in row.items()})
            left = linalg.Subspace(n**m, tuple(left_piv), tuple(left_rows))
            right_piv = []
            right_rows = []
            for p, row in zip(prev.pivots, prev.rows):
                for a in range(n):
                    right_piv.append(p * n + a)
                    right_rows.append({idx * n + a: c for idx, c in row.items()})
            order = sorted(range(len(right_piv)), key=right_piv.__getitem__)
            right = linalg.Subspace(
                n**m,
                tuple(right_piv[i] for i in order),
                tuple(right_rows[i] for i in order),
            )
            space = linalg.intersect(left, right)
    cache[m] = space
    return space


def dual_component_dim(A: AlgebraPresentation, m: int) -> int:
    """dim A^!_m, computed as dim J_m (annihilator duality)."""
    if m < A.N:
        return A.n**m
    return dual_koszul_subspace(A, m).dim


def _j_slices(A: AlgebraPresentation, m: int, s: int):
    """Coordinates of J_m inside V^{⊗s} ⊗ J_{m-s}.

    For each basis row of J_m, the slice at every length-s prefix must lie
    in J_{m-s}; a failure signals an implementation bug, not bad input.
    Returns, per basis row, a list of (prefix word, {J_{m-s} basis index:
    coefficient}).
    """
    cache = A._extra.setdefault("koszul_J_slices", {})
    key = (m, s)
    data = cache.get(key)
    if data is not None:
        return data
    n = A.n
    space = dual_koszul_subspace(A, m)
    lower = dual_koszul_subspace(A, m - s)
    tail = n ** (m - s)
    data = []
    for row in space.rows:
        groups = {}
        for idx, c in row.items():
            p, t = divmod(idx, tail)
            groups.setdefault(p, {})[t] = c
        entries = []
        for p in sorted(groups):
            try:
                coords = lower.coordinates(groups[p])
            except ValueError as exc:
                raise RuntimeError(
                    f"J_{m} slice not contained in V^{{⊗{s}}}⊗J_{m - s}; "
                    "this is an internal invariant violation"
                ) from exc
            entries.append((index_word(p, s, n), coords))
        data.append(entries)
    cache[key] = data
    return data


def differential(A: AlgebraPresentation, m: int, ell: int) -> linalg.Matrix:
    """Matrix of d_ℓ: A_k ⊗ J_{ν(ℓ)} → A_{k+s} ⊗ J_{ν(ℓ-1)} at total degree m.

    Rows are images of the domain basis pairs (normal word e, J basis row b),
    flattened as e_pos * dim J + b; columns are flattened the same way on the
    codomain.  The map splits the first s = ν(ℓ)-ν(ℓ-1) tensor factors off
    the J part and multiplies them into the algebra factor.
    """
    if ell < 1:
        raise ValueError("differential needs homological degree >= 1")
    N = A.N
    hi = nu(N, ell)
    lo = nu(N, ell - 1)
    s = hi - lo
    k = m - hi
    if k < 0:
        raise ValueError(f"total degree {m} is below ν({ell}) = {hi}")
    lower = dual_koszul_subspace(A, lo)
    dim_lower = lower.dim
    slices = _j_slices(A, hi, s)
    cod_words = A.normal_basis(k + s)
    cod_pos = {w: i for i, w in enumerate(cod_words)}
    rows = []
    for e in A.normal_basis(k):
        for entries in slices:
            row = {}
            for p_word, coords in entries:
                cls = A.class_of_word(e + p_word)
                for f, cf in cls.coords.items():
                    base = cod_pos[f] * dim_lower
                    for g, lam in coords.items():
                        col = base + g
                        cur = row.get(col)
                        v = cf * lam
                        upd = v if cur is None else cur + v
                        if upd:
                            row[col] = upd
                        elif cur is not None:
                            del row[col]
            rows.append(row)
    return linalg.Matrix(len(cod_words) * dim_lower, rows)


def _composition_is_zero(d_hi: linalg.Matrix, d_lo: linalg.Matrix) -> bool:
    for row in d_hi.rows:
        acc = {}
        for mid, c in row.items():
            for col, v in d_lo.rows[mid].items():
                cur = acc.get(col)
                upd = c * v if cur is None else cur + c * v
                if upd:
                    acc[col] = upd
                elif cur is not None:
                    del acc[col]
        if acc:
            return False
    return True


class DegreeReport:
    """Homology data of the total-degree-m subcomplex."""

    __slots__ = ("m", "component_dims", "ranks", "homology", "d1_surjective")

    def __init__(self, m, component_dims, ranks, homology, d1_surjective):
        self.m = m
        self.component_dims = component_dims  # {ell: dim A_k ⊗ J_ν(ell)}
        self.ranks = ranks  # {ell: rank d_ell}
        self.homology = homology  # {ell: dim H_ell}, ell >= 1
        self.d1_surjective = d1_surjective

    @property
    def exact_positive_degrees(self) -> bool:
        return all(h == 0 for h in self.homology.values())

    def to_obj(self):
        return {
            "total_degree": self.m,
            "component_dims": {str(l): d for l, d in self.component_dims.items()},
            "differential_ranks": {str(l): r for l, r in self.ranks.items()},
            "homology_dims": {str(l): h for l, h in self.homology.items()},
            "d1_surjective": self.d1_surjective,
        }


def homology_report(A: AlgebraPresentation, m: int) -> DegreeReport:
    """Ranks and homology dimensions of the subcomplex at total degree m.

    d∘d = 0 is verified on every constructed consecutive pair and raises
    RuntimeError if violated (an implementation bug, not a user error).
    """
    if m < 1:
        raise ValueError("total degree must be >= 1")
    N = A.N
    ells = []
    ell = 0
    while nu(N, ell) <= m:
        ells.append(ell)
        ell += 1
    dims = {}
    for l in ells:
        k = m - nu(N, l)
        dims[l] = A.dim_component(k) * dual_koszul_subspace(A, nu(N, l)).dim
    matrices = {}
    ranks = {}
    for l in ells[1:]:
        if dims[l] == 0:
            matrices[l] = None
            ranks[l] = 0
            continue
        mat = differential(A, m, l)
        matrices[l] = mat
        ranks[l] = linalg.rank(mat)
    for l in ells[1:]:
        if l - 1 >= 1 and matrices.get(l) is not None and matrices.get(l - 1) is not None:
            if not _composition_is_zero(matrices[l], matrices[l - 1]):
                raise RuntimeError(
                    f"d_{l - 1} ∘ d_{l} != 0 at total degree {m}; internal error"
                )
    homology = {}
    for l in ells[1:]:
        incoming = ranks.get(l + 1, 0)
        homology[l] = dims[l] - ranks[l] - incoming
    d1_rank = ranks.get(1, 0)
    d1_surjective = d1_rank == dims[0]
    return DegreeReport(m, dims, ranks, homology, d1_surjective)


class CertificateResult:
    __slots__ = ("passed", "bound", "first_failure", "reports")

    def __init__(self, passed, bound, first_failure, reports):
        self.passed = passed
        self.bound = bound
        self.first_failure = first_failure  # (m, ell) or None
        self.reports = reports

    def __bool__(self):
        return self.passed

    def to_obj(self):
        return {
            "passed": self.passed,
            "bound": self.bound,
            "statement": f"exactness verified up to total degree {self.bound}"
            if self.passed
            else "exactness fails",
            "first_failure": list(self.first_failure) if self.first_failure else None,
            "degrees": [r.to_obj() for r in self.reports],
        }


def koszul_certificate(A: AlgebraPresentation, max_degree: int) -> CertificateResult:
    """Check exactness of every subcomplex with total degree 0 < m ≤ M.

    Passing is degree-bounded evidence for Koszulity up to degree M only.
    Homological degrees ℓ ≥ 1 carry the Koszulity condition itself;
    surjectivity of d_1 (exactness at ℓ = 0) is what the Euler-Poincaré
    derivation of the Hilbert-series identity additionally uses.
    """
    if max_degree < 1:
        raise ValueError("certificate bound must be >= 1")
    reports = []
    first_failure = None
    for m in range(1, max_degree + 1):
        rep = homology_report(A, m)
        reports.append(rep)
        if first_failure is None:
            if not rep.d1_surjective:
                first_failure = (m, 0)
            for l in sorted(rep.homology):
                if rep.homology[l] != 0:
                    first_failure = (m, l)
                    break
    return CertificateResult(first_failure is None, max_degree, first_failure, reports)


def dvp_rhs(A: AlgebraPresentation, max_degree: int) -> series.UniSeries:
    """The alternating dual-dimension series Σ (-1)^ℓ dim A^!_{ν(ℓ)} t^{ν(ℓ)}."""
    coeffs = [0] * (max_degree + 1)
    ell = 0
    while True:
        d = nu(A.N, ell)
        if d > max_degree:
            break
        coeffs[d] += (-1) ** ell * dual_component_dim(A, d)
        ell += 1
    return series.UniSeries(series.INTS, max_degree, coeffs)


def dvp_check(A: AlgebraPresentation, max_degree: int) -> bool:
    """Hilbert-series duality: H_A(t) · Σ (-1)^ℓ dim A^!_{ν(ℓ)} t^{ν(ℓ)} = 1.

    Holds whenever the Koszulity certificate passes at the same bound, but is
    computed independently of it.
    """
    product = A.hilbert_series(max_degree) * dvp_rhs(A, max_degree)
    return product.is_one()


def identity_eq1(n: int, m: int) -> int:
    """Σ_{k+ℓ=m} (-1)^k C(n+k-1, k) C(n, ℓ); zero for all n, m ≥ 1."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    total = 0
    for k in range(m + 1):
        total += (-1) ** k * math.comb(n + k - 1, k) * math.comb(n, m - k)
    return total


class AdmissibleIdentityResult:
    __slots__ = ("passed", "counts", "inverse_coeffs", "degree_rule_ok", "ell_max")

    def __init__(self, passed, counts, inverse_coeffs, degree_rule_ok, ell_max):
        self.passed = passed
        self.counts = counts
        self.inverse_coeffs = inverse_coeffs
        self.degree_rule_ok = degree_rule_ok
        self.ell_max = ell_max

    def __bool__(self):
        return self.passed


def admissible_identity_check(n: int, N: int, max_degree: int) -> AdmissibleIdentityResult:
    """Admissible-word counts against the inverted alternating binomial series.

    Σ_k L(n,N,k) t^k must equal the inverse of
    Σ_ℓ (-1)^ℓ C(n, ν(ℓ)) t^{ν(ℓ)}.  The alternating polynomial has its last
    nonzero term at homological index 2q when n = qN (t-degree n) and at
    2q+1 when n = qN+r with 0 < r < N (t-degree qN+1); that index rule is
    verified alongside the coefficients.
    """
    if not 2 <= N <= n:
        raise ValueError(f"need 2 <= N <= n, got N={N}, n={n}")
    coeffs = [0] * (max_degree + 1)
    ell = 0
    ell_max = 0
    while True:
        d = nu(N, ell)
        binom = math.comb(n, d)
        if binom:
            ell_max = ell
        if d > max_degree and d > n + N:
            break
        if d <= max_degree:
            coeffs[d] += (-1) ** ell * binom
        ell += 1
    q, r = divmod(n, N)
    expected_ell_max = 2 * q if r == 0 else 2 * q + 1
    degree_rule_ok = ell_max == expected_ell_max
    poly = series.UniSeries(series.INTS, max_degree, coeffs)
    inverse = poly.invert()
    counts = [count_admissible(n, N, k) for k in range(max_degree + 1)]
    passed = degree_rule_ok and counts == inverse.coeffs
    return AdmissibleIdentityResult(passed, counts, inverse.coeffs, degree_rule_ok, ell_max)
