"""The N-homogeneous algebra engine.

An algebra A = T(V)/(R) is presented by (n, N, relations).  Per degree d the
engine computes the ideal component I_d by the recursion

    I_d = V ⊗ I_{d-1} + R ⊗ V^{⊗(d-N)}        (d > N),

keeps its reduced echelon basis, and takes the words at non-pivot columns as
the normal basis of A_d.  Reduction modulo I_d gives quotient arithmetic.

Dimension-only queries go through a cheaper non-reduced echelon layer so
Hilbert series can be pushed a couple of degrees further than full
reduction data.
"""

from __future__ import annotations

from . import linalg
from . import series
from .freealg import Tensor, index_word, word_index
from .scalar import QQ


class AlgebraPresentation:
    """An N-homogeneous algebra T(V)/(R) with per-degree caches.

    Relations may be linearly dependent; only their span matters.  The
    presentation itself is immutable; the caches are populated lazily and
    must be written from one thread at a time.
    """

    def __init__(self, n, N, relations, label="", field=QQ):
        if N < 2:
            raise ValueError("relation degree N must be >= 2")
        if n < 0:
            raise ValueError("generator count must be >= 0")
        relations = tuple(relations)
        for r in relations:
            if r.n != n:
                raise ValueError("relation alphabet mismatch")
            if r.grade != N:
                raise ValueError(f"relation {r!r} does not have grade {N}")
        self.n = n
        self.N = N
        self.relations = relations
        self.label = label
        self.field = field
        self._full = {}
        self._rank = {}
        self._extra = {}  # scratch slots for other modules (koszul, manin, mmt)

    # ------------------------------------------------------------------
    # ideal components

    def _ideal_row_source(self, d):
        """Some spanning echelon rows of I_d (reduced if available)."""
        data = self._full.get(d)
        if data is not None:
            return list(data.echelon.row_of.values())
        ech = self._rank.get(d)
        if ech is None:
            ech = self._build_echelon(d, reduced=False)
            self._rank[d] = ech
        return list(ech.row_of.values())

    def _spanning_rows(self, d):
        n, N = self.n, self.N
        if d < N:
            return
        if d == N:
            for r in self.relations:
                yield r.to_vec()
            return
        stride = n ** (d - 1)
        for row in self._ideal_row_source(d - 1):
            for a in range(n):
                off = a * stride
                yield {off + idx: c for idx, c in row.items()}
        tail = n ** (d - N)
        for r in self.relations:
            rvec = r.to_vec()
            for widx in range(tail):
                yield {ridx * tail + widx: c for ridx, c in rvec.items()}

    def _build_echelon(self, d, reduced):
        ech = linalg.Echelon(self.n**d, reduced=reduced)
        for vec in self._spanning_rows(d):
            ech.add(vec)
        return ech

    def _component(self, d):
        data = self._full.get(d)
        if data is None:
            ech = linalg.Echelon(self.n**d, reduced=True)
            rank_ech = self._rank.pop(d, None)
            if rank_ech is not None:
                # upgrade: re-insert the cheap echelon's rows with reduction
                for vec in rank_ech.row_of.values():
                    ech.add(vec)
            else:
                for vec in self._spanning_rows(d):
                    ech.add(vec)
            data = _DegreeData(self, d, ech)
            self._full[d] = data
        return data

    def ideal_component(self, d) -> linalg.Subspace:
        """The degree-d component of the two-sided ideal (R), as a subspace."""
        if d < 0:
            raise ValueError("degree must be >= 0")
        return self._component(d).subspace

    def ideal_rank(self, d) -> int:
        data = self._full.get(d)
        if data is not None:
            return data.echelon.rank
        ech = self._rank.get(d)
        if ech is None:
            ech = self._build_echelon(d, reduced=False)
            self._rank[d] = ech
        return ech.rank

    # ------------------------------------------------------------------
    # quotient data

    def dim_component(self, d) -> int:
        if d < 0:
            raise ValueError("degree must be >= 0")
        return self.n**d - self.ideal_rank(d)

    def hilbert_series(self, max_degree) -> series.UniSeries:
        coeffs = [self.dim_component(d) for d in range(max_degree + 1)]
        return series.UniSeries(series.INTS, max_degree, coeffs)

    def normal_basis(self, d):
        """Words at non-pivot columns of I_d; their classes form a basis of A_d."""
        return self._component(d).normal_words

    def reduce(self, t: Tensor):
        """Projection T(V)_d -> A_d in normal-basis coordinates."""
        if t.n != self.n:
            raise ValueError("alphabet mismatch")
        data = self._component(t.grade)
        rem = data.echelon.reduce(t.to_vec())
        coords = {index_word(i, t.grade, self.n): c for i, c in rem.items()}
        return AlgebraClass(self, t.grade, coords)

    def class_of_word(self, word):
        """Memoized class of a single word; the hot path for multiplication."""
        d = len(word)
        data = self._component(d)
        cls = data.word_class.get(word)
        if cls is None:
            if word in data.normal_set:
                cls = AlgebraClass(self, d, {word: 1})
            else:
                rem = data.echelon.reduce({word_index(word, self.n): 1})
                coords = {index_word(i, d, self.n): c for i, c in rem.items()}
                cls = AlgebraClass(self, d, coords)
            data.word_class[word] = cls
        return cls

    def unit(self):
        return AlgebraClass(self, 0, {(): 1})

    def zero_class(self, d):
        return AlgebraClass(self, d, {})

    # ------------------------------------------------------------------

    def dual(self) -> "AlgebraPresentation":
        """The dual N-homogeneous algebra on V* with relations R^⊥."""
        span = self.ideal_component(self.N)
        perp = linalg.kernel(linalg.Matrix(self.n**self.N, list(span.rows)))
        rels = [Tensor.from_vec(self.n, self.N, dict(row)) for row in perp.rows]
        label = f"{self.label}!" if self.label else "dual"
        return AlgebraPresentation(self.n, self.N, rels, label=label, field=self.field)

    def __repr__(self):
        name = self.label or "algebra"
        return f"<{name}: n={self.n}, N={self.N}, {len(self.relations)} relations>"


class _DegreeData:
    __slots__ = ("echelon", "subspace", "normal_words", "normal_set", "word_class")

    def __init__(self, algebra, d, echelon):
        self.echelon = echelon
        self.subspace = echelon.to_subspace()
        pivset = set(echelon.row_of)
        n = algebra.n
        self.normal_words = tuple(
            index_word(i, d, n) for i in range(n**d) if i not in pivset
        )
        self.normal_set = frozenset(self.normal_words)
        self.word_class = {}


class AlgebraClass:
    """An element of A_d in coordinates over the degree-d normal basis."""

    __slots__ = ("algebra", "degree", "coords")

    def __init__(self, algebra, degree, coords):
        self.algebra = algebra
        self.degree = degree
        self.coords = {w: c for w, c in coords.items() if c}

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other):
        self._check(other)
        coords = dict(self.coords)
        for w, c in other.coords.items():
            cur = coords.get(w)
            s = c if cur is None else cur + c
            if s:
                coords[w] = s
            elif cur is not None:
                del coords[w]
        return AlgebraClass(self.algebra, self.degree, coords)

    def __neg__(self):
        return AlgebraClass(
            self.algebra, self.degree, {w: -c for w, c in self.coords.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return AlgebraClass(self.algebra, self.degree, {})
        return AlgebraClass(
            self.algebra, self.degree, {w: c * v for w, v in self.coords.items()}
        )

    def __mul__(self, other):
        """Product in A; with a scalar argument, scaling."""
        if not isinstance(other, AlgebraClass):
            return self.scale(other)
        if other.algebra is not self.algebra:
            raise ValueError("algebra mismatch")
        A = self.algebra
        out = {}
        for u, cu in self.coords.items():
            for v, cv in other.coords.items():
                c = cu * cv
                for w, cw in A.class_of_word(u + v).coords.items():
                    cur = out.get(w)
                    s = c * cw if cur is None else cur + c * cw
                    if s:
                        out[w] = s
                    elif cur is not None:
                        del out[w]
        return AlgebraClass(A, self.degree + other.degree, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraClass)
            and self.algebra is other.algebra
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def as_tensor(self) -> Tensor:
        return Tensor(self.algebra.n, self.degree, dict(self.coords))

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("algebra mismatch")
        if self.degree != other.degree:
            raise ValueError("degree mismatch")

    def __repr__(self):
        return f"AlgebraClass(deg={self.degree}, {self.coords!r})"
