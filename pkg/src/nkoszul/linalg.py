"""Exact linear algebra over a scalar field.

Vectors are sparse ``{column: scalar}`` dicts; columns index words of a
tensor power under the fixed lex order, so ambient dimensions can be large
(millions) as long as the vectors stay sparse.  All elimination is exact;
there is no tolerance anywhere.
"""

from __future__ import annotations


class Matrix:
    """A list of sparse rows with a fixed column count."""

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols: int, rows=None):
        self.ncols = ncols
        self.rows = [] if rows is None else list(rows)

    @classmethod
    def from_dense(cls, entries):
        ncols = len(entries[0]) if entries else 0
        rows = []
        for dense in entries:
            if len(dense) != ncols:
                raise ValueError("ragged matrix")
            rows.append({j: v for j, v in enumerate(dense) if v})
        return cls(ncols, rows)

    @property
    def nrows(self):
        return len(self.rows)

    def add_row(self, row):
        self.rows.append(row)

    def apply(self, vec):
        """Matrix-vector product M·v for a sparse coordinate vector v."""
        out = {}
        for i, row in enumerate(self.rows):
            s = None
            for j, a in row.items():
                x = vec.get(j)
                if x is not None:
                    s = a * x if s is None else s + a * x
            if s:
                out[i] = s
        return out


class Echelon:
    """Mutable row-echelon accumulator.

    Pivot entries are normalized to 1.  With ``reduced=True`` the rows are
    kept in reduced row echelon form (pivot columns cleared from every other
    row), which is what canonical :class:`Subspace` bases require; with
    ``reduced=False`` only rank and a spanning echelon are maintained, which
    is cheaper for large dimension counts.
    """

    __slots__ = ("ncols", "reduced", "row_of")

    def __init__(self, ncols: int, reduced: bool = True):
        self.ncols = ncols
        self.reduced = reduced
        self.row_of = {}  # pivot column -> row dict (includes the pivot entry 1)

    @property
    def rank(self) -> int:
        return len(self.row_of)

    def add(self, vec) -> bool:
        """Absorb ``vec``; return True when the rank grew."""
        row = {j: v for j, v in vec.items() if v}
        row_of = self.row_of
        if self.reduced:
            # Existing rows touch no pivot column but their own, so one pass
            # over the initial pivot hits clears them all.
            for j in sorted(c for c in row if c in row_of):
                c = row.pop(j)
                for col, val in row_of[j].items():
                    if col == j:
                        continue
                    cur = row.get(col)
                    if cur is None:
                        row[col] = -c * val
                    else:
                        cur = cur - c * val
                        if cur:
                            row[col] = cur
                        else:
                            del row[col]
        else:
            while row:
                j = min(row)
                prow = row_of.get(j)
                if prow is None:
                    break
                c = row.pop(j)
                for col, val in prow.items():
                    if col == j:
                        continue
                    cur = row.get(col)
                    if cur is None:
                        row[col] = -c * val
                    else:
                        cur = cur - c * val
                        if cur:
                            row[col] = cur
                        else:
                            del row[col]
        if not row:
            return False
        j = min(row)
        lead = row[j]
        if lead != 1:
            row = {col: val / lead for col, val in row.items()}
            row[j] = 1
        if self.reduced:
            for pcol, prow in row_of.items():
                c = prow.get(j)
                if c is None:
                    continue
                del prow[j]
                for col, val in row.items():
                    if col == j:
                        continue
                    cur = prow.get(col)
                    if cur is None:
                        prow[col] = -c * val
                    else:
                        cur = cur - c * val
                        if cur:
                            prow[col] = cur
                        else:
                            del prow[col]
        row_of[j] = row
        return True

    def extend(self, vecs) -> int:
        grew = 0
        for v in vecs:
            if self.add(v):
                grew += 1
        return grew

    def reduce(self, vec):
        """Remainder of ``vec`` modulo the row space (reduced mode only).

        The remainder is supported on non-pivot columns and is the unique
        representative of ``vec`` modulo the row space there.
        """
        assert self.reduced, "reduce() needs a reduced echelon"
        row_of = self.row_of
        out = {}
        corrections = []
        for j, v in vec.items():
            if not v:
                continue
            prow = row_of.get(j)
            if prow is None:
                out[j] = v
            else:
                corrections.append((v, prow))
        # In reduced form a pivot column occurs only in its own row, so the
        # corrections never hit further pivot columns.
        for c, prow in corrections:
            for col, val in prow.items():
                if col in row_of:
                    continue
                cur = out.get(col)
                if cur is None:
                    out[col] = -c * val
                else:
                    cur = cur - c * val
                    if cur:
                        out[col] = cur
                    else:
                        del out[col]
        return out

    def to_subspace(self):
        assert self.reduced, "subspaces need reduced echelon bases"
        pivots = sorted(self.row_of)
        rows = tuple(dict(self.row_of[p]) for p in pivots)
        return Subspace(self.ncols, tuple(pivots), rows)


class Subspace:
    """A subspace given by its reduced-row-echelon basis.

    The representation is canonical: two subspaces are equal iff their
    pivot tuples and basis rows are identical.
    """

    __slots__ = ("ambient_dim", "pivots", "rows")

    def __init__(self, ambient_dim, pivots, rows):
        self.ambient_dim = ambient_dim
        self.pivots = tuple(pivots)
        self.rows = tuple(rows)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def contains(self, vec) -> bool:
        rem = _remainder(self, vec)
        return not rem

    def coordinates(self, vec):
        """Coordinates of ``vec`` in the basis rows; raises if not a member.

        Returns a sparse ``{row_index: scalar}`` dict.  For a reduced echelon
        basis the coordinate along row i is just the entry at pivot i.
        """
        coords = {}
        for i, p in enumerate(self.pivots):
            c = vec.get(p)
            if c:
                coords[i] = c
        # Verify: sum of coordinate multiples must reproduce vec exactly.
        residual = dict(vec)
        for i, c in coords.items():
            for col, val in self.rows[i].items():
                cur = residual.get(col)
                upd = (cur - c * val) if cur is not None else -c * val
                if upd:
                    residual[col] = upd
                elif cur is not None:
                    del residual[col]
        if any(v for v in residual.values()):
            raise ValueError("vector is not in the subspace")
        return coords

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _remainder(space: Subspace, vec):
    rem = {j: v for j, v in vec.items() if v}
    pivset = set(space.pivots)
    hits = sorted(j for j in rem if j in pivset)
    index = {p: i for i, p in enumerate(space.pivots)}
    for j in hits:
        c = rem.pop(j, None)
        if not c:
            continue
        for col, val in space.rows[index[j]].items():
            if col == j:
                continue
            cur = rem.get(col)
            if cur is None:
                rem[col] = -c * val
            else:
                cur = cur - c * val
                if cur:
                    rem[col] = cur
                else:
                    del rem[col]
    return rem


def rref(matrix: Matrix):
    """Reduced row echelon form of the row space; returns (Subspace, rank)."""
    ech = Echelon(matrix.ncols, reduced=True)
    ech.extend(matrix.rows)
    sub = ech.to_subspace()
    return sub, sub.dim


def rank(matrix: Matrix) -> int:
    ech = Echelon(matrix.ncols, reduced=False)
    ech.extend(matrix.rows)
    return ech.rank


def kernel(matrix: Matrix) -> Subspace:
    """Right kernel {v : M v = 0} as a subspace of the column space."""
    sub, _ = rref(matrix)
    pivset = set(sub.pivots)
    index = {p: i for i, p in enumerate(sub.pivots)}
    ech = Echelon(matrix.ncols, reduced=True)
    for j in range(matrix.ncols):
        if j in pivset:
            continue
        vec = {j: 1}
        for p in sub.pivots:
            c = sub.rows[index[p]].get(j)
            if c:
                vec[p] = -c
        ech.add(vec)
    return ech.to_subspace()


def full_space(ambient_dim: int) -> Subspace:
    rows = tuple({j: 1} for j in range(ambient_dim))
    return Subspace(ambient_dim, tuple(range(ambient_dim)), rows)


def zero_space(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, (), ())


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    if u.ambient_dim != w.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    ech = Echelon(u.ambient_dim, reduced=True)
    ech.extend(u.rows)
    ech.extend(w.rows)
    return ech.to_subspace()


def intersect(u: Subspace, w: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block trick.

    Reduce the stacked block matrix [[U U], [W 0]]; rows whose pivots fall in
    the right block have right halves forming an RREF basis of U ∩ W.
    """
    if u.ambient_dim != w.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    amb = u.ambient_dim
    ech = Echelon(2 * amb, reduced=True)
    for row in u.rows:
        double = dict(row)
        for col, val in row.items():
            double[col + amb] = val
        ech.add(double)
    for row in w.rows:
        ech.add(dict(row))
    pivots = []
    rows = []
    for p in sorted(ech.row_of):
        if p < amb:
            continue
        shifted = {col - amb: val for col, val in ech.row_of[p].items()}
        pivots.append(p - amb)
        rows.append(shifted)
    return Subspace(amb, tuple(pivots), tuple(rows))


class BasisSolver:
    """Coordinate extraction in an arbitrary (not necessarily echelon) basis.

    Augments each basis vector with a unit tag column and echelonizes once;
    coordinates of a member vector are then read off the tag columns of its
    remainder.
    """

    __slots__ = ("ambient_dim", "size", "_ech")

    def __init__(self, rows, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.size = len(rows)
        ech = Echelon(ambient_dim + self.size, reduced=True)
        for i, row in enumerate(rows):
            aug = dict(row)
            aug[ambient_dim + i] = 1
            ech.add(aug)
        if any(p >= ambient_dim for p in ech.row_of):
            raise ValueError("basis rows are linearly dependent")
        self._ech = ech

    def coordinates(self, vec):
        rem = self._ech.reduce(vec)
        coords = {}
        for col, val in rem.items():
            if col < self.ambient_dim:
                raise ValueError("vector is not in the span of the basis")
            coords[col - self.ambient_dim] = -val
        return coords
