"""Words and homogeneous tensors over a finite generator alphabet.

A word is a tuple of generator indices in ``range(n)``; a grade-k tensor is
a finite scalar combination of length-k words.  Words are ordered (and
numbered) lexicographically with x_1 < ... < x_n, i.e. a word is read as a
base-n numeral; this single convention fixes every echelon basis downstream.

Tensors double as elements of V^{⊗k} and of its dual: the dual basis pairs
diagonally with the word basis, so "over V*" is a semantic annotation only.
"""

from __future__ import annotations

Word = tuple  # tuple of generator indices


def word_index(word, n: int) -> int:
    idx = 0
    for a in word:
        idx = idx * n + a
    return idx


def index_word(idx: int, k: int, n: int) -> Word:
    letters = [0] * k
    for pos in range(k - 1, -1, -1):
        idx, letters[pos] = divmod(idx, n)
    return tuple(letters)


def all_words(n: int, k: int):
    """All length-k words in lex order."""
    if k == 0:
        yield ()
        return
    if n == 0:
        return
    word = [0] * k
    while True:
        yield tuple(word)
        pos = k - 1
        while pos >= 0 and word[pos] == n - 1:
            word[pos] = 0
            pos -= 1
        if pos < 0:
            return
        word[pos] += 1


class Tensor:
    """Homogeneous element of V^{⊗k}: a map word -> scalar without zeros."""

    __slots__ = ("n", "grade", "terms")

    def __init__(self, n: int, grade: int, terms=None):
        self.n = n
        self.grade = grade
        clean = {}
        if terms:
            for w, c in terms.items():
                if len(w) != grade:
                    raise ValueError(f"word {w} does not have grade {grade}")
                if any(a < 0 or a >= n for a in w):
                    raise ValueError(f"word {w} out of alphabet range {n}")
                if c:
                    clean[w] = c
        self.terms = clean

    @classmethod
    def from_word(cls, n, word, coeff=1):
        return cls(n, len(word), {tuple(word): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            cur = terms.get(w)
            s = c if cur is None else cur + c
            if s:
                terms[w] = s
            elif cur is not None:
                del terms[w]
        return Tensor(self.n, self.grade, terms)

    def __neg__(self):
        return Tensor(self.n, self.grade, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return Tensor(self.n, self.grade, {})
        return Tensor(self.n, self.grade, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Tensor)
            and self.n == other.n
            and self.grade == other.grade
            and self.terms == other.terms
        )

    def to_vec(self):
        n = self.n
        return {word_index(w, n): c for w, c in self.terms.items()}

    @classmethod
    def from_vec(cls, n, grade, vec):
        return cls(n, grade, {index_word(i, grade, n): c for i, c in vec.items()})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("alphabet mismatch")
        if self.grade != other.grade:
            raise ValueError("grade mismatch")

    def __repr__(self):
        parts = [f"{c}*x{list(w)}" for w, c in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"


def concat(a: Tensor, b: Tensor) -> Tensor:
    """Bilinear extension of word concatenation (product in T(V))."""
    if a.n != b.n:
        raise ValueError("alphabet mismatch")
    terms = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = u + v
            c = cu * cv
            cur = terms.get(w)
            s = c if cur is None else cur + c
            if s:
                terms[w] = s
            elif cur is not None:
                del terms[w]
    return Tensor(a.n, a.grade + b.grade, terms)


def pair(xi: Tensor, v: Tensor):
    """Natural pairing <V*^{⊗k}, V^{⊗k}>; diagonal in the word bases."""
    if xi.n != v.n:
        raise ValueError("alphabet mismatch")
    if xi.grade != v.grade:
        raise ValueError("grade mismatch")
    total = None
    small, large = (xi.terms, v.terms) if len(xi.terms) <= len(v.terms) else (v.terms, xi.terms)
    for w, c in small.items():
        d = large.get(w)
        if d is not None:
            total = c * d if total is None else total + c * d
    return total if total is not None else 0


def z_index(i: int, j: int, n: int) -> int:
    """Flat index of the generator z_i^j of end(A): subscript-major, i*n+j."""
    return i * n + j


def shuffle_pairs(xi: Tensor, v: Tensor) -> Tensor:
    """Interleave a dual tensor and a tensor into a word over the z-alphabet.

    On words: (j_1..j_N, i_1..i_N) -> (z_{i_1}^{j_1}, ..., z_{i_N}^{j_N}),
    extended bilinearly.  This realizes R^⊥ ⊗ R inside (V*⊗V)^{⊗N}.
    """
    if xi.n != v.n:
        raise ValueError("alphabet mismatch")
    if xi.grade != v.grade:
        raise ValueError("grade mismatch")
    n = xi.n
    terms = {}
    for jw, cj in xi.terms.items():
        for iw, ci in v.terms.items():
            word = tuple(i * n + j for i, j in zip(iw, jw))
            c = cj * ci
            cur = terms.get(word)
            s = c if cur is None else cur + c
            if s:
                terms[word] = s
            elif cur is not None:
                del terms[word]
    return Tensor(n * n, xi.grade, terms)
