"""Vector superspaces, tensor powers, the signed symmetric-group action, and
exact subspace linear algebra.

Basis words
-----------
A basis vector of the n-th tensor power of a d-dimensional superspace is a
word ``(i_1, ..., i_n)`` with letters in ``1..d``.  Words of equal length are
ordered lexicographically with the convention x_1 > x_2 > ... > x_d, i.e. the
*smallest tuple* is the *largest* monomial.  Row reduction always pivots on
the largest monomial, so a pivot rewrites to strictly smaller words; this is
the order that makes reduction operators and confluence work.

The action of a permutation follows the rule of signs:

    c_sigma(v_1 x ... x v_n) = sign * v_{sigma^-1(1)} x ... x v_{sigma^-1(n)}

where the sign is -1 raised to the sum of parity(v_i)*parity(v_j) over the
inversions (i, j) of sigma.

Duality
-------
Dual tensors are stored over the same index words; the order-reversing
pairing  < x^{j_1}...x^{j_n} , x_{i_1}...x_{i_n} >  is 1 exactly when
``(j_1..j_n)`` equals the reversal of ``(i_1..i_n)``.  The reversal lives
only in :func:`dual_complement`, never in the data.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .superpoly import SuperPolynomial

Word = tuple  # tuple of letters in 1..d


class SuperSpace:
    """A finite-dimensional Z2-graded vector space with a fixed graded basis.

    ``fmt`` lists the parities of the basis vectors x_1..x_d.  The standard
    format puts all even vectors first; constructors for the classical
    families emit standard format, but nothing below assumes it.
    """

    def __init__(self, fmt):
        fmt = tuple(int(x) for x in fmt)
        if any(x not in (0, 1) for x in fmt):
            raise ValueError("format entries must be 0 (even) or 1 (odd)")
        self.format = fmt
        self.dim = len(fmt)
        self.p = fmt.count(0)
        self.q = fmt.count(1)

    @classmethod
    def standard(cls, p: int, q: int) -> "SuperSpace":
        return cls((0,) * p + (1,) * q)

    def parity(self, letter: int) -> int:
        return self.format[letter - 1]

    def word_parity(self, word: Word) -> int:
        return sum(self.format[i - 1] for i in word) % 2

    def words(self, n: int):
        return itertools.product(range(1, self.dim + 1), repeat=n)

    def superdim(self) -> int:
        return self.p - self.q

    def __eq__(self, other):
        return isinstance(other, SuperSpace) and self.format == other.format

    def __hash__(self):
        return hash(self.format)

    def __repr__(self):
        return f"SuperSpace({self.p}|{self.q}, format={self.format})"


class TensorVector:
    """Sparse element of V^(x n) over the word basis."""

    __slots__ = ("space", "degree", "coeffs")

    def __init__(self, space: SuperSpace, degree: int, coeffs):
        self.space = space
        self.degree = degree
        self.coeffs = {w: Fraction(c) for w, c in dict(coeffs).items() if c != 0}
        for w in self.coeffs:
            if len(w) != degree:
                raise ValueError(f"word {w} has wrong length (expected {degree})")

    @classmethod
    def basis(cls, space: SuperSpace, word: Word) -> "TensorVector":
        return cls(space, len(word), {tuple(word): Fraction(1)})

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = coeffs.get(w, Fraction(0)) + c
            if s:
                coeffs[w] = s
            else:
                del coeffs[w]
        return TensorVector(self.space, self.degree, coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "TensorVector":
        c = Fraction(c)
        return TensorVector(self.space, self.degree, {w: c * v for w, v in self.coeffs.items()})

    def tensor(self, other: "TensorVector") -> "TensorVector":
        if other.space != self.space:
            raise ValueError("tensor factors live in different spaces")
        coeffs = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                coeffs[w1 + w2] = c1 * c2
        return TensorVector(self.space, self.degree + other.degree, coeffs)

    def parity(self):
        parities = {self.space.word_parity(w) for w in self.coeffs}
        if len(parities) == 1:
            return parities.pop()
        return None

    def _check(self, other):
        if self.space != other.space or self.degree != other.degree:
            raise ValueError("tensor vectors have mismatched space or degree")

    def __eq__(self, other):
        return (
            isinstance(other, TensorVector)
            and self.space == other.space
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.space, self.degree, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs):
            c = self.coeffs[w]
            mono = "x" + "".join(f"[{i}]" for i in w)
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts)


class Permutation:
    """Permutation of {1..n} in one-line notation: sigma(i) = word[i-1]."""

    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        self.word = word

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition sigma_i = (i, i+1) in S_n."""
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        """The order-reversal involution (1,n)(2,n-1)..."""
        return cls(range(n, 0, -1))

    @property
    def n(self):
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (self*other)(i) = self(other(i))."""
        return Permutation(tuple(self.word[other.word[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def inversions(self):
        """Pairs (i, j), i < j, with sigma(i) > sigma(j); positions 1-based."""
        w = self.word
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if w[i] > w[j]
        ]

    def length(self) -> int:
        return len(self.inversions())

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def reduced_word(self):
        """A reduced expression as a list of adjacent-transposition indices.

        Bubble sort: repeatedly swap adjacent descents.  The result has
        exactly length(sigma) letters and multiplies to sigma left-to-right:
        sigma = sigma_{i_1} * sigma_{i_2} * ... (composition as above).
        """
        w = list(self.word)
        rights = []
        changed = True
        while changed:
            changed = False
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    rights.append(i + 1)
                    changed = True
        # w * sigma_{i_1} * ... * sigma_{i_k} = id, applied on the right,
        # so sigma = sigma_{i_k} ... sigma_{i_1} read in reverse order.
        return rights[::-1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"Permutation{self.word}"


def all_permutations(n: int):
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


def permute_word(sigma: Permutation, word: Word, parities) -> tuple:
    """Apply c_sigma to one basis word with explicit per-position parities.

    Returns ``(new_word, sign)``.  Position j of the result carries the letter
    from position sigma^-1(j); the sign is the rule-of-signs exponent over the
    inversions of sigma.
    """
    n = sigma.n
    if len(word) != n:
        raise ValueError("word length does not match the permutation")
    inv = sigma.inverse()
    new_word = tuple(word[inv(j) - 1] for j in range(1, n + 1))
    exponent = 0
    for (i, j) in sigma.inversions():
        exponent += parities[i - 1] * parities[j - 1]
    return new_word, (-1 if exponent % 2 else 1)


def perm_action(sigma: Permutation, v: TensorVector) -> TensorVector:
    """The signed action c_sigma on a tensor vector."""
    if sigma.n != v.degree:
        raise ValueError(f"permutation degree {sigma.n} != tensor degree {v.degree}")
    fmt = v.space.format
    coeffs: dict = {}
    for word, c in v.coeffs.items():
        parities = [fmt[i - 1] for i in word]
        new_word, sign = permute_word(sigma, word, parities)
        s = coeffs.get(new_word, Fraction(0)) + sign * c
        if s:
            coeffs[new_word] = s
        else:
            del coeffs[new_word]
    return TensorVector(v.space, v.degree, coeffs)


def group_algebra_action(element, v: TensorVector) -> TensorVector:
    """Action of a Q[S_n] element given as {Permutation: coefficient}."""
    out = TensorVector(v.space, v.degree, {})
    for sigma, c in element.items():
        out = out + perm_action(sigma, v).scale(c)
    return out


# ---------------------------------------------------------------------------
# Exact row-echelon subspaces
# ---------------------------------------------------------------------------


class Subspace:
    """Subspace of V^(x n) held as a fully reduced row echelon basis.

    Rows are dicts ``{word: Fraction}``; each row is normalized to have
    coefficient 1 at its pivot (its smallest word, i.e. largest monomial) and
    the pivot of one row never appears in another row.  Two subspaces are
    equal exactly when their row dicts coincide.
    """

    def __init__(self, space: SuperSpace, degree: int, rows=(), check_parity: bool = True):
        self.space = space
        self.degree = degree
        self.rows: dict[Word, dict] = {}  # pivot -> row
        self._cols: dict[Word, set] = {}  # word -> set of pivots whose rows touch it
        for row in rows:
            self.insert(row)
        if check_parity and not self.is_parity_homogeneous():
            raise ValueError("subspace rows must be parity-homogeneous")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_vectors(cls, vectors, check_parity: bool = True) -> "Subspace":
        vectors = list(vectors)
        if not vectors:
            raise ValueError("cannot infer the ambient space from no vectors")
        space, degree = vectors[0].space, vectors[0].degree
        return cls(space, degree, (v.coeffs for v in vectors), check_parity=check_parity)

    @classmethod
    def zero(cls, space: SuperSpace, degree: int) -> "Subspace":
        return cls(space, degree)

    @classmethod
    def full(cls, space: SuperSpace, degree: int) -> "Subspace":
        rows = ({w: Fraction(1)} for w in space.words(degree))
        return cls(space, degree, rows)

    def insert(self, row) -> bool:
        """Insert one vector (dict word->coeff); True if the rank grew."""
        row = {w: Fraction(c) for w, c in row.items() if c != 0}
        while row:
            lead = min(row)
            pivot_row = self.rows.get(lead)
            if pivot_row is None:
                # clear remaining pivot words from the tail; pivot-row tails
                # are pivot-free, so each hit disappears in one subtraction
                hits = [w for w in row if w != lead and w in self.rows]
                for w0 in hits:
                    factor = row.pop(w0)
                    for w, c in self.rows[w0].items():
                        if w == w0:
                            continue
                        s = row.get(w, Fraction(0)) - factor * c
                        if s:
                            row[w] = s
                        else:
                            row.pop(w, None)
                inv = Fraction(1) / row[lead]
                row = {w: c * inv for w, c in row.items()}
                # clear this column from existing rows (full reduction)
                for p in list(self._cols.get(lead, ())):
                    other = self.rows[p]
                    factor = other.pop(lead)
                    self._col_del(lead, p)
                    for w, c in row.items():
                        if w == lead:
                            continue
                        s = other.get(w, Fraction(0)) - factor * c
                        if s:
                            if w not in other:
                                self._col_add(w, p)
                            other[w] = s
                        elif w in other:
                            del other[w]
                            self._col_del(w, p)
                self.rows[lead] = row
                for w in row:
                    if w != lead:
                        self._col_add(w, lead)
                return True
            factor = row.pop(lead)
            for w, c in pivot_row.items():
                if w == lead:
                    continue
                s = row.get(w, Fraction(0)) - factor * c
                if s:
                    row[w] = s
                else:
                    row.pop(w, None)
        return False

    def _col_add(self, word, pivot):
        self._cols.setdefault(word, set()).add(pivot)

    def _col_del(self, word, pivot):
        s = self._cols.get(word)
        if s is not None:
            s.discard(pivot)
            if not s:
                del self._cols[word]

    # -- queries ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivots(self):
        return set(self.rows)

    def reduce(self, vector) -> dict:
        """Residual of a vector after reduction by the basis rows."""
        vector = {w: Fraction(c) for w, c in vector.items() if c != 0}
        # reduce pivot hits in increasing word order for determinism
        while True:
            hits = [w for w in vector if w in self.rows]
            if not hits:
                return vector
            lead = min(hits)
            factor = vector.pop(lead)
            for w, c in self.rows[lead].items():
                if w == lead:
                    continue
                s = vector.get(w, Fraction(0)) - factor * c
                if s:
                    vector[w] = s
                else:
                    vector.pop(w, None)

    def contains(self, vector) -> bool:
        if isinstance(vector, TensorVector):
            vector = vector.coeffs
        return not self.reduce(vector)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.rows.values())

    def coordinates(self, vector) -> dict:
        """Coordinates w.r.t. the echelon rows; raises if not in the span."""
        if isinstance(vector, TensorVector):
            vector = vector.coeffs
        coords = {p: vector.get(p, Fraction(0)) for p in self.rows}
        residual = dict(vector)
        for p, c in coords.items():
            if c == 0:
                continue
            for w, rc in self.rows[p].items():
                s = residual.get(w, Fraction(0)) - c * rc
                if s:
                    residual[w] = s
                else:
                    residual.pop(w, None)
        if residual:
            raise ValueError("vector is not in the subspace")
        return {p: c for p, c in coords.items() if c != 0}

    def basis_vectors(self):
        return [
            TensorVector(self.space, self.degree, row)
            for _, row in sorted(self.rows.items())
        ]

    def is_parity_homogeneous(self) -> bool:
        sp = self.space
        for row in self.rows.values():
            if len({sp.word_parity(w) for w in row}) > 1:
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.space == other.space
            and self.degree == other.degree
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.space, self.degree, tuple(sorted(self.rows))))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, degree={self.degree}, space={self.space.p}|{self.space.q})"


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    _check_ambient(A, B)
    out = Subspace(A.space, A.degree)
    for row in A.rows.values():
        out.insert(row)
    for row in B.rows.values():
        out.insert(row)
    return out


def subspace_intersection(A: Subspace, B: Subspace) -> Subspace:
    """A cap B via the kernel of the residual map of A's basis modulo B."""
    _check_ambient(A, B)
    if A.dim > B.dim:
        A, B = B, A
    basis = list(A.rows.values())
    residuals = [B.reduce(row) for row in basis]
    out = Subspace(A.space, A.degree)
    for combo in kernel_of_vectors(residuals):
        vec: dict = {}
        for k, ck in combo.items():
            for w, c in basis[k].items():
                s = vec.get(w, Fraction(0)) + ck * c
                if s:
                    vec[w] = s
                else:
                    del vec[w]
        out.insert(vec)
    return out


def subspace_combine(kind: str, A: Subspace, B: Subspace) -> Subspace:
    if kind == "sum":
        return subspace_sum(A, B)
    if kind == "intersection":
        return subspace_intersection(A, B)
    raise ValueError(f"unknown combination kind {kind!r}")


def _check_ambient(A: Subspace, B: Subspace):
    if A.space != B.space or A.degree != B.degree:
        raise ValueError("subspaces live in different ambient tensor powers")


def kernel_of_vectors(vectors):
    """Kernel of the map e_k -> vectors[k], as a list of coefficient dicts.

    Forward elimination with coefficient tags: a column that reduces to zero
    yields one kernel element.
    """
    pivots: dict = {}  # lead -> (row, tags)
    kernel = []
    for k, vec in enumerate(vectors):
        row = {w: Fraction(c) for w, c in vec.items() if c != 0}
        tags = {k: Fraction(1)}
        while row:
            lead = min(row)
            entry = pivots.get(lead)
            if entry is None:
                inv = Fraction(1) / row[lead]
                pivots[lead] = (
                    {w: c * inv for w, c in row.items()},
                    {t: c * inv for t, c in tags.items()},
                )
                break
            prow, ptags = entry
            factor = row.pop(lead)
            for w, c in prow.items():
                if w == lead:
                    continue
                s = row.get(w, Fraction(0)) - factor * c
                if s:
                    row[w] = s
                else:
                    row.pop(w, None)
            for t, c in ptags.items():
                s = tags.get(t, Fraction(0)) - factor * c
                if s:
                    tags[t] = s
                else:
                    tags.pop(t, None)
        else:
            kernel.append(tags)
    return kernel


class RankCounter:
    """Forward-only echelon used for matrix ranks (no canonical form)."""

    def __init__(self):
        self.rows: dict = {}

    def insert(self, vec) -> bool:
        row = {w: Fraction(c) for w, c in vec.items() if c != 0}
        while row:
            lead = min(row)
            pivot_row = self.rows.get(lead)
            if pivot_row is None:
                inv = Fraction(1) / row[lead]
                self.rows[lead] = {w: c * inv for w, c in row.items()}
                return True
            factor = row.pop(lead)
            for w, c in pivot_row.items():
                if w == lead:
                    continue
                s = row.get(w, Fraction(0)) - factor * c
                if s:
                    row[w] = s
                else:
                    row.pop(w, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def matrix_rank(columns) -> int:
    rc = RankCounter()
    for col in columns:
        rc.insert(col)
    return rc.rank


# ---------------------------------------------------------------------------
# Antisymmetrizer image and duality
# ---------------------------------------------------------------------------


def antisymmetrizer_element(n: int):
    """Y_n = (1/n!) sum_sigma sgn(sigma) sigma in Q[S_n]."""
    c = Fraction(1, factorial(n))
    return {sigma: c * sigma.sign() for sigma in all_permutations(n)}


def antisymmetrizer_image(space: SuperSpace, n: int) -> Subspace:
    """The antisymmetric n-tensors as a subspace of V^(x n).

    The image of c_{Y_n} is spanned by its values on the weakly increasing
    words (one per S_n-orbit); a value vanishes exactly when the word repeats
    an even letter, so those words are skipped.
    """
    if n == 0:
        return Subspace(space, 0, [{(): Fraction(1)}])
    Y = antisymmetrizer_element(n)
    rows = []
    for word in itertools.combinations_with_replacement(range(1, space.dim + 1), n):
        if any(
            word[k] == word[k + 1] and space.parity(word[k]) == 0
            for k in range(n - 1)
        ):
            continue
        v = group_algebra_action(Y, TensorVector.basis(space, word))
        if not v.is_zero():
            rows.append(v.coeffs)
    return Subspace(space, n, rows)


def wedge_dimension(p: int, q: int, n: int) -> int:
    """Closed-form dimension of the antisymmetric n-tensors of a p|q space."""
    from math import comb

    total = 0
    for m in range(0, n + 1):
        mp = n - m
        odd_factor = 1 if mp == 0 else comb(q + mp - 1, mp)
        total += comb(p, m) * odd_factor
    return total


def dual_complement(R: Subspace) -> Subspace:
    """The annihilator of R under the order-reversing duality pairing.

    A dual word j pairs nonzero with a word i exactly when j is the reversal
    of i, so the annihilator is the classical null space of R's basis with
    all words reversed.  Dual basis vectors inherit the parity of the primal
    ones, hence the same ambient space describes the result.
    """
    if not R.is_parity_homogeneous():
        raise ValueError("dual complement requires a parity-homogeneous subspace")
    space, n = R.space, R.degree
    reversed_rows = Subspace(space, n)
    for row in R.rows.values():
        reversed_rows.insert({w[::-1]: c for w, c in row.items()})
    out = Subspace(space, n)
    pivots = reversed_rows.pivots()
    rows = reversed_rows.rows
    for w in space.words(n):
        if w in pivots:
            continue
        vec = {w: Fraction(1)}
        for pvt, row in rows.items():
            c = row.get(w)
            if c:
                vec[pvt] = -c
        out.insert(vec)
    return out


def supertrace(matrix, fmt) -> object:
    """Supertrace of a square matrix whose entry (i, j) has parity i^+j^.

    Entries may be rationals or SuperPolynomials; a parity-inconsistent
    polynomial entry raises ValueError.
    """
    fmt = tuple(fmt)
    d = len(matrix)
    if any(len(row) != d for row in matrix) or d != len(fmt):
        raise ValueError("matrix shape does not match the format")
    total = None
    for i in range(d):
        for j in range(d):
            entry = matrix[i][j]
            if isinstance(entry, SuperPolynomial):
                par = entry.parity()
                if par is not None and par != (fmt[i] + fmt[j]) % 2:
                    raise ValueError(f"entry ({i + 1},{j + 1}) has inconsistent parity")
        term = matrix[i][i] if fmt[i] == 0 else -matrix[i][i]
        total = term if total is None else total + term
    return total
