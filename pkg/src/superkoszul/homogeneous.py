"""N-homogeneous superalgebras A(V, R): presentations, graded components,
duals, white/black products, the endomorphism algebra, and a rewriting engine
for normal forms.

An algebra is presented by a superspace V, a degree N >= 2, and a
parity-homogeneous relation subspace R inside the N-th tensor power.  The
degree-n relation space is the sum of all placements of R,

    R_n = sum over i+j+N = n of V^(x i) x R x V^(x j),

and dim A_n = d^n - dim R_n.

Rewriting.  The row-echelon basis of R doubles as a reduction operator: each
pivot (leading) monomial rewrites to minus the tail, which is supported on
lexicographically smaller words.  A word is *reduced* when no length-N window
is a pivot.  Rewriting terminates because every step strictly decreases the
word; when the system is confluent the reduced words represent a basis of A
and normal forms are well defined.  Confluence is checked once per algebra
(see :meth:`HomogAlgebra.confluence_report`) and normal-form computations
refuse to run without it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hecke import YangBaxterOperator, symmetrizer_image
from .tensorspace import (
    Subspace,
    SuperSpace,
    TensorVector,
    antisymmetrizer_image,
    dual_complement,
    permute_word,
    subspace_intersection,
    subspace_sum,
)

Word = tuple


class NonConfluentError(RuntimeError):
    """Normal forms were requested for an algebra whose rewriting system is
    not confluent; they would depend on the rewriting strategy."""


class ReductionOperator:
    """The projection of V^(x N) determined by a relation subspace.

    Every pivot (leading) word of the relation echelon rewrites to minus the
    tail; all other words are fixed.  The kernel of the projection is exactly
    the relation subspace, and rewrite targets are strictly smaller words, so
    iterated application inside longer words terminates.
    """

    def __init__(self, space: SuperSpace, degree: int, rewrite: dict):
        self.space = space
        self.degree = degree
        self.rewrite = rewrite  # pivot word -> {word: coeff}, the image of the pivot

    def reduced(self, word) -> bool:
        return tuple(word) not in self.rewrite

    def apply(self, v: TensorVector) -> TensorVector:
        out: dict = {}

        def bump(w, c):
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            else:
                del out[w]

        for w, c in v.coeffs.items():
            target = self.rewrite.get(w)
            if target is None:
                bump(w, c)
            else:
                for u, a in target.items():
                    bump(u, c * a)
        return TensorVector(self.space, self.degree, out)

    def kernel(self) -> Subspace:
        rows = []
        for pivot, tail in self.rewrite.items():
            row = {w: -c for w, c in tail.items()}
            row[pivot] = Fraction(1)
            rows.append(row)
        return Subspace(self.space, self.degree, rows)


@dataclass
class ConfluenceReport:
    """Outcome of the overlap-dimension test, one entry per overlap width."""

    entries: list = field(default_factory=list)  # (i, lhs, rhs)

    def add(self, i: int, lhs: int, rhs: int):
        self.entries.append((i, lhs, rhs))

    @property
    def passed(self) -> bool:
        return all(lhs <= rhs for _, lhs, rhs in self.entries)

    def __str__(self):
        if not self.entries:
            return "confluence: PASS (no overlaps to check)"
        lines = []
        for i, lhs, rhs in self.entries:
            verdict = "PASS" if lhs <= rhs else "FAIL"
            lines.append(f"overlap width {i}: dim(join image) = {lhs} vs dim(image sum) = {rhs}: {verdict}")
        return "\n".join(lines)


@dataclass
class ExtraConditionReport:
    """Containment checks R_{n+N,0} cap R_{n+N,n} <= R_{n+N,n-1}, 2 <= n < N."""

    entries: list = field(default_factory=list)  # (n, ok, defect_dim)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.entries)

    @property
    def vacuous(self) -> bool:
        return not self.entries

    def __str__(self):
        if not self.entries:
            return "extra condition: PASS (vacuous, quadratic case)"
        lines = []
        for n, ok, defect in self.entries:
            verdict = "PASS" if ok else f"FAIL (defect dimension {defect})"
            lines.append(f"extra condition at n={n}: {verdict}")
        return "\n".join(lines)


class HomogAlgebra:
    """A(V, R) with R a parity-homogeneous subspace of V^(x N)."""

    def __init__(self, space: SuperSpace, N: int, relations: Subspace, label: str = ""):
        if N < 2:
            raise ValueError("the relation degree N must be at least 2")
        if relations.space != space or relations.degree != N:
            raise ValueError("relations must live in the N-th tensor power of V")
        if not relations.is_parity_homogeneous():
            raise ValueError("relation subspace must be parity-homogeneous")
        self.space = space
        self.N = N
        self.R = relations
        self.label = label or f"A({space.p}|{space.q}, N={N})"
        self._Rn: dict[int, Subspace] = {}
        self._dual_star: dict[int, Subspace] = {}
        self._nf_memo: dict[Word, dict] = {}
        self._reduced_words: dict[int, list] = {}
        self._confluence: ConfluenceReport | None = None
        self._extra: ExtraConditionReport | None = None

    # ------------------------------------------------------------------
    # presentation data
    # ------------------------------------------------------------------

    @property
    def dim_V(self) -> int:
        return self.space.dim

    def rewrite_map(self) -> dict:
        """pivot word -> tail dict; the reduction operator S sends a pivot
        monomial to minus the tail and fixes every other monomial."""
        rw = {}
        for pivot, row in self.R.rows.items():
            rw[pivot] = {w: -c for w, c in row.items() if w != pivot}
        return rw

    def reduction_operator(self) -> ReductionOperator:
        """The projection whose kernel is the relation subspace."""
        return ReductionOperator(self.space, self.N, self.rewrite_map())

    def placement_rows(self, i: int, j: int):
        """Echelon rows of V^(x i) x R x V^(x j) (already a reduced basis)."""
        sp = self.space
        for prefix in sp.words(i):
            for row in self.R.rows.values():
                for suffix in sp.words(j):
                    yield {prefix + w + suffix: c for w, c in row.items()}

    def graded_component(self, n: int):
        """(R_n, dim A_n) for the degree-n component."""
        Rn = self._graded_relations(n)
        return Rn, self.dim_V ** n - Rn.dim

    def dim_component(self, n: int) -> int:
        return self.graded_component(n)[1]

    def dims(self, deg_max: int) -> list[int]:
        return [self.dim_component(n) for n in range(deg_max + 1)]

    def _graded_relations(self, n: int) -> Subspace:
        if n in self._Rn:
            return self._Rn[n]
        sp, N = self.space, self.N
        if n < N:
            out = Subspace(sp, n)
        elif n == N:
            out = self.R
        else:
            prev = self._graded_relations(n - 1)
            out = Subspace(sp, n)
            for row in prev.rows.values():
                for letter in range(1, sp.dim + 1):
                    out.insert({w + (letter,): c for w, c in row.items()})
            for row in self.placement_rows(n - N, 0):
                out.insert(row)
        self._Rn[n] = out
        return out

    # ------------------------------------------------------------------
    # the dual algebra and its graded dual components
    # ------------------------------------------------------------------

    def dual_algebra(self) -> "HomogAlgebra":
        return HomogAlgebra(
            self.space, self.N, dual_complement(self.R), label=f"{self.label}!"
        )

    def dual_star_component(self, n: int) -> Subspace:
        """Degree-n component of the graded dual of the dual algebra:
        the full tensor power below degree N, the intersection of all
        placements of R from degree N on."""
        if n in self._dual_star:
            return self._dual_star[n]
        sp, N = self.space, self.N
        if n < N:
            out = Subspace.full(sp, n)
        elif n == N:
            out = self.R
        else:
            prev = self.dual_star_component(n - 1)
            lifted = Subspace(sp, n)
            for letter in range(1, sp.dim + 1):
                for row in prev.rows.values():
                    lifted.insert({(letter,) + w: c for w, c in row.items()})
            last = Subspace(sp, n)
            for row in self.placement_rows(0, n - N):
                last.insert(row)
            out = subspace_intersection(lifted, last)
        self._dual_star[n] = out
        return out

    # ------------------------------------------------------------------
    # rewriting: reduced words, confluence, normal forms
    # ------------------------------------------------------------------

    def is_reduced(self, word: Word) -> bool:
        pivots = self.R.rows
        N = self.N
        return not any(word[k : k + N] in pivots for k in range(len(word) - N + 1))

    def reduced_words(self, n: int) -> list:
        """All reduced words of length n, built letter by letter."""
        if n in self._reduced_words:
            return self._reduced_words[n]
        pivots = self.R.rows
        N, d = self.N, self.dim_V
        out: list = []

        def extend(word):
            if len(word) == n:
                out.append(word)
                return
            for letter in range(1, d + 1):
                nxt = word + (letter,)
                if len(nxt) >= N and nxt[-N:] in pivots:
                    continue
                extend(nxt)

        extend(())
        self._reduced_words[n] = out
        return out

    def confluence_report(self) -> ConfluenceReport:
        """Overlap test for the reduction operator S with kernel R.

        For each overlap width i in 1..N-1, compare inside V^(x N+i):
        the image of the join of the two shifted operators (computed from
        the kernel intersection) against the span of their images (spanned
        by the monomials reduced for at least one of them).  Confluent means
        the first is no larger than the second.
        """
        if self._confluence is not None:
            return self._confluence
        report = ConfluenceReport()
        sp, N, d = self.space, self.N, self.dim_V
        pivots = self.R.rows
        for i in range(1, N):
            n = N + i
            left = Subspace(sp, n, self.placement_rows(0, i))
            right = Subspace(sp, n, self.placement_rows(i, 0))
            total = subspace_sum(left, right)
            dim_ker_join = left.dim + right.dim - total.dim  # dim of kernel cap
            lhs = d ** n - dim_ker_join
            both_nonreduced = sum(
                1
                for w in sp.words(n)
                if w[:N] in pivots and w[i:] in pivots
            )
            rhs = d ** n - both_nonreduced
            report.add(i, lhs, rhs)
        self._confluence = report
        return report

    def extra_condition_report(self) -> ExtraConditionReport:
        """Containment R x V^n cap V^n x R <= V^(n-1) x R x V, 2 <= n < N."""
        if self._extra is not None:
            return self._extra
        report = ExtraConditionReport()
        sp, N = self.space, self.N
        for n in range(2, N):
            m = n + N
            first = Subspace(sp, m, self.placement_rows(0, n))
            last = Subspace(sp, m, self.placement_rows(n, 0))
            middle = Subspace(sp, m, self.placement_rows(n - 1, 1))
            meet = subspace_intersection(first, last)
            defect = sum(0 if middle.contains(row) else 1 for row in meet.rows.values())
            report.entries.append((n, defect == 0, defect))
        self._extra = report
        return report

    def require_confluence(self):
        if not self.confluence_report().passed:
            raise NonConfluentError(
                f"{self.label}: rewriting is not confluent for this basis/order; "
                "normal forms would be strategy-dependent"
            )

    def normal_form_word(self, word: Word, rightmost: bool = False) -> dict:
        """Normal form of a basis word as {reduced word: coefficient}.

        Rewrites the leftmost non-reduced window first (rightmost when asked,
        used to confirm strategy independence).  Requires confluence.
        """
        self.require_confluence()
        return self._nf(tuple(word), rightmost)

    def _nf(self, word: Word, rightmost: bool = False) -> dict:
        memo = self._nf_memo if not rightmost else None
        if memo is not None and word in memo:
            return memo[word]
        pivots = self.R.rows
        N = self.N
        positions = range(len(word) - N + 1)
        if rightmost:
            positions = reversed(positions)
        hit = None
        for k in positions:
            if word[k : k + N] in pivots:
                hit = k
                break
        if hit is None:
            result = {word: Fraction(1)}
        else:
            prefix, window, suffix = word[:hit], word[hit : hit + N], word[hit + N :]
            row = pivots[window]
            result = {}
            for w, c in row.items():
                if w == window:
                    continue
                # S(window) = -tail, i.e. window ~ -(row - window) in A
                sub = self._nf(prefix + w + suffix, rightmost)
                for u, a in sub.items():
                    s = result.get(u, Fraction(0)) - c * a
                    if s:
                        result[u] = s
                    else:
                        del result[u]
        if memo is not None:
            memo[word] = result
        return result

    def normal_form(self, v: TensorVector, rightmost: bool = False) -> TensorVector:
        if v.space != self.space:
            raise ValueError("vector does not live in this algebra's generating space")
        out: dict = {}
        for w, c in v.coeffs.items():
            for u, a in self.normal_form_word(w, rightmost).items():
                s = out.get(u, Fraction(0)) + c * a
                if s:
                    out[u] = s
                else:
                    del out[u]
        return TensorVector(self.space, v.degree, out)

    def multiply_words(self, left: Word, right: Word) -> dict:
        """Product of two basis classes in A, as a normal-form dict."""
        return self.normal_form_word(tuple(left) + tuple(right))

    def __repr__(self):
        return f"HomogAlgebra({self.label}: d={self.dim_V}, N={self.N}, dim R={self.R.dim})"


# ---------------------------------------------------------------------------
# white and black products, end(A)
# ---------------------------------------------------------------------------


def _interleave_rows(space_w, fmt1, fmt2, d2, rows1, rows2, N):
    """Rows of c_{pi_N}(span(rows1) x span(rows2)) inside (V x V')^(x N).

    rows1/rows2 iterate dicts over words of V^(x N) / V'^(x N).  The shuffle
    sends v_1..v_N v'_1..v'_N to (v_1 v'_1)..(v_N v'_N) with the rule-of-signs
    factor; a pair (a, b) becomes the letter (a-1)*d2 + b of V x V'.
    """
    from .tensorspace import Permutation

    # pi_N(k) = 2k-1 and pi_N(N+k) = 2k: the inverse of the de-interleave
    shuffle = [0] * (2 * N)
    for k in range(1, N + 1):
        shuffle[k - 1] = 2 * k - 1
        shuffle[N + k - 1] = 2 * k
    pi = Permutation(shuffle)
    out = []
    for r1 in rows1:
        for r2 in rows2:
            vec: dict = {}
            for w1, c1 in r1.items():
                parities1 = [fmt1[a - 1] for a in w1]
                for w2, c2 in r2.items():
                    parities = parities1 + [fmt2[b - 1] for b in w2]
                    permuted, sign = permute_word(pi, w1 + w2, parities)
                    letters = tuple(
                        (permuted[2 * k] - 1) * d2 + permuted[2 * k + 1]
                        for k in range(N)
                    )
                    s = vec.get(letters, Fraction(0)) + sign * c1 * c2
                    if s:
                        vec[letters] = s
                    else:
                        del vec[letters]
            if vec:
                out.append(vec)
    return out


def product_space(V: SuperSpace, W: SuperSpace) -> SuperSpace:
    """V x W with basis (a, b) -> letter (a-1)*dim(W) + b and parity a^+b^."""
    fmt = [
        (V.format[a] + W.format[b]) % 2
        for a in range(V.dim)
        for b in range(W.dim)
    ]
    return SuperSpace(fmt)


def homog_product(kind: str, A: HomogAlgebra, B: HomogAlgebra) -> HomogAlgebra:
    """The white (kind='white') or black (kind='black') product of A and B.

    White: relations are the shuffled image of R x V'^(x N) + V^(x N) x R'.
    Black: the shuffled image of R x R' alone.
    """
    if A.N != B.N:
        raise ValueError("products are defined only for equal relation degrees N")
    N = A.N
    W = product_space(A.space, B.space)
    fmt1, fmt2, d2 = A.space.format, B.space.format, B.space.dim
    full_A = [{w: Fraction(1)} for w in A.space.words(N)]
    full_B = [{w: Fraction(1)} for w in B.space.words(N)]
    rows_A = list(A.R.rows.values())
    rows_B = list(B.R.rows.values())
    if kind == "white":
        rows = _interleave_rows(W, fmt1, fmt2, d2, rows_A, full_B, N)
        rows += _interleave_rows(W, fmt1, fmt2, d2, full_A, rows_B, N)
        symbol = "o"
    elif kind == "black":
        rows = _interleave_rows(W, fmt1, fmt2, d2, rows_A, rows_B, N)
        symbol = "*"
    else:
        raise ValueError(f"unknown product kind {kind!r}")
    label = f"({A.label} {symbol} {B.label})"
    return HomogAlgebra(W, N, Subspace(W, N, rows), label=label)


def end_algebra(A: HomogAlgebra) -> HomogAlgebra:
    """The universal coacting algebra: the black product of the dual with A.

    Generators z^i_j = x^i x x_j carry parity i^ + j^; the generator pair
    (i, j) is the letter (i-1)*d + j of the product space.
    """
    out = homog_product("black", A.dual_algebra(), A)
    out.label = f"end({A.label})"
    return out


# ---------------------------------------------------------------------------
# built-in families
# ---------------------------------------------------------------------------


def tensor_algebra(fmt, N: int = 2, label: str = "") -> HomogAlgebra:
    space = fmt if isinstance(fmt, SuperSpace) else SuperSpace(fmt)
    return HomogAlgebra(space, N, Subspace(space, N), label=label or f"T({space.p}|{space.q})")


def free_line(N: int = 2) -> HomogAlgebra:
    """The polynomial algebra on one even generator (unit for the white
    product)."""
    return tensor_algebra(SuperSpace((0,)), N, label="k[t]")


def quantum_superspace(fmt, q_table=None, label: str = "") -> HomogAlgebra:
    """Quadratic superalgebra with relations x_i x_i (i odd) and
    x_j x x_i - q_ij (-1)^(i^ j^) x_i x x_j for i < j.

    ``q_table`` maps pairs (i, j), i < j, to nonzero rationals; omitted pairs
    default to 1.
    """
    space = fmt if isinstance(fmt, SuperSpace) else SuperSpace(fmt)
    d = space.dim
    q_table = dict(q_table or {})
    rows = []
    for i in range(1, d + 1):
        if space.parity(i) == 1:
            rows.append({(i, i): Fraction(1)})
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            qij = Fraction(q_table.get((i, j), 1))
            if qij == 0:
                raise ValueError(f"quantum parameter q[{i},{j}] must be nonzero")
            sign = -1 if space.parity(i) * space.parity(j) else 1
            rows.append({(j, i): Fraction(1), (i, j): -qij * sign})
    return HomogAlgebra(
        space, 2, Subspace(space, 2, rows), label=label or f"Sq({space.p}|{space.q})"
    )


def _supercommutator(u: TensorVector, v: TensorVector) -> TensorVector:
    pu, pv = u.parity(), v.parity()
    if pu is None or pv is None:
        raise ValueError("supercommutator needs parity-homogeneous arguments")
    sign = -1 if pu * pv else 1
    return u.tensor(v) - v.tensor(u).scale(sign)


def _congruence_diagonalize(block):
    """Diagonal of C^T M C for a symmetric invertible block over Q."""
    m = len(block)
    M = [[Fraction(x) for x in row] for row in block]
    for r in range(m):
        if M[r][r] == 0:
            swap = next((s for s in range(r + 1, m) if M[s][s] != 0), None)
            if swap is not None:
                for t in range(m):
                    M[r][t], M[swap][t] = M[swap][t], M[r][t]
                for t in range(m):
                    M[t][r], M[t][swap] = M[t][swap], M[t][r]
            else:
                s = next((s for s in range(r + 1, m) if M[r][s] != 0), None)
                if s is None:
                    raise ValueError("matrix block is singular")
                for t in range(m):
                    M[r][t] += M[s][t]
                for t in range(m):
                    M[t][r] += M[t][s]
        for s in range(r + 1, m):
            f = M[s][r] / M[r][r]
            if f:
                for t in range(m):
                    M[s][t] -= f * M[r][t]
                for t in range(m):
                    M[t][s] -= f * M[t][r]
    return [M[r][r] for r in range(m)]


def yang_mills(fmt, G=None, label: str = "") -> HomogAlgebra:
    """Cubic superalgebra with one relation per generator:
    sum over i != k of g_i [x_i, [x_i, x_k]] = 0, supercommutators throughout.

    ``G`` is either a list of d nonzero diagonal coefficients or a symmetric
    invertible matrix vanishing across parities; a non-diagonal matrix is
    first diagonalized by a rational congruence within each parity block.
    """
    space = fmt if isinstance(fmt, SuperSpace) else SuperSpace(fmt)
    d = space.dim
    if d < 2:
        raise ValueError("Yang-Mills algebras need at least two generators")
    if G is None:
        diag = [Fraction(1)] * d
    elif all(not isinstance(row, (list, tuple)) for row in G):
        diag = [Fraction(x) for x in G]
        if len(diag) != d or any(x == 0 for x in diag):
            raise ValueError("diagonal metric must list d nonzero entries")
    else:
        M = [[Fraction(x) for x in row] for row in G]
        if len(M) != d or any(len(row) != d for row in M):
            raise ValueError("metric must be a d x d matrix")
        if any(M[i][j] != M[j][i] for i in range(d) for j in range(d)):
            raise ValueError("metric must be symmetric")
        for i in range(d):
            for j in range(d):
                if space.format[i] != space.format[j] and M[i][j] != 0:
                    raise ValueError("metric must vanish between different parities")
        diag = []
        idx_even = [i for i in range(d) if space.format[i] == 0]
        idx_odd = [i for i in range(d) if space.format[i] == 1]
        diag_by_index = {}
        for idx in (idx_even, idx_odd):
            if not idx:
                continue
            block = [[M[a][b] for b in idx] for a in idx]
            for a, g in zip(idx, _congruence_diagonalize(block)):
                diag_by_index[a] = g
        diag = [diag_by_index[i] for i in range(d)]
        if any(x == 0 for x in diag):
            raise ValueError("metric is singular")
    rows = []
    for k in range(1, d + 1):
        acc = TensorVector(space, 3, {})
        xk = TensorVector.basis(space, (k,))
        for i in range(1, d + 1):
            if i == k:
                continue
            xi = TensorVector.basis(space, (i,))
            acc = acc + _supercommutator(xi, _supercommutator(xi, xk)).scale(diag[i - 1])
        if not acc.is_zero():
            rows.append(acc.coeffs)
    return HomogAlgebra(
        space, 3, Subspace(space, 3, rows), label=label or f"YM({space.p}|{space.q})"
    )


def n_symmetric(fmt, N: int, label: str = "") -> HomogAlgebra:
    """The N-symmetric superalgebra: relations are the antisymmetric
    N-tensors (the image of the antisymmetrizer)."""
    space = fmt if isinstance(fmt, SuperSpace) else SuperSpace(fmt)
    return HomogAlgebra(
        space,
        N,
        antisymmetrizer_image(space, N),
        label=label or f"S_{N}({space.p}|{space.q})",
    )


def lambda_operator_algebra(R: YangBaxterOperator, N: int, label: str = "") -> HomogAlgebra:
    """Grassmann-type algebra of a Hecke operator: relations are the image
    of the q-symmetrizer in the operator's tensor representation."""
    rel = symmetrizer_image(R, N, "X")
    return HomogAlgebra(R.space, N, rel, label=label or f"Lambda_{N}[{R.label}]")


def s_operator_algebra(R: YangBaxterOperator, N: int, label: str = "") -> HomogAlgebra:
    """Symmetric-type algebra of a Hecke operator: relations are the image
    of the q-antisymmetrizer."""
    rel = symmetrizer_image(R, N, "Y")
    return HomogAlgebra(R.space, N, rel, label=label or f"S_{N}[{R.label}]")


def custom_algebra(fmt, N: int, relations, label: str = "") -> HomogAlgebra:
    """Algebra from explicit relations, each a list of (coeff, word) pairs."""
    space = fmt if isinstance(fmt, SuperSpace) else SuperSpace(fmt)
    rows = []
    for rel in relations:
        vec: dict = {}
        for coeff, word in rel:
            word = tuple(word)
            if len(word) != N:
                raise ValueError(f"relation word {word} must have degree N={N}")
            if any(not 1 <= i <= space.dim for i in word):
                raise ValueError(f"letters of {word} must lie in 1..{space.dim}")
            c = vec.get(word, Fraction(0)) + Fraction(coeff)
            if c:
                vec[word] = c
            else:
                del vec[word]
        if vec:
            rows.append(vec)
    return HomogAlgebra(space, N, Subspace(space, N, rows), label=label or "custom")


def segre_dims_match(A: HomogAlgebra, B: HomogAlgebra, deg_max: int) -> bool:
    """dim (A o B)_n == dim A_n * dim B_n for n <= deg_max."""
    P = homog_product("white", A, B)
    return all(
        P.dim_component(n) == A.dim_component(n) * B.dim_component(n)
        for n in range(deg_max + 1)
    )
