"""The Hecke algebra H_{n,q} in the T_sigma basis, its idempotents, and Hecke
operators (Yang-Baxter solutions) acting on tensor powers of a superspace.

Conventions.  The generators satisfy (T_i + 1)(T_i - q) = 0 together with the
braid relations; the basis element T_sigma multiplies by

    T_sigma T_{sigma_i} = T_{sigma sigma_i}                 if the length grows,
    T_sigma T_{sigma_i} = q T_{sigma sigma_i} + (q-1) T_sigma  otherwise.

The parameter q is a fixed nonzero rational, not an indeterminate; idempotent
construction checks the q-integer regularity it needs and fails loudly
otherwise.

A Hecke operator is an even endomorphism R of V x V, stored by columns:
``R(x_i x x_j) = sum R[i,j][k,l] x_k x x_l``.  It induces a representation of
H_{n,q} on the n-th tensor power by placing R in adjacent slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .tensorspace import (
    Permutation,
    Subspace,
    SuperSpace,
    TensorVector,
    all_permutations,
)


def q_integer(i: int, q: Fraction) -> Fraction:
    return sum((q ** k for k in range(i)), Fraction(0))


def q_factorial(n: int, q: Fraction) -> Fraction:
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= q_integer(i, q)
    return out


class SingularParameterError(ValueError):
    """A q-integer needed for an idempotent vanishes."""


class HeckeElement:
    """Element of H_{n,q} supported on the T_sigma basis."""

    __slots__ = ("n", "q", "terms")

    def __init__(self, n: int, q, terms=None):
        q = Fraction(q)
        if q == 0:
            raise ValueError("the Hecke parameter q must be nonzero")
        self.n = n
        self.q = q
        self.terms: dict[Permutation, Fraction] = {
            s: Fraction(c) for s, c in (terms or {}).items() if c != 0
        }

    # -- constructors ---------------------------------------------------

    @classmethod
    def one(cls, n: int, q) -> "HeckeElement":
        return cls(n, q, {Permutation.identity(n): Fraction(1)})

    @classmethod
    def generator(cls, n: int, q, i: int) -> "HeckeElement":
        """T_i = T_{sigma_i}."""
        return cls(n, q, {Permutation.transposition(n, i): Fraction(1)})

    @classmethod
    def basis(cls, n: int, q, sigma: Permutation) -> "HeckeElement":
        return cls(n, q, {sigma: Fraction(1)})

    # -- linear structure -------------------------------------------------

    def _check(self, other: "HeckeElement"):
        if self.n != other.n or self.q != other.q:
            raise ValueError("Hecke elements have mismatched n or q")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HeckeElement.one(self.n, self.q).scale(other)
        self._check(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            v = terms.get(s, Fraction(0)) + c
            if v:
                terms[s] = v
            else:
                del terms[s]
        return HeckeElement(self.n, self.q, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HeckeElement.one(self.n, self.q).scale(other)
        return self + other.scale(-1)

    def scale(self, c) -> "HeckeElement":
        c = Fraction(c)
        return HeckeElement(self.n, self.q, {s: c * v for s, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    # -- multiplication ----------------------------------------------------

    def _times_generator(self, i: int) -> "HeckeElement":
        """Right multiplication by T_i via the basis rule."""
        n, q = self.n, self.q
        si = Permutation.transposition(n, i)
        terms: dict[Permutation, Fraction] = {}

        def bump(sigma, c):
            if not c:
                return
            v = terms.get(sigma, Fraction(0)) + c
            if v:
                terms[sigma] = v
            else:
                del terms[sigma]

        for sigma, c in self.terms.items():
            tau = sigma * si
            if tau.length() == sigma.length() + 1:
                bump(tau, c)
            else:
                bump(tau, q * c)
                bump(sigma, (q - 1) * c)
        return HeckeElement(n, q, terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = HeckeElement(self.n, self.q)
        for tau, c in other.terms.items():
            piece = self.scale(c)
            for i in tau.reduced_word():
                piece = piece._times_generator(i)
            out = out + piece
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "HeckeElement":
        """The involution T_sigma -> T_{sigma^-1} (an anti-automorphism)."""
        return HeckeElement(
            self.n, self.q, {s.inverse(): c for s, c in self.terms.items()}
        )

    def alpha(self) -> "HeckeElement":
        """The order-2 automorphism determined by T_i -> -q T_i^(-1) = q-1-T_i."""
        n, q = self.n, self.q
        out = HeckeElement(n, q)
        for sigma, c in self.terms.items():
            piece = HeckeElement.one(n, q).scale(c)
            for i in sigma.reduced_word():
                gen_image = HeckeElement.one(n, q).scale(q - 1) - HeckeElement.generator(n, q, i)
                piece = piece * gen_image
            out = out + piece
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HeckeElement.one(self.n, self.q).scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.q, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for sigma in sorted(self.terms, key=lambda s: (s.length(), s.word)):
            c = self.terms[sigma]
            name = "1" if sigma.length() == 0 else f"T{sigma.word}"
            parts.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(parts)


def q_idempotents(n: int, q) -> tuple[HeckeElement, HeckeElement]:
    """The q-symmetrizer X_n and q-antisymmetrizer Y_n of H_{n,q}.

    Requires the q-integers [i]_q and [i]_{1/q} to be nonzero for i <= n.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    qinv = 1 / q
    for i in range(1, n + 1):
        if q_integer(i, q) == 0 or q_integer(i, qinv) == 0:
            raise SingularParameterError(f"[{i}]_q vanishes for q={q}; idempotents undefined")
    x_terms = {}
    y_terms = {}
    for sigma in all_permutations(n):
        x_terms[sigma] = Fraction(1)
        y_terms[sigma] = (-q) ** (-sigma.length())
    X = HeckeElement(n, q, x_terms).scale(1 / q_factorial(n, q))
    Y = HeckeElement(n, q, y_terms).scale(1 / q_factorial(n, qinv))
    return X, Y


# ---------------------------------------------------------------------------
# Linear operators on tensor powers
# ---------------------------------------------------------------------------


class LinearOperator:
    """Sparse linear endomorphism of V^(x n), stored by columns."""

    __slots__ = ("space", "degree", "columns")

    def __init__(self, space: SuperSpace, degree: int, columns=None):
        self.space = space
        self.degree = degree
        # columns[word] = {word: coeff}; missing column means zero column
        self.columns: dict = columns if columns is not None else {}

    @classmethod
    def identity(cls, space: SuperSpace, degree: int) -> "LinearOperator":
        cols = {w: {w: Fraction(1)} for w in space.words(degree)}
        return cls(space, degree, cols)

    @classmethod
    def zero(cls, space: SuperSpace, degree: int) -> "LinearOperator":
        return cls(space, degree, {})

    def apply_word(self, word) -> dict:
        return self.columns.get(tuple(word), {})

    def apply(self, v: TensorVector) -> TensorVector:
        out: dict = {}
        for w, c in v.coeffs.items():
            for u, a in self.apply_word(w).items():
                s = out.get(u, Fraction(0)) + c * a
                if s:
                    out[u] = s
                else:
                    del out[u]
        return TensorVector(self.space, self.degree, out)

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """self after other (matrix product self . other)."""
        cols = {}
        for w, col in other.columns.items():
            out: dict = {}
            for u, c in col.items():
                for t, a in self.apply_word(u).items():
                    s = out.get(t, Fraction(0)) + c * a
                    if s:
                        out[t] = s
                    else:
                        del out[t]
            if out:
                cols[w] = out
        return LinearOperator(self.space, self.degree, cols)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        cols = {w: dict(col) for w, col in self.columns.items()}
        for w, col in other.columns.items():
            mine = cols.setdefault(w, {})
            for u, c in col.items():
                s = mine.get(u, Fraction(0)) + c
                if s:
                    mine[u] = s
                else:
                    del mine[u]
            if not mine:
                del cols[w]
        return LinearOperator(self.space, self.degree, cols)

    def scale(self, c) -> "LinearOperator":
        c = Fraction(c)
        if c == 0:
            return LinearOperator.zero(self.space, self.degree)
        return LinearOperator(
            self.space,
            self.degree,
            {w: {u: c * a for u, a in col.items()} for w, col in self.columns.items()},
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return all(not col for col in self.columns.values())

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("LinearOperator is unhashable")

    def image(self) -> Subspace:
        return Subspace(self.space, self.degree, self.columns.values(), check_parity=False)

    def rank(self) -> int:
        from .tensorspace import matrix_rank

        return matrix_rank(self.columns.values())


class YangBaxterOperator:
    """Candidate Hecke operator on V x V with its associated parameter q."""

    def __init__(self, space: SuperSpace, q, entries, label: str = ""):
        self.space = space
        self.q = Fraction(q)
        # entries[(i, j)] = {(k, l): coeff} : the column of x_i x x_j
        self.entries = {
            pair: {out: Fraction(c) for out, c in col.items() if c != 0}
            for pair, col in entries.items()
        }
        self.label = label

    def as_operator(self) -> LinearOperator:
        cols = {pair: dict(col) for pair, col in self.entries.items()}
        return LinearOperator(self.space, 2, cols)

    def inverse(self) -> "YangBaxterOperator":
        """Inverse from the Hecke equation: R^-1 = (R - (q-1)) / q."""
        op = self.as_operator()
        ident = LinearOperator.identity(self.space, 2)
        inv = (op - ident.scale(self.q - 1)).scale(1 / self.q)
        return YangBaxterOperator(self.space, 1 / self.q, inv.columns, label=f"({self.label})^-1")

    def negated_inverse_partner(self) -> "YangBaxterOperator":
        """-q R^-1 = (q-1) - R, again a Hecke operator for the same q."""
        op = self.as_operator()
        ident = LinearOperator.identity(self.space, 2)
        out = ident.scale(self.q - 1) - op
        return YangBaxterOperator(self.space, self.q, out.columns, label=f"-q({self.label})^-1")

    def is_even(self) -> bool:
        sp = self.space
        for (i, j), col in self.entries.items():
            pin = (sp.parity(i) + sp.parity(j)) % 2
            for (k, l), c in col.items():
                if c and (sp.parity(k) + sp.parity(l)) % 2 != pin:
                    return False
        return True

    def __repr__(self):
        return f"YangBaxterOperator({self.label or 'custom'}, q={self.q}, d={self.space.dim})"


def supersymmetry_operator(space: SuperSpace) -> YangBaxterOperator:
    """The rule-of-signs flip x_i x x_j -> (-1)^(i^ j^) x_j x x_i; q = 1."""
    entries = {}
    for i in range(1, space.dim + 1):
        for j in range(1, space.dim + 1):
            sign = -1 if space.parity(i) * space.parity(j) else 1
            entries[(i, j)] = {(j, i): Fraction(sign)}
    return YangBaxterOperator(space, 1, entries, label="supersymmetry")


def dj_operator(p: int, q_dim: int, q) -> YangBaxterOperator:
    """The superized Drinfel'd-Jimbo operator on the standard p|q_dim space.

    Columns:  x_i x x_i -> q^2 (i even) or -1 (i odd) times itself;
    x_i x x_j (i < j) picks up (q^2 - 1) on itself; and x_j x x_i appears with
    coefficient (-1)^(i^ j^) q whenever i != j.  Associated parameter: q^2.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    space = SuperSpace.standard(p, q_dim)
    entries: dict = {}
    for i in range(1, space.dim + 1):
        for j in range(1, space.dim + 1):
            col: dict = {}
            if i == j:
                col[(i, i)] = q * q if space.parity(i) == 0 else Fraction(-1)
            else:
                if i < j:
                    col[(i, j)] = q * q - 1
                sign = -1 if space.parity(i) * space.parity(j) else 1
                col[(j, i)] = sign * q
            entries[(i, j)] = col
    return YangBaxterOperator(space, q * q, entries, label=f"dj({p}|{q_dim}, q={q})")


def hecke_rep_generator(R: YangBaxterOperator, n: int, i: int) -> LinearOperator:
    """rho(T_i) = 1^(i-1) x R x 1^(n-i-1) on V^(x n)."""
    space = R.space
    cols = {}
    for w in space.words(n):
        pair = (w[i - 1], w[i])
        col = {}
        for (k, l), c in R.entries.get(pair, {}).items():
            col[w[: i - 1] + (k, l) + w[i + 1 :]] = c
        if col:
            cols[w] = col
    return LinearOperator(space, n, cols)


def hecke_rep(R: YangBaxterOperator, n: int, a: HeckeElement) -> LinearOperator:
    """The representing operator of a in H_{n,q} on V^(x n).

    T_sigma maps to the composition of the generator operators along a
    reduced word of sigma.  The element's parameter must match R's.
    """
    if a.n != n:
        raise ValueError(f"element lives in H_{a.n}, expected H_{n}")
    if a.q != R.q:
        raise ValueError(f"parameter mismatch: element has q={a.q}, operator q={R.q}")
    space = R.space
    gens = {i: hecke_rep_generator(R, n, i) for i in range(1, n)}
    total = LinearOperator.zero(space, n)
    for sigma, c in a.terms.items():
        piece = LinearOperator.identity(space, n)
        for i in sigma.reduced_word():
            piece = piece.compose(gens[i])
        total = total + piece.scale(c)
    return total


@dataclass
class HeckeOperatorReport:
    even: bool
    hecke_equation: bool
    yang_baxter: bool

    @property
    def passed(self) -> bool:
        return self.even and self.hecke_equation and self.yang_baxter

    def __str__(self):
        rows = [
            ("evenness", self.even),
            ("hecke equation", self.hecke_equation),
            ("yang-baxter", self.yang_baxter),
        ]
        return "\n".join(f"{name}: {'PASS' if ok else 'FAIL'}" for name, ok in rows)


def verify_hecke_operator(R: YangBaxterOperator) -> HeckeOperatorReport:
    """Exact check of evenness, (R+1)(R-q) = 0, and the braid relation."""
    space, q = R.space, R.q
    op = R.as_operator()
    ident2 = LinearOperator.identity(space, 2)
    hecke_ok = (op + ident2).compose(op - ident2.scale(q)).is_zero()
    r1 = hecke_rep_generator(R, 3, 1)
    r2 = hecke_rep_generator(R, 3, 2)
    ybe_ok = r1.compose(r2).compose(r1) == r2.compose(r1).compose(r2)
    return HeckeOperatorReport(R.is_even(), hecke_ok, ybe_ok)


def symmetrizer_image(R: YangBaxterOperator, n: int, kind: str) -> Subspace:
    """Image of rho(X_n) (kind='X') or rho(Y_n) (kind='Y') inside V^(x n)."""
    X, Y = q_idempotents(n, R.q)
    a = X if kind == "X" else Y
    return hecke_rep(R, n, a).image()


def intersection_of_generator_images(R: YangBaxterOperator, n: int) -> Subspace:
    """The intersection of the images of rho(T_i) + 1 over i = 1..n-1."""
    from .tensorspace import subspace_intersection

    space = R.space
    ident = LinearOperator.identity(space, n)
    out = None
    for i in range(1, n):
        im = (hecke_rep_generator(R, n, i) + ident).image()
        out = im if out is None else subspace_intersection(out, im)
    if out is None:
        return Subspace.full(space, n)
    return out
