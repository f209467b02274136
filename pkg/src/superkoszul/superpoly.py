"""Exact supercommutative polynomial arithmetic over the rationals.

A polynomial ring here is a free supercommutative algebra on a finite set of
Z2-graded ("even"/"odd") variables with coefficients in Q.  All arithmetic is
exact: coefficients are ``fractions.Fraction``, never floats.

Representation
--------------
Variables live in a :class:`VariableTable` and are referred to by integer id.
A monomial is a pair

    (even_part, odd_part)

where ``even_part`` is a tuple of ``(vid, exponent)`` pairs sorted by vid
(exponents >= 1) and ``odd_part`` is a strictly increasing tuple of odd vids.
Odd variables square to zero, so they never repeat.  A polynomial is a dict
mapping monomials to nonzero ``Fraction`` coefficients; the zero polynomial
has an empty dict.

Multiplication follows the rule of signs: interchanging two odd variables
flips the sign.  Merging the two (sorted) odd id sequences of a product
therefore multiplies the coefficient by (-1)**(number of inversions of the
merge), and a repeated odd id kills the term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

EVEN = 0
ODD = 1

# Monomial = (even_part, odd_part); the constant monomial:
ONE_MONOMIAL = ((), ())


def _merge_odd(a: tuple, b: tuple):
    """Merge two strictly increasing odd-id tuples.

    Returns ``(merged, inversions)`` or ``None`` when an id repeats
    (the product vanishes).  ``inversions`` counts the pairs that must be
    transposed to interleave-sort the concatenation ``a + b``.
    """
    merged = []
    inversions = 0
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining len(a) - i entries of a
            merged.append(b[j])
            inversions += len(a) - i
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return tuple(merged), inversions


def _mul_even(a: tuple, b: tuple) -> tuple:
    exps: dict[int, int] = dict(a)
    for vid, e in b:
        exps[vid] = exps.get(vid, 0) + e
    return tuple(sorted(exps.items()))


class VariableTable:
    """Registry of the supercommuting variables of one polynomial ring.

    Two polynomials may be combined only when they share a table; mixing
    tables raises :class:`ContextError`.
    """

    def __init__(self):
        self.names: list[str] = []
        self.parities: list[int] = []

    def add(self, name: str, parity: int) -> int:
        if parity not in (EVEN, ODD):
            raise ValueError(f"parity must be 0 or 1, got {parity!r}")
        self.names.append(name)
        self.parities.append(parity)
        return len(self.names) - 1

    def __len__(self):
        return len(self.names)

    def parity(self, vid: int) -> int:
        return self.parities[vid]

    def variable(self, vid: int) -> "SuperPolynomial":
        if self.parities[vid] == ODD:
            mono = ((), (vid,))
        else:
            mono = (((vid, 1),), ())
        return SuperPolynomial(self, {mono: Fraction(1)})

    def zero(self) -> "SuperPolynomial":
        return SuperPolynomial(self, {})

    def one(self) -> "SuperPolynomial":
        return self.constant(1)

    def constant(self, c) -> "SuperPolynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return SuperPolynomial(self, {ONE_MONOMIAL: c})


class ContextError(ValueError):
    """Raised when operands belong to different variable tables."""


class SuperPolynomial:
    """Element of a free supercommutative Q-algebra in normal form."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms: Mapping[tuple, Fraction]):
        self.table = table
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- helpers -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SuperPolynomial):
            if other.table is not self.table:
                raise ContextError("polynomials belong to different variable tables")
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.constant(other)
        return NotImplemented

    def monomial_parity(self, mono: tuple) -> int:
        return len(mono[1]) % 2

    def parity(self):
        """Common parity of all terms, or None for zero/mixed polynomials."""
        parities = {self.monomial_parity(m) for m in self.terms}
        if len(parities) == 1:
            return parities.pop()
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {ONE_MONOMIAL}

    def constant_term(self) -> Fraction:
        return self.terms.get(ONE_MONOMIAL, Fraction(0))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return SuperPolynomial(self.table, terms)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = self.table
        out: dict[tuple, Fraction] = {}
        for (ev_a, od_a), ca in self.terms.items():
            for (ev_b, od_b), cb in other.terms.items():
                merged = _merge_odd(od_a, od_b)
                if merged is None:
                    continue
                odd, inversions = merged
                c = ca * cb
                if inversions % 2:
                    c = -c
                mono = (_mul_even(ev_a, ev_b), odd)
                s = out.get(mono, Fraction(0)) + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return SuperPolynomial(table, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.table.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.table.constant(other)
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.table is other.table and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.table), frozenset(self.terms.items())))

    # -- evaluation ----------------------------------------------------

    def evaluate(self, assignment: Mapping[int, Fraction]) -> Fraction:
        """Evaluate at a scalar point.  Odd variables must be sent to 0.

        Raises KeyError for an unassigned variable and ValueError if an odd
        variable receives a nonzero value (there is no such rational point).
        """
        for vid, value in assignment.items():
            if self.table.parity(vid) == ODD and value != 0:
                raise ValueError(f"odd variable {self.table.names[vid]} must be assigned 0")
        total = Fraction(0)
        for (even, odd), c in self.terms.items():
            if odd:
                for vid in odd:
                    if vid not in assignment:
                        raise KeyError(f"unassigned variable {self.table.names[vid]}")
                continue  # odd factor evaluates to 0
            val = c
            for vid, e in even:
                val *= Fraction(assignment[vid]) ** e
            total += val
        return total

    # -- printing ------------------------------------------------------

    def _mono_str(self, mono: tuple) -> str:
        even, odd = mono
        parts = []
        for vid, e in even:
            name = self.table.names[vid]
            parts.append(name if e == 1 else f"{name}^{e}")
        parts.extend(self.table.names[vid] for vid in odd)
        return "*".join(parts) if parts else "1"

    def __str__(self):
        if not self.terms:
            return "0"

        def sort_key(mono):
            even, odd = mono
            degree = sum(e for _, e in even) + len(odd)
            return (-degree, even, odd)

        chunks = []
        for mono in sorted(self.terms, key=sort_key):
            c = self.terms[mono]
            s = self._mono_str(mono)
            if s == "1":
                term = str(c)
            elif c == 1:
                term = s
            elif c == -1:
                term = f"-{s}"
            else:
                term = f"{c}*{s}"
            chunks.append(term)
        out = chunks[0]
        for term in chunks[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    __repr__ = __str__


def newton_elementary(power_sums: list, K: int):
    """Elementary symmetric functions e_0..e_K from power sums p_1..p_K.

    Uses the recurrence n*e_n = sum_{i=1..n} (-1)^(i-1) p_i e_{n-i} with exact
    division by n (valid in characteristic zero).  Entries may be rationals or
    even SuperPolynomials; the two kinds must not be mixed.
    """
    if len(power_sums) < K:
        raise ValueError(f"need power sums p_1..p_{K}, got {len(power_sums)}")
    for p in power_sums[:K]:
        if isinstance(p, SuperPolynomial) and p.parity() not in (EVEN, None):
            raise ValueError("power sums must be even elements")
    if power_sums and isinstance(power_sums[0], SuperPolynomial):
        one = power_sums[0].table.one()
    else:
        one = Fraction(1)
    es = [one]
    for n in range(1, K + 1):
        acc = None
        for i in range(1, n + 1):
            term = power_sums[i - 1] * es[n - i]
            if i % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        es.append(acc * Fraction(1, n))
    return es


class TruncatedSeries:
    """Power series in one even variable t, truncated at a fixed order.

    Coefficients may be ``Fraction`` or :class:`SuperPolynomial` (any type
    with ring operations).  Terms of degree > K are discarded by every
    operation; binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_dict(cls, order: int, data: Mapping[int, object], zero=Fraction(0)):
        return cls(order, [data.get(n, zero) for n in range(order + 1)])

    @classmethod
    def one(cls, order: int, one=Fraction(1), zero=Fraction(0)):
        return cls(order, [one] + [zero] * order)

    def _zero_like(self):
        c0 = self.coeffs[0]
        if isinstance(c0, SuperPolynomial):
            return c0.table.zero()
        return Fraction(0)

    def _match(self, other: "TruncatedSeries"):
        K = min(self.order, other.order)
        return K, self.coeffs[: K + 1], other.coeffs[: K + 1]

    def truncate(self, K: int) -> "TruncatedSeries":
        if K > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(K, self.coeffs[: K + 1])

    def __add__(self, other):
        K, a, b = self._match(other)
        return TruncatedSeries(K, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        K, a, b = self._match(other)
        return TruncatedSeries(K, [x - y for x, y in zip(a, b)])

    def __neg__(self):
        return TruncatedSeries(self.order, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, [c * Fraction(other) for c in self.coeffs])
        K, a, b = self._match(other)
        zero = self._zero_like()
        out = [zero for _ in range(K + 1)]
        for n, an in enumerate(a):
            if isinstance(an, SuperPolynomial) and an.is_zero():
                continue
            for m, bm in enumerate(b):
                if n + m > K:
                    break
                out[n + m] = out[n + m] + an * bm
        return TruncatedSeries(K, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if any(self.coeffs[n] != 0 for n in range(1, self.order + 1)):
                return False
            return self.coeffs[0] == other
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, tuple(map(str, self.coeffs))))

    def inverse(self) -> "TruncatedSeries":
        """Two-sided inverse up to the truncation order.

        The constant term must be an invertible scalar (a nonzero rational,
        possibly wrapped in a constant polynomial).
        """
        c0 = self.coeffs[0]
        if isinstance(c0, SuperPolynomial):
            if not c0.is_constant() or c0.constant_term() == 0:
                raise ZeroDivisionError("constant term is not an invertible scalar")
            inv0 = c0.table.constant(1 / c0.constant_term())
        else:
            if c0 == 0:
                raise ZeroDivisionError("constant term is not an invertible scalar")
            inv0 = Fraction(1) / Fraction(c0)
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = None
            for i in range(1, n + 1):
                term = self.coeffs[i] * out[n - i]
                acc = term if acc is None else acc + term
            out.append(-(inv0 * acc))
        return TruncatedSeries(self.order, out)

    def __str__(self):
        chunks = []
        for n, c in enumerate(self.coeffs):
            if isinstance(c, SuperPolynomial):
                if c.is_zero():
                    continue
                cs = str(c)
                if " " in cs:
                    cs = f"({cs})"
            else:
                if c == 0:
                    continue
                cs = str(c)
            if n == 0:
                chunks.append(cs)
            elif n == 1:
                chunks.append(f"{cs}*t" if cs != "1" else "t")
            else:
                chunks.append(f"{cs}*t^{n}" if cs != "1" else f"t^{n}")
        body = " + ".join(chunks) if chunks else "0"
        return f"{body} + O(t^{self.order + 1})"

    __repr__ = __str__
