"""Sparse multivariate polynomial arithmetic over F2.

Polynomials live in F2[x1, ..., xd] and are stored as sets of monomials
(every present monomial has coefficient 1).  The module also provides a
coordinate form for homogeneous degree-2 polynomials and reduced row
spaces over F2, which together turn degree-2 ideal membership into
Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping


class NotHomogeneousDegree2(ValueError):
    """Polynomial has a term whose degree is not 2."""


class VariableOutOfRange(ValueError):
    """Monomial uses a variable index above the declared count."""


class LengthMismatch(ValueError):
    """Degree-2 vectors have different lengths."""


@dataclass(frozen=True)
class Monomial:
    """Product of variables x_i^e_i; exps is a sorted tuple of (index, exponent).

    Variable indices are 1-based and exponents are strictly positive.
    """

    exps: tuple[tuple[int, int], ...]

    @staticmethod
    def from_dict(exponents: Mapping[int, int]) -> "Monomial":
        items = []
        for var, exp in sorted(exponents.items()):
            if var < 1:
                raise ValueError(f"variable index must be >= 1, got {var}")
            if exp < 0:
                raise ValueError(f"negative exponent for x{var}")
            if exp > 0:
                items.append((var, exp))
        return Monomial(tuple(items))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exps)
        for var, exp in other.exps:
            merged[var] = merged.get(var, 0) + exp
        return Monomial.from_dict(merged)

    def _sort_key(self):
        # Graded lex: ascending degree, then descending lexicographic with
        # x1 most significant.  (var, -exp) pairs compare exactly that way.
        return (self.degree, tuple((v, -e) for v, e in self.exps))

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(
            f"x{v}^{e}" if e > 1 else f"x{v}" for v, e in self.exps
        )


ONE_MONOMIAL = Monomial(())


@dataclass(frozen=True)
class F2Polynomial:
    """Element of F2[x1, ..., xd] as a frozenset of monomials."""

    terms: frozenset[Monomial]

    @staticmethod
    def from_monomials(monomials: Iterable[Monomial]) -> "F2Polynomial":
        # Duplicate pairs cancel (characteristic 2).
        acc: set[Monomial] = set()
        for m in monomials:
            acc.symmetric_difference_update({m})
        return F2Polynomial(frozenset(acc))

    @staticmethod
    def zero() -> "F2Polynomial":
        return F2Polynomial(frozenset())

    @staticmethod
    def one() -> "F2Polynomial":
        return F2Polynomial(frozenset({ONE_MONOMIAL}))

    @staticmethod
    def var(i: int) -> "F2Polynomial":
        return F2Polynomial(frozenset({Monomial.from_dict({i: 1})}))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m.degree for m in self.terms)

    def __add__(self, other: "F2Polynomial") -> "F2Polynomial":
        return F2Polynomial(self.terms ^ other.terms)

    def __mul__(self, other: "F2Polynomial") -> "F2Polynomial":
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                acc.symmetric_difference_update({a * b})
        return F2Polynomial(frozenset(acc))

    def homogeneous_part(self, k: int) -> "F2Polynomial":
        """Sum of terms of degree exactly k."""
        if k < 0:
            raise ValueError("degree must be >= 0")
        return F2Polynomial(frozenset(m for m in self.terms if m.degree == k))

    def truncate_degree(self, k: int) -> "F2Polynomial":
        """Sum of terms of degree at most k."""
        if k < 0:
            raise ValueError("degree must be >= 0")
        return F2Polynomial(frozenset(m for m in self.terms if m.degree <= k))

    def mul_truncated(self, other: "F2Polynomial", k: int) -> "F2Polynomial":
        """Product discarding terms of degree above k.

        Agrees with (self * other).truncate_degree(k) because truncation
        is a ring morphism modulo degree > k.
        """
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                if a.degree + b.degree <= k:
                    acc.symmetric_difference_update({a * b})
        return F2Polynomial(frozenset(acc))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=Monomial._sort_key)
        return " + ".join(str(m) for m in ordered)


def poly_sum(polys: Iterable[F2Polynomial]) -> F2Polynomial:
    return reduce(F2Polynomial.__add__, polys, F2Polynomial.zero())


def deg2_length(d: int) -> int:
    return d * (d + 1) // 2


def pair_index(i: int, j: int, d: int) -> int:
    """Bit position of the x_i*x_j coefficient, 1 <= i <= j <= d.

    Layout is row-major over the upper triangle:
    (1,1),(1,2),...,(1,d),(2,2),...,(2,d),...,(d,d).
    """
    if not (1 <= i <= j <= d):
        raise ValueError(f"bad pair ({i},{j}) for d={d}")
    return (i - 1) * d - (i - 1) * (i - 2) // 2 + (j - i)


def index_pair(pos: int, d: int) -> tuple[int, int]:
    """Inverse of pair_index."""
    for i in range(1, d + 1):
        row = d - i + 1
        if pos < row:
            return (i, i + pos)
        pos -= row
    raise ValueError(f"position out of range for d={d}")


@dataclass(frozen=True)
class Deg2Vector:
    """Coefficient bit vector of a homogeneous degree-2 polynomial.

    Bit pair_index(i, j, d) carries the coefficient of x_i*x_j.
    """

    bits: int
    d: int

    @property
    def length(self) -> int:
        return deg2_length(self.d)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "Deg2Vector") -> "Deg2Vector":
        if self.d != other.d:
            raise LengthMismatch(f"d={self.d} vs d={other.d}")
        return Deg2Vector(self.bits ^ other.bits, self.d)

    def to_poly(self) -> F2Polynomial:
        monomials = []
        pos = 0
        bits = self.bits
        while bits:
            if bits & 1:
                i, j = index_pair(pos, self.d)
                monomials.append(
                    Monomial.from_dict({i: 2} if i == j else {i: 1, j: 1})
                )
            bits >>= 1
            pos += 1
        return F2Polynomial.from_monomials(monomials)


def deg2_to_vector(p: F2Polynomial, d: int) -> Deg2Vector:
    """Coordinate vector of a homogeneous degree-2 polynomial (or zero)."""
    bits = 0
    for m in p.terms:
        if m.degree != 2:
            raise NotHomogeneousDegree2(f"term {m} has degree {m.degree}")
        if len(m.exps) == 1:
            (i, _), = m.exps
            j = i
        else:
            (i, _), (j, _) = m.exps
        if j > d:
            raise VariableOutOfRange(f"x{j} with d={d}")
        bits |= 1 << pair_index(i, j, d)
    return Deg2Vector(bits, d)


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


class F2RowSpace:
    """Span of degree-2 vectors, kept in reduced row-echelon form.

    Basis rows are nonzero with strictly increasing pivot positions
    (lowest pair index first) and each pivot occurs in exactly one row.
    """

    def __init__(self, vectors: Iterable[Deg2Vector], d: int):
        self.d = d
        rows: list[int] = []
        for v in vectors:
            if v.d != d:
                raise LengthMismatch(f"d={v.d} vs d={d}")
            rows.append(v.bits)
        self.basis = self._echelonize(rows)

    @staticmethod
    def _echelonize(rows: list[int]) -> list[int]:
        basis: list[int] = []
        for r in rows:
            for b in basis:
                if r & (b & -b):
                    r ^= b
            if r:
                basis.append(r)
        # Back-substitute so each pivot is zero in every other row.
        basis.sort(key=_lowest_bit)
        for k, b in enumerate(basis):
            piv = b & -b
            for m in range(len(basis)):
                if m != k and basis[m] & piv:
                    basis[m] ^= b
        return basis

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_vectors(self) -> list[Deg2Vector]:
        return [Deg2Vector(b, self.d) for b in self.basis]

    def reduce(self, v: Deg2Vector) -> Deg2Vector:
        """Remainder of v after reduction by the echelon basis."""
        if v.d != self.d:
            raise LengthMismatch(f"d={v.d} vs d={self.d}")
        r = v.bits
        for b in self.basis:
            if r & (b & -b):
                r ^= b
        return Deg2Vector(r, self.d)

    def reduction_trace(self, v: Deg2Vector) -> list[tuple[Deg2Vector, Deg2Vector]]:
        """Per-step (basis row used, remainder after) pairs for v."""
        if v.d != self.d:
            raise LengthMismatch(f"d={v.d} vs d={self.d}")
        r = v.bits
        steps = []
        for b in self.basis:
            if r & (b & -b):
                r ^= b
                steps.append((Deg2Vector(b, self.d), Deg2Vector(r, self.d)))
        return steps

    def contains(self, v: Deg2Vector) -> bool:
        return self.reduce(v).is_zero()


def row_space_membership(space: F2RowSpace, v: Deg2Vector) -> bool:
    """True iff v lies in the F2-span of the basis."""
    return space.contains(v)
