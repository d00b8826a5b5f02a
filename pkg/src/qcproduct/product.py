"""Product of a quasi-cyclic row code with a cyclic column code.

The key objects are the Bezout parameters (a, b) with
a*ell_A*m_A + b*m_B = 1, the index maps f(i, j) and g(i, j) they induce, and
the two construction routes for the product code's generating basis:

* :func:`unreduced_product_basis` -- the direct substitution matrix whose
  rows are g^B(X^(a*ell_A*m_A)) * g^A_ij(X^(b*m_B)) * X^(-j*a*m_A);
* :func:`one_level_product_rgb` -- the closed-form canonical row for 1-level
  row codes, with shared divisor gcd(X^(m_A*m_B)-1,
  g^A(X^(b*m_B)) * g^B(X^(a*ell_A*m_A))).

Both describe the same submodule; the test suite checks they reduce to the
same canonical basis.
"""

from __future__ import annotations

import math

from .cyclic import CyclicCode
from .errors import (
    DegreeOverflow,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotADivisor,
    NotCoprime,
    NotOneLevel,
    ParamMismatch,
    ShapeMismatch,
)
from .field import Field
from .polyring import Poly, modular_substitute, poly_gcd, x_pow_minus_one
from .qcmodule import GeneratingMatrix, PolyVector, RgbPotBasis, level

__all__ = [
    "ProductParams",
    "CodewordMatrix",
    "OneLevelCode",
    "bezout_pair",
    "map_f",
    "map_g",
    "matrix_to_univariate",
    "univariate_to_matrix",
    "matrix_to_components",
    "unreduced_product_basis",
    "one_level_product_rgb",
]


class ProductParams:
    """Shape and Bezout data for a product construction: row-code shape
    (ell_a, m_a), column-code length m_b, and integers a, b satisfying
    a*ell_a*m_a + b*m_b = 1."""

    __slots__ = ("ell_a", "m_a", "m_b", "a", "b")

    def __init__(self, ell_a: int, m_a: int, m_b: int, a: int, b: int):
        if ell_a < 1 or m_a < 1 or m_b < 1:
            raise ParamMismatch("ell_a, m_a, m_b must all be positive")
        if math.gcd(ell_a * m_a, m_b) != 1:
            raise NotCoprime(f"gcd({ell_a * m_a}, {m_b}) != 1")
        if a * ell_a * m_a + b * m_b != 1:
            raise ParamMismatch(
                f"{a}*{ell_a * m_a} + {b}*{m_b} != 1: not a Bezout pair")
        object.__setattr__(self, "ell_a", ell_a)
        object.__setattr__(self, "m_a", m_a)
        object.__setattr__(self, "m_b", m_b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("ProductParams is immutable")

    @property
    def n(self) -> int:
        """Total product length ell_a * m_a * m_b."""
        return self.ell_a * self.m_a * self.m_b

    @property
    def big_m(self) -> int:
        """Co-index m_a * m_b of the product code."""
        return self.m_a * self.m_b

    def __eq__(self, other):
        return (isinstance(other, ProductParams)
                and (other.ell_a, other.m_a, other.m_b, other.a, other.b)
                == (self.ell_a, self.m_a, self.m_b, self.a, self.b))

    def __hash__(self):
        return hash((self.ell_a, self.m_a, self.m_b, self.a, self.b))

    def __repr__(self):
        return (f"ProductParams(ell_a={self.ell_a}, m_a={self.m_a}, "
                f"m_b={self.m_b}, a={self.a}, b={self.b})")


def bezout_pair(ell_a: int, m_a: int, m_b: int) -> ProductParams:
    """Canonical Bezout parameters: a is the least positive inverse of
    ell_a*m_a modulo m_b (a = 1 when m_b = 1), b follows."""
    if ell_a < 1 or m_a < 1 or m_b < 1:
        raise ParamMismatch("ell_a, m_a, m_b must all be positive")
    base = ell_a * m_a
    if math.gcd(base, m_b) != 1:
        raise NotCoprime(f"gcd({base}, {m_b}) != 1")
    a = 1 if m_b == 1 else pow(base % m_b, -1, m_b)
    b = (1 - a * base) // m_b
    return ProductParams(ell_a, m_a, m_b, a, b)


def map_f(i: int, j: int, p: ProductParams) -> int:
    """Serialization index of matrix entry (i, j): the bijection
    [m_b) x [ell_a*m_a) -> [ell_a*m_a*m_b) under which the product code is
    quasi-cyclic of index ell_a."""
    if not 0 <= i < p.m_b:
        raise IndexOutOfRange(f"row index {i} outside [0, {p.m_b})")
    if not 0 <= j < p.ell_a * p.m_a:
        raise IndexOutOfRange(f"column index {j} outside [0, {p.ell_a * p.m_a})")
    return (i * p.a * p.ell_a * p.m_a * p.ell_a + j * p.b * p.m_b) % p.n


def map_g(i: int, j: int, p: ProductParams) -> int:
    """Component-level serialization index on [m_b) x [m_a) -> [m_a*m_b)."""
    if not 0 <= i < p.m_b:
        raise IndexOutOfRange(f"row index {i} outside [0, {p.m_b})")
    if not 0 <= j < p.m_a:
        raise IndexOutOfRange(f"column index {j} outside [0, {p.m_a})")
    return (i * p.a * p.ell_a * p.m_a + j * p.b * p.m_b) % p.big_m


class CodewordMatrix:
    """An m_b x (ell_a*m_a) array of field element codes: the planar view of
    one product codeword (rows should live in the row code A, columns in the
    column code B)."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries):
        rows = tuple(tuple(int(c) for c in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionMismatch("codeword matrix must be nonempty")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise DimensionMismatch("ragged codeword matrix")
            for c in row:
                if not 0 <= c < field.q:
                    raise FieldMismatch(f"entry code {c} outside [0, {field.q})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("CodewordMatrix is immutable")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def __eq__(self, other):
        return (isinstance(other, CodewordMatrix)
                and other.field == self.field and other.entries == self.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        r, c = self.shape
        return f"CodewordMatrix({r}x{c} over {self.field!r})"


def _check_matrix(M: CodewordMatrix, p: ProductParams):
    if M.shape != (p.m_b, p.ell_a * p.m_a):
        raise DimensionMismatch(
            f"matrix shape {M.shape} does not match params "
            f"({p.m_b}, {p.ell_a * p.m_a})")


def matrix_to_univariate(M: CodewordMatrix, p: ProductParams) -> Poly:
    """c(X) = sum of m_ij X^f(i,j): serialize the matrix into one
    polynomial of degree < ell_a*m_a*m_b."""
    _check_matrix(M, p)
    out = [0] * p.n
    for i, row in enumerate(M.entries):
        for j, c in enumerate(row):
            if c:
                out[map_f(i, j, p)] = c
    return Poly(M.field, out)


def univariate_to_matrix(c: Poly, p: ProductParams) -> CodewordMatrix:
    """Inverse serialization: entry (i, j) reads coefficient f(i, j)."""
    if c.degree >= p.n:
        raise DegreeOverflow(f"degree {c.degree} does not fit length {p.n}")
    entries = [[c.coeff(map_f(i, j, p)) for j in range(p.ell_a * p.m_a)]
               for i in range(p.m_b)]
    return CodewordMatrix(c.field, entries)


def matrix_to_components(M: CodewordMatrix, p: ProductParams) -> PolyVector:
    """The ell_a component polynomials of the serialized codeword:
    c_h = X^(h*(-a*m_a)) * sum_ij m_(i, j*ell_a+h) X^g(i,j) mod X^(m_a*m_b)-1,
    chosen so that interleaving the components reproduces
    :func:`matrix_to_univariate`."""
    _check_matrix(M, p)
    f = M.field
    N = p.big_m
    comps = []
    for h in range(p.ell_a):
        acc = [0] * N
        for i in range(p.m_b):
            for j in range(p.m_a):
                c = M.entries[i][j * p.ell_a + h]
                if c:
                    pos = map_g(i, j, p)
                    acc[pos] = f.add(acc[pos], c)
        inner = Poly(f, acc)
        twist = Poly.monomial(f, (h * (-p.a * p.m_a)) % N)
        comps.append(_fold(inner * twist, N))
    return PolyVector(comps, N)


def _fold(poly: Poly, m: int) -> Poly:
    if poly.degree < m:
        return poly
    return modular_substitute(poly, 1, m)


class OneLevelCode:
    """A 1-level quasi-cyclic code: canonical row
    (g, g*f_1, ..., g*f_(ell-1)) with g | X^m - 1 and every f_j reduced
    modulo (X^m - 1)/g so the row entries stay below degree m."""

    __slots__ = ("field", "ell", "m", "g", "fs")

    def __init__(self, g: Poly, fs, ell: int, m: int):
        field = g.field
        fs = tuple(fs)
        if len(fs) != ell - 1:
            raise ShapeMismatch(
                f"need {ell - 1} multiplier polynomials for ell={ell}, got {len(fs)}")
        if g.is_zero:
            raise NotADivisor("the shared divisor g must be nonzero")
        g = g.monic()
        cofactor, rem = divmod(x_pow_minus_one(field, m), g)
        if not rem.is_zero:
            raise NotADivisor(f"{g!r} does not divide X^{m}-1")
        canon = []
        for fj in fs:
            if fj.field != field:
                raise FieldMismatch("multiplier over a different field")
            canon.append(_fold(fj, m) % cofactor if not cofactor.is_zero else fj)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ell", int(ell))
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "fs", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError("OneLevelCode is immutable")

    @property
    def k(self) -> int:
        return self.m - self.g.degree

    def row(self) -> tuple[Poly, ...]:
        """The generating row (g, g*f_1, ..., g*f_(ell-1))."""
        return (self.g,) + tuple(self.g * fj for fj in self.fs)

    def basis(self) -> RgbPotBasis:
        """The full canonical basis: the generating row on top, rows
        (X^m-1)e_i below."""
        f = self.field
        xm1 = x_pow_minus_one(f, self.m)
        zero = Poly.zero(f)
        rows = [list(self.row())]
        for i in range(1, self.ell):
            row = [zero] * self.ell
            row[i] = xm1
            rows.append(row)
        return RgbPotBasis(f, self.ell, self.m, rows)

    @classmethod
    def from_basis(cls, b: RgbPotBasis) -> "OneLevelCode":
        """Extract (g, f_j) from a canonical basis of level exactly 1."""
        if level(b) != 1:
            raise NotOneLevel(f"basis has level {level(b)}, expected 1")
        g = b.matrix[0][0]
        fs = []
        for j in range(1, b.ell):
            q, r = divmod(b.matrix[0][j], g)
            if not r.is_zero:
                raise NotADivisor(
                    f"entry (0, {j}) is not a multiple of the shared divisor")
            fs.append(q)
        return cls(g, fs, b.ell, b.m)

    def __eq__(self, other):
        return (isinstance(other, OneLevelCode)
                and (other.field, other.ell, other.m, other.g, other.fs)
                == (self.field, self.ell, self.m, self.g, self.fs))

    def __hash__(self):
        return hash((self.field, self.ell, self.m, self.g, self.fs))

    def __repr__(self):
        return f"OneLevelCode(ell={self.ell}, m={self.m}, k={self.k})"


def _check_product_inputs(ell_a: int, m_a: int, field_a, B: CyclicCode,
                          p: ProductParams):
    if (ell_a, m_a) != (p.ell_a, p.m_a):
        raise ParamMismatch(
            f"row code shape ({ell_a}, {m_a}) does not match params "
            f"({p.ell_a}, {p.m_a})")
    if B.m != p.m_b:
        raise ParamMismatch(
            f"column code length {B.m} does not match params m_b={p.m_b}")
    if B.field != field_a:
        raise FieldMismatch("row and column codes over different fields")


def unreduced_product_basis(G_A: RgbPotBasis, B: CyclicCode,
                            p: ProductParams) -> GeneratingMatrix:
    """The direct product generating matrix over co-index m_a*m_b: entry
    (i, j) is g^B(X^(a*ell_a*m_a)) * g^A_ij(X^(b*m_b)) * X^(-j*a*m_a), all
    reduced mod X^(m_a*m_b) - 1.  The (X^(m_a*m_b)-1)e_j rows stay implicit
    in the returned GeneratingMatrix."""
    _check_product_inputs(G_A.ell, G_A.m, G_A.field, B, p)
    f = G_A.field
    N = p.big_m
    gB_sub = modular_substitute(B.g, p.a * p.ell_a * p.m_a, N)
    twists = [Poly.monomial(f, (-j * p.a * p.m_a) % N) for j in range(p.ell_a)]
    rows = []
    for i in range(p.ell_a):
        row = []
        for j in range(p.ell_a):
            entry = G_A.matrix[i][j]
            if entry.is_zero:
                row.append(Poly.zero(f))
                continue
            sub = modular_substitute(entry, p.b * p.m_b, N)
            row.append(_fold(_fold(gB_sub * sub, N) * twists[j], N))
        rows.append(row)
    return GeneratingMatrix(f, p.ell_a, N, rows)


def one_level_product_rgb(A: OneLevelCode, B: CyclicCode,
                          p: ProductParams) -> OneLevelCode:
    """Closed-form canonical row of the product of a 1-level row code with a
    cyclic column code: shared divisor
    g = gcd(X^(m_a*m_b)-1, g^A(X^(b*m_b)) * g^B(X^(a*ell_a*m_a))) and
    multipliers f_j^A(X^(b*m_b)) * X^(-j*a*m_a), reduced canonically."""
    _check_product_inputs(A.ell, A.m, A.field, B, p)
    f = A.field
    N = p.big_m
    gA_sub = modular_substitute(A.g, p.b * p.m_b, N)
    gB_sub = modular_substitute(B.g, p.a * p.ell_a * p.m_a, N)
    g = poly_gcd(x_pow_minus_one(f, N), _fold(gA_sub * gB_sub, N))
    multipliers = []
    for j in range(1, p.ell_a):
        sub = modular_substitute(A.fs[j - 1], p.b * p.m_b, N)
        twist = Poly.monomial(f, (-j * p.a * p.m_a) % N)
        multipliers.append(_fold(sub * twist, N))
    return OneLevelCode(g, multipliers, p.ell_a, N)
