"""Cyclotomic cosets, minimal polynomials, and cyclic codes.

Minimal polynomials of coset classes are computed honestly: an extension
field GF(q^r) containing an m-th root of unity alpha is built (r = the
multiplicative order of q mod m), the product over the conjugate roots
alpha^j is taken there, and every coefficient is verified to lie in the
embedded copy of GF(q) before being mapped back down.  Only the semisimple
case gcd(m, q) = 1 is supported, so X^m - 1 always splits into distinct
irreducible factors, one per coset.
"""

from __future__ import annotations

import functools
import math

from .errors import (
    CoefficientNotInBaseField,
    IndexOutOfRange,
    NotADivisor,
    NotCoprime,
    NotPrime,
)
from .field import Field, FieldElement, nth_root_of_unity
from .polyring import Poly, x_pow_minus_one

__all__ = [
    "cyclotomic_coset",
    "minimal_polynomial",
    "factor_xm_minus_1",
    "CyclicCode",
    "cyclic_code_new",
    "field_of_order",
]


def _prime_power(q: int) -> tuple[int, int]:
    """Split a field order into (p, s) with q = p^s, p prime."""
    if not isinstance(q, int) or q < 2:
        raise NotPrime(f"field order must be a prime power >= 2, got {q!r}")
    p = q
    for d in range(2, q + 1):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    s = 0
    rest = q
    while rest % p == 0:
        rest //= p
        s += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, s


@functools.lru_cache(maxsize=None)
def field_of_order(q: int) -> Field:
    """GF(q) with the default (deterministic) modulus."""
    p, s = _prime_power(q)
    return Field(p, s)


def _mult_order(q: int, m: int) -> int:
    """Multiplicative order of q modulo m (1 when m = 1, where every
    residue is trivially the identity)."""
    if math.gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    if m == 1:
        return 1
    r, acc = 1, q % m
    while acc != 1:
        acc = (acc * q) % m
        r += 1
    return r


def cyclotomic_coset(q: int, m: int, i: int) -> tuple[int, ...]:
    """Orbit of i under multiplication by q modulo m, sorted ascending."""
    if math.gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    if not 0 <= i < m:
        raise IndexOutOfRange(f"representative {i} outside [0, {m})")
    members = {i}
    j = (i * q) % m
    while j != i:
        members.add(j)
        j = (j * q) % m
    return tuple(sorted(members))


@functools.lru_cache(maxsize=None)
def _root_context(q: int, m: int):
    """Shared machinery for minimal-polynomial computation over GF(q):
    the base field, the extension containing an m-th root of unity, the
    root's code, and the decode table mapping embedded-subfield codes back
    to base-field codes."""
    base = field_of_order(q)
    p, s = base.p, base.m
    r = _mult_order(q, m)
    big = Field(p, s * r)
    alpha = nth_root_of_unity(big, m)
    if big == base:
        decode = {c: c for c in range(q)}
    elif s == 1:
        # prime subfield: the constants of the extension
        decode = {c: c for c in range(p)}
    else:
        # Embed GF(q) by sending its generator X to a root of the base
        # modulus inside the big field; roots are located among the
        # elements whose order equals the order of X in GF(q).
        x_code = p  # digits (0, 1, 0, ...): the element X of the base field
        n = 1
        acc = x_code
        while acc != 1:
            acc = base.mul(acc, x_code)
            n += 1
        zeta = nth_root_of_unity(big, n)
        modulus_poly = Poly(big, [c % p for c in base.modulus])
        theta = None
        for k in range(1, n + 1):
            if math.gcd(k, n) != 1:
                continue
            cand = big.pow_(zeta.code, k)
            if modulus_poly(FieldElement(big, cand)).code == 0:
                theta = cand
                break
        if theta is None:
            raise CoefficientNotInBaseField(
                f"could not embed GF({q}) into {big!r}")
        decode = {}
        for code in range(q):
            digits = base.coeffs_of(code)
            image = 0
            for idx, digit in enumerate(digits):
                image = big.add(image, big.smul(digit, big.pow_(theta, idx)))
            decode[image] = code
    return base, big, alpha.code, decode


def minimal_polynomial(q: int, m: int, i: int) -> Poly:
    """The monic irreducible factor of X^m - 1 over GF(q) whose roots are
    alpha^j for j in the coset of i (alpha the canonical m-th root of
    unity).  Degree equals the coset size."""
    coset = cyclotomic_coset(q, m, i)
    base, big, alpha, decode = _root_context(q, m)
    prod = Poly.one(big)
    for j in coset:
        root = big.pow_(alpha, j)
        prod = prod * Poly(big, (big.neg(root), 1))
    out = []
    for c in prod.coeffs:
        if c not in decode:
            raise CoefficientNotInBaseField(
                f"coefficient {c} of the conjugate product is not in GF({q})")
        out.append(decode[c])
    return Poly(base, out)


def factor_xm_minus_1(q: int, m: int) -> list[tuple[int, Poly]]:
    """Complete factorization of X^m - 1 over GF(q): one monic irreducible
    per cyclotomic coset, keyed by the smallest coset member, ascending."""
    if math.gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    out = []
    seen = set()
    for i in range(m):
        if i in seen:
            continue
        coset = cyclotomic_coset(q, m, i)
        seen.update(coset)
        out.append((i, minimal_polynomial(q, m, i)))
    return out


class CyclicCode:
    """A cyclic code of length m with monic generator polynomial g | X^m - 1;
    dimension k = m - deg g."""

    __slots__ = ("field", "m", "g", "k")

    def __init__(self, m: int, g: Poly):
        field = g.field
        if m < 1:
            raise NotADivisor(f"block length must be positive, got {m}")
        if m % field.p == 0:
            raise NotCoprime(
                f"length {m} shares a factor with the field characteristic {field.p}")
        if g.is_zero:
            raise NotADivisor(
                "the zero polynomial is not a generator; the zero code of "
                f"length {m} is generated by X^{m}-1")
        g = g.monic()
        rem = x_pow_minus_one(field, m) % g
        if not rem.is_zero:
            raise NotADivisor(f"{g!r} does not divide X^{m}-1")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "k", m - g.degree)

    def __setattr__(self, name, value):
        raise AttributeError("CyclicCode is immutable")

    def __eq__(self, other):
        return (isinstance(other, CyclicCode)
                and other.field == self.field
                and other.m == self.m and other.g == self.g)

    def __hash__(self):
        return hash((self.field, self.m, self.g))

    def __repr__(self):
        return f"CyclicCode[{self.m}, {self.k}] over {self.field!r}"


def cyclic_code_new(m: int, g: Poly) -> CyclicCode:
    """Construct the cyclic code of length m generated by g (must divide
    X^m - 1 exactly)."""
    return CyclicCode(m, g)
