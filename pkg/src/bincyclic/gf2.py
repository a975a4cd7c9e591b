"""Arithmetic over GF(2)[x] and GF(2^m).

Binary polynomials are stored as plain Python integers: bit ``i`` of the
integer is the coefficient of ``x**i`` (little-endian).  The encoding is
canonical by construction -- an int has no trailing zero limbs -- and the
zero polynomial is just ``0``.  Its degree is reported as ``None`` rather
than -1 so that degree arithmetic on it fails loudly instead of silently.

Extension fields GF(2^m) are represented by a :class:`FieldContext`: a
primitive modulus polynomial of degree ``m`` together with log/antilog
tables over the generator ``beta = x``.  Multiplication is two table
lookups and an addition mod ``2^m - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

#: Type alias used throughout: a GF(2)[x] polynomial packed into an int,
#: bit i = coefficient of x^i.
BinaryPolynomial = int

MAX_FIELD_DEGREE = 24


def poly_degree(a: BinaryPolynomial) -> int | None:
    """Degree of ``a``; ``None`` for the zero polynomial (sentinel)."""
    if a == 0:
        return None
    return a.bit_length() - 1


def poly_mul(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Carry-less product in GF(2)[x].

    Shift-and-XOR over the set bits of the sparser operand; for nonzero
    inputs ``deg(a*b) = deg(a) + deg(b)``.
    """
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def poly_divrem(
    a: BinaryPolynomial, b: BinaryPolynomial
) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    """Euclidean division: returns ``(q, r)`` with ``a = q*b ^ r`` (XOR is
    addition here) and ``deg(r) < deg(b)``.

    Raises ZeroDivisionError for a zero divisor.
    """
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    r = a
    while r and r.bit_length() - 1 >= db:
        shift = (r.bit_length() - 1) - db
        q |= 1 << shift
        r ^= b << shift
    return q, r


def poly_mod(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return poly_divrem(a, b)[1]


def poly_to_bitstring(a: BinaryPolynomial, width: int | None = None) -> str:
    """Little-endian bit-string: ``"1101"`` encodes 1 + x + x^3.

    ``width`` pads with trailing zeros (useful for fixed-length codewords).
    """
    if a < 0:
        raise ValueError("negative value is not a polynomial encoding")
    bits = format(a, "b")[::-1] if a else "0"
    if width is not None:
        if len(bits) > width:
            raise ValueError(f"polynomial does not fit in width {width}")
        bits = bits.ljust(width, "0")
    return bits


def poly_from_bitstring(s: str) -> BinaryPolynomial:
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a bit-string: {s!r}")
    return int(s[::-1], 2)


def poly_to_hex(a: BinaryPolynomial) -> str:
    """Hexadecimal with little-endian nibble order (first digit = x^0..x^3)."""
    if a < 0:
        raise ValueError("negative value is not a polynomial encoding")
    return format(a, "x")[::-1]


def poly_from_hex(s: str) -> BinaryPolynomial:
    return int(s[::-1], 16)


def poly_pretty(a: BinaryPolynomial) -> str:
    """Human form, ascending powers: ``1 + x + x^3``."""
    if a == 0:
        return "0"
    terms = []
    i = 0
    while a:
        if a & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        a >>= 1
        i += 1
    return " + ".join(terms)


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (n here is < 2^25)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _poly_powmod(base: int, e: int, modulus: int) -> int:
    """base(x)^e mod modulus(x) by square-and-multiply."""
    result = 1
    base = poly_mod(base, modulus)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base), modulus)
        base = poly_mod(poly_mul(base, base), modulus)
        e >>= 1
    return result


def _x_has_full_order(modulus: int, m: int) -> bool:
    """True iff x has multiplicative order 2^m - 1 in GF(2)[x]/modulus.

    A full order certifies both irreducibility and primitivity: the unit
    group of GF(2)[x]/f for reducible f of degree m has fewer than 2^m - 1
    elements, so no unit can reach that order.
    """
    n = (1 << m) - 1
    if _poly_powmod(2, n, modulus) != 1:
        return False
    return all(_poly_powmod(2, n // q, modulus) != 1 for q in _prime_factors(n))


@dataclass(frozen=True, eq=False)
class FieldContext:
    """GF(2^m) with discrete-log tables over the primitive element beta = x.

    antilog_table[k] = beta^k (packed int) for 0 <= k < 2^m - 1;
    log_table[e] = k with beta^k = e for nonzero e, and -1 at index 0.
    Immutable after construction; safe for shared concurrent reads.
    """

    m: int
    modulus: BinaryPolynomial
    log_table: np.ndarray = field(repr=False)
    antilog_table: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return (1 << self.m) - 1

    def pow_beta(self, k: int) -> int:
        return int(self.antilog_table[k % self.n])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.n
        k = int(self.log_table[a]) + int(self.log_table[b])
        if k >= n:
            k -= n
        return int(self.antilog_table[k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.antilog_table[(self.n - int(self.log_table[a])) % self.n])

    def eval_poly(self, poly: BinaryPolynomial, e: int) -> int:
        """Evaluate a GF(2)[x] polynomial at the field element ``e`` (Horner)."""
        acc = 0
        for i in range(poly.bit_length() - 1, -1, -1):
            acc = self.mul(acc, e) ^ ((poly >> i) & 1)
        return acc


def make_field(m: int) -> FieldContext:
    """Build GF(2^m) on the lexicographically smallest primitive modulus.

    "Lexicographically smallest" compares coefficient bit-strings as
    integers, so the search walks odd degree-m candidates in increasing
    integer order.  Only the generator's order is tested (see
    :func:`_x_has_full_order`); the first hit is both irreducible and
    primitive.
    """
    if not isinstance(m, int) or not 2 <= m <= MAX_FIELD_DEGREE:
        raise ValueError(f"extension degree must satisfy 2 <= m <= {MAX_FIELD_DEGREE}, got {m}")
    n = (1 << m) - 1
    modulus = 0
    for cand in range((1 << m) | 1, 1 << (m + 1), 2):
        if _x_has_full_order(cand, m):
            modulus = cand
            break
    if modulus == 0:  # pragma: no cover - a primitive polynomial always exists
        raise RuntimeError(f"no primitive polynomial of degree {m} found")

    log_table = np.full(1 << m, -1, dtype=np.int32)
    antilog_table = np.zeros(n, dtype=np.int32)
    val = 1
    for k in range(n):
        antilog_table[k] = val
        log_table[val] = k
        val <<= 1
        if val >> m:
            val ^= modulus
    if val != 1:  # pragma: no cover - guarded by the order test
        raise RuntimeError("generator does not close its cycle; field tables corrupt")
    log_table.setflags(write=False)
    antilog_table.setflags(write=False)
    return FieldContext(m=m, modulus=modulus, log_table=log_table, antilog_table=antilog_table)


def minimal_polynomial(ctx: FieldContext, e: int) -> BinaryPolynomial:
    """Minimal polynomial of beta^e over GF(2).

    Expands the product of (x - beta^j) over the doubling orbit of ``e``
    in GF(2^m)[x]; the result must collapse into the prime subfield.  Its
    degree equals the orbit size.
    """
    n = ctx.n
    if not 0 <= e < n:
        raise ValueError(f"exponent must lie in [0, {n}), got {e}")
    orbit = []
    j = e
    while True:
        orbit.append(j)
        j = (2 * j) % n
        if j == e:
            break

    # coeffs[i] is the field element multiplying x^i
    coeffs = [1]
    for j in orbit:
        root = ctx.pow_beta(j)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            nxt[i + 1] ^= c
            nxt[i] ^= ctx.mul(c, root)
        coeffs = nxt

    packed = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise RuntimeError(
                f"minimal polynomial of beta^{e} has a coefficient {c} outside GF(2); "
                "field tables are inconsistent"
            )
        packed |= c << i
    return packed
