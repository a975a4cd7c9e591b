"""Cyclic-code assembly: defining set -> generator polynomial -> dual.

A binary cyclic code of length n = 2^m - 1 is fixed by a doubling-closed
subset Z of Z_n: its generator is g(x) = prod of the minimal polynomials
of beta^z over the coset leaders z in Z, its dimension is n - |Z|, and
the dual code is again cyclic with defining set -(Z_n \\ Z) (mod n).

The dual generator is computed two ways -- assembled from the dual
defining set, and as the bit-reversal of the parity polynomial
h(x) = (x^n + 1) / g(x) -- and both routes are checked against each
other whenever ``dual()`` runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .constructions import DefiningSet
from .cosets import coset_of
from .gf2 import FieldContext, make_field, minimal_polynomial, poly_degree, poly_divrem, poly_mul


class DegenerateCodeError(ValueError):
    """The defining set names a dimension-0 code (Z = Z_n)."""


def _leaders_of(zset: DefiningSet) -> list[int]:
    """Coset leaders present in a doubling-closed set, ascending."""
    n = zset.n
    mask = zset.mask()
    leaders = []
    for x in zset:
        orbit_min = x
        y = (2 * x) % n
        while y != x:
            if y < orbit_min:
                orbit_min = y
            y = (2 * y) % n
        if orbit_min == x:
            leaders.append(x)
        assert mask[orbit_min], "doubling closure violated"
    return leaders


@dataclass(frozen=True, eq=False)
class CyclicCode:
    """A binary cyclic code: length, defining set, generator, parity poly.

    ``generator`` and ``parity`` are little-endian bit-packed ints;
    codewords are c(x) = u(x) * g(x) for message polys u of degree < k.
    """

    n: int
    m: int
    defining_set: DefiningSet
    generator: int = field(repr=False)
    parity: int = field(repr=False)
    ctx: FieldContext = field(repr=False)

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)

    def __repr__(self) -> str:
        return f"CyclicCode(n={self.n}, k={self.dimension}, |Z|={len(self.defining_set)})"

    def encode(self, message: int) -> int:
        """Non-systematic encoding of a k-bit message int."""
        if message < 0 or message >> self.dimension:
            raise ValueError(f"message must fit in {self.dimension} bits")
        return poly_mul(message, self.generator)

    def is_codeword(self, word: int) -> bool:
        if word < 0 or word >> self.n:
            raise ValueError(f"word must fit in {self.n} bits")
        _, r = poly_divrem(word, self.generator)
        return r == 0

    def verify_roots(self) -> bool:
        """Exhaustively confirm g(beta^z) = 0 exactly for z in Z.

        Costs n field evaluations of a degree-|Z| polynomial; intended
        for n <= 2^16.
        """
        if self.n > (1 << 16):
            raise ValueError("full root verification is limited to n <= 65535")
        zmask = self.defining_set.mask()
        for z in range(self.n):
            root = self.ctx.eval_poly(self.generator, self.ctx.pow_beta(z)) == 0
            if root != bool(zmask[z]):
                return False
        return True

    def dual(self) -> "CyclicCode":
        """The dual code, with the two derivations cross-checked."""
        dual_set = dual_defining_set(self.defining_set)
        via_set = assemble(dual_set, ctx=self.ctx)
        # Independent route: reverse h(x); h(0) = 1 always, so the
        # reversal of the k-degree parity poly is the dual generator.
        k = self.dimension
        rev = 0
        h = self.parity
        for j in range(k + 1):
            if (h >> j) & 1:
                rev |= 1 << (k - j)
        assert via_set.generator == rev, "dual generator mismatch between routes"
        return via_set


def dual_defining_set(zset: DefiningSet) -> DefiningSet:
    """Defining set of the dual code: -(Z_n \\ Z) mod n."""
    n = zset.n
    comp = ~zset.mask()
    dual_mask = np.empty(n, dtype=bool)
    dual_mask[0] = comp[0]
    dual_mask[1:] = comp[:0:-1]  # index x <- n - x
    origin = {"construction": "dual", "of": dict(zset.origin)}
    return DefiningSet.from_mask(n, dual_mask, origin)


def assemble(zset: DefiningSet, *, ctx: Optional[FieldContext] = None) -> CyclicCode:
    """Build the cyclic code named by a defining set.

    Multiplies the minimal polynomials of the coset leaders, checks
    deg(g) = |Z|, divides x^n + 1 by g exactly, and spot-checks one root
    per coset.  Raises :class:`DegenerateCodeError` for Z = Z_n.
    """
    n = zset.n
    m = (n + 1).bit_length() - 1
    if (1 << m) - 1 != n:
        raise ValueError(f"length {n} is not 2^m - 1")
    if len(zset) == n:
        raise DegenerateCodeError("defining set is all of Z_n; dimension would be 0")
    if ctx is None:
        ctx = make_field(m)
    elif ctx.m != m:
        raise ValueError(f"field context is for m={ctx.m}, set needs m={m}")

    g = 1
    leaders = _leaders_of(zset)
    for lead in leaders:
        g = poly_mul(g, minimal_polynomial(ctx, lead))
    assert poly_degree(g) == len(zset), "generator degree must equal |Z|"

    h, rem = poly_divrem((1 << n) | 1, g)
    assert rem == 0, "generator must divide x^n + 1"
    assert poly_degree(h) == n - len(zset)

    for lead in leaders:
        assert ctx.eval_poly(g, ctx.pow_beta(lead)) == 0, f"beta^{lead} must be a root"

    return CyclicCode(n=n, m=m, defining_set=zset, generator=g, parity=h, ctx=ctx)


def bch_run(zset: DefiningSet) -> tuple[int, Optional[int]]:
    """Longest run of consecutive residues in Z, cyclically.

    Returns ``(delta, start)`` where delta - 1 is the run length and
    ``start`` is the smallest starting residue achieving it (None when
    Z is empty).  Any cyclic code with Z in its defining set has minimum
    distance >= delta.
    """
    n = zset.n
    if len(zset) == 0:
        return 1, None
    if len(zset) == n:
        raise DegenerateCodeError("defining set is all of Z_n")
    doubled = np.tile(zset.mask(), 2)
    idx = np.arange(2 * n, dtype=np.int64)
    last_gap = np.maximum.accumulate(np.where(~doubled, idx, -1))
    runs = np.where(doubled, idx - last_gap, 0)
    starts = last_gap + 1
    runs[starts >= n] = 0  # runs starting in the second copy repeat earlier ones
    best_len = int(runs.max())
    assert 1 <= best_len < n
    best_start = int(starts[runs == best_len].min())
    return best_len + 1, best_start


def bch_lower_bound(zset: DefiningSet) -> int:
    """The run bound delta: minimum distance is at least this."""
    delta, _ = bch_run(zset)
    return delta


@dataclass(frozen=True)
class CodeReport:
    """JSON-ready summary of one code and its dual's run bound."""

    n: int
    m: int
    construction: dict
    defining_set: tuple[int, ...]
    dimension: int
    generator: Optional[int]
    bch_lower_bound: int
    bch_interval_start: Optional[int]
    dual_size: int
    dual_bch_lower_bound: int
    dual_bch_interval_start: Optional[int]

    def as_dict(self) -> dict:
        from .gf2 import poly_to_bitstring

        return {
            "n": self.n,
            "m": self.m,
            "construction": self.construction,
            "defining_set": list(self.defining_set),
            "dimension": self.dimension,
            "generator_bits": (
                None if self.generator is None else poly_to_bitstring(self.generator)
            ),
            "bch_lower_bound": self.bch_lower_bound,
            "bch_interval_start": self.bch_interval_start,
            "dual": {
                "size": self.dual_size,
                "dimension": self.n - self.dual_size,
                "bch_lower_bound": self.dual_bch_lower_bound,
                "bch_interval_start": self.dual_bch_interval_start,
            },
        }


def describe(zset: DefiningSet, *, generator: Optional[int] = None) -> CodeReport:
    """Assemble the distance-free facts about a defining set."""
    n = zset.n
    m = (n + 1).bit_length() - 1
    delta, start = bch_run(zset)
    dual_set = dual_defining_set(zset)
    if len(dual_set) == n:
        # Z was empty: the dual is the zero code, whose "distance" is the
        # vacuous n + 1 (one run covering the whole circle).
        dual_delta, dual_start = n + 1, 0
    else:
        dual_delta, dual_start = bch_run(dual_set)
    return CodeReport(
        n=n,
        m=m,
        construction=dict(zset.origin),
        defining_set=tuple(int(x) for x in zset.elements),
        dimension=n - len(zset),
        generator=generator,
        bch_lower_bound=delta,
        bch_interval_start=start,
        dual_size=len(dual_set),
        dual_bch_lower_bound=dual_delta,
        dual_bch_interval_start=dual_start,
    )
