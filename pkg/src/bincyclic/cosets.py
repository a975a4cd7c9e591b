"""2-cyclotomic cosets modulo n = 2^m - 1.

A coset is the orbit of a residue under doubling mod n; orbits partition
Z_n and their minima ("leaders") canonically name them.  The table is
built fully vectorized: the doubling map is iterated by pointer-jumping,
so the dense leader array costs O(n log m) gathers instead of a Python
loop over n elements (n reaches 2^24 - 1 here).

Also provides the binary-vector view of residues: pi maps a residue to
its LSB-first bit vector, rho rotates a vector one step right, and
``pi_inv(rho(pi(x))) == 2x mod n`` ties rotation to doubling.  Weight
classes (residues grouped by Hamming-weight parity) live here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gf2 import MAX_FIELD_DEGREE

BitVector = tuple[int, ...]


def coset_of(x: int, n: int) -> set[int]:
    """Orbit of ``x`` under doubling mod ``n`` (n odd)."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {n}")
    if not 0 <= x < n:
        raise ValueError(f"residue {x} out of range for modulus {n}")
    orbit = {x}
    j = (2 * x) % n
    while j != x:
        orbit.add(j)
        j = (2 * j) % n
    return orbit


@dataclass(frozen=True, eq=False)
class CosetTable:
    """All 2-cyclotomic cosets mod n = 2^m - 1.

    leader_of is dense (one entry per residue) so classification inside
    construction loops is O(1).  leaders/sizes are aligned ascending
    arrays.  Immutable after build; safe for shared concurrent reads.
    """

    n: int
    m: int
    leader_of: np.ndarray = field(repr=False)
    leaders: np.ndarray = field(repr=False)
    sizes: np.ndarray = field(repr=False)

    def size_of(self, x: int) -> int:
        """Size of the coset containing residue ``x``."""
        leader = int(self.leader_of[x])
        return int(self.sizes[np.searchsorted(self.leaders, leader)])

    def members(self, x: int) -> tuple[int, ...]:
        return tuple(sorted(coset_of(x, self.n)))

    def leaders_of_size(self, size: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.leaders[self.sizes == size])

    def union_mask(self, leaders: "list[int] | tuple[int, ...] | np.ndarray") -> np.ndarray:
        """Boolean membership mask over Z_n for a union of cosets."""
        chosen = np.asarray(leaders, dtype=self.leader_of.dtype)
        return np.isin(self.leader_of, chosen)


def build_table(m: int) -> CosetTable:
    if not isinstance(m, int) or not 2 <= m <= MAX_FIELD_DEGREE:
        raise ValueError(f"need 2 <= m <= {MAX_FIELD_DEGREE}, got {m}")
    n = (1 << m) - 1
    lead = np.arange(n, dtype=np.int64)
    hop = (lead * 2) % n
    # Pointer jumping: after r rounds lead[x] = min over {x * 2^j : j < 2^r};
    # orbits have size <= m, so 2^r >= m covers every orbit.
    rounds = max(1, m.bit_length())
    for _ in range(rounds):
        lead = np.minimum(lead, lead[hop])
        hop = hop[hop]
    counts = np.bincount(lead, minlength=n)
    leaders = np.flatnonzero(counts)
    sizes = counts[leaders]
    assert np.all(m % sizes == 0), "coset sizes must divide m"
    assert int(sizes.sum()) == n, "cosets must partition Z_n"
    leader_of = lead.astype(np.int32)
    for arr in (leader_of, leaders, sizes):
        arr.setflags(write=False)
    return CosetTable(n=n, m=m, leader_of=leader_of, leaders=leaders, sizes=sizes)


def pi(x: int, m: int) -> BitVector:
    """LSB-first binary expansion of ``x`` as an m-bit vector."""
    if not 0 <= x <= (1 << m) - 1:
        raise ValueError(f"{x} does not fit in {m} bits")
    return tuple((x >> i) & 1 for i in range(m))


def pi_inv(v: BitVector) -> int:
    if not v or any(b not in (0, 1) for b in v):
        raise ValueError("expected a nonempty 0/1 vector")
    return sum(b << i for i, b in enumerate(v))


def rho(v: BitVector) -> BitVector:
    """One right rotation: (x0,...,x_{m-1}) -> (x_{m-1},x0,...,x_{m-2})."""
    if not v:
        raise ValueError("cannot rotate an empty vector")
    return (v[-1],) + tuple(v[:-1])


def is_union_of_cosets(S, n: int) -> bool:
    """True iff ``S`` is closed under doubling mod ``n``."""
    members = set(S)
    for x in members:
        if not 0 <= x < n:
            raise ValueError(f"element {x} outside Z_{n}")
    return all((2 * x) % n in members for x in members)


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class SizeClassification:
    """Coset leaders of a composite-degree table split by orbit size.

    For m = p1*p2 the only possible sizes are 1, p1, p2 and m (plus the
    size-2 coset {n/3, 2n/3} when p1 = 2).  The exceptional size-1 coset
    {0} and the p1 = 2 size-2 coset are carried separately because the
    selection lists used downstream exclude them.
    """

    p1: int
    p2: int
    size_p1_leaders: tuple[int, ...]
    size_p2_leaders: tuple[int, ...]
    size_full_leaders: tuple[int, ...]
    zero_leader: int = 0
    size_two_leader: int | None = None


def classify_by_size(table: CosetTable, p1: int, p2: int) -> SizeClassification:
    """Split the table's leaders by coset size for m = p1*p2 (p1 < p2 prime).

    The class censuses are asserted against their closed forms: a wrong
    count would mean the table (or the theory) is broken, so it fails hard.
    """
    if not (_is_prime(p1) and _is_prime(p2) and p1 < p2):
        raise ValueError(f"need primes p1 < p2, got ({p1}, {p2})")
    if table.m != p1 * p2:
        raise ValueError(f"table has m={table.m}, expected p1*p2={p1 * p2}")
    m = table.m
    n = table.n

    by_size = {
        size: table.leaders_of_size(size)
        for size in sorted(set(int(s) for s in table.sizes))
    }
    assert by_size.get(1) == (0,), "the only fixed point of doubling is 0"

    size_full = by_size.get(m, ())
    if p1 == 2:
        size_two = by_size.get(2, ())
        assert size_two == (n // 3,) and set(coset_of(n // 3, n)) == {n // 3, 2 * n // 3}
        size_p1: tuple[int, ...] = ()
        size_p2 = by_size.get(p2, ())
        assert len(size_p2) == (2**p2 - 2) // p2
        assert len(size_full) == (2**m - 2**p2 - 2) // m
        extra = {1, 2, p2, m}
        two_leader: int | None = n // 3
    else:
        size_p1 = by_size.get(p1, ())
        size_p2 = by_size.get(p2, ())
        assert len(size_p1) == (2**p1 - 2) // p1
        assert len(size_p2) == (2**p2 - 2) // p2
        assert len(size_full) == (2**m - 2**p1 - 2**p2 + 2) // m
        extra = {1, p1, p2, m}
        two_leader = None
    assert set(by_size) <= extra, f"unexpected coset sizes {set(by_size) - extra}"

    return SizeClassification(
        p1=p1,
        p2=p2,
        size_p1_leaders=size_p1,
        size_p2_leaders=size_p2,
        size_full_leaders=size_full,
        size_two_leader=two_leader,
    )


@dataclass(frozen=True, eq=False)
class WeightClassView:
    """Nonzero residues split by Hamming-weight parity.

    mask(i)[x] is True iff 1 <= x <= n-1 and wt(x) = i (mod 2); the two
    classes are disjoint, cover Z_n minus {0}, and each is doubling-closed
    (doubling rotates the bit vector, preserving weight).
    """

    m: int
    n: int
    _masks: tuple[np.ndarray, np.ndarray] = field(repr=False)

    def mask(self, i: int) -> np.ndarray:
        if i not in (0, 1):
            raise ValueError("parity index must be 0 or 1")
        return self._masks[i]

    def members(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.mask(i))

    def size(self, i: int) -> int:
        return int(self.mask(i).sum())

    def contains(self, i: int, x: int) -> bool:
        return bool(self.mask(i)[x])


def weight_classes(m: int) -> WeightClassView:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    n = (1 << m) - 1
    residues = np.arange(n, dtype=np.uint32)
    parity = np.bitwise_count(residues).astype(np.int8) & 1
    mask0 = (parity == 0) & (residues > 0)
    mask1 = parity == 1
    for arr in (mask0, mask1):
        arr.setflags(write=False)
    return WeightClassView(m=m, n=n, _masks=(mask0, mask1))
