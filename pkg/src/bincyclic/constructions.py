"""Defining-set builders for four families of binary cyclic codes.

Every builder returns a validated :class:`DefiningSet` (doubling-closed,
guaranteed size) plus an audit record carrying the intermediate sets and
every selection decision, so the set-theoretic identities the guarantees
rest on can be re-checked from the outside.

The four families, all of length n = 2^m - 1 and dimension within one of
n/2:

* ``build_even_m`` -- even m: split F_2^m by Hamming weight around m/2,
  fold the weight-m/2 middle layer into two halves by complementation,
  and take the two halves as complementary defining sets.
* ``build_two_prime`` -- m = 2p for odd prime p: greedy coset selection
  covering a long consecutive run, with the complementary tail kept free
  for the dual bound.
* ``build_odd_pq`` -- m = p1*p2 for odd primes: same greedy scheme driven
  by the three coset-size classes.
* ``build_sqrt_complement`` -- odd m: all cosets with leaders up to about
  sqrt(n), plus one coset from each complementary residual pair.
* ``build_weight_class`` -- odd m >= 9: a low-leader block joined with a
  weight-parity class, corrected by four explicit cosets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

import numpy as np

from .cosets import CosetTable, build_table, classify_by_size, weight_classes


class SelectionError(ValueError):
    """An override list is not a valid system of pair representatives."""


@dataclass(frozen=True, eq=False)
class DefiningSet:
    """A doubling-closed subset of Z_n naming one cyclic code.

    ``elements`` is an ascending read-only int64 array; ``origin`` records
    the construction tag, parameters and any selection overrides.
    """

    n: int
    elements: np.ndarray = field(repr=False)
    origin: Mapping[str, object]

    # -- construction ------------------------------------------------------

    @classmethod
    def from_mask(
        cls, n: int, mask: np.ndarray, origin: Mapping[str, object] | None = None
    ) -> "DefiningSet":
        elements = np.flatnonzero(mask).astype(np.int64)
        if elements.size and not mask[(elements * 2) % n].all():
            raise ValueError("set is not closed under doubling mod n")
        elements.setflags(write=False)
        return cls(n=n, elements=elements, origin=dict(origin or {}))

    @classmethod
    def from_elements(
        cls, n: int, elements, origin: Mapping[str, object] | None = None
    ) -> "DefiningSet":
        arr = np.unique(np.asarray(sorted(int(x) for x in elements), dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= n):
            raise ValueError(f"elements outside Z_{n}")
        mask = np.zeros(n, dtype=bool)
        mask[arr] = True
        return cls.from_mask(n, mask, origin)

    # -- views -------------------------------------------------------------

    def __len__(self) -> int:
        return int(self.elements.size)

    def __iter__(self):
        return iter(int(x) for x in self.elements)

    def __contains__(self, x: int) -> bool:
        idx = int(np.searchsorted(self.elements, x))
        return idx < self.elements.size and int(self.elements[idx]) == x

    def __eq__(self, other) -> bool:
        if not isinstance(other, DefiningSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.elements, other.elements)

    def __repr__(self) -> str:  # keep huge sets printable
        head = ",".join(str(int(x)) for x in self.elements[:8])
        tail = ",..." if len(self) > 8 else ""
        return f"DefiningSet(n={self.n}, size={len(self)}, elements=[{head}{tail}])"

    def mask(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=bool)
        out[self.elements] = True
        return out

    def as_set(self) -> set[int]:
        return set(int(x) for x in self.elements)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "size": len(self),
            "origin": dict(self.origin),
            "elements": [int(x) for x in self.elements],
        }


# ---------------------------------------------------------------------------
# even m
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvenMAudit:
    """Intermediate sets of the even-m split, in the vector domain [0, 2^m).

    ``b/t/g_preimage`` are the residue preimages of the three special
    vector families (halves equal above median weight, halves equal at
    median weight, halves complementary at median weight).
    ``residual_pairs`` lists (into-first-half leader, into-second-half
    leader) for each complement-paired coset of the leftover middle layer.
    """

    m: int
    t: int
    b_preimage: tuple[int, ...]
    t_preimage: tuple[int, ...]
    g_preimage: tuple[int, ...]
    residual_pairs: tuple[tuple[int, int], ...]
    p1_preimage: tuple[int, ...]
    p2_preimage: tuple[int, ...]
    s1_size: int
    s2_size: int
    swap_pairs: bool

    def as_dict(self) -> dict:
        return {
            "construction": "even-m",
            "m": self.m,
            "t": self.t,
            "b_preimage": list(self.b_preimage),
            "t_preimage": list(self.t_preimage),
            "g_preimage": list(self.g_preimage),
            "residual_pairs": [list(p) for p in self.residual_pairs],
            "p1_preimage": list(self.p1_preimage),
            "p2_preimage": list(self.p2_preimage),
            "s1_size": self.s1_size,
            "s2_size": self.s2_size,
            "swap_pairs": self.swap_pairs,
        }


def build_even_m(m: int, *, swap_pairs: bool = False):
    """Complementary defining sets Z1, Z2 for even m (4 <= m <= 24).

    Z1 collects everything of weight below m/2 plus the special families
    B, T and one coset of each complement pair; Z2 is the mirror half.
    Guarantees |Z1| = 2^(m-1) - 2 and |Z2| = 2^(m-1); both carry a run of
    2^(m/2) - 2 consecutive residues.

    Returns ``(Z1, Z2, audit)``.
    """
    if m % 2 != 0 or not 4 <= m <= 24:
        raise ValueError(f"need even m with 4 <= m <= 24, got {m}")
    t = m // 2
    n = (1 << m) - 1
    size = 1 << m
    half_mask = (1 << t) - 1

    vec = np.arange(size, dtype=np.int64)
    w = np.bitwise_count(vec.astype(np.uint64)).astype(np.int16)
    lo = vec & half_mask
    hi = vec >> t
    halves_equal = lo == hi
    b_mask = (w > t) & halves_equal
    t_mask = (w == t) & halves_equal
    g_mask = (w == t) & (lo == (hi ^ half_mask))
    resid_mask = (w == t) & ~halves_equal & (lo != (hi ^ half_mask))
    del lo, hi, halves_equal

    # Pair residual cosets with their complement images; the larger leader
    # goes to the first half (matching the worked m=6 split), unless swapped.
    table = build_table(m)
    resid_leaders = {int(v) for v in np.unique(table.leader_of[np.flatnonzero(resid_mask)])}
    pairs: list[tuple[int, int]] = []
    seen: set[int] = set()
    for ell in sorted(resid_leaders):
        if ell in seen:
            continue
        partner = int(table.leader_of[n - ell])
        assert partner in resid_leaders and partner != ell, "complement pairing broke"
        seen.update((ell, partner))
        big, small = max(ell, partner), min(ell, partner)
        pairs.append((small, big) if swap_pairs else (big, small))

    p1_res = table.union_mask([a for a, _ in pairs]) if pairs else np.zeros(n, dtype=bool)
    p2_res = table.union_mask([b for _, b in pairs]) if pairs else np.zeros(n, dtype=bool)
    p1_mask = np.zeros(size, dtype=bool)
    p2_mask = np.zeros(size, dtype=bool)
    p1_mask[:n] = p1_res
    p2_mask[:n] = p2_res
    assert not (p1_mask & p2_mask).any()
    assert ((p1_mask | p2_mask) == resid_mask).all(), "pairs must tile the residual layer"
    p1_elems = np.flatnonzero(p1_mask)
    p2_elems = np.flatnonzero(p2_mask)
    assert set(int(n - x) for x in p2_elems) == set(int(x) for x in p1_elems)

    s1 = (w < t) | b_mask | t_mask | p1_mask
    s2 = ((w > t) & ~b_mask) | g_mask | p2_mask
    assert not (s1 & s2).any() and (s1 | s2).all(), "the two halves must tile F_2^m"
    assert int(s1.sum()) == int(s2.sum()) == size // 2
    assert s1[0] and s1[n], "0 and the all-ones vector belong to the first half"

    z1_mask = s1[:n].copy()
    z1_mask[0] = False
    z2_mask = s2[:n]

    origin = {"construction": "even-m", "m": m, "swap_pairs": swap_pairs}
    z1 = DefiningSet.from_mask(n, z1_mask, {**origin, "which": "C1"})
    z2 = DefiningSet.from_mask(n, z2_mask, {**origin, "which": "C2"})
    assert len(z1) == 2 ** (m - 1) - 2 and len(z2) == 2 ** (m - 1)

    audit = EvenMAudit(
        m=m,
        t=t,
        b_preimage=tuple(int(x) for x in np.flatnonzero(b_mask)),
        t_preimage=tuple(int(x) for x in np.flatnonzero(t_mask)),
        g_preimage=tuple(int(x) for x in np.flatnonzero(g_mask)),
        residual_pairs=tuple(pairs),
        p1_preimage=tuple(int(x) for x in p1_elems),
        p2_preimage=tuple(int(x) for x in p2_elems),
        s1_size=int(s1.sum()),
        s2_size=int(s2.sum()),
        swap_pairs=swap_pairs,
    )
    return z1, z2, audit


# ---------------------------------------------------------------------------
# greedy coset selection shared by the two composite-m builders
# ---------------------------------------------------------------------------


def _exact_div(a: int, b: int, what: str) -> int:
    q, r = divmod(a, b)
    if r:
        raise AssertionError(f"{what}: {a} is not divisible by {b}")
    return q


def _covering_prefix(table: CosetTable, full_leaders: Sequence[int], d0_max: int):
    """Leaders of the full-size cosets meeting {1..d0_max}, and the prefix
    index sigma0 that covers them in ascending-leader order."""
    met = np.unique(table.leader_of[1 : d0_max + 1])
    full_set = set(full_leaders)
    f_leaders = tuple(int(v) for v in met if int(v) in full_set)
    if not f_leaders:
        raise AssertionError("no full-size coset meets the run block")
    sigma0 = list(full_leaders).index(max(f_leaders)) + 1
    return f_leaders, sigma0


def _extend_avoiding(
    full_leaders: Sequence[int], start: int, target: int, forbidden: set[int]
) -> list[int]:
    """Take ascending leaders from index ``start`` until ``target`` are
    chosen in total, skipping the forbidden ones."""
    chosen = list(full_leaders[:start])
    for ell in full_leaders[start:]:
        if len(chosen) >= target:
            break
        if ell in forbidden:
            continue
        chosen.append(ell)
    if len(chosen) != target:
        raise AssertionError("ran out of admissible cosets during extension")
    return chosen


@dataclass(frozen=True)
class TwoPrimeAudit:
    """Selection trace for the m = 2p builder."""

    p: int
    m: int
    d0_max: int
    f_leaders: tuple[int, ...]
    sigma0: int
    sigma_lo: int
    sigma: int
    case: str
    chosen_full_leaders: tuple[int, ...]
    chosen_small_leaders: tuple[int, ...]
    forbidden_leaders: tuple[int, ...]
    tail_first: int
    tail_last: int

    def as_dict(self) -> dict:
        d = self.__dict__.copy()
        d["construction"] = "two-prime"
        for k in ("f_leaders", "chosen_full_leaders", "chosen_small_leaders", "forbidden_leaders"):
            d[k] = list(d[k])
        return d


def build_two_prime(p: int):
    """Defining set for m = 2p, p an odd prime with 2p <= 24.

    Covers the whole run {0,...,M} with whole cosets while never touching
    the top 2^e - 2 residues (e = floor(log2 2p) + 1), which the dual
    bound needs free.  Selection is deterministic: ascending leaders,
    forbidden ones skipped.  Returns ``(Z, audit)`` with |Z| = 2^(m-1) - 1.
    """
    if p % 2 == 0 or not _is_odd_prime(p) or 2 * p > 24:
        raise ValueError(f"need an odd prime p with 2p <= 24, got {p}")
    m = 2 * p
    n = (1 << m) - 1
    table = build_table(m)
    cls = classify_by_size(table, 2, p)
    i_list = cls.size_p2_leaders  # size-p cosets
    j_list = cls.size_full_leaders  # size-2p cosets

    m_main = _exact_div(2**m - 4, 2 * p, "run length, main term")
    m_extra = _exact_div(2**p - 2 * p - 2, 4 * p, "run length, correction term")
    d0_max = m_main + m_extra - 1

    f_leaders, sigma0 = _covering_prefix(table, j_list, d0_max)
    sigma_lo = _exact_div(2**m - 2 ** (p + 1), 4 * p, "selection floor")
    e = (2 * p).bit_length()  # floor(log2(2p)) + 1
    tail_len = 2**e - 2
    forbidden = tuple(sorted({int(table.leader_of[n - i]) for i in range(1, tail_len + 1)}))

    if sigma0 >= sigma_lo:
        case = "direct"
        sigma = sigma0
        chosen_full = list(j_list[:sigma0])
        n_small = m_main - 2 * sigma0
        assert 0 <= n_small <= len(i_list)
        chosen_small = list(i_list[:n_small])
    else:
        case = "extended"
        sigma = sigma_lo
        chosen_full = _extend_avoiding(j_list, sigma0, sigma_lo, set(forbidden))
        chosen_small = list(i_list)

    mask = table.union_mask(chosen_full + chosen_small)
    mask[0] = True
    z = DefiningSet.from_mask(n, mask, {"construction": "two-prime", "p": p, "m": m})
    assert len(z) == 2 ** (m - 1) - 1
    assert mask[: d0_max + 1].all(), "the guaranteed run must sit inside Z"
    assert not mask[n - tail_len :].any(), "the dual tail must stay outside Z"

    audit = TwoPrimeAudit(
        p=p,
        m=m,
        d0_max=d0_max,
        f_leaders=f_leaders,
        sigma0=sigma0,
        sigma_lo=sigma_lo,
        sigma=sigma,
        case=case,
        chosen_full_leaders=tuple(chosen_full),
        chosen_small_leaders=tuple(chosen_small),
        forbidden_leaders=forbidden,
        tail_first=n - tail_len,
        tail_last=n - 1,
    )
    return z, audit


@dataclass(frozen=True)
class OddPqAudit:
    """Selection trace for the m = p1*p2 builder."""

    p1: int
    p2: int
    m: int
    d0_max: int
    base_small_leaders: tuple[int, ...]
    f_leaders: tuple[int, ...]
    sigma0: int
    sigma_lo: int
    sigma: int
    case: str
    chosen_mid_leaders: tuple[int, ...]
    chosen_full_leaders: tuple[int, ...]
    forbidden_leaders: tuple[int, ...]
    tail_first: int
    tail_last: int

    def as_dict(self) -> dict:
        d = self.__dict__.copy()
        d["construction"] = "odd-pq"
        for k in (
            "base_small_leaders",
            "f_leaders",
            "chosen_mid_leaders",
            "chosen_full_leaders",
            "forbidden_leaders",
        ):
            d[k] = list(d[k])
        return d


def build_odd_pq(p1: int, p2: int):
    """Defining set for m = p1*p2, odd primes p1 < p2, m <= 24.

    Mirror of :func:`build_two_prime` with three coset-size classes; 0 is
    NOT included.  Returns ``(Z, audit)`` with |Z| = 2^(m-1) - 1.
    """
    if not (_is_odd_prime(p1) and _is_odd_prime(p2) and p1 < p2):
        raise ValueError(f"need odd primes p1 < p2, got ({p1}, {p2})")
    m = p1 * p2
    if m > 24:
        raise ValueError(f"p1*p2 = {m} exceeds the table cap 24")
    n = (1 << m) - 1
    table = build_table(m)
    cls = classify_by_size(table, p1, p2)
    i_list = cls.size_p1_leaders
    j_list = cls.size_p2_leaders
    k_list = cls.size_full_leaders

    d0_max = (
        (2**m - 1) // m
        + (2**p1 - 1) // (2 * m)
        + (2**p2 - 1) // (2 * m)
        + (2**p1 - 1) // (4 * m)
        + (2**p2 - 1) // (4 * m)
        - 1
    )
    base_small_count = _exact_div(2**p1 - 2, 2 * p1, "half the smallest size class")
    base_small = list(i_list[:base_small_count])

    f_leaders, sigma0 = _covering_prefix(table, k_list, d0_max)
    sigma_lo = _exact_div(2**m - 2**p1 - 2 ** (p2 + 1) + 4, 2 * m, "selection floor")
    e = m.bit_length()  # floor(log2(m)) + 1 (m is never a power of two here)
    tail_len = 2**e - 2
    forbidden = tuple(sorted({int(table.leader_of[n - i]) for i in range(1, tail_len + 1)}))

    if sigma0 >= sigma_lo:
        case = "direct"
        sigma = sigma0
        chosen_full = list(k_list[:sigma0])
        n_mid = _exact_div(2**m - 2**p1, 2 * p2, "mid-size allotment") - p1 * sigma0
        assert 0 <= n_mid <= len(j_list)
        chosen_mid = list(j_list[:n_mid])
    else:
        case = "extended"
        sigma = sigma_lo
        chosen_full = _extend_avoiding(k_list, sigma0, sigma_lo, set(forbidden))
        chosen_mid = list(j_list)

    mask = table.union_mask(base_small + chosen_mid + chosen_full)
    z = DefiningSet.from_mask(n, mask, {"construction": "odd-pq", "p1": p1, "p2": p2, "m": m})
    assert len(z) == 2 ** (m - 1) - 1
    assert mask[1 : d0_max + 1].all(), "the guaranteed run must sit inside Z"
    assert not mask[n - tail_len :].any() and not mask[0]

    audit = OddPqAudit(
        p1=p1,
        p2=p2,
        m=m,
        d0_max=d0_max,
        base_small_leaders=tuple(base_small),
        f_leaders=f_leaders,
        sigma0=sigma0,
        sigma_lo=sigma_lo,
        sigma=sigma,
        case=case,
        chosen_mid_leaders=tuple(chosen_mid),
        chosen_full_leaders=tuple(chosen_full),
        forbidden_leaders=forbidden,
        tail_first=n - tail_len,
        tail_last=n - 1,
    )
    return z, audit


def _is_odd_prime(v: int) -> bool:
    if v < 3 or v % 2 == 0:
        return False
    d = 3
    while d * d <= v:
        if v % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# odd m: low-leader block plus complementary pair representatives
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SqrtComplementAudit:
    """Block-and-pairs trace for the odd-m builder."""

    m: int
    block_top: int
    t_leaders: tuple[int, ...]
    neg_t_leaders: tuple[int, ...]
    residual_pairs: tuple[tuple[int, int], ...]
    selected_leaders: tuple[int, ...]
    overrides: tuple[int, ...] | None

    def as_dict(self) -> dict:
        return {
            "construction": "sqrt-complement",
            "m": self.m,
            "block_top": self.block_top,
            "t_leaders": list(self.t_leaders),
            "neg_t_leaders": list(self.neg_t_leaders),
            "residual_pairs": [list(p) for p in self.residual_pairs],
            "selected_leaders": list(self.selected_leaders),
            "overrides": None if self.overrides is None else list(self.overrides),
        }


def build_sqrt_complement(m: int, overrides=None):
    """Defining set for odd m (5 <= m <= 23).

    T = union of the cosets of 1..2^((m+1)/2) - 2; T and -T never meet for
    odd m, and whatever cosets remain outside T, -T and {0} come in
    complement pairs {C, -C}.  One coset per pair joins T (default: the
    smaller leader; ``overrides`` forces specific leaders).  Returns
    ``(Z, audit)`` with |Z| = 2^(m-1) - 1.
    """
    if m % 2 == 0 or not 5 <= m <= 23:
        raise ValueError(f"need odd m with 5 <= m <= 23, got {m}")
    n = (1 << m) - 1
    table = build_table(m)
    block_top = 2 ** ((m + 1) // 2) - 2

    t_leaders = tuple(int(v) for v in np.unique(table.leader_of[1 : block_top + 1]))
    t_mask = table.union_mask(t_leaders)
    neg_idx = (n - np.arange(n, dtype=np.int64)) % n
    neg_t_mask = t_mask[neg_idx]
    assert not (t_mask & neg_t_mask).any(), "block and negated block must not meet"
    neg_t_leaders = tuple(int(v) for v in np.unique(table.leader_of[np.flatnonzero(neg_t_mask)]))

    resid_mask = ~t_mask & ~neg_t_mask
    resid_mask[0] = False
    resid_leaders = {int(v) for v in np.unique(table.leader_of[np.flatnonzero(resid_mask)])}
    pairs: list[tuple[int, int]] = []
    seen: set[int] = set()
    for ell in sorted(resid_leaders):
        if ell in seen:
            continue
        partner = int(table.leader_of[n - ell])
        assert partner in resid_leaders and partner != ell, "residual pairing broke"
        seen.update((ell, partner))
        pairs.append((ell, partner))  # ell < partner by ascending scan

    if overrides is None:
        selected = [ell for ell, _ in pairs]
        overrides_used = None
    else:
        overrides_used = tuple(sorted(int(x) for x in overrides))
        chosen = set(overrides_used)
        pair_union = {x for pr in pairs for x in pr}
        if not chosen <= pair_union:
            raise SelectionError(
                f"overrides {sorted(chosen - pair_union)} are not residual pair leaders"
            )
        selected = []
        for a, b in pairs:
            hits = [x for x in (a, b) if x in chosen]
            if len(hits) != 1:
                raise SelectionError(
                    f"pair ({a}, {b}) needs exactly one representative, got {hits or 'none'}"
                )
            selected.append(hits[0])

    mask = t_mask.copy()
    if selected:
        mask |= table.union_mask(selected)
    z = DefiningSet.from_mask(
        n,
        mask,
        {
            "construction": "sqrt-complement",
            "m": m,
            "overrides": None if overrides_used is None else list(overrides_used),
        },
    )
    assert len(z) == 2 ** (m - 1) - 1

    audit = SqrtComplementAudit(
        m=m,
        block_top=block_top,
        t_leaders=t_leaders,
        neg_t_leaders=neg_t_leaders,
        residual_pairs=tuple(pairs),
        selected_leaders=tuple(selected),
        overrides=overrides_used,
    )
    return z, audit


# ---------------------------------------------------------------------------
# odd m >= 9: weight-parity class construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightClassAudit:
    """Trace of the weight-parity construction.

    ``intersection_leaders`` is the four-coset identity for A ∩ B (block
    meets negated block); ``excluded_top`` are the four residues
    2^((m+3)/2) - j, j in {9,11,13,15}, verified absent from B.
    """

    m: int
    i: int
    block_top: int
    t: int
    u: int
    s: int
    v: int
    a_leaders: tuple[int, ...]
    b0_leaders: tuple[int, ...]
    intersection_leaders: tuple[int, ...]
    excluded_top: tuple[int, ...]

    def as_dict(self) -> dict:
        d = self.__dict__.copy()
        d["construction"] = "weight-class"
        for k in ("a_leaders", "b0_leaders", "intersection_leaders", "excluded_top"):
            d[k] = list(d[k])
        return d


def build_weight_class(m: int, i: int):
    """Defining set T for odd m >= 9 and parity selector i in {0, 1}.

    A = cosets of 1..L with L = 4*(2^((m-1)/2) - 4); B0 = cosets of n-j
    for j <= L with wt(j) = i (mod 2).  The chosen half of the nonzero
    residues by weight parity is corrected by re-admitting the two cosets
    where B0 overlaps A and removing two explicit extra cosets; the union
    with A then has exactly 2^(m-1) - 1 elements.  Returns ``(T, audit)``.
    """
    if m % 2 == 0 or not 9 <= m <= 23:
        raise ValueError(f"need odd m with 9 <= m <= 23, got {m}")
    if i not in (0, 1):
        raise ValueError(f"parity selector must be 0 or 1, got {i}")
    n = (1 << m) - 1
    half = (m - 1) // 2
    L = 4 * (2**half - 4)
    table = build_table(m)
    wc = weight_classes(m)

    a_leaders = tuple(int(v) for v in np.unique(table.leader_of[1 : L + 1]))
    a_mask = table.union_mask(a_leaders)

    j_vals = np.arange(1, L + 1, dtype=np.int64)
    j_parity = np.bitwise_count(j_vals.astype(np.uint64)).astype(np.int64) & 1
    b0_targets = n - j_vals[j_parity == i]
    b0_leaders = tuple(int(v) for v in np.unique(table.leader_of[b0_targets]))
    b0_mask = table.union_mask(b0_leaders)
    b_all_leaders = np.unique(table.leader_of[n - j_vals])
    b_all_mask = table.union_mask(b_all_leaders)

    first_tu = (i == 0 and m % 4 == 3) or (i == 1 and m % 4 == 1)
    t_val = (2**half - 1) if first_tu else (2 ** (half + 1) - 1)
    u_val = (2 ** (half + 1) - 3) if first_tu else (3 * 2**half - 1)
    first_sv = (i == 0 and m % 4 == 1) or (i == 1 and m % 4 == 3)
    s_val = (2 ** (half + 2) - 9) if first_sv else (2 ** (half + 2) - 11)
    v_val = (2 ** (half + 2) - 15) if first_sv else (2 ** (half + 2) - 13)
    # The case values are coset representatives, not always leaders.
    lead = lambda x: int(table.leader_of[x])

    # Identity: the block meets the negated block in exactly four cosets.
    expected_inter = sorted(
        {lead(2**half - 1), lead(2 ** (half + 1) - 3), lead(2 ** (half + 1) - 1), lead(3 * 2**half - 1)}
    )
    inter_mask = a_mask & b_all_mask
    inter_leaders = sorted(int(v) for v in np.unique(table.leader_of[np.flatnonzero(inter_mask)]))
    assert inter_leaders == expected_inter, "four-coset intersection identity failed"
    # The four top-block residues never land in the negated block.
    excluded_top = tuple(2 ** (half + 2) - j for j in (9, 11, 13, 15))
    assert not any(b_all_mask[x] for x in excluded_top)
    # The i-parity slice of the intersection is exactly C_t ∪ C_u.
    tu_mask = table.union_mask(sorted({lead(t_val), lead(u_val)}))
    assert ((a_mask & b0_mask) == tu_mask).all(), "B0 ∩ A must be C_t ∪ C_u"

    sv_mask = table.union_mask(sorted({lead(s_val), lead(v_val)}))
    b1_mask = wc.mask(1 ^ i) & ~((b0_mask & ~tu_mask) | sv_mask)
    t_total = a_mask | b1_mask

    z = DefiningSet.from_mask(n, t_total, {"construction": "weight-class", "m": m, "i": i})
    # Nominal size is 2^(m-1) - 1.  The count relies on C_s and C_v lying
    # outside A; at (m, i) = (9, 0) the orbit of v = 49 dips to 35 <= L,
    # C_v is absorbed by the low block, and the set comes out m larger.
    # The run/containment guarantees below hold regardless.
    assert t_total[1 : L + 1].all(), "the low block must sit inside T"
    neg_mask = t_total[(n - np.arange(n, dtype=np.int64)) % n]
    assert not neg_mask[: 2**half - 1].any(), "low residues must avoid -T"

    audit = WeightClassAudit(
        m=m,
        i=i,
        block_top=L,
        t=t_val,
        u=u_val,
        s=s_val,
        v=v_val,
        a_leaders=a_leaders,
        b0_leaders=b0_leaders,
        intersection_leaders=tuple(inter_leaders),
        excluded_top=excluded_top,
    )
    return z, audit


#: All audit record types emitted by the builders.
ConstructionAudit = Union[EvenMAudit, TwoPrimeAudit, OddPqAudit, SqrtComplementAudit, WeightClassAudit]
