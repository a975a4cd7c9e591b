"""Minimum-distance engines for binary cyclic codes.

Two engines share one result type:

* :func:`exact_min_distance` enumerates every nonzero message in Gray
  order, so consecutive codewords differ by one XOR with a shifted copy
  of the generator.  The low bits of the message index a precomputed
  block of XOR combinations kept as a bit-packed matrix; one numpy
  popcount sweep scores a whole block.  Exact, and independent of the
  number of workers.
* :func:`low_weight_search` repeatedly reduces the shift matrix of g on
  a random information set and scores all messages of weight <= depth.
  Fast for any dimension, returns an upper bound plus the run bound as
  ``proven_lower_bound``.

:func:`auto_distance` picks whichever engine the dimension allows.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .codecore import CyclicCode, bch_lower_bound
from .gf2 import poly_divrem

#: per-worker scratch ceiling for the combination block, in bytes
_BLOCK_BYTES = 16 << 20


class BudgetExceeded(RuntimeError):
    """Dimension too large for exhaustive enumeration."""


class SearchError(RuntimeError):
    """The randomized search could not complete an iteration."""


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance computation.

    ``exact_distance`` is set only by the exhaustive engine; the search
    engine reports ``best_weight_found`` (an upper bound) together with
    ``proven_lower_bound`` (the run bound).  ``witness`` is a codeword
    of weight ``best_weight_found``, bit-packed little-endian.
    """

    method: str
    best_weight_found: int
    exact_distance: Optional[int]
    proven_lower_bound: int
    witness: int
    iterations: int
    seed: Optional[int]

    def as_dict(self) -> dict:
        from .gf2 import poly_to_bitstring

        return {
            "method": self.method,
            "best_weight_found": self.best_weight_found,
            "exact_distance": self.exact_distance,
            "proven_lower_bound": self.proven_lower_bound,
            "witness_bits": poly_to_bitstring(self.witness),
            "witness_weight": self.witness.bit_count(),
            "iterations": self.iterations,
            "seed": self.seed,
        }


def _pack_rows(code: CyclicCode) -> np.ndarray:
    """Shift matrix of g as a (k, W) array of uint64 lanes."""
    k = code.dimension
    lanes = (code.n + 63) // 64
    rows = np.zeros((k, lanes), dtype=np.uint64)
    for i in range(k):
        word = code.generator << i
        for j in range(lanes):
            rows[i, j] = (word >> (64 * j)) & 0xFFFFFFFFFFFFFFFF
    return rows

def _lanes_to_int(lanes: np.ndarray) -> int:
    return int.from_bytes(lanes.astype("<u8").tobytes(), "little")


def _scan_range(
    combos: np.ndarray,
    high_rows: np.ndarray,
    t_start: int,
    t_stop: int,
    skip_zero: bool,
) -> tuple[int, int, int]:
    """Score Gray-code segment [t_start, t_stop) of the high message bits.

    Returns (best weight, canonical witness, messages scored).  The base
    codeword for t_start is rebuilt from gray(t_start); each later step
    XORs in the single toggled row, so the walk is one row-XOR per block.
    """
    lanes = combos.shape[1]
    base = np.zeros(lanes, dtype=np.uint64)
    gray = t_start ^ (t_start >> 1)
    j = 0
    while gray >> j:
        if (gray >> j) & 1:
            base ^= high_rows[j]
        j += 1

    flat = lanes == 1
    combos_flat = combos[:, 0] if flat else combos
    scratch = np.empty_like(combos)
    weights = np.empty(combos.shape[0], dtype=np.int64)
    best_w = 1 << 30
    best_wit = 0
    scored = 0
    for t in range(t_start, t_stop):
        if t != t_start:
            base ^= high_rows[_ntz(t)]
        if flat:
            w = np.bitwise_count(combos_flat ^ base[0])
        else:
            np.bitwise_xor(combos, base, out=scratch)
            w = np.bitwise_count(scratch).sum(axis=1, dtype=np.int64)
        np.copyto(weights, w, casting="unsafe")
        if skip_zero and t == 0:
            weights[0] = 1 << 30
            scored -= 1
        scored += combos.shape[0]
        wmin = int(weights.min())
        if wmin <= best_w:
            hits = np.flatnonzero(weights == wmin)
            if flat:
                cand = min(int(combos_flat[i] ^ base[0]) for i in hits)
            else:
                cand = min(_lanes_to_int(combos[i] ^ base) for i in hits)
            if wmin < best_w or cand < best_wit:
                best_w, best_wit = wmin, cand
    return best_w, best_wit, scored


def _ntz(t: int) -> int:
    return (t & -t).bit_length() - 1


def exact_min_distance(code: CyclicCode, *, budget: int = 33, threads: int = 1) -> DistanceResult:
    """Exact minimum distance by full Gray-code enumeration.

    Refuses dimensions above ``budget`` (default 33, around 8.6e9 scored
    messages).  ``threads`` is a parallelism hint; the message space is
    split into contiguous Gray segments and the per-segment results are
    min-combined on (weight, witness), so the answer -- including the
    canonical witness, the smallest bit-packed minimum-weight word -- is
    identical for any worker count.
    """
    k = code.dimension
    if k > budget:
        raise BudgetExceeded(
            f"dimension {k} exceeds the exhaustive budget {budget}; "
            "use low_weight_search for an upper bound"
        )
    if threads < 1:
        raise ValueError("threads must be >= 1")

    rows = _pack_rows(code)
    lanes = rows.shape[1]
    # Low bits become one in-memory block of XOR combinations.
    h_cap = max(1, (_BLOCK_BYTES // (8 * lanes)).bit_length() - 1)
    h = min(k, 16, h_cap)
    combos = np.zeros((1, lanes), dtype=np.uint64)
    for b in range(h):
        combos = np.vstack([combos, combos ^ rows[b]])
    high_rows = rows[h:]
    r = k - h

    total = 1 << r
    if threads == 1 or total < 4 * threads:
        spans = [(0, total)]
    else:
        step = (total + threads - 1) // threads
        spans = [(lo, min(lo + step, total)) for lo in range(0, total, step)]

    if len(spans) == 1:
        results = [_scan_range(combos, high_rows, 0, total, True)]
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            futs = [
                pool.submit(_scan_range, combos, high_rows, lo, hi, lo == 0)
                for lo, hi in spans
            ]
            results = [f.result() for f in futs]

    best_w, best_wit, scored = results[0]
    for w, wit, s in results[1:]:
        if w < best_w or (w == best_w and wit < best_wit):
            best_w, best_wit = w, wit
        scored += s
    assert scored == (1 << k) - 1
    assert best_wit.bit_count() == best_w
    _, rem = poly_divrem(best_wit, code.generator)
    assert rem == 0, "witness must be divisible by the generator"

    return DistanceResult(
        method="exhaustive",
        best_weight_found=best_w,
        exact_distance=best_w,
        proven_lower_bound=best_w,
        witness=best_wit,
        iterations=scored,
        seed=None,
    )


def low_weight_search(
    code: CyclicCode, *, seed: int, iterations: int = 10000, depth: int = 2
) -> DistanceResult:
    """Randomized information-set search for low-weight codewords.

    Each iteration draws a seeded random column order, reduces the shift
    matrix of g to systematic form on the first independent columns, and
    scores every combination of at most ``depth`` basis rows (depth <= 3).
    Deterministic for fixed (seed, iterations, depth), and consuming a
    fixed RNG amount per iteration, so longer runs extend shorter ones.
    """
    if depth not in (1, 2, 3):
        raise ValueError("depth must be 1, 2, or 3")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    n, k = code.n, code.dimension
    rows = [code.generator << i for i in range(k)]
    rng = np.random.default_rng(seed)

    best_w = 1 << 30
    best_wit = 0
    for _ in range(iterations):
        perm = rng.permutation(n)
        basis = rows.copy()
        filled = 0
        for col in perm:
            col = int(col)
            bit = 1 << col
            pivot = next((r for r in range(filled, k) if basis[r] & bit), None)
            if pivot is None:
                continue
            basis[filled], basis[pivot] = basis[pivot], basis[filled]
            piv_row = basis[filled]
            for r in range(k):
                if r != filled and basis[r] & bit:
                    basis[r] ^= piv_row
            filled += 1
            if filled == k:
                break
        if filled < k:
            raise SearchError("generator matrix lost rank during reduction")

        for r in range(k):
            w = basis[r].bit_count()
            if w < best_w or (w == best_w and basis[r] < best_wit):
                best_w, best_wit = w, basis[r]
        if depth >= 2:
            for a in range(k):
                ra = basis[a]
                for b in range(a + 1, k):
                    word = ra ^ basis[b]
                    w = word.bit_count()
                    if w < best_w or (w == best_w and word < best_wit):
                        best_w, best_wit = w, word
        if depth == 3:
            for a in range(k):
                ra = basis[a]
                for b in range(a + 1, k):
                    rab = ra ^ basis[b]
                    for c in range(b + 1, k):
                        word = rab ^ basis[c]
                        w = word.bit_count()
                        if w < best_w or (w == best_w and word < best_wit):
                            best_w, best_wit = w, word

    _, rem = poly_divrem(best_wit, code.generator)
    assert rem == 0, "witness must be divisible by the generator"
    assert best_wit.bit_count() == best_w

    return DistanceResult(
        method="search",
        best_weight_found=best_w,
        exact_distance=None,
        proven_lower_bound=bch_lower_bound(code.defining_set),
        witness=best_wit,
        iterations=iterations,
        seed=seed,
    )


def auto_distance(
    code: CyclicCode,
    *,
    budget: int = 33,
    seed: Optional[int] = None,
    iterations: int = 10000,
    depth: int = 2,
    threads: int = 1,
) -> DistanceResult:
    """Dispatch on dimension: exhaustive when it fits the budget, else search."""
    if code.dimension <= budget:
        return exact_min_distance(code, budget=budget, threads=threads)
    if seed is None:
        raise ValueError("dimension exceeds the exhaustive budget; a search seed is required")
    return low_weight_search(code, seed=seed, iterations=iterations, depth=depth)
