"""Distance engines: exact enumeration, seeded search, and the dispatcher."""

import json
import random

import pytest

from bincyclic.codecore import assemble, dual_defining_set
from bincyclic.constructions import (
    DefiningSet,
    build_sqrt_complement,
    build_two_prime,
    build_weight_class,
)
from bincyclic.cosets import build_table
from bincyclic.distance import (
    BudgetExceeded,
    auto_distance,
    exact_min_distance,
    low_weight_search,
)
from bincyclic.fixtures import EXAMPLE1_Z1, EXAMPLE1_Z2
from bincyclic.gf2 import poly_divrem


def _code(n, elements):
    return assemble(DefiningSet.from_elements(n, elements))


def _naive_min_distance(code):
    """Re-encode every nonzero message; canonical witness is the smallest
    packed value among the minimum-weight words."""
    best_w, best_word = 1 << 30, 0
    for msg in range(1, 1 << code.dimension):
        word = code.encode(msg)
        w = word.bit_count()
        if w < best_w or (w == best_w and word < best_word):
            best_w, best_word = w, word
    return best_w, best_word


class TestExhaustive:
    def test_length_15_family(self):
        z1 = DefiningSet.from_elements(15, EXAMPLE1_Z1)
        z2 = DefiningSet.from_elements(15, EXAMPLE1_Z2)
        expected = [
            (9, z1, 3),
            (6, dual_defining_set(z1), 6),
            (7, z2, 5),
            (8, dual_defining_set(z2), 4),
        ]
        for k, zset, d in expected:
            code = assemble(zset)
            assert code.dimension == k
            result = exact_min_distance(code)
            assert result.exact_distance == d
            assert result.method == "exhaustive"
            assert result.best_weight_found == d
            assert result.proven_lower_bound == d
            assert result.witness.bit_count() == d
            assert result.iterations == (1 << k) - 1

    def test_repetition_code(self):
        result = exact_min_distance(_code(7, (1, 2, 3, 4, 5, 6)))
        assert result.exact_distance == 7
        assert result.witness == (1 << 7) - 1  # the all-ones word

    def test_matches_naive_oracle_on_random_codes(self):
        rng = random.Random(20260814)
        checked = 0
        for m in (4, 5):
            n = 2**m - 1
            table = build_table(m)
            leaders = list(table.leaders)
            while checked < (10 if m == 4 else 20):
                picked = rng.sample(leaders, rng.randrange(1, len(leaders)))
                mask = table.union_mask(picked)
                size = int(mask.sum())
                if size == n or n - size > 12:
                    continue
                code = assemble(DefiningSet.from_mask(n, mask, {"construction": "random"}))
                result = exact_min_distance(code)
                oracle_w, oracle_word = _naive_min_distance(code)
                assert result.exact_distance == oracle_w
                assert result.witness == oracle_word
                checked += 1

    def test_witness_is_always_a_codeword(self):
        code = _code(15, EXAMPLE1_Z2)
        result = exact_min_distance(code)
        assert code.is_codeword(result.witness)

    def test_budget_refusal_names_the_search_engine(self):
        z, _ = build_sqrt_complement(7)
        code = assemble(z)  # dimension 64
        with pytest.raises(BudgetExceeded, match="dimension 64 .* budget 33"):
            exact_min_distance(code)
        with pytest.raises(BudgetExceeded, match="low_weight_search"):
            exact_min_distance(code)

    def test_budget_is_adjustable(self):
        code = _code(15, EXAMPLE1_Z1)  # dimension 9
        with pytest.raises(BudgetExceeded):
            exact_min_distance(code, budget=8)

    def test_rejects_bad_thread_count(self):
        with pytest.raises(ValueError, match="threads"):
            exact_min_distance(_code(7, (1, 2, 4)), threads=0)


class TestParallelDeterminism:
    @pytest.mark.parametrize(
        "n,elements,k",
        [
            (31, None, 16),   # sqrt construction, below the split threshold
            (63, "wide", 21), # wide enough that 2 and 8 workers really split
        ],
    )
    def test_thread_counts_agree(self, n, elements, k):
        if elements is None:
            z, _ = build_sqrt_complement(5)
        else:
            table = build_table(6)
            mask = table.union_mask([1, 3, 5, 7, 11, 13, 15])
            z = DefiningSet.from_mask(63, mask, {"construction": "random"})
        code = assemble(z)
        assert code.dimension == k
        results = [exact_min_distance(code, threads=t) for t in (1, 2, 8)]
        distances = {r.exact_distance for r in results}
        witnesses = {r.witness for r in results}
        assert len(distances) == 1 and len(witnesses) == 1
        assert results[0].witness.bit_count() == results[0].exact_distance


@pytest.fixture(scope="module")
def code_63_32():
    z, _ = build_two_prime(3)
    return assemble(z)


class TestSearch:
    def test_deterministic_for_fixed_seed(self, code_63_32):
        a = low_weight_search(code_63_32, seed=5, iterations=40)
        b = low_weight_search(code_63_32, seed=5, iterations=40)
        assert (a.best_weight_found, a.witness) == (b.best_weight_found, b.witness)

    def test_monotone_in_iterations(self, code_63_32):
        short = low_weight_search(code_63_32, seed=11, iterations=30)
        long = low_weight_search(code_63_32, seed=11, iterations=150)
        assert long.best_weight_found <= short.best_weight_found

    def test_result_shape(self, code_63_32):
        result = low_weight_search(code_63_32, seed=3, iterations=25)
        assert result.method == "search"
        assert result.exact_distance is None
        assert result.seed == 3 and result.iterations == 25
        # the proven floor is the run bound of the defining set: 12 here
        assert result.proven_lower_bound == 12
        assert result.best_weight_found >= result.proven_lower_bound

    def test_witness_soundness(self, code_63_32):
        result = low_weight_search(code_63_32, seed=7, iterations=60)
        _, rem = poly_divrem(result.witness, code_63_32.generator)
        assert rem == 0
        assert result.witness.bit_count() == result.best_weight_found

    def test_search_can_reach_a_known_distance(self):
        # [63,32] has exact distance 12; a modest search should find it
        z, _ = build_two_prime(3)
        code = assemble(z)
        result = low_weight_search(code, seed=1, iterations=300, depth=2)
        assert result.best_weight_found == 12

    @pytest.mark.parametrize("depth", [0, 4, -1])
    def test_rejects_bad_depth(self, code_63_32, depth):
        with pytest.raises(ValueError, match="depth"):
            low_weight_search(code_63_32, seed=1, iterations=5, depth=depth)

    def test_rejects_bad_iterations(self, code_63_32):
        with pytest.raises(ValueError, match="iterations"):
            low_weight_search(code_63_32, seed=1, iterations=0)


class TestAutoDispatch:
    def test_small_dimension_goes_exhaustive(self):
        result = auto_distance(_code(15, EXAMPLE1_Z2))
        assert result.method == "exhaustive"
        assert result.exact_distance == 5

    def test_large_dimension_requires_a_seed(self):
        z, _ = build_sqrt_complement(7)
        code = assemble(z)
        with pytest.raises(ValueError, match="seed"):
            auto_distance(code)
        result = auto_distance(code, seed=1, iterations=20)
        assert result.method == "search"

    def test_wide_code_reports_its_floor(self):
        # [511,256]: the run bound alone proves 51, comfortably >= 49
        z, _ = build_weight_class(9, 1)
        code = assemble(z)
        assert code.dimension == 256
        result = auto_distance(code, seed=2, iterations=2, depth=1)
        assert result.method == "search"
        assert result.proven_lower_bound == 51
        assert result.proven_lower_bound >= 49
        assert result.best_weight_found >= result.proven_lower_bound
        _, rem = poly_divrem(result.witness, code.generator)
        assert rem == 0

    def test_budget_override_flips_the_route(self):
        code = _code(15, EXAMPLE1_Z1)  # dimension 9
        assert auto_distance(code).method == "exhaustive"
        assert auto_distance(code, budget=8, seed=4, iterations=10).method == "search"


class TestResultSerialization:
    def test_as_dict_round_trips(self):
        result = exact_min_distance(_code(15, EXAMPLE1_Z1))
        blob = json.loads(json.dumps(result.as_dict()))
        assert blob["method"] == "exhaustive"
        assert blob["exact_distance"] == 3
        assert blob["witness_weight"] == 3
        assert blob["witness_bits"].count("1") == 3
