"""One pass over the four defining-set constructions.

Each family targets length n = 2^m - 1 and dimension about n/2; the
payoff is the pair of run bounds (primal and dual) that come out of the
placement of consecutive residues.
"""

from bincyclic import (
    bch_run,
    build_even_m,
    build_odd_pq,
    build_sqrt_complement,
    build_two_prime,
    build_weight_class,
    dual_defining_set,
)


def show(tag, zset):
    n = zset.n
    delta, start = bch_run(zset)
    dual = dual_defining_set(zset)
    dual_delta, dual_start = bch_run(dual)
    print(f"  {tag}: [{n},{n - len(zset)}]  bch >= {delta} (run at {start})"
          f"  dual bch >= {dual_delta} (run at {dual_start})")


def main():
    print("even-m split, m = 6: complementary halves of {1..n-1}")
    z1, z2, audit = build_even_m(6)
    show("C1", z1)
    show("C2", z2)
    print(f"  complement pairs routed: P1 preimage {audit.p1_preimage}")

    print("\ntwo-prime, m = 2p: greedy head run with a protected tail")
    for p in (3, 5):
        z, audit = build_two_prime(p)
        show(f"p={p}", z)
        print(f"    case {audit.case}; free tail {audit.tail_first}..{audit.tail_last}")

    print("\nodd-pq, m = p1*p2:")
    z, audit = build_odd_pq(3, 5)
    show("(3,5)", z)
    print(f"    sigma0 = {audit.sigma0}, mid-size cosets chosen: "
          f"{len(audit.chosen_mid_leaders)}")

    print("\nsqrt-complement, odd m: low block plus one side of each +/- pair")
    z, _ = build_sqrt_complement(5)
    show("m=5", z)
    z, audit = build_sqrt_complement(7, overrides=(21, 27))
    show("m=7 choose {21,27}", z)
    print(f"    residual pairs {audit.residual_pairs} -> selected "
          f"{audit.selected_leaders}")

    print("\nweight-class, odd m >= 9: parity-i words minus four top cosets")
    for i in (0, 1):
        z, audit = build_weight_class(9, i)
        show(f"m=9 i={i}", z)
        print(f"    t,u,s,v = {audit.t},{audit.u},{audit.s},{audit.v}; "
              f"excluded top residues {audit.excluded_top}")


if __name__ == "__main__":
    main()
