"""Run the degree-2 rank comparison for p = 4 across a range of n.

    python scripts/reproduce_degree_two.py --n-max 15
"""

import argparse

from cycle_betti import detect_contradiction, hypothetical_stable_deltas, strata_series


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--p", type=int, default=4)
    parser.add_argument("--n-min", type=int, default=9)
    parser.add_argument("--n-max", type=int, default=15)
    parser.add_argument("--max-i", type=int, default=4)
    args = parser.parse_args()

    print("hypothetical deltas:", list(hypothetical_stable_deltas(args.max_i)))
    print(f"{'n':>3}  {'X':<22} {'A':<22} {'B':<22} deltas            verdict")
    for n in range(args.n_min, args.n_max + 1):
        s = strata_series(args.p, n, 2 * args.max_i)
        r = detect_contradiction(args.p, n, args.max_i)
        cols = [str(x.even_part()) for x in (s.x_series, s.a_series, s.b_series)]
        tail = "" if r.mismatch is None else f" at {r.first_mismatch_degree}: {r.mismatch[0]} vs {r.mismatch[1]}"
        print(f"{n:>3}  {cols[0]:<22} {cols[1]:<22} {cols[2]:<22} {str(list(r.derived_deltas)):<17} {r.verdict}{tail}")


if __name__ == "__main__":
    main()
