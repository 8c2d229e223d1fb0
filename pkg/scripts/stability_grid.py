"""Print the stable range min(2p+1, 2(n-p)) and certificate lengths on a grid."""

import argparse

from cycle_betti import ChowDescriptor, OutOfRange, certify_stability, iso_ranges, verify_certificate


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--p-max", type=int, default=8)
    parser.add_argument("--n-max", type=int, default=16)
    parser.add_argument("--k", type=int, default=8)
    parser.add_argument("--d", type=int, default=2)
    args = parser.parse_args()

    print(f"stable range (rows p, columns n); '*' marks a verified certificate for k={args.k}")
    print("     " + "".join(f"{n:>4}" for n in range(args.n_max + 1)))
    for p in range(args.p_max + 1):
        row = []
        for n in range(args.n_max + 1):
            if n < p:
                row.append("    ")
                continue
            stable = iso_ranges(p, n).stable_max_k
            try:
                ok = verify_certificate(certify_stability(ChowDescriptor(p, args.d, n), args.k)).ok
            except OutOfRange:
                ok = False
            row.append(f"{stable:>3}{'*' if ok else ' '}")
        print(f"{p:>4} " + "".join(row))


if __name__ == "__main__":
    main()
