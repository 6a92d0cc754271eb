#!/usr/bin/env python3
"""Report on a truncation of the summand complex of Z^n.

Vertex and edge counts, connectivity, degree spread, and (optionally)
the H_1 rank of the truncated 2-skeleton.  The truncation keeps the
primitive vectors with max-norm at most the bound, so the numbers are
evidence about the full complex, not proofs.
"""

import argparse

from torelli import fs_connected, fs_edges, fs_h1_rank, fs_vertices
from torelli.lattice import fs_adjacency


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--bound", type=int, default=1)
    parser.add_argument("--homology", action="store_true",
                        help="also compute the truncated H_1 rank")
    parser.add_argument("--dot", metavar="PATH",
                        help="write the 1-skeleton in DOT format")
    args = parser.parse_args()

    verts = fs_vertices(args.n, args.bound)
    edges = fs_edges(args.n, args.bound)
    adj = fs_adjacency(args.n, args.bound)
    degrees = sorted(len(neighbors) for neighbors in adj.values())

    print(f"FS(Z^{args.n}) truncated at max-norm {args.bound}")
    print(f"  vertices : {len(verts)}")
    print(f"  edges    : {len(edges)}")
    print(f"  connected: {fs_connected(args.n, args.bound)}")
    if degrees:
        print(f"  degrees  : min {degrees[0]}, median "
              f"{degrees[len(degrees) // 2]}, max {degrees[-1]}")
    if args.homology:
        print(f"  h1 rank  : {fs_h1_rank(args.n, args.bound)}")
    if args.dot:
        from torelli import fs_dot
        with open(args.dot, "w") as handle:
            handle.write(fs_dot(args.n, args.bound))
        print(f"  dot file : {args.dot}")


if __name__ == "__main__":
    main()
