#!/usr/bin/env python3
"""Walk through a boundary push end to end.

Given a configuration, a boundary address (r, s), and a loop gamma in
the rank-n free group, the script prints the automorphism
push((r,s), gamma), checks membership in the Torelli subgroup when
gamma is a product of commutators, factors the push into boundary-drag
generators, and confirms the factorization realizes the same map.
"""

import argparse
import json

from torelli import (
    capped_rank,
    drag_word_text,
    in_commutator_subgroup,
    membership_IOP,
    parse_word,
    partition_config,
    push_boundary,
    push_factorization,
    realize_word,
    same_map,
    word_text,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--b", type=int, default=1)
    parser.add_argument("--partition", default="[[1]]",
                        help="JSON list of blocks, e.g. [[1,2],[3]]")
    parser.add_argument("--address", default="1,1",
                        help="boundary address r,s")
    parser.add_argument("--word", default="x1 x2 x1^-1 x2^-1",
                        help="loop in the rank-n free group (x-syntax)")
    args = parser.parse_args()

    blocks = [tuple(block) for block in json.loads(args.partition)]
    config = partition_config(args.n, args.b, blocks)
    r_text, s_text = args.address.split(",")
    address = (int(r_text), int(s_text))
    gamma = parse_word(args.word, config.n)
    m = capped_rank(config)

    print(f"config: n={config.n} b={config.b} partition={blocks} m={m}")
    print(f"push boundary {address} around {word_text(gamma)}")

    fmap = push_boundary(config, address, gamma)
    for index, image in enumerate(fmap.images, start=1):
        print(f"  y{index} -> {word_text(image)}")

    print(f"membership in IO^n_b(P): {membership_IOP(config, fmap)}")
    if not in_commutator_subgroup(gamma):
        print("loop is not in the commutator subgroup, no drag factorization")
        return

    drags = push_factorization(config, address, gamma)
    print(f"drag factorization ({len(drags)} letters):")
    print(f"  {drag_word_text(drags)}")
    realized = realize_word(config, drags)
    print(f"factorization realizes the push: {same_map(realized, fmap)}")


if __name__ == "__main__":
    main()
