"""Handle reduction and the Dehornoy order on braids.

Run: python3 gallery/dehornoy_braids.py
"""

from __future__ import annotations

from ordalib.braid import (
    BraidWord,
    compare_dehornoy,
    dehornoy_floor,
    genus_bound,
    half_twist,
    handle_reduce,
    provably_prime,
    sigma_sign,
)


def main():
    b = BraidWord.parse("s1^2 s2^-1 s1^-1", 3)
    r = handle_reduce(b)
    print(f"{b} reduces to {r}; sign {sigma_sign(b)}")

    d = half_twist(3)
    print(f"Delta_3 = {d}")
    for text in ("s1", "s2", "s1 s2 s1 s2 s1 s2 s1"):
        x = BraidWord.parse(text, 3)
        print(f"  floor({x}) = {dehornoy_floor(x)}")

    # anything 1-positive times Delta^4 sits above Delta^4, which certifies primeness
    beta = BraidWord.parse("s1 s2^-1", 3)
    print(f"{beta} Delta^4 provably prime: {provably_prime(beta * d ** 4)}")

    tref = BraidWord.parse("s1^3", 2)
    print(f"genus lower bound for the closure of {tref}: {genus_bound(tref)}")
    print(f"s2 < s1 in B_3: {compare_dehornoy(BraidWord.parse('s2', 3), BraidWord.parse('s1', 3)) < 0}")


if __name__ == "__main__":
    main()
