"""Ordering a free group through its Magnus expansion.

Run: python3 gallery/magnus_order.py
"""

from __future__ import annotations

from ordalib.magnus import compare, expand, leading_term, sort_words
from ordalib.words import Alphabet, all_reduced_words, parse

X = Alphabet.indexed("x", [1, 2])


def main():
    w = parse("x_1 x_2^2 x_1^-1", X)
    print(f"mu({w}) up to degree 2:")
    print("   ", expand(w, 2))

    # conjugating x_2^2 by x_1 changes the series only in degree 2, and the
    # first differing coefficient decides the order
    print(f"x_2^2 vs {w}: {compare(parse('x_2^2', X), w).value}")

    mono, c = leading_term(parse("x_1 x_2 x_1^-1 x_2^-1", X))
    print(f"the commutator [x_1, x_2] has leading term {c}*{mono}")

    short = [u for u in all_reduced_words(X, 2) if not u.is_identity()]
    print("nontrivial words of length <= 2, smallest first:")
    print("   ", ", ".join(str(u) for u in sort_words(short)))


if __name__ == "__main__":
    main()
