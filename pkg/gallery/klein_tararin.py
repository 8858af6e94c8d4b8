"""The Klein bottle group has exactly four left orderings, all Conradian.

Run: python3 gallery/klein_tararin.py
"""

from __future__ import annotations

from ordalib import decide as D
from ordalib.oracle import ball
from ordalib.presentation import lookup


def main():
    kb = lookup("kleinbottle").backend()
    z2 = lookup("z2").backend()
    print(" k   Klein  Conradian   Z^2")
    for k in range(1, 5):
        bk = ball(kb, None, k)
        plain = D.count_k_partitions(bk)
        conr = len(D.enumerate_conradian_k_partitions(bk))
        print(f"{k:2d}   {plain:5d}  {conr:9d}   {D.count_k_partitions(ball(z2, None, k)):3d}")

    # the explicit cones, one for each sign choice on x and y
    b3 = ball(kb, None, 3)
    for signs, cone in zip(D.KLEIN_SIGNS, D.klein_cone_partitions(b3)):
        print(f"cone {signs}: {', '.join(str(w) for w in cone.words()[:6])}, ...")
    t = D.tararin_counts(kb, 3)
    print(f"extendable 3-partitions: {t.extendable}")


if __name__ == "__main__":
    main()
