"""Recovering an irrational slope from comparisons alone.

Z^2 ordered by the sign of (m, n).(1, sqrt 2) is Archimedean, so measuring
g = (0, 1) in units of f = (1, 0) converges to sqrt 2.
Run: python3 gallery/holder_embedding.py
"""

from __future__ import annotations

from ordalib.archimedean import OrderVector, holder_phi, vector_compare


def main():
    cmp = vector_compare(OrderVector.parse("1,sqrt2"))
    for K in (4, 8, 12, 16, 20):
        phi = holder_phi(cmp, (1, 0), (0, 1), K)
        print(f"K = {K:2d}  phi = {phi.numerator}/{phi.denominator} = {float(phi):.8f}")
    print(f"sqrt 2      = {2 ** 0.5:.8f}")


if __name__ == "__main__":
    main()
