"""Bi-orderability verdicts for fibred knots from their Alexander polynomials.

A fibred knot group is bi-orderable when every root of the Alexander
polynomial is real and positive, and is not when none is.  Run:
python3 gallery/fibred_knots.py
"""

from __future__ import annotations

from ordalib.braid import alexander_from_braid
from ordalib.knots import braid_of, fibred_table, verdict


def main():
    print(f"{'knot':<10} {'verdict':<16} polynomial")
    for row in fibred_table():
        v = verdict(row)
        print(f"{row.name:<10} {v.value.value:<16} {row.alexander()}")

    print()
    for name in ("3_1", "4_1"):
        b = braid_of(name)
        print(f"{name} as the closure of {b}: {alexander_from_braid(b)}")


if __name__ == "__main__":
    main()
