"""Three ways to prove a group is not left-orderable, each with a replayable certificate.

Run: python3 gallery/nonlo_certificates.py
"""

from __future__ import annotations

from ordalib import decide as D
from ordalib.presentation import lookup
from ordalib.words import parse


def main():
    cryst = lookup("crystallographic")
    a, b = (parse(t, cryst.alphabet) for t in ("a", "b"))

    # 1. no proper k-partition of the ball exists
    v = D.nonlo_by_partitions(cryst.backend(), None, 2)
    print(f"crystallographic, k = 2: {v.outcome.value} ({v.ball_size} elements in the ball)")

    # 2. every sign choice on {a, b} multiplies out to the identity
    res = D.semigroup_sign_test(cryst, [a, b], 8)
    print(f"sign test on {{a, b}}: {res.outcome.value}")
    for w in res.certificate.witnesses:
        print(f"   signs {w.signs}: {w.word([a, b])} = 1")
    print("   replays:", D.load_certificate(res.certificate.dumps()).replay())

    # Weeks needs the hinted rewriting backend for one of its eight cases
    weeks = lookup("weeks")
    X = [parse(t, weeks.alphabet) for t in weeks.expected["sign_words"]]
    res = D.semigroup_sign_test(weeks, X, 10)
    print(f"weeks on {[str(x) for x in X]}: {res.outcome.value}, {len(res.certificate.witnesses)} cases")

    # 3. a complete presentation blocks every sign vector on the generators
    for n in (2, 3):
        p = lookup("sigma_n_41", n=n)
        print(f"{p.name}: complete = {D.is_complete(p).complete}")
    search = D.find_blockers(cryst)
    print(f"crystallographic complete after generation {search.generation}: {search.complete}")


if __name__ == "__main__":
    main()
