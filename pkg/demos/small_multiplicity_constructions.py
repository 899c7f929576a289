"""Why length sets collapse at small multiplicity.

At multiplicity 4 every reducible semigroup has a length-2 decomposition: an
explicit symmetric oversemigroup covers two of the three Apery coordinates
at once.  At multiplicity 6 a pair of controlled irreducible oversemigroups
(T agrees at coordinates 2 and 5, T' at 1 and 4) lets us shorten any
length-5 decomposition to length 4, and any length-4 one to length 3 --
which is why no multiplicity-6 length set contains 5 without 4, or 4
without 3.

Run:  python3 demos/small_multiplicity_constructions.py
"""

from nsg import (from_generators, kunz_semigroups, length_spectrum, m4_cover,
                 m6_covers, m6_shorten, m_set)


def multiplicity_4():
    s = from_generators([4, 9, 11, 14])
    t = m4_cover(s)
    print(f"S = {s!r}  (multiplicity 4)")
    print(f"symmetric cover T = {t!r}, agreement coordinates {sorted(m_set(s, t))}")
    print(f"length set of S: {length_spectrum(s).lengths}")
    print()


def multiplicity_6():
    s = from_generators([6, 13, 14, 15, 16, 17])
    spec = length_spectrum(s)
    print(f"S = {s!r}  (multiplicity 6), length set {spec.lengths}")
    pair = m6_covers(s)
    print(f"T  = {pair.T!r}   agrees at {sorted(m_set(s, pair.T))}")
    print(f"T' = {pair.T_prime!r}   agrees at {sorted(m_set(s, pair.T_prime))}")
    five = spec.witnesses[5]
    four = m6_shorten(s, five)
    three = m6_shorten(s, four)
    print(f"shortening a length-5 witness: 5 -> {four.length} -> {three.length}")
    print()


def census():
    print("census of multiplicity-6 length sets (Frobenius <= 20):")
    from collections import Counter
    tally = Counter()
    for s in kunz_semigroups(6, 20):
        tally[length_spectrum(s).lengths] += 1
    for lengths, count in sorted(tally.items()):
        print(f"  {str(lengths):20} {count:4} semigroups")
    print("note: no set contains 5 without 4, and none contains 4 without 3.")


if __name__ == "__main__":
    multiplicity_4()
    multiplicity_6()
    census()
