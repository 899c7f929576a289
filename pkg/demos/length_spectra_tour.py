"""A tour of decomposition length sets.

Every numerical semigroup is a finite intersection of irreducible ones, and
the *irredundant* intersections can have several different lengths.  This
script walks through a handful of semigroups whose length sets illustrate
the range of behaviour: singletons, long runs, and everything in between.

Run:  python3 demos/length_spectra_tour.py
"""

from nsg import (classify, from_generators, is_decomposition, length_spectrum,
                 special_gaps)

TOUR = [
    (5, 6, 7),
    (5, 11, 13, 19),
    (5, 21, 22, 33, 34),
    (6, 13, 14, 15, 16, 17),
    (7, 15, 26, 27, 31, 32),
    (7, 24, 25, 27, 30, 36, 40),
]


def show(gens):
    s = from_generators(gens)
    print(f"S = {s}")
    print(f"  multiplicity {s.m}, Frobenius {s.frobenius}, genus {s.genus}")
    print(f"  classification: {classify(s).kind}")
    print(f"  special gaps: {sorted(special_gaps(s))}")
    spec = length_spectrum(s)
    print(f"  decomposition lengths: {spec.lengths}"
          f"{'  (an interval)' if spec.is_interval() else '  (NOT an interval!)'}")
    for k in spec.lengths:
        d = spec.witnesses[k]
        verdict = is_decomposition(s, d.components).verdict
        comps = "  n  ".join(repr(c) for c in d.components)
        print(f"    length {k} [{verdict}]: {comps}")
    print()


if __name__ == "__main__":
    for gens in TOUR:
        show(gens)
    print("The maximum length is always at most the number of special gaps,")
    print("and in every example above the lengths form an integer interval.")
