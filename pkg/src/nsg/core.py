"""Numerical semigroups in Kunz coordinates.

The canonical value is the pair (m, apery): the multiplicity together with
the Apery vector a_1..a_{m-1} with respect to m, where a_i is the smallest
element congruent to i mod m.  Gap sets and generating sets are derived
views.  Membership, inclusion and intersection all reduce to coordinatewise
arithmetic on the Apery vector, which is why this representation is canonical
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import LimitExceeded, NotClosed, NotCofinite, NotElement

#: Hard cap on any integer a construction may need.  Desk-scale inputs stay
#: far below this; anything larger is almost certainly a bug in the caller.
VALUE_CAP = 1 << 40


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, canonically (multiplicity, Apery vector).

    m = 1 with an empty Apery vector encodes the full set of non-negative
    integers; it is a legal value so that degenerate intersections and
    oversemigroup chains never crash.
    """

    m: int
    apery: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("multiplicity must be positive")
        if len(self.apery) != self.m - 1:
            raise ValueError("Apery vector must have length m - 1")
        for i, a in enumerate(self.apery, start=1):
            if a % self.m != i:
                raise ValueError(f"apery[{i}] = {a} is not congruent to {i} mod {self.m}")
            if a < self.m + i:
                raise ValueError(f"apery[{i}] = {a} makes {self.m} not the multiplicity")
            if a > VALUE_CAP:
                raise LimitExceeded(f"Apery value {a} above cap 2**40")

    def validate(self):
        """Full Apery-vector validity check: a_i + a_j >= a_k whenever i + j = k mod m.

        The constructor only runs O(m) shape checks; call this to verify the
        O(m^2) inequalities that characterize genuine Apery sets.
        """
        a = (0,) + self.apery
        m = self.m
        for i in range(1, m):
            for j in range(i, m):
                k = (i + j) % m
                if k and a[i] + a[j] < a[k]:
                    raise ValueError(
                        f"invalid Apery vector: a_{i} + a_{j} < a_{k} "
                        f"({a[i]} + {a[j]} < {a[k]})")
        return self

    # ----- basic invariants -------------------------------------------------

    def multiplicity(self) -> int:
        return self.m

    @cached_property
    def frobenius(self) -> int:
        """Largest gap; -1 for the full semigroup, by convention."""
        if self.m == 1:
            return -1
        return max(self.apery) - self.m

    @cached_property
    def genus(self) -> int:
        return sum((a - i) // self.m for i, a in enumerate(self.apery, start=1))

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        """Sorted tuple of all gaps."""
        return tuple(x for x in range(1, self.frobenius + 1) if not self.contains(x))

    @cached_property
    def gap_set(self) -> frozenset[int]:
        return frozenset(self.gaps)

    @cached_property
    def gap_mask(self) -> int:
        """Gap set as a bitmask (bit x set iff x is a gap)."""
        mask = 0
        for x in self.gaps:
            mask |= 1 << x
        return mask

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """The minimal generating set, sorted.

        These are m together with the nonzero Apery elements not expressible
        as a sum of two nonzero elements of S (such a sum can always be taken
        with both addends in the Apery set).
        """
        if self.m == 1:
            return (1,)
        a = (0,) + self.apery
        reducible = set()
        for j in range(1, self.m):
            for k in range(j, self.m):
                i = (j + k) % self.m
                if i and a[j] + a[k] == a[i]:
                    reducible.add(i)
        gens = [self.m] + [a[i] for i in range(1, self.m) if i not in reducible]
        return tuple(sorted(gens))

    # ----- membership and order --------------------------------------------

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        r = x % self.m
        if r == 0:
            return True
        return x >= self.apery[r - 1]

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def divides(self, a: int, b: int) -> bool:
        """True iff a <= b in the divisibility order of S, i.e. b - a in S."""
        return self.contains(b - a)

    def is_subset(self, other: "NumericalSemigroup") -> bool:
        """True iff every element of self lies in other."""
        if self.m == other.m:
            return all(b <= a for a, b in zip(self.apery, other.apery))
        return other.gap_set <= self.gap_set

    def intersect(self, other: "NumericalSemigroup") -> "NumericalSemigroup":
        """Intersection; its gap set is the union of the two gap sets."""
        if self.m == other.m:
            merged = tuple(max(a, b) for a, b in zip(self.apery, other.apery))
            return NumericalSemigroup(self.m, merged)
        return _from_gap_set(self.gap_set | other.gap_set)

    # ----- Apery sets with respect to arbitrary elements --------------------

    def apery_set(self, n: int) -> "AperySet":
        if n <= 0 or not self.contains(n):
            raise NotElement(f"{n} is not a nonzero element of the semigroup")
        if n == self.m:
            return AperySet(n, (0,) + self.apery)
        mins: list[int | None] = [None] * n
        mins[0] = 0
        found = 1
        x = 0
        limit = self.frobenius + n + 1
        while found < n and x <= limit:
            x += 1
            if mins[x % n] is None and self.contains(x):
                mins[x % n] = x
                found += 1
        assert found == n, "Apery scan did not terminate; bug"
        return AperySet(n, tuple(mins))  # type: ignore[arg-type]

    def elements_upto(self, bound: int) -> list[int]:
        """All elements in [0, bound]."""
        return [x for x in range(bound + 1) if self.contains(x)]

    def sort_key(self):
        return (self.m, self.apery)

    def __repr__(self):
        gens = ",".join(str(g) for g in self.generators)
        return f"<{gens}>"


@dataclass(frozen=True)
class AperySet:
    """Ap(S; n): the n smallest elements of S, one per residue class mod n."""

    n: int
    elems: tuple[int, ...]  # elems[i] is the least element congruent to i mod n

    def __post_init__(self):
        if len(self.elems) != self.n or self.elems[0] != 0:
            raise ValueError("Apery set must list one minimum per residue, starting at 0")
        for i, w in enumerate(self.elems):
            if w % self.n != i:
                raise ValueError(f"Apery element {w} not congruent to {i} mod {self.n}")

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elems)


#: The full semigroup of non-negative integers.
N = NumericalSemigroup(1, ())


def _from_gap_set(gaps: frozenset[int]) -> NumericalSemigroup:
    """Build a semigroup from a gap set already known to be valid (no closure check)."""
    if not gaps:
        return N
    top = max(gaps)
    m = next(x for x in range(1, top + 2) if x not in gaps)
    if m == 1:
        raise ValueError("1 cannot be an element alongside nonempty gaps")
    apery = []
    for i in range(1, m):
        x = i
        while x in gaps:
            x += m
        apery.append(x)
    return NumericalSemigroup(m, tuple(apery))


def from_gaps(gaps) -> NumericalSemigroup:
    """Semigroup whose gap set is exactly `gaps`.

    Raises NotClosed (with a witness pair) if the complement is not closed
    under addition.
    """
    gap_set = frozenset(gaps)
    if not gap_set:
        return N
    if any(x < 1 for x in gap_set):
        raise ValueError("gaps must be positive integers")
    top = max(gap_set)
    if top > VALUE_CAP:
        raise LimitExceeded(f"gap {top} above cap 2**40")
    complement = [x for x in range(top + 1) if x not in gap_set]
    for ia, x in enumerate(complement):
        if x == 0:
            continue
        for y in complement[ia:]:
            if x + y > top:
                break
            if x + y in gap_set:
                raise NotClosed((x, y))
    return _from_gap_set(gap_set)


def from_generators(gens) -> NumericalSemigroup:
    """Smallest additively closed set containing 0 and the given generators.

    Raises NotCofinite when gcd(gens) > 1.  The closure is computed by a
    boolean sieve whose length doubles until a run of m consecutive members
    appears; past such a run the set is cofinite upward.
    """
    gen_list = sorted({int(g) for g in gens if g != 0})
    if not gen_list or gen_list[0] < 0:
        raise ValueError("generators must be positive integers")
    g = 0
    for x in gen_list:
        g = gcd(g, x)
    if g != 1:
        raise NotCofinite(f"gcd of generators is {g}, complement is infinite")
    m = gen_list[0]
    if m == 1:
        return N
    if gen_list[-1] > VALUE_CAP:
        raise LimitExceeded(f"generator {gen_list[-1]} above cap 2**40")

    bound = 2 * gen_list[-1] + 2
    while True:
        if bound > VALUE_CAP:
            raise LimitExceeded("closure sieve would exceed the 2**40 cap")
        sieve = bytearray(bound)
        sieve[0] = 1
        for gen in gen_list:
            for x in range(gen, bound):
                if sieve[x - gen]:
                    sieve[x] = 1
        run = 0
        conductor = None
        for x in range(bound):
            run = run + 1 if sieve[x] else 0
            if run == m:
                conductor = x - m + 1
                break
        if conductor is not None:
            break
        bound *= 2

    apery = []
    for i in range(1, m):
        x = i
        while x < conductor and not sieve[x]:
            x += m
        apery.append(x)
    return NumericalSemigroup(m, tuple(apery))


def intersect_all(semigroups) -> NumericalSemigroup:
    """Intersection of a nonempty collection of semigroups."""
    sgs = list(semigroups)
    if not sgs:
        raise ValueError("need at least one semigroup")
    union: frozenset[int] = frozenset()
    for s in sgs:
        union |= s.gap_set
    return _from_gap_set(union)
