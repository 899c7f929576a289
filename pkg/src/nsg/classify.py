"""Pseudo-Frobenius numbers, special gaps, and the irreducibility trichotomy.

Irreducibility is decided twice on every call: once from the genus/Frobenius
count and once from the divisibility order on the Apery set.  The two
criteria are provably equivalent, so a disagreement means the representation
is corrupted; we treat it as an internal bug rather than a soft failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import core
from .core import N, NumericalSemigroup
from .errors import FullSemigroup, InternalAssertion, NotClosed, NotSpecialGap

SYMMETRIC = "symmetric"
PSEUDOSYMMETRIC = "pseudosymmetric"
REDUCIBLE = "reducible"


@dataclass(frozen=True)
class IrreducibilityReport:
    kind: str
    frobenius: int
    genus: int
    # pseudosymmetric: the index j with 2 a_j = max(Ap) + m.
    # reducible: a pair of strictly larger oversemigroups intersecting to S.
    witness: object = None


@lru_cache(maxsize=None)
def pseudo_frobenius(s: NumericalSemigroup) -> frozenset[int]:
    """Gaps maximal under the divisibility order of s.

    Computed as (maximal Apery elements) - m; the cardinality is the type
    t(s) and never exceeds m - 1.
    """
    if s.m == 1:
        raise FullSemigroup("the full semigroup has no pseudo-Frobenius numbers")
    ap = s.apery
    out = []
    for i, a in enumerate(ap):
        if all(j == i or not s.contains(b - a) for j, b in enumerate(ap)):
            out.append(a - s.m)
    return frozenset(out)


@lru_cache(maxsize=None)
def special_gaps(s: NumericalSemigroup) -> frozenset[int]:
    """Gaps x whose adjunction S u {x} is again additively closed.

    Equivalently the pseudo-Frobenius numbers x with 2x in S.  Both criteria
    are computed and compared on every call.
    """
    if s.m == 1:
        raise FullSemigroup("the full semigroup has no special gaps")
    by_pf = frozenset(x for x in pseudo_frobenius(s) if s.contains(2 * x))
    by_closure = set()
    for x in s.gaps:
        try:
            core.from_gaps(s.gap_set - {x})
        except NotClosed:
            continue
        by_closure.add(x)
    if by_pf != frozenset(by_closure):
        raise InternalAssertion(
            f"special-gap criteria disagree on {s}: {sorted(by_pf)} vs {sorted(by_closure)}")
    return by_pf


def add_special_gap(s: NumericalSemigroup, x: int) -> NumericalSemigroup:
    """The semigroup S u {x}, defined exactly when x is a special gap."""
    if s.m == 1 or x not in special_gaps(s):
        raise NotSpecialGap(f"{x} is not a special gap of {s}")
    return core.from_gaps(s.gap_set - {x})


@lru_cache(maxsize=None)
def classify(s: NumericalSemigroup) -> IrreducibilityReport:
    """Symmetric / pseudosymmetric / reducible, with a witness.

    The full semigroup is classified symmetric by convention (F = -1, genus 0)
    so that every pipeline downstream is total.
    """
    if s.m == 1:
        return IrreducibilityReport(SYMMETRIC, -1, 0)
    f, g = s.frobenius, s.genus

    if f % 2 == 1 and g == (f + 1) // 2:
        by_genus = SYMMETRIC
    elif f % 2 == 0 and g == f // 2 + 1:
        by_genus = PSEUDOSYMMETRIC
    else:
        by_genus = REDUCIBLE

    # Second, independent criterion: position of the Apery maximum in the
    # divisibility order.
    ap = s.apery
    a_max = max(ap)
    below = [s.contains(a_max - a) for a in ap]
    psym_witness = None
    if all(below):
        by_poset = SYMMETRIC
    else:
        odd_out = [i for i, ok in enumerate(below) if not ok]
        j = odd_out[0]
        if len(odd_out) == 1 and 2 * ap[j] == a_max + s.m:
            by_poset = PSEUDOSYMMETRIC
            psym_witness = j + 1
        else:
            by_poset = REDUCIBLE

    if by_genus != by_poset:
        raise InternalAssertion(
            f"irreducibility criteria disagree on {s}: {by_genus} vs {by_poset}")

    if by_genus == PSEUDOSYMMETRIC:
        return IrreducibilityReport(PSEUDOSYMMETRIC, f, g, psym_witness)
    if by_genus == SYMMETRIC:
        return IrreducibilityReport(SYMMETRIC, f, g)

    sg = sorted(special_gaps(s))
    if len(sg) < 2:
        raise InternalAssertion(f"reducible {s} has fewer than two special gaps")
    # Adjoining two distinct special gaps gives strictly larger semigroups
    # whose gap sets still union to gaps(S); first pair in increasing order.
    t1 = add_special_gap(s, sg[0])
    t2 = add_special_gap(s, sg[1])
    if t1.gap_set | t2.gap_set != s.gap_set:
        raise InternalAssertion(f"reducibility witness broken for {s}")
    return IrreducibilityReport(REDUCIBLE, f, g, (t1, t2))


def is_irreducible(s: NumericalSemigroup) -> bool:
    return classify(s).kind != REDUCIBLE
