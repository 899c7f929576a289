"""Oversemigroups, irreducible components, and decomposition-length spectra.

Ground truth for "is this a decomposition" is always the direct intersection
(gap-set union).  The cover criteria -- coordinates where a component agrees
with S, and special gaps a component misses -- are computed alongside and
compared, never trusted alone.

Enumeration kernels work on gap *bitmasks* (bit x set iff x is a gap); at
desk scale these fit comfortably in machine words and make closure checks a
handful of shifts.  All enumerations are metered by a node budget so runaway
searches fail loudly and reproducibly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import core
from .classify import is_irreducible, special_gaps
from .core import N, NumericalSemigroup
from .errors import BudgetExceeded, InternalAssertion, NotOversemigroup

DEFAULT_BUDGET = 5_000_000

#: genus above which irreducible oversemigroups are found per Frobenius
#: number instead of by full oversemigroup recursion.
_RECURSION_GENUS_LIMIT = 20


class Budget:
    """Node counter; enumeration loops tick it and it raises when exhausted."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit)


def _budget(b) -> Budget:
    if isinstance(b, Budget):
        return b
    return Budget(DEFAULT_BUDGET if b is None else int(b))


# ---------------------------------------------------------------------------
# bitmask kernels


def _mask_of(xs) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _complement_closed(gap_mask: int, top: int) -> bool:
    """True iff no two non-gaps in [0, top] sum to a gap."""
    full = (1 << (top + 1)) - 1
    elems = ~gap_mask & full & ~1  # nonzero elements only
    e = elems
    while e:
        low = e & -e
        x = low.bit_length() - 1
        if x + x > top:
            break
        if (elems << x) & gap_mask:
            return False
        e ^= low
    return True


@lru_cache(maxsize=None)
def _irreducible_gapmasks_with_frobenius(f: int) -> tuple[int, ...]:
    """Gap masks of every irreducible semigroup with Frobenius exactly f.

    Seeded at the gap set {1..floor(f/2)} u {f} and closed under the swap
    move: remove a minimal generator g with f/2 < g < f and insert f - g.
    The move preserves Frobenius number and genus, so closure of the
    complement is the only thing to re-check; genus floor(f/2)+1 with
    Frobenius f is exactly irreducibility.
    """
    if f < 1:
        raise ValueError("Frobenius number must be positive")
    full = (1 << (f + 1)) - 1
    seed = _mask_of(range(1, f // 2 + 1)) | (1 << f)
    seen = {seed}
    stack = [seed]
    while stack:
        gm = stack.pop()
        elems = ~gm & full & ~1
        # sums of two nonzero elements, trimmed to [0, f]
        sums = 0
        e = elems
        while e:
            low = e & -e
            x = low.bit_length() - 1
            if 2 * x > f:
                break
            sums |= elems << x
            e ^= low
        min_gens = elems & ~sums & full
        for g in _bits(min_gens):
            if 2 * g <= f or g >= f:
                continue
            cand = (gm & ~(1 << (f - g))) | (1 << g)
            if cand in seen:
                continue
            if _complement_closed(cand, f):
                seen.add(cand)
                stack.append(cand)
    return tuple(sorted(seen))


def _ns_from_gapmask(gm: int) -> NumericalSemigroup:
    return core._from_gap_set(frozenset(_bits(gm)))


def irreducibles_with_frobenius(f: int, budget=None) -> list[NumericalSemigroup]:
    """All irreducible numerical semigroups whose largest gap is exactly f."""
    b = _budget(budget)
    out = []
    for gm in _irreducible_gapmasks_with_frobenius(f):
        b.tick()
        out.append(_ns_from_gapmask(gm))
    out.sort(key=NumericalSemigroup.sort_key)
    return out


# ---------------------------------------------------------------------------
# oversemigroups and cover atoms


def oversemigroups(s: NumericalSemigroup, budget=None) -> list[NumericalSemigroup]:
    """Every semigroup containing s, including s itself and the full semigroup.

    Recursion: adjoin one special gap at a time; every oversemigroup is
    reachable this way because for S strictly inside T, max(T \\ S) is a
    special gap of S lying in T.
    """
    b = _budget(budget)
    seen = {s.gap_set: s}
    stack = [s]
    while stack:
        cur = stack.pop()
        b.tick()
        if cur.m == 1:
            continue
        for x in special_gaps(cur):
            g = cur.gap_set - {x}
            if g not in seen:
                bigger = core._from_gap_set(g)
                seen[g] = bigger
                stack.append(bigger)
    return sorted(seen.values(), key=NumericalSemigroup.sort_key)


@dataclass(frozen=True)
class CoverAtom:
    """An irreducible oversemigroup T of S with the two cover views of it.

    miss: special gaps of S absent from T (nonempty, else T is unusable in
    any irredundant decomposition).  mset: Apery coordinates of S where T
    agrees, with respect to m(S).
    """

    T: NumericalSemigroup
    miss: frozenset[int]
    mset: frozenset[int]


def m_set(s: NumericalSemigroup, t: NumericalSemigroup) -> frozenset[int]:
    """Coordinates i in 1..m-1 with identical Apery minima in s and t (mod m(s))."""
    if not s.is_subset(t):
        raise NotOversemigroup(f"{t} does not contain {s}")
    if not t.contains(s.m):
        raise NotOversemigroup(f"{s.m} is not an element of {t}")
    bs = t.apery_set(s.m).elems
    return frozenset(i for i in range(1, s.m) if bs[i] == s.apery[i - 1])


def miss_set(s: NumericalSemigroup, t: NumericalSemigroup) -> frozenset[int]:
    """Special gaps of s that are gaps of t."""
    if not s.is_subset(t):
        raise NotOversemigroup(f"{t} does not contain {s}")
    return frozenset(x for x in special_gaps(s) if not t.contains(x))


def irreducible_oversemigroups(s: NumericalSemigroup, budget=None) -> list[CoverAtom]:
    """All usable cover atoms: irreducible T containing s with nonempty miss set.

    Two interchangeable strategies: full oversemigroup recursion at small
    genus, and per-Frobenius irreducible enumeration filtered by containment
    otherwise (the recursion is hopeless for ordinary semigroups of large
    multiplicity, while per-gap enumeration stays cheap).
    """
    b = _budget(budget)
    if s.m == 1:
        return []
    sg = special_gaps(s)
    candidates: list[NumericalSemigroup] = []
    if s.genus <= _RECURSION_GENUS_LIMIT:
        for t in oversemigroups(s, b):
            if t.m != 1 and is_irreducible(t):
                candidates.append(t)
    else:
        smask = s.gap_mask
        for f in s.gaps:
            for gm in _irreducible_gapmasks_with_frobenius(f):
                b.tick()
                if gm & ~smask == 0:  # gaps(T) within gaps(S), i.e. T contains S
                    candidates.append(_ns_from_gapmask(gm))
    atoms = []
    for t in candidates:
        miss = frozenset(x for x in sg if not t.contains(x))
        if not miss:
            continue
        atoms.append(CoverAtom(t, miss, m_set(s, t)))
    atoms.sort(key=lambda a: a.T.sort_key())
    return atoms


# ---------------------------------------------------------------------------
# decomposition checking (the oracle)


@dataclass(frozen=True)
class Decomposition:
    components: tuple[NumericalSemigroup, ...]

    @property
    def length(self) -> int:
        return len(self.components)


VALID_IRREDUNDANT = "valid_irredundant"
VALID_REDUNDANT = "valid_redundant"
INVALID = "invalid"


@dataclass(frozen=True)
class DecompositionCheck:
    verdict: str
    reason: str | None
    intersection: NumericalSemigroup
    #: None when the cover criteria do not apply (components not all
    #: oversemigroups, or S is the full semigroup); otherwise whether the
    #: miss-cover criteria agreed with the direct intersection.  A False here
    #: is a reportable discrepancy, not silently resolved.
    criteria_agree: bool | None


def is_decomposition(s: NumericalSemigroup, components) -> DecompositionCheck:
    """Verdict on S = T_1 n ... n T_k, by direct intersection.

    Irredundancy is checked by recomputing the intersection with each
    component dropped.  The special-gap cover criterion is evaluated as a
    cross-check and any disagreement is surfaced in `criteria_agree`.
    """
    comps = tuple(components)
    if not comps:
        return DecompositionCheck(INVALID, "no components", N, None)
    for c in comps:
        if not is_irreducible(c):
            return DecompositionCheck(INVALID, f"component {c} is not irreducible",
                                      core.intersect_all(comps), None)
    inter = core.intersect_all(comps)
    valid = inter == s

    criteria_agree: bool | None = None
    if s.m != 1 and all(s.is_subset(c) for c in comps):
        sg = special_gaps(s)
        cover_ok = all(any(not c.contains(x) for c in comps) for x in sg)
        criteria_agree = (cover_ok == valid)

    if not valid:
        return DecompositionCheck(INVALID, f"intersection is {inter}, not {s}",
                                  inter, criteria_agree)

    # irredundancy by dropping each component; prefix/suffix gap unions keep
    # this linear in the number of components
    k = len(comps)
    masks = [c.gap_mask for c in comps]
    prefix = [0] * (k + 1)
    for i in range(k):
        prefix[i + 1] = prefix[i] | masks[i]
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    target = s.gap_mask
    redundant = [i for i in range(k) if (prefix[i] | suffix[i + 1]) == target]

    if s.m != 1 and criteria_agree is not None:
        # cross-check irredundancy through miss-set privates
        sg = special_gaps(s)
        cover_irr = True
        for i, c in enumerate(comps):
            has_private = any(
                not c.contains(x) and all(o.contains(x) for j, o in enumerate(comps) if j != i)
                for x in sg)
            if not has_private:
                cover_irr = False
                break
        criteria_agree = criteria_agree and (cover_irr == (not redundant))

    if redundant:
        return DecompositionCheck(
            VALID_REDUNDANT, f"components {redundant} are redundant", inter, criteria_agree)
    return DecompositionCheck(VALID_IRREDUNDANT, None, inter, criteria_agree)


# ---------------------------------------------------------------------------
# length spectra via irredundant covers of the special-gap set


@dataclass(frozen=True)
class LengthSpectrum:
    lengths: tuple[int, ...]
    witnesses: dict[int, Decomposition] = field(compare=False)

    def is_interval(self) -> bool:
        lo, hi = self.lengths[0], self.lengths[-1]
        return self.lengths == tuple(range(lo, hi + 1))


def length_spectrum(s: NumericalSemigroup, budget=None) -> LengthSpectrum:
    """Every achievable irredundant decomposition length, with one witness each.

    Search runs over *distinct* miss sets: two components with identical miss
    sets are never jointly irredundant (dropping either leaves the special
    gaps covered), so deduplication loses no lengths.  An irredundant cover
    is one where every member keeps a private special gap.
    """
    b = _budget(budget)
    if s.m == 1 or is_irreducible(s):
        return LengthSpectrum((1,), {1: Decomposition((s,))})

    atoms = irreducible_oversemigroups(s, b)
    sg = sorted(special_gaps(s))
    pos = {x: i for i, x in enumerate(sg)}
    full = (1 << len(sg)) - 1

    rep: dict[int, CoverAtom] = {}
    for a in atoms:
        key = 0
        for x in a.miss:
            key |= 1 << pos[x]
        if key not in rep or a.T.sort_key() < rep[key].T.sort_key():
            rep[key] = a
    # canonical order: by smallest missed gap, then lexicographic on the set
    def canon(key):
        xs = tuple(sorted(sg[i] for i in _bits(key)))
        return (xs[0], xs)
    sets = sorted(rep, key=canon)

    nsets = len(sets)
    suffix_union = [0] * (nsets + 1)
    for i in range(nsets - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | sets[i]

    found: dict[int, tuple[int, ...]] = {}

    def rec(start, chosen, privates, covered):
        b.tick()
        if covered == full:
            k = len(chosen)
            if k not in found:
                found[k] = tuple(chosen)
            return
        if (covered | suffix_union[start]) != full:
            return
        for j in range(start, nsets):
            sj = sets[j]
            if sj & ~covered == 0:
                continue  # nothing new: sj could never gain a private
            new_priv = [p & ~sj for p in privates]
            if any(p == 0 for p in new_priv):
                continue  # an earlier choice just lost its last private gap
            new_priv.append(sj & ~covered)
            chosen.append(j)
            rec(j + 1, chosen, new_priv, covered | sj)
            chosen.pop()

    rec(0, [], [], 0)

    if not found:
        raise InternalAssertion(f"no irredundant cover found for reducible {s}")
    lengths = tuple(sorted(found))
    if lengths[-1] > len(sg):
        raise InternalAssertion("spectrum exceeds special-gap count")

    witnesses = {}
    for k in lengths:
        comps = tuple(rep[sets[j]].T for j in found[k])
        check = is_decomposition(s, comps)
        if check.verdict != VALID_IRREDUNDANT:
            raise InternalAssertion(
                f"witness of length {k} for {s} failed verification: {check.verdict}")
        witnesses[k] = Decomposition(comps)
    return LengthSpectrum(lengths, witnesses)


# ---------------------------------------------------------------------------
# exhaustive sweeps in Kunz coordinates


def kunz_semigroups(m: int, f_max: int, first: int | None = None):
    """All semigroups with multiplicity m and Frobenius number at most f_max.

    Coordinates a_i run over {m+i, 2m+i, ...} bounded by f_max + m, with the
    Apery inequalities checked incrementally as each coordinate is placed.
    `first` pins a_1, which is how sweeps shard across workers.
    """
    if m < 2:
        raise ValueError("multiplicity must be at least 2")
    hi = f_max + m
    a = [0] * m

    def place(i):
        if i == m:
            yield NumericalSemigroup(m, tuple(a[1:]))
            return
        choices = range(m + i, hi + 1, m) if not (i == 1 and first is not None) else [first]
        for v in choices:
            a[i] = v
            ok = True
            for j in range(1, i + 1):
                k = (i + j) % m
                if 1 <= k <= i and a[i] + a[j] < a[k]:
                    ok = False
                    break
            if ok:
                for j in range(1, i):
                    l = (i - j) % m
                    if 1 <= l < i and a[j] + a[l] < a[i]:
                        ok = False
                        break
            if ok:
                yield from place(i + 1)
        a[i] = 0

    yield from place(1)


@dataclass
class IntervalReport:
    m: int
    f_max: int
    total: int
    census: dict[tuple[int, ...], int]
    counterexamples: list[tuple[NumericalSemigroup, tuple[int, ...]]]


def _interval_shard(args):
    m, f_max, first, limit = args
    b = Budget(limit)
    census: Counter = Counter()
    bad = []
    total = 0
    for s in kunz_semigroups(m, f_max, first=first):
        total += 1
        spec = length_spectrum(s, b)
        census[spec.lengths] += 1
        if not spec.is_interval():
            bad.append((s.apery, spec.lengths))
    return total, census, sorted(bad), b.used


def check_interval(m: int, f_max: int, budget=None, threads: int = 1) -> IntervalReport:
    """Sweep every semigroup of multiplicity m with F <= f_max; report any
    non-interval length spectrum and the census of spectra observed."""
    limit = budget.limit if isinstance(budget, Budget) else (
        DEFAULT_BUDGET if budget is None else int(budget))
    firsts = list(range(m + 1, f_max + m + 1, m))
    jobs = [(m, f_max, a1, limit) for a1 in firsts]
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(_interval_shard, jobs))
    else:
        results = [_interval_shard(j) for j in jobs]
    total = 0
    census: Counter = Counter()
    bad = []
    for t, c, bd, used in results:
        total += t
        census.update(c)
        bad.extend((NumericalSemigroup(m, ap), ls) for ap, ls in bd)
        if isinstance(budget, Budget):
            budget.used += used  # accounting only; each shard enforced its own limit
    bad.sort(key=lambda p: p[0].sort_key())
    return IntervalReport(m, f_max, total, dict(sorted(census.items())), bad)


@dataclass
class MsBoundReport:
    m: int
    f_max: int
    checked: int
    max_mset: int
    #: (apery of S, apery-or-gaps of T, #mset) for any violation; expected empty
    violations: list[tuple]


def _msbound_shard(args):
    m, f_max, first, limit = args
    b = Budget(limit)
    checked = 0
    max_mset = 0
    viol = []
    for s in kunz_semigroups(m, f_max, first=first):
        if len(special_gaps(s)) != m - 1:
            continue
        checked += 1
        for atom in irreducible_oversemigroups(s, b):
            sz = len(atom.mset)
            max_mset = max(max_mset, sz)
            if 2 * sz > m:
                viol.append((s.apery, atom.T.apery if atom.T.m == m else tuple(atom.T.gaps), sz))
    return checked, max_mset, viol, b.used


def check_msbound(m: int, f_max: int, budget=None, threads: int = 1) -> MsBoundReport:
    """For every S with multiplicity m, F <= f_max and a full house of special
    gaps (#SG = m-1), assert #mset(T) <= m/2 over all irreducible T >= S."""
    limit = budget.limit if isinstance(budget, Budget) else (
        DEFAULT_BUDGET if budget is None else int(budget))
    firsts = list(range(m + 1, f_max + m + 1, m))
    jobs = [(m, f_max, a1, limit) for a1 in firsts]
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(_msbound_shard, jobs))
    else:
        results = [_msbound_shard(j) for j in jobs]
    checked = 0
    max_mset = 0
    violations = []
    for c, mm, vs, used in results:
        checked += c
        max_mset = max(max_mset, mm)
        violations.extend(vs)
        if isinstance(budget, Budget):
            budget.used += used  # accounting only; each shard enforced its own limit
    return MsBoundReport(m, f_max, checked, max_mset, sorted(violations))


# ---------------------------------------------------------------------------
# misc enumeration utilities


def semigroups_up_to_genus(gmax: int):
    """Yield every numerical semigroup of genus <= gmax, via the tree whose
    children remove one minimal generator exceeding the Frobenius number."""
    stack = [N]
    while stack:
        s = stack.pop()
        yield s
        if s.genus == gmax:
            continue
        f = s.frobenius
        for g in s.generators:
            if g > f:
                stack.append(core._from_gap_set(s.gap_set | {g}))


def minimum_cover(universe, subsets, budget=None):
    """Exact minimum set cover; returns (size, indices into `subsets`).

    Dominated sets (subsets of another) are discarded up front; the search
    branches on an uncovered element contained in the fewest sets, with
    iterative deepening on the cover size.
    """
    b = _budget(budget)
    uni = frozenset(universe)
    full = _mask_of(range(len(uni)))
    pos = {x: i for i, x in enumerate(sorted(uni))}
    masks = []
    for idx, sub in enumerate(subsets):
        mk = 0
        for x in sub:
            if x in pos:
                mk |= 1 << pos[x]
        masks.append((mk, idx))
    # keep only maximal masks
    masks.sort(key=lambda p: bin(p[0]).count("1"), reverse=True)
    kept: list[tuple[int, int]] = []
    for mk, idx in masks:
        if mk and not any(mk & ~km == 0 for km, _ in kept):
            kept.append((mk, idx))
    if not kept:
        raise ValueError("empty subsets cannot cover anything")

    by_elem = [[i for i, (mk, _) in enumerate(kept) if mk >> e & 1]
               for e in range(len(uni))]
    if any(not cand for cand in by_elem):
        raise ValueError("universe element not covered by any subset")

    def dfs(uncovered, depth_left, chosen):
        b.tick()
        if uncovered == 0:
            return list(chosen)
        if depth_left == 0:
            return None
        e = min(_bits(uncovered), key=lambda x: len(by_elem[x]))
        for i in by_elem[e]:
            chosen.append(i)
            got = dfs(uncovered & ~kept[i][0], depth_left - 1, chosen)
            if got is not None:
                return got
            chosen.pop()
        return None

    for k in range(1, len(uni) + 1):
        got = dfs(full, k, [])
        if got is not None:
            return k, [kept[i][1] for i in got]
    raise InternalAssertion("cover search exhausted without a cover")
