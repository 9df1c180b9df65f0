"""The main classification machinery: the admissibility predicate for
Schlafli types of tight chiral polyhedra, witness synthesis for every
admissible type, an exhaustive sweep oracle, and the census.

The admissibility conditions and the sweep are deliberately independent
routes: the predicate is closed-form arithmetic, the sweep certifies
groups tuple by tuple through coset enumeration.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from enum import Enum

from .analysis import Verdict, classify_realization
from .coset import Realization, enumerate_cosets, realize
from .errors import BudgetExceeded, NotAdmissible
from .families import FamilySpec, FamilyTag, MixRecipe, build, is_odd_prime
from .perm_group import admits_generator_inversion, mix_regular, mutual_covers
from .perms import order as perm_order
from .presentations import GpParams, Presentation, dual as dual_pres, gp_presentation
from .words import Word
from . import kern

DEFAULT_BUDGET = 600


# ---------------------------------------------------------------------------
# Admissibility.
# ---------------------------------------------------------------------------

def _odd_prime_divisors(n: int):
    out = []
    d = 3
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 2:
        out.append(n)
    return out


def _odd_square_condition(p: int, q: int) -> bool:
    """Some odd prime m divides p with m^2 dividing q."""
    return any(q % (m * m) == 0 for m in _odd_prime_divisors(p))


def _condition(p: int, q: int) -> int | None:
    """Index (1-6) of the first admissibility condition satisfied."""
    if q % 2 == 1 and p % 2 == 0 and (2 * q) % p == 0 and _odd_square_condition(p, q):
        return 1
    if p % 2 == 1 and q % 2 == 0 and (2 * p) % q == 0 and _odd_square_condition(q, p):
        return 2
    if p % 2 == 0 and q % 2 == 0 and _odd_square_condition(p, q):
        return 3
    if p % 2 == 0 and q % 2 == 0 and _odd_square_condition(q, p):
        return 4
    if p % 8 == 0 and q % 32 == 0:
        return 5
    if q % 8 == 0 and p % 32 == 0:
        return 6
    return None


def admissible(p: int, q: int) -> bool:
    """Whether a tight chiral polyhedron of type {p, q} exists."""
    return _condition(p, q) is not None


# ---------------------------------------------------------------------------
# Witness synthesis, following the constructive existence arguments case
# by case.
# ---------------------------------------------------------------------------

Witness = Presentation | MixRecipe


def _v(m: int, n: int) -> int:
    """Largest e with m^e dividing n."""
    e = 0
    while n % m == 0:
        n //= m
        e += 1
    return e


def _dual_witness(w: Witness) -> Witness:
    if isinstance(w, Presentation):
        return dual_pres(w)
    return MixRecipe(tuple(dual_pres(c) for c in w.components))


def _odd_g1(m: int, alpha: int, beta: int) -> Presentation:
    """Tight chiral group of type {2m^(alpha+1), m^(beta+2)} (beta >= alpha-1)."""
    if beta >= alpha:
        if alpha == 0:
            return build(FamilySpec(FamilyTag.ODD_ATOMIC, m=m, beta=beta + 2, k=1))
        return build(FamilySpec(FamilyTag.ODD_CENTRAL_LT, m=m,
                                alpha=alpha + 1, beta=beta + 2, k=1))
    if beta == alpha - 1:
        return build(FamilySpec(FamilyTag.ODD_CENTRAL_EQ, m=m, beta=beta + 2, k=1))
    raise AssertionError("callers guarantee beta >= alpha - 1")


def _witness_odd(p: int, q: int) -> Witness:
    """Witness for type {p, q} = {2rm, s m^2} with m odd prime, m | p,
    m^2 | q, and either q odd (then p | 2q) or both even."""
    m = next(mm for mm in _odd_prime_divisors(p) if q % (mm * mm) == 0)
    r = p // (2 * m)
    s = q // (m * m)
    alpha = _v(m, r)
    rp = r // m ** alpha
    beta = _v(m, s)
    sp = s // m ** beta
    if s % 2 == 1:
        # q odd: r divides s*m, so rp divides sp and the odd regular
        # companion exists.
        g1 = _odd_g1(m, alpha, beta)  # beta + 1 > alpha or beta + 1 == alpha
        if rp == 1 and sp == 1:
            return g1
        g2 = gp_presentation(GpParams(2 * rp, sp, 3, 1, -3, -1))
        return MixRecipe((g1, g2))
    if beta >= alpha - 1:
        g1 = _odd_g1(m, alpha, beta)
        g2 = gp_presentation(GpParams(2 * rp, sp, -1, 1, 1, -1))
        return MixRecipe((g1, g2))
    # beta <= alpha - 2: construct the swapped type and dualize.
    t = m ** (beta + 1) * (sp // 2)
    u = 2 * m ** (alpha - 1) * rp
    inner = _witness_odd(2 * t * m, u * m * m)
    return _dual_witness(inner)


def _witness_pow2(p: int, q: int) -> Witness:
    """Witness for type {p, q} with 8 | p and 32 | q."""
    r = p // 8
    s = q // 32
    alpha = _v(2, r)
    rp = r >> alpha
    beta = _v(2, s)
    sp = s >> beta
    a3, b5 = alpha + 3, beta + 5
    if a3 < b5:
        g1: Witness = build(FamilySpec(FamilyTag.EVEN_CENTRAL, alpha=a3, beta=b5, sign=1))
    elif a3 > b5:
        g1 = dual_pres(build(FamilySpec(FamilyTag.EVEN_CENTRAL, alpha=b5, beta=a3, sign=1)))
    else:
        g1 = build(FamilySpec(FamilyTag.EVEN_CENTRAL_MIX, alpha=a3))
    if rp == 1 and sp == 1:
        return g1
    g2 = gp_presentation(GpParams(2 * rp, 2 * sp, -1, 1, 1, -1))
    comps = g1.components if isinstance(g1, MixRecipe) else (g1,)
    return MixRecipe(comps + (g2,))


def witness_for(p: int, q: int) -> Witness:
    """A concrete construction realizing a tight chiral polyhedron of type
    {p, q}; raises NotAdmissible when none exists."""
    cond = _condition(p, q)
    if cond is None:
        raise NotAdmissible(f"no tight chiral polyhedron of type ({p}, {q})")
    if cond in (1, 3):
        return _witness_odd(p, q)
    if cond in (2, 4):
        return _dual_witness(_witness_odd(q, p))
    if cond == 5:
        return _witness_pow2(p, q)
    return _dual_witness(_witness_pow2(q, p))


def realize_witness(w: Witness) -> Realization:
    """Regular realization of a witness (mixes folded in regular form)."""
    if isinstance(w, Presentation):
        return realize(w)
    comps = [realize(c) for c in w.components]
    g = comps[0]
    for h in comps[1:]:
        g = mix_regular(g, h)
    return g


def witness_verifies(p: int, q: int, w: Witness) -> bool:
    """Tight + chiral + exact type, decided on the regular realization."""
    g = realize_witness(w)
    return (
        g.gen_orders == (p, q)
        and g.order == p * q
        and not admits_generator_inversion(g)
    )


# ---------------------------------------------------------------------------
# Exhaustive sweep oracle.
# ---------------------------------------------------------------------------

class Dedup(str, Enum):
    NONE = "NONE"
    ENANTIOMORPH = "ENANTIOMORPH"
    ENANTIOMORPH_AND_DUAL = "ENANTIOMORPH_AND_DUAL"


@dataclass(frozen=True, slots=True)
class SearchBucket:
    """One group found by the sweep: its canonical parameter tuple, all
    tuples realizing the same group (mutual covers), and the order."""

    params: tuple[int, int, int, int]
    members: tuple[tuple[int, int, int, int], ...]
    order: int

    def as_json(self) -> dict:
        return {
            "params": list(self.params),
            "members": [list(m) for m in self.members],
            "order": self.order,
        }


def certify_full_engine(p: int, q: int, t4) -> bool:
    """Trusted-engine fullness check for one tuple: two subgroup
    enumerations with the generator-cycle test, identical in meaning to
    the fast kernel's certificate."""
    i1, j1, i2, j2 = t4
    pres = gp_presentation(GpParams(p, q, i1, j1, i2, j2))
    cap = 4 * p * q + 64
    t2 = enumerate_cosets(pres, [Word.gen(2)], cap)
    if t2.n != p or perm_order(t2.s1) != p:
        return False
    t1 = enumerate_cosets(pres, [Word.gen(1)], cap)
    return t1.n == q


def find_full_tuples(p: int, q: int) -> list[tuple[int, int, int, int]]:
    """All canonical tuples (i1, j1, i2, j2) whose group has order exactly
    p*q with generator orders exactly (p, q), closed under the
    enantiomorph transform.  Sorted."""
    jp1, jp2 = kern.j_pairs(q)
    ip1, ip2 = kern.i_pairs(p)
    full_packed, und_packed = kern.sweep_chunk(p, q, ip1, ip2, jp1, jp2)
    found = {kern.unpack(p, q, x) for x in full_packed}
    for x in und_packed:
        t4 = kern.unpack(p, q, x)
        if certify_full_engine(p, q, t4):
            found.add(t4)
    closed = set(found)
    for t4 in found:
        closed.add(GpParams(p, q, *t4).enantiomorph().tuple4)
    return sorted(closed)


def exhaustive_search(p: int, q: int, budget: int = DEFAULT_BUDGET,
                      dedup: Dedup = Dedup.NONE) -> list[SearchBucket]:
    """Sweep every parameter tuple of type {p, q} and return the tight
    chiral groups found, bucketed by mutual covers and deduplicated per
    ``dedup``.

    Types with a generator order below 3 can never be chiral (the
    classification conventions make them regular or non-polytopal), so
    their sweep is empty without work.
    """
    if p * q > budget:
        raise BudgetExceeded(p, q, budget)
    if p < 3 or q < 3:
        return []
    chiral: list[tuple[tuple[int, int, int, int], Realization]] = []
    for t4 in find_full_tuples(p, q):
        g = realize(gp_presentation(GpParams(p, q, *t4)))
        if g.order != p * q or g.gen_orders != (p, q):
            raise RuntimeError(
                f"sweep certificate disagrees with the engine on {(p, q, t4)}")
        rep = classify_realization(g, with_atomic=False)
        if rep.verdict is Verdict.CHIRAL:
            chiral.append((t4, g))

    buckets: list[list[tuple[int, int, int, int]]] = []
    reps: list[Realization] = []
    for t4, g in chiral:
        for idx, rg in enumerate(reps):
            if mutual_covers(g, rg):
                buckets[idx].append(t4)
                break
        else:
            buckets.append([t4])
            reps.append(g)
    out = [
        SearchBucket(params=min(b), members=tuple(sorted(b)), order=p * q)
        for b in buckets
    ]
    out.sort(key=lambda b: b.params)
    return _dedup_buckets(p, q, out, dedup)


def _dedup_buckets(p, q, buckets, dedup: Dedup):
    if dedup is Dedup.NONE:
        return buckets
    transforms = [lambda t: GpParams(p, q, *t).enantiomorph().tuple4]
    if dedup is Dedup.ENANTIOMORPH_AND_DUAL and p == q:
        transforms.append(lambda t: GpParams(p, q, *t).dual().tuple4)
    kept = []
    seen = set()
    for b in buckets:
        if b.params in seen:
            continue
        orbit = {b.params}
        frontier = [b.params]
        while frontier:
            t = frontier.pop()
            for tr in transforms:
                u = tr(t)
                if u not in orbit:
                    orbit.add(u)
                    frontier.append(u)
        seen |= orbit
        kept.append(b)
    return kept


# ---------------------------------------------------------------------------
# Census.
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class CensusEntry:
    p: int
    q: int
    witness: Witness
    verified: bool | None

    def as_json(self) -> dict:
        from .presentations import format_presentation

        if isinstance(self.witness, Presentation):
            wit = {"kind": "presentation", "text": format_presentation(self.witness)}
        else:
            wit = {"kind": "mix",
                   "components": [format_presentation(c) for c in self.witness.components]}
        return {"type": [self.p, self.q], "witness": wit, "verified": self.verified}


def census(max_flags: int, verify: bool = False) -> list[CensusEntry]:
    """All admissible types with at most ``max_flags`` flags (2pq <=
    max_flags), each with its witness; in verify mode every witness is
    realized and checked (tight + chiral + exact type).  Sorted by (p, q);
    witness failures are reported as verified=False, never dropped."""
    if max_flags < 4:
        raise ValueError("max_flags must be at least 4")
    entries = []
    pmax = max_flags // (2 * 2)
    for p in range(2, pmax + 1):
        qmax = max_flags // (2 * p)
        for q in range(2, qmax + 1):
            if not admissible(p, q):
                continue
            wit = witness_for(p, q)
            verified = witness_verifies(p, q, wit) if verify else None
            entries.append(CensusEntry(p, q, wit, verified))
    return entries


def census_types(max_flags: int) -> list[tuple[int, int]]:
    return [(e.p, e.q) for e in census(max_flags)]


def read_atlas_csv(path) -> set[tuple[int, int]]:
    """Atlas comparison CSV: header ``p,q``, one type per row, duals listed
    explicitly."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != ["p", "q"]:
        raise ValueError("atlas CSV must have header 'p,q'")
    out = set()
    for row in rows[1:]:
        if not row or all(not c.strip() for c in row):
            continue
        p, q = (int(c) for c in row[:2])
        out.add((p, q))
    return out


def compare_with_atlas(max_flags: int, path) -> tuple[list, list]:
    """(missing_from_census, extra_in_census) relative to the atlas CSV."""
    ours = set(census_types(max_flags))
    theirs = read_atlas_csv(path)
    return sorted(theirs - ours), sorted(ours - theirs)
