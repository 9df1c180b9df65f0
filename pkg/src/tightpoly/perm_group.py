"""Group-level algorithms on realizations: element orders, cyclic cores,
quotients by cyclic normal subgroups, covering tests, mix and comix.

"Same group" throughout means mutual covers (generator-respecting
isomorphism both ways); abstract isomorphism is deliberately not
implemented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coset import Realization, realize
from .errors import NotNormal
from .perms import closure_order, inverse, mul, order, power
from .presentations import GpParams, Presentation, Word, gp_presentation, make_presentation

CLOSURE_LIMIT = 2_000_000  # mixes in the acceptance suite stay below this


def element_order(perm) -> int:
    """Least n >= 1 with perm^n the identity."""
    return order(perm)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@dataclass(frozen=True, slots=True)
class CoreInfo:
    """Core data of the cyclic subgroup <s> inside a realization.

    ``exponent`` is the minimal divisor e of ord(s) with <s^e> normal (so
    the core of <s> is <s^exponent>); ``multiplier`` is the a with
    other * s^e * other^-1 = s^(a*e), stored mod ord(s)/e.
    """

    exponent: int
    multiplier: int

    def as_json(self) -> dict:
        return {"exponent": self.exponent, "multiplier": self.multiplier}


def _normal_multiplier(sigma, other, e: int, ord_sigma: int):
    """If <sigma^e> is normalized by ``other``, return the multiplier a
    (with other sigma^e other^-1 = sigma^(a e)); else None."""
    se = power(sigma, e)
    conj = mul(mul(other, se), inverse(other))
    m = ord_sigma // e
    cur = tuple(range(len(sigma)))
    for a in range(m):
        if conj == cur:
            return a
        cur = mul(cur, se)
    return None


def cyclic_core(g: Realization, gen: int) -> CoreInfo:
    """Core of <s_gen> in the realized group.

    The exponent equals the generator's order exactly when the core is
    trivial (core-free).
    """
    sigma = g.gen_perms[gen - 1]
    other = g.gen_perms[2 - gen]
    n = element_order(sigma)
    for e in _divisors(n):
        a = _normal_multiplier(sigma, other, e, n)
        if a is not None:
            return CoreInfo(exponent=e, multiplier=a)
    raise AssertionError("unreachable: <s^ord> is always normal")


def is_core_free(g: Realization, gen: int) -> bool:
    return cyclic_core(g, gen).exponent == element_order(g.gen_perms[gen - 1])


def quotient_by_cyclic(g: Realization, gen: int, e: int) -> Realization:
    """The regular realization of G/<s_gen^e>, computed by re-running coset
    enumeration with the added relator s_gen^e.

    Raises NotNormal if <s_gen^e> is not normal in G.
    """
    if g.presentation is None:
        raise ValueError("quotient requires a realization with a source presentation")
    sigma = g.gen_perms[gen - 1]
    other = g.gen_perms[2 - gen]
    n = element_order(sigma)
    e = math.gcd(e, n)
    if _normal_multiplier(sigma, other, e, n) is None:
        raise NotNormal(f"<s{gen}^{e}> is not normal")
    pres = g.presentation
    extra = Word.gen(gen, e)
    if pres.params is not None:
        pm = pres.params
        new = GpParams(pm.p, pm.q, pm.i1, pm.j1, pm.i2, pm.j2,
                       pm.extra_relators + (extra,))
        return realize(gp_presentation(new))
    return realize(make_presentation(pres.relators + (extra,)))


def covers(g, h: Realization) -> bool:
    """True iff sending generators to generators defines a homomorphism
    from g onto h, i.e. every defining relator of g holds in h.

    ``g`` may be a Presentation or a Realization carrying its source
    presentation (valid because realize returns exactly the presented
    group).
    """
    pres = g if isinstance(g, Presentation) else g.presentation
    if pres is None:
        raise ValueError("cover source must carry a presentation")
    return all(h.satisfies(rel) for rel in pres.relators)


def mutual_covers(g: Realization, h: Realization) -> bool:
    return covers(g, h) and covers(h, g)


def _pair_orbit(g1: Realization, g2: Realization):
    """Orbit of (0, 0) under the diagonal generator action.

    When both factors are regular this orbit is in bijection with the mix
    (an element fixing a point of either regular block is trivial on it).
    """
    gens = [(g1.gen_perms[i], g2.gen_perms[i]) for i in (0, 1)]
    start = (0, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for a, b in frontier:
            for pa, pb in gens:
                t = (pa[a], pb[b])
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def mix(g1: Realization, g2: Realization) -> Realization:
    """Subgroup of the direct product generated by the diagonal generator
    pairs, realized on the disjoint union of the two point sets."""
    d1, d2 = g1.degree, g2.degree
    gen_perms = tuple(
        tuple(g1.gen_perms[i]) + tuple(x + d1 for x in g2.gen_perms[i])
        for i in (0, 1)
    )
    gen_orders = tuple(
        g1.gen_orders[i] * g2.gen_orders[i] //
        math.gcd(g1.gen_orders[i], g2.gen_orders[i])
        for i in (0, 1)
    )
    if g1.regular and g2.regular:
        n = len(_pair_orbit(g1, g2))
    else:
        n = closure_order(gen_perms, CLOSURE_LIMIT)
    return Realization(
        degree=d1 + d2,
        gen_perms=gen_perms,
        order=n,
        gen_orders=gen_orders,
        presentation=None,
        regular=False,
    )


def mix_regular(g1: Realization, g2: Realization) -> Realization:
    """The mix of two regular realizations, itself in regular form (points
    are the orbit of a base pair, on which the mix acts regularly)."""
    if not (g1.regular and g2.regular):
        raise ValueError("mix_regular requires regular factors")
    orbit = sorted(_pair_orbit(g1, g2))
    index = {pt: i for i, pt in enumerate(orbit)}
    gen_perms = tuple(
        tuple(index[(g1.gen_perms[i][a], g2.gen_perms[i][b])] for (a, b) in orbit)
        for i in (0, 1)
    )
    return Realization(
        degree=len(orbit),
        gen_perms=gen_perms,
        order=len(orbit),
        gen_orders=(order(gen_perms[0]), order(gen_perms[1])),
        presentation=None,
        regular=True,
    )


def comix(p1: Presentation, p2: Presentation) -> Presentation:
    """Concatenated relator lists over the shared generator pair; the
    declared exponents become the gcds of the inputs' declared exponents."""
    return make_presentation(p1.relators + p2.relators)


def admits_generator_inversion(g: Realization) -> bool:
    """Whether s_i -> s_i^-1 extends to a group automorphism, decided on a
    regular realization by transporting the base point.

    Needs no presentation: BFS over the regular action checks that every
    relation satisfied by the generators is satisfied by their inverses.
    """
    if not g.regular:
        raise ValueError("inversion test requires a regular realization")
    fwd = [g.gen_perms[0], g.gen_perms[1]]
    bwd = [inverse(p) for p in fwd]
    steps = list(zip(fwd + bwd, bwd + fwd))  # (edge action, image action)
    n = g.degree
    psi = [-1] * n
    psi[0] = 0
    queue = [0]
    while queue:
        x = queue.pop()
        for act, img in steps:
            x2 = act[x]
            y2 = img[psi[x]]
            if psi[x2] == -1:
                psi[x2] = y2
                queue.append(x2)
            elif psi[x2] != y2:
                return False
    return True
