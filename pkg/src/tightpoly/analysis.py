"""Polyhedron-level verdicts on a realized group: Schlafli type,
polytopality, tightness, regular-vs-chiral classification, atomicity.

Degenerate conventions: a generator of order 1 makes the input
NOT_POLYTOPAL (no polyhedron has monogon faces or vertex-figures here);
order-2 generators are polytopal and go through the usual
generator-inversion test, which always classifies them regular.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .coset import Realization, realize, default_max_cosets
from .perm_group import (
    CoreInfo,
    cyclic_core,
    element_order,
    mutual_covers,
    quotient_by_cyclic,
)
from .perms import power
from .presentations import Presentation


class Verdict(str, Enum):
    NOT_POLYTOPAL = "NOT_POLYTOPAL"
    ORIENTABLY_REGULAR = "ORIENTABLY_REGULAR"
    CHIRAL = "CHIRAL"


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    schlafli: tuple[int, int]
    order: int
    polytopal: bool
    tight: bool
    verdict: Verdict
    cores: tuple[CoreInfo, CoreInfo]
    atomic: bool | None

    def as_json(self) -> dict:
        return {
            "schlafli": list(self.schlafli),
            "order": self.order,
            "polytopal": self.polytopal,
            "tight": self.tight,
            "verdict": self.verdict.value,
            "cores": {"s1": self.cores[0].as_json(), "s2": self.cores[1].as_json()},
            "atomic": self.atomic,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.as_json(), sort_keys=True)


def cyclic_intersection_trivial(g: Realization) -> bool:
    """Whether <s1> and <s2> intersect trivially as permutation groups."""
    p1, p2 = g.gen_perms
    pow1 = {power(p1, k) for k in range(1, element_order(p1))}
    pow2 = {power(p2, k) for k in range(1, element_order(p2))}
    return not (pow1 & pow2)


def is_polytopal(g: Realization) -> bool:
    """True iff the realization is the rotation group of a polyhedron:
    trivial <s1> and <s2> intersection and no generator of order < 2."""
    if min(g.gen_orders) < 2:
        return False
    return cyclic_intersection_trivial(g)


def is_tight(g: Realization) -> bool:
    """order == ord(s1) * ord(s2); equivalent to the product-set definition
    whenever the cyclic intersection is trivial."""
    return g.order == g.gen_orders[0] * g.gen_orders[1]


def product_set_tight(g: Realization) -> bool:
    """The <s1><s2> product-set definition of tightness, kept as an O(n^2)
    cross-check for the order-product fast path."""
    p1, p2 = g.gen_perms
    from .perms import identity, mul

    pows1 = []
    cur = identity(g.degree)
    for _ in range(element_order(p1)):
        pows1.append(cur)
        cur = mul(cur, p1)
    pows2 = []
    cur = identity(g.degree)
    for _ in range(element_order(p2)):
        pows2.append(cur)
        cur = mul(cur, p2)
    prods = {mul(a, b) for a in pows1 for b in pows2}
    return len(prods) == g.order


def _inverted_relators_hold(pres: Presentation, g: Realization) -> bool:
    return all(g.satisfies(rel.signs_flipped()) for rel in pres.relators)


def classify(pres: Presentation, max_cosets: int | None = None,
             with_atomic: bool = True) -> ClassificationReport:
    """Realize the presentation and classify it.

    The regular-vs-chiral test evaluates every relator with all letter
    signs flipped; this is exact because the realization is precisely the
    presented group.
    """
    g = realize(pres, max_cosets)
    return classify_realization(g, with_atomic=with_atomic)


def classify_realization(g: Realization, with_atomic: bool = True) -> ClassificationReport:
    """Classify a realization produced by ``realize`` (it must carry its
    source presentation for the relator-inversion test)."""
    pres = g.presentation
    if pres is None:
        raise ValueError("classification needs the source presentation")
    p, q = g.gen_orders
    polytopal = is_polytopal(g)
    tight = is_tight(g)
    cores = (cyclic_core(g, 1), cyclic_core(g, 2))
    if not polytopal:
        verdict = Verdict.NOT_POLYTOPAL
    elif _inverted_relators_hold(pres, g):
        verdict = Verdict.ORIENTABLY_REGULAR
    else:
        verdict = Verdict.CHIRAL
    atomic = None
    if with_atomic and verdict is Verdict.CHIRAL and tight:
        atomic = is_atomic(g)
    return ClassificationReport(
        schlafli=(p, q),
        order=g.order,
        polytopal=polytopal,
        tight=tight,
        verdict=verdict,
        cores=cores,
        atomic=atomic,
    )


def _proper_normal_cyclic_quotients(g: Realization):
    """Yield (gen, e, quotient realization) for every proper divisor e of a
    generator's order with <s_gen^e> normal."""
    from .errors import NotNormal

    for gen in (1, 2):
        n = element_order(g.gen_perms[gen - 1])
        for e in range(1, n):
            if n % e:
                continue
            try:
                yield gen, e, quotient_by_cyclic(g, gen, e)
            except NotNormal:
                continue


def is_atomic(g: Realization) -> bool:
    """A tight chiral realization is atomic iff no quotient by a normal
    <s1^p'> or <s2^q'> (p', q' proper divisors) is again tight chiral.

    Any tight chiral polyhedron of type {p', q} or {p, q'} covered by g has
    cyclic kernel <s1^p'> resp. <s2^q'>, so checking these quotients decides
    the covering definition.
    """
    for _gen, _e, quo in _proper_normal_cyclic_quotients(g):
        rep = classify_realization(quo, with_atomic=False)
        if rep.tight and rep.verdict is Verdict.CHIRAL:
            return False
    return True


def regular_quotient_chain(g: Realization, max_steps: int = 64):
    """From a tight chiral realization, repeatedly quotient by the core of
    the larger generator's cyclic subgroup until the verdict is no longer
    CHIRAL.  Returns the chain of classification reports.

    Every tight chiral group has a nontrivial such core on the larger side,
    so each step strictly shrinks the group.
    """
    chain = []
    cur = g
    for _ in range(max_steps):
        rep = classify_realization(cur, with_atomic=False)
        chain.append(rep)
        if rep.verdict is not Verdict.CHIRAL:
            return chain
        p, q = cur.gen_orders
        gen = 2 if q >= p else 1
        e = cyclic_core(cur, gen).exponent
        if e == element_order(cur.gen_perms[gen - 1]):
            raise RuntimeError("chiral realization with core-free larger generator")
        cur = quotient_by_cyclic(cur, gen, e)
    raise RuntimeError("quotient chain did not terminate")


def covers_same_group(g: Realization, h: Realization) -> bool:
    return g.order == h.order and mutual_covers(g, h)
