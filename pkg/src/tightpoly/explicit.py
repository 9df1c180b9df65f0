"""Explicit permutation models of the atomic families, built directly on
Z_N (N = m^beta or 2^beta) from closed-form formulas, independently of
coset enumeration.

The action is unfaithful in principle (it is the action on cosets of
<s1>), so order claims never rest on these models alone; realizations
from the enumeration engine remain the authority and the two are
cross-checked.
"""

from __future__ import annotations

from .coset import Realization
from .errors import BadParameters, RepresentationError
from .families import FamilySpec, FamilyTag, build
from .perms import closure_order, inverse, is_bijection, order
from .presentations import Presentation

_EXPLICIT_TAGS = (FamilyTag.ODD_ATOMIC, FamilyTag.EVEN8_ATOMIC, FamilyTag.EVEN2POW_ATOMIC)


def _odd_pi1(m: int, beta: int, k: int) -> list[int]:
    # Coefficient chosen so the represented presentation is exactly the
    # family instance: -2*kf == k (mod m).
    n = m ** beta
    kf = (-k * pow(2, -1, m)) % m
    c = kf * m ** (beta - 1)
    return [(-b + b * (1 - b) * c) % n for b in range(n)]


def _even8_pi1(beta: int) -> list[int]:
    n = 2 ** beta
    c = 2 ** (beta - 3)
    return [(-b + b * (1 - b) * c) % n for b in range(n)]


def _even2pow_pi1(beta: int) -> list[int]:
    n = 2 ** beta
    c = 2 ** (beta - 3)
    out = []
    for b in range(n):
        if b % 2 == 0:
            out.append((b + c * b * (b - 1)) % n)
        else:
            out.append((b - 2 + c * b * (b - 1)) % n)
    return out


def _negated_inverse(perm) -> tuple[int, ...]:
    """b -> -perm^-1(-b): the enantiomorphic twin that keeps the successor
    generator acting as b -> b+1."""
    n = len(perm)
    inv = inverse(perm)
    return tuple((-inv[(-b) % n]) % n for b in range(n))


def explicit_representation(spec: FamilySpec) -> Realization:
    """Permutation model of an atomic-family instance on Z_N, with the
    successor map as the second generator.

    Every defining relator of the instance's presentation is verified to
    hold; a failure is an implementation bug and raises
    RepresentationError.
    """
    if spec.tag not in _EXPLICIT_TAGS:
        raise BadParameters(
            f"no explicit model for family {spec.tag.value!r}")
    pres = build(spec)
    assert isinstance(pres, Presentation)

    if spec.tag is FamilyTag.ODD_ATOMIC:
        n = spec.m ** spec.beta
        pi1 = _odd_pi1(spec.m, spec.beta, spec.k)
    elif spec.tag is FamilyTag.EVEN8_ATOMIC:
        n = 2 ** spec.beta
        pi1 = _even8_pi1(spec.beta)
    else:
        n = 2 ** spec.beta
        pi1 = _even2pow_pi1(spec.beta)
    if not is_bijection(pi1, n):
        raise RepresentationError(f"pi1 is not a bijection for {spec.label()}")
    pi1 = tuple(pi1)
    pi2 = tuple((b + 1) % n for b in range(n))
    if spec.sign == -1:
        pi1 = _negated_inverse(pi1)
        pi2 = _negated_inverse(pi2)

    g = Realization(
        degree=n,
        gen_perms=(pi1, pi2),
        order=0,  # patched below once the closure is known
        gen_orders=(order(pi1), order(pi2)),
        presentation=pres,
        regular=False,
    )
    for rel in pres.relators:
        if not g.satisfies(rel):
            raise RepresentationError(
                f"defining relator fails in the explicit model for {spec.label()}")
    grp_order = closure_order(g.gen_perms, 4 * pres.declared_p * pres.declared_q + 64)
    return Realization(
        degree=n,
        gen_perms=g.gen_perms,
        order=grp_order,
        gen_orders=g.gen_orders,
        presentation=pres,
        regular=False,
    )
