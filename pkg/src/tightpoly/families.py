"""Constructors for the named witness families.

Each tag corresponds to one construction; ``build`` returns either a
Presentation or, for the one mixed family, a MixRecipe naming the two
presentations whose realizations must be mixed.  For the two-variant
(enantiomorphic-pair) families, ``sign=+1`` selects the variant whose
explicit permutation model uses the formulas as quoted (equivalently the
first-listed presentation) and ``sign=-1`` its enantiomorph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import BadParameters
from .presentations import GpParams, Presentation, gp_presentation
from .words import Word


class FamilyTag(str, Enum):
    REGULAR_2Q = "regular-2q"
    REGULAR_POW2_A = "regular-pow2-a"
    REGULAR_POW2_B = "regular-pow2-b"
    REGULAR_EVEN = "regular-even"
    ODD_ATOMIC = "odd-atomic"
    EVEN8_ATOMIC = "even8-atomic"
    EVEN2POW_ATOMIC = "even2pow-atomic"
    ODD_CENTRAL_EQ = "odd-central-eq"
    ODD_CENTRAL_LT = "odd-central-lt"
    EVEN_CENTRAL = "even-central"
    EVEN_CENTRAL_MIX = "even-central-mix"


@dataclass(frozen=True, slots=True)
class FamilySpec:
    tag: FamilyTag
    m: int | None = None
    alpha: int | None = None
    beta: int | None = None
    k: int | None = None
    sign: int | None = None
    p: int | None = None
    q: int | None = None

    def label(self) -> str:
        parts = [self.tag.value]
        for name in ("m", "alpha", "beta", "k", "sign", "p", "q"):
            v = getattr(self, name)
            if v is not None:
                parts.append(f"{name}={v}")
        return " ".join(parts)


@dataclass(frozen=True, slots=True)
class MixRecipe:
    """An ordered tuple of presentations whose realizations are to be
    mixed (left fold).  First-class so the CLI can print, realize, and
    verify it; mixes are not presentations and must not be conflated."""

    components: tuple[Presentation, ...] = field(default=())

    def __post_init__(self):
        if len(self.components) < 2:
            raise BadParameters("a mix recipe needs at least two components")


def is_odd_prime(m: int) -> bool:
    if m < 3 or m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def _need(cond: bool, msg: str):
    if not cond:
        raise BadParameters(msg)


def central_commutator(m: int) -> Word:
    """The relator s1^(2m) s2 s1^(-2m) s2^-1 (s1^(2m) commutes with s2)."""
    return Word.gen(1, 2 * m) * Word.gen(2) * Word.gen(1, -2 * m) * Word.gen(2, -1)


def odd_atomic_params(m: int, beta: int, k: int) -> GpParams:
    t = k * m ** (beta - 1)
    return GpParams(2 * m, m ** beta, 3, 1 + t, -3, -1 + t)


def even8_atomic_params(beta: int, sign: int) -> GpParams:
    t = sign * 2 ** (beta - 2)
    return GpParams(8, 2 ** beta, 3, 1 - t, -3, -1 - t)


def even2pow_atomic_params(beta: int, sign: int) -> GpParams:
    c = 2 ** (beta - 2)
    return GpParams(2 ** (beta - 1), 2 ** beta, -1 + c, -3 + sign * c, 1 - c, 3 + sign * c)


def build(spec: FamilySpec):
    """Construct the presentation (or mix recipe) for a family instance.

    Raises BadParameters naming the violated range.
    """
    tag = spec.tag
    if tag is FamilyTag.REGULAR_2Q:
        p, q = spec.p, spec.q
        _need(p is not None and q is not None, "regular-2q needs p and q")
        _need(q % 2 == 1, f"regular-2q needs q odd, got q={q}")
        _need(p % 2 == 0 and (2 * q) % p == 0,
              f"regular-2q needs p an even divisor of 2q, got p={p}, q={q}")
        return gp_presentation(GpParams(p, q, 3, 1, -3, -1))

    if tag is FamilyTag.REGULAR_POW2_A:
        a = spec.alpha
        _need(a is not None and a >= 4, f"regular-pow2-a needs alpha >= 4, got {a}")
        c = 2 ** (a - 1)
        return gp_presentation(GpParams(2 ** a, 4, -1 + c, 1, 1 - c, -1))

    if tag is FamilyTag.REGULAR_POW2_B:
        a = spec.alpha
        _need(a is not None and a >= 4, f"regular-pow2-b needs alpha >= 4, got {a}")
        return gp_presentation(GpParams(2 ** a, 2 ** (a - 1), 3, 1, -3, -1))

    if tag is FamilyTag.REGULAR_EVEN:
        p, q = spec.p, spec.q
        _need(p is not None and q is not None, "regular-even needs p and q")
        _need(p % 2 == 0 and q % 2 == 0,
              f"regular-even needs p and q even, got ({p}, {q})")
        return gp_presentation(GpParams(p, q, -1, 1, 1, -1))

    if tag is FamilyTag.ODD_ATOMIC:
        m, beta, k = spec.m, spec.beta, spec.k
        _need(m is not None and is_odd_prime(m), f"odd-atomic needs m an odd prime, got {m}")
        _need(beta is not None and beta >= 2, f"odd-atomic needs beta >= 2, got {beta}")
        _need(k is not None and 1 <= k <= m - 1,
              f"odd-atomic needs 1 <= k <= m-1, got k={k}")
        return gp_presentation(odd_atomic_params(m, beta, k))

    if tag is FamilyTag.EVEN8_ATOMIC:
        beta, sign = spec.beta, spec.sign
        _need(beta is not None and beta >= 5, f"even8-atomic needs beta >= 5, got {beta}")
        _need(sign in (1, -1), f"even8-atomic needs sign in {{+1,-1}}, got {sign}")
        return gp_presentation(even8_atomic_params(beta, sign))

    if tag is FamilyTag.EVEN2POW_ATOMIC:
        beta, sign = spec.beta, spec.sign
        _need(beta is not None and beta >= 5, f"even2pow-atomic needs beta >= 5, got {beta}")
        _need(sign in (1, -1), f"even2pow-atomic needs sign in {{+1,-1}}, got {sign}")
        return gp_presentation(even2pow_atomic_params(beta, sign))

    if tag is FamilyTag.ODD_CENTRAL_EQ:
        m, beta, k = spec.m, spec.beta, spec.k
        _need(m is not None and is_odd_prime(m), f"odd-central-eq needs m an odd prime, got {m}")
        _need(beta is not None and beta >= 2, f"odd-central-eq needs beta >= 2, got {beta}")
        _need(k is not None and 1 <= k <= m - 1,
              f"odd-central-eq needs 1 <= k <= m-1, got k={k}")
        t = k * m ** (beta - 1)
        u = k * (m + 1) * m ** (beta - 1)
        params = GpParams(2 * m ** beta, m ** beta, 3 + u, 1 + t, -3 + u, -1 + t,
                          (central_commutator(m),))
        return gp_presentation(params)

    if tag is FamilyTag.ODD_CENTRAL_LT:
        m, alpha, beta, k = spec.m, spec.alpha, spec.beta, spec.k
        _need(m is not None and is_odd_prime(m), f"odd-central-lt needs m an odd prime, got {m}")
        _need(alpha is not None and alpha >= 1, f"odd-central-lt needs alpha >= 1, got {alpha}")
        _need(beta is not None and beta > alpha,
              f"odd-central-lt needs beta > alpha, got alpha={alpha}, beta={beta}")
        _need(k is not None and 1 <= k <= m - 1,
              f"odd-central-lt needs 1 <= k <= m-1, got k={k}")
        t = k * m ** (beta - 1)
        params = GpParams(2 * m ** alpha, m ** beta, 3, 1 + t, -3, -1 + t,
                          (central_commutator(m),))
        return gp_presentation(params)

    if tag is FamilyTag.EVEN_CENTRAL:
        a, b, sign = spec.alpha, spec.beta, spec.sign
        _need(a is not None and b is not None, "even-central needs alpha and beta")
        _need(a >= 3, f"even-central needs alpha >= 3, got {a}")
        _need(b >= 5 and b >= a + 1,
              f"even-central needs beta >= max(5, alpha+1), got alpha={a}, beta={b}")
        _need(sign in (1, -1), f"even-central needs sign in {{+1,-1}}, got {sign}")
        t = sign * 2 ** (b - 2)
        return gp_presentation(GpParams(2 ** a, 2 ** b, 3, 1 + t, -3, -1 + t))

    if tag is FamilyTag.EVEN_CENTRAL_MIX:
        a = spec.alpha
        _need(a is not None and a >= 5, f"even-central-mix needs alpha >= 5, got {a}")
        c = 2 ** (a - 2)
        first = gp_presentation(
            GpParams(2 ** (a - 1), 2 ** a, -1 + c, -3 + c, 1 + c, 3 + c))
        second = gp_presentation(GpParams(2 ** a, 8, -1 + c, -3, 1 + c, 3))
        return MixRecipe((first, second))

    raise BadParameters(f"unknown family tag {tag!r}")
