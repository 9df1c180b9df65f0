"""Small permutation helpers.

Permutations are tuples: ``perm[x]`` is the image of point ``x``.  All
actions are on the right, so ``mul(a, b)`` means "apply a, then b".
"""

from __future__ import annotations

from math import gcd


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))

def is_identity(perm) -> bool:
    return all(perm[x] == x for x in range(len(perm)))

def mul(a, b) -> tuple[int, ...]:
    """Apply a, then b."""
    return tuple(b[x] for x in a)

def inverse(perm) -> tuple[int, ...]:
    out = [0] * len(perm)
    for x, y in enumerate(perm):
        out[y] = x
    return tuple(out)

def power(perm, n: int) -> tuple[int, ...]:
    if n < 0:
        return power(inverse(perm), -n)
    result = identity(len(perm))
    base = tuple(perm)
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result

def order(perm) -> int:
    """Least n >= 1 with perm^n the identity (lcm of cycle lengths)."""
    n = len(perm)
    seen = [False] * n
    out = 1
    for x in range(n):
        if seen[x]:
            continue
        length = 0
        y = x
        while not seen[y]:
            seen[y] = True
            y = perm[y]
            length += 1
        out = out * length // gcd(out, length)
    return out

def is_bijection(images, n: int) -> bool:
    return len(images) == n and sorted(images) == list(range(n))


def closure_order(gens, limit: int) -> int:
    """Order of the group generated by ``gens`` via breadth-first closure.

    Orders here stay small (<= ~10^4); raises RuntimeError past ``limit``
    rather than thrash.
    """
    if not gens:
        return 1
    n = len(gens[0])
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for el in frontier:
            for g in gens:
                prod = mul(el, g)
                if prod not in seen:
                    seen.add(prod)
                    if len(seen) > limit:
                        raise RuntimeError(
                            f"group closure exceeded the supported bound {limit}")
                    nxt.append(prod)
        frontier = nxt
    return len(seen)
