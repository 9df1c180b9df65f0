"""Fast per-tuple certifier for the exhaustive parameter sweep.

For a candidate (p, q | i1, j1, i2, j2) the group always has order at
most p*q (every element rewrites as s1^a s2^b), so the sweep only needs
to recognize the tuples whose group is "full": order exactly p*q with
generator orders exactly (p, q).  That is decided by two subgroup coset
enumerations:

  * over <s2>: the table must have exactly p cosets and the s1-action a
    single p-cycle (pinning ord(s1) = p);
  * over <s1>: the table must then have exactly q cosets.

The functions here are written in array style so numba can compile them
when available; without numba the same code runs interpreted (slow but
identical).  Tuples whose enumeration exceeds the internal budgets are
reported as undecided and re-checked by the trusted engine in
``classification``.  A cheap necessary-condition prefilter (forced
values of the coset action of s1 on <s1>-cosets, and dually) prunes the
tuple grid first; every prefilter condition is an exact consequence of
fullness, so it can never drop a witness.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


@njit(cache=True)
def _find(parent, c):
    while parent[c] != c:
        parent[c] = parent[parent[c]]
        c = parent[c]
    return c


@njit(cache=True)
def _tc(runs, over, parent, edges, stack, cap):
    """Subgroup enumeration over <s1> (over=0) or <s2> (over=1).

    ``runs`` holds five relators as (letter, count) runs, 8 ints each.
    Returns the live-coset count, or -1 if the vertex or merge budget is
    exceeded.
    """
    parent[0] = 0
    edges[0, 0] = -1
    edges[1, 0] = -1
    edges[2, 0] = -1
    edges[3, 0] = -1
    if over == 0:
        edges[0, 0] = 0
        edges[1, 0] = 0
    else:
        edges[2, 0] = 0
        edges[3, 0] = 0
    nv = 1
    live = 1
    stack_cap = stack.shape[0]
    v = 0
    while v < nv:
        if parent[v] == v:
            for r in range(5):
                base = 8 * r
                c = _find(parent, v)
                for ri in range(4):
                    letter = runs[base + 2 * ri]
                    cnt = runs[base + 2 * ri + 1]
                    for _s in range(cnt):
                        nxt = edges[letter, c]
                        if nxt == -1:
                            if nv >= cap:
                                return -1
                            w = nv
                            nv += 1
                            parent[w] = w
                            edges[0, w] = -1
                            edges[1, w] = -1
                            edges[2, w] = -1
                            edges[3, w] = -1
                            edges[letter, c] = w
                            edges[letter ^ 1, w] = c
                            c = w
                            live += 1
                        else:
                            c = _find(parent, nxt)
                # unify(c, v)
                sp = 0
                stack[sp] = c
                stack[sp + 1] = v
                sp = 2
                while sp > 0:
                    sp -= 2
                    c1 = _find(parent, stack[sp])
                    c2 = _find(parent, stack[sp + 1])
                    if c1 == c2:
                        continue
                    if c2 < c1:
                        c1, c2 = c2, c1
                    parent[c2] = c1
                    live -= 1
                    for letter in range(4):
                        n1 = edges[letter, c1]
                        n2 = edges[letter, c2]
                        if n1 == -1:
                            edges[letter, c1] = n2
                        elif n2 != -1:
                            if sp + 2 > stack_cap:
                                return -1
                            stack[sp] = n1
                            stack[sp + 1] = n2
                            sp += 2
        v += 1
    return live


@njit(cache=True)
def _cycle_is_full(parent, edges, letter, expect):
    """True iff the letter-cycle through coset 0 has length exactly expect."""
    c = 0
    for t in range(1, expect + 1):
        nxt = edges[letter, c]
        if nxt == -1:
            return False
        c = _find(parent, nxt)
        if c == 0:
            return t == expect
    return False


@njit(cache=True)
def _certify(p, q, i1, j1, i2, j2, runs, parent, edges, stack, cap):
    """1 = full (order p*q, exact generator orders), 0 = not full,
    -1 = undecided within budget."""
    runs[13] = j1
    runs[15] = i1
    runs[21] = j2
    runs[23] = i2
    if p <= q:
        n = _tc(runs, 1, parent, edges, stack, cap)
        if n == -1:
            return -1
        if n != p or not _cycle_is_full(parent, edges, 0, p):
            return 0
        n = _tc(runs, 0, parent, edges, stack, cap)
        if n == -1:
            return -1
        return 1 if n == q else 0
    n = _tc(runs, 0, parent, edges, stack, cap)
    if n == -1:
        return -1
    if n != q or not _cycle_is_full(parent, edges, 2, q):
        return 0
    n = _tc(runs, 1, parent, edges, stack, cap)
    if n == -1:
        return -1
    return 1 if n == p else 0


@njit(cache=True)
def _sweep(p, q, ip1, ip2, jp1, jp2, runs, parent, edges, stack, cap, out_full, out_und):
    nf = 0
    nu = 0
    for a in range(ip1.shape[0]):
        i1 = ip1[a]
        i2 = ip2[a]
        for b in range(jp1.shape[0]):
            j1 = jp1[b]
            j2 = jp2[b]
            res = _certify(p, q, i1, j1, i2, j2, runs, parent, edges, stack, cap)
            if res == 1:
                if nf >= out_full.shape[0]:
                    return -1, -1
                out_full[nf] = ((np.int64(i1) * q + j1) * p + i2) * q + j2
                nf += 1
            elif res == -1:
                if nu >= out_und.shape[0]:
                    return -1, -1
                out_und[nu] = ((np.int64(i1) * q + j1) * p + i2) * q + j2
                nu += 1
    return nf, nu


def _base_runs(p, q):
    """(letter, count) runs for the five relators, short relators first so
    collapses land before the long power traces; the per-tuple counts of
    the two commutation relators get patched inside the kernel."""
    runs = np.zeros(40, dtype=np.int32)
    runs[0:8] = (0, 1, 2, 1, 0, 1, 2, 1)    # (s1 s2)^2
    runs[8:16] = (3, 1, 0, 1, 3, 0, 1, 0)   # s2^-1 s1 s2^-j1 s1^-i1
    runs[16:24] = (2, 1, 1, 1, 3, 0, 1, 0)  # s2 s1^-1 s2^-j2 s1^-i2
    runs[24:26] = (0, p)                    # s1^p
    runs[32:34] = (2, q)                    # s2^q
    return runs


def _forced_points_mask(n, x1, x2):
    """Consistency mask for the six forced values of the coset action: with
    (x1, x2) = (j1, j2) mod n on the <s1>-coset side (and (i2, i1) mod n on
    the dual side), the partial map {0:0, 1:-1, 2:x2-1, -1:x1, x2:1,
    x1+1:-2} must be single-valued and injective."""
    args = [
        np.zeros_like(x1), np.ones_like(x1), np.full_like(x1, 2 % n),
        np.full_like(x1, (n - 1) % n), x2, (x1 + 1) % n,
    ]
    vals = [
        np.zeros_like(x1), np.full_like(x1, (n - 1) % n), (x2 - 1) % n,
        x1, np.ones_like(x1) % n, np.full_like(x1, (n - 2) % n),
    ]
    mask = np.ones(x1.shape, dtype=bool)
    for i in range(6):
        for j in range(i + 1, 6):
            same_arg = args[i] == args[j]
            same_val = vals[i] == vals[j]
            mask &= ~(same_arg & ~same_val)
            mask &= ~(same_val & ~same_arg)
    return mask


def j_pairs(q, halve=True):
    """All (j1, j2) in Z_q x Z_q passing the forced-point filter, optionally
    halved by the enantiomorph symmetry j1 <= -j2 (mod q)."""
    j1, j2 = np.meshgrid(np.arange(q, dtype=np.int32),
                         np.arange(q, dtype=np.int32), indexing="ij")
    mask = _forced_points_mask(q, j1, j2)
    if halve:
        mask &= j1 <= (q - j2) % q
    return j1[mask].copy(), j2[mask].copy()


def i_pairs(p):
    """All (i1, i2) in Z_p x Z_p passing the dual-side forced-point filter
    (the dual presentation has (i2, i1) in the (j1, j2) slots)."""
    i1, i2 = np.meshgrid(np.arange(p, dtype=np.int32),
                         np.arange(p, dtype=np.int32), indexing="ij")
    mask = _forced_points_mask(p, i2, i1)
    return i1[mask].copy(), i2[mask].copy()


def budget_cap(p, q):
    # Matches the enumeration engine's default bound; arrays are created
    # once per chunk, so a generous cap costs nothing per tuple.
    return 4 * p * q + 64


def sweep_chunk(p, q, ip1, ip2, jp1, jp2):
    """Certify the product grid of i-pairs x j-pairs.  Returns (full,
    undecided) lists of packed int tuples, in lexicographic sweep order."""
    cap = budget_cap(p, q)
    runs = _base_runs(p, q)
    parent = np.empty(cap, dtype=np.int32)
    edges = np.empty((4, cap), dtype=np.int32)
    stack = np.empty(8 * cap, dtype=np.int32)
    out_full = np.empty(65536, dtype=np.int64)
    out_und = np.empty(65536, dtype=np.int64)
    nf, nu = _sweep(p, q, ip1, ip2, jp1, jp2, runs, parent, edges, stack,
                    cap, out_full, out_und)
    if nf < 0:
        raise RuntimeError("sweep result buffer overflow")
    return [int(x) for x in out_full[:nf]], [int(x) for x in out_und[:nu]]


def unpack(p, q, packed):
    j2 = packed % q
    packed //= q
    i2 = packed % p
    packed //= p
    j1 = packed % q
    i1 = packed // q
    return int(i1), int(j1), int(i2), int(j2)
