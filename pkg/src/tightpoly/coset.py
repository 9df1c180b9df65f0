"""Coset enumeration (Todd-Coxeter) and concrete realizations.

The enumerator is relator-scanning with eager path definitions and
union-find coincidence merging, processed immediately off a work stack;
the table is compacted once, at completion.  It is the single trusted
engine: quotients and the exhaustive sweep all funnel through it (the
sweep has a fast twin in ``kern`` that is cross-checked against this).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Overflow
from .perms import is_identity, mul, order
from .presentations import Presentation
from .words import Word

# Letter indices: s1 -> 0, s1^-1 -> 1, s2 -> 2, s2^-1 -> 3.
# The inverse of letter d is d ^ 1.


def letter_index(gen: int, sign: int) -> int:
    return (gen - 1) * 2 + (0 if sign > 0 else 1)


def word_letters(word: Word) -> list[int]:
    return [letter_index(g, s) for g, s in word.letters]


@dataclass(frozen=True, slots=True)
class CosetTable:
    """A completed coset table: the right action of each generator on the
    live cosets, with coset 0 the subgroup itself."""

    n: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    complete: bool = True

    def act(self, coset: int, gen: int, sign: int) -> int:
        perm = self.s1 if gen == 1 else self.s2
        if sign > 0:
            return perm[coset]
        return perm.index(coset)

    def perm(self, gen: int) -> tuple[int, ...]:
        return self.s1 if gen == 1 else self.s2


class _Full(Exception):
    """Internal: a definition would exceed the live-coset budget."""


def enumerate_cosets(pres: Presentation, subgroup_gens=(), max_cosets: int = 100_000) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``subgroup_gens``
    (trivial subgroup if empty) in the group presented by ``pres``.

    Relator scans define missing cosets eagerly; when the live count hits
    ``max_cosets`` a lookahead pass rescans everything without defining
    (deductions and coincidences only) to collapse the table before giving
    up.  Raises Overflow if no space can be reclaimed.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    rels = [word_letters(r) for r in pres.relators if r]
    subs = [word_letters(w) for w in subgroup_gens if w]

    parent = [0]
    cols = ([-1], [-1], [-1], [-1])
    live = 1

    def find(c: int) -> int:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def new_vertex() -> int:
        nonlocal live
        if live >= max_cosets:
            raise _Full
        live += 1
        v = len(parent)
        parent.append(v)
        for col in cols:
            col.append(-1)
        return v

    def unify(a: int, b: int):
        nonlocal live
        stack = [(a, b)]
        while stack:
            c1, c2 = stack.pop()
            c1, c2 = find(c1), find(c2)
            if c1 == c2:
                continue
            if c2 < c1:
                c1, c2 = c2, c1
            parent[c2] = c1
            live -= 1
            for col in cols:
                n1 = col[c1]
                n2 = col[c2]
                if n1 == -1:
                    col[c1] = n2
                elif n2 != -1:
                    stack.append((n1, n2))

    def trace(v: int, letters) -> int:
        for d in letters:
            v = find(v)
            col = cols[d]
            nxt = col[v]
            if nxt == -1:
                w = new_vertex()
                col[v] = w
                cols[d ^ 1][w] = v
                v = w
            else:
                v = find(nxt)
        return v

    def scan_no_define(v: int, rel) -> bool:
        """Scan ``rel`` from ``v`` both ways; apply any forced deduction or
        coincidence but never define.  Returns True if anything changed."""
        u = find(v)
        i, n = 0, len(rel)
        while i < n:
            nxt = cols[rel[i]][u]
            if nxt == -1:
                break
            u = find(nxt)
            i += 1
        if i == n:
            if u != find(v):
                unify(u, v)
                return True
            return False
        w = find(v)
        j = n
        while j > i + 1:
            prv = cols[rel[j - 1] ^ 1][w]
            if prv == -1:
                break
            w = find(prv)
            j -= 1
        if j == i + 1:
            d = rel[i]
            fwd = cols[d][u]
            if fwd != -1:
                unify(fwd, w)
            elif cols[d ^ 1][w] != -1:
                unify(cols[d ^ 1][w], u)
            else:
                cols[d][u] = w
                cols[d ^ 1][w] = u
            return True
        return False

    def lookahead() -> bool:
        before = live
        changed = True
        while changed:
            changed = False
            for c in range(len(parent)):
                if find(c) != c:
                    continue
                for rel in rels:
                    if scan_no_define(c, rel):
                        changed = True
        return live < before

    def trace_closed(v: int, letters):
        while True:
            try:
                unify(trace(v, letters), v)
                return
            except _Full:
                if not lookahead():
                    raise Overflow(max_cosets) from None

    for w in subs:
        trace_closed(0, w)
    v = 0
    while v < len(parent):
        if find(v) == v:
            for rel in rels:
                trace_closed(v, rel)
        v += 1

    # Compact: renumber live cosets in creation order (coset 0 first).
    lookup = {}
    for idx in range(len(parent)):
        if find(idx) == idx:
            lookup[idx] = len(lookup)
    n = len(lookup)
    s1 = tuple(lookup[find(cols[0][idx])] for idx in lookup)
    s2 = tuple(lookup[find(cols[2][idx])] for idx in lookup)
    return CosetTable(n, s1, s2)


@dataclass(frozen=True, slots=True)
class Realization:
    """A concrete permutation representation of a presented group.

    ``order`` is the size of the closure of the generator permutations;
    when ``regular`` is true the action is regular, so degree == order
    and points correspond to group elements.
    """

    degree: int
    gen_perms: tuple[tuple[int, ...], tuple[int, ...]]
    order: int
    gen_orders: tuple[int, int]
    presentation: Presentation | None = field(default=None)
    regular: bool = field(default=False)

    def perm_of_word(self, word: Word) -> tuple[int, ...]:
        out = tuple(range(self.degree))
        for g, s in word.letters:
            perm = self.gen_perms[g - 1]
            if s < 0:
                inv = [0] * self.degree
                for x, y in enumerate(perm):
                    inv[y] = x
                perm = tuple(inv)
            out = mul(out, perm)
        return out

    def satisfies(self, word: Word) -> bool:
        return is_identity(self.perm_of_word(word))

    @property
    def schlafli(self) -> tuple[int, int]:
        return self.gen_orders


def default_max_cosets(pres: Presentation) -> int:
    # Tightness bounds the order by p*q; the slack covers intermediate
    # coincidences before collapse.
    return 4 * pres.declared_p * pres.declared_q + 64


def realize(pres: Presentation, max_cosets: int | None = None) -> Realization:
    """Enumerate over the trivial subgroup: the regular realization, which
    is exactly the group defined by the presentation."""
    if max_cosets is None:
        max_cosets = default_max_cosets(pres)
    table = enumerate_cosets(pres, (), max_cosets)
    gen_perms = (table.s1, table.s2)
    return Realization(
        degree=table.n,
        gen_perms=gen_perms,
        order=table.n,
        gen_orders=(order(table.s1), order(table.s2)),
        presentation=pres,
        regular=True,
    )
