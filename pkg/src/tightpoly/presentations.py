"""Two-generator presentations, the parametric family gp(p,q | i1,j1,i2,j2),
duality and enantiomorphy transforms, and the text format.

Relations "A = B" are stored as the single relator A * B^-1, freely
reduced, so one uniform relator list feeds coset enumeration.  Family
parameters are canonicalized at construction: i1, i2 into [0, p) and
j1, j2 into [0, q), making equality of parameter tuples syntactic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParseError, PresentationError
from .words import Word, is_rotation_square, pure_power


@dataclass(frozen=True, slots=True)
class GpParams:
    """Parameters (p, q, i1, j1, i2, j2) of the gp family, plus any extra
    relators (e.g. a central-commutation relator)."""

    p: int
    q: int
    i1: int
    j1: int
    i2: int
    j2: int
    extra_relators: tuple[Word, ...] = ()

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise PresentationError(f"p and q must be positive, got ({self.p}, {self.q})")
        object.__setattr__(self, "i1", self.i1 % self.p)
        object.__setattr__(self, "i2", self.i2 % self.p)
        object.__setattr__(self, "j1", self.j1 % self.q)
        object.__setattr__(self, "j2", self.j2 % self.q)
        object.__setattr__(self, "extra_relators", tuple(self.extra_relators))

    @property
    def tuple4(self) -> tuple[int, int, int, int]:
        return (self.i1, self.j1, self.i2, self.j2)

    def dual(self) -> "GpParams":
        return GpParams(
            self.q, self.p, self.j2, self.i2, self.j1, self.i1,
            tuple(w.dualled() for w in self.extra_relators),
        )

    def enantiomorph(self) -> "GpParams":
        return GpParams(
            self.p, self.q, -self.i2, -self.j2, -self.i1, -self.j1,
            tuple(w.signs_flipped() for w in self.extra_relators),
        )


@dataclass(frozen=True, slots=True)
class Presentation:
    """An immutable two-generator presentation.

    declared_p / declared_q are the exponents forced by the pure-power
    relators (the gcd of all s1-power, resp. s2-power, relator lengths).
    """

    relators: tuple[Word, ...]
    declared_p: int
    declared_q: int
    params: GpParams | None = field(default=None)


def _declared_exponents(relators) -> tuple[int, int]:
    dp = dq = 0
    for rel in relators:
        pp = pure_power(rel)
        if pp is not None:
            g, k = pp
            if g == 1:
                dp = math.gcd(dp, k)
            else:
                dq = math.gcd(dq, k)
    return dp, dq


def make_presentation(relators, params: GpParams | None = None) -> Presentation:
    """Validate and build a Presentation from a relator list.

    Requires a pure power of each generator and a (s1 s2)^2 relator;
    these are the standing assumptions of everything downstream.
    """
    relators = tuple(relators)
    dp, dq = _declared_exponents(relators)
    if dp == 0:
        raise PresentationError("no pure s1-power relator; cannot bound the order of s1")
    if dq == 0:
        raise PresentationError("no pure s2-power relator; cannot bound the order of s2")
    if not any(is_rotation_square(r) for r in relators):
        raise PresentationError("missing the (s1 s2)^2 relator")
    return Presentation(relators, dp, dq, params)


def gp_presentation(params: GpParams) -> Presentation:
    """The presentation with relators s1^p, s2^q, (s1 s2)^2,
    s2^-1 s1 s2^-j1 s1^-i1, s2 s1^-1 s2^-j2 s1^-i2, plus extras."""
    p, q = params.p, params.q
    rel1 = Word.gen(2, -1) * Word.gen(1) * Word.gen(2, -params.j1) * Word.gen(1, -params.i1)
    rel2 = Word.gen(2) * Word.gen(1, -1) * Word.gen(2, -params.j2) * Word.gen(1, -params.i2)
    relators = (
        Word.gen(1, p),
        Word.gen(2, q),
        (Word.gen(1) * Word.gen(2)) ** 2,
        rel1,
        rel2,
    ) + params.extra_relators
    return Presentation(relators, p, q, params)


def dual(pres: Presentation) -> Presentation:
    """Swap the roles of faces and vertices: each letter (g, s) becomes
    (3-g, -s); on gp parameters this realizes (q, p | j2, i2, j1, i1)."""
    if pres.params is not None:
        return gp_presentation(pres.params.dual())
    return make_presentation(tuple(r.dualled() for r in pres.relators))


def enantiomorph(pres: Presentation) -> Presentation:
    """Invert every generator occurrence; on gp parameters this realizes
    (p, q | -i2, -j2, -i1, -j1)."""
    if pres.params is not None:
        return gp_presentation(pres.params.enantiomorph())
    return make_presentation(tuple(r.signs_flipped() for r in pres.relators))


# ---------------------------------------------------------------------------
# Text format.
#
#   gp <p> <q> : <i1> <j1> <i2> <j2>     the parametric family
#   rel <word>                           extra or standalone relators
#
# <word> is a whitespace-separated product of atoms s1, s2, s1^<k>,
# s2^<k>, (<word>)^<k> with integer (possibly negative) k.  '#' starts a
# comment; ';' separates declarations like a newline.
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.line, self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def take_exponent(self) -> int:
        k = self.take_int()
        if k == 0:
            self.error("zero exponent")
        return k

    def parse_word(self, stop=()) -> Word:
        w = Word()
        while not self.at_end() and self.peek() not in stop:
            w = w * self.parse_atom()
        return w

    def parse_atom(self) -> Word:
        self.skip_ws()
        c = self.text[self.pos]
        if c == "(":
            self.pos += 1
            inner = self.parse_word(stop=")")
            if self.peek() != ")":
                self.error("unbalanced '('")
            self.pos += 1
            if self.peek() != "^":
                self.error("expected '^' after ')'")
            self.pos += 1
            return inner ** self.take_exponent()
        if c == "s":
            start = self.pos
            self.pos += 1
            if self.pos >= len(self.text) or self.text[self.pos] not in "12":
                self.pos = start
                self.error("unknown generator name (expected s1 or s2)")
            g = int(self.text[self.pos])
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos] == "^":
                self.pos += 1
                return Word.gen(g, self.take_exponent())
            return Word.gen(g)
        self.error(f"unexpected character {c!r}")


def parse_presentation(text: str) -> Presentation:
    """Parse the text format into a Presentation."""
    gp: GpParams | None = None
    gp_line = None
    extras: list[Word] = []
    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        raw = raw.split("#", 1)[0]
        for piece in raw.split(";"):
            sc = _Scanner(piece, lineno)
            if sc.at_end():
                continue
            sc.skip_ws()
            if piece.lstrip().startswith("gp"):
                sc.pos = piece.index("gp") + 2
                if gp is not None:
                    sc.error("multiple gp declarations")
                p = sc.take_int()
                q = sc.take_int()
                if sc.peek() != ":":
                    sc.error("expected ':' after 'gp <p> <q>'")
                sc.pos += 1
                vals = [sc.take_int() for _ in range(4)]
                if not sc.at_end():
                    sc.error("trailing input after gp declaration (expected 4 residues)")
                if p < 1 or q < 1:
                    sc.error("p and q must be positive")
                gp = GpParams(p, q, *vals)
                gp_line = lineno
            elif piece.lstrip().startswith("rel"):
                sc.pos = piece.index("rel") + 3
                w = sc.parse_word()
                if not sc.at_end():
                    sc.error("trailing input after relator")
                extras.append(w)
            else:
                sc.error("expected 'gp' or 'rel'")
    if gp is not None:
        gp = GpParams(gp.p, gp.q, gp.i1, gp.j1, gp.i2, gp.j2, tuple(extras))
        return gp_presentation(gp)
    if not extras:
        raise ParseError("empty presentation", gp_line or 1)
    try:
        return make_presentation(tuple(extras))
    except PresentationError as exc:
        raise ParseError(str(exc), 1) from exc


def format_word(word: Word) -> str:
    if not word:
        return "(s1)^1 (s1)^-1"  # the empty word has no atom; spell a cancelling pair
    parts = []
    for g, e in word.runs():
        parts.append(f"s{g}" if e == 1 else f"s{g}^{e}")
    return " ".join(parts)


def format_presentation(pres: Presentation) -> str:
    """Render in the text grammar; parse(format(P)) == P."""
    lines = []
    if pres.params is not None:
        pm = pres.params
        lines.append(f"gp {pm.p} {pm.q} : {pm.i1} {pm.j1} {pm.i2} {pm.j2}")
        for w in pm.extra_relators:
            lines.append(f"rel {format_word(w)}")
    else:
        for w in pres.relators:
            lines.append(f"rel {format_word(w)}")
    return "\n".join(lines) + "\n"
