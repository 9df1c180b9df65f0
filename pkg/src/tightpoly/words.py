"""Words over the two-generator alphabet {s1, s2}.

A letter is a pair ``(gen, sign)`` with ``gen`` in {1, 2} and ``sign``
in {+1, -1}.  Words are immutable; every constructor returns the freely
reduced form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Letter = tuple[int, int]


def _reduce(letters) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, s in letters:
        if g not in (1, 2) or s not in (1, -1):
            raise ValueError(f"bad letter ({g}, {s})")
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word in s1, s2 and their inverses."""

    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    @staticmethod
    def gen(g: int, exp: int = 1) -> "Word":
        """The word ``s<g>^exp``."""
        sign = 1 if exp >= 0 else -1
        return Word(((g, sign),) * abs(exp))

    def signs_flipped(self) -> "Word":
        """Every letter inverted in place (the generator-inversion image)."""
        return Word(tuple((g, -s) for g, s in self.letters))

    def dualled(self) -> "Word":
        """Every letter (g, s) replaced by (3-g, -s)."""
        return Word(tuple((3 - g, -s) for g, s in self.letters))

    def runs(self) -> list[tuple[int, int]]:
        """Collapse into [(gen, signed exponent), ...] runs."""
        out: list[tuple[int, int]] = []
        for g, s in self.letters:
            if out and out[-1][0] == g and (out[-1][1] > 0) == (s > 0):
                out[-1] = (g, out[-1][1] + s)
            else:
                out.append((g, s))
        return out


EMPTY = Word()


def free_reduce(word: Word) -> Word:
    """Return the freely reduced form of ``word``.

    Construction already reduces, so this is the identity on Word values;
    it exists so callers holding raw letter sequences have one entry point.
    """
    if isinstance(word, Word):
        return word
    return Word(tuple(word))


def cyclic_reduce(word: Word) -> Word:
    """Strip cancelling first/last letter pairs (conjugacy normal form)."""
    ls = list(word.letters)
    while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
        ls = ls[1:-1]
    return Word(tuple(ls))


def pure_power(word: Word) -> tuple[int, int] | None:
    """If the word is s_g^k (k != 0), return (g, |k|); else None."""
    if not word.letters:
        return None
    g0, s0 = word.letters[0]
    if all(g == g0 and s == s0 for g, s in word.letters):
        return g0, len(word.letters)
    return None


def is_rotation_square(word: Word) -> bool:
    """True if the word is (s1 s2)^2 up to inversion and cyclic rotation."""
    w = cyclic_reduce(word)
    if len(w.letters) != 4:
        return False
    signs = {s for _, s in w.letters}
    gens = [g for g, _ in w.letters]
    return len(signs) == 1 and gens in ([1, 2, 1, 2], [2, 1, 2, 1])
