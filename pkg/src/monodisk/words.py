"""Cyclic edge words addressing members of the subdivided symmetric family.

A member of the (n, k) family is described by the sequence of arcs its
tiles cut out of the disk boundary: a short edge ``S`` spans pi/(n*k)
(one radial subtile), a long edge ``L`` spans pi/n (a flipped block of k
subtiles).  Valid words satisfy  #L * k + #S = 2*n*k  with #L <= 2n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WordInvalid


def min_rotation(s: str) -> str:
    """Lexicographically smallest rotation of ``s``."""
    if not s:
        return s
    doubled = s + s
    return min(doubled[i:i + len(s)] for i in range(len(s)))


@dataclass(frozen=True)
class EdgeWord:
    letters: str
    n: int
    k: int

    def __post_init__(self):
        bad = set(self.letters) - {"L", "S"}
        if bad:
            raise WordInvalid(f"letters must be L or S, got {sorted(bad)}")
        n_l = self.letters.count("L")
        n_s = self.letters.count("S")
        if n_l > 2 * self.n:
            raise WordInvalid(f"at most {2 * self.n} flips allowed, got {n_l}")
        if n_l * self.k + n_s != 2 * self.n * self.k:
            raise WordInvalid(
                f"word {self.letters!r} covers {n_l * self.k + n_s} slots, "
                f"need {2 * self.n * self.k}")

    @property
    def flips(self) -> int:
        return self.letters.count("L")

    def canonical(self) -> "EdgeWord":
        return EdgeWord(min_rotation(self.letters), self.n, self.k)

    def cyclic_eq(self, other: "EdgeWord") -> bool:
        return (self.n, self.k) == (other.n, other.k) and \
            min_rotation(self.letters) == min_rotation(other.letters)

    def reversed(self) -> "EdgeWord":
        return EdgeWord(self.letters[::-1], self.n, self.k)

    def __str__(self) -> str:
        return self.letters


def all_short(n: int, k: int) -> EdgeWord:
    return EdgeWord("S" * (2 * n * k), n, k)


def word_from_flip_count(n: int, k: int, u: int) -> EdgeWord:
    """Canonical word with ``u`` flipped blocks packed at the front."""
    return EdgeWord("L" * u + "S" * ((2 * n - u) * k), n, k)
