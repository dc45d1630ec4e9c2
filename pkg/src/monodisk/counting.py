"""Exact enumeration of tiling-family members.

The subdivided symmetric family for fixed (n, k >= 2) is in bijection with
two-colored necklaces: a member with i flipped blocks reads as a cyclic
word with i long beads and (2n - i)k short beads, counted up to rotation
only (mirror images are counted separately, hence the factor 2):

    |family(n, k)| = 2 * sum_{i=0}^{2n} N(i, (2n - i) k),

    N(a, b) = (1/a) * sum_{d | a, d | b} phi(d) * C(b/d + a/d - 1, a/d - 1)

with the monochromatic conventions N(0, b) = N(a, 0) = 1.  For k = 1 a
flip changes nothing, leaving only the mirror pair: the count is 2.

Everything here is exact integer arithmetic; ``necklace_bruteforce`` is an
independent oracle used by the test-suite to pin the closed form.
"""

from __future__ import annotations

import math
from itertools import combinations

from .errors import BothZero, CriticalOnlyForN3, InvalidN, TooLarge, TooMany
from .words import EdgeWord, min_rotation


def totient(d: int) -> int:
    """Euler's totient by trial factorization."""
    if d < 1:
        raise ValueError("totient needs a positive integer")
    result = d
    m = d
    f = 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def necklace(a: int, b: int) -> int:
    """Number of cyclic arrangements of a beads of one color and b of another."""
    if a < 0 or b < 0:
        raise ValueError("bead counts must be non-negative")
    if a == 0 and b == 0:
        raise BothZero("need at least one bead")
    if a == 0 or b == 0:
        return 1
    total = 0
    g = math.gcd(a, b)
    for d in range(1, a + 1):
        if a % d == 0 and g % d == 0:
            total += totient(d) * math.comb(b // d + a // d - 1, a // d - 1)
    assert total % a == 0
    return total // a


def necklace_bruteforce(a: int, b: int) -> int:
    """Oracle: enumerate all C(a+b, a) arrangements, canonicalize, count."""
    if a == 0 and b == 0:
        raise BothZero("need at least one bead")
    n = a + b
    if n > 24:
        raise TooLarge(f"brute force capped at 24 beads, got {n}")
    seen = set()
    for ones in combinations(range(n), a):
        word = 0
        for pos in ones:
            word |= 1 << pos
        canon = min((word >> r) | ((word << (n - r)) & ((1 << n) - 1))
                    for r in range(n))
        seen.add(canon)
    return len(seen)


def _require_family_n(n: int) -> None:
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InvalidN(f"family index n must be an odd integer >= 3, got {n!r}")


def count_C(n: int, k: int) -> int:
    """Exact member count of the subdivided symmetric family."""
    _require_family_n(n)
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return 2
    return 2 * sum(necklace(i, (2 * n - i) * k) for i in range(2 * n + 1))


def count_C_formula(n: int, k: int) -> int:
    """The doubled necklace sum without the k = 1 special case.

    This is the function the quasi-polynomials describe; it differs from
    ``count_C`` only at k = 1.
    """
    _require_family_n(n)
    return 2 * sum(necklace(i, (2 * n - i) * k) for i in range(2 * n + 1))


def count_Ctilde(n: int, k: int) -> int:
    """Asymmetric-wedge family: about either generator, either orientation."""
    _require_family_n(n)
    if k < 1:
        raise ValueError("k must be a positive integer")
    return 4


def count_D(n: int, t_class: str = "interior") -> int:
    """Halved-wedge family: the mirror pair, so always 2.

    ``t_class="critical"`` refers to the pinch limit, which exists only
    for n = 3.
    """
    _require_family_n(n)
    if t_class not in ("interior", "critical"):
        raise ValueError(f"t_class must be 'interior' or 'critical', got {t_class!r}")
    if t_class == "critical" and n != 3:
        raise CriticalOnlyForN3(f"the pinch limit exists only for n=3, got n={n}")
    return 2


def enumerate_members(n: int, k: int) -> list[tuple[EdgeWord, int]]:
    """All family members as (canonical word, orientation) pairs.

    Orientation +1 is the fixed reference handedness, -1 its mirror.
    The list length equals ``count_C(n, k)`` for k >= 2.
    """
    _require_family_n(n)
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        w = EdgeWord("S" * (2 * n), n, 1)
        return [(w, +1), (w, -1)]
    if count_C(n, k) // 2 > 10 ** 6:
        raise TooMany(f"member count for ({n}, {k}) exceeds the enumeration guard")
    out: list[tuple[EdgeWord, int]] = []
    for i in range(2 * n + 1):
        length = i + (2 * n - i) * k
        for positions in combinations(range(length), i):
            chars = ["S"] * length
            for pos in positions:
                chars[pos] = "L"
            word = "".join(chars)
            if word == min_rotation(word):
                ew = EdgeWord(word, n, k)
                out.append((ew, +1))
                out.append((ew, -1))
    return out
