"""Young diagrams in a k x (n-k) box, the Z/n cyclic action and its orbits.

A diagram is stored as a weakly decreasing length-k integer vector with
explicit trailing zeros, so the cyclic rule has no variable-length cases.
Diagrams are encoded as length-n binary words (1 = horizontal step,
0 = vertical step of the boundary path); the cyclic action is rotation of
the word, which is what the orbit-counting argument uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

__all__ = [
    "Box",
    "BoxedDiagram",
    "Orbit",
    "SELECTIONS",
    "cyclic_step",
    "enumerate_diagrams",
    "is_minimal_upper_triangular",
    "is_strictly_upper_triangular",
    "is_upper_triangular",
    "non_minimal_upper",
    "orbit_of",
    "residual_rank",
    "theta",
]


@dataclass(frozen=True)
class Box:
    """The ambient k x (n-k) rectangle for G(k,n).

    k == n is tolerated as a degenerate width-0 box (it occurs as the
    ambient box of theta(k, 1)); everything downstream that needs a real
    Grassmannian insists on k < n.
    """

    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"invalid box: need 1 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    @property
    def dimension(self) -> int:
        """dim G(k,n) = k(n-k)."""
        return self.k * (self.n - self.k)

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n}

    @staticmethod
    def from_json(data: dict) -> "Box":
        return Box(int(data["k"]), int(data["n"]))


@dataclass(frozen=True)
class BoxedDiagram:
    """A Young diagram inside a box, as a length-k weakly decreasing vector."""

    parts: tuple[int, ...]
    box: Box

    def __post_init__(self):
        k, w = self.box.k, self.box.width
        p = self.parts
        if len(p) != k:
            raise ValueError(f"diagram must have exactly {k} parts, got {p}")
        if any(p[i] < p[i + 1] for i in range(k - 1)) or p[-1] < 0 or p[0] > w:
            raise ValueError(f"not a diagram in the {k}x{w} box: {p}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: "BoxedDiagram") -> bool:
        """Componentwise inclusion of Young diagrams."""
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Orbit:
    """A cyclic orbit: successive images of the starting diagram."""

    representative: BoxedDiagram
    members: tuple[BoxedDiagram, ...]
    length: int


SELECTIONS = ("all", "upper", "strictly_upper", "minimal_upper", "short_minimal_upper")


def cyclic_step(d: BoxedDiagram) -> BoxedDiagram:
    """One step of the Z/n action: add a full column, or shift when the first row is full."""
    w = d.box.width
    p = d.parts
    if p[0] < w:
        return BoxedDiagram(tuple(x + 1 for x in p), d.box)
    return BoxedDiagram(p[1:] + (0,), d.box)


def _word(d: BoxedDiagram) -> tuple[int, ...]:
    """Length-n binary word of the boundary path, bottom-left to top-right."""
    out = []
    prev = 0
    for part in reversed(d.parts):
        out.extend([1] * (part - prev))
        out.append(0)
        prev = part
    out.extend([1] * (d.box.width - prev))
    return tuple(out)


def _orbit_length_of_parts(parts: tuple[int, ...], box: Box) -> int:
    d = BoxedDiagram(parts, box)
    word = _word(d)
    n = box.n
    for r in range(1, n + 1):
        if n % r == 0 and word[-r:] + word[:-r] == word:
            return r
    raise AssertionError("unreachable: n-fold rotation is the identity")


def orbit_of(d: BoxedDiagram) -> Orbit:
    """The cyclic orbit through d, with the minimal upper triangular representative."""
    members = [d]
    cur = cyclic_step(d)
    while cur != d:
        members.append(cur)
        cur = cyclic_step(cur)
    upper = [m for m in members if is_upper_triangular(m)]
    rep = min(upper, key=lambda m: m.parts)
    return Orbit(representative=rep, members=tuple(members), length=len(members))


def is_upper_triangular(d: BoxedDiagram) -> bool:
    """Lies above the diagonal: k * part_i <= (n-k)(k-i), exact integer test."""
    k, w = d.box.k, d.box.width
    return all(k * d.parts[i] <= w * (k - 1 - i) for i in range(k))


def is_strictly_upper_triangular(d: BoxedDiagram) -> bool:
    """Strict inequality in the first k-1 rows (the last row must be 0)."""
    k, w = d.box.k, d.box.width
    if d.parts[-1] != 0:
        return False
    return all(k * d.parts[i] < w * (k - 1 - i) for i in range(k - 1))


def is_minimal_upper_triangular(d: BoxedDiagram) -> bool:
    """Lexicographically smallest upper triangular member of its orbit."""
    if not is_upper_triangular(d):
        return False
    return orbit_of(d).representative == d


def _ascending_parts(k: int, width: int):
    """All weakly decreasing length-k vectors bounded by width, lex ascending."""

    def gen(rows: int, cap: int):
        if rows == 0:
            yield ()
            return
        for v in range(cap + 1):
            for rest in gen(rows - 1, v):
                yield (v,) + rest

    yield from gen(k, width)


def enumerate_diagrams(box: Box, selection: str = "all") -> list[BoxedDiagram]:
    """All diagrams of the box matching `selection`, in lexicographic order.

    Selections: all, upper, strictly_upper, minimal_upper, short_minimal_upper.
    """
    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection {selection!r}; expected one of {SELECTIONS}")
    out = []
    for parts in _ascending_parts(box.k, box.width):
        d = BoxedDiagram(parts, box)
        if selection == "all":
            out.append(d)
        elif selection == "upper":
            if is_upper_triangular(d):
                out.append(d)
        elif selection == "strictly_upper":
            if is_strictly_upper_triangular(d):
                out.append(d)
        else:
            if is_minimal_upper_triangular(d):
                if selection == "minimal_upper":
                    out.append(d)
                elif _orbit_length_of_parts(parts, box) < box.n:
                    out.append(d)
    return out


def _moebius(d: int) -> int:
    primes = 0
    x = d
    p = 2
    while p * p <= x:
        if x % p == 0:
            x //= p
            if x % p == 0:
                return 0
            primes += 1
        else:
            p += 1
    if x > 1:
        primes += 1
    return -1 if primes % 2 else 1


def residual_rank(box: Box, method: str = "mobius") -> int:
    """Number of diagrams with short orbit: -sum_{d | gcd(k,n), d>1} mu(d) C(n/d, k/d)."""
    k, n = box.k, box.n
    if method == "mobius":
        g = gcd(k, n)
        total = 0
        for d in range(2, g + 1):
            if g % d == 0:
                total += _moebius(d) * comb(n // d, k // d)
        return -total
    if method == "brute_force":
        return sum(
            1
            for parts in _ascending_parts(k, box.width)
            if _orbit_length_of_parts(parts, box) < n
        )
    raise ValueError(f"unknown method {method!r}")


def theta(k: int, m: int) -> BoxedDiagram:
    """The short diagram ((k-1)(m-1), ..., (m-1), 0) in the k x k(m-1) box."""
    if k < 1 or m < 1:
        raise ValueError("theta needs k >= 1 and m >= 1")
    box = Box(k, k * m)
    return BoxedDiagram(tuple((k - 1 - i) * (m - 1) for i in range(k)), box)


def non_minimal_upper(box: Box) -> list[BoxedDiagram]:
    """Upper triangular diagrams that are not minimal in their orbit."""
    return [
        d
        for d in enumerate_diagrams(box, "upper")
        if not is_minimal_upper_triangular(d)
    ]


@lru_cache(maxsize=None)
def orbit_length(box: Box, parts: tuple[int, ...]) -> int:
    """Orbit length of the diagram with these parts (cached)."""
    return _orbit_length_of_parts(parts, box)
