"""K_0(G(k,n)) in the Kapranov basis: classes, Euler pairing, mutations,
residual classes, and the fullness determinant.

A class is an integer coordinate vector over the lexicographically ordered
box diagrams.  Coordinates of a bundle are recovered from its Euler pairings
against the basis by back-substitution through the upper uni-triangular
Kapranov Gram matrix.

Pairings of the form chi(Sigma^a U*(t), Sigma^kappa U*) with t <= 0 and both
diagrams in the box sit in a single cohomological degree, so they reduce to
skew LR counts weighted by GL(n) dimensions:

    chi(Sigma^a U*(t), Sigma^kappa U*) = sum_pi c^{kappa(-t)}_{a, pi} dim_n(pi).

That identity powers the Gram matrix and the zero-class tests that the
staircase checks hammer on; its agreement with the generic Littlewood-
Richardson + dot-action route is part of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bott import TwistedSchur, euler_char
from .bott import _calc as _euler_calc
from .diagrams import (
    Box,
    BoxedDiagram,
    enumerate_diagrams,
    orbit_length,
)
from .kernels import skew_lr_contents
from .lefschetz import fonarev

__all__ = [
    "KClass",
    "ResidualReport",
    "basis",
    "class_of",
    "euler_pairing",
    "fullness_determinant",
    "is_zero_combination",
    "kapranov_gram",
    "mutate_left",
    "residual_report",
    "twist_class",
]

KClass = tuple[int, ...]


class _Ctx:
    __slots__ = ("box", "weights", "chis", "_chi")

    def __init__(self, box: Box):
        self.box = box
        self.weights = tuple(d.parts for d in enumerate_diagrams(box, "all"))
        self.chis: dict[tuple, int] = {}
        self._chi = _euler_calc(box).chi

    def chi_pair(self, a: tuple[int, ...], t: int, kappa: tuple[int, ...]) -> int:
        """chi(Sigma^a U*(t), Sigma^kappa U*), a and kappa in the box, t <= 0."""
        key = (a, t, kappa)
        v = self.chis.get(key)
        if v is None:
            outer = tuple(x - t for x in kappa) if t else kappa
            chi = self._chi
            v = 0
            for pi, c in skew_lr_contents(outer, a, self.box.k).items():
                v += c * chi(pi)
            self.chis[key] = v
        return v


@lru_cache(maxsize=None)
def _ctx(box: Box) -> _Ctx:
    return _Ctx(box)


@lru_cache(maxsize=None)
def basis(box: Box) -> tuple[BoxedDiagram, ...]:
    """The Kapranov basis diagrams in lexicographic order."""
    return tuple(enumerate_diagrams(box, "all"))


@lru_cache(maxsize=None)
def kapranov_gram(box: Box) -> tuple[tuple[int, ...], ...]:
    """Gram matrix chi(Sigma^lam U*, Sigma^mu U*) over the basis; unit diagonal."""
    ctx = _ctx(box)
    ws = ctx.weights
    rows = []
    for i, a in enumerate(ws):
        row = tuple(ctx.chi_pair(a, 0, b) for b in ws)
        if row[i] != 1:
            raise AssertionError(f"Kapranov Gram diagonal is not 1 at {a}")
        rows.append(row)
    return tuple(rows)


def class_of(e: TwistedSchur) -> KClass:
    """Coordinates of [E] in the Kapranov basis via the triangular solve."""
    box = e.box
    ws = _ctx(box).weights
    n = len(ws)
    b = [euler_char(TwistedSchur(w, 0, box), e) for w in ws]
    g = kapranov_gram(box)
    c = [0] * n
    for i in range(n - 1, -1, -1):
        s = b[i]
        gi = g[i]
        for j in range(i + 1, n):
            cj = c[j]
            if cj:
                s -= gi[j] * cj
        c[i] = s
    return tuple(c)


def euler_pairing(box: Box, x: KClass, y: KClass) -> int:
    """Bilinear Euler form x^T G y on coordinate vectors."""
    g = kapranov_gram(box)
    n = len(g)
    total = 0
    for i in range(n):
        xi = x[i]
        if xi:
            gi = g[i]
            total += xi * sum(gi[j] * y[j] for j in range(n) if y[j])
    return total


@lru_cache(maxsize=None)
def _twist_matrix(box: Box) -> tuple[KClass, ...]:
    """Columns: class of Sigma^lam U*(1) for each basis diagram lam."""
    return tuple(class_of(TwistedSchur(w, 1, box)) for w in _ctx(box).weights)


def twist_class(box: Box, x: KClass) -> KClass:
    """The class of x (x) O(1)."""
    cols = _twist_matrix(box)
    n = len(cols)
    out = [0] * n
    for j, xj in enumerate(x):
        if xj:
            col = cols[j]
            for i in range(n):
                out[i] += xj * col[i]
    return tuple(out)


def mutate_left(box: Box, projectors: list[KClass], x: KClass) -> KClass:
    """Gram-Schmidt x against a semiorthogonal sequence, last projector first.

    Rejects projector lists that are not Euler-unitriangular, and asserts
    that the result is left-orthogonal to every projector.
    """
    for i, e in enumerate(projectors):
        if euler_pairing(box, e, e) != 1:
            raise ValueError(f"projector {i} is not exceptional (chi(e,e) != 1)")
        for j in range(i + 1, len(projectors)):
            if euler_pairing(box, projectors[j], e) != 0:
                raise ValueError(
                    f"projectors {j} > {i} are not semiorthogonal; check the ordering"
                )
    y = list(x)
    for e in reversed(projectors):
        c = euler_pairing(box, e, tuple(y))
        if c:
            for i in range(len(y)):
                y[i] -= c * e[i]
    result = tuple(y)
    for e in projectors:
        assert euler_pairing(box, e, result) == 0, "mutation lost orthogonality"
    return result


def is_zero_combination(box: Box, terms: list[tuple[int, TwistedSchur]]) -> bool:
    """Whether sum coef * [bundle] vanishes in K_0.

    Tested through the Euler pairings against every basis object, which
    determine a class uniquely (the Gram matrix is uni-triangular).  All
    bundles must reduce to a non-positive twist.
    """
    ctx = _ctx(box)
    reduced = []
    for coef, bundle in terms:
        if coef == 0:
            continue
        r = bundle.reduced()
        w, t = r.weight, r.twist
        if t > 0:
            # re-absorb a positive twist into the weight; the single-degree
            # pairing argument needs t <= (n-k) - w_1, which then holds
            w = tuple(x + t for x in w)
            t = 0
            if w[0] > box.width:
                raise ValueError(f"bundle {bundle} does not fit the pairing fast path")
        reduced.append((coef, w, t))
    for kappa in ctx.weights:
        total = 0
        for coef, w, t in reduced:
            total += coef * ctx.chi_pair(w, t, kappa)
        if total != 0:
            return False
    return True


@dataclass(frozen=True)
class ResidualReport:
    """K-theoretic shadow of the residual category of the Fonarev collection."""

    box: Box
    short_diagrams: tuple[tuple[BoxedDiagram, int], ...]
    residual_classes: tuple[KClass, ...]
    residual_gram: tuple[tuple[int, ...], ...]
    tau_orbit_ok: tuple[bool, ...]
    sign_exponents: tuple[int, ...]
    fullness_det: int | None

    @property
    def gram_is_identity(self) -> bool:
        g = self.residual_gram
        return all(
            g[i][j] == (1 if i == j else 0) for i in range(len(g)) for j in range(len(g))
        )

    @property
    def tau_all_ok(self) -> bool:
        return all(self.tau_orbit_ok)

    def to_json(self) -> dict:
        return {
            "box": self.box.to_json(),
            "residual_rank": len(self.residual_classes),
            "short_diagrams": [list(d.parts) for d, _ in self.short_diagrams],
            "orbit_lengths": [o for _, o in self.short_diagrams],
            "residual_classes": [list(c) for c in self.residual_classes],
            "residual_gram": [list(r) for r in self.residual_gram],
            "residual_gram_is_identity": self.gram_is_identity,
            "tau_orbit_ok": list(self.tau_orbit_ok),
            "sign_exponents": list(self.sign_exponents),
            "fullness_det": self.fullness_det,
        }


def residual_report(box: Box, include_fullness: bool = True) -> ResidualReport:
    """Residual classes [F_mu^i], their Gram matrix, and the twisted-mutation orbit.

    For each short minimal diagram mu and 0 <= i < o(mu), [F_mu^i] is the left
    mutation of [Sigma^mu U*(i)] through the classes of the primitive block at
    twists 0..i-1 followed by the mu-contained part of the block at twist i.
    The induced polarization acts as x -> mutate(primitive block, x (x) O(1))
    and must cycle the classes, closing up to the sign (-1)^(k(n-k)/d).
    """
    k, n = box.k, box.n
    minimal = enumerate_diagrams(box, "minimal_upper")
    full_block = [d for d in minimal if orbit_length(box, d.parts) == n]
    shorts = [
        (d, orbit_length(box, d.parts))
        for d in minimal
        if orbit_length(box, d.parts) < n
    ]

    a_classes_cache: dict[int, list[KClass]] = {}

    def a_classes(j: int) -> list[KClass]:
        if j not in a_classes_cache:
            a_classes_cache[j] = [
                class_of(TwistedSchur(d.parts, j, box)) for d in full_block
            ]
        return a_classes_cache[j]

    residual: list[KClass] = []
    tau_ok: list[bool] = []
    sign_exponents: list[int] = []
    for mu, o in shorts:
        d = n // o
        sign_exp = (k * (n - k)) // d
        sign_exponents.append(sign_exp)
        fs: list[KClass] = []
        for i in range(o):
            projectors: list[KClass] = []
            for j in range(i):
                projectors.extend(a_classes(j))
            projectors.extend(
                class_of(TwistedSchur(lam.parts, i, box))
                for lam in full_block
                if mu.contains(lam)
            )
            fs.append(
                mutate_left(box, projectors, class_of(TwistedSchur(mu.parts, i, box)))
            )
        residual.extend(fs)
        ok = True
        sign = -1 if sign_exp % 2 else 1
        for i in range(o):
            y = mutate_left(box, a_classes(0), twist_class(box, fs[i]))
            if i < o - 1:
                ok = ok and y == fs[i + 1]
            else:
                ok = ok and y == tuple(sign * v for v in fs[0])
        tau_ok.append(ok)

    gram = tuple(
        tuple(euler_pairing(box, x, y) for y in residual) for x in residual
    )
    det = fullness_determinant(box) if include_fullness else None
    return ResidualReport(
        box=box,
        short_diagrams=tuple(shorts),
        residual_classes=tuple(residual),
        residual_gram=gram,
        tau_orbit_ok=tuple(tau_ok),
        sign_exponents=tuple(sign_exponents),
        fullness_det=det,
    )


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for r in range(n - 1):
        if m[r][r] == 0:
            for rr in range(r + 1, n):
                if m[rr][r]:
                    m[r], m[rr] = m[rr], m[r]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[r][r]
        for i in range(r + 1, n):
            mi, mr = m[i], m[r]
            mir = mi[r]
            for j in range(r + 1, n):
                mi[j] = (pivot * mi[j] - mir * mr[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def fullness_determinant(box: Box) -> int:
    """det of the Fonarev classes in the Kapranov basis; |det| = 1 certifies
    that the collection spans K_0."""
    collection = fonarev(box)
    cols = [class_of(obj.bundle) for obj in collection.objects]
    n = len(cols)
    if n != len(basis(box)):
        raise AssertionError("Fonarev collection size does not match rank of K_0")
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    return _bareiss_det(rows)
