"""Brute-force oracles, independent of the library's computation paths.

Characters are handled as explicit monomial sums (dicts exponent -> coeff),
products by convolution, and Schur expansion by repeated subtraction of the
leading term.  Slow and simple on purpose.
"""

from __future__ import annotations

from grex.diagrams import Box


def ssyt_contents(shape: tuple[int, ...], nvars: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of the Schur polynomial s_shape(x_1..x_nvars):
    enumerate semistandard tableaux, accumulating content vectors."""
    rows = [r for r in shape if r > 0]
    if any(x < 0 for x in shape):
        raise ValueError("shape must be non-negative")
    if len(rows) > nvars:
        return {}
    cells = []
    for r, width in enumerate(rows):
        for c in range(width):
            cells.append((r, c))
    out: dict[tuple[int, ...], int] = {}
    if not cells:
        return {(0,) * nvars: 1}
    entries: dict[tuple[int, int], int] = {}
    content = [0] * (nvars + 1)

    def go(i: int):
        if i == len(cells):
            key = tuple(content[1:])
            out[key] = out.get(key, 0) + 1
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = entries[(r, c - 1)]
        if r > 0:
            above = entries[(r - 1, c)]
            if above + 1 > lo:
                lo = above + 1
        for e in range(lo, nvars + 1):
            entries[(r, c)] = e
            content[e] += 1
            go(i + 1)
            content[e] -= 1
        entries.pop((r, c), None)

    go(0)
    return out


def poly_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def expand_in_schur_basis(poly: dict, nvars: int) -> dict[tuple[int, ...], int]:
    """Write a symmetric polynomial (monomial dict) in the Schur basis by
    stripping the lexicographically leading monomial, which is always a
    partition for a symmetric polynomial."""
    poly = dict(poly)
    out: dict[tuple[int, ...], int] = {}
    while poly:
        lead = max(poly)
        coeff = poly[lead]
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise AssertionError(f"leading monomial {lead} is not a partition")
        out[lead] = coeff
        for e, c in ssyt_contents(lead, nvars).items():
            key = tuple(e)
            v = poly.get(key, 0) - coeff * c
            if v:
                poly[key] = v
            else:
                poly.pop(key, None)
    return out


def lr_product_oracle(a: tuple[int, ...], b: tuple[int, ...]) -> dict:
    """Schur expansion of s_a * s_b by polynomial multiplication."""
    k = len(a)
    shift_a = -min(a[-1], 0)
    shift_b = -min(b[-1], 0)
    pa = ssyt_contents(tuple(x + shift_a for x in a), k)
    pb = ssyt_contents(tuple(x + shift_b for x in b), k)
    expansion = expand_in_schur_basis(poly_mul(pa, pb), k)
    s = shift_a + shift_b
    return {tuple(x - s for x in nu): c for nu, c in expansion.items()}


def dimension_oracle(w: tuple[int, ...], m: int) -> int:
    """Representation dimension as a count of semistandard tableaux."""
    shift = -min(w[-1], 0) if w else 0
    return sum(ssyt_contents(tuple(x + shift for x in w), m).values())


def bott_oracle(box: Box, nu: tuple[int, ...]):
    """Dot-action cohomology of Sigma^nu U*, written independently:
    returns None or (degree, dim by tableau count of the sorted weight)."""
    k, n = box.k, box.n
    gamma = [nu[i] + (n - 1 - i) for i in range(k)]
    gamma += [n - 1 - i for i in range(k, n)]
    if len(set(gamma)) < n:
        return None
    inv = sum(
        1 for i in range(n) for j in range(i + 1, n) if gamma[i] < gamma[j]
    )
    dom = sorted(gamma, reverse=True)
    weight = tuple(dom[i] - (n - 1 - i) for i in range(n))
    return inv, dimension_oracle(weight, n)


def ext_table_oracle(box: Box, a: tuple[int, ...], s: int, b: tuple[int, ...], t: int) -> dict[int, int]:
    """Ext^*(Sigma^a U*(s), Sigma^b U*(t)) from the monomial character of
    Sigma^dual(a) (x) Sigma^b: dot-straighten each monomial at the GL(k)
    level, then run the cohomology oracle on every dominant term."""
    k = len(a)
    # character of the dual representation: negate exponents of s_a
    ca = {tuple(-x for x in e): c for e, c in ssyt_contents(a, k).items()}
    shift_b = -min(b[-1], 0)
    cb = ssyt_contents(tuple(x + shift_b for x in b), k)
    prod = poly_mul(ca, cb)
    rho = tuple(k - 1 - i for i in range(k))
    dominant: dict[tuple[int, ...], int] = {}
    for e, c in prod.items():
        gamma = [e[i] + rho[i] for i in range(k)]
        if len(set(gamma)) < k:
            continue
        inv = sum(
            1 for i in range(k) for j in range(i + 1, k) if gamma[i] < gamma[j]
        )
        dom = sorted(gamma, reverse=True)
        nu = tuple(dom[i] - rho[i] for i in range(k))
        sign = -1 if inv % 2 else 1
        v = dominant.get(nu, 0) + sign * c
        if v:
            dominant[nu] = v
        else:
            dominant.pop(nu, None)
    table: dict[int, int] = {}
    twist = t - s - shift_b
    for nu, c in dominant.items():
        assert c > 0, "straightening must produce non-negative multiplicities"
        outcome = bott_oracle(box, tuple(x + twist for x in nu))
        if outcome is not None:
            deg, dim = outcome
            table[deg] = table.get(deg, 0) + c * dim
    return {d: v for d, v in table.items() if v}
