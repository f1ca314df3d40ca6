"""Skew Littlewood-Richardson counting kernel.

`skew_lr_contents(outer, inner, k)` tabulates the contents of all LR skew
tableaux of shape outer/inner with entries in 1..k: the result maps a content
partition pi to the coefficient c^outer_{inner, pi}.  This is the inner loop
of every Hom-space dimension and Gram-matrix entry, so it has a numba
implementation and a pure-Python twin.

Backend selection (env var GREX_KERNEL):
  - "numba":  require the jit kernel, fail loudly if numba is unusable
  - "python": force the interpreted twin
  - unset:    use numba when importable, otherwise fall back silently

Tableaux are filled in reverse reading order (rows top to bottom, right to
left in each row).  Constraints per cell: weakly increasing rows, strictly
increasing columns, entry e only in rows >= e, and the lattice prefix
condition cnt[e-1] > cnt[e] at the moment entry e is placed.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["skew_lr_contents", "backend"]

_ENV = os.environ.get("GREX_KERNEL", "").strip().lower()

_HAVE_NUMBA = False
if _ENV != "python":
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        if _ENV == "numba":
            raise
        _HAVE_NUMBA = False


def backend() -> str:
    """Name of the active kernel implementation."""
    return "numba" if _HAVE_NUMBA else "python"


_CODE_BASE = 64


def _contents_python(outer, inner, k) -> dict[tuple[int, ...], int]:
    cells = []  # (row, above_present) in reverse reading order
    for r in range(k):
        lo, hi = inner[r], outer[r]
        for c in range(hi, lo, -1):
            cells.append((r, c))
    if not cells:
        return {(0,) * k: 1}
    ncells = len(cells)
    entries: dict[tuple[int, int], int] = {}
    cnt = [0] * (k + 2)
    out: dict[tuple[int, ...], int] = {}

    def go(i: int):
        if i == ncells:
            key = tuple(cnt[1 : k + 1])
            out[key] = out.get(key, 0) + 1
            return
        r, c = cells[i]
        lo = 1
        if r > 0 and inner[r - 1] < c <= outer[r - 1]:
            lo = entries[(r - 1, c)] + 1
        hi = min(k, r + 1)
        if c < outer[r]:
            right = entries[(r, c + 1)]
            if right < hi:
                hi = right
        for e in range(lo, hi + 1):
            if e > 1 and cnt[e - 1] <= cnt[e]:
                continue
            entries[(r, c)] = e
            cnt[e] += 1
            go(i + 1)
            cnt[e] -= 1
        entries.pop((r, c), None)

    go(0)
    return out


if _HAVE_NUMBA:

    @njit(cache=True)
    def _contents_jit(outer, inner, k, codes, counts, used, out_codes, out_counts):  # pragma: no cover - jit
        """DFS over tableaux; aggregate encoded contents through a probe table.

        Distinct contents are compacted into out_codes/out_counts; the probe
        table is handed back clean (only touched slots are reset).  Returns
        the number of distinct contents, or -1 if the table is too small.
        """
        cap = codes.shape[0]
        mask = cap - 1
        ncells = 0
        for r in range(k):
            ncells += outer[r] - inner[r]
        if ncells == 0:
            out_codes[0] = 0
            out_counts[0] = 1
            return 1
        row = np.empty(ncells, np.int64)
        above = np.empty(ncells, np.int64)
        right = np.empty(ncells, np.int64)
        offs = np.empty(k, np.int64)
        idx = 0
        for r in range(k):
            offs[r] = idx
            c = outer[r]
            while c > inner[r]:
                row[idx] = r
                right[idx] = idx - 1 if c < outer[r] else -1
                if r > 0 and inner[r - 1] < c <= outer[r - 1]:
                    above[idx] = offs[r - 1] + (outer[r - 1] - c)
                else:
                    above[idx] = -1
                idx += 1
                c -= 1
        ent = np.zeros(ncells, np.int64)
        cnt = np.zeros(k + 2, np.int64)
        nfound = 0
        i = 0
        while i >= 0:
            if i == ncells:
                code = np.int64(0)
                for e in range(1, k + 1):
                    code = code * _CODE_BASE + cnt[e]
                h = code & mask
                while counts[h] != 0 and codes[h] != code:
                    h = (h + 1) & mask
                if counts[h] == 0:
                    codes[h] = code
                    used[nfound] = h
                    nfound += 1
                    if nfound * 4 > cap * 3:
                        for t in range(nfound):
                            counts[used[t]] = 0
                        return -1
                counts[h] += 1
                i -= 1
                cnt[ent[i]] -= 1
                ent[i] += 1
                continue
            r = row[i]
            lo = 1
            if above[i] >= 0:
                lo = ent[above[i]] + 1
            hi = r + 1 if r + 1 < k else k
            if right[i] >= 0 and ent[right[i]] < hi:
                hi = ent[right[i]]
            if ent[i] == 0:
                ent[i] = lo
            e = ent[i]
            ok = False
            while e <= hi:
                if e == 1 or cnt[e - 1] > cnt[e]:
                    ok = True
                    break
                e += 1
            if ok:
                ent[i] = e
                cnt[e] += 1
                i += 1
                if i < ncells:
                    ent[i] = 0
            else:
                ent[i] = 0
                i -= 1
                if i < 0:
                    break
                cnt[ent[i]] -= 1
                ent[i] += 1
        for t in range(nfound):
            h = used[t]
            out_codes[t] = codes[h]
            out_counts[t] = counts[h]
            counts[h] = 0
        return nfound

    _CAP = 4096
    _probe_codes = np.zeros(_CAP, np.int64)
    _probe_counts = np.zeros(_CAP, np.int64)
    _used = np.zeros(_CAP, np.int64)
    _out_codes = np.zeros(_CAP, np.int64)
    _out_counts = np.zeros(_CAP, np.int64)
    _shape_buf = np.zeros(64, np.int64)


def _contents_numba(outer, inner, k) -> dict[tuple[int, ...], int]:
    global _CAP, _probe_codes, _probe_counts, _used, _out_codes, _out_counts
    buf = _shape_buf
    for r in range(k):
        buf[r] = outer[r]
        buf[32 + r] = inner[r]
    while True:
        m = _contents_jit(
            buf[:k], buf[32 : 32 + k], k,
            _probe_codes, _probe_counts, _used, _out_codes, _out_counts,
        )
        if m >= 0:
            break
        _CAP *= 2
        _probe_codes = np.zeros(_CAP, np.int64)
        _probe_counts = np.zeros(_CAP, np.int64)
        _used = np.zeros(_CAP, np.int64)
        _out_codes = np.zeros(_CAP, np.int64)
        _out_counts = np.zeros(_CAP, np.int64)
    out = {}
    oc = _out_codes
    on = _out_counts
    for j in range(m):
        code = int(oc[j])
        pi = [0] * k
        for e in range(k - 1, -1, -1):
            pi[e] = code % _CODE_BASE
            code //= _CODE_BASE
        out[tuple(pi)] = int(on[j])
    return out


def skew_lr_contents(
    outer: tuple[int, ...], inner: tuple[int, ...], k: int
) -> dict[tuple[int, ...], int]:
    """Map content pi -> c^outer_{inner, pi} over LR tableaux of shape outer/inner.

    Requires inner weakly contained in outer (the caller filters); entries of
    outer must stay below the encoding base of the jit kernel.
    """
    if any(inner[r] > outer[r] for r in range(k)):
        return {}
    # the content encoding needs k digits below the base inside an int64
    if _HAVE_NUMBA and k <= 10 and outer[0] < _CODE_BASE:
        return _contents_numba(outer, inner, k)
    return _contents_python(outer, inner, k)
