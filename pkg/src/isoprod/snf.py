"""Integer Smith normal form for the relator matrices of rewritten
presentations.

The matrices that show up there are huge but extremely sparse (row support is
bounded by the relator length), and almost every pivot is a unit.  The solver
therefore runs two phases:

* a sparse phase that repeatedly eliminates with entries of absolute value 1,
  chosen by Markowitz cost (least fill-in first, ties broken by column then
  row id so runs are deterministic);
* a dense phase on whatever small core remains, using the classical
  reduction with full divisibility repair.

All arithmetic is exact; Python integers never overflow, which matters
because intermediate entries in integer elimination can grow far beyond the
input range.
"""

from __future__ import annotations

import heapq
from math import gcd

from .errors import ResourceLimitError

DENSE_DIM = 200          # hand off once the active block is this small
DENSE_DENSITY = 0.20     # ... or this full
DENSE_CELL_CAP = 2_000_000


def invariant_factors(rows: list[dict[int, int]], ncols: int) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of the integer matrix whose
    rows are given as ``{column: coefficient}`` maps.

    The cokernel of the matrix (as a map into Z^ncols) is
    ``Z^(ncols - len(result)) + sum_i Z/d_i``.
    """
    work: list[dict[int, int]] = []
    for r in rows:
        clean = {c: v for c, v in r.items() if v}
        if clean:
            work.append(clean)
    if not work:
        return []

    cols: dict[int, set[int]] = {}
    for ri, r in enumerate(work):
        for c in r:
            cols.setdefault(c, set()).add(ri)

    alive = set(range(len(work)))
    nnz = sum(len(r) for r in work)
    units = 0

    # lazily validated heap of (markowitz cost, col, row) unit candidates
    heap: list[tuple[int, int, int]] = []

    def push_row_units(ri: int) -> None:
        r = work[ri]
        rl = len(r) - 1
        for c, v in r.items():
            if v == 1 or v == -1:
                heapq.heappush(heap, (rl * (len(cols[c]) - 1), c, ri))

    for ri in alive:
        push_row_units(ri)

    def eliminate(pr: int, pc: int) -> None:
        nonlocal units, nnz
        prow = work[pr]
        pval = prow[pc]          # +1 or -1
        for ri in list(cols[pc]):
            if ri == pr:
                continue
            row = work[ri]
            factor = row[pc] * pval
            for c, v in prow.items():
                old = row.get(c, 0)
                nv = old - factor * v
                if nv:
                    row[c] = nv
                    if not old:
                        cols[c].add(ri)
                        nnz += 1
                elif old:
                    del row[c]
                    cols[c].discard(ri)
                    nnz -= 1
            if row:
                push_row_units(ri)
            else:
                alive.discard(ri)
        for c in prow:
            s = cols.get(c)
            if s is not None:
                s.discard(pr)
                if not s:
                    del cols[c]
        nnz -= len(prow)
        alive.discard(pr)
        units += 1

    while heap:
        cost, c, ri = heapq.heappop(heap)
        if ri not in alive or c not in cols or ri not in cols[c]:
            continue
        v = work[ri].get(c, 0)
        if v not in (1, -1):
            continue
        cur = (len(work[ri]) - 1) * (len(cols[c]) - 1)
        if cur > cost:
            heapq.heappush(heap, (cur, c, ri))
            continue
        eliminate(ri, c)
        if not alive or not cols:
            break
        # large blocks that fill in densely go to the dense routine early;
        # small blocks keep consuming unit pivots, which shrinks the dense
        # core far below the nominal switch dimension
        if min(len(alive), len(cols)) > DENSE_DIM and \
                nnz > DENSE_DENSITY * len(alive) * len(cols):
            break

    core = _dense_residue(work, alive, sorted(cols))
    factors = [1] * units + core
    factors.sort()
    return factors


def _dense_residue(work, alive, live_cols) -> list[int]:
    """Densify remaining rows (deduplicated up to sign) and finish there."""
    if not alive or not live_cols:
        return []
    colpos = {c: j for j, c in enumerate(live_cols)}
    seen: set[tuple[tuple[int, int], ...]] = set()
    dense: list[list[int]] = []
    for ri in sorted(alive):
        items = tuple(sorted(work[ri].items()))
        if items[0][1] < 0:
            items = tuple((c, -v) for c, v in items)
        if items in seen:
            continue
        seen.add(items)
        row = [0] * len(live_cols)
        for c, v in items:
            row[colpos[c]] = v
        dense.append(row)
    if len(dense) * len(live_cols) > DENSE_CELL_CAP:
        raise ResourceLimitError(
            f"dense elimination block {len(dense)} x {len(live_cols)} "
            f"exceeds {DENSE_CELL_CAP} cells")
    return dense_invariant_factors(dense)


def dense_invariant_factors(m: list[list[int]]) -> list[int]:
    """Invariant factors of a dense integer matrix (list of row lists).

    Classical algorithm: bring the smallest entry to the corner, clear its row
    and column, restart on non-divisible remainders, then repair the
    divisibility chain on the diagonal.
    """
    m = [row[:] for row in m]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    diag: list[int] = []
    s = 0
    while s < nr and s < nc:
        br = bc = -1
        best = 0
        for i in range(s, nr):
            row = m[i]
            for j in range(s, nc):
                v = row[j]
                if v and (br < 0 or abs(v) < best):
                    best = abs(v)
                    br, bc = i, j
        if br < 0:
            break
        m[s], m[br] = m[br], m[s]
        if bc != s:
            for row in m:
                row[s], row[bc] = row[bc], row[s]
        if m[s][s] < 0:
            m[s] = [-v for v in m[s]]
        while True:
            p = m[s][s]
            dirty = False
            for i in range(s + 1, nr):
                v = m[i][s]
                if v:
                    q = v // p
                    if q:
                        ms = m[s]
                        mi = m[i]
                        for j in range(s, nc):
                            mi[j] -= q * ms[j]
                    if m[i][s]:
                        m[s], m[i] = m[i], m[s]
                        if m[s][s] < 0:
                            m[s] = [-v2 for v2 in m[s]]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(s + 1, nc):
                v = m[s][j]
                if v:
                    q = v // p
                    if q:
                        for i in range(s, nr):
                            m[i][j] -= q * m[i][s]
                    if m[s][j]:
                        for i in range(nr):
                            m[i][s], m[i][j] = m[i][j], m[i][s]
                        if m[s][s] < 0:
                            m[s] = [-v2 for v2 in m[s]]
                        dirty = True
                        break
            if dirty:
                continue
            p = m[s][s]
            witness = None
            for i in range(s + 1, nr):
                row = m[i]
                for j in range(s + 1, nc):
                    if row[j] % p:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            ms = m[s]
            mw = m[witness]
            for j in range(s, nc):
                ms[j] += mw[j]
        diag.append(m[s][s])
        s += 1
    factors = [d for d in diag if d]
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            if b % a:
                g = gcd(a, b)
                factors[i], factors[j] = g, a * b // g
    factors.sort()
    return factors


def cokernel_invariants(rows: list[dict[int, int]], ncols: int, *,
                        max_rows: int = 50_000,
                        max_cols: int = 20_000) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion chain of Z^ncols modulo the row span.

    Returns ``(rank, torsion)`` with torsion the invariant factors > 1 in
    divisibility order.
    """
    if len(rows) > max_rows or ncols > max_cols:
        raise ResourceLimitError(
            f"relation matrix {len(rows)} x {ncols} exceeds cap "
            f"{max_rows} x {max_cols}")
    factors = invariant_factors(rows, ncols)
    rank = ncols - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    return rank, torsion
