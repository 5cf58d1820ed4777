"""Pure-Python sparse reduced row echelon form modulo a prime.

Same contract as the compiled ``nal._modrank`` kernel; used when the extension
is not available and as its test oracle.
"""
from __future__ import annotations

from heapq import heapify, heappop, heappush


def rref_mod(rows, ncols: int, p: int):
    """Reduced row echelon form of ``rows`` over GF(p).

    ``rows`` is a sequence of ``(cols, vals)`` pairs with strictly increasing
    column indices below ``ncols``; values may be any integers.  Returns
    ``(pivots, reduced)`` where ``reduced[i]`` is the row with pivot column
    ``pivots[i]`` (leading entry 1), as ``(cols, vals)`` lists, and pivots are
    increasing.
    """
    pivot_rows: dict = {}
    for cols, vals in rows:
        acc = {}
        for c, v in zip(cols, vals):
            v %= p
            if v:
                acc[c] = v
        heap = list(acc)
        heapify(heap)
        while heap:
            c = heappop(heap)
            a = acc.get(c)
            if not a:
                continue
            pr = pivot_rows.get(c)
            if pr is None:
                inv = pow(a, -1, p)
                keys = sorted(acc)
                pivot_rows[c] = (keys, [acc[k] * inv % p for k in keys])
                break
            f = p - a
            pcols, pvals = pr
            for cc, vv in zip(pcols, pvals):
                old = acc.get(cc)
                nv = ((old or 0) + f * vv) % p
                if nv:
                    if not old:
                        heappush(heap, cc)
                    acc[cc] = nv
                elif old is not None:
                    del acc[cc]

    pivots = sorted(pivot_rows)
    done: dict = {}
    for c in reversed(pivots):
        cols, vals = pivot_rows[c]
        acc = dict(zip(cols, vals))
        for cc, vv in zip(cols, vals):
            if cc == c or cc not in done:
                continue
            a = acc.get(cc)
            if not a:
                continue
            f = p - a
            rcols, rvals = done[cc]
            for k, w in zip(rcols, rvals):
                nv = (acc.get(k, 0) + f * w) % p
                if nv:
                    acc[k] = nv
                else:
                    acc.pop(k, None)
        keys = sorted(acc)
        done[c] = (keys, [acc[k] for k in keys])
    return pivots, [done[c] for c in pivots]
