"""Exact linear algebra over the rationals for sparse integer row systems.

Two independent routes compute the row space of a sparse integer matrix:

* :func:`rref_exact` -- fraction-free (integer preserving) elimination on
  Python integers.  Slow but obviously exact.
* :func:`rref_certified` -- reduced echelon form modulo word-sized primes
  (compiled kernel when available), rational reconstruction of the entries,
  then an exact integer check that every input row lies in the reconstructed
  span.  Because the rank modulo ``p`` never exceeds the rational rank, a
  passing check proves the two spans are equal, so the result is exact.

Both return a :class:`SpanBasis` in the same normal form: one primitive
integer row per pivot whose pivot entry is the positive row denominator.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

from . import _modrank_py

log = logging.getLogger(__name__)

try:  # pragma: no cover - depends on build
    from . import _modrank as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

# primes just below 2**31; products of residues stay inside int64
PRIMES = (
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
    2147483489,
)

_backend = "compiled" if _compiled is not None else "python"


def available_backends() -> list:
    return ["compiled", "python"] if _compiled is not None else ["python"]


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Select the modular kernel: ``"compiled"`` or ``"python"``."""
    global _backend
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _compiled is None:
        raise RuntimeError("compiled kernel is not built; run `pip install -e .`")
    _backend = name


def rref_mod(rows, ncols: int, p: int, backend: str | None = None):
    """Modular RREF via the selected kernel; see ``_modrank_py.rref_mod``."""
    name = backend or _backend
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not built")
        return _compiled.rref_mod(rows, ncols, p)
    return _modrank_py.rref_mod(rows, ncols, p)


# --------------------------------------------------------------------------
# sparse row helpers


def sparse_row(mapping) -> tuple:
    """``{col: int}`` -> ``(cols, vals)`` with increasing columns, zeros dropped."""
    cols = sorted(c for c, v in mapping.items() if v)
    return cols, [mapping[c] for c in cols]


def primitive_row(cols: Sequence[int], vals: Sequence[int]) -> tuple:
    """Divide by the content and make the leading entry positive."""
    g = 0
    for v in vals:
        g = gcd(g, v)
    if g == 0:
        return (), ()
    if vals[0] < 0:
        g = -g
    return tuple(cols), tuple(v // g for v in vals)


# --------------------------------------------------------------------------
# span basis


@dataclass(frozen=True)
class SpanBasis:
    """Row space of a matrix in integer reduced echelon form.

    ``rows[i]`` maps column -> integer, is primitive, and has the positive
    value ``rows[i][pivots[i]]`` at its pivot and zero at every other pivot.
    """

    ncols: int
    pivots: tuple
    rows: tuple
    method: str = "exact"

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _pivot_index(self) -> dict:
        idx = self.__dict__.get("_pidx")
        if idx is None:
            idx = {c: i for i, c in enumerate(self.pivots)}
            object.__setattr__(self, "_pidx", idx)
        return idx

    def residual(self, vec: dict) -> dict:
        """``vec`` minus its projection onto the span along pivot coordinates.

        Zero exactly when ``vec`` lies in the span.  Entries are Fractions only
        when row denominators force them.
        """
        pidx = self._pivot_index()
        used = [(pidx[c], v) for c, v in vec.items() if v and c in pidx]
        if not used:
            return {c: v for c, v in vec.items() if v}
        denom = 1
        for i, _ in used:
            denom = lcm(denom, self.rows[i][self.pivots[i]])
        acc = {c: v * denom for c, v in vec.items() if v}
        for i, coeff in used:
            row = self.rows[i]
            scale = coeff * (denom // row[self.pivots[i]])
            for c, w in row.items():
                nv = acc.get(c, 0) - scale * w
                if nv:
                    acc[c] = nv
                else:
                    acc.pop(c, None)
        if denom == 1:
            return acc
        return {c: Fraction(v, denom) for c, v in acc.items()}

    def contains(self, vec: dict) -> bool:
        return not self.residual(vec)

    def fraction_rows(self) -> list:
        out = []
        for c, row in zip(self.pivots, self.rows):
            d = row[c]
            out.append({k: Fraction(v, d) for k, v in row.items()})
        return out


def _basis_from_fraction_rows(ncols, pivots, frows, method) -> SpanBasis:
    rows = []
    for c, row in zip(pivots, frows):
        den = 1
        for v in row.values():
            den = lcm(den, Fraction(v).denominator)
        rows.append({k: int(Fraction(v) * den) for k, v in row.items() if v})
    return SpanBasis(ncols, tuple(pivots), tuple(rows), method)


# --------------------------------------------------------------------------
# exact route


def rref_exact(rows: Iterable, ncols: int) -> SpanBasis:
    """Fraction-free Gaussian elimination on integer sparse rows.

    ``rows`` holds ``(cols, vals)`` pairs or ``{col: int}`` dicts.
    """
    piv: dict = {}
    for r in rows:
        acc = dict(r) if isinstance(r, dict) else dict(zip(*r))
        acc = {c: v for c, v in acc.items() if v}
        while acc:
            c = min(acc)
            pr = piv.get(c)
            if pr is None:
                cols = sorted(acc)
                g = 0
                for k in cols:
                    g = gcd(g, acc[k])
                if acc[cols[0]] < 0:
                    g = -g
                piv[c] = {k: acc[k] // g for k in cols}
                break
            a, b = acc[c], pr[c]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            new = {k: v * fa for k, v in acc.items()}
            for k, w in pr.items():
                nv = new.get(k, 0) - fb * w
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            acc = new
    pivots = sorted(piv)
    done: dict = {}
    for c in reversed(pivots):
        acc = dict(piv[c])
        for k in sorted(acc):
            if k == c or k not in done or not acc.get(k):
                continue
            pr = done[k]
            a, b = acc[k], pr[k]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            acc = {kk: v * fa for kk, v in acc.items()}
            for kk, w in pr.items():
                nv = acc.get(kk, 0) - fb * w
                if nv:
                    acc[kk] = nv
                else:
                    acc.pop(kk, None)
        g = 0
        for v in acc.values():
            g = gcd(g, v)
        if acc[c] < 0:
            g = -g
        done[c] = {k: v // g for k, v in acc.items()}
    return SpanBasis(ncols, tuple(pivots), tuple(done[c] for c in pivots), "exact")


# --------------------------------------------------------------------------
# modular route


def rational_reconstruction(a: int, m: int):
    """The fraction ``n/d`` with ``n = a*d (mod m)``, ``|n|, d <= sqrt(m/2)``, or None."""
    a %= m
    bound = isqrt(m // 2)
    if a <= bound:
        return Fraction(a)
    if m - a <= bound:
        return Fraction(a - m)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _crt(a1: int, m1: int, a2: int, m2: int) -> int:
    return (a1 + m1 * ((a2 - a1) * pow(m1, -1, m2) % m2)) % (m1 * m2)


def _verify_rows(basis: SpanBasis, rows) -> bool:
    for r in rows:
        vec = dict(r) if isinstance(r, dict) else dict(zip(*r))
        if basis.residual(vec):
            return False
    return True


def rref_certified(rows: Sequence, ncols: int, backend: str | None = None,
                   primes: Sequence[int] = PRIMES) -> SpanBasis:
    """Exact row space via modular elimination plus exact verification.

    Falls back to :func:`rref_exact` when no prime combination yields a
    verifiable reconstruction.
    """
    rows = [r if not isinstance(r, dict) else sparse_row(r) for r in rows]
    best_piv = None
    residues = None  # list of {col: residue} aligned with best_piv
    modulus = 1
    for p in primes:
        piv, red = rref_mod(rows, ncols, p, backend)
        piv = tuple(piv)
        if best_piv is None or (-len(piv), piv) < (-len(best_piv), best_piv):
            # larger rank, or equal rank with earlier pivots: previous primes were unlucky
            best_piv = piv
            residues = [dict(zip(c, v)) for c, v in red]
            modulus = p
        elif piv != best_piv:
            continue
        else:
            merged = []
            for old, (c, v) in zip(residues, red):
                new = dict(zip(c, v))
                keys = old.keys() | new.keys()
                merged.append({k: _crt(old.get(k, 0), modulus, new.get(k, 0), p) for k in keys})
            residues = merged
            modulus *= p
        frows = []
        ok = True
        for res in residues:
            row = {}
            for k, v in res.items():
                if v == 0:
                    continue
                q = rational_reconstruction(v, modulus)
                if q is None:
                    ok = False
                    break
                row[k] = q
            if not ok:
                break
            frows.append(row)
        if not ok:
            continue
        basis = _basis_from_fraction_rows(ncols, best_piv, frows, "modular")
        if _verify_rows(basis, rows):
            return basis
        log.debug("reconstruction modulo %d primes failed verification", modulus.bit_length() // 31)
    log.warning("modular reconstruction failed; using fraction-free elimination")
    return rref_exact(rows, ncols)


def rank(rows: Sequence, ncols: int | None = None, method: str = "modular") -> int:
    """Exact rank over the rationals of a sparse integer matrix."""
    rows = [r if not isinstance(r, dict) else sparse_row(r) for r in rows]
    if ncols is None:
        ncols = 1 + max((c for cols, _ in rows for c in cols), default=-1)
    if method == "exact":
        return rref_exact(rows, ncols).rank
    if method == "modular":
        return rref_certified(rows, ncols).rank
    raise ValueError(f"unknown method {method!r}")
