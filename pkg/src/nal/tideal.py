"""Multihomogeneous components of T-ideals and exact membership.

Over a field of characteristic zero the T-ideal generated by a set ``S`` of
polynomials is generated, as a T-ideal, by the full multilinearizations of the
multihomogeneous components of ``S``.  For a multilinear ``g(x1..xk)`` the
component of multidegree ``md`` is then spanned by the expansions
``C[g(w1, .., wk)]`` with ``w_i`` monomials and ``C`` a one-hole context.

Such a pair ``(C, w)`` is exactly a monomial ``M`` of multidegree ``md``
together with a position in ``M`` whose subtree has the shape of one fixed
monomial of ``g``.  Walking every target monomial and every position therefore
enumerates each consequence once.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import linalg
from .freealgebra import MultiDegree, Poly, enumerate_monomials
from .linearization import full_multilinearize, multihomogeneous_components

__all__ = [
    "ComponentResult",
    "ConsequenceBasis",
    "MembershipVerdict",
    "TIdeal",
    "consequence_basis",
    "default_threads",
    "member",
    "rank",
]


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("NAL_THREADS", "1")))
    except ValueError:
        return 1


def _integral(p: Poly) -> list:
    """Terms of ``p`` scaled to coprime integers, in canonical order."""
    items = p.items()
    den = 1
    for _, c in items:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return [(m, int(c * den)) for m, c in items]


def _positions(m, path=()):
    """Yield ``(subtree, path)``; ``path`` lists ``(is_right, sibling)`` from the root."""
    yield m, path
    if not isinstance(m, str):
        left, right = m
        yield from _positions(left, path + ((False, right),))
        yield from _positions(right, path + ((True, left),))


def _plug(path, sub):
    for is_right, sibling in reversed(path):
        sub = (sibling, sub) if is_right else (sub, sibling)
    return sub


def _match(pattern, m, out: dict) -> bool:
    if isinstance(pattern, str):
        out[pattern] = m
        return True
    if isinstance(m, str):
        return False
    return _match(pattern[0], m[0], out) and _match(pattern[1], m[1], out)


def _instantiate(t, w: dict):
    if isinstance(t, str):
        return w[t]
    return (_instantiate(t[0], w), _instantiate(t[1], w))


@dataclass
class ConsequenceBasis:
    """Spanning rows of one multidegree component of a T-ideal.

    ``rows`` are sparse integer coordinate vectors over ``monomial_index``;
    the exact row space is computed on first use.
    """

    multidegree: MultiDegree
    monomial_index: tuple
    rows: list
    method: str = "modular"
    _span: linalg.SpanBasis | None = field(default=None, repr=False)

    @property
    def column(self) -> dict:
        col = self.__dict__.get("_column")
        if col is None:
            col = {m: i for i, m in enumerate(self.monomial_index)}
            self.__dict__["_column"] = col
        return col

    @property
    def span(self) -> linalg.SpanBasis:
        if self._span is None:
            n = len(self.monomial_index)
            if self.method == "exact":
                self._span = linalg.rref_exact(self.rows, n)
            else:
                self._span = linalg.rref_certified(self.rows, n)
        return self._span

    @property
    def rank(self) -> int:
        return self.span.rank

    @property
    def dimension(self) -> int:
        return len(self.monomial_index)

    def vector(self, p: Poly) -> dict:
        col = self.column
        out = {}
        for m, c in p._terms.items():
            try:
                out[col[m]] = c
            except KeyError:
                raise ValueError(f"term {m!r} is not of multidegree {self.multidegree}") from None
        return out

    def contains(self, p: Poly) -> bool:
        return self.span.contains(self.vector(p))

    def reduce(self, p: Poly) -> Poly:
        """Normal form of ``p`` modulo the component: supported on non-pivot monomials."""
        res = self.span.residual(self.vector(p))
        return Poly({self.monomial_index[c]: v for c, v in res.items()})

    def polys(self) -> list:
        return [Poly({self.monomial_index[c]: v for c, v in zip(*r)}) for r in self.rows]


class TIdeal:
    """T-ideal generated by ``generators``, explored one multidegree at a time.

    Components are cached, so many membership queries at one multidegree
    share a single elimination.
    """

    def __init__(self, generators: Iterable[Poly], method: str = "modular"):
        self.generators = [g for g in generators]
        if not self.generators:
            raise ValueError("a T-ideal needs at least one generator")
        if method not in ("modular", "exact"):
            raise ValueError(f"unknown method {method!r}")
        self.method = method
        seen = set()
        self.multilinear = []  # (terms with integer coefficients, pattern, degree)
        for g in self.generators:
            for comp in full_multilinearize(g).polys():
                if not comp or comp in seen or -comp in seen:
                    continue
                seen.add(comp)
                terms = _integral(comp)
                self.multilinear.append((terms, terms[0][0], comp.degree))
        self._cache: dict = {}

    @property
    def min_degree(self) -> int:
        return min((d for _, _, d in self.multilinear), default=0)

    def component(self, md: MultiDegree) -> ConsequenceBasis:
        got = self._cache.get(md)
        if got is None:
            got = self._build(md)
            self._cache[md] = got
        return got

    def _build(self, md: MultiDegree) -> ConsequenceBasis:
        if md.total < 1:
            raise ValueError("multidegree must have positive total degree")
        monos = enumerate_monomials(md)
        col = {m: i for i, m in enumerate(monos)}
        seen = set()
        rows = []
        n = md.total
        for terms, pattern, deg in self.multilinear:
            if deg > n:
                continue
            for target in monos:
                for sub, path in _positions(target):
                    w: dict = {}
                    if not _match(pattern, sub, w):
                        continue
                    acc: dict = {}
                    for t, c in terms:
                        j = col[_plug(path, _instantiate(t, w))]
                        v = acc.get(j, 0) + c
                        if v:
                            acc[j] = v
                        else:
                            del acc[j]
                    if not acc:
                        continue
                    cols, vals = linalg.primitive_row(*linalg.sparse_row(acc))
                    key = (cols, vals)
                    if key in seen:
                        continue
                    seen.add(key)
                    rows.append(key)
        rows.sort(key=lambda r: (len(r[0]), r[0][0]))
        return ConsequenceBasis(md, monos, rows, self.method)

    def contains(self, p: Poly) -> bool:
        return self.check(p).member

    def check(self, f: Poly) -> "MembershipVerdict":
        details = []
        member_all = True
        for md, part in multihomogeneous_components(f).items():
            basis = self.component(md)
            r = basis.rank
            inside = basis.contains(part)
            details.append(ComponentResult(md, r, r if inside else r + 1))
            member_all = member_all and inside
        return MembershipVerdict(member_all, tuple(details))

    def prepare(self, mds: Sequence[MultiDegree], threads: int | None = None) -> None:
        """Build and eliminate several components, in parallel when asked.

        The compiled kernel releases the GIL during elimination.
        """
        todo = [md for md in mds if md not in self._cache or self._cache[md]._span is None]
        threads = threads or default_threads()
        if threads <= 1 or len(todo) <= 1:
            for md in todo:
                self.component(md).span
            return
        bases = [self.component(md) for md in todo]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda b: b.span, bases))


@dataclass(frozen=True)
class ComponentResult:
    multidegree: MultiDegree
    rank_without: int
    rank_with: int

    @property
    def member(self) -> bool:
        return self.rank_without == self.rank_with


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    components: tuple

    def __bool__(self) -> bool:
        return self.member

    def summary(self) -> str:
        lines = ["member" if self.member else "not a member"]
        for c in self.components:
            flag = "ok" if c.member else "outside"
            lines.append(f"  {c.multidegree}: rank {c.rank_without} -> {c.rank_with} ({flag})")
        return "\n".join(lines)


def consequence_basis(S: Sequence[Poly], md: MultiDegree, method: str = "modular") -> ConsequenceBasis:
    if not S:
        raise ValueError("empty generating set")
    return TIdeal(S, method).component(md)


def member(f: Poly, S: Sequence[Poly] | TIdeal, method: str = "modular") -> MembershipVerdict:
    """Decide whether ``f`` lies in the T-ideal generated by ``S``."""
    if not f:
        raise ValueError("membership is asked of a nonzero polynomial")
    ideal = S if isinstance(S, TIdeal) else TIdeal(S, method)
    return ideal.check(f)


def rank(rows, ncols: int | None = None, method: str = "modular") -> int:
    return linalg.rank(rows, ncols, method)
