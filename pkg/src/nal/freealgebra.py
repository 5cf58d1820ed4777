"""Free magma monomials and rational polynomials in the free nonassociative algebra.

A monomial is a planar binary tree: a leaf is a variable name (``str``) and an
inner node is a pair ``(left, right)``.  Plain tuples keep monomials hashable,
immutable and cheap to build, which matters when the T-ideal engine expands
tens of thousands of consequences.

Polynomials (:class:`Poly`) map monomials to exact rational coefficients
(``int`` when integral, :class:`fractions.Fraction` otherwise).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from math import comb, factorial
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

Monomial = Union[str, tuple]
Coefficient = Union[int, Fraction]

__all__ = [
    "Monomial",
    "MultiDegree",
    "Poly",
    "associator",
    "catalan",
    "combine",
    "degree",
    "enumerate_monomials",
    "is_leaf",
    "jacobian",
    "leaves",
    "monomial_count",
    "monomial_key",
    "monomial_str",
    "mul",
    "multidegree",
    "substitute",
    "triple",
    "var",
    "variables",
]


def _norm(c) -> Coefficient:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        c = Fraction(c.numerator, c.denominator)
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


# --------------------------------------------------------------------------
# monomials


def is_leaf(m: Monomial) -> bool:
    return isinstance(m, str)


@lru_cache(maxsize=None)
def degree(m: Monomial) -> int:
    if isinstance(m, str):
        return 1
    return degree(m[0]) + degree(m[1])


def leaves(m: Monomial) -> tuple:
    """Variables of ``m`` read left to right."""
    out = []
    stack = [m]
    while stack:
        x = stack.pop()
        if isinstance(x, str):
            out.append(x)
        else:
            stack.append(x[1])
            stack.append(x[0])
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_key(m: Monomial) -> tuple:
    """Sort key realising the canonical total order on monomials.

    Total degree first, then the multidegree (as sorted ``(var, count)``
    pairs), then structure: a leaf precedes a node, leaves compare by name and
    nodes compare left child then right child, recursively.
    """
    if isinstance(m, str):
        return (1, ((m, 1),), (0, m))
    kl, kr = monomial_key(m[0]), monomial_key(m[1])
    counts = Counter(dict(kl[1]))
    counts.update(dict(kr[1]))
    return (kl[0] + kr[0], tuple(sorted(counts.items())), (1, kl, kr))


def monomial_str(m: Monomial) -> str:
    """Render in the expression syntax: ``(a*b)*c``, ``a*(b*c)``."""
    if isinstance(m, str):
        return m
    left, right = m
    ls = monomial_str(left) if isinstance(left, str) else f"({monomial_str(left)})"
    rs = monomial_str(right) if isinstance(right, str) else f"({monomial_str(right)})"
    return f"{ls}*{rs}"


# --------------------------------------------------------------------------
# multidegrees


@dataclass(frozen=True, order=True)
class MultiDegree:
    """Per-variable occurrence counts, stored as sorted ``(var, count)`` pairs."""

    counts: tuple

    def __post_init__(self):
        for v, c in self.counts:
            if c <= 0:
                raise ValueError(f"multidegree entry {v}:{c} must be positive")

    @classmethod
    def of(cls, mapping: Mapping[str, int] | None = None, **kw: int) -> "MultiDegree":
        d = dict(mapping or {})
        d.update(kw)
        return cls(tuple(sorted((v, c) for v, c in d.items() if c)))

    @classmethod
    def parse(cls, text: str) -> "MultiDegree":
        """Parse ``"x=2,y=1"`` (also accepts ``x:2``)."""
        d = {}
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            sep = "=" if "=" in part else ":"
            name, _, count = part.partition(sep)
            if not name or not count:
                raise ValueError(f"bad multidegree entry {part!r}")
            d[name] = d.get(name, 0) + int(count)
        if not d:
            raise ValueError("empty multidegree")
        return cls.of(d)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def vars(self) -> tuple:
        return tuple(v for v, _ in self.counts)

    def __getitem__(self, v: str) -> int:
        for name, c in self.counts:
            if name == v:
                return c
        return 0

    def as_dict(self) -> dict:
        return dict(self.counts)

    def __add__(self, other: "MultiDegree") -> "MultiDegree":
        d = Counter(self.as_dict())
        d.update(other.as_dict())
        return MultiDegree.of(d)

    def is_multilinear(self) -> bool:
        return all(c == 1 for _, c in self.counts)

    def __str__(self) -> str:
        return "{" + ",".join(f"{v}:{c}" for v, c in self.counts) + "}"


@lru_cache(maxsize=None)
def multidegree(m: Monomial) -> MultiDegree:
    return MultiDegree(monomial_key(m)[1])


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def monomial_count(md: MultiDegree) -> int:
    """Closed form ``Catalan(n-1) * n! / prod(counts!)``."""
    n = md.total
    multinomial = factorial(n)
    for _, c in md.counts:
        multinomial //= factorial(c)
    return catalan(n - 1) * multinomial


@lru_cache(maxsize=None)
def _enumerate(counts: tuple) -> tuple:
    total = sum(c for _, c in counts)
    if total == 1:
        return (counts[0][0],)
    names = [v for v, _ in counts]
    out = []
    for split in cartesian(*(range(c + 1) for _, c in counts)):
        k = sum(split)
        if k == 0 or k == total:
            continue
        left = tuple((v, s) for v, s in zip(names, split) if s)
        right = tuple((v, c - s) for (v, c), s in zip(counts, split) if c - s)
        for lm in _enumerate(left):
            for rm in _enumerate(right):
                out.append((lm, rm))
    out.sort(key=monomial_key)
    return tuple(out)


def enumerate_monomials(md: MultiDegree) -> tuple:
    """All monomials of multidegree ``md`` in canonical order."""
    if md.total < 1:
        raise ValueError("total degree must be at least 1")
    return _enumerate(md.counts)


# --------------------------------------------------------------------------
# polynomials


class Poly:
    """Element of the free nonassociative algebra over the rationals.

    Immutable.  ``p * q`` is the (nonassociative) product when ``q`` is a
    :class:`Poly` and scalar multiplication when ``q`` is a rational.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _norm(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, m: Monomial, coeff: object = 1) -> "Poly":
        return cls({m: coeff})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    # -- inspection --------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return dict(self._terms)

    def items(self) -> list:
        """Terms in canonical monomial order."""
        return sorted(self._terms.items(), key=lambda kv: monomial_key(kv[0]))

    def coeff(self, m: Monomial) -> Coefficient:
        return self._terms.get(m, 0)

    def monomials(self) -> list:
        return sorted(self._terms, key=monomial_key)

    def variables(self) -> tuple:
        vs = set()
        for m in self._terms:
            vs.update(v for v, _ in multidegree(m).counts)
        return tuple(sorted(vs))

    @property
    def degree(self) -> int:
        return max((degree(m) for m in self._terms), default=0)

    def multidegrees(self) -> list:
        return sorted({multidegree(m) for m in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    def scale(self, c) -> "Poly":
        c = _norm(c)
        if not c:
            return Poly.zero()
        return Poly._raw({m: _norm(c * v) for m, v in self._terms.items()})

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return combine(1, self, 1, other)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return combine(1, self, -1, other)

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        if isinstance(other, (Rational, str)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Rational, str)):
            return self.scale(other)
        return NotImplemented

    # -- display -------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            body = monomial_str(m)
            if a != 1:
                body = f"{a}*{body}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def var(name: str) -> Poly:
    if not name:
        raise ValueError("variable names must be nonempty")
    return Poly._raw({name: 1})


def variables(names: str | Iterable[str]) -> tuple:
    """``variables("a b c")`` -> ``(a, b, c)`` as polynomials."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return tuple(var(n) for n in names)


def combine(c1, p: Poly, c2, q: Poly) -> Poly:
    """``c1*p + c2*q`` with zero terms pruned."""
    c1, c2 = _norm(c1), _norm(c2)
    out = {}
    if c1:
        for m, c in p._terms.items():
            out[m] = c1 * c
    if c2:
        for m, c in q._terms.items():
            v = out.get(m, 0) + c2 * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return Poly._raw({m: _norm(c) for m, c in out.items() if c})


def mul(p: Poly, q: Poly) -> Poly:
    """Bilinear extension of the magma product ``(u, v) -> (u, v)``."""
    out = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            out[(m1, m2)] = _norm(c1 * c2)
    return Poly._raw(out)


def substitute(p: Poly, sigma: Mapping[str, Poly]) -> Poly:
    """Apply the algebra endomorphism sending each variable ``v`` to ``sigma[v]``."""
    cache: dict = {}

    def image(m):
        got = cache.get(m)
        if got is not None:
            return got
        if isinstance(m, str):
            try:
                got = sigma[m]
            except KeyError:
                raise KeyError(f"variable {m!r} has no substitution") from None
            if not isinstance(got, Poly):
                got = var(got) if isinstance(got, str) else Poly(got)
        else:
            got = mul(image(m[0]), image(m[1]))
        cache[m] = got
        return got

    acc: dict = {}
    for m, c in p._terms.items():
        for mm, cc in image(m)._terms.items():
            v = acc.get(mm, 0) + c * cc
            if v:
                acc[mm] = v
            else:
                acc.pop(mm, None)
    return Poly._raw({m: _norm(c) for m, c in acc.items()})


def triple(p: Poly, q: Poly, r: Poly) -> Poly:
    """``<p,q,r> = (pq)r - p(qr) + q(pr)``; vanishes identically in left Leibniz algebras."""
    return (p * q) * r - p * (q * r) + q * (p * r)


def jacobian(p: Poly, q: Poly, r: Poly) -> Poly:
    """``Jac(p,q,r) = (pq)r + (qr)p + (rp)q``."""
    return (p * q) * r + (q * r) * p + (r * p) * q


def associator(p: Poly, q: Poly, r: Poly) -> Poly:
    """``(p,q,r) = (pq)r - p(qr)``."""
    return (p * q) * r - p * (q * r)
