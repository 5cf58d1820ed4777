"""Normal forms in the free left-Leibniz algebra.

The Leibniz identity ``(ab)c = a(bc) - b(ac)`` read left to right is a
rewrite rule ``(u v) w -> u (v w) - v (u w)``.  Irreducible monomials are the
right-normed ones, ``a1(a2(...(a_{n-1} a_n)...))``, which form a basis of the
free left-Leibniz algebra.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .freealgebra import MultiDegree, Poly, leaves

__all__ = [
    "RightNormedWord",
    "find_redex",
    "is_right_normed",
    "normal_form",
    "reachable_normal_forms",
    "redexes",
    "rewrite_at",
    "right_normed_basis",
    "termination_measure",
    "word_to_monomial",
]

RightNormedWord = tuple  # letters (a1, ..., an) standing for a1(a2(...(a_{n-1}a_n)))


def is_right_normed(m) -> bool:
    while not isinstance(m, str):
        if not isinstance(m[0], str):
            return False
        m = m[1]
    return True


def word_to_monomial(word: Sequence[str]):
    if not word:
        raise ValueError("empty word")
    m = word[-1]
    for x in reversed(word[:-1]):
        m = (x, m)
    return m


def monomial_to_word(m) -> RightNormedWord:
    if not is_right_normed(m):
        raise ValueError(f"{m!r} is not right-normed")
    return leaves(m)


def redexes(m, path=()):
    """Positions (as tuples of 0/1 child indices) of every subterm ``(uv)w``."""
    if isinstance(m, str):
        return []
    out = []
    if not isinstance(m[0], str):
        out.append(path)
    out.extend(redexes(m[0], path + (0,)))
    out.extend(redexes(m[1], path + (1,)))
    return out


def find_redex(m, path=()):
    """Innermost-leftmost redex position, or ``None`` if ``m`` is right-normed."""
    if isinstance(m, str):
        return None
    hit = find_redex(m[0], path + (0,))
    if hit is not None:
        return hit
    hit = find_redex(m[1], path + (1,))
    if hit is not None:
        return hit
    return path if not isinstance(m[0], str) else None


def _at(m, path):
    for i in path:
        m = m[i]
    return m


def _put(m, path, sub):
    if not path:
        return sub
    i = path[0]
    if i == 0:
        return (_put(m[0], path[1:], sub), m[1])
    return (m[0], _put(m[1], path[1:], sub))


def rewrite_at(m, path) -> Poly:
    """One application of ``(uv)w -> u(vw) - v(uw)`` at ``path``."""
    (u, v), w = _at(m, path)
    return Poly({_put(m, path, (u, (v, w))): 1}) - Poly({_put(m, path, (v, (u, w))): 1})


@lru_cache(maxsize=None)
def _nf_monomial(m) -> Poly:
    pos = find_redex(m)
    if pos is None:
        return Poly({m: 1})
    out: dict = {}
    for mm, c in rewrite_at(m, pos)._terms.items():
        for k, v in _nf_monomial(mm)._terms.items():
            out[k] = out.get(k, 0) + c * v
    return Poly(out)


def normal_form(p: Poly) -> Poly:
    """Rewrite every monomial at its innermost-leftmost redex until right-normed."""
    out: dict = {}
    for m, c in p._terms.items():
        for k, v in _nf_monomial(m)._terms.items():
            out[k] = out.get(k, 0) + c * v
    return Poly(out)


def termination_measure(m) -> int:
    """Sum over inner nodes of (leaves in the left subtree - 1); each rewrite lowers it."""
    if isinstance(m, str):
        return 0
    return len(leaves(m[0])) - 1 + termination_measure(m[0]) + termination_measure(m[1])


@lru_cache(maxsize=None)
def reachable_normal_forms(m) -> frozenset:
    """Every result of every maximal rewrite sequence starting at ``m``.

    Rewriting acts on one monomial at a time, so the results from a
    polynomial are the sums of independent choices for its monomials.
    """
    sites = redexes(m)
    if not sites:
        return frozenset([Poly({m: 1})])
    results = set()
    for pos in sites:
        partial = {Poly.zero()}
        for mm, c in rewrite_at(m, pos)._terms.items():
            choices = reachable_normal_forms(mm)
            partial = {acc + q.scale(c) for acc in partial for q in choices}
        results |= partial
    return frozenset(results)


def right_normed_basis(md: MultiDegree) -> list:
    """Right-normed words of multidegree ``md``: distinct letter sequences, sorted."""
    letters = [v for v, c in md.counts for _ in range(c)]
    if not letters:
        raise ValueError("empty multidegree")
    return sorted(set(permutations(letters)))
