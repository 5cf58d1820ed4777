"""Partial linearization (differential substitution) and full multilinearization."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial, prod
from string import ascii_lowercase

from .freealgebra import MultiDegree, Poly, _norm, leaves, multidegree, substitute, var

__all__ = [
    "LinearizedFamily",
    "canonical_letters",
    "differential_substitution",
    "equivalent_up_to_renaming",
    "full_multilinearize",
    "multihomogeneous_components",
    "multilinearize_component",
    "partial_linearize",
    "restitute",
]


def _replace_leaf(m, index: int, repl):
    """Replace the ``index``-th leaf (left to right) of ``m`` by the monomial ``repl``."""
    if isinstance(m, str):
        return repl
    left, right = m
    nl = len(leaves(left))
    if index < nl:
        return (_replace_leaf(left, index, repl), right)
    return (left, _replace_leaf(right, index - nl, repl))


def differential_substitution(p: Poly, x: str, q: Poly | str) -> Poly:
    """Sum over every single occurrence of ``x`` in ``p`` replaced by ``q``.

    A monomial with ``k`` occurrences of ``x`` contributes ``k`` terms; the
    result is linear in ``q``.
    """
    if isinstance(q, str):
        q = var(q)
    acc: dict = {}
    for m, c in p._terms.items():
        for i, leaf in enumerate(leaves(m)):
            if leaf != x:
                continue
            for qm, qc in q._terms.items():
                key = _replace_leaf(m, i, qm)
                v = acc.get(key, 0) + c * qc
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
    return Poly({m: c for m, c in acc.items()})


def partial_linearize(p: Poly, x: str, y: str | Poly) -> Poly:
    """The partial linearization ``Delta_{x -> y}``; ``y`` may be a polynomial."""
    return differential_substitution(p, x, y)


def multihomogeneous_components(p: Poly) -> dict:
    """Split ``p`` by multidegree; the components sum back to ``p``."""
    parts: dict = {}
    for m, c in p._terms.items():
        parts.setdefault(multidegree(m), {})[m] = c
    return {md: Poly._raw(terms) for md, terms in sorted(parts.items())}


def canonical_letters(n: int) -> list:
    if n <= len(ascii_lowercase):
        return list(ascii_lowercase[:n])
    return [f"v{i}" for i in range(1, n + 1)]


def multilinearize_component(p: Poly) -> tuple:
    """Fully multilinearize a multihomogeneous polynomial.

    Returns ``(poly, renaming)`` where ``renaming`` maps each canonical letter
    to ``(source variable, copy index)``.  Copies of a variable of degree ``d``
    are introduced by ``d - 1`` successive fresh-variable linearizations, so
    every distinct labelling of the occurrences appears exactly once.
    """
    mds = p.multidegrees()
    if len(mds) > 1:
        raise ValueError("polynomial is not multihomogeneous")
    if not mds:
        return Poly.zero(), {}
    md = mds[0]
    cur = p
    copies = []
    for v, d in md.counts:
        copies.append((v, 1, v))
        for i in range(2, d + 1):
            fresh = f"{v}#{i}"
            cur = differential_substitution(cur, v, fresh)
            copies.append((v, i, fresh))
    letters = canonical_letters(len(copies))
    sigma = {name: var(letter) for letter, (_, _, name) in zip(letters, copies)}
    renaming = {letter: (src, i) for letter, (src, i, _) in zip(letters, copies)}
    return substitute(cur, sigma), renaming


@dataclass(frozen=True)
class LinearizedFamily:
    """Full multilinearization of ``source``, one entry per multihomogeneous component.

    ``components`` and ``renamings`` are keyed by the source multidegree.
    """

    source: Poly
    components: dict = field(default_factory=dict)
    renamings: dict = field(default_factory=dict)

    def polys(self) -> list:
        return [self.components[md] for md in sorted(self.components)]


def full_multilinearize(p: Poly) -> LinearizedFamily:
    comps, names = {}, {}
    for md, part in multihomogeneous_components(p).items():
        lin, ren = multilinearize_component(part)
        comps[md] = lin
        names[md] = ren
    return LinearizedFamily(p, comps, names)


def restitute(component: Poly, renaming: dict) -> Poly:
    """Identify every copy back with its source variable."""
    return substitute(component, {letter: var(src) for letter, (src, _) in renaming.items()})


def restitution_factor(md: MultiDegree) -> int:
    return prod(factorial(c) for _, c in md.counts)


def equivalent_up_to_renaming(p: Poly, q: Poly, scaling: bool = True) -> bool:
    """True when ``q`` is obtained from ``p`` by a bijective renaming of
    variables and, if ``scaling``, one overall nonzero rational factor."""
    pv, qv = p.variables(), q.variables()
    if len(pv) != len(qv) or len(p) != len(q):
        return False
    if not p:
        return True
    for perm in permutations(qv):
        r = substitute(p, {a: var(b) for a, b in zip(pv, perm)})
        if r == q:
            return True
        if scaling:
            m0 = next(iter(r._terms))
            if m0 not in q._terms:
                continue
            factor = _norm(Fraction(q._terms[m0]) / r._terms[m0])
            if r.scale(factor) == q:
                return True
    return False

