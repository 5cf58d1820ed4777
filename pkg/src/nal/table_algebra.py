"""Finite-dimensional algebras given by structure constants over the rationals.

Identity checking is exact: an identity holds in an algebra over a field of
characteristic zero iff every multihomogeneous component does, iff the full
multilinearization of each component vanishes on all tuples of basis vectors.
The multilinear evaluation is done tensor-wise with integer arithmetic
(``int64`` when a coefficient bound proves it safe, Python integers otherwise).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import linalg
from .freealgebra import Poly, _norm
from .linearization import full_multilinearize

__all__ = [
    "AlgebraError",
    "AlgebraTable",
    "Subspace",
    "Vector",
    "Verdict",
    "Witness",
    "direct_sum",
    "evaluate",
    "is_left_central",
    "make_algebra",
    "nilpotency_index",
    "power_series",
    "satisfies_identity",
    "satisfies_variety",
    "subalgebra_closure",
]


class AlgebraError(ValueError):
    """Malformed multiplication table or mismatched algebra elements."""


def _fmt(c) -> str:
    return str(_norm(c))


class Vector:
    """Element of an :class:`AlgebraTable`; ``u * v`` is the algebra product."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "AlgebraTable", coords: Sequence):
        if len(coords) != algebra.dim:
            raise AlgebraError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = tuple(_norm(c) for c in coords)

    def _check(self, other: "Vector") -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Vector":
        return Vector(self.algebra, [-a for a in self.coords])

    def scale(self, c) -> "Vector":
        c = _norm(c)
        return Vector(self.algebra, [c * a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Vector):
            return self.algebra.product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Vector):
            return self.algebra == other.algebra and self.coords == other.coords
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        parts = [f"{_fmt(c)}*{name}" for c, name in zip(self.coords, self.algebra.basis_names) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Vector({self})"


class AlgebraTable:
    """Structure constants ``constants[i][j]`` = coordinates of ``e_i e_j``."""

    def __init__(self, basis_names: Sequence[str], constants, name: str = ""):
        names = list(basis_names)
        dim = len(names)
        if dim < 1:
            raise AlgebraError("dimension must be positive")
        if len(set(names)) != dim:
            raise AlgebraError("basis names must be distinct")
        rows = []
        for i in range(dim):
            row = []
            for j in range(dim):
                vec = tuple(_norm(c) for c in constants[i][j])
                if len(vec) != dim:
                    raise AlgebraError(f"product {names[i]}{names[j]} has wrong length")
                row.append(vec)
            rows.append(tuple(row))
        self.name = name
        self.basis_names = tuple(names)
        self.constants = tuple(rows)
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return self.basis_names == other.basis_names and self.constants == other.constants

    def __hash__(self) -> int:
        return hash((self.basis_names, self.constants))

    def __repr__(self) -> str:
        return f"AlgebraTable({self.name or '?'}, dim={self.dim})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown basis name {name!r}") from None

    def basis(self, which) -> Vector:
        i = which if isinstance(which, int) else self.index(which)
        return Vector(self, [1 if k == i else 0 for k in range(self.dim)])

    def basis_vectors(self) -> list:
        return [self.basis(i) for i in range(self.dim)]

    def zero(self) -> Vector:
        return Vector(self, [0] * self.dim)

    def element(self, coeffs: Mapping[str, object]) -> Vector:
        coords = [0] * self.dim
        for name, c in coeffs.items():
            coords[self.index(name)] += _norm(c)
        return Vector(self, coords)

    def product(self, u: Vector, v: Vector) -> Vector:
        u._check(v)
        out = [0] * self.dim
        for i, a in enumerate(u.coords):
            if not a:
                continue
            row = self.constants[i]
            for j, b in enumerate(v.coords):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] += ab * c
        return Vector(self, out)

    def entries(self) -> list:
        """Nonzero products as ``(left, right, {basis: coeff})``."""
        out = []
        for i, li in enumerate(self.basis_names):
            for j, rj in enumerate(self.basis_names):
                vec = self.constants[i][j]
                if any(vec):
                    out.append((li, rj, {self.basis_names[k]: c for k, c in enumerate(vec) if c}))
        return out

    def renamed(self, names: Sequence[str], name: str | None = None) -> "AlgebraTable":
        return AlgebraTable(names, self.constants, self.name if name is None else name)

    def with_product(self, left: str, right: str, result: Mapping[str, object]) -> "AlgebraTable":
        """Copy with one product overwritten (used for mutation tests)."""
        consts = [list(r) for r in self.constants]
        vec = [0] * self.dim
        for n, c in result.items():
            vec[self.index(n)] = _norm(c)
        consts[self.index(left)][self.index(right)] = tuple(vec)
        return AlgebraTable(self.basis_names, consts, self.name)

    def integer_constants(self) -> tuple:
        """``(C, D)`` with ``C`` an integer array and ``constants == C / D``."""
        den = 1
        for row in self.constants:
            for vec in row:
                for c in vec:
                    if isinstance(c, Fraction):
                        den = lcm(den, c.denominator)
        arr = [[[int(c * den) for c in vec] for vec in row] for row in self.constants]
        return arr, den


def make_algebra(dim: int, basis_names: Sequence[str], product_entries: Iterable,
                 skew_fill: bool = False, name: str = "") -> AlgebraTable:
    """Build an algebra from listed products; unlisted products are zero.

    ``product_entries`` yields ``(left, right, result)`` with ``result`` a
    mapping basis name -> rational.  With ``skew_fill`` every listed
    ``e_i e_j`` (``i != j``) also defines ``e_j e_i = -e_i e_j``.
    """
    names = list(basis_names)
    if len(names) != dim:
        raise AlgebraError(f"dim is {dim} but {len(names)} basis names were given")
    if len(set(names)) != dim:
        raise AlgebraError("basis names must be distinct")
    index = {n: i for i, n in enumerate(names)}

    def idx(n):
        try:
            return index[n]
        except KeyError:
            raise AlgebraError(f"unknown basis name {n!r}") from None

    given: dict = {}
    for left, right, result in product_entries:
        key = (idx(left), idx(right))
        vec = [0] * dim
        for n, c in result.items():
            vec[idx(n)] += _norm(c)
        if key in given:
            raise AlgebraError(f"duplicate product entry {left}*{right}")
        given[key] = tuple(vec)

    table = {k: v for k, v in given.items()}
    if skew_fill:
        for (i, j), vec in given.items():
            if i == j:
                continue
            neg = tuple(-c for c in vec)
            other = given.get((j, i))
            if other is not None and other != neg:
                raise AlgebraError(
                    f"entries {names[i]}*{names[j]} and {names[j]}*{names[i]} contradict skew symmetry")
            table[(j, i)] = neg

    zero = tuple([0] * dim)
    consts = [[table.get((i, j), zero) for j in range(dim)] for i in range(dim)]
    return AlgebraTable(names, consts, name)


def direct_sum(a1: AlgebraTable, a2: AlgebraTable, name: str | None = None) -> AlgebraTable:
    """Block-diagonal sum.  Clashing basis names get ``_1``/``_2`` suffixes."""
    n1, n2 = a1.basis_names, a2.basis_names
    if set(n1) & set(n2):
        n1 = tuple(f"{n}_1" for n in n1)
        n2 = tuple(f"{n}_2" for n in n2)
    dim = a1.dim + a2.dim
    zero = (0,) * dim
    consts = [[zero] * dim for _ in range(dim)]
    for i in range(a1.dim):
        for j in range(a1.dim):
            consts[i][j] = tuple(a1.constants[i][j]) + (0,) * a2.dim
    for i in range(a2.dim):
        for j in range(a2.dim):
            consts[a1.dim + i][a1.dim + j] = (0,) * a1.dim + tuple(a2.constants[i][j])
    if name is None:
        name = f"{a1.name}+{a2.name}" if a1.name and a2.name else ""
    return AlgebraTable(n1 + n2, consts, name)


# --------------------------------------------------------------------------
# evaluation


def evaluate(p: Poly, assignment: Mapping[str, Vector]) -> Vector:
    """Homomorphic image of ``p`` under ``variable -> vector``."""
    algebra = None
    for v in assignment.values():
        if algebra is None:
            algebra = v.algebra
        elif v.algebra != algebra:
            raise AlgebraError("assignment mixes elements of different algebras")
    cache: dict = {}

    def value(m):
        got = cache.get(m)
        if got is None:
            if isinstance(m, str):
                try:
                    got = assignment[m]
                except KeyError:
                    raise AlgebraError(f"variable {m!r} is not assigned") from None
            else:
                got = value(m[0]) * value(m[1])
            cache[m] = got
        return got

    if algebra is None:
        if p:
            raise AlgebraError(f"variable {p.variables()[0]!r} is not assigned")
        raise AlgebraError("cannot evaluate without an algebra")
    out = algebra.zero()
    for m, c in p._terms.items():
        out = out + value(m).scale(c)
    return out


_AXES = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _multilinear_values(alg: AlgebraTable, poly: Poly, names: Sequence[str]):
    """Tensor ``T[i_1..i_k, :]`` proportional (by a positive integer) to
    ``poly(e_{i_1}, .., e_{i_k})`` for a multilinear ``poly`` in ``names``."""
    C, _ = alg.integer_constants()
    dim = alg.dim
    cmax = max((abs(c) for row in C for vec in row for c in vec), default=0)
    den = 1
    for _, c in poly._terms.items():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    coeffs = {m: int(c * den) for m, c in poly._terms.items()}

    def bound(m):
        if isinstance(m, str):
            return 1
        return dim * dim * cmax * bound(m[0]) * bound(m[1])

    total = sum(abs(c) * bound(m) for m, c in coeffs.items())
    dtype = np.int64 if total < 2 ** 62 else object
    Carr = np.array(C, dtype=dtype)
    eye = np.eye(dim, dtype=dtype)
    cache: dict = {}

    def tensor(m):
        got = cache.get(m)
        if got is not None:
            return got
        if isinstance(m, str):
            got = ((m,), eye)
        else:
            lv, L = tensor(m[0])
            rv, R = tensor(m[1])
            ls = _AXES[: len(lv)]
            rs = _AXES[len(lv): len(lv) + len(rv)]
            out_vars = lv + rv
            arr = np.einsum(f"{ls}X,{rs}Y,XYZ->{ls}{rs}Z", L, R, Carr)
            order = sorted(range(len(out_vars)), key=lambda i: out_vars[i])
            arr = np.transpose(arr, order + [len(out_vars)])
            got = (tuple(out_vars[i] for i in order), arr)
        cache[m] = got
        return got

    result = np.zeros((dim,) * len(names) + (dim,), dtype=dtype)
    target = tuple(sorted(names))
    for m, c in coeffs.items():
        vs, arr = tensor(m)
        if vs != target:
            raise ValueError("polynomial is not multilinear in the given variables")
        result = result + c * arr
    # reorder axes from sorted-variable order to the requested order
    perm = [target.index(v) for v in names] + [len(names)]
    return np.transpose(result, perm)


@dataclass(frozen=True)
class Witness:
    identity: str
    component: Poly
    assignment: tuple  # ((variable, basis name), ...)
    value: Vector

    def reevaluate(self) -> Vector:
        alg = self.value.algebra
        return evaluate(self.component, {v: alg.basis(b) for v, b in self.assignment})

    def __str__(self) -> str:
        args = ", ".join(f"{v}={b}" for v, b in self.assignment)
        return f"{self.identity}: {self.component} at ({args}) = {self.value}"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds


def satisfies_identity(alg: AlgebraTable, p: Poly, name: str | None = None) -> Verdict:
    """Decide whether ``p = 0`` holds identically in ``alg``."""
    label = name or str(p)
    family = full_multilinearize(p)
    for md in sorted(family.components):
        comp = family.components[md]
        if not comp:
            continue
        names = comp.variables()
        values = _multilinear_values(alg, comp, names)
        nonzero = np.argwhere(np.any(values != 0, axis=-1))
        if len(nonzero):
            idx = tuple(int(i) for i in nonzero[0])
            assignment = tuple((v, alg.basis_names[i]) for v, i in zip(names, idx))
            value = evaluate(comp, {v: alg.basis(i) for v, i in zip(names, idx)})
            return Verdict(False, Witness(label, comp, assignment, value))
    return Verdict(True)


def satisfies_variety(alg: AlgebraTable, variety) -> Verdict:
    """Conjunction of :func:`satisfies_identity` over a variety's identities."""
    from .varieties import VarietySpec, get_variety

    spec = variety if isinstance(variety, VarietySpec) else get_variety(variety)
    for label, poly in spec.identities:
        verdict = satisfies_identity(alg, poly, f"{spec.name}: {label}")
        if not verdict.holds:
            return verdict
    return Verdict(True)


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace of an algebra, basis kept in reduced row echelon form."""

    dim_ambient: int
    basis: tuple  # RREF rows of coordinates

    @classmethod
    def span(cls, dim: int, vectors: Iterable) -> "Subspace":
        rows = []
        for v in vectors:
            coords = v.coords if isinstance(v, Vector) else tuple(v)
            den = 1
            for c in coords:
                if isinstance(c, Fraction):
                    den = lcm(den, c.denominator)
            ints = {k: int(c * den) for k, c in enumerate(coords) if c}
            if ints:
                rows.append(ints)
        basis = linalg.rref_exact(rows, dim)
        out = []
        for frow in basis.fraction_rows():
            out.append(tuple(_norm(frow.get(k, 0)) for k in range(dim)))
        return cls(dim, tuple(out))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self, alg: AlgebraTable) -> list:
        return [Vector(alg, row) for row in self.basis]

    def contains(self, v) -> bool:
        coords = v.coords if isinstance(v, Vector) else tuple(v)
        return Subspace.span(self.dim_ambient, list(self.basis) + [coords]).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return Subspace.span(self.dim_ambient, self.basis + other.basis).dim == other.dim

    def describe(self, alg: AlgebraTable) -> str:
        if not self.basis:
            return "0"
        return "span(" + ", ".join(str(v) for v in self.vectors(alg)) + ")"


def _products(alg: AlgebraTable, s1: Subspace, s2: Subspace) -> list:
    return [u * v for u in s1.vectors(alg) for v in s2.vectors(alg)]


def power_series(alg: AlgebraTable) -> list:
    """``[A^1, A^2, ...]`` with ``A^n = sum_{i+j=n} A^i A^j``.

    Stops at the first zero power, or once ``A^m = ... = A^{2m}``, after
    which the series is constant (every product of total weight ``n >= 2m``
    has a factor of weight at least ``m``).
    """
    powers = [Subspace.span(alg.dim, alg.basis_vectors())]
    while True:
        n = len(powers) + 1
        vecs = []
        for i in range(1, n):
            vecs.extend(_products(alg, powers[i - 1], powers[n - i - 1]))
        nxt = Subspace.span(alg.dim, vecs)
        powers.append(nxt)
        if nxt.dim == 0:
            return powers
        m = next(k for k in range(len(powers)) if powers[k] == nxt) + 1
        if len(powers) >= 2 * m:
            return powers


def nilpotency_index(alg: AlgebraTable) -> int | None:
    powers = power_series(alg)
    return len(powers) if powers[-1].dim == 0 else None


def subalgebra_closure(alg: AlgebraTable, generators: Sequence[Vector]) -> Subspace:
    """Smallest subspace containing ``generators`` and closed under the product."""
    for g in generators:
        if g.algebra != alg:
            raise AlgebraError("generator belongs to a different algebra")
    cur = Subspace.span(alg.dim, generators)
    while True:
        vs = cur.vectors(alg)
        nxt = Subspace.span(alg.dim, vs + [u * v for u in vs for v in vs])
        if nxt.dim == cur.dim:
            return cur
        cur = nxt


def is_left_central(alg: AlgebraTable, v: Vector) -> bool:
    """``v w = 0`` for every basis vector ``w``."""
    return all((v * w).is_zero() for w in alg.basis_vectors())
