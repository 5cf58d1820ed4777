"""Named classes of algebras, each given by its defining identities."""
from __future__ import annotations

from dataclasses import dataclass

from .freealgebra import Poly, associator, jacobian, triple, variables

__all__ = ["VarietySpec", "get_variety", "identity", "list_varieties", "REGISTRY"]

a, b, c, d = variables("a b c d")


@dataclass(frozen=True)
class VarietySpec:
    name: str
    display: str
    identities: tuple  # ((label, Poly), ...)
    provenance: tuple  # one note per identity

    def __post_init__(self):
        if not self.identities:
            raise ValueError(f"variety {self.name!r} has no identities")
        labels = [lab for lab, _ in self.identities]
        if len(set(labels)) != len(labels):
            raise ValueError(f"variety {self.name!r} repeats a label")
        if len(self.provenance) != len(self.identities):
            raise ValueError(f"variety {self.name!r} needs one provenance note per identity")

    @property
    def polys(self) -> list:
        return [p for _, p in self.identities]


# identities shared between entries
ANTICOMMUTATIVE = a * b + b * a
LEIBNIZ = triple(a, b, c)
UNARY_LEIBNIZ_1 = triple(a, a, a)  # expands to (aa)a
UNARY_LEIBNIZ_2 = triple(a * a, a, a)  # equivalent to (aa)(aa) = 0
BINARY_LEIBNIZ_1 = triple(a, a, b)
BINARY_LEIBNIZ_2 = triple(a, b, a)
BINARY_LEIBNIZ_3 = triple(a, b, a * b)
# (ab)(ac) = ((ab)c)a + ((bc)a)a + ((ca)a)b
MALCEV = (a * b) * (a * c) - ((a * b) * c) * a - ((b * c) * a) * a - ((c * a) * a) * b
LEFT_ANTICOMMUTATIVE = (a * b) * c + (b * a) * c
DI_MALCEV = (
    a * (b * (c * d))
    - b * (c * (a * d))
    - c * ((a * b) * d)
    - (a * c) * (b * d)
    - (a * (b * c)) * d
)
BINARY_LIE_DIALGEBRA = (
    a * (b * (c * d))
    + a * (c * (b * d))
    - ((a * c) * b) * d
    - ((a * b) * c) * d
    - b * (a * (c * d))
    - c * (a * (b * d))
    + b * ((c * a) * d)
    + c * ((b * a) * d)
)

_PAPER = "primary"
_EXTERNAL = "external: standard Malcev identity, supplied independently"


def _spec(name, display, entries, notes=None) -> VarietySpec:
    notes = notes or (_PAPER,) * len(entries)
    return VarietySpec(name, display, tuple(entries), tuple(notes))


REGISTRY = {
    s.name: s
    for s in [
        _spec("lie", "Lie", [("ab+ba", ANTICOMMUTATIVE), ("Jac(a,b,c)", jacobian(a, b, c))]),
        _spec("binary-lie", "binary Lie", [("ab+ba", ANTICOMMUTATIVE), ("Jac(a,b,ab)", jacobian(a, b, a * b))]),
        _spec("anticommutative", "anticommutative (unary Lie)", [("ab+ba", ANTICOMMUTATIVE)]),
        _spec("malcev", "Malcev", [("ab+ba", ANTICOMMUTATIVE), ("(ab)(ac)=((ab)c)a+((bc)a)a+((ca)a)b", MALCEV)],
              (_PAPER, _EXTERNAL)),
        _spec("leibniz", "Leibniz", [("<a,b,c>", LEIBNIZ)]),
        _spec("unary-leibniz", "unary Leibniz", [("<a,a,a>", UNARY_LEIBNIZ_1), ("<aa,a,a>", UNARY_LEIBNIZ_2)]),
        _spec("binary-leibniz", "binary Leibniz",
              [("<a,a,b>", BINARY_LEIBNIZ_1), ("<a,b,a>", BINARY_LEIBNIZ_2), ("<a,b,ab>", BINARY_LEIBNIZ_3)]),
        _spec("di-malcev", "Malcev dialgebra",
              [("(ab)c+(ba)c", LEFT_ANTICOMMUTATIVE), ("di-Malcev", DI_MALCEV)]),
        _spec("binary-lie-dialgebra", "binary Lie dialgebra", [("binary-Lie-dialgebra", BINARY_LIE_DIALGEBRA)]),
        _spec("associative", "associative", [("(a,b,c)", associator(a, b, c))]),
        _spec("alternative", "alternative",
              [("(a,b,c)+(b,a,c)", associator(a, b, c) + associator(b, a, c)),
               ("(a,b,c)+(a,c,b)", associator(a, b, c) + associator(a, c, b))]),
        _spec("power-associative", "power-associative",
              [("(a,a,a)", associator(a, a, a)), ("(aa,a,a)", associator(a * a, a, a))]),
    ]
}


def list_varieties() -> list:
    return list(REGISTRY)


def get_variety(name: str) -> VarietySpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown variety {name!r}; known: {', '.join(REGISTRY)}") from None


def identity(variety: str, label: str) -> Poly:
    for lab, p in get_variety(variety).identities:
        if lab == label:
            return p
    raise KeyError(f"variety {variety!r} has no identity {label!r}")
