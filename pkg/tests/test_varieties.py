import pytest

from nal.freealgebra import triple, variables
from nal.tideal import TIdeal
from nal.varieties import REGISTRY, get_variety, identity, list_varieties

a, b, c = variables("a b c")

# arrows of the inclusion diagram whose both ends are registered
ARROWS = [
    ("lie", "malcev"),
    ("malcev", "binary-lie"),
    ("binary-lie", "anticommutative"),
    ("leibniz", "binary-leibniz"),
    ("binary-leibniz", "unary-leibniz"),
    ("lie", "leibniz"),
    ("binary-lie", "binary-leibniz"),
    ("anticommutative", "unary-leibniz"),
    ("malcev", "di-malcev"),
    ("leibniz", "di-malcev"),
    ("di-malcev", "binary-lie-dialgebra"),
    ("associative", "alternative"),
    ("alternative", "power-associative"),
]


def test_registry_contents():
    assert len(get_variety("binary-leibniz").identities) == 3
    assert len(get_variety("unary-leibniz").identities) == 2
    assert set(list_varieties()) >= {"lie", "binary-lie", "anticommutative", "malcev", "leibniz", "unary-leibniz",
                                      "binary-leibniz", "di-malcev", "binary-lie-dialgebra"}


def test_lie_and_binary_lie_differ_only_in_the_jacobian_arguments():
    lie, blie = get_variety("lie"), get_variety("binary-lie")
    assert lie.identities[0] == blie.identities[0]
    assert lie.identities[1][1] != blie.identities[1][1]


def test_unknown_name():
    with pytest.raises(KeyError, match="nonexistent"):
        get_variety("nonexistent")
    with pytest.raises(KeyError):
        identity("leibniz", "nope")


def test_malcev_provenance_is_marked_external():
    notes = get_variety("malcev").provenance
    assert notes[0] == "primary" and notes[1].startswith("external")


def test_labels_are_unique_and_nonempty():
    for spec in REGISTRY.values():
        labels = [lab for lab, _ in spec.identities]
        assert labels and len(set(labels)) == len(labels)
        assert all(p for _, p in spec.identities)


def test_unary_leibniz_identities():
    assert identity("unary-leibniz", "<a,a,a>") == (a * a) * a
    assert identity("binary-leibniz", "<a,b,ab>") == triple(a, b, a * b)


@pytest.mark.parametrize("small,large", ARROWS, ids=[f"{s}<{l}" for s, l in ARROWS])
def test_diagram_soundness(small, large):
    ideal = TIdeal(get_variety(small).polys)
    for label, p in get_variety(large).identities:
        assert ideal.contains(p), f"{label} does not follow from {small}"


def test_leibniz_does_not_imply_anticommutativity():
    assert not TIdeal(get_variety("leibniz").polys).contains(a * b + b * a)
