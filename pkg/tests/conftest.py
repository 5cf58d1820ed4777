from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from nal.freealgebra import Poly

# exact elimination times vary with the component size hypothesis happens to hit
settings.register_profile("default", deadline=None)
settings.load_profile("default")

LETTERS = ("x", "y", "z")


def monomials(letters=LETTERS, max_leaves=5):
    leaf = st.sampled_from(letters)
    return st.recursive(leaf, lambda kids: st.tuples(kids, kids), max_leaves=max_leaves)


coefficients = st.one_of(
    st.integers(-5, 5),
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)),
)


def polys(letters=LETTERS, max_terms=4, max_leaves=5):
    return st.dictionaries(monomials(letters, max_leaves), coefficients, max_size=max_terms).map(Poly)
