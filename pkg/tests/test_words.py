import pytest

from peakalg.algebra import AlgElem
from peakalg.maps import interior_peak_generator, x0_generator
from peakalg.words import (
    Alphabet,
    TensorElem,
    act,
    act_word,
    check_action_algebra_morphism,
    check_bracket_identity,
    check_convolution,
    check_right_action,
    check_symmetrizer_identity,
    convolve_actions,
    jordan_bracket,
    nested_bracket,
    nested_symmetrizer,
    symmetrizer,
)

AB = Alphabet(("a", "b", "c"), {"a": "b", "b": "a", "c": "c"})
TRIV = Alphabet(("a", "b", "c"))


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(("a", "b"), {"a": "b", "b": "c"})
    with pytest.raises(ValueError):
        Alphabet(("a", "b"), {"a": "a"})


def test_identity_acts_trivially():
    t = TensorElem.word(("a", "b", "c"))
    assert act(t, (1, 2, 3), AB) == t


def test_barred_reversal_action():
    # moving by the all-barred reversal applies the bar map entrywise
    got = act(TensorElem.word(("a", "b")), (-2, -1), AB)
    assert got == TensorElem.word(("a", "b"))  # bar(b), bar(a) = a, b
    got2 = act(TensorElem.word(("a", "c")), (-2, -1), AB)
    assert got2 == TensorElem.word(("c", "b"))


def test_length_mismatch():
    with pytest.raises(ValueError):
        act_word(("a",), (1, 2), AB)


def test_symmetrizer_examples():
    t = TensorElem.word(("a",))
    assert symmetrizer(t, AB) == TensorElem(1, {("a",): 1, ("b",): 1})
    assert act(t, x0_generator(1), AB) == TensorElem(1, {("a",): 1, ("b",): 1})
    # a palindromic self-barred word doubles
    t2 = TensorElem.word(("c", "c"))
    assert symmetrizer(t2, AB) == t2.scale(2)


def test_bracket_examples():
    a, b = TensorElem.word(("a",)), TensorElem.word(("b",))
    assert jordan_bracket(a, b) == TensorElem(2, {("a", "b"): 1, ("b", "a"): 1})
    got = act(TensorElem.word(("a", "b", "c")), interior_peak_generator(3), TRIV)
    want = TensorElem(
        3,
        {("a", "b", "c"): 1, ("b", "a", "c"): 1, ("c", "a", "b"): 1, ("c", "b", "a"): 1},
    )
    assert got == want
    assert nested_bracket(("a", "b", "c")) == want


def test_symmetrizer_identity_lengths():
    for n in (1, 2, 3, 4):
        check_symmetrizer_identity(n, AB)


def test_bracket_identity_lengths():
    for n in (1, 2, 3, 4, 5):
        check_bracket_identity(n, TRIV)
    with pytest.raises(ValueError):
        check_bracket_identity(2, AB)


def test_doubling_under_trivial_involution():
    for word in TRIV.words(3):
        assert nested_symmetrizer(word, TRIV) == nested_bracket(word).scale(2)


def test_right_action_law():
    check_right_action(2, AB)
    check_right_action(3, AB)


def test_action_is_algebra_morphism():
    check_action_algebra_morphism(2, AB)


def test_convolution():
    check_convolution(1, 1, AB)
    check_convolution(1, 2, AB)
    # explicit smallest case: two singles convolve to both interleavings
    got = convolve_actions((1,), (1,), ("a", "b"), AB)
    assert got == TensorElem(2, {("a", "b"): 1, ("b", "a"): 1})


def test_linearity_of_action():
    t = TensorElem.word(("a", "b"))
    x = AlgElem.monomial("B", 2, (2, 1), 2) + AlgElem.monomial("B", 2, (-1, 2))
    got = act(t, x, AB)
    want = act(t, (2, 1), AB).scale(2) + act(t, (-1, 2), AB)
    assert got == want
