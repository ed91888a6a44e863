import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitwreath import pcgroup
from unitwreath.pcgroup import (
    ConsistencyError,
    ConstraintError,
    ParseError,
    load,
    load_file,
)

D8XC2 = """group D8xC2
gens a c b z
pow a = c
conj b a = b c
"""


def elt(group, word):
    return group.parse_word(word)


class TestLoad:
    def test_single_generator_group(self):
        group = load("group C2\ngens a\n")
        assert group.order == 2

    def test_d8xc2_corpus_file(self, corpus_dir):
        group = load_file(corpus_dir / "o16" / "D8xC2.pc2")
        assert group.order == 16
        assert group.pres.gens == ("a", "c", "b", "z")

    def test_conjugation_word_below_conjugating_index(self):
        bad = "group X\ngens a b c\nconj c b = c a\n"
        with pytest.raises(ConstraintError):
            load(bad)

    def test_power_word_not_above_index(self):
        bad = "group X\ngens a b\npow b = a\n"
        with pytest.raises(ConstraintError):
            load(bad)

    def test_inconsistent_presentation(self):
        # b^a = b^2 = 1 collapses b, so only 2 of 4 normal forms are realized
        bad = "group X\ngens a b\nconj b a = b b\n"
        with pytest.raises(ConsistencyError):
            load(bad)

    @pytest.mark.parametrize(
        "text",
        [
            "gens a\n",  # missing group line
            "group X\n",  # missing gens
            "group X\ngens a a\n",  # duplicate generator
            "group X\ngens a\npow q = a\n",  # unknown generator
            "group X\ngens a\nfrob a\n",  # unknown keyword
            "group X\ngens a b\npow a = b\npow a = b\n",  # duplicate relation
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            load(text)

    def test_serialize_round_trip(self, d8xc2):
        text = pcgroup.serialize_presentation(d8xc2.pres)
        again = load(text)
        assert again.cayley == d8xc2.cayley


class TestArithmetic:
    def test_identity_law(self, d8xc2):
        for x in d8xc2.elements():
            assert d8xc2.multiply(x, 0) == x
            assert d8xc2.multiply(0, x) == x

    def test_square_of_a_is_c(self, d8xc2):
        a, c = elt(d8xc2, "a"), elt(d8xc2, "c")
        assert d8xc2.multiply(a, a) == c

    def test_noncommuting_pair(self, d8xc2):
        a, b = elt(d8xc2, "a"), elt(d8xc2, "b")
        assert d8xc2.multiply(a, b) != d8xc2.multiply(b, a)

    def test_associativity_exhaustive(self, d8xc2):
        for x, y, w in itertools.product(d8xc2.elements(), repeat=3):
            assert d8xc2.multiply(d8xc2.multiply(x, y), w) == d8xc2.multiply(
                x, d8xc2.multiply(y, w)
            )

    def test_inverses(self, d8xc2):
        for x in d8xc2.elements():
            assert d8xc2.multiply(x, d8xc2.inverse(x)) == 0

    def test_cayley_matches_collection(self, d8xc2):
        for x in d8xc2.elements():
            for y in d8xc2.elements():
                assert d8xc2.cayley[x][y] == d8xc2._collect(x, y)

    def test_orders(self, d8xc2):
        assert d8xc2.element_order(0) == 1
        assert d8xc2.element_order(elt(d8xc2, "a")) == 4
        assert d8xc2.element_order(elt(d8xc2, "z")) == 2

    def test_orders_divide_group_order(self, d8xc2):
        for x in d8xc2.elements():
            assert d8xc2.order % d8xc2.element_order(x) == 0

    def test_commutator_examples(self, d8xc2):
        a, b, c, z = (elt(d8xc2, w) for w in "abcz")
        assert d8xc2.commutator(b, a) == c
        assert d8xc2.commutator(a, 0) == 0
        for g in d8xc2.elements():
            assert d8xc2.commutator(z, g) == 0

    def test_conjugate_commutator_identity(self, d8xc2):
        # b^g = b * (b, g) for every pair, the identity the orbit relies on
        for b in d8xc2.elements():
            for g in d8xc2.elements():
                assert d8xc2.conjugate(b, g) == d8xc2.multiply(
                    b, d8xc2.commutator(b, g)
                )


class TestSubgroups:
    def test_derived_subgroup(self, d8xc2, d8):
        assert d8xc2.derived_subgroup().order == 2
        assert d8.derived_subgroup().order == 2
        abelian = load("group C4\ngens a b\npow a = b\n")
        assert abelian.derived_subgroup().elements == (0,)

    def test_center(self, d8xc2, d8):
        assert d8.center().order == 2
        center = d8xc2.center()
        assert center.order == 4
        z = elt(d8xc2, "z")
        assert z in center.elements

    def test_center_of_abelian_group(self):
        group = load("group C2xC2\ngens a b\n")
        assert group.center().order == 4

    def test_subgroup_closure(self, d8xc2):
        a, b = elt(d8xc2, "a"), elt(d8xc2, "b")
        assert d8xc2.subgroup_closure([]).elements == (0,)
        assert d8xc2.subgroup_closure([a]).order == 4
        assert d8xc2.subgroup_closure([a, b]).order == 8

    def test_closure_is_conjugation_stable_for_derived_and_center(self, d8xc2):
        for sub in (d8xc2.derived_subgroup(), d8xc2.center()):
            members = set(sub.elements)
            for x in members:
                for g in d8xc2.elements():
                    assert d8xc2.conjugate(x, g) in members

    def test_is_cyclic(self, d8xc2):
        c, z = elt(d8xc2, "c"), elt(d8xc2, "z")
        trivial = d8xc2.subgroup_closure([])
        assert d8xc2.is_cyclic(trivial) == (True, 0)
        ok, witness = d8xc2.is_cyclic(d8xc2.subgroup_closure([c]))
        assert ok and witness == c
        klein = d8xc2.subgroup_closure([c, z])
        assert klein.order == 4
        assert d8xc2.is_cyclic(klein) == (False, None)


class TestWords:
    def test_word_str_and_parse(self, d8xc2):
        assert d8xc2.word_str(0) == "1"
        x = d8xc2.parse_word("b*z")
        assert d8xc2.word_str(x) == "b·z"
        assert d8xc2.parse_word("b·z") == x
        assert d8xc2.parse_word("1") == 0

    def test_parse_word_reduces(self, d8xc2):
        assert d8xc2.parse_word("a*a") == d8xc2.parse_word("c")


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associativity_random_order_32(corpus32, data):
    group = data.draw(st.sampled_from(corpus32))
    x = data.draw(st.integers(0, group.order - 1))
    y = data.draw(st.integers(0, group.order - 1))
    w = data.draw(st.integers(0, group.order - 1))
    assert group.multiply(group.multiply(x, y), w) == group.multiply(
        x, group.multiply(y, w)
    )
