"""Connected-sum constructions and closure-preserving obfuscation."""
import random

import pytest

from cryptocomb.braids import BraidWord, invert, is_knot, random_knot_braid
from cryptocomb.compose import VARIANTS, compose, connecting_word, obfuscate
from cryptocomb.errors import NotAKnot
from cryptocomb.jones import jones_polynomial
from cryptocomb.laurent import LaurentPoly

TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))
UNKNOT = BraidWord(2, (1,))


def jones(b, cap=10):
    return jones_polynomial(b, strand_cap=cap).polynomial


def test_connecting_word_shape():
    c = connecting_word(2, 2)
    assert c == BraidWord(3, (2, 1))
    assert connecting_word(1, 4) == BraidWord(4)
    assert connecting_word(3, 2) == BraidWord(4, (3, 2, 1, 3, 2, 1))


def test_shift_variant_word_layout():
    out = compose(TREFOIL, TREFOIL)
    assert out == BraidWord(3, (1, 1, 1, 2, 2, 2))


def test_granny_knot_polynomial_is_square():
    granny = compose(TREFOIL, TREFOIL)
    assert jones(granny) == jones(TREFOIL) * jones(TREFOIL)


def test_square_knot_mixes_mirrors():
    square = compose(TREFOIL, invert(TREFOIL))
    expected = jones(TREFOIL) * jones(TREFOIL).mirror()
    assert jones(square) == expected


@pytest.mark.parametrize("variant", VARIANTS)
def test_multiplicativity_all_variants(variant):
    pairs = [
        (TREFOIL, TREFOIL),
        (TREFOIL, FIGURE_EIGHT),
        (FIGURE_EIGHT, TREFOIL),
        (UNKNOT, FIGURE_EIGHT),
        (FIGURE_EIGHT, UNKNOT),
    ]
    for b1, b2 in pairs:
        out = compose(b1, b2, variant)
        assert is_knot(out)
        assert out.strands == b1.strands + b2.strands - 1
        assert jones(out) == jones(b1) * jones(b2)


@pytest.mark.parametrize("variant", VARIANTS)
def test_multiplicativity_random_pairs(variant):
    rng = random.Random(13)
    for _ in range(8):
        b1 = random_knot_braid(rng.randint(2, 3), rng.randint(3, 8), rng)
        b2 = random_knot_braid(rng.randint(2, 3), rng.randint(3, 8), rng)
        out = compose(b1, b2, variant)
        assert jones(out) == jones(b1) * jones(b2)


def test_variants_agree_on_the_knot():
    for b1, b2 in ((TREFOIL, FIGURE_EIGHT), (FIGURE_EIGHT, TREFOIL)):
        results = {v: jones(compose(b1, b2, v)) for v in VARIANTS}
        assert len(set(results.values())) == 1


def test_composition_with_one_strand_unknot():
    point = BraidWord(1)
    assert compose(point, TREFOIL) == TREFOIL
    assert jones(compose(TREFOIL, point)) == jones(TREFOIL)


def test_associativity_of_the_knot():
    a, b, c = TREFOIL, FIGURE_EIGHT, invert(TREFOIL)
    left = compose(compose(a, b), c)
    right = compose(a, compose(b, c))
    assert left.strands == right.strands == 5
    assert jones(left) == jones(right) == jones(a) * jones(b) * jones(c)


def test_split_at_positions():
    for split_at in range(len(TREFOIL.word) + 1):
        out = compose(TREFOIL, FIGURE_EIGHT, "split", split_at=split_at)
        assert jones(out) == jones(TREFOIL) * jones(FIGURE_EIGHT)
    with pytest.raises(ValueError):
        compose(TREFOIL, FIGURE_EIGHT, "split", split_at=7)


def test_compose_rejects_links():
    hopf = BraidWord(2, (1, 1))
    with pytest.raises(NotAKnot):
        compose(hopf, TREFOIL)
    with pytest.raises(NotAKnot):
        compose(TREFOIL, hopf)
    with pytest.raises(ValueError):
        compose(TREFOIL, TREFOIL, "weld")


def test_obfuscate_preserves_polynomial():
    rng = random.Random(31)
    for b in (TREFOIL, FIGURE_EIGHT, compose(TREFOIL, FIGURE_EIGHT)):
        v = jones(b)
        for seed in range(6):
            out = obfuscate(b, 10, seed, max_strands=b.strands + 2)
            assert is_knot(out)
            assert out.strands <= b.strands + 2
            assert jones(out) == v
        long_run = obfuscate(b, 40, rng, max_strands=8)
        assert jones(long_run) == v


def test_obfuscate_deterministic_and_usually_different():
    a = obfuscate(TREFOIL, 12, 5, max_strands=4)
    b = obfuscate(TREFOIL, 12, 5, max_strands=4)
    assert a == b
    words = {obfuscate(TREFOIL, 12, s, max_strands=4).word for s in range(8)}
    assert len(words) > 1


def test_obfuscate_zero_moves_is_identity():
    assert obfuscate(TREFOIL, 0, 1) == TREFOIL
    one_strand = BraidWord(1)
    assert obfuscate(one_strand, 5, 1) == one_strand


def test_obfuscate_respects_strand_ceiling():
    for seed in range(10):
        out = obfuscate(TREFOIL, 25, seed, max_strands=3)
        assert out.strands <= 3
        assert jones(out) == jones(TREFOIL)
