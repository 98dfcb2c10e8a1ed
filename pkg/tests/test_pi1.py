"""Seifert presentations, fiber words, and Todd-Coxeter enumeration."""

import itertools
import math

import pytest

from spinecheck import (
    NotCoprime,
    Presentation,
    abelianization_is_trivial,
    brieskorn_presentation,
    fiber_word,
    normal_generation_check,
    seifert_data,
    todd_coxeter,
)
from spinecheck.intmat import smith_diagonal
from spinecheck.pi1 import exponent_matrix, free_reduce


def coprime_triples(limit=11):
    return [
        t
        for t in itertools.combinations(range(2, limit + 1), 3)
        if all(math.gcd(a, b) == 1 for a, b in itertools.combinations(t, 2))
    ]


# Seifert data


def seifert_determinant(data):
    (p, p1), (q, q1), (r, r1) = data.legs
    return data.e * p * q * r - (p1 * q * r + p * q1 * r + p * q * r1)


@pytest.mark.parametrize("triple", [(2, 3, 5), (2, 3, 7), (3, 4, 5), (1, 1, 1)])
def test_seifert_data_determinant(triple):
    data = seifert_data(*triple)
    assert abs(seifert_determinant(data)) == 1
    for (a, b) in data.legs:
        assert 0 <= b < max(a, 1)


def test_seifert_235_values():
    data = seifert_data(2, 3, 5)
    assert data.legs == ((2, 1), (3, 1), (5, 1))
    # 30 e - (15 p' + 10 q' + 6 r') = 30 - 31 = -1
    assert seifert_determinant(data) == -1


def test_seifert_unit_leg_is_trivial():
    data = seifert_data(1, 3, 5)
    assert data.legs[0] == (1, 0)


def test_seifert_rejects_noncoprime():
    with pytest.raises(NotCoprime):
        seifert_data(2, 4, 5)


def test_seifert_data_validates_determinant():
    from spinecheck import SeifertData

    with pytest.raises(ValueError, match="determinant"):
        SeifertData(e=0, legs=((2, 1), (3, 1), (5, 1)))


# fiber words


def test_fiber_word_leg_2_1():
    data = seifert_data(2, 3, 5)
    assert fiber_word(data, 1) == (1, 4)  # x h: |1*2 - 1*1| = 1


def test_fiber_word_trivial_leg():
    data = seifert_data(1, 2, 3)
    assert fiber_word(data, 1) == (4,)  # p = 1, p' = 0: the word is h


def test_fiber_word_leg_3_2():
    from spinecheck import SeifertData

    # 2*60 - (2*20 + 3*15 + 3*12) = -1: a homology sphere with leg (3, 2)
    data = SeifertData(e=2, legs=((3, 2), (4, 3), (5, 3)))
    word = fiber_word(data, 1)
    assert word == (1, 4)  # a = 1, b = 1: |1*3 - 1*2| = 1


@pytest.mark.parametrize("triple", [(2, 3, 5), (3, 4, 5), (2, 5, 7)])
@pytest.mark.parametrize("leg", [1, 2, 3])
def test_fiber_word_satisfies_identity(triple, leg):
    data = seifert_data(*triple)
    p, p1 = data.legs[leg - 1]
    word = fiber_word(data, leg)
    gen = (1, 2, 3)[leg - 1]
    a = sum(1 for letter in word if letter == gen)
    b = sum(1 for letter in word if letter == 4) - sum(
        1 for letter in word if letter == -4
    )
    assert abs(b * p - a * p1) == 1


@pytest.mark.parametrize("triple", [(2, 3, 5), (3, 4, 5), (2, 5, 9)])
def test_fiber_word_snf_echo(triple):
    """The x,h exponent block of (leg relator, fiber word) is unimodular:
    its Smith form is diag(1, 1)."""
    data = seifert_data(*triple)
    p, p1 = data.legs[0]
    word = fiber_word(data, 1)
    a = sum(1 for letter in word if letter == 1)
    b = sum(1 for letter in word if letter == 4)
    assert smith_diagonal([[p, p1], [a, b]]) == [1, 1]


# presentations


def test_brieskorn_presentation_shape():
    pres = brieskorn_presentation(seifert_data(2, 3, 5))
    assert pres.generators == ("x", "y", "z", "h")
    assert len(pres.relators) == 7
    assert pres.relators[3] == (1, 1, 4)  # x^2 h
    assert pres.relators[6] == (1, 2, 3, 4)  # x y z h^e with e = 1


def test_presentation_free_reduction():
    pres = Presentation(("a",), ((1, -1, 1),))
    assert pres.relators == ((1,),)
    assert free_reduce((1, 2, -2, -1)) == ()


def test_presentation_rejects_bad_letters():
    with pytest.raises(ValueError):
        Presentation(("a",), ((2,),))


def test_word_str():
    pres = brieskorn_presentation(seifert_data(2, 3, 5))
    assert pres.word_str((1, 1, 4)) == "x^2 h"
    assert pres.word_str((1, -4, -4)) == "x h^-2"
    assert pres.word_str(()) == "1"


def test_exponent_matrix():
    pres = brieskorn_presentation(seifert_data(2, 3, 5))
    rows = exponent_matrix(pres)
    assert rows[0] == [0, 0, 0, 0]  # commutator abelianizes to nothing
    assert rows[3] == [2, 0, 0, 1]
    assert rows[6] == [1, 1, 1, 1]


@pytest.mark.parametrize("triple", coprime_triples(9))
def test_abelianization_trivial(triple):
    pres = brieskorn_presentation(seifert_data(*triple))
    assert abelianization_is_trivial(pres)


def test_abelianization_nontrivial_example():
    assert not abelianization_is_trivial(Presentation(("g",), ((1, 1, 1),)))


# Todd-Coxeter


def test_cyclic_group():
    result = todd_coxeter(Presentation(("g",), ((1, 1, 1),)))
    assert result.complete and result.cosets == 3


def test_symmetric_group_s3():
    pres = Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * 3))
    assert todd_coxeter(pres).cosets == 6


def test_alternating_group_a4():
    pres = Presentation(("a", "b"), ((1,) * 3, (2,) * 3, (1, 2) * 2))
    assert todd_coxeter(pres).cosets == 12


def test_subgroup_index():
    pres = Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * 3))
    result = todd_coxeter(pres, subgroup_words=((1,),))
    assert result.complete and result.cosets == 3


def test_free_group_overflows():
    pres = Presentation(("a", "b"), ())
    result = todd_coxeter(pres, limit=64)
    assert not result.complete
    assert result.cosets == 64
    assert result.table is None


def test_table_is_a_valid_action():
    pres = Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * 3))
    result = todd_coxeter(pres)
    size = result.cosets
    for col in range(4):
        column = [row[col] for row in result.table]
        assert sorted(column) == list(range(size))
    # inverse columns really are inverse permutations
    for gen in range(2):
        fwd = [row[2 * gen] for row in result.table]
        back = [row[2 * gen + 1] for row in result.table]
        assert all(back[fwd[i]] == i for i in range(size))


def test_enumeration_deterministic():
    pres = brieskorn_presentation(seifert_data(2, 3, 5))
    first = todd_coxeter(pres.adjoin((4,)))
    second = todd_coxeter(pres.adjoin((4,)))
    assert first == second


def test_poincare_sphere_group_order():
    """The (2,3,5) Brieskorn group is the binary icosahedral group."""
    result = todd_coxeter(brieskorn_presentation(seifert_data(2, 3, 5)))
    assert result.complete and result.cosets == 120


def test_sigma_111_is_trivial():
    result = todd_coxeter(brieskorn_presentation(seifert_data(1, 1, 1)))
    assert result.complete and result.cosets == 1


def test_quotient_by_fiber_is_trivial():
    data = seifert_data(2, 3, 5)
    pres = brieskorn_presentation(data)
    result = todd_coxeter(pres.adjoin(fiber_word(data, 1)))
    assert result.complete and result.cosets == 1


def cayley_closure_size(table, ngens):
    """Close the generator permutations of a coset table under
    composition, starting from the identity."""
    size = len(table)
    gens = [tuple(row[2 * g] for row in table) for g in range(ngens)]
    identity = tuple(range(size))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for perm in frontier:
            for gen in gens:
                prod = tuple(gen[p] for p in perm)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return len(seen)


def test_central_quotient_is_order_60_with_cayley_check():
    data = seifert_data(2, 3, 5)
    result = todd_coxeter(brieskorn_presentation(data).adjoin((4,)))
    assert result.complete and result.cosets == 60
    # on the trivial subgroup the table is the regular action, so the
    # closure of the generator permutations has exactly the group order
    assert cayley_closure_size(result.table, 4) == 60


def test_normal_generation_basic_cases():
    assert normal_generation_check(2, 3, 5, 1) is True
    assert normal_generation_check(2, 3, 7, 3) is True
    assert normal_generation_check(3, 4, 5, 2) is True


def test_normal_generation_overflow_is_indeterminate():
    # an absurdly small limit cannot close the table: must report None
    assert normal_generation_check(2, 3, 5, 1, limit=2) is None


def test_normal_generation_rejects_bad_leg():
    with pytest.raises(ValueError):
        fiber_word(seifert_data(2, 3, 5), 4)
