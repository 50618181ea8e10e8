import itertools

import pytest

from .. import fixtures
from ..insertion import PlacticBiword, phi
from ..exceptions import EmptyTableau, ShapeMismatch
from ..tableau import (
    SSYT,
    Shape,
    classical_knuth_neighbors,
    colread,
    column_insert,
    insert_word,
    knuth_class_words,
    reverse_column_insert,
    reverse_row_insert,
    row_insert,
    rowread,
    semistandard_tableaux,
    split_first_column,
    split_first_row,
)

T = fixtures.ABSORB_TABLEAU


def test_insert_word():
    assert insert_word(fixtures.ABSORB_WORD) == SSYT([[1, 1, 2, 3], [2, 3, 4], [3]])
    assert insert_word(fixtures.ABSORB_WORD + (2,)) == fixtures.ABSORBED_TABLEAU
    assert row_insert(SSYT(), 5) == (SSYT([[5]]), (1, 1))


def test_invalid_tableaux():
    with pytest.raises(ShapeMismatch):
        SSYT([[2, 1]])
    with pytest.raises(ShapeMismatch):
        SSYT([[1, 2], [1, 3]])
    with pytest.raises(ShapeMismatch):
        Shape([1, 2])


def test_reading_words():
    assert colread(T) == (3, 2, 1, 3, 1, 4, 2, 3)
    assert colread(SSYT([[1, 2, 2]])) == (1, 2, 2)
    assert colread(SSYT([[1], [3], [4]])) == (4, 3, 1)
    assert insert_word(colread(T)) == T
    assert insert_word(rowread(T)) == T


def test_split_first_column():
    rest, column = split_first_column(T)
    assert column == (4, 3, 1)
    assert rest == SSYT([[1, 2, 2], [3, 3]])
    assert insert_word(rowread(rest) + column) == T

    assert split_first_column(SSYT([[2]])) == (SSYT(), (2,))
    with pytest.raises(EmptyTableau):
        split_first_column(SSYT())


def test_split_first_row():
    row, rest = split_first_row(T)
    assert row == (1, 3, 3, 4)
    assert rest == SSYT([[1, 2, 3], [2]])

    rebuilt = rest
    for a in reversed(row):
        rebuilt, _ = column_insert(a, rebuilt)
    assert rebuilt == T

    assert split_first_row(SSYT([[2]])) == ((2,), SSYT())


def test_reverse_insertion_undoes_insertion():
    for shape in [(2, 1), (3, 1), (2, 2)]:
        for tableau in semistandard_tableaux(shape, 3):
            for a in range(1, 5):
                bigger, cell = row_insert(tableau, a)
                assert reverse_row_insert(bigger, cell) == (tableau, a)
                bigger, cell = column_insert(a, tableau)
                assert reverse_column_insert(bigger, cell) == (tableau, a)


def test_row_and_column_insertion_commute():
    tableaux = [SSYT()]
    for size in range(1, 5):
        for shape in [(size,), (size - 1, 1), (size - 2, 2), (size - 2, 1, 1)]:
            if all(part >= 0 for part in shape) and list(shape) == sorted(shape, reverse=True):
                tableaux.extend(semistandard_tableaux(shape, 3))

    for tableau in tableaux:
        for a, b in itertools.product(range(1, 5), repeat=2):
            left, _ = row_insert(column_insert(b, tableau)[0], a)
            right, _ = column_insert(b, row_insert(tableau, a)[0])
            assert left == right


def test_classical_knuth():
    assert classical_knuth_neighbors((2, 1, 2)) == {(2, 2, 1)}
    assert classical_knuth_neighbors((1, 2, 3)) == set()


def test_knuth_class_shares_insertion_tableau():
    words = knuth_class_words(fixtures.ABSORB_WORD)
    assert len(words) > 1
    assert {insert_word(word) for word in words} == {T}


def test_semistandard_tableaux_counts():
    # Kostka sums: s_(2,1)(1,1,1) = 8
    assert len(list(semistandard_tableaux((2, 1), 3))) == 8
    assert len(list(semistandard_tableaux((1, 1, 1, 1), 3))) == 0


def test_add_bottom_strip():
    """
    Left inserting b_i ... b_1 over k + 1 into a word over k, with each letter raising
    code(k + 1) by one, lengthens exactly the first i columns of its tableau.
    """
    checked = 0
    for k in (1, 2):
        for length in range(1, 4):
            for word in itertools.product(range(1, k + 1), repeat=length):
                columns = tuple(insert_word(word).shape.conjugate)
                Q = PlacticBiword.k_biword(word, k)
                for l in range(1, len(columns)):
                    for strip in itertools.product(range(1, k + 2), repeat=l):
                        prefixes = [strip[l - i :] for i in range(1, l + 1)]
                        perms = [phi(PlacticBiword.k_biword(b, k + 1) + Q).perm for b in prefixes]
                        if any(p.code_at(k + 1) != i for i, p in enumerate(perms, start=1)):
                            continue
                        for i, b in enumerate(prefixes, start=1):
                            checked += 1
                            grown = tuple(c + 1 for c in columns[:i]) + columns[i:]
                            assert tuple(insert_word(b + word).shape.conjugate) == grown
    assert checked > 0
