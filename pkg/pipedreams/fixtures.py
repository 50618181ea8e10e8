"""
Worked examples for pi = 13574862, used as regression fixtures and by `verify examples`.
"""
from .insertion import PlacticBiword, phi
from .permutation import DecoratedChain, Permutation
from .tableau import SSYT

PI = Permutation.parse("13574862")

MAXWORD = PlacticBiword.from_rows(
    (7, 6, 5, 4, 2, 1, 2, 1, 3, 2),
    (7, 7, 7, 7, 7, 7, 6, 6, 4, 4),
)

# 12346875, a common misprint for the fourth permutation, is not one transposition
# from its neighbours; 12346785 is the cover meant
MAXWORD_CHAIN = DecoratedChain.from_perms(
    [
        Permutation.parse(p)
        for p in (
            "12345678 12345687 12345786 12346785 12356784 12456783 "
            "13456782 13456872 13457862 13475862 13574862"
        ).split()
    ],
    (7, 7, 7, 7, 7, 7, 6, 6, 4, 4),
)

MINWORD = PlacticBiword.from_rows(
    (7, 2, 6, 5, 1, 2, 4, 1, 3, 2),
    (7, 6, 6, 5, 4, 4, 4, 3, 3, 2),
)

MINWORD_CHAIN = DecoratedChain.from_perms(
    [
        Permutation.parse(p)
        for p in (
            "12345678 13245678 13425678 13524678 13542678 13562478 "
            "13572468 13574268 13574628 13574826 13574862"
        ).split()
    ],
    (2, 3, 3, 4, 4, 4, 5, 6, 6, 7),
)

H_OF_PI = Permutation.parse("13572468")

# maxword followed by (1/4), and the maxword of the BPD it inserts to
EXTENDED = MAXWORD + PlacticBiword.from_rows((1,), (4,))
EXTENDED_MAXWORD = PlacticBiword.from_rows(
    (7, 6, 5, 4, 3, 2, 1, 2, 1, 2, 1),
    (7, 7, 7, 7, 7, 7, 7, 6, 6, 4, 4),
)

# a 4-biword whose tableau is 1123/234/3, and the tableau after absorbing (2/2)
ABSORB_WORD = (3, 2, 3, 4, 1, 1, 2, 3)
ABSORB_TABLEAU = SSYT([[1, 1, 2, 3], [2, 3, 4], [3]])
ABSORBED_TABLEAU = SSYT([[1, 1, 2, 2], [2, 3, 3], [3, 4]])


def bpd():
    """The BPD of pi that both MAXWORD and MINWORD insert to"""
    return phi(MAXWORD)
