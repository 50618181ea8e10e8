"""
Schubert polynomials, their expansion, and structure constants for separated descents.
"""
import logging
import typing
from collections import Counter
from fractions import Fraction
from itertools import combinations

from funcy import memoize

from . import conf
from .bpd import BPD, all_bpds, weight
from .exceptions import DescentConditionViolated, NoAdmissibleChain, NoExpansion
from .insertion import PlacticBiword, all_preimages_left, all_preimages_right, phi
from .permutation import DecoratedChain, Permutation, decorated_chains, iter_chains, k_bruhat_covers, perm_from_code
from .polynomial import IntPolynomial, divided_difference

logger = logging.getLogger("pipedreams")


def schubert_bpd(p: Permutation) -> IntPolynomial:
    """Sum of weights over BPD(p)"""
    total = IntPolynomial.zero()
    for D in all_bpds(p):
        total = total + weight(D)
    return total


def staircase(n: int) -> IntPolynomial:
    """x_1^(n-1) x_2^(n-2) ... x_(n-1), the Schubert polynomial of the longest element"""
    return IntPolynomial.monomial(range(n - 1, -1, -1))


def schubert_divdiff(p: Permutation) -> IntPolynomial:
    """
    Divided differences from the longest element w0 of S_n down to p.

    With w0 * p = s_(j_1) ... s_(j_m) reduced (composition as in Permutation.__mul__),
    the staircase is hit by d_(j_1) first and d_(j_m) last. The composite operator is
    d_(p^-1 w0), since (w0 p)^-1 = p^-1 w0.
    """
    n = max(p.n, 1)
    w0 = Permutation.longest(n)
    f = staircase(n)
    for i in (w0 * p).reduced_word():
        f = divided_difference(f, i)
    return f


@memoize
def schubert(p: Permutation) -> IntPolynomial:
    """
    Dominant permutations (weakly decreasing code) give x^code; otherwise
    S_p = d_i S_{p s_i} at the first ascent of the code.
    """
    c = p.code
    for i in range(1, len(c)):
        if c[i - 1] < c[i]:
            return divided_difference(schubert(p.t(i, i + 1)), i)
    return IntPolynomial.monomial(c)


#
# Expansion
#
def compositions(total: int, parts: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    """Weak compositions of `total` into `parts` parts, by stars and bars"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + parts - 1), parts - 1):
        edges = (-1,) + bars + (total + parts - 1,)
        yield tuple(b - a - 1 for a, b in zip(edges, edges[1:]))


def expand_schubert(f: IntPolynomial, degree: int = None) -> typing.Dict[Permutation, int]:
    """
    Coefficients c with f = sum c_p S_p. The Schubert polynomials whose codes live in
    positions 1..V form a basis of the degree-m polynomials in x_1..x_V, so one exact
    solve over that basis is enough.
    """
    if not f:
        return {}
    if not f.is_homogeneous():
        raise NoExpansion(error=f"{f} is not homogeneous")

    m = f.degree if degree is None else degree
    if m != f.degree:
        raise NoExpansion(error=f"{f} has degree {f.degree}, not {m}")

    nvars = max(f.nvars, 1)
    cap = conf.get("MAX_EXPANSION_VARS")
    if nvars > cap:
        raise NoExpansion(error=f"{f} uses {nvars} variables, the cap is {cap}")

    basis = [perm_from_code(c) for c in compositions(m, nvars)]
    polys = [schubert(p) for p in basis]
    monomials = sorted({e for g in polys for e, _ in g.terms()} | {e for e, _ in f.terms()})
    row_of = {e: i for i, e in enumerate(monomials)}

    # augmented matrix, one row per monomial, one column per basis element
    matrix = [[Fraction(0)] * (len(basis) + 1) for _ in monomials]
    for j, g in enumerate(polys):
        for e, c in g.terms():
            matrix[row_of[e]][j] = Fraction(c)
    for e, c in f.terms():
        matrix[row_of[e]][-1] = Fraction(c)

    pivots = []
    row = 0
    for col in range(len(basis)):
        pivot = next((r for r in range(row, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        lead = matrix[row][col]
        matrix[row] = [x / lead for x in matrix[row]]
        for r in range(len(matrix)):
            if r != row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[row])]
        pivots.append(col)
        row += 1

    if any(matrix[r][-1] != 0 for r in range(row, len(matrix))):
        raise NoExpansion(error=f"{f} is not in the span of the Schubert basis")

    result = {}
    for r, col in enumerate(pivots):
        value = matrix[r][-1]
        if value.denominator != 1:
            raise NoExpansion(error=f"Non-integral coefficient {value} for {basis[col]}")
        if value:
            result[basis[col]] = int(value)

    check = IntPolynomial.zero()
    for p, c in result.items():
        check = check + schubert(p) * c
    if check != f:
        raise NoExpansion(error=f"Expansion of {f} leaves a residual {check - f}")
    return result


#
# Chains and the product identity
#
def count_chains(p: Permutation, labels: typing.Sequence[int]) -> int:
    return sum(1 for _ in iter_chains(p, labels))


def chain_endpoints(labels: typing.Sequence[int]) -> typing.Counter[Permutation]:
    """How many chains with the given label vector end at each permutation"""
    counts: typing.Counter[Permutation] = Counter({Permutation.identity(): 1})
    for k in labels:
        step: typing.Counter[Permutation] = Counter()
        for p, c in counts.items():
            for cover in k_bruhat_covers(p, k):
                step[p.t(cover.alpha, cover.beta)] += c
        counts = step
    return counts


def product_of_simple(labels: typing.Sequence[int]) -> IntPolynomial:
    """S_{s_k1} ... S_{s_km}, with S_{s_k} = x_1 + ... + x_k"""
    f = IntPolynomial.one()
    for k in labels:
        f = f * sum((IntPolynomial.variable(i) for i in range(1, k + 1)), IntPolynomial.zero())
    return f


def product_identity_holds(labels: typing.Sequence[int]) -> bool:
    """The product of S_{s_k} equals the chain-count weighted sum of Schubert polynomials"""
    counts = chain_endpoints(labels)
    if counts != Counter({p: count_chains(p, labels) for p in counts}):
        return False
    return expand_schubert(product_of_simple(labels)) == dict(counts)


def structure_constants(p: Permutation, r: Permutation) -> typing.Dict[Permutation, int]:
    """c^s_{p,r} for every s, read off the expansion of S_p S_r"""
    return expand_schubert(schubert(p) * schubert(r))


#
# Separated descents
#
def _check_descents(p: Permutation, r: Permutation):
    if p.is_identity() or r.is_identity():
        return
    if p.d1 < r.d2:
        raise DescentConditionViolated(
            error=f"d1({p}) = {p.d1} is smaller than d2({r}) = {r.d2}",
            context={"pi": str(p), "rho": str(r)},
        )


def admissible_chains(
    p: Permutation, r: Permutation
) -> typing.Tuple[typing.List[DecoratedChain], typing.List[DecoratedChain]]:
    """
    Chains to p with weakly increasing labels >= d1(p), and chains to r with weakly
    decreasing labels <= d2(r).
    """
    _check_descents(p, r)
    if p.is_identity():
        left = [DecoratedChain(Permutation.identity())]
    else:
        left = list(decorated_chains(p, order="increasing", min_label=p.d1, max_label=max(p.n - 1, p.d1)))
    if r.is_identity():
        right = [DecoratedChain(Permutation.identity())]
    else:
        right = list(decorated_chains(r, order="decreasing", max_label=r.d2))
    return left, right


def constant_counts(
    p: Permutation, r: Permutation, chain_p: DecoratedChain, chain_r: DecoratedChain
) -> typing.Counter[BPD]:
    """phi(Q_p Q_r) over all pairs recorded by the two chains, with multiplicity"""
    left_words: typing.List[PlacticBiword] = []
    for D in all_bpds(p):
        left_words.extend(all_preimages_left(D, chain_p))
    right_words: typing.List[PlacticBiword] = []
    for D in all_bpds(r):
        right_words.extend(all_preimages_right(D, chain_r))

    counts: typing.Counter[BPD] = Counter()
    for Qp in left_words:
        for Qr in right_words:
            counts[phi(Qp + Qr)] += 1
    return counts


def separated_descent_constant(
    p: Permutation,
    r: Permutation,
    s: Permutation,
    D: BPD = None,
    chain_p: DecoratedChain = None,
    chain_r: DecoratedChain = None,
) -> int:
    _check_descents(p, r)
    if s.length != p.length + r.length:
        return 0

    if chain_p is None or chain_r is None:
        left, right = admissible_chains(p, r)
        if not left or not right:
            expected = structure_constants(p, r).get(s, 0)
            if not expected:
                return 0
            raise NoAdmissibleChain(
                error=f"No admissible chain for {p if not left else r}, but c = {expected}",
                context={"pi": str(p), "rho": str(r), "sigma": str(s), "expected": expected},
            )
        chain_p = left[0] if chain_p is None else chain_p
        chain_r = right[0] if chain_r is None else chain_r

    if D is None:
        D = min(all_bpds(s))
    return constant_counts(p, r, chain_p, chain_r)[D]
