"""
Brute-force verification sweeps. Each returns a VerificationReport and records
failures instead of raising.
"""
import logging
import typing
from collections import defaultdict
from itertools import product

from . import fixtures
from .bpd import all_bpds, exhaustive_bpds, grassmannian_to_ssyt, ssyt_to_bpd, weight
from .insertion import (
    Biletter,
    PlacticBiword,
    build_orders,
    ch_l,
    ch_r,
    left_insert,
    maxword,
    minword,
    phi,
    right_insert,
)
from .knuth import VerificationReport, fiber, iter_plactic_biwords, knuth_path, neighbors, verify_connectivity
from .permutation import Permutation, grassmannian_from_shape, h, k_bruhat_covers
from .polynomial import IntPolynomial
from .schubert import (
    admissible_chains,
    constant_counts,
    product_identity_holds,
    schubert_bpd,
    schubert_divdiff,
    structure_constants,
)
from .tableau import colread, column_insert, insert_word, row_insert, split_first_column, split_first_row

logger = logging.getLogger("pipedreams")


def _perms(max_n: int) -> typing.List[Permutation]:
    return Permutation.all_of_size(max_n)


def _words(max_len: int, max_label: int):
    for length in range(max_len + 1):
        yield from iter_plactic_biwords(length, max_label)


def _k_words(max_len: int, k: int):
    for length in range(max_len + 1):
        yield from product(range(1, k + 1), repeat=length)


def verify_connectivity_suite(max_n: int = 4) -> VerificationReport:
    report = VerificationReport(name="connectivity")
    for p in _perms(max_n):
        report.merge(verify_connectivity(p))
    return report


def verify_associativity(max_len: int = 4, max_label: int = 4) -> VerificationReport:
    report = VerificationReport(name="associativity")
    for Q in _words(max_len, max_label):
        report.checked += 1
        results = {D for _, D in build_orders(Q)}
        if len(results) != 1:
            report.fail(f"{Q} builds {len(results)} different BPDs")
    return report


def verify_soundness(max_len: int = 4, max_label: int = 4) -> VerificationReport:
    report = VerificationReport(name="soundness")
    for Q in _words(max_len, max_label):
        D = phi(Q)
        for other, move in neighbors(Q):
            report.checked += 1
            if phi(other) != D:
                report.fail(f"{move} takes {Q} to {other} but changes phi")
    return report


def verify_oracles(max_n: int = 5, max_exhaustive: int = 4) -> VerificationReport:
    report = VerificationReport(name="oracles")
    for p in _perms(max_n):
        report.checked += 1
        if schubert_bpd(p) != schubert_divdiff(p):
            report.fail(f"BPD weights and divided differences disagree on {p}")
    for p in _perms(min(max_n, max_exhaustive)):
        report.checked += 1
        if all_bpds(p) != exhaustive_bpds(p):
            report.fail(f"droop closure and exhaustive search disagree on {p}")
    return report


def _inserter(side: str):
    if side == "right":
        return lambda D, b: right_insert(D, b).result
    return lambda D, b: left_insert(b, D).result


def verify_monk(max_n: int = 4, side: str = "right") -> VerificationReport:
    """Insertion of (a/k), a <= k, is a bijection onto the BPDs one k-cover up"""
    report = VerificationReport(name="monk" if side == "right" else "monk-left")
    insert = _inserter(side)
    for p in _perms(max_n):
        for k in range(1, max(max_n, 2)):
            report.checked += 1
            images = defaultdict(list)
            for D in all_bpds(p):
                for a in range(1, k + 1):
                    result = insert(D, Biletter(a, k))
                    images[result].append((D, a))
                    if weight(result) != weight(D) * IntPolynomial.variable(a):
                        report.fail(f"inserting ({a}/{k}) into {D!r} does not multiply the weight by x{a}")

            expected = set()
            for cover in k_bruhat_covers(p, k):
                expected |= all_bpds(p.t(cover.alpha, cover.beta))

            collisions = [D for D, sources in images.items() if len(sources) > 1]
            if collisions:
                report.fail(f"{p}, k={k}: {len(collisions)} BPDs are hit twice")
            if set(images) != expected:
                report.fail(f"{p}, k={k}: image has {len(images)} BPDs, expected {len(expected)}")
    return report


def verify_grassmannian(max_len: int = 4, max_label: int = 4) -> VerificationReport:
    """
    On k-biwords phi is the tableau of the word read through ssyt_to_bpd, and one
    more letter inserted from either side follows Schensted insertion.
    """
    report = VerificationReport(name="grassmannian")
    for k in range(1, max_label + 1):
        for word in _k_words(max_len, k):
            T = insert_word(word)
            D = phi(PlacticBiword.k_biword(word, k))
            report.checked += 1
            if D != ssyt_to_bpd(T, k) or D.perm != grassmannian_from_shape(T.shape, k):
                report.fail(f"{word} over {k} does not insert to the BPD of its tableau")
                continue
            for a in range(1, k + 1):
                report.checked += 1
                right = right_insert(D, Biletter(a, k)).result
                if grassmannian_to_ssyt(right, k) != row_insert(T, a)[0]:
                    report.fail(f"right inserting ({a}/{k}) into {word} is not row insertion")
                left = left_insert(Biletter(a, k), D).result
                if grassmannian_to_ssyt(left, k) != column_insert(a, T)[0]:
                    report.fail(f"left inserting ({a}/{k}) into {word} is not column insertion")
    return report


def verify_most_k_grass(max_len: int = 4, max_label: int = 4) -> VerificationReport:
    """
    When a biword ends in a run of labels k = d1(perm) as long as h(perm), everything
    before the run has labels above k and the run alone inserts to h(perm).
    """
    report = VerificationReport(name="most-k-grass")
    for Q in _words(max_len, max_label):
        p = phi(Q).perm
        if p.is_identity():
            continue
        k, target = p.d1, h(p)
        m = target.length
        if m > len(Q):
            continue
        head, tail = Q[: len(Q) - m], Q[len(Q) - m :]
        if not tail.is_k_biword(k):
            continue
        report.checked += 1
        if any(label <= k for label in head.bottom):
            report.fail(f"{Q}: a label before the final {k}-run is at most {k}")
        if phi(tail).perm != target:
            report.fail(f"{Q}: the final {k}-run inserts to {phi(tail).perm}, not h = {target}")
    return report


def verify_uniqueness(max_n: int = 3) -> VerificationReport:
    """Within a fiber, only the maxword has the maxcode labels and only the minword the code labels"""
    report = VerificationReport(name="uniqueness")
    for p in _perms(max_n):
        max_labels = tuple(sorted(i for i in range(1, p.n + 1) for _ in range(p.maxcode_at(i + 1))))
        min_labels = tuple(sorted(i for i in range(1, p.n + 1) for _ in range(p.code_at(i))))
        for D in all_bpds(p):
            report.checked += 1
            words = fiber(D)
            with_max = {Q for Q in words if tuple(sorted(Q.bottom)) == max_labels}
            with_min = {Q for Q in words if tuple(sorted(Q.bottom)) == min_labels}
            if with_max != {maxword(D)}:
                report.fail(f"{D!r}: {len(with_max)} biwords carry the maxword labels")
            if with_min != {minword(D)}:
                report.fail(f"{D!r}: {len(with_min)} biwords carry the minword labels")
    return report


def verify_product(max_label: int = 3, max_len: int = 4) -> VerificationReport:
    report = VerificationReport(name="product")
    for length in range(max_len + 1):
        for labels in product(range(1, max_label + 1), repeat=length):
            report.checked += 1
            if not product_identity_holds(labels):
                report.fail(f"product identity fails for labels {labels}")
    return report


def verify_constants(max_n: int = 4) -> VerificationReport:
    """
    For every separated-descent pair, every admissible pair of chains and every D,
    the pair count matches the coefficient of the Schubert expansion.
    """
    report = VerificationReport(name="constants")
    perms = _perms(max_n)
    for p in perms:
        for r in perms:
            if p.is_identity() or r.is_identity() or p.d1 < r.d2:
                continue
            oracle = structure_constants(p, r)
            left, right = admissible_chains(p, r)
            if not left or not right:
                if oracle:
                    report.fail(f"no admissible chain for ({p}, {r}) but the product is nonzero")
                continue

            for chain_p in left:
                for chain_r in right:
                    counts = constant_counts(p, r, chain_p, chain_r)
                    targets = set(oracle) | {D.perm for D in counts}
                    for s in targets:
                        for D in all_bpds(s):
                            report.checked += 1
                            if counts[D] != oracle.get(s, 0):
                                report.fail(
                                    f"c({p},{r};{s}) = {oracle.get(s, 0)} but {counts[D]} pairs insert to {D!r}"
                                )
            report.rows.append({"pi": str(p), "rho": str(r), "terms": len(oracle)})
    return report


def verify_examples() -> VerificationReport:
    report = VerificationReport(name="examples")
    D = fixtures.bpd()

    def check(label, ok):
        report.checked += 1
        report.rows.append({"check": label, "result": "ok" if ok else "FAIL"})
        if not ok:
            report.fail(label)

    check("perm of the example BPD", D.perm == fixtures.PI)
    check("maxword", maxword(D) == fixtures.MAXWORD)
    check("maxword chain", ch_r(fixtures.MAXWORD) == fixtures.MAXWORD_CHAIN)
    check("minword", minword(D) == fixtures.MINWORD)
    check("minword chain", ch_l(fixtures.MINWORD) == fixtures.MINWORD_CHAIN)
    check("minword inserts to the same BPD", phi(fixtures.MINWORD) == D)
    check("h", h(fixtures.PI) == fixtures.H_OF_PI)

    extended = phi(fixtures.EXTENDED)
    check("maxword after (1/4)", maxword(extended) == fixtures.EXTENDED_MAXWORD)
    check("Knuth path after (1/4)", knuth_path(fixtures.EXTENDED, fixtures.EXTENDED_MAXWORD) is not None)

    check("absorb tableau", insert_word(fixtures.ABSORB_WORD) == fixtures.ABSORB_TABLEAU)
    absorbed = insert_word(fixtures.ABSORB_WORD + (2,))
    check("absorbed tableau", absorbed == fixtures.ABSORBED_TABLEAU)

    before = PlacticBiword.k_biword(fixtures.ABSORB_WORD, 4) + Biletter(2, 2)
    after = PlacticBiword.k_biword(colread(fixtures.ABSORBED_TABLEAU), 4)
    check("(2/2) is absorbed into the 4-biword", phi(before) == phi(after))

    # spitting out the first column or row of 1123/234/3 over 4
    whole = phi(PlacticBiword.k_biword(colread(fixtures.ABSORB_TABLEAU), 4))
    rest, column = split_first_column(fixtures.ABSORB_TABLEAU)
    spit_left = PlacticBiword.k_biword(colread(rest), 5) + PlacticBiword.k_biword(column, 4)
    check("first column spits out to the right", phi(spit_left) == whole)
    row, rest = split_first_row(fixtures.ABSORB_TABLEAU)
    spit_right = PlacticBiword.k_biword(row, 4) + PlacticBiword.k_biword(colread(rest), 3)
    check("first row spits out to the left", phi(spit_right) == whole)
    return report


def verify_absorb(max_len: int = 4, max_label: int = 3) -> VerificationReport:
    """
    A letter is absorbed by a k-biword without changing its label exactly when
    Schensted insertion keeps the tableau within the same rows (left) or the same
    columns (right), and exactly when insertion creates no new descent.
    """
    report = VerificationReport(name="absorb")
    for k in range(1, max_label + 1):
        for word in _k_words(max_len, k):
            T = insert_word(word)
            D = phi(PlacticBiword.k_biword(word, k))
            for a in range(1, k + 2):
                report.checked += 1
                _, (r, _) = column_insert(a, T)
                no_new_row = r <= len(T.rows)
                after = left_insert(Biletter(a, k + 1), D).result.perm
                if no_new_row == (k + 1 in after.descents):
                    report.fail(f"left absorbing ({a}/{k + 1}) into {word} over {k}")

        for word in _k_words(max_len, k + 1):
            T = insert_word(word)
            D = phi(PlacticBiword.k_biword(word, k + 1))
            for a in range(1, k + 1):
                report.checked += 1
                _, (_, c) = row_insert(T, a)
                no_new_column = bool(T.rows) and c <= len(T.rows[0])
                after = right_insert(D, Biletter(a, k)).result.perm
                if no_new_column == (k in after.descents):
                    report.fail(f"right absorbing ({a}/{k}) into {word} over {k + 1}")
    return report


SUITES: typing.Dict[str, typing.Callable[[int], VerificationReport]] = {
    "connectivity": lambda max_n: verify_connectivity_suite(max_n),
    "associativity": lambda max_n: verify_associativity(max_len=max_n, max_label=max_n),
    "soundness": lambda max_n: verify_soundness(max_len=max_n, max_label=max_n),
    "oracles": lambda max_n: verify_oracles(max_n=max_n + 1, max_exhaustive=max_n),
    "monk": lambda max_n: verify_monk(max_n),
    "monk-left": lambda max_n: verify_monk(max_n, side="left"),
    "grassmannian": lambda max_n: verify_grassmannian(max_len=max_n, max_label=max_n),
    "most-k-grass": lambda max_n: verify_most_k_grass(max_len=max_n, max_label=max_n),
    "uniqueness": lambda max_n: verify_uniqueness(max_n),
    "product": lambda max_n: verify_product(max_label=max_n - 1, max_len=max_n),
    "constants": lambda max_n: verify_constants(max_n),
    "absorb": lambda max_n: verify_absorb(max_len=max_n, max_label=max_n - 1),
    "examples": lambda max_n: verify_examples(),
}


def run_suite(name: str, max_n: int = 4) -> typing.List[VerificationReport]:
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for each in names:
        logger.info("running %s verification up to n=%d", each, max_n)
        try:
            reports.append(SUITES[each](max_n))
        except Exception as ex:
            logger.exception("%s verification crashed", each)
            report = VerificationReport(name=each)
            report.fail(f"crashed: {ex}")
            reports.append(report)
    return reports
