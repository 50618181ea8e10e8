"""
Insertion of biletters into bumpless pipe dreams, and the maps built from it.

Both insertions are cascades of min-droops. Right insertion starts at the pipe
leaving row a, left insertion at the leftmost elbow of row a; either ends when two
pipes swap their tails across a k-Bruhat cover. phi reads a plactic biword right to
left with left insertion, and the inverses search forward along a recording chain.
"""
import logging
import typing
from dataclasses import dataclass
from itertools import combinations

from funcy import memoize

from . import conf
from .bpd import BPD, Cell, from_pipes, reroute, validate
from .exceptions import (
    ChainMismatch,
    InsertionError,
    InvalidBiletter,
    InvalidBPD,
    NoPreimage,
    NotPlactic,
    ParseError,
)
from .permutation import (
    CoverData,
    DecoratedChain,
    Permutation,
    cover_up,
    is_cover,
    maxword_chain,
    minword_chain,
)

logger = logging.getLogger("pipedreams")


@dataclass(frozen=True, order=True)
class Biletter:
    """The biletter a over k"""

    a: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.k, int)) or not 1 <= self.a <= self.k:
            raise InvalidBiletter(error=f"({self.a}/{self.k}) needs 1 <= a <= k")

    def __str__(self):
        return f"({self.a}/{self.k})"


class PlacticBiword:
    """A word of biletters whose labels weakly decrease"""

    biletters: typing.Tuple[Biletter, ...]

    def __init__(self, biletters: typing.Iterable = ()):
        self.biletters = tuple(b if isinstance(b, Biletter) else Biletter(*b) for b in biletters)
        labels = self.bottom
        if any(x < y for x, y in zip(labels, labels[1:])):
            raise NotPlactic(error=f"Labels {list(labels)} are not weakly decreasing")

    @classmethod
    def from_rows(cls, top: typing.Sequence[int], bottom: typing.Sequence[int]) -> "PlacticBiword":
        if len(top) != len(bottom):
            raise ParseError(error="Top and bottom rows differ in length", context={"top": top, "bottom": bottom})
        return cls(zip(top, bottom))

    @classmethod
    def k_biword(cls, word: typing.Sequence[int], k: int) -> "PlacticBiword":
        return cls.from_rows(word, [k] * len(word))

    @property
    def top(self) -> typing.Tuple[int, ...]:
        return tuple(b.a for b in self.biletters)

    @property
    def bottom(self) -> typing.Tuple[int, ...]:
        return tuple(b.k for b in self.biletters)

    def is_k_biword(self, k: int = None) -> bool:
        labels = set(self.bottom)
        return len(labels) <= 1 and (k is None or labels <= {k})

    def __len__(self):
        return len(self.biletters)

    def __iter__(self):
        return iter(self.biletters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return PlacticBiword(self.biletters[index])
        return self.biletters[index]

    def __add__(self, other) -> "PlacticBiword":
        if isinstance(other, Biletter):
            other = (other,)
        return PlacticBiword(self.biletters + tuple(other))

    def __radd__(self, other) -> "PlacticBiword":
        if isinstance(other, Biletter):
            other = (other,)
        return PlacticBiword(tuple(other) + self.biletters)

    def __eq__(self, other):
        return isinstance(other, PlacticBiword) and self.biletters == other.biletters

    def __hash__(self):
        return hash(self.biletters)

    def __lt__(self, other: "PlacticBiword"):
        return (self.top, self.bottom) < (other.top, other.bottom)

    def __str__(self):
        return ",".join(map(str, self.top)) + " / " + ",".join(map(str, self.bottom))

    def __repr__(self):
        return f"PlacticBiword({self})"

    def as_dict(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}


def concat(*words: PlacticBiword) -> PlacticBiword:
    biletters = []
    for word in words:
        biletters.extend(word)
    return PlacticBiword(biletters)


def _as_biword(Q) -> PlacticBiword:
    return Q if isinstance(Q, PlacticBiword) else PlacticBiword(Q)


@dataclass(frozen=True)
class InsertionOutcome:
    result: BPD
    cover: CoverData


#
# The min-droop cascade
#
class _Cascade:
    """Pipe paths of a grid that is being rewritten one droop at a time"""

    def __init__(self, D: BPD):
        self.n = D.n
        self.paths: typing.Dict[int, typing.Tuple[Cell, ...]] = dict(D.pipes())

    def exit_row(self, label: int) -> int:
        return self.paths[label][-1][0]

    def perm(self) -> Permutation:
        exits = {self.exit_row(label): label for label in self.paths}
        return Permutation(exits[i] for i in range(1, self.n + 1))

    def strands(self, cell: Cell, skip: int = None) -> typing.List[typing.Tuple[int, str, str]]:
        """(label, entry side, exit side) of every strand through `cell`"""
        found = []
        for label, path in self.paths.items():
            if label == skip or cell not in path:
                continue
            index = path.index(cell)
            entry = "S" if index == 0 or path[index - 1][1] == cell[1] else "W"
            leave = "E" if index == len(path) - 1 or path[index + 1][0] == cell[0] else "N"
            found.append((label, entry, leave))
        return found

    def elbow_owner(self, cell: Cell) -> typing.Optional[int]:
        """The pipe turning south-to-east at `cell`, if that is the only strand there"""
        found = self.strands(cell)
        if len(found) == 1 and found[0][1:] == ("S", "E"):
            return found[0][0]
        return None

    def corner_in_row(self, label: int, row: int) -> Cell:
        """The cell where a pipe climbs into `row` and turns east"""
        path = self.paths[label]
        for index, cell in enumerate(path):
            if cell[0] == row and (index == 0 or path[index - 1][0] == row + 1):
                return cell
        raise InsertionError(error=f"Pipe {label} does not enter row {row} from below")

    def next_elbow(self, row: int, after: int) -> typing.Tuple[int, Cell]:
        """The first south-to-east elbow in `row` strictly right of column `after`"""
        for column in range(after + 1, self.n + 1):
            label = self.elbow_owner((row, column))
            if label is not None:
                return label, (row, column)
        raise InsertionError(error=f"No elbow in row {row} right of column {after}")

    def min_droop_target(self, label: int, corner: Cell) -> Cell:
        """
        The nearest cell south-east of the corner that the pipe can turn through:
        one step down its vertical run and one step along its horizontal run,
        skipping cells where another pipe crosses it straight.
        """
        path = self.paths[label]
        index = path.index(corner)
        x, y = corner
        down = self._first_free(label, path, index, -1, lambda d: (x + d, y), ("W", "E"))
        right = self._first_free(label, path, index, +1, lambda d: (x, y + d), ("S", "N"))
        return down[0], right[1]

    def _first_free(self, label, path, index, step, cell_at, crossing) -> Cell:
        d = 1
        while True:
            cell = cell_at(d)
            position = index + step * d
            if position < 0 or position >= len(path):
                raise InsertionError(error=f"Pipe {label} leaves the grid before {cell}", context={"path": path})
            if path[position] != cell:
                raise InsertionError(error=f"Pipe {label} turns before {cell}", context={"path": path})
            if not any((entry, leave) == crossing for _, entry, leave in self.strands(cell, skip=label)):
                return cell
            d += 1

    def droop(self, label: int, corner: Cell, target: Cell) -> typing.Tuple[Cell, ...]:
        (x, y), (tx, ty) = corner, target
        path = reroute(self.paths[label], (tx, y), target, (x, ty))
        self.paths[label] = path
        return path

    def swap_tails(self, p: int, q: int, cell: Cell):
        """Make pipes p and q cross at `cell`: p continues along q's tail and vice versa"""
        p_path, q_path = self.paths[p], self.paths[q]
        i, j = p_path.index(cell), q_path.index(cell)
        self.paths[p] = p_path[: i + 1] + q_path[j + 1 :]
        self.paths[q] = q_path[: j + 1] + p_path[i + 1 :]

    def crossing_of(self, p: int, q: int, skip: Cell) -> typing.Optional[Cell]:
        shared = set(self.paths[p]) & set(self.paths[q])
        shared.discard(skip)
        if len(shared) > 1:
            raise InsertionError(error=f"Pipes {p} and {q} cross twice", context={"cells": sorted(shared)})
        return shared.pop() if shared else None

    def move_crossing(self, p: int, q: int, crossing: Cell, bump: Cell) -> int:
        """
        Uncross p and q at `crossing` and cross them at `bump` instead. The old crossing
        becomes a bump; returns the pipe that now turns south-to-east there.
        """
        self.swap_tails(p, q, crossing)
        self.swap_tails(p, q, bump)
        for label, entry, leave in self.strands(crossing):
            if label in (p, q) and (entry, leave) == ("S", "E"):
                return label
        raise InsertionError(error=f"Moving the crossing of {p} and {q} left no elbow at {crossing}")

    def to_bpd(self) -> BPD:
        return from_pipes(self.n, self.paths)


def _insert(D: BPD, b: Biletter, side: str) -> InsertionOutcome:
    """
    Shared min-droop cascade. Right insertion starts at the rightmost elbow of row a
    and, after drooping into a blank, carries on from the same pipe's elbow in the
    lower row; left insertion starts at the leftmost elbow and carries on from the
    nearest elbow right of the filled blank. A droop onto another pipe's elbow either
    crosses the two pipes (a k-cover), moves their existing crossing to that cell,
    or hands the cascade over to the other pipe.
    """
    a, k = b.a, b.k
    D = D.enlarged(max(D.n, k + 1) + 1)
    before = D.perm
    cascade = _Cascade(D)

    if side == "right":
        label = before(a)
        corner = cascade.corner_in_row(label, a)
    else:
        label, corner = cascade.next_elbow(a, 0)
    limit = conf.get("MAX_DROOP_STEPS")

    for _ in range(limit):
        target = cascade.min_droop_target(label, corner)
        occupants = cascade.strands(target, skip=label)
        logger.debug("%s: droop pipe %d at %s into %s, occupied by %s", side, label, corner, target, occupants)

        if not occupants:
            cascade.droop(label, corner, target)
            if side == "right":
                corner = cascade.corner_in_row(label, target[0])
            else:
                label, corner = cascade.next_elbow(*target)
            continue

        if len(occupants) != 1 or occupants[0][1:] != ("S", "E"):
            raise InsertionError(
                error=f"Pipe {label} cannot droop into {target}",
                context={"biletter": str(b), "grid": D.grid, "occupants": occupants},
            )

        other = occupants[0][0]
        cascade.droop(label, corner, target)
        crossing = cascade.crossing_of(label, other, skip=target)
        if crossing is not None:
            label, corner = cascade.move_crossing(label, other, crossing, target), crossing
            continue

        alpha, beta = sorted((cascade.exit_row(label), cascade.exit_row(other)))
        if alpha <= k < beta and is_cover(cascade.perm(), alpha, beta):
            cascade.swap_tails(label, other, target)
            break
        label, corner = other, target
    else:
        raise InsertionError(error=f"Insertion of {b} did not finish in {limit} droops", context={"grid": D.grid})

    try:
        result = cascade.to_bpd()
        after = validate(result)
    except InvalidBPD as ex:
        raise InsertionError(error=f"Insertion of {b} produced an invalid grid", context={"cause": str(ex)})

    if after != before.t(alpha, beta) or result.blank_rows() != tuple(sorted(D.blank_rows() + (a,))):
        raise InsertionError(
            error=f"Insertion of {b} is not a single {k}-cover adding a blank in row {a}",
            context={"before": D.grid, "after": result.grid},
        )
    return InsertionOutcome(result=result.normalized(), cover=cover_up(before, alpha, beta, label=k))


def right_insert(D: BPD, b: Biletter) -> InsertionOutcome:
    """D <- (a/k)"""
    return _insert(D, b, "right")


def left_insert(b: Biletter, D: BPD) -> InsertionOutcome:
    """(a/k) -> D"""
    return _insert(D, b, "left")


def phi_r(Q) -> BPD:
    """Right insertion, left to right, starting from the identity"""
    D = BPD.identity()
    for b in _as_biword(Q):
        D = right_insert(D, b).result
    return D


def phi_l(Q) -> BPD:
    """Left insertion, right to left, starting from the identity"""
    D = BPD.identity()
    for b in reversed(tuple(_as_biword(Q))):
        D = left_insert(b, D).result
    return D


def phi(Q) -> BPD:
    """The BPD of a plactic biword; every build order gives the same one"""
    return phi_l(Q)


def ch_r(Q) -> DecoratedChain:
    D = BPD.identity()
    steps = []
    for b in _as_biword(Q):
        outcome = right_insert(D, b)
        D = outcome.result
        steps.append(outcome.cover)
    return DecoratedChain(Permutation.identity(), tuple(steps))


def ch_l(Q) -> DecoratedChain:
    """Recording chain of left insertion, right to left, so its labels weakly increase"""
    D = BPD.identity()
    steps = []
    for b in reversed(tuple(_as_biword(Q))):
        outcome = left_insert(b, D)
        D = outcome.result
        steps.append(outcome.cover)
    return DecoratedChain(Permutation.identity(), tuple(steps))


#
# Inverses
#
def _check_chain(D: BPD, chain: DecoratedChain, order: str):
    if not chain.start.is_identity():
        raise ChainMismatch(error=f"Chain starts at {chain.start}, not the identity")
    if chain.end != D.perm:
        raise ChainMismatch(error=f"Chain ends at {chain.end}, the BPD has {D.perm}")
    if not chain.is_valid() or any(label is None for label in chain.labels):
        raise ChainMismatch(error="Every step must be a labelled cover", context={"chain": str(chain)})

    labels = chain.labels
    pairs = list(zip(labels, labels[1:]))
    if order == "decreasing" and any(x < y for x, y in pairs):
        raise ChainMismatch(error=f"Right insertion records weakly decreasing labels, got {list(labels)}")
    if order == "increasing" and any(x > y for x, y in pairs):
        raise ChainMismatch(error=f"Left insertion records weakly increasing labels, got {list(labels)}")


def _row_budget(D: BPD) -> typing.Dict[int, int]:
    budget: typing.Dict[int, int] = {}
    for row in D.blank_rows():
        budget[row] = budget.get(row, 0) + 1
    return budget


def all_preimages_right(D: BPD, chain: DecoratedChain) -> typing.Iterator[PlacticBiword]:
    """Every Q with phi_r(Q) = D whose right-insertion recording chain is `chain`"""
    _check_chain(D, chain, "decreasing")
    perms, labels = chain.perms, chain.labels
    budget = _row_budget(D)

    def extend(B, letters):
        depth = len(letters)
        if depth == len(labels):
            if B == D:
                yield PlacticBiword(letters)
            return
        k = labels[depth]
        for a in range(1, k + 1):
            if not budget.get(a):
                continue
            b = Biletter(a, k)
            outcome = right_insert(B, b)
            if outcome.result.perm != perms[depth + 1]:
                continue
            budget[a] -= 1
            yield from extend(outcome.result, letters + [b])
            budget[a] += 1

    yield from extend(BPD.identity(), [])


def all_preimages_left(D: BPD, chain: DecoratedChain) -> typing.Iterator[PlacticBiword]:
    """Every Q with phi_l(Q) = D whose left-insertion recording chain is `chain`"""
    _check_chain(D, chain, "increasing")
    perms, labels = chain.perms, chain.labels
    budget = _row_budget(D)

    def extend(B, suffix):
        depth = len(suffix)
        if depth == len(labels):
            if B == D:
                yield PlacticBiword(suffix)
            return
        k = labels[depth]
        for a in range(1, k + 1):
            if not budget.get(a):
                continue
            b = Biletter(a, k)
            outcome = left_insert(b, B)
            if outcome.result.perm != perms[depth + 1]:
                continue
            budget[a] -= 1
            yield from extend(outcome.result, [b] + suffix)
            budget[a] += 1

    yield from extend(BPD.identity(), [])


def inverse_right(D: BPD, chain: DecoratedChain) -> PlacticBiword:
    for Q in all_preimages_right(D, chain):
        return Q
    raise NoPreimage(error=f"No biword right inserts to this BPD along {chain}", context={"grid": D.grid})


def inverse_left(D: BPD, chain: DecoratedChain) -> PlacticBiword:
    for Q in all_preimages_left(D, chain):
        return Q
    raise NoPreimage(error=f"No biword left inserts to this BPD along {chain}", context={"grid": D.grid})


@memoize
def maxword(D: BPD) -> PlacticBiword:
    return inverse_right(D, maxword_chain(D.perm))


@memoize
def minword(D: BPD) -> PlacticBiword:
    return inverse_left(D, minword_chain(D.perm))


def build_orders(Q) -> typing.Iterator[typing.Tuple[str, BPD]]:
    """
    Build phi(Q) by every interleaving of left insertions (growing to the left) and
    right insertions (growing to the right) around each starting gap. Yields the
    order as a string over {L, R} and the resulting BPD.
    """
    Q = _as_biword(Q)
    length = len(Q)
    for gap in range(length + 1):
        for lefts in combinations(range(length), gap):
            order = "".join("L" if i in lefts else "R" for i in range(length))
            lo = hi = gap
            D = BPD.identity()
            for move in order:
                if move == "L":
                    lo -= 1
                    D = left_insert(Q[lo], D).result
                else:
                    D = right_insert(D, Q[hi]).result
                    hi += 1
            yield order, D
