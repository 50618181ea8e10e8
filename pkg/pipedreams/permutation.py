"""
Permutations of S_infinity, stored as a finite window with trailing fixed points removed.

Positions and values are 1-based throughout, as in one-line notation.
"""
import json
import logging
import typing
from dataclasses import dataclass, field
from itertools import permutations

from funcy import cached_property

from .exceptions import (
    CodeNotRealizable,
    DeltaUndefined,
    IdentityHasNoDescent,
    NotACover,
    NotGrassmannian,
    ParseError,
    ShapeMismatch,
)
from .tableau import Shape

logger = logging.getLogger("pipedreams")


class Permutation:
    """A finitely supported bijection of the positive integers"""

    window: typing.Tuple[int, ...]

    def __init__(self, window: typing.Iterable[int] = ()):
        window = list(window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window} is not a permutation of 1..{len(window)}")

        # Trailing fixed points are not part of the identity of a permutation
        while window and window[-1] == len(window):
            window.pop()

        self.window = tuple(window)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def transposition(cls, i: int, j: int) -> "Permutation":
        return cls.identity().t(i, j)

    @classmethod
    def simple(cls, k: int) -> "Permutation":
        """The adjacent transposition s_k"""
        return cls.transposition(k, k + 1)

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def parse(cls, text) -> "Permutation":
        """
        Read one-line notation: "13574862", "1,3,5,7,4,8,6,2" or "[1,3,5,7,4,8,6,2]"
        """
        if isinstance(text, (list, tuple)):
            values = list(text)
        else:
            text = str(text).strip()
            try:
                if text.startswith("["):
                    values = json.loads(text)
                elif "," in text:
                    values = [int(part) for part in text.split(",") if part.strip()]
                else:
                    values = [int(char) for char in text]
            except ValueError as ex:
                raise ParseError(error=f"Cannot read permutation {text!r}", context=str(ex))

        try:
            return cls(int(value) for value in values)
        except (TypeError, ValueError) as ex:
            raise ParseError(error=f"Not a permutation: {text!r}", context=str(ex))

    @classmethod
    def all_of_size(cls, n: int) -> typing.List["Permutation"]:
        """All permutations of S_n in lexicographic order of their one-line notation"""
        return [cls(values) for values in permutations(range(1, n + 1))]

    #
    # Basic protocol
    #
    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.window):
            return self.window[i - 1]
        return i

    def padded(self, n: int) -> typing.Tuple[int, ...]:
        return tuple(self(i) for i in range(1, max(n, self.n) + 1))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __lt__(self, other: "Permutation"):
        n = max(self.n, other.n)
        return self.padded(n) < other.padded(n)

    def __str__(self):
        values = self.window or (1,)
        if len(values) <= 9:
            return "".join(str(v) for v in values)
        return ",".join(str(v) for v in values)

    def __repr__(self):
        return f"Permutation({self})"

    def to_list(self, n: int = 0) -> typing.List[int]:
        return list(self.padded(n))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition, (p * q)(i) = p(q(i))"""
        n = max(self.n, other.n)
        return Permutation(self(other(i)) for i in range(1, n + 1))

    @cached_property
    def inverse(self) -> "Permutation":
        values = [0] * self.n
        for i, value in enumerate(self.window, start=1):
            values[value - 1] = i
        return Permutation(values)

    def t(self, alpha: int, beta: int) -> "Permutation":
        """Right multiplication by the transposition t_{alpha beta}: swaps positions"""
        values = list(self.padded(max(alpha, beta)))
        values[alpha - 1], values[beta - 1] = values[beta - 1], values[alpha - 1]
        return Permutation(values)

    #
    # Statistics
    #
    @cached_property
    def code(self) -> typing.Tuple[int, ...]:
        """code(i) = #{j > i : p(j) < p(i)}, listed for positions 1..n"""
        w = self.window
        return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w)))

    @cached_property
    def maxcode(self) -> typing.Tuple[int, ...]:
        """maxcode(i) = #{j < i : p(j) > p(i)}, listed for positions 1..n"""
        w = self.window
        return tuple(sum(1 for j in range(i) if w[j] > w[i]) for i in range(len(w)))

    def code_at(self, i: int) -> int:
        return self.code[i - 1] if 1 <= i <= self.n else 0

    def maxcode_at(self, i: int) -> int:
        return self.maxcode[i - 1] if 1 <= i <= self.n else 0

    @cached_property
    def length(self) -> int:
        return sum(self.code)

    def is_identity(self) -> bool:
        return not self.window

    @cached_property
    def descents(self) -> typing.FrozenSet[int]:
        w = self.window
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    @property
    def d1(self) -> int:
        """First descent"""
        if not self.descents:
            raise IdentityHasNoDescent(error="The identity has no descent")
        return min(self.descents)

    @property
    def d2(self) -> int:
        """Last descent"""
        if not self.descents:
            raise IdentityHasNoDescent(error="The identity has no descent")
        return max(self.descents)

    def reduced_word(self) -> typing.List[int]:
        """
        A reduced word s_{i_1} ... s_{i_l} = p, found by peeling off right descents
        """
        word = []
        current = self
        while not current.is_identity():
            i = min(current.descents)
            word.append(i)
            current = current.t(i, i + 1)
        return list(reversed(word))

    def is_grassmannian(self) -> bool:
        return len(self.descents) <= 1

    def shape(self, k: int = None) -> Shape:
        return shape_of(self, k)


def code(p: Permutation) -> typing.Tuple[int, ...]:
    return p.code


def maxcode(p: Permutation) -> typing.Tuple[int, ...]:
    return p.maxcode


def descents(p: Permutation) -> typing.FrozenSet[int]:
    return p.descents


def d1(p: Permutation) -> int:
    return p.d1


def d2(p: Permutation) -> int:
    return p.d2


def perm_from_code(c: typing.Sequence[int], n: int = None) -> Permutation:
    """
    Inverse Lehmer code. With an explicit window `n` every entry must satisfy
    c(i) <= n - i; otherwise the window is the smallest that realizes `c`.
    """
    c = list(c)
    if any(entry < 0 for entry in c):
        raise CodeNotRealizable(error="Codes are nonnegative", context={"code": c})

    needed = max([i + entry for i, entry in enumerate(c, start=1)] + [len(c)])
    if n is None:
        n = needed
    elif needed > n:
        raise CodeNotRealizable(
            error=f"Code does not fit in a window of size {n}", context={"code": c, "n": n}
        )

    available = list(range(1, n + 1))
    values = [available.pop(entry) for entry in c]
    values.extend(available)
    return Permutation(values)


def bruhat_le(u: Permutation, w: Permutation) -> bool:
    """Tableau criterion for u <= w in Bruhat order"""
    n = max(u.n, w.n)
    uu, ww = u.padded(n), w.padded(n)
    for i in range(1, n):
        if any(a > b for a, b in zip(sorted(uu[:i]), sorted(ww[:i]))):
            return False
    return True


#
# Covers
#
@dataclass(frozen=True)
class CoverData:
    """
    A Bruhat cover p < p t_{alpha beta}, optionally labelled by k with alpha <= k < beta.
    """

    alpha: int
    beta: int
    label: typing.Optional[int]
    m_alpha: int
    m_beta: int

    def predicted_code(self, c: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        values = list(c) + [0] * max(0, self.beta - len(c))
        values[self.alpha - 1] += self.m_alpha + 1
        values[self.beta - 1] -= self.m_alpha
        return _trim(values)

    def predicted_maxcode(self, c: typing.Sequence[int]) -> typing.Tuple[int, ...]:
        values = list(c) + [0] * max(0, self.beta - len(c))
        values[self.alpha - 1] -= self.m_beta
        values[self.beta - 1] += self.m_beta + 1
        return _trim(values)

    def with_label(self, label: int) -> "CoverData":
        return CoverData(self.alpha, self.beta, label, self.m_alpha, self.m_beta)

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "label": self.label}


def _trim(values) -> typing.Tuple[int, ...]:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def is_cover(p: Permutation, alpha: int, beta: int) -> bool:
    if alpha >= beta:
        return False
    low, high = p(alpha), p(beta)
    if low > high:
        return False
    return not any(low < p(i) < high for i in range(alpha + 1, beta))


def cover_up(p: Permutation, alpha: int, beta: int, label: int = None) -> CoverData:
    if alpha >= beta:
        raise NotACover(error="alpha must be smaller than beta", context={"alpha": alpha, "beta": beta})

    if not is_cover(p, alpha, beta):
        raise NotACover(
            error=f"length of {p} * t({alpha},{beta}) is {p.t(alpha, beta).length}, expected {p.length + 1}",
            context={"perm": str(p), "alpha": alpha, "beta": beta},
        )

    low, high = p(alpha), p(beta)
    n = max(p.n, beta)
    m_alpha = sum(1 for i in range(beta + 1, n + 1) if low < p(i) < high)
    m_beta = sum(1 for i in range(1, alpha) if low < p(i) < high)
    return CoverData(alpha=alpha, beta=beta, label=label, m_alpha=m_alpha, m_beta=m_beta)


def bruhat_covers(p: Permutation, max_position: int = None) -> typing.List[CoverData]:
    """Every cover p < p t_{alpha beta} with beta <= max_position (default n + 1)"""
    top = max_position if max_position is not None else p.n + 1
    return [
        cover_up(p, alpha, beta)
        for beta in range(2, top + 1)
        for alpha in range(1, beta)
        if is_cover(p, alpha, beta)
    ]


def k_bruhat_covers(p: Permutation, k: int) -> typing.List[CoverData]:
    """
    All covers p < p t_{alpha beta} with alpha <= k < beta, labelled k.

    Positions beyond max(n, k) + 1 are fixed points that block every cover, so the
    search window max(n, k) + 1 is complete.
    """
    if k < 1:
        raise ValueError("k must be positive")

    top = max(p.n, k) + 1
    return [
        cover_up(p, alpha, beta, label=k)
        for alpha in range(1, k + 1)
        for beta in range(k + 1, top + 1)
        if is_cover(p, alpha, beta)
    ]


#
# h, delta, Grassmannian permutations
#
def h(p: Permutation) -> Permutation:
    """Keep the code up to the first descent, zero after it"""
    k = p.d1
    return perm_from_code(p.code[:k])


def delta(rho: Permutation, target: Permutation) -> Permutation:
    """
    One step of the chain from the identity towards `target` that builds minwords.

    alpha is the unique position where code(rho) first falls short of code(target),
    provided code(rho) vanishes after it. beta is the smallest position after alpha
    with rho(beta) > rho(alpha), which makes rho t_{alpha beta} a cover of rho.
    """
    return rho.t(*delta_positions(rho, target))


def delta_positions(rho: Permutation, target: Permutation) -> typing.Tuple[int, int]:
    n = max(rho.n, target.n)
    alpha = None
    for i in range(1, n + 1):
        if rho.code_at(i) != target.code_at(i):
            alpha = i
            break

    context = {"rho": str(rho), "target": str(target)}
    if alpha is None:
        raise DeltaUndefined(error="rho already has the code of the target", context=context)
    if rho.code_at(alpha) > target.code_at(alpha):
        raise DeltaUndefined(error=f"code(rho)({alpha}) exceeds the target", context=context)
    if any(rho.code_at(i) for i in range(alpha + 1, n + 1)):
        raise DeltaUndefined(error=f"code(rho) is nonzero after position {alpha}", context=context)

    low = rho(alpha)
    beta = alpha + 1
    while rho(beta) < low:
        beta += 1
    return alpha, beta


def is_grassmannian(p: Permutation) -> bool:
    return p.is_grassmannian()


def shape_of(p: Permutation, k: int = None) -> Shape:
    """
    The partition of a k-Grassmannian permutation: lambda_i = code(k + 1 - i)
    """
    if k is None:
        if len(p.descents) > 1:
            raise NotGrassmannian(error=f"{p} has descents {sorted(p.descents)}")
        k = min(p.descents) if p.descents else 0
    elif not p.descents <= {k}:
        raise NotGrassmannian(error=f"{p} is not {k}-Grassmannian", context={"descents": sorted(p.descents)})

    return Shape([p.code_at(i) for i in range(k, 0, -1)])


def grassmannian_from_shape(shape, k: int) -> Permutation:
    shape = Shape(shape)
    if len(shape) > k:
        raise ShapeMismatch(error=f"{shape} has more than {k} rows")
    parts = list(shape) + [0] * (k - len(shape))
    return perm_from_code(list(reversed(parts)))


#
# Chains
#
@dataclass(frozen=True)
class DecoratedChain:
    """A saturated Bruhat chain starting at `start` with labelled covers"""

    start: Permutation
    steps: typing.Tuple[CoverData, ...] = field(default_factory=tuple)

    @cached_property
    def perms(self) -> typing.List[Permutation]:
        perms = [self.start]
        for step in self.steps:
            perms.append(perms[-1].t(step.alpha, step.beta))
        return perms

    @property
    def end(self) -> Permutation:
        return self.perms[-1]

    @property
    def labels(self) -> typing.Tuple[int, ...]:
        return tuple(step.label for step in self.steps)

    def __len__(self):
        return len(self.steps)

    def is_valid(self) -> bool:
        for perm, step in zip(self.perms, self.steps):
            if not is_cover(perm, step.alpha, step.beta):
                return False
            if step.label is not None and not step.alpha <= step.label < step.beta:
                return False
        return True

    def as_dict(self) -> dict:
        return {"start": self.start.to_list(), "steps": [step.as_dict() for step in self.steps]}

    def __str__(self):
        parts = [str(self.start)]
        for step, perm in zip(self.steps, self.perms[1:]):
            parts.append(f"<{step.label} {perm}")
        return " ".join(parts)

    @classmethod
    def from_perms(cls, perms: typing.Sequence[Permutation], labels: typing.Sequence[int]):
        steps = []
        for before, after, label in zip(perms, perms[1:], labels):
            n = max(before.n, after.n)
            moved = [i for i in range(1, n + 1) if before(i) != after(i)]
            if len(moved) != 2:
                raise NotACover(error=f"{before} -> {after} is not a transposition")
            steps.append(cover_up(before, moved[0], moved[1], label=label))
        return cls(start=perms[0], steps=tuple(steps))


def iter_chains(target: Permutation, labels: typing.Sequence[int]) -> typing.Iterator[DecoratedChain]:
    """
    Complete chains id < p_1 < ... < target whose i-th cover is a labels[i]-Bruhat cover
    """
    if len(labels) != target.length:
        return

    def extend(perm, steps):
        depth = len(steps)
        if depth == len(labels):
            if perm == target:
                yield DecoratedChain(Permutation.identity(), tuple(steps))
            return

        for cover in k_bruhat_covers(perm, labels[depth]):
            nxt = perm.t(cover.alpha, cover.beta)
            if bruhat_le(nxt, target):
                yield from extend(nxt, steps + [cover])

    yield from extend(Permutation.identity(), [])


def decorated_chains(
    target: Permutation,
    *,
    order: str,
    min_label: int = 1,
    max_label: int = None,
) -> typing.Iterator[DecoratedChain]:
    """
    Chains from the identity to `target` whose labels are weakly increasing
    (order="increasing") or weakly decreasing (order="decreasing") along the chain,
    with every label in [min_label, max_label].
    """
    if order not in ("increasing", "decreasing"):
        raise ValueError(f"Unknown order {order}")
    if max_label is None:
        max_label = max(target.n - 1, 1)

    length = target.length

    def extend(perm, steps):
        if len(steps) == length:
            if perm == target:
                yield DecoratedChain(Permutation.identity(), tuple(steps))
            return

        if order == "increasing":
            low = steps[-1].label if steps else min_label
            high = max_label
        else:
            low = min_label
            high = steps[-1].label if steps else max_label

        for k in range(low, high + 1):
            for cover in k_bruhat_covers(perm, k):
                nxt = perm.t(cover.alpha, cover.beta)
                if bruhat_le(nxt, target):
                    yield from extend(nxt, steps + [cover])

    yield from extend(Permutation.identity(), [])


def maxword_chain(p: Permutation) -> DecoratedChain:
    """
    The forced recording chain of the maxword.

    Walking down from p, the block with label k = d1 consists of maxcode(k + 1)
    covers p_i = p_{i+1} t_{alpha, k+1}, alpha smallest with p_{i+1}(alpha) > p_{i+1}(k+1).
    """
    steps = []
    current = p
    while not current.is_identity():
        k = current.d1
        for _ in range(current.maxcode_at(k + 1)):
            pivot = current(k + 1)
            alpha = next(i for i in range(1, k + 1) if current(i) > pivot)
            below = current.t(alpha, k + 1)
            steps.append(cover_up(below, alpha, k + 1, label=k))
            current = below

    return DecoratedChain(Permutation.identity(), tuple(reversed(steps)))


def minword_chain(p: Permutation) -> DecoratedChain:
    """The delta chain from the identity to p, labelled by the alpha of each step"""
    steps = []
    current = Permutation.identity()
    while current != p:
        alpha, beta = delta_positions(current, p)
        steps.append(cover_up(current, alpha, beta, label=alpha))
        current = current.t(alpha, beta)

    return DecoratedChain(Permutation.identity(), tuple(steps))
