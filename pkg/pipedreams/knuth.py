"""
Generalized Knuth relations on plactic biwords, and the fibers of phi.
"""
import logging
import typing
from collections import deque
from dataclasses import dataclass, field

from . import conf
from .bpd import BPD, all_bpds
from .exceptions import ClassTooLarge, InvalidBiletter, NotPlactic
from .insertion import Biletter, PlacticBiword, all_preimages_right, maxword, minword
from .permutation import Permutation, decorated_chains

logger = logging.getLogger("pipedreams")

RULES = ("R1", "R2", "R3", "R4")


@dataclass(frozen=True, order=True)
class KnuthMove:
    """
    `position` is the index of the leftmost biletter involved. Forward reads the
    relation left to right as displayed: bac -> bca, acb -> cab, (k, k) -> (k+1, k)
    and (k+1, k+1) -> (k+1, k).
    """

    rule: str
    position: int
    direction: str = "forward"

    def inverse(self) -> "KnuthMove":
        return KnuthMove(self.rule, self.position, "backward" if self.direction == "forward" else "forward")

    def __str__(self):
        arrow = "->" if self.direction == "forward" else "<-"
        return f"{self.rule}{arrow}@{self.position}"


def _replace(Q: PlacticBiword, position: int, letters) -> typing.Optional[PlacticBiword]:
    biletters = list(Q)
    try:
        biletters[position : position + len(letters)] = [Biletter(a, k) for a, k in letters]
        return PlacticBiword(biletters)
    except (InvalidBiletter, NotPlactic):
        return None


def neighbors(Q: PlacticBiword) -> typing.Set[typing.Tuple[PlacticBiword, KnuthMove]]:
    """Every plactic biword one generalized Knuth move away"""
    Q = Q if isinstance(Q, PlacticBiword) else PlacticBiword(Q)
    top, bottom = Q.top, Q.bottom
    found = set()

    def add(position, rule, direction, letters):
        result = _replace(Q, position, letters)
        if result is not None and result != Q:
            found.add((result, KnuthMove(rule, position, direction)))

    for i in range(len(Q) - 2):
        x, y, z = top[i : i + 3]
        k = bottom[i]
        if not bottom[i] == bottom[i + 1] == bottom[i + 2]:
            continue
        # bac ~ bca, a < b <= c
        if y < x <= z:
            add(i, "R1", "forward", [(x, k), (z, k), (y, k)])
        if z < x <= y:
            add(i, "R1", "backward", [(x, k), (z, k), (y, k)])
        # acb ~ cab, a <= b < c
        if x <= z < y:
            add(i, "R2", "forward", [(y, k), (x, k), (z, k)])
        if y <= z < x:
            add(i, "R2", "backward", [(y, k), (x, k), (z, k)])

    for i in range(len(Q) - 1):
        x, y = top[i : i + 2]
        k1, k2 = bottom[i : i + 2]
        if k1 == k2:
            # (a b / k k) ~ (a b / k+1 k), a <= b
            if x <= y:
                add(i, "R3", "forward", [(x, k1 + 1), (y, k2)])
            # (b a / k+1 k+1) ~ (b a / k+1 k), a < b
            if y < x:
                add(i, "R4", "forward", [(x, k1), (y, k2 - 1)])
        elif k1 == k2 + 1:
            if x <= y:
                add(i, "R3", "backward", [(x, k2), (y, k2)])
            if y < x:
                add(i, "R4", "backward", [(x, k1), (y, k1)])

    return found


def apply_move(Q: PlacticBiword, move: KnuthMove) -> PlacticBiword:
    for result, candidate in neighbors(Q):
        if candidate == move:
            return result
    raise ValueError(f"{move} does not apply to {Q}")


def _bfs(Q: PlacticBiword, label_bound: int = None):
    limit = conf.get("NODE_LIMIT")
    parents: typing.Dict[PlacticBiword, typing.Optional[tuple]] = {Q: None}
    edges = []
    queue = deque([Q])
    while queue:
        current = queue.popleft()
        for nxt, move in sorted(neighbors(current), key=lambda pair: (pair[1], pair[0])):
            edges.append((current, nxt, move))
            if nxt in parents:
                continue
            if label_bound is not None and not all(1 <= k <= label_bound for k in nxt.bottom):
                message = f"{nxt} leaves the label range [1, {label_bound}]"
                if conf.is_debug():
                    raise AssertionError(message)
                logger.error(message)
            parents[nxt] = (current, move)
            if len(parents) > limit:
                raise ClassTooLarge(error=f"Knuth class of {Q} exceeds {limit} biwords")
            queue.append(nxt)
    return parents, edges


def knuth_class(Q, label_bound: int = None) -> typing.Set[PlacticBiword]:
    Q = Q if isinstance(Q, PlacticBiword) else PlacticBiword(Q)
    parents, _ = _bfs(Q, label_bound)
    return set(parents)


@dataclass
class KnuthGraph:
    nodes: typing.List[PlacticBiword]
    edges: typing.List[typing.Tuple[PlacticBiword, PlacticBiword, KnuthMove]]


def knuth_graph(Q) -> KnuthGraph:
    Q = Q if isinstance(Q, PlacticBiword) else PlacticBiword(Q)
    parents, edges = _bfs(Q)
    # each undirected edge once, from its forward side
    forward = [edge for edge in edges if edge[2].direction == "forward"]
    return KnuthGraph(nodes=sorted(parents), edges=forward)


def to_dot(graph: KnuthGraph) -> str:
    index = {node: i for i, node in enumerate(graph.nodes)}
    lines = ["graph knuth {"]
    for node, i in index.items():
        lines.append(f'  n{i} [label="{node}"];')
    for source, target, move in graph.edges:
        lines.append(f'  n{index[source]} -- n{index[target]} [label="{move.rule}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def knuth_path(
    Q: PlacticBiword, target: PlacticBiword
) -> typing.Optional[typing.List[typing.Tuple[KnuthMove, PlacticBiword]]]:
    """A shortest list of moves taking Q to target, or None when they are not equivalent"""
    parents, _ = _bfs(Q)
    if target not in parents:
        return None
    path = []
    current = target
    while parents[current] is not None:
        previous, move = parents[current]
        path.append((move, current))
        current = previous
    return list(reversed(path))


def _eccentricity(start: PlacticBiword, members: typing.Set[PlacticBiword]) -> int:
    distance = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nxt, _ in neighbors(current):
            if nxt in members and nxt not in distance:
                distance[nxt] = distance[current] + 1
                queue.append(nxt)
    return max(distance.values())


def diameter(members: typing.Set[PlacticBiword]) -> int:
    return max((_eccentricity(node, members) for node in members), default=0)


#
# Fibers
#
def fiber(D: BPD, max_label: int = None) -> typing.Set[PlacticBiword]:
    """
    All plactic Q with phi(Q) = D. Right insertion records a weakly decreasing chain,
    so every such chain with labels below the window is inverted.
    """
    p = D.perm
    if max_label is None:
        max_label = max(p.n - 1, 1)
    words = set()
    for chain in decorated_chains(p, order="decreasing", max_label=max_label):
        words.update(all_preimages_right(D, chain))
    logger.debug("fiber of %r has %d biwords", D, len(words))
    return words


def iter_plactic_biwords(length: int, max_label: int) -> typing.Iterator[PlacticBiword]:
    """Plactic biwords of the given length with labels in 1..max_label"""

    def extend(prefix, ceiling):
        if len(prefix) == length:
            yield PlacticBiword(prefix)
            return
        for k in range(ceiling, 0, -1):
            for a in range(1, k + 1):
                yield from extend(prefix + [Biletter(a, k)], k)

    yield from extend([], max_label)


#
# Verification
#
@dataclass
class VerificationReport:
    """Outcome of a verification sweep. Failures are recorded, never raised."""

    name: str
    rows: typing.List[dict] = field(default_factory=list)
    failures: typing.List[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        logger.warning("%s: %s", self.name, message)
        self.failures.append(message)

    def merge(self, other: "VerificationReport"):
        self.rows.extend(other.rows)
        self.failures.extend(other.failures)
        self.checked += other.checked

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "rows": self.rows,
            "failures": self.failures,
        }

    def table(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.ok else 'FAIL'} ({self.checked} checked)"]
        if self.rows:
            keys = list(self.rows[0])
            widths = {key: max(len(key), *(len(str(row.get(key, ""))) for row in self.rows)) for key in keys}
            lines.append("  " + "  ".join(key.ljust(widths[key]) for key in keys))
            for row in self.rows:
                lines.append("  " + "  ".join(str(row.get(key, "")).ljust(widths[key]) for key in keys))
        lines.extend(f"  ! {failure}" for failure in self.failures)
        return "\n".join(lines)


def verify_fiber(D: BPD, report: VerificationReport):
    p = D.perm
    words = fiber(D)
    report.checked += 1
    row = {"perm": str(p), "bpd": "/".join(D.canonical) or "-", "fiber": len(words), "diameter": ""}
    report.rows.append(row)

    if not words:
        report.fail(f"empty fiber for {D!r}")
        return

    Qmax, Qmin = maxword(D), minword(D)
    if Qmax not in words:
        report.fail(f"maxword {Qmax} of {D!r} is not in its fiber")
    if Qmin not in words:
        report.fail(f"minword {Qmin} of {D!r} is not in its fiber")

    component = knuth_class(Qmax, label_bound=max(p.n - 1, 1))
    if component != words:
        report.fail(f"fiber of {D!r} has {len(words)} biwords, the Knuth class of its maxword {len(component)}")
    row["diameter"] = diameter(words)


def verify_connectivity(p: Permutation, D: BPD = None) -> VerificationReport:
    """Every fiber over BPD(p) (or just D) is one Knuth class containing its maxword and minword"""
    report = VerificationReport(name=f"connectivity {p}")
    for each in [D] if D is not None else sorted(all_bpds(p)):
        try:
            verify_fiber(each, report)
        except Exception as ex:
            logger.exception("connectivity check crashed on %r", each)
            report.fail(f"{each!r}: {ex}")
    return report
