"""
Bumpless pipe dreams.

Pipe c enters the south edge of column c and travels north and east until it
leaves through the east edge of some row i; perm(D)(i) = c. A grid is stored as
one string per row over the tile alphabet below.
"""
import enum
import logging
import typing
from collections import Counter, deque

from funcy import cached_property, memoize

from .exceptions import (
    BoundaryMismatch,
    DanglingStrand,
    DoubleCrossing,
    EntryExceedsK,
    InvalidBPD,
    NotGrassmannian,
    ParseError,
    ShapeMismatch,
)
from .permutation import Permutation, grassmannian_from_shape
from .polynomial import IntPolynomial
from .tableau import SSYT, Shape

logger = logging.getLogger("pipedreams")

Cell = typing.Tuple[int, int]
Path = typing.Tuple[Cell, ...]

N, S, W, E = "N", "S", "W", "E"


class Tile(str, enum.Enum):
    BLANK = "."
    CROSS = "+"
    R_ELBOW = "r"
    J_ELBOW = "j"
    HORIZONTAL = "-"
    VERTICAL = "|"

    @property
    def edges(self) -> typing.FrozenSet[str]:
        return TILE_EDGES[self.value]


TILE_EDGES = {
    ".": frozenset(),
    "+": frozenset({N, S, W, E}),
    "r": frozenset({S, E}),
    "j": frozenset({N, W}),
    "-": frozenset({W, E}),
    "|": frozenset({N, S}),
}

# (entry side, exit side) of a single strand -> tile
STRAND_TILES = {
    (S, E): "r",
    (W, N): "j",
    (W, E): "-",
    (S, N): "|",
}


class BPD:
    """
    An n x n tile grid. Construction only checks the alphabet and the shape;
    `validate` checks that the grid is a reduced bumpless pipe dream.
    """

    grid: typing.Tuple[str, ...]

    def __init__(self, rows: typing.Iterable[str]):
        rows = tuple(str(row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ParseError(error="A BPD grid must be square", context={"rows": rows})
        bad = {char for row in rows for char in row} - set(TILE_EDGES)
        if bad:
            raise ParseError(error=f"Unknown tiles {sorted(bad)}", context={"rows": rows})
        self.grid = rows

    @classmethod
    def parse(cls, text: str) -> "BPD":
        return cls(line.strip() for line in text.strip().splitlines() if line.strip())

    @classmethod
    def identity(cls, n: int = 0) -> "BPD":
        return rothe_bpd(Permutation.identity(), n)

    @property
    def n(self) -> int:
        return len(self.grid)

    def tile(self, i: int, j: int) -> Tile:
        return Tile(self.grid[i - 1][j - 1])

    def cells(self, char: str) -> typing.List[Cell]:
        return [
            (i, j)
            for i, row in enumerate(self.grid, start=1)
            for j, tile in enumerate(row, start=1)
            if tile == char
        ]

    def blanks(self) -> typing.List[Cell]:
        return self.cells(Tile.BLANK.value)

    def crossings(self) -> typing.List[Cell]:
        return self.cells(Tile.CROSS.value)

    def blank_rows(self) -> typing.Tuple[int, ...]:
        """Row index of every blank, as a sorted multiset"""
        return tuple(i for i, _ in self.blanks())

    def blank_counts(self) -> typing.Tuple[int, ...]:
        return tuple(row.count(".") for row in self.grid)

    def cross_counts(self) -> typing.Tuple[int, ...]:
        return tuple(row.count("+") for row in self.grid)

    @cached_property
    def canonical(self) -> typing.Tuple[str, ...]:
        """The grid with trailing identity pipes removed"""
        rows = list(self.grid)
        while rows:
            n = len(rows)
            last_row_identity = rows[-1] == "|" * (n - 1) + "r"
            last_column_through = all(row[-1] == "-" for row in rows[:-1])
            if not (last_row_identity and last_column_through):
                break
            rows = [row[:-1] for row in rows[:-1]]
        return tuple(rows)

    def __eq__(self, other):
        return isinstance(other, BPD) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __lt__(self, other: "BPD"):
        return self.canonical < other.canonical

    def __repr__(self):
        return "BPD(" + "/".join(self.grid) + ")"

    def __str__(self):
        return render(self)

    def to_list(self) -> typing.List[str]:
        return list(self.grid)

    def enlarged(self, n: int) -> "BPD":
        """Append identity pipes until the grid is n x n"""
        rows = list(self.grid)
        while len(rows) < n:
            m = len(rows)
            rows = [row + "-" for row in rows] + ["|" * m + "r"]
        return BPD(rows)

    def normalized(self) -> "BPD":
        return BPD(self.canonical)

    @cached_property
    def perm(self) -> Permutation:
        return validate(self)

    @cached_property
    def traced(self) -> typing.Dict[int, Path]:
        return trace_pipes(self)

    def pipes(self) -> typing.Dict[int, Path]:
        """Cells visited by every pipe, from the south boundary to the east boundary"""
        self.perm  # validates
        return self.traced

    def weight(self) -> IntPolynomial:
        return weight(self)


def render(D: BPD) -> str:
    return "\n".join(D.grid)


def rothe_bpd(p: Permutation, n: int = None) -> BPD:
    """Every pipe c runs north to row p^-1(c) and turns east"""
    n = max(p.n, n or 0)
    inverse = p.inverse
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == p(i):
                row.append("r")
            elif j < p(i):
                row.append("." if i < inverse(j) else "|")
            else:
                row.append("-" if i < inverse(j) else "+")
        rows.append("".join(row))
    return BPD(rows)


#
# Tracing and validation
#
def _check_edges(D: BPD):
    n = D.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            edges = D.tile(i, j).edges
            context = {"cell": (i, j), "grid": D.grid}
            if i == 1 and N in edges:
                raise BoundaryMismatch(error="A pipe leaves through the north boundary", context=context)
            if j == 1 and W in edges:
                raise BoundaryMismatch(error="A pipe enters through the west boundary", context=context)
            if i == n and S not in edges:
                raise BoundaryMismatch(error=f"No pipe enters column {j}", context=context)
            if j == n and E not in edges:
                raise BoundaryMismatch(error=f"No pipe leaves row {i}", context=context)
            if i < n and (S in edges) != (N in D.tile(i + 1, j).edges):
                raise DanglingStrand(error="Vertical strand does not continue", context=context)
            if j < n and (E in edges) != (W in D.tile(i, j + 1).edges):
                raise DanglingStrand(error="Horizontal strand does not continue", context=context)


def _exit_side(tile: str, entry: str) -> str:
    if tile == "+":
        return N if entry == S else E
    for (enter, leave), char in STRAND_TILES.items():
        if char == tile and enter == entry:
            return leave
    raise DanglingStrand(error=f"A pipe entering {tile!r} from {entry} has nowhere to go")


def trace_pipes(D: BPD) -> typing.Dict[int, Path]:
    """Follow every pipe from the south boundary; assumes the edges are matched"""
    n = D.n
    pipes = {}
    for label in range(1, n + 1):
        i, j, entry = n, label, S
        path = []
        while True:
            path.append((i, j))
            side = _exit_side(D.grid[i - 1][j - 1], entry)
            if side == N:
                if i == 1:
                    raise BoundaryMismatch(error=f"Pipe {label} leaves through the north boundary")
                i, entry = i - 1, S
            else:
                if j == n:
                    break
                j, entry = j + 1, W
        pipes[label] = tuple(path)
    return pipes


def validate(D: BPD) -> Permutation:
    """Check edge matching, boundaries and reducedness, and return perm(D)"""
    _check_edges(D)
    pipes = trace_pipes(D)

    exits = {}
    for label, path in pipes.items():
        row = path[-1][0]
        if row in exits:
            raise BoundaryMismatch(error=f"Pipes {exits[row]} and {label} both leave row {row}")
        exits[row] = label

    vertical, horizontal = {}, {}
    for label, path in pipes.items():
        for index, cell in enumerate(path):
            if D.grid[cell[0] - 1][cell[1] - 1] != "+":
                continue
            entered_from_south = index == 0 or path[index - 1][1] == cell[1]
            (vertical if entered_from_south else horizontal)[cell] = label

    pairs = Counter(frozenset((vertical[cell], horizontal[cell])) for cell in vertical)
    doubled = [tuple(sorted(pair)) for pair, count in pairs.items() if count > 1]
    if doubled:
        raise DoubleCrossing(error=f"Pipes {doubled[0]} cross more than once", context={"grid": D.grid})

    return Permutation(exits[i] for i in range(1, D.n + 1))


def from_pipes(n: int, pipes: typing.Mapping[int, typing.Sequence[Cell]]) -> BPD:
    """
    Build the tile grid drawn by the given pipe paths. Two strands may share a
    cell only by crossing straight through each other.
    """
    strands: typing.Dict[Cell, typing.List[typing.Tuple[str, str]]] = {}
    for label, path in pipes.items():
        for index, (i, j) in enumerate(path):
            if index == 0:
                entry = S
            else:
                pi, pj = path[index - 1]
                entry = S if pj == j and pi == i + 1 else W if pi == i and pj == j - 1 else None
            if index == len(path) - 1:
                leave = E
            else:
                ni, nj = path[index + 1]
                leave = N if nj == j and ni == i - 1 else E if ni == i and nj == j + 1 else None
            if entry is None or leave is None:
                raise DanglingStrand(error=f"Pipe {label} jumps at {(i, j)}", context={"path": path})
            strands.setdefault((i, j), []).append((entry, leave))

    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            here = sorted(strands.get((i, j), []))
            if not here:
                row.append(".")
            elif len(here) == 1:
                row.append(STRAND_TILES[here[0]])
            elif here == [(S, N), (W, E)]:
                row.append("+")
            else:
                raise InvalidBPD(error=f"Pipes collide at {(i, j)}", context={"strands": here})
        rows.append("".join(row))
    return BPD(rows)


def weight(D: BPD) -> IntPolynomial:
    """x_i for every blank in row i"""
    return IntPolynomial.monomial(D.blank_counts())


#
# Enumeration
#
def reroute(path: typing.Sequence[Cell], start: Cell, corner: Cell, end: Cell) -> Path:
    """Replace the stretch of `path` from `start` to `end` by east-then-north through `corner`"""
    a, b = path.index(start), path.index(end)
    (x0, y0), (x1, y1), (x2, y2) = start, corner, end
    middle = [(x0, y) for y in range(y0, y1 + 1)] + [(x, y1) for x in range(x1 - 1, x2 - 1, -1)]
    return tuple(path[:a]) + tuple(middle) + tuple(path[b + 1 :])


def droops(D: BPD) -> typing.List[BPD]:
    """
    Every BPD one droop away: an r-elbow at (i, j) moves to a blank (x, y) south-east
    of it when the rectangle between them holds no other elbow.
    """
    pipes = D.pipes()

    elbows = set(D.cells("r")) | set(D.cells("j"))
    blanks = D.blanks()
    found = []
    for label, path in pipes.items():
        for index, (i, j) in enumerate(path):
            if D.grid[i - 1][j - 1] != "r":
                continue
            for x, y in blanks:
                if x <= i or y <= j:
                    continue
                inside = {(a, b) for a in range(i, x + 1) for b in range(j, y + 1)}
                if (elbows & inside) - {(i, j)}:
                    continue
                start, end = (x, j), (i, y)
                if start not in path or end not in path:
                    continue
                if path.index(start) != index - (x - i) or path.index(end) != index + (y - j):
                    continue
                moved = dict(pipes)
                moved[label] = reroute(path, start, (x, y), end)
                try:
                    result = from_pipes(D.n, moved)
                    validate(result)
                except InvalidBPD:
                    continue
                found.append(result)
    return found


@memoize
def _droop_closure(p: Permutation) -> typing.FrozenSet[BPD]:
    start = rothe_bpd(p)
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in droops(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    logger.debug("BPD(%s) has %d elements", p, len(seen))
    return frozenset(seen)


@memoize
def _all_grids(n: int) -> typing.Dict[Permutation, typing.FrozenSet[BPD]]:
    """
    Backtracking over matched tile grids. A tile is fixed by its west and north
    edges up to a binary choice; rows are pruned by the number of strands going
    south, which is r below row r.
    """
    options = {
        (False, False): ".r",
        (True, False): "-",
        (False, True): "|",
        (True, True): "+j",
    }
    found: typing.Dict[Permutation, set] = {}
    rows: typing.List[str] = []

    def fill_row(i, prefix):
        j = len(prefix) + 1
        if j > n:
            if not prefix.endswith(("r", "-", "+")):
                return
            if sum(1 for tile in prefix if S in TILE_EDGES[tile]) != i:
                return
            rows.append(prefix)
            if i == n:
                try:
                    D = BPD(rows)
                    found.setdefault(validate(D), set()).add(D)
                except InvalidBPD:
                    pass
            else:
                fill_row(i + 1, "")
            rows.pop()
            return

        west = j > 1 and E in TILE_EDGES[prefix[-1]]
        north = i > 1 and S in TILE_EDGES[rows[-1][j - 1]]
        for tile in options[(west, north)]:
            fill_row(i, prefix + tile)

    fill_row(1, "")
    return {p: frozenset(grids) for p, grids in found.items()}


def exhaustive_bpds(p: Permutation, n: int = None) -> typing.FrozenSet[BPD]:
    return _all_grids(max(p.n, n or 0, 1)).get(p, frozenset())


def all_bpds(p: Permutation, method: str = "droop") -> typing.FrozenSet[BPD]:
    if method == "droop":
        return _droop_closure(p)
    if method == "exhaustive":
        return exhaustive_bpds(p)
    raise ValueError(f"Unknown enumeration method {method}")


#
# Grassmannian BPDs and tableaux
#
def _south_columns(D: BPD, row: int) -> typing.List[int]:
    return [j for j, tile in enumerate(D.grid[row - 1], start=1) if S in TILE_EDGES[tile]]


def grassmannian_to_ssyt(D: BPD, k: int) -> SSYT:
    """
    Read the tableau off the top k rows. The strands crossing into row r from
    below sit in columns e_1 < ... < e_r, and the entries <= r of the tableau
    fill the shape with parts e_r - r >= ... >= e_1 - 1.
    """
    p = D.perm
    if not p.descents <= {k}:
        raise NotGrassmannian(error=f"{p} is not {k}-Grassmannian", context={"descents": sorted(p.descents)})
    D = D.enlarged(k + 1)

    rows: typing.List[typing.List[int]] = []
    previous: typing.List[int] = []
    for r in range(1, k + 1):
        columns = _south_columns(D, r)
        shape = list(Shape(reversed([e - i for i, e in enumerate(columns, start=1)])))
        for index, part in enumerate(shape):
            before = previous[index] if index < len(previous) else 0
            if index == len(rows):
                rows.append([])
            rows[index].extend([r] * (part - before))
        previous = shape
    return SSYT(rows)


def ssyt_to_bpd(T: SSYT, k: int) -> BPD:
    """Inverse of grassmannian_to_ssyt: rows above k+1 drawn from the tableau, Rothe below"""
    if len(T.rows) > k:
        raise ShapeMismatch(error=f"A tableau with {len(T.rows)} rows has no {k}-Grassmannian BPD")
    if T.max_entry() > k:
        raise EntryExceedsK(error=f"Entry {T.max_entry()} exceeds {k}", context={"rows": T.rows})

    p = grassmannian_from_shape(T.shape, k)
    n = max(p.n, k + 1)
    rothe = rothe_bpd(p, n)

    def columns_below(r):
        if r == 0:
            return []
        shape = [sum(1 for x in row if x <= r) for row in T.rows[:r]]
        shape += [0] * (r - len(shape))
        return [part + i for i, part in enumerate(reversed(shape), start=1)]

    rows = []
    for r in range(1, k + 1):
        tiles = ["."] * n
        above, below = columns_below(r - 1), columns_below(r)
        for start, end in zip(below, above):
            if start == end:
                tiles[start - 1] = "|"
            else:
                tiles[start - 1] = "r"
                for j in range(start + 1, end):
                    tiles[j - 1] = "-"
                tiles[end - 1] = "j"
        last = below[-1]
        tiles[last - 1] = "r"
        for j in range(last + 1, n + 1):
            tiles[j - 1] = "-"
        rows.append("".join(tiles))

    D = BPD(rows + list(rothe.grid[k:]))
    validate(D)
    return D
