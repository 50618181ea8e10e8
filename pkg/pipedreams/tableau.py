"""
Schensted insertion on semistandard Young tableaux.

Cells are (row, column) pairs, 1-based, in English notation.
"""
import logging
import typing
from collections import deque

from .exceptions import EmptyTableau, ShapeMismatch

logger = logging.getLogger("pipedreams")

Word = typing.Tuple[int, ...]
Cell = typing.Tuple[int, int]


class Shape(tuple):
    """A partition. Trailing zero parts are dropped."""

    def __new__(cls, parts: typing.Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeMismatch(error=f"{parts} is not a partition")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def conjugate(self) -> "Shape":
        if not self:
            return Shape()
        return Shape(sum(1 for part in self if part > j) for j in range(self[0]))

    def __repr__(self):
        return f"Shape{tuple(self)}"


class SSYT:
    rows: typing.Tuple[Word, ...]

    def __init__(self, rows: typing.Iterable[typing.Iterable[int]] = ()):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows if row)
        self.validate()

    def validate(self):
        for row in self.rows:
            if any(x < 1 for x in row):
                raise ShapeMismatch(error="Entries must be positive", context={"rows": self.rows})
            if any(a > b for a, b in zip(row, row[1:])):
                raise ShapeMismatch(error="Rows must weakly increase", context={"rows": self.rows})
        for upper, lower in zip(self.rows, self.rows[1:]):
            if len(lower) > len(upper):
                raise ShapeMismatch(error="Row lengths must weakly decrease", context={"rows": self.rows})
            if any(a >= b for a, b in zip(upper, lower)):
                raise ShapeMismatch(error="Columns must strictly increase", context={"rows": self.rows})

    @property
    def shape(self) -> Shape:
        return Shape(len(row) for row in self.rows)

    @property
    def columns(self) -> typing.List[Word]:
        if not self.rows:
            return []
        return [tuple(row[j] for row in self.rows if len(row) > j) for j in range(len(self.rows[0]))]

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entries(self) -> typing.List[int]:
        return [x for row in self.rows for x in row]

    def max_entry(self) -> int:
        return max(self.entries(), default=0)

    def __getitem__(self, cell: Cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def __bool__(self):
        return bool(self.rows)

    def __eq__(self, other):
        return isinstance(other, SSYT) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SSYT(" + "/".join("".join(map(str, row)) if max(row) < 10 else ",".join(map(str, row)) for row in self.rows) + ")"

    def to_list(self) -> typing.List[typing.List[int]]:
        return [list(row) for row in self.rows]


def _mutable(T: SSYT) -> typing.List[typing.List[int]]:
    return [list(row) for row in T.rows]


def row_insert(T: SSYT, a: int) -> typing.Tuple[SSYT, Cell]:
    """T <- a: bump the leftmost entry strictly greater than the incoming one"""
    rows = _mutable(T)
    r = 0
    while True:
        if r == len(rows):
            rows.append([a])
            return SSYT(rows), (r + 1, 1)
        row = rows[r]
        j = next((j for j, x in enumerate(row) if x > a), None)
        if j is None:
            row.append(a)
            return SSYT(rows), (r + 1, len(row))
        row[j], a = a, row[j]
        r += 1


def column_insert(a: int, T: SSYT) -> typing.Tuple[SSYT, Cell]:
    """a -> T: bump the topmost entry weakly greater than the incoming one"""
    rows = _mutable(T)
    c = 0
    while True:
        height = sum(1 for row in rows if len(row) > c)
        i = next((i for i in range(height) if rows[i][c] >= a), None)
        if i is None:
            if height == len(rows):
                rows.append([])
            rows[height].append(a)
            return SSYT(rows), (height + 1, c + 1)
        rows[i][c], a = a, rows[i][c]
        c += 1


def reverse_row_insert(T: SSYT, cell: Cell) -> typing.Tuple[SSYT, int]:
    """Undo a row insertion whose new cell was `cell` (which must be a corner)"""
    rows = _mutable(T)
    r, c = cell
    if len(rows) < r or len(rows[r - 1]) != c or (len(rows) > r and len(rows[r]) >= c):
        raise ShapeMismatch(error=f"{cell} is not a corner", context={"rows": T.rows})

    x = rows[r - 1].pop()
    for i in range(r - 2, -1, -1):
        row = rows[i]
        j = max(j for j, y in enumerate(row) if y < x)
        row[j], x = x, row[j]
    return SSYT(rows), x


def reverse_column_insert(T: SSYT, cell: Cell) -> typing.Tuple[SSYT, int]:
    """Undo a column insertion whose new cell was `cell` (which must be a corner)"""
    rows = _mutable(T)
    r, c = cell
    if len(rows) < r or len(rows[r - 1]) != c or (len(rows) > r and len(rows[r]) >= c):
        raise ShapeMismatch(error=f"{cell} is not a corner", context={"rows": T.rows})

    x = rows[r - 1].pop()
    for j in range(c - 2, -1, -1):
        i = max(i for i, row in enumerate(rows) if len(row) > j and row[j] <= x)
        rows[i][j], x = x, rows[i][j]
    return SSYT(rows), x


def insert_word(word: typing.Iterable[int]) -> SSYT:
    """S(w)"""
    T = SSYT()
    for a in word:
        T, _ = row_insert(T, a)
    return T


def colread(T: SSYT) -> Word:
    """Columns left to right, each read bottom to top"""
    return tuple(x for column in T.columns for x in reversed(column))


def rowread(T: SSYT) -> Word:
    return tuple(x for row in reversed(T.rows) for x in row)


def split_first_column(T: SSYT) -> typing.Tuple[SSYT, Word]:
    """
    Eject one cell from every row, bottom row first. Returns (rest, column word) with
    insert_word(rest reading + column word) == T and the column word strictly decreasing.
    """
    if not T:
        raise EmptyTableau(error="Cannot split an empty tableau")

    ejected = []
    for r in range(len(T.rows), 0, -1):
        T, x = reverse_row_insert(T, (r, len(T.rows[r - 1])))
        ejected.append(x)
    return T, tuple(reversed(ejected))


def split_first_row(T: SSYT) -> typing.Tuple[Word, SSYT]:
    """
    Eject the bottom cell of every column, rightmost column first. Returns
    (row word, rest) with the row word weakly increasing and column-inserting it
    right to left into rest giving T back.
    """
    if not T:
        raise EmptyTableau(error="Cannot split an empty tableau")

    ejected = []
    for c in range(len(T.rows[0]), 0, -1):
        height = sum(1 for row in T.rows if len(row) >= c)
        T, x = reverse_column_insert(T, (height, c))
        ejected.append(x)
    return tuple(ejected), T


def classical_knuth_neighbors(word: typing.Sequence[int]) -> typing.Set[Word]:
    """bac ~ bca for a < b <= c, acb ~ cab for a <= b < c"""
    word = tuple(word)
    found = set()
    for i in range(len(word) - 2):
        x, y, z = word[i : i + 3]
        replacements = []
        # bac <-> bca
        if y < x <= z:
            replacements.append((x, z, y))
        if z < x <= y:
            replacements.append((x, z, y))
        # acb <-> cab
        if x <= z < y:
            replacements.append((y, x, z))
        if y <= z < x:
            replacements.append((y, x, z))
        for replacement in replacements:
            found.add(word[:i] + replacement + word[i + 3 :])
    found.discard(word)
    return found


def knuth_class_words(word: typing.Sequence[int]) -> typing.Set[Word]:
    seen = {tuple(word)}
    queue = deque(seen)
    while queue:
        for neighbor in classical_knuth_neighbors(queue.popleft()):
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
    return seen


def semistandard_tableaux(shape: typing.Iterable[int], max_entry: int) -> typing.Iterator[SSYT]:
    """Every SSYT of the given shape with entries in 1..max_entry"""
    shape = Shape(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: typing.Dict[Cell, int] = {}

    def fill(index):
        if index == len(cells):
            yield SSYT([[filling[(r, c)] for c in range(length)] for r, length in enumerate(shape)])
            return
        r, c = cells[index]
        low = 1
        if c > 0:
            low = max(low, filling[(r, c - 1)])
        if r > 0:
            low = max(low, filling[(r - 1, c)] + 1)
        for value in range(low, max_entry + 1):
            filling[(r, c)] = value
            yield from fill(index + 1)
        filling.pop((r, c), None)

    yield from fill(0)


def pretty(T: SSYT) -> str:
    if not T:
        return "∅"
    width = max(len(str(x)) for x in T.entries())
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in T.rows)
