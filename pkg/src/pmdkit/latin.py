"""Latin rectangles, their completion and extension, and generalized ones.

Arrays are lists of rows; symbols are positive integers and ``0`` marks an
empty cell in a partial rectangle.  Row indices in a
:class:`MultisetPartition` are 1-based, as are symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AlreadySquare, Infeasible, InvalidPartition

Grid = list[list[int]]


@dataclass(frozen=True)
class MultisetPartition:
    """Subsets ``X_1..X_k`` of ``[m]`` whose multiset union is ``n * [m]``."""

    m: int
    n: int
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        parts = tuple(frozenset(int(r) for r in p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.m < 1 or self.n < 1:
            raise InvalidPartition("m and n must be positive")
        for i, p in enumerate(parts, 1):
            if not p:
                raise InvalidPartition(f"part {i} is empty")
            if not p <= set(range(1, self.m + 1)):
                raise InvalidPartition(f"part {i} has rows outside 1..{self.m}")
        for r in range(1, self.m + 1):
            c = sum(r in p for p in parts)
            if c != self.n:
                raise InvalidPartition(f"row {r} lies in {c} parts, expected {self.n}")

    @property
    def k(self) -> int:
        return len(self.parts)

    @classmethod
    def of(cls, m: int, n: int, parts: Iterable[Iterable[int]]) -> "MultisetPartition":
        return cls(m, n, tuple(frozenset(p) for p in parts))


# ------------------------------------------------------------ verification


def verify_glr(rows: Sequence[Sequence[int]], part: MultisetPartition | None = None) -> bool:
    """Latin property, plus the rows-of-symbol property when ``part`` is given."""
    if not rows:
        return part is None
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        return False
    for r in rows:
        if any(x < 1 for x in r) or len(set(r)) != width:
            return False
    for j in range(width):
        col = [r[j] for r in rows]
        if len(set(col)) != len(col):
            return False
    if part is not None:
        if len(rows) != part.m or width != part.n:
            return False
        where: dict[int, set[int]] = {}
        for i, r in enumerate(rows, 1):
            for x in r:
                where.setdefault(x, set()).add(i)
        if set(where) != set(range(1, part.k + 1)):
            return False
        return all(where[s] == set(part.parts[s - 1]) for s in where)
    return True


def _is_partial_latin(rows: Sequence[Sequence[int]]) -> bool:
    for r in rows:
        filled = [x for x in r if x]
        if len(set(filled)) != len(filled):
            return False
    for col in zip(*rows):
        filled = [x for x in col if x]
        if len(set(filled)) != len(filled):
            return False
    return True


# -------------------------------------------------------------- matching


def _bipartite_matching(options: Sequence[Sequence[int]]) -> list[int] | None:
    """Perfect matching of left vertices into right values (Kuhn), lowest values preferred."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for s in options[i]:
            if s in seen:
                continue
            seen.add(s)
            if s not in owner or augment(owner[s], seen):
                owner[s] = i
                return True
        return False

    for i in range(len(options)):
        if not augment(i, set()):
            return None
    out = [0] * len(options)
    for s, i in owner.items():
        out[i] = s
    return out


def extend_latin_rectangle(rows: Sequence[Sequence[int]], n: int | None = None) -> Grid:
    """Add one row to an ``m x n`` Latin rectangle on ``[n]``, ``m < n``."""
    rows = [list(r) for r in rows]
    n = n or (len(rows[0]) if rows else 0)
    if len(rows) >= n:
        raise AlreadySquare(f"{len(rows)} x {n} rectangle cannot be extended")
    options = [[s for s in range(1, n + 1) if all(r[j] != s for r in rows)] for j in range(n)]
    new = _bipartite_matching(options)
    if new is None:  # pragma: no cover - impossible for a Latin rectangle (Hall)
        raise Infeasible("no system of distinct representatives")
    return rows + [new]


def complete_partial_latin_rectangle(rows: Sequence[Sequence[int]], n: int | None = None) -> Grid:
    """Fill the zero cells with symbols from ``[n]`` keeping rows and columns repeat-free."""
    grid = [list(r) for r in rows]
    if not grid:
        return grid
    n = n or len(grid[0])
    if not _is_partial_latin(grid) or any(x < 0 or x > n for r in grid for x in r):
        raise Infeasible("input is not a partial Latin rectangle on [n]")
    m, width = len(grid), len(grid[0])
    if width > n:
        raise Infeasible(f"{width} columns cannot be filled from {n} symbols")
    # Hall check per column: empty cells against symbols that fit somewhere in them
    for j in range(width):
        col = {grid[i][j] for i in range(m)} - {0}
        cells = [i for i in range(m) if not grid[i][j]]
        avail = [set(range(1, n + 1)) - col - set(grid[i]) for i in cells]
        opts = [sorted(a) for a in avail]
        if _bipartite_matching(opts) is None:
            union = set().union(*avail) if avail else set()
            raise Infeasible(
                f"column {j + 1}: empty cells cannot take distinct symbols",
                column=j + 1,
                cells=[i + 1 for i in cells],
                symbols=sorted(union),
            )

    rowsets = [set(r) - {0} for r in grid]
    colsets = [{grid[i][j] for i in range(m)} - {0} for j in range(width)]
    empty = [(i, j) for i in range(m) for j in range(width) if not grid[i][j]]

    def options(i: int, j: int) -> list[int]:
        return [s for s in range(1, n + 1) if s not in rowsets[i] and s not in colsets[j]]

    def solve(left: list[tuple[int, int]]) -> bool:
        if not left:
            return True
        best = min(range(len(left)), key=lambda k: (len(options(*left[k])), left[k]))
        i, j = left[best]
        rest = left[:best] + left[best + 1 :]
        for s in options(i, j):
            grid[i][j] = s
            rowsets[i].add(s)
            colsets[j].add(s)
            if solve(rest):
                return True
            rowsets[i].discard(s)
            colsets[j].discard(s)
            grid[i][j] = 0
        return False

    if not solve(empty):
        raise Infeasible("no completion exists")
    return grid


# ------------------------------------------------------------ constructions


def build_glr(part: MultisetPartition) -> Grid:
    """Generalized ``m x n`` Latin rectangle with symbol ``i`` in exactly the rows ``X_i``.

    Induction on ``m``: drop row ``m``, solve the smaller instance with the
    parts through row ``m`` numbered first, erase symbols above ``n``,
    complete on ``[n]``, extend by one row, and keep the new row as row ``m``.
    The erased rectangle does not always have a completion; the last row is
    then matched directly, and as a last resort the whole rectangle comes
    from :func:`glr_by_edge_coloring`.
    """
    m, n = part.m, part.n
    if m > n:
        raise InvalidPartition(f"needs m <= n, got m={m}, n={n}")
    if m == 1:
        return [list(range(1, part.k + 1))]
    through = [i for i, p in enumerate(part.parts) if m in p]
    others = [i for i, p in enumerate(part.parts) if m not in p]
    # symbols 1..n go to the parts through row m; the rest follow
    relabel = {old: new for new, old in enumerate(through + others, 1)}
    sub_parts, sub_map = [], []
    for old in through + others:
        rest = part.parts[old] - {m}
        if rest:
            sub_parts.append(rest)
            sub_map.append(relabel[old])
    small = build_glr(MultisetPartition(m - 1, n, tuple(sub_parts)))
    small = [[sub_map[x - 1] for x in r] for r in small]
    last = _last_row(small, n)
    if last is None:
        _ROUTE["coloring"] += 1
        return glr_by_edge_coloring(part)
    out = small + [last]
    back = {new: old + 1 for old, new in relabel.items()}
    return [[back[x] for x in r] for r in out]


_ROUTE = {"completion": 0, "direct": 0, "coloring": 0}


def _last_row(small: Grid, n: int) -> list[int] | None:
    """Row ``m`` over the symbols ``1..n`` given the rows above.

    First the completion/extension route; when the erased rectangle has no
    completion, a direct choice of distinct symbols missing from each column.
    """
    erased = [[x if x <= n else 0 for x in r] for r in small]
    try:
        full = complete_partial_latin_rectangle(erased, n)
    except Infeasible:
        options = [[s for s in range(1, n + 1) if all(r[j] != s for r in small)] for j in range(n)]
        row = _bipartite_matching(options)
        if row is not None:
            _ROUTE["direct"] += 1
        return row
    _ROUTE["completion"] += 1
    return extend_latin_rectangle(full, n)[-1]


def glr_by_edge_coloring(part: MultisetPartition) -> Grid:
    """Same object via a proper ``n``-edge-colouring of the parts/rows incidence graph.

    Works whenever every part has at most ``n`` rows, so ``m > n`` is allowed.
    """
    m, n = part.m, part.n
    if max(len(p) for p in part.parts) > n:
        raise InvalidPartition(f"a part has more than {n} rows")
    # colour[(k, r)] = column; left vertices are parts, right vertices rows
    at_part: list[dict[int, int]] = [dict() for _ in part.parts]
    at_row: list[dict[int, int]] = [dict() for _ in range(m + 1)]

    def free(d: dict[int, int]) -> int:
        return next(c for c in range(1, n + 1) if c not in d)

    for k, p in enumerate(part.parts):
        for r in sorted(p):
            a, b = free(at_part[k]), free(at_row[r])
            if a != b and a in at_row[r]:
                # flip the a/b path starting at row r
                path = []
                side, v, c = "row", r, a
                while True:
                    table = at_row if side == "row" else at_part
                    if c not in table[v]:
                        break
                    w = table[v][c]
                    path.append((side, v, w, c))
                    side, v = ("part", w) if side == "row" else ("row", w)
                    c = b if c == a else a
                for side, v, w, c in path:
                    rv, kv = (v, w) if side == "row" else (w, v)
                    del at_row[rv][c]
                    del at_part[kv][c]
                for side, v, w, c in path:
                    rv, kv = (v, w) if side == "row" else (w, v)
                    c2 = b if c == a else a
                    at_row[rv][c2] = kv
                    at_part[kv][c2] = rv
            at_part[k][a] = r
            at_row[r][a] = k
    grid = [[0] * n for _ in range(m)]
    for r in range(1, m + 1):
        for c, k in at_row[r].items():
            grid[r - 1][c - 1] = k + 1
    return grid


def cyclic_latin_rectangle(rows: int, cols: int) -> Grid:
    """``rows x cols`` rectangle with entry ``((s + t - 2) mod max) + 1`` (1-based s, t)."""
    size = max(rows, cols)
    return [[(s + t) % size + 1 for t in range(cols)] for s in range(rows)]


def multiset_partitions(m: int, n: int) -> Iterator[MultisetPartition]:
    """Every :class:`MultisetPartition` of ``n * [m]``, each multiset of parts once."""
    masks = list(range(1, 1 << m))

    def rec(start: int, left: list[int], chosen: list[int]):
        if not any(left):
            yield MultisetPartition(m, n, tuple(frozenset(r + 1 for r in range(m) if x >> r & 1) for x in chosen))
            return
        for k in range(start, len(masks)):
            x = masks[k]
            if all(left[r] for r in range(m) if x >> r & 1):
                for r in range(m):
                    if x >> r & 1:
                        left[r] -= 1
                chosen.append(x)
                yield from rec(k, left, chosen)
                chosen.pop()
                for r in range(m):
                    if x >> r & 1:
                        left[r] += 1

    yield from rec(0, [n] * m, [])


def random_multiset_partition(m: int, n: int, rng) -> MultisetPartition:
    """Parts drawn by ``rng`` (a :class:`random.Random`) from the rows still short."""
    left = [n] * m
    parts = []
    while any(left):
        open_rows = [r for r in range(m) if left[r]]
        k = rng.randint(1, len(open_rows))
        pick = rng.sample(open_rows, k)
        for r in pick:
            left[r] -= 1
        parts.append(frozenset(r + 1 for r in pick))
    return MultisetPartition(m, n, tuple(parts))


def to_json(rows: Sequence[Sequence[int]]) -> dict:
    return {"rows": [list(r) for r in rows], "symbols": max((x for r in rows for x in r), default=0)}


def from_json(doc: dict) -> Grid:
    return [list(map(int, r)) for r in doc["rows"]]


__all__ = [
    "MultisetPartition",
    "build_glr",
    "complete_partial_latin_rectangle",
    "cyclic_latin_rectangle",
    "extend_latin_rectangle",
    "glr_by_edge_coloring",
    "multiset_partitions",
    "random_multiset_partition",
    "verify_glr",
]
