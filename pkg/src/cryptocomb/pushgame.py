"""The push game on simplex boards, solved by linear algebra over Z_m.

A board is a set of regions, each an (n+1)-subset of vertices, covering
every vertex; vertices carry labels in Z_m. A push adds 1 (mod m) to
every vertex of one region. Writing A for the vertex-by-region incidence
matrix, reaching target labels t from labels l means solving

    A x = (t - l)  (mod m)

for a vector x counting pushes per region. All structural questions
(solvability, number of solutions, number of reachable label classes)
reduce to the Smith normal form U A V = D over the integers, which this
module computes exactly with unimodular transform tracking.

The same machinery decides (n+1)-colorability: for a region-connected
board the number of label classes modulo the push moves equals m^n
exactly when the board's graph is (n+1)-colorable. Disconnected boards
are split into region-connected components and the criterion is applied
per component when the components overlap each other only inside single
regions and without cycles; otherwise the decision is inconclusive.
"""
from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    BadRegion,
    HypothesesNotMet,
    ImproperColoring,
    MalformedRegion,
    NotSimplexGraph,
    TooMany,
)


@dataclass(frozen=True)
class SimplexBoard:
    """Immutable board: n, modulus m, regions, labels.

    Regions are tuples of n+1 distinct vertex ids; vertex ids must be
    exactly 0..v-1 and every vertex must lie in at least one region.
    """

    n: int
    m: int
    num_vertices: int
    regions: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise MalformedRegion("simplex dimension n must be at least 1")
        if self.m < 2:
            raise ValueError("label modulus m must be at least 2")
        if not self.regions:
            raise NotSimplexGraph("a board needs at least one region")
        object.__setattr__(
            self, "regions", tuple(tuple(sorted(r)) for r in self.regions)
        )
        covered = set()
        for r in self.regions:
            if len(r) != self.n + 1 or len(set(r)) != self.n + 1:
                raise MalformedRegion(
                    f"region {r} is not a set of {self.n + 1} distinct vertices"
                )
            for x in r:
                if not isinstance(x, int) or not 0 <= x < self.num_vertices:
                    raise MalformedRegion(f"vertex {x} outside 0..{self.num_vertices - 1}")
            covered.update(r)
        if covered != set(range(self.num_vertices)):
            missing = sorted(set(range(self.num_vertices)) - covered)
            raise NotSimplexGraph(f"vertices {missing} belong to no region")
        if len(self.labels) != self.num_vertices:
            raise ValueError("labels must have one entry per vertex")
        object.__setattr__(self, "labels", tuple(x % self.m for x in self.labels))

    @property
    def num_regions(self) -> int:
        return len(self.regions)

    def with_labels(self, labels: Sequence[int]) -> SimplexBoard:
        return SimplexBoard(
            self.n, self.m, self.num_vertices, self.regions, tuple(labels)
        )

    def edges(self) -> set[tuple[int, int]]:
        """Graph edges: pairs of vertices sharing a region."""
        out: set[tuple[int, int]] = set()
        for r in self.regions:
            for a, b in itertools.combinations(r, 2):
                out.add((a, b))
        return out

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "vertices": self.num_vertices,
            "regions": [list(r) for r in self.regions],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json_obj(cls, obj) -> SimplexBoard:
        try:
            n = int(obj["n"])
            m = int(obj["m"])
            vertices = int(obj["vertices"])
            regions = tuple(tuple(int(x) for x in r) for r in obj["regions"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed board JSON: {exc}") from exc
        labels = obj.get("labels")
        if labels is None:
            labels = [0] * vertices
        return cls(n, m, vertices, regions, tuple(int(x) for x in labels))

    @classmethod
    def from_json(cls, text: str) -> SimplexBoard:
        return cls.from_json_obj(json.loads(text))


def make_board(
    n: int,
    m: int,
    regions: Iterable[Iterable[int]],
    labels: Sequence[int] | None = None,
) -> SimplexBoard:
    regions = tuple(tuple(r) for r in regions)
    vertices = 1 + max((x for r in regions for x in r), default=-1)
    if labels is None:
        labels = (0,) * vertices
    return SimplexBoard(n, m, vertices, regions, tuple(labels))


# builders


def triangular_board(rows: int, m: int = 2, labels: Sequence[int] | None = None) -> SimplexBoard:
    """Triangle of coins with `rows` rows; regions are the small triangles.

    rows R gives R(R+1)/2 vertices and (R-1)^2 regions.
    """
    if rows < 2:
        raise ValueError("a triangular board needs at least 2 rows")
    index: dict[tuple[int, int], int] = {}
    for r in range(rows):
        for c in range(r + 1):
            index[(r, c)] = len(index)
    regions = []
    for r in range(rows - 1):
        for c in range(r + 1):  # point-up triangles
            regions.append((index[(r, c)], index[(r + 1, c)], index[(r + 1, c + 1)]))
        for c in range(r):  # point-down triangles
            regions.append((index[(r, c)], index[(r, c + 1)], index[(r + 1, c + 1)]))
    return make_board(2, m, regions, labels)


def hexagonal_board(side: int, m: int = 2, labels: Sequence[int] | None = None) -> SimplexBoard:
    """Hexagonal coin cluster with `side` coins per edge.

    side s gives 3s^2 - 3s + 1 vertices and 6(s-1)^2 triangular regions.
    """
    if side < 2:
        raise ValueError("a hexagonal board needs side at least 2")
    lengths = list(range(side, 2 * side)) + list(range(2 * side - 2, side - 1, -1))
    index: dict[tuple[int, int], int] = {}
    for r, length in enumerate(lengths):
        for c in range(length):
            index[(r, c)] = len(index)
    regions = []
    for r in range(len(lengths) - 1):
        a, b = lengths[r], lengths[r + 1]
        if b == a + 1:  # next row longer: apexes point up from row r
            for c in range(a):
                regions.append((index[(r, c)], index[(r + 1, c)], index[(r + 1, c + 1)]))
            for c in range(a - 1):
                regions.append((index[(r, c)], index[(r, c + 1)], index[(r + 1, c + 1)]))
        else:  # next row shorter: mirror image
            for c in range(b):
                regions.append((index[(r, c)], index[(r, c + 1)], index[(r + 1, c)]))
            for c in range(b - 1):
                regions.append((index[(r, c + 1)], index[(r + 1, c)], index[(r + 1, c + 1)]))
    return make_board(2, m, regions, labels)


def build_board(spec: str, m: int = 2, labels: Sequence[int] | None = None) -> SimplexBoard:
    """Parse builder shorthand: 'triangular:ROWS' or 'hexagonal:SIDE'."""
    kind, _, arg = spec.partition(":")
    if not arg:
        raise ValueError(f"builder spec needs an argument: {spec!r}")
    size = int(arg)
    if kind == "triangular":
        return triangular_board(size, m, labels)
    if kind == "hexagonal":
        return hexagonal_board(size, m, labels)
    raise ValueError(f"unknown builder {kind!r}")


def push(board: SimplexBoard, region: int, times: int = 1) -> SimplexBoard:
    """Add `times` (mod m) to every vertex of one region."""
    if not 0 <= region < board.num_regions:
        raise BadRegion(f"region {region} outside 0..{board.num_regions - 1}")
    labels = list(board.labels)
    for v in board.regions[region]:
        labels[v] = (labels[v] + times) % board.m
    return board.with_labels(labels)


def incidence_matrix(board: SimplexBoard) -> list[list[int]]:
    """Vertex-by-region 0/1 matrix A."""
    A = [[0] * board.num_regions for _ in range(board.num_vertices)]
    for j, r in enumerate(board.regions):
        for v in r:
            A[v][j] = 1
    return A


# integer Smith normal form with transforms


def smith_normal_form(
    matrix: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]], int]:
    """U A V = D with U, V unimodular and D = diag(d_1 | d_2 | ... | d_s).

    Returns (U, D, V, s). Exact integer arithmetic; row and column
    operations are mirrored into U and V so both transforms stay
    unimodular by construction.
    """
    D = [list(row) for row in matrix]
    rows = len(D)
    cols = len(D[0]) if rows else 0
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):  # row dst += factor * row src
        Drow, Usrc, Udst = D[src], U[src], U[dst]
        Ddst = D[dst]
        for k in range(cols):
            Ddst[k] += factor * Drow[k]
        for k in range(rows):
            Udst[k] += factor * Usrc[k]

    def add_col(src, dst, factor):  # col dst += factor * col src
        for row in D:
            row[dst] += factor * row[src]
        for row in V:
            row[dst] += factor * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate a pivot of least magnitude in the trailing block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = abs(D[i][j])
                if x and (best is None or x < best):
                    best = x
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t, retrying if remainders appear
            dirty = False
            for i in range(t + 1, rows):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # divisibility: pivot must divide the rest of the block
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if D[i][j] % D[t][t]:
                    add_row(i, t, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if D[t][t] < 0:
            negate_row(t)
        t += 1
    return U, D, V, t


@dataclass(frozen=True)
class BoardSystem:
    """Cached SNF of a board's incidence matrix (labels play no part)."""

    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    diag: tuple[int, ...]
    rank: int
    num_vertices: int
    num_regions: int


@lru_cache(maxsize=256)
def _system_for(num_vertices: int, regions: tuple[tuple[int, ...], ...]) -> BoardSystem:
    A = [[0] * len(regions) for _ in range(num_vertices)]
    for j, r in enumerate(regions):
        for v in r:
            A[v][j] = 1
    U, D, V, s = smith_normal_form(A)
    diag = tuple(D[i][i] for i in range(s))
    return BoardSystem(
        U=tuple(tuple(row) for row in U),
        V=tuple(tuple(row) for row in V),
        diag=diag,
        rank=s,
        num_vertices=num_vertices,
        num_regions=len(regions),
    )


def board_system(board: SimplexBoard) -> BoardSystem:
    return _system_for(board.num_vertices, board.regions)


def _check_target(board: SimplexBoard, target: Sequence[int]) -> tuple[int, ...]:
    if len(target) != board.num_vertices:
        raise ValueError("target must have one entry per vertex")
    return tuple(x % board.m for x in target)


def solve(board: SimplexBoard, target: Sequence[int]) -> tuple[int, ...] | None:
    """Pushes per region reaching target from the current labels, or None.

    Solves A x = (target - labels) mod m through the Smith form: with
    U A V = D the system becomes D y = U b, each row d_i y_i = c_i (mod m)
    solvable exactly when gcd(d_i, m) divides c_i; zero rows demand
    c_i = 0 (mod m). The returned plan is V y reduced mod m.
    """
    target = _check_target(board, target)
    sys_ = board_system(board)
    m = board.m
    b = [(t - l) % m for t, l in zip(target, board.labels)]
    c = [sum(u * x for u, x in zip(row, b)) % m for row in sys_.U]
    y = [0] * board.num_regions
    for i, d in enumerate(sys_.diag):
        g = math.gcd(d, m)
        if c[i] % g:
            return None
        md = m // g
        y[i] = (c[i] // g) * pow(d // g, -1, md) % md
    for i in range(sys_.rank, board.num_vertices):
        if c[i] % m:
            return None
    plan = tuple(
        sum(sys_.V[i][j] * y[j] for j in range(board.num_regions)) % m
        for i in range(board.num_regions)
    )
    assert _apply_plan(board, plan).labels == target, "solver self-check failed"
    return plan


def _apply_plan(board: SimplexBoard, plan: Sequence[int]) -> SimplexBoard:
    out = board
    for j, times in enumerate(plan):
        if times:
            out = push(out, j, times)
    return out


def is_solvable(board: SimplexBoard, target: Sequence[int]) -> bool:
    return solve(board, target) is not None


def exact_count(board: SimplexBoard) -> int:
    """Number of distinct solutions of any solvable instance on this board.

    Solutions of A x = b (mod m) form a coset of the kernel, whose size is
    m^(r - s) * prod gcd(d_i, m) straight from the Smith form.
    """
    sys_ = board_system(board)
    out = board.m ** (board.num_regions - sys_.rank)
    for d in sys_.diag:
        out *= math.gcd(d, board.m)
    return out


def image_size(board: SimplexBoard) -> int:
    """Number of label differences reachable by pushes: |A Z_m^r|."""
    sys_ = board_system(board)
    out = 1
    for d in sys_.diag:
        out *= board.m // math.gcd(d, board.m)
    return out


def class_count(board: SimplexBoard) -> int:
    """Number of push-equivalence classes of labelings: m^v / |image|."""
    return board.m**board.num_vertices // image_size(board)


def count_solutions(board: SimplexBoard) -> int:
    """Closed-form solution count m^(r - v + n) for well-behaved boards.

    Valid when the board is region-connected and its graph is properly
    (n+1)-colorable; those hypotheses make rank considerations collapse
    so the kernel has exactly m^(r - v + n) elements. Raises
    HypothesesNotMet otherwise (exact_count works unconditionally).
    """
    if not region_connected(board):
        raise HypothesesNotMet("board is not region-connected")
    if proper_coloring(board) is None:
        raise HypothesesNotMet(f"board graph is not {board.n + 1}-colorable")
    return board.m ** (board.num_regions - board.num_vertices + board.n)


def enumerate_solutions(
    board: SimplexBoard, target: Sequence[int], cap: int = 10000
) -> list[tuple[int, ...]]:
    """All push plans reaching target, in lexicographic order.

    The coset is generated from the Smith form: each bounded row d_i
    contributes gcd(d_i, m) choices spaced m/gcd apart, each free column
    a full range of m. Raises TooMany if the count exceeds cap.
    """
    base = solve(board, target)
    if base is None:
        return []
    total = exact_count(board)
    if total > cap:
        raise TooMany(f"{total} solutions exceed cap {cap}")
    sys_ = board_system(board)
    m = board.m
    r = board.num_regions
    axes = []
    for i, d in enumerate(sys_.diag):
        g = math.gcd(d, m)
        if g > 1:
            axes.append((i, [t * (m // g) for t in range(g)]))
    for j in range(sys_.rank, r):
        axes.append((j, list(range(m))))
    out = []
    for combo in itertools.product(*(vals for _, vals in axes)):
        y = [0] * r
        for (j, _), val in zip(axes, combo):
            y[j] = val
        delta = [
            sum(sys_.V[i][j] * y[j] for j in range(r)) % m for i in range(r)
        ]
        out.append(tuple((b + d) % m for b, d in zip(base, delta)))
    assert len(set(out)) == len(out) == total, "kernel enumeration self-check failed"
    return sorted(out)


# colorability through the class-count criterion


def proper_coloring(board: SimplexBoard) -> tuple[int, ...] | None:
    """A coloring giving every region all n+1 colors, or None.

    Backtracking over vertices in region-major order with clique pruning;
    exact, intended for the modest board sizes this package works with.
    """
    n1 = board.n + 1
    adj: list[set[int]] = [set() for _ in range(board.num_vertices)]
    for a, b in board.edges():
        adj[a].add(b)
        adj[b].add(a)
    order: list[int] = []
    seen: set[int] = set()
    for r in board.regions:
        for v in r:
            if v not in seen:
                seen.add(v)
                order.append(v)
    colors = [-1] * board.num_vertices

    def backtrack(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        used = {colors[u] for u in adj[v] if colors[u] >= 0}
        for c in range(n1):
            if c not in used:
                colors[v] = c
                if backtrack(pos + 1):
                    return True
                colors[v] = -1
        return False

    if not backtrack(0):
        return None
    # a proper coloring of the region cliques uses all n+1 colors per region
    for r in board.regions:
        assert len({colors[v] for v in r}) == n1
    return tuple(colors)


def invariant_vector(
    board: SimplexBoard, coloring: Sequence[int] | None = None
) -> tuple[int, ...]:
    """Push-invariant element of Z_m^n attached to the current labels.

    Colors 0..n-1 contribute their label to one coordinate each; color n
    subtracts the label from every coordinate. Each push adds the label
    increment once per color, so the total is unchanged mod m.
    """
    coloring = _checked_coloring(board, coloring)
    m = board.m
    acc = [0] * board.n
    for v, label in enumerate(board.labels):
        c = coloring[v]
        if c < board.n:
            acc[c] = (acc[c] + label) % m
        else:
            for i in range(board.n):
                acc[i] = (acc[i] - label) % m
    return tuple(acc)


def _checked_coloring(
    board: SimplexBoard, coloring: Sequence[int] | None
) -> Sequence[int]:
    if coloring is None:
        coloring = proper_coloring(board)
        if coloring is None:
            raise HypothesesNotMet(f"board graph is not {board.n + 1}-colorable")
        return coloring
    if len(coloring) != board.num_vertices:
        raise ImproperColoring("coloring must assign every vertex a color")
    for r in board.regions:
        cols = {coloring[v] for v in r}
        if cols != set(range(board.n + 1)):
            raise ImproperColoring(f"region {r} does not carry all {board.n + 1} colors")
    return coloring


def solvable_by_invariant(
    board: SimplexBoard, target: Sequence[int], coloring: Sequence[int] | None = None
) -> bool:
    """Invariant test: reachable iff both labelings share the invariant.

    Requires a proper coloring; sound and complete on region-connected
    colorable boards (on other boards use solve, which is always exact).
    """
    coloring = _checked_coloring(board, coloring)
    target = _check_target(board, target)
    return invariant_vector(board, coloring) == invariant_vector(
        board.with_labels(target), coloring
    )


def region_components(board: SimplexBoard) -> list[list[int]]:
    """Connected components of regions, adjacency = sharing a facet.

    Two regions count as adjacent when they share n vertices (a common
    facet of the two simplexes).
    """
    r = board.num_regions
    parent = list(range(r))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    sets = [set(reg) for reg in board.regions]
    for i in range(r):
        for j in range(i + 1, r):
            if len(sets[i] & sets[j]) == board.n:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(r):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def region_connected(board: SimplexBoard) -> bool:
    return len(region_components(board)) == 1


class Colorable(enum.Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


def _component_board(board: SimplexBoard, region_idx: Sequence[int], m: int) -> SimplexBoard:
    regions = [board.regions[i] for i in region_idx]
    verts = sorted({v for r in regions for v in r})
    remap = {v: i for i, v in enumerate(verts)}
    return SimplexBoard(
        board.n,
        m,
        len(verts),
        tuple(tuple(remap[v] for v in r) for r in regions),
        (0,) * len(verts),
    )


def decide_colorable(board: SimplexBoard, m: int = 2) -> Colorable:
    """Decide (n+1)-colorability from label-class counts over Z_m.

    Region-connected boards: colorable iff class_count equals m^n.
    Otherwise the board splits into region-connected components; when
    every pairwise overlap of components sits inside a single region and
    the overlap structure is acyclic, the components' answers combine,
    else the test is INCONCLUSIVE.
    """
    comps = region_components(board)
    if len(comps) == 1:
        scoped = board if board.m == m else board_with_m(board, m)
        return Colorable.YES if class_count(scoped) == m**board.n else Colorable.NO
    verts = [
        {v for i in comp for v in board.regions[i]} for comp in comps
    ]
    links = []
    for a, b in itertools.combinations(range(len(comps)), 2):
        shared = verts[a] & verts[b]
        if not shared:
            continue
        if not any(shared <= set(r) for r in board.regions):
            return Colorable.INCONCLUSIVE
        links.append((a, b))
    # overlaps must form a forest for the per-component answers to glue
    parent = list(range(len(comps)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in links:
        ra, rb = find(a), find(b)
        if ra == rb:
            return Colorable.INCONCLUSIVE
        parent[ra] = rb
    for comp in comps:
        sub = _component_board(board, comp, m)
        if class_count(sub) != m**board.n:
            return Colorable.NO
    return Colorable.YES


def board_with_m(board: SimplexBoard, m: int) -> SimplexBoard:
    """The same board structure over a different label modulus."""
    return SimplexBoard(
        board.n,
        m,
        board.num_vertices,
        board.regions,
        tuple(x % m for x in board.labels),
    )


def heads_view(board: SimplexBoard) -> tuple[bool, ...]:
    """Presentation-only coin view: labels below ceil(m/2) show heads."""
    cut = (board.m + 1) // 2
    return tuple(label < cut for label in board.labels)
