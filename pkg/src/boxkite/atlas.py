"""Emanation tables and the censuses built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby

import numpy as np

from .assessors import Assessor, StrutContext, emanation_of, tone_row
from .cdp import sign_table
from .topology import boxkites_from_edges

CELLS_PER_BOXKITE = 24


@dataclass(frozen=True)
class EmanationTable:
    """K x K grid; a cell holds edge sign times emanation low index, or None."""

    context: StrutContext
    row_order: tuple[Assessor, ...]
    cells: tuple[tuple[int | None, ...], ...]

    @property
    def k(self) -> int:
        return len(self.row_order)

    @property
    def lows(self) -> list[int]:
        return [a.low for a in self.row_order]

    @property
    def filled(self) -> int:
        return sum(1 for row in self.cells for v in row if v is not None)

    @property
    def name(self) -> str:
        return f"N{self.context.n:03d}S{self.context.s:03d}"

    def cell(self, row: int, col: int) -> int | None:
        return self.cells[row][col]

    def cell_by_lows(self, row_low: int, col_low: int) -> int | None:
        lows = self.lows
        return self.cells[lows.index(row_low)][lows.index(col_low)]

    def as_array(self) -> np.ndarray:
        """Integer array with 0 for empty cells."""
        return np.array([[0 if v is None else v for v in row] for row in self.cells], dtype=np.int64)


def _cells_vectorized(ctx: StrutContext, row: list[Assessor]) -> list[list[int | None]]:
    signs = sign_table(ctx.n)
    lo = np.array([a.low for a in row])
    hi = np.array([a.high for a in row])
    ul = signs[np.ix_(hi, lo)]
    ur = signs[np.ix_(hi, hi)]
    ll = signs[np.ix_(lo, lo)]
    lr = signs[np.ix_(lo, hi)]
    outer = ul == lr
    inner = ur == ll
    mutual = outer == inner
    k = len(row)
    idx = np.arange(k)
    mutual[idx, idx] = False
    mutual[idx, k - 1 - idx] = False
    values = np.where(outer, -1, 1) * (lo[:, None] ^ lo[None, :])
    return [
        [int(values[r, c]) if mutual[r, c] else None for c in range(k)]
        for r in range(k)
    ]


def generate_table(ctx: StrutContext) -> EmanationTable:
    row = tone_row(ctx)
    k = len(row)
    if ctx.n <= 10:
        cells = _cells_vectorized(ctx, row)
    else:
        cells = [[None] * k for _ in range(k)]
        for r, a in enumerate(row):
            for c, b in enumerate(row):
                if c in (r, k - 1 - r):
                    continue
                e = emanation_of(a, b, ctx)
                if e is not None:
                    cells[r][c] = e.sign * e.index
    return EmanationTable(ctx, tuple(row), tuple(tuple(r) for r in cells))


def table_edges(table: EmanationTable) -> dict[frozenset[Assessor], int]:
    """Edge signs read back from the filled cells."""
    out = {}
    for r, a in enumerate(table.row_order):
        for c in range(r + 1, table.k):
            v = table.cells[r][c]
            if v is not None:
                out[frozenset((a, table.row_order[c]))] = 1 if v > 0 else -1
    return out


def table_components(table: EmanationTable) -> int:
    """Connected components of the graph whose edges are the filled cells."""
    k = table.k
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for r in range(k):
        for c in range(r + 1, k):
            if table.cells[r][c] is not None:
                parent[find(r)] = find(c)
    return len({find(i) for i in range(k)})


@dataclass(frozen=True)
class CensusRecord:
    """Counts for one strut constant.

    ``box_kite_count`` is filled cells / 24; ``structural_count`` is the
    number of octahedra actually assembled from the table's edges.
    ``component_count`` (connected components, isolated assessors
    included) is informational: box-kites share assessors past N = 4.
    """

    s: int
    filled_cells: int
    box_kite_count: int
    structural_count: int
    component_count: int
    range_class: str

    @property
    def consistent(self) -> bool:
        return (
            self.box_kite_count * CELLS_PER_BOXKITE == self.filled_cells
            and self.box_kite_count == self.structural_count
        )


@dataclass(frozen=True)
class CensusReport:
    n: int
    records: tuple[CensusRecord, ...]

    @property
    def total_box_kites(self) -> int:
        return sum(r.box_kite_count for r in self.records)

    @property
    def consistent(self) -> bool:
        return all(r.consistent for r in self.records)

    def record(self, s: int) -> CensusRecord:
        return self.records[s - 1]

    def lines(self) -> list[str]:
        out = [f"census N={self.n}"]
        out += [
            f"S={r.s:<4d} cells={r.filled_cells:<6d} box-kites={r.box_kite_count:<4d} "
            f"components={r.component_count:<4d} {r.range_class}"
            for r in self.records
        ]
        out.append(f"total box-kites: {self.total_box_kites}")
        return out

    def to_csv(self) -> str:
        rows = ["S,filled_cells,box_kites,structural_box_kites,components,range_class"]
        rows += [
            f"{r.s},{r.filled_cells},{r.box_kite_count},{r.structural_count},"
            f"{r.component_count},{r.range_class}"
            for r in self.records
        ]
        return "\n".join(rows) + "\n"


def census(n: int) -> CensusReport:
    """Fill and box-kite counts for every strut constant of the 2^n-ions."""
    if not 4 <= n <= 8:
        raise ValueError(f"census supports 4 <= n <= 8, got {n}")
    g = 1 << (n - 1)
    k = g - 2
    raw = []
    for s in range(1, g):
        ctx = StrutContext(n, s)
        table = generate_table(ctx)
        filled = table.filled
        if filled % CELLS_PER_BOXKITE:
            raise RuntimeError(f"{ctx}: {filled} filled cells is not a multiple of 24")
        structural = len(boxkites_from_edges(ctx, table_edges(table)))
        raw.append((s, filled, filled // CELLS_PER_BOXKITE, structural, table_components(table)))

    full = k * k - 2 * k
    records = []
    for full_run, group in groupby(raw, key=lambda t: t[1] == full):
        group = list(group)
        if full_run:
            records += [CensusRecord(*t, "full") for t in group]
            continue
        for _, run in groupby(group, key=lambda t: t[1]):
            run = list(run)
            label = f"overflow {run[0][0]}..{run[-1][0]}"
            records += [CensusRecord(*t, label) for t in run]
    return CensusReport(n, tuple(records))


def central_block(table: EmanationTable, size: int) -> tuple[tuple[int | None, ...], ...]:
    k = table.k
    if size > k or size < 0:
        raise ValueError(f"block size {size} exceeds table size {k}")
    if (k - size) % 2:
        raise ValueError(f"block size {size} and table size {k} differ in parity")
    off = (k - size) // 2
    return tuple(tuple(row[off:off + size]) for row in table.cells[off:off + size])


def flip_book(n: int = 5) -> list[EmanationTable]:
    """Tables for the overflow strut constants 2^(n-2) < S < 2^(n-1)."""
    g = 1 << (n - 1)
    return [generate_table(StrutContext(n, s)) for s in range(g // 2 + 1, g)]


# --- self-similarity --------------------------------------------------------


@dataclass
class RegionMatch:
    name: str
    rows: tuple[int, int]
    cols: tuple[int, int]
    source: str
    mapping: str
    matched: int
    mismatched: int
    refilled: int = 0

    @property
    def compared(self) -> int:
        return self.matched + self.mismatched


@dataclass
class SimilarityReport:
    source: str
    target: str
    mapping: str
    regions: list[RegionMatch] = field(default_factory=list)
    residue: list[dict] = field(default_factory=list)

    @property
    def matched(self) -> int:
        return sum(r.matched for r in self.regions)

    @property
    def mismatched(self) -> int:
        return sum(r.mismatched for r in self.regions)

    @property
    def match_ratio(self) -> float:
        total = self.matched + self.mismatched
        return self.matched / total if total else 1.0

    def region_ratio(self, prefix: str) -> float:
        rs = [r for r in self.regions if r.name.startswith(prefix)]
        total = sum(r.compared for r in rs)
        return sum(r.matched for r in rs) / total if total else 1.0

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "mapping": self.mapping,
            "matched": self.matched,
            "mismatched": self.mismatched,
            "match_ratio": self.match_ratio,
            "regions": [
                {
                    "name": r.name, "rows": list(r.rows), "cols": list(r.cols),
                    "source": r.source, "mapping": r.mapping, "matched": r.matched,
                    "mismatched": r.mismatched, "refilled": r.refilled,
                    "match_ratio": r.matched / r.compared if r.compared else 1.0,
                }
                for r in self.regions
            ],
            "residue": self.residue,
        }

    def lines(self) -> list[str]:
        out = [f"{self.source} -> {self.target} ({self.mapping})"]
        for r in self.regions:
            ratio = r.matched / r.compared if r.compared else 1.0
            out.append(
                f"  {r.name:<16} from {r.source:<10} {r.mapping:<22} "
                f"{r.matched}/{r.compared} = {ratio:.3f}"
            )
        out.append(f"overall {self.matched}/{self.matched + self.mismatched} = {self.match_ratio:.3f}"
                   f"; residue {len(self.residue)} cells")
        return out


def _block(cells, r0, c0, size):
    return [list(row[c0:c0 + size]) for row in cells[r0:r0 + size]]


_MIRRORS = {
    "none": lambda b: b,
    "flip-lr": lambda b: [row[::-1] for row in b],
    "flip-ud": lambda b: b[::-1],
    "rotate-180": lambda b: [row[::-1] for row in b[::-1]],
}


def _augment(v, shift):
    if v is None or shift == 0:
        return v
    return v + shift if v > 0 else v - shift


def _compare(fine, expected, allow_refill: bool):
    """Cells equal (or, with ``allow_refill``, an empty expected diagonal cell filled)."""
    size = len(fine)
    matched = mismatched = refilled = 0
    misses = []
    for i in range(size):
        for j in range(size):
            f, e = fine[i][j], expected[i][j]
            if f == e:
                matched += 1
            elif allow_refill and e is None and f is not None and (i == j or i + j == size - 1):
                matched += 1
                refilled += 1
            else:
                mismatched += 1
                misses.append((i, j, f, e))
    return matched, mismatched, refilled, misses


def in_carry_overflow(s: int) -> bool:
    """Strut constants above 8 that are not powers of two."""
    return s > 8 and s & (s - 1) != 0


def self_similarity_report(coarse: EmanationTable, fine: EmanationTable) -> SimilarityReport:
    """Compare a fine table's block layout against a table one dimension down.

    With coarse size Kc = 2h the fine table (size 2Kc + 2) is cut, along each
    axis, into a corner band of h, a separator line, a central band of Kc,
    a separator line and a second corner band.  Corners are compared with
    the coarse quadrants cell-for-cell; the central square with the whole
    coarse table; each of the 8 h x h perimeter blocks with its best-matching
    coarse quadrant under mirrorings, indices augmented by the coarse
    generator, and empty block diagonals allowed to be refilled.  Separator
    cells and all mismatches go to the residue.  The result is a measurement,
    not a verdict.
    """
    src, dst = coarse.name, fine.name
    if coarse.context.n == fine.context.n:
        if coarse.k != fine.k:
            raise ValueError("tables of equal dimension must have equal size")
        m, mm, _, misses = _compare(fine.cells, coarse.cells, False)
        report = SimilarityReport(src, dst, "identity")
        report.regions.append(RegionMatch("whole", (0, fine.k), (0, fine.k), src, "identity", m, mm))
        report.residue = [{"row": i, "col": j, "fine": f, "expected": e} for i, j, f, e in misses]
        return report
    if fine.context.n != coarse.context.n + 1:
        raise ValueError("fine table must be exactly one dimension above the coarse table")
    if not in_carry_overflow(fine.context.s):
        raise ValueError(f"fine strut constant {fine.context.s} is not subject to carry-bit overflow")

    kc, kf = coarse.k, fine.k
    h = kc // 2
    shift = coarse.context.g
    bands = [(0, h), None, (h + 1, h + 1 + kc), None, (kf - h, kf)]
    separators = {h, h + 1 + kc}
    quadrants = {
        "top-left": _block(coarse.cells, 0, 0, h),
        "top-right": _block(coarse.cells, 0, h, h),
        "bottom-left": _block(coarse.cells, h, 0, h),
        "bottom-right": _block(coarse.cells, h, h, h),
    }
    report = SimilarityReport(src, dst, f"quadrant tiling, perimeter augmented by {shift}")
    claimed: set[tuple[int, int]] = set()

    def record(name, r0, c0, size, source, mapping, result):
        m, mm, refill, misses = result
        report.regions.append(
            RegionMatch(name, (r0, r0 + size), (c0, c0 + size), source, mapping, m, mm, refill)
        )
        for i, j, f, e in misses:
            report.residue.append(
                {"region": name, "row": r0 + i, "col": c0 + j, "fine": f, "expected": e}
            )
        claimed.update((r0 + i, c0 + j) for i in range(size) for j in range(size))

    corner_names = {(0, 0): "top-left", (0, 1): "top-right", (1, 0): "bottom-left", (1, 1): "bottom-right"}
    corner_starts = (0, kf - h)
    for (ri, ci), name in corner_names.items():
        r0, c0 = corner_starts[ri], corner_starts[ci]
        fine_block = _block(fine.cells, r0, c0, h)
        record(f"corner {name}", r0, c0, h, f"{name}", "identity",
               _compare(fine_block, quadrants[name], False))

    c0 = h + 1
    record("center", c0, c0, kc, "whole", "identity",
           _compare(_block(fine.cells, c0, c0, kc), coarse.cells, False))

    perimeter = []
    for r0, _ in (bands[0], bands[4]):
        for c0 in (h + 1, h + 1 + h):
            perimeter.append((r0, c0))
    for c0, _ in (bands[0], bands[4]):
        for r0 in (h + 1, h + 1 + h):
            perimeter.append((r0, c0))
    for r0, c0 in perimeter:
        fine_block = _block(fine.cells, r0, c0, h)
        best = None
        for qname, quad in quadrants.items():
            for mname, mirror in _MIRRORS.items():
                expected = [[_augment(v, shift) for v in row] for row in mirror(quad)]
                result = _compare(fine_block, expected, True)
                key = (result[0], -result[2])
                if best is None or key > best[0]:
                    best = (key, qname, f"{mname} +{shift}", result)
        _, qname, mapping, result = best
        record(f"perimeter r{r0}c{c0}", r0, c0, h, qname, mapping, result)

    for r in range(kf):
        for c in range(kf):
            if (r, c) not in claimed and (r in separators or c in separators):
                v = fine.cells[r][c]
                if v is not None:
                    report.residue.append({"region": "separator", "row": r, "col": c, "fine": v, "expected": None})
    return report
