"""Invariant suites run by ``boxkite verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import assessors as az
from . import atlas, cdp, render, topology


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}{tail}"


def _check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> CheckResult:
    try:
        out = fn()
    except Exception as exc:  # a crash is a failed check, reported not raised
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return CheckResult(name, bool(out[0]), out[1])
    return CheckResult(name, bool(out))


# --- algebra ----------------------------------------------------------------


def index_law(n: int) -> bool:
    size = 1 << n
    return all(
        cdp.unit_product(cdp.unit(a), cdp.unit(b)).index == a ^ b
        for a in range(size) for b in range(size)
    )


def anticommutativity(n: int) -> bool:
    size = 1 << n
    for a in range(1, size):
        for b in range(a + 1, size):
            if cdp.product_sign(a, b) != -cdp.product_sign(b, a):
                return False
    return True


def generator_rule(n: int) -> bool:
    g = 1 << (n - 1)
    return all(cdp.unit_product(cdp.unit(k), cdp.unit(g)) == cdp.unit(k + g) for k in range(1, g))


def octonion_counting_order() -> tuple[bool, str]:
    violators = sorted(t.oriented_order for t in cdp.enumerate_triplets(3) if not t.counting_order_consistent)
    return violators == [(1, 7, 6), (3, 6, 5)], f"violators {violators}"


def triplets_ok(n: int) -> tuple[bool, str]:
    ts = cdp.enumerate_triplets(n)
    ok = len(ts) == cdp.triplet_count(n) and all(t.is_associative() for t in ts)
    return ok, f"{len(ts)} triplets"


def random_vector(n: int, rng: random.Random, bound: int = 9) -> cdp.Multivector:
    return cdp.Multivector(n, tuple(rng.randint(-bound, bound) for _ in range(1 << n)))


def composition_holds(n: int, samples: int = 1000, seed: int = 0) -> tuple[bool, str]:
    """Zero defect on random integer pairs and on every basis pair."""
    rng = random.Random(seed)
    for _ in range(samples):
        if cdp.norm_composition_defect(random_vector(n, rng), random_vector(n, rng)):
            return False, "random pair has nonzero defect"
    size = 1 << n
    for a in range(size):
        for b in range(size):
            x, y = cdp.Multivector.basis(n, a), cdp.Multivector.basis(n, b)
            if cdp.norm_composition_defect(x, y):
                return False, f"basis pair ({a}, {b})"
    return True, f"{samples} random pairs + {size * size} basis pairs"


def sedenion_zero_product_witness() -> tuple[cdp.Multivector, cdp.Multivector]:
    """Diagonals along the S=1 zigzag edge AB, whose product vanishes."""
    ctx = az.StrutContext(4, 1)
    bk = topology.assemble_boxkites(ctx)[0]
    d1, d2 = topology.edge_diagonals(bk, "A", "B")[0]
    return d1.vector(4), d2.vector(4)


def basis_products_match(n: int) -> bool:
    size = 1 << n
    for a in range(size):
        for b in range(size):
            u = cdp.unit_product(cdp.unit(a), cdp.unit(b))
            prod = cdp.Multivector.basis(n, a) * cdp.Multivector.basis(n, b)
            if prod != cdp.Multivector.basis(n, u.index, u.sign):
                return False
    return True


# --- assessors and box-kites --------------------------------------------------


def tone_row_ok(ctx: az.StrutContext) -> bool:
    row = az.tone_row(ctx)
    lows = [a.low for a in row]
    k = ctx.k
    return (
        len(row) == k
        and len(set(lows)) == k
        and ctx.s not in lows
        and all(lows[i] ^ lows[k - 1 - i] == ctx.s for i in range(k))
        and all(a.high == a.low ^ ctx.x for a in row)
    )


def edge_relation_ok(ctx: az.StrutContext) -> tuple[bool, str]:
    """Symmetry, strut exclusion, and vanishing of the selected diagonal products."""
    row = az.tone_row(ctx)
    n = ctx.n
    edges = 0
    for a in row:
        if az.mutual_zd_edge(a, az.strut_opposite(a, ctx), ctx) is not None:
            return False, f"strut pair at {a} zero-divides"
        if az.mutual_zd_edge(a, a, ctx) is not None:
            return False, f"{a} zero-divides itself"
        for b in row:
            e = az.mutual_zd_edge(a, b, ctx)
            if e != az.mutual_zd_edge(b, a, ctx):
                return False, f"asymmetric edge {a} {b}"
            if e is None:
                continue
            edges += 1
            for o in (az.SLASH, az.BACKSLASH):
                p = az.Diagonal(a, o).vector(n)
                q = az.Diagonal(b, o * e).vector(n)
                if not (p * q).is_zero():
                    return False, f"{a} * {b} does not vanish for edge sign {e}"
    return True, f"{edges} ordered pairs"


def strut_signatures_ok(ctx: az.StrutContext) -> bool:
    return all(az.strut_product_signature(a, ctx).index_relations_hold(ctx) for a in az.tone_row(ctx))


def boxkite_structure_ok(ctx: az.StrutContext, lanyards: bool) -> tuple[bool, str]:
    n = ctx.n
    kites = topology.assemble_boxkites(ctx)
    for bk in kites:
        signs = list(bk.edges.values())
        if len(signs) != 12 or signs.count(-1) != 6:
            return False, f"edge census in {bk}"
        sails = topology.classify_sails(bk)
        for sail in sails:
            if not all(t.is_associative() for t in topology.q_copies(sail)):
                return False, f"q-copy of sail {''.join(sail.letters)}"
            for o in (az.SLASH, az.BACKSLASH):
                cyc = topology.sail_cycle(bk, sail, az.Diagonal(sail.vertices[0], o))
                if not (cyc.closed and len(cyc) == 6 and cyc.products_vanish(n)):
                    return False, f"sail cycle {''.join(sail.letters)}"
        for tr in topology.tray_racks(bk):
            c1, c2 = tr.circuits
            if not all(c.closed and len(c) == 4 and c.products_vanish(n) for c in tr.circuits):
                return False, f"tray-rack {tr.label} circuit"
            if set(c1.steps) & set(c2.steps):
                return False, f"tray-rack {tr.label} circuits intersect"
            hunt = topology.royal_hunt(bk, tr)
            trefoil = set(hunt.reversed_edge) | {tr.perpendicular_strut[0]}
            if trefoil not in [set(s.letters) for s in sails[1:]]:
                return False, f"reversed edge of {tr.label} not in the perpendicular zigzag trefoil"
            # Twists only guarantee a zero-divisor pairing for the sedenions.
            for mode in "HV" if n == 4 else "":
                if not all(r.vanishes(n) for r in topology.twist_tray_rack(bk, tr.label, mode)):
                    return False, f"twist {mode}* of {tr.label}"
        if lanyards:
            if not any(topology.quincunx_detours(bk).values()):
                return False, f"no quincunx in {bk}"
            if not topology.find_lanyards(bk, "chain"):
                return False, f"no bicycle chain in {bk}"
    return True, f"{len(kites)} box-kites"


# --- tables -------------------------------------------------------------------


def table_ok(ctx: az.StrutContext) -> tuple[bool, str]:
    t = atlas.generate_table(ctx)
    k = t.k
    lows = t.lows
    for i in range(k):
        if t.cells[i][i] is not None or t.cells[i][k - 1 - i] is not None:
            return False, "long diagonal not empty"
        for j in range(k):
            v = t.cells[i][j]
            if v is not None and abs(v) != lows[i] ^ lows[j]:
                return False, f"magnitude law at ({i}, {j})"
            if (v is None) != (t.cells[j][i] is None):
                return False, f"fill asymmetry at ({i}, {j})"
    if t.filled % atlas.CELLS_PER_BOXKITE:
        return False, f"{t.filled} cells"
    kites = len(topology.boxkites_from_edges(ctx, atlas.table_edges(t)))
    if kites * atlas.CELLS_PER_BOXKITE != t.filled:
        return False, f"{t.filled} cells but {kites} box-kites"
    if atlas.generate_table(ctx) != t:
        return False, "regeneration differs"
    text = render.to_delimited(t)
    if render.to_delimited(render.parse_delimited(text)) != text or render.parse_delimited(text) != t:
        return False, "delimited round-trip"
    pix = render.read_pixmap(render.to_pixmap(t, cell_px=2))
    background = (pix != 255).any(axis=2).sum()
    if pix.shape != (2 * k, 2 * k, 3) or background != 4 * t.filled:
        return False, "pixmap shape or pixel count"
    return True, f"{t.filled} cells, {kites} box-kites"


def run_suite(n: int, s_values: Iterable[int] | None = None) -> list[CheckResult]:
    """Every invariant feasible at this size; exhaustive checks cap themselves."""
    g = 1 << (n - 1)
    s_list = list(s_values) if s_values is not None else list(range(1, g))
    results = [
        _check(f"index law N={min(n, 8)}", lambda: index_law(min(n, 8))),
        _check(f"anticommutativity N={min(n, 6)}", lambda: anticommutativity(min(n, 6))),
        _check(f"generator rule N={n}", lambda: generator_rule(n)),
        _check("octonion counting order", octonion_counting_order),
        _check(f"triplet census N={min(n, 6)}", lambda: triplets_ok(min(n, 6))),
        _check(f"basis products N={min(n, 5)}", lambda: basis_products_match(min(n, 5))),
    ]
    for m in (1, 2, 3):
        results.append(_check(f"norm composition dim {1 << m}", lambda m=m: composition_holds(m, 200)))
    results.append(_check("dim-16 zero-product witness", lambda: (lambda x, y: (
        (x * y).is_zero() and cdp.norm_composition_defect(x, y) == -4, f"({x}) * ({y})"))(
        *sedenion_zero_product_witness())))
    for s in s_list:
        ctx = az.StrutContext(n, s)
        results.append(_check(f"tone row {ctx}", lambda ctx=ctx: tone_row_ok(ctx)))
        results.append(_check(f"edge relation {ctx}", lambda ctx=ctx: edge_relation_ok(ctx)))
        results.append(_check(f"strut signatures {ctx}", lambda ctx=ctx: strut_signatures_ok(ctx)))
        results.append(_check(f"box-kites {ctx}",
                              lambda ctx=ctx: boxkite_structure_ok(ctx, lanyards=n == 4)))
        results.append(_check(f"emanation table {ctx}", lambda ctx=ctx: table_ok(ctx)))
    if n == 4 and s_values is None:
        results.append(_check("84 zero-divisor diagonals",
                              lambda: (topology.diagonal_count(4) == 84, f"{topology.diagonal_count(4)}")))
        results.append(_check("orientation audit, all sedenion box-kites", lambda: all(
            topology.orientation_audit(topology.assemble_boxkites(az.StrutContext(4, s))[0]).passed
            for s in range(1, 8))))
        results.append(_check("twist census XOR-closed", lambda: all(
            e.xor_closed() for e in topology.twist_census(4).values())))
    return results
