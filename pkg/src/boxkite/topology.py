"""Box-kites: assembly from the mutual zero-divisor graph and their substructures.

Vertex letters follow the usual convention.  A, B, C form the zigzag sail,
lettered so that A has the smallest low index and a * b = +c.  Their strut
partners are F, E, D respectively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .assessors import (
    Assessor,
    Diagonal,
    SLASH,
    StrutContext,
    mutual_zd_edge,
    strut_opposite,
    tone_row,
)
from .cdp import AssociativeTriplet, multivector_product, product_sign

LETTERS = "ABCDEF"
STRUTS = (("A", "F"), ("B", "E"), ("C", "D"))
ZIGZAG = ("A", "B", "C")
TREFOILS = (("A", "D", "E"), ("F", "D", "B"), ("F", "C", "E"))
# Counterclockwise order around the hexagon of "+" edges.
HEXAGON = ("A", "D", "B", "F", "C", "E")


class ShapeError(RuntimeError):
    """A component of the zero-divisor graph is not a well-formed box-kite."""


def _pair(p: str, q: str) -> frozenset[str]:
    return frozenset((p, q))


def strut_label(strut: tuple[str, str]) -> str:
    return "".join(sorted(strut))


@dataclass(frozen=True)
class BoxKite:
    context: StrutContext
    vertices: dict[str, Assessor]
    edges: dict[frozenset[str], int]
    struts: tuple[tuple[str, str], ...] = STRUTS

    @property
    def zigzag(self) -> tuple[str, str, str]:
        return ZIGZAG

    def __getitem__(self, letter: str) -> Assessor:
        return self.vertices[letter]

    def edge_sign(self, p: str, q: str) -> int | None:
        return self.edges.get(_pair(p, q))

    def letter_of(self, a: Assessor) -> str:
        for letter, v in self.vertices.items():
            if v == a:
                return letter
        raise KeyError(a)

    def neighbors(self, letter: str) -> list[str]:
        return [q for q in LETTERS if _pair(letter, q) in self.edges]

    @property
    def lows(self) -> set[int]:
        return {a.low for a in self.vertices.values()}

    def diagonals(self) -> list[Diagonal]:
        return [Diagonal(self.vertices[p], o) for p in LETTERS for o in (SLASH, -SLASH)]

    def __str__(self) -> str:
        body = " ".join(f"{p}={self.vertices[p]}" for p in LETTERS)
        return f"box-kite[{self.context}] {body}"


def zd_edges(ctx: StrutContext) -> dict[frozenset[Assessor], int]:
    """Edge sign of every mutually zero-dividing pair of the tone row."""
    signs = {}
    for a, b in combinations(tone_row(ctx), 2):
        edge = mutual_zd_edge(a, b, ctx)
        if edge is not None:
            signs[frozenset((a, b))] = edge
    return signs


def component_count(ctx: StrutContext, signs: dict[frozenset[Assessor], int] | None = None) -> int:
    """Connected components of the mutual zero-divisor graph (isolated assessors included)."""
    if signs is None:
        signs = zd_edges(ctx)
    parent = {a: a for a in tone_row(ctx)}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for pair in signs:
        a, b = tuple(pair)
        parent[find(a)] = find(b)
    return len({find(a) for a in parent})


def _label(ctx: StrutContext, comp: list[Assessor], signs: dict) -> BoxKite:
    if len(comp) != 6:
        raise ShapeError(f"{ctx}: vertex set of size {len(comp)} is not a box-kite")
    for a in comp:
        degree = sum(1 for b in comp if frozenset((a, b)) in signs)
        if degree != 4:
            raise ShapeError(f"{ctx}: {a} has degree {degree}, expected 4")
        if frozenset((a, strut_opposite(a, ctx))) in signs or strut_opposite(a, ctx) not in comp:
            raise ShapeError(f"{ctx}: strut partner of {a} misplaced")
    zigzags = [
        tri
        for tri in combinations(comp, 3)
        if all(signs.get(frozenset(p)) == -1 for p in combinations(tri, 2))
        and tri[0].low ^ tri[1].low == tri[2].low
    ]
    if len(zigzags) != 1:
        raise ShapeError(f"{ctx}: found {len(zigzags)} all-negative sails")
    a, p, q = sorted(zigzags[0])
    b, c = (p, q) if product_sign(a.low, p.low) > 0 else (q, p)
    vertices = {
        "A": a,
        "B": b,
        "C": c,
        "D": strut_opposite(c, ctx),
        "E": strut_opposite(b, ctx),
        "F": strut_opposite(a, ctx),
    }
    edges = {}
    for x, y in combinations(LETTERS, 2):
        sign = signs.get(frozenset((vertices[x], vertices[y])))
        if sign is not None:
            edges[_pair(x, y)] = sign
    if sum(1 for s in edges.values() if s < 0) != 6:
        raise ShapeError(f"{ctx}: edge-sign census is not 6/6")
    return BoxKite(ctx, vertices, edges)


def boxkites_from_edges(ctx: StrutContext, signs: dict[frozenset[Assessor], int]) -> list[BoxKite]:
    """Box-kites spanned by the given mutual zero-divisor edges.

    Every edge lies in one sail, whose third vertex has the XOR of the two
    low indices; adding the three strut partners completes the box-kite.
    Beyond the sedenions box-kites share assessors, so they are not the
    connected components of the graph.  The edges must split exactly
    among the box-kites found.
    """
    vertex_sets = set()
    for pair in signs:
        a, b = tuple(pair)
        c = ctx.assessor(a.low ^ b.low)
        vertex_sets.add(frozenset({a, b, c} | {strut_opposite(v, ctx) for v in (a, b, c)}))
    kites = [_label(ctx, sorted(vs), signs) for vs in vertex_sets]
    if 12 * len(kites) != len(signs):
        raise ShapeError(f"{ctx}: {len(kites)} box-kites do not partition {len(signs)} edges")
    return sorted(kites, key=lambda bk: sorted(bk.lows))


def assemble_boxkites(ctx: StrutContext) -> list[BoxKite]:
    """Box-kites of one strut constant, ordered by their sorted low indices."""
    return boxkites_from_edges(ctx, zd_edges(ctx))


def boxkite_for(ctx: StrutContext, lows: Iterable[int] = ()) -> BoxKite:
    """The box-kite containing the given low indices (first one if none given)."""
    wanted = set(lows)
    for bk in assemble_boxkites(ctx):
        if wanted <= bk.lows:
            return bk
    raise LookupError(f"no box-kite of {ctx} contains lows {sorted(wanted)}")


# --- sails ------------------------------------------------------------------


@dataclass(frozen=True)
class Sail:
    context: StrutContext
    letters: tuple[str, str, str]
    vertices: tuple[Assessor, Assessor, Assessor]
    kind: str
    edge_signs: tuple[int, int, int]

    @property
    def lows(self) -> tuple[int, int, int]:
        return tuple(a.low for a in self.vertices)


def _sail(bk: BoxKite, letters: tuple[str, str, str], kind: str) -> Sail:
    p, q, r = letters
    signs = (bk.edge_sign(p, q), bk.edge_sign(q, r), bk.edge_sign(r, p))
    return Sail(bk.context, letters, tuple(bk[x] for x in letters), kind, signs)


def classify_sails(bk: BoxKite) -> list[Sail]:
    """Zigzag first, then the trefoils ADE, FDB, FCE."""
    sails = [_sail(bk, ZIGZAG, "zigzag")] + [_sail(bk, t, "trefoil") for t in TREFOILS]
    for sail in sails:
        a, b, c = sail.lows
        if a ^ b != c:
            raise ShapeError(f"sail {''.join(sail.letters)} of {bk} is not XOR-closed")
        expected = 3 if sail.kind == "zigzag" else 1
        if sum(1 for s in sail.edge_signs if s < 0) != expected:
            raise ShapeError(f"sail {''.join(sail.letters)} of {bk} has wrong edge signs")
    return sails


def q_copies(sail: Sail) -> list[AssociativeTriplet]:
    """The four quaternion copies: all lows, then each low with the other two highs."""
    (a, A), (b, B), (c, C) = ((v.low, v.high) for v in sail.vertices)
    return [
        AssociativeTriplet.from_indices(a, b, c),
        AssociativeTriplet.from_indices(a, B, C),
        AssociativeTriplet.from_indices(A, b, C),
        AssociativeTriplet.from_indices(A, B, c),
    ]


# --- lanyards ---------------------------------------------------------------

LANYARD_KINDS = {
    "sail": "sail-cycle",
    "sail-cycle": "sail-cycle",
    "trayrack": "tray-rack-circuit",
    "tray-rack-circuit": "tray-rack-circuit",
    "quincunx": "quincunx",
    "chain": "bicycle-chain",
    "bicycle-chain": "bicycle-chain",
}


@dataclass(frozen=True)
class Lanyard:
    """Closed chain of diagonals, each multiplying the next to zero."""

    kind: str
    steps: tuple[Diagonal, ...]
    closed: bool = True

    @property
    def assessors(self) -> list[Assessor]:
        return [d.assessor for d in self.steps]

    def products_vanish(self, n: int) -> bool:
        pairs = zip(self.steps, self.steps[1:] + (self.steps[:1] if self.closed else ()))
        return all(multivector_product(p.vector(n), q.vector(n)).is_zero() for p, q in pairs)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return " -> ".join(str(d) for d in self.steps)


def _walk(bk: BoxKite, letters: list[str], start: Diagonal, kind: str, max_steps: int) -> Lanyard:
    """Follow the vertex cycle ``letters`` from ``start`` until the diagonal recurs."""
    steps = [start]
    pos = letters.index(bk.letter_of(start.assessor))
    current = start
    for _ in range(max_steps):
        here, nxt = letters[pos], letters[(pos + 1) % len(letters)]
        sign = bk.edge_sign(here, nxt)
        if sign is None:
            raise ShapeError(f"{here}{nxt} is not an edge of {bk}")
        current = Diagonal(bk[nxt], current.orientation * sign)
        pos = (pos + 1) % len(letters)
        if current == start:
            return Lanyard(kind, tuple(steps), True)
        steps.append(current)
    return Lanyard(kind, tuple(steps), False)


def sail_cycle(bk: BoxKite, sail: Sail, start: Diagonal) -> Lanyard:
    """Circuit the sail from ``start``; an odd count of "-" edges forces a double cover."""
    if start.assessor not in sail.vertices:
        raise ValueError(f"{start} does not belong to sail {''.join(sail.letters)}")
    return _walk(bk, list(sail.letters), start, "sail-cycle", 6)


@dataclass(frozen=True)
class TrayRack:
    """The square of four assessors complementary to one strut."""

    label: str
    perpendicular_strut: tuple[str, str]
    letters: tuple[str, str, str, str]
    circuits: tuple[Lanyard, Lanyard]

    @property
    def edges(self) -> list[tuple[str, str]]:
        return [(self.letters[i], self.letters[(i + 1) % 4]) for i in range(4)]


def tray_racks(bk: BoxKite) -> list[TrayRack]:
    out = []
    for strut in STRUTS:
        (p1, p2), (q1, q2) = [s for s in STRUTS if s != strut]
        letters = (p1, q1, p2, q2)
        circuits = tuple(
            _walk(bk, list(letters), Diagonal(bk[p1], o), "tray-rack-circuit", 4)
            for o in (SLASH, -SLASH)
        )
        out.append(TrayRack(strut_label(strut), strut, letters, circuits))
    return out


def tray_rack(bk: BoxKite, label: str) -> TrayRack:
    label = label.upper()
    for tr in tray_racks(bk):
        if tr.label == label:
            return tr
    raise KeyError(f"no tray-rack {label!r}; expected one of AF, BE, CD")


@dataclass(frozen=True)
class RoyalHunt:
    """Tray-rack with vertices in the dominant low-index rotation.

    The reversed edge runs from the last vertex back to the first and is
    drawn on top; the remaining sides follow counterclockwise.
    """

    label: str
    letters: tuple[str, str, str, str]

    @property
    def reversed_edge(self) -> tuple[str, str]:
        return (self.letters[3], self.letters[0])

    @property
    def sides(self) -> dict[str, tuple[str, str]]:
        w = self.letters
        return {"top": (w[3], w[0]), "left": (w[0], w[1]), "bottom": (w[1], w[2]), "right": (w[2], w[3])}


def royal_hunt(bk: BoxKite, tr: TrayRack) -> RoyalHunt:
    letters = list(tr.letters)
    forward = [product_sign(bk[p].low, bk[q].low) for p, q in tr.edges]
    if sorted(forward) != [-1, 1, 1, 1]:
        if sorted(forward) != [-1, -1, -1, 1]:
            raise ShapeError(f"tray-rack {tr.label} of {bk} has no single reversed edge")
        letters.reverse()
        forward = [product_sign(bk[p].low, bk[q].low)
                   for p, q in zip(letters, letters[1:] + letters[:1])]
    odd = forward.index(-1)
    start = (odd + 1) % 4
    return RoyalHunt(tr.label, tuple(letters[start:] + letters[:start]))


# --- twists -----------------------------------------------------------------


@dataclass(frozen=True)
class TwistResult:
    source_edge: tuple[Diagonal, Diagonal]
    twisted_edge: tuple[Diagonal, Diagonal]
    target_strut_constant: int
    swap: str

    def vanishes(self, n: int) -> bool:
        p, q = self.twisted_edge
        return multivector_product(p.vector(n), q.vector(n)).is_zero()


def twist(first: Diagonal, second: Diagonal, ctx: StrutContext, swap: str = "low") -> TwistResult:
    """Exchange same-case units between the two factors of a zero product.

    ``swap="low"`` trades the low units and keeps the highs in place;
    ``swap="high"`` does the reverse.  The first factor keeps its
    orientation; the second takes whichever orientation restores a zero
    product (the edge sign toggles).
    """
    n = ctx.n
    if not multivector_product(first.vector(n), second.vector(n)).is_zero():
        raise ValueError(f"{first} * {second} is not a zero product")
    a, b = first.assessor, second.assessor
    if swap == "low":
        new1, new2 = Assessor(b.low, a.high), Assessor(a.low, b.high)
    elif swap == "high":
        new1, new2 = Assessor(a.low, b.high), Assessor(b.low, a.high)
    else:
        raise ValueError(f"swap must be 'low' or 'high', got {swap!r}")
    target = (new1.low ^ new1.high) ^ ctx.g
    target_ctx = StrutContext(n, target)
    target_ctx.require(new1, new2)
    d1 = Diagonal(new1, first.orientation)
    for o in (second.orientation, -second.orientation):
        d2 = Diagonal(new2, o)
        if multivector_product(d1.vector(n), d2.vector(n)).is_zero():
            return TwistResult((first, second), (d1, d2), target, swap)
    raise ShapeError(f"twist of {first} * {second} has no zero-divisor pairing")


def edge_diagonals(bk: BoxKite, p: str, q: str) -> list[tuple[Diagonal, Diagonal]]:
    """Both diagonal pairings carried by the edge from ``p`` to ``q``."""
    sign = bk.edge_sign(p, q)
    if sign is None:
        raise ValueError(f"{p}{q} is not an edge")
    return [(Diagonal(bk[p], o), Diagonal(bk[q], o * sign)) for o in (SLASH, -SLASH)]


def twist_tray_rack(bk: BoxKite, label: str, mode: str) -> list[TwistResult]:
    """H* (mode "H", top and bottom edges) or V* (mode "V", left and right).

    Top and left edges swap lows; bottom and right edges swap highs.
    """
    hunt = royal_hunt(bk, tray_rack(bk, label))
    sides = {"H": ("top", "bottom"), "V": ("left", "right")}[mode.upper()]
    results = []
    for side in sides:
        p, q = hunt.sides[side]
        swap = "low" if side in ("top", "left") else "high"
        for d1, d2 in edge_diagonals(bk, p, q):
            results.append(twist(d1, d2, bk.context, swap))
    return results


@dataclass(frozen=True)
class TwistCensusEntry:
    s: int
    tray_rack: str
    horizontal_target: int
    vertical_target: int
    vent_low: int
    zigzag_low: int

    @property
    def targets(self) -> frozenset[int]:
        return frozenset((self.horizontal_target, self.vertical_target))

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.s, self.horizontal_target, self.vertical_target)

    def xor_closed(self) -> bool:
        return self.s ^ self.horizontal_target == self.vertical_target


def twist_census(n: int = 4) -> dict[tuple[int, str], TwistCensusEntry]:
    """Target strut constants of H* and V* for every tray-rack of every box-kite."""
    out = {}
    for s in range(1, 1 << (n - 1)):
        ctx = StrutContext(n, s)
        for bk in assemble_boxkites(ctx):
            for tr in tray_racks(bk):
                targets = {}
                for mode in "HV":
                    found = {r.target_strut_constant for r in twist_tray_rack(bk, tr.label, mode)}
                    if len(found) != 1:
                        raise ShapeError(f"{mode}* of {tr.label} in {bk} hits {sorted(found)}")
                    targets[mode] = found.pop()
                zig, vent = tr.perpendicular_strut
                key = (s, tr.label) if n == 4 else (s, f"{min(bk.lows)}:{tr.label}")
                out[key] = TwistCensusEntry(
                    s, tr.label, targets["H"], targets["V"], bk[vent].low, bk[zig].low
                )
    return out


# --- lanyard search ---------------------------------------------------------


def _diagonal_graph(bk: BoxKite) -> dict[Diagonal, list[Diagonal]]:
    graph = {}
    for d in bk.diagonals():
        p = bk.letter_of(d.assessor)
        graph[d] = [Diagonal(bk[q], d.orientation * bk.edge_sign(p, q)) for q in bk.neighbors(p)]
    return graph


def _closed_cycles(graph, length: int, allowed: set[Diagonal]) -> Iterator[tuple[Diagonal, ...]]:
    """Simple directed cycles of the given length, each yielded once per rotation class."""
    order = {d: i for i, d in enumerate(graph)}
    for start in graph:
        if start not in allowed:
            continue
        path = [start]
        on_path = {start}

        def extend():
            tail = path[-1]
            if len(path) == length:
                if start in graph[tail]:
                    yield tuple(path)
                return
            for d in graph[tail]:
                if d in allowed and d not in on_path and order[d] > order[start]:
                    path.append(d)
                    on_path.add(d)
                    yield from extend()
                    path.pop()
                    on_path.discard(d)

        yield from extend()


def _periodic(letters: list[str], period: int) -> bool:
    return all(letters[i] == letters[i + period] for i in range(len(letters) - period))


def _tray_rack_of(p: str, q: str) -> str:
    for strut in STRUTS:
        if p not in strut and q not in strut:
            return strut_label(strut)
    raise ValueError(f"{p}{q} is a strut")


def is_bicycle_chain(bk: BoxKite, lanyard: Lanyard) -> bool:
    """Three 3/4 tray-rack scans, on distinct tray-racks, each followed by a "-" jump."""
    letters = [bk.letter_of(a) for a in lanyard.assessors]
    if len(letters) != 12 or len(set(lanyard.steps)) != 12:
        return False
    edges = [(letters[i], letters[(i + 1) % 12]) for i in range(12)]
    racks = [_tray_rack_of(p, q) for p, q in edges]
    signs = [bk.edge_sign(p, q) for p, q in edges]
    for shift in range(4):
        r = racks[shift:] + racks[:shift]
        s = signs[shift:] + signs[:shift]
        blocks = [r[i:i + 4] for i in (0, 4, 8)]
        if all(b[0] == b[1] == b[2] != b[3] for b in blocks) \
                and len({b[0] for b in blocks}) == 3 \
                and all(s[i + 3] < 0 for i in (0, 4, 8)):
            return True
    return False


def find_lanyards(bk: BoxKite, kind: str) -> list[Lanyard]:
    """Depth-first enumeration of lanyards of one family.

    Cycles are directed and deduplicated by rotation only, so a circuit and
    its reversal are both reported.
    """
    family = LANYARD_KINDS.get(kind)
    if family is None:
        raise ValueError(f"unknown lanyard kind {kind!r}")
    graph = _diagonal_graph(bk)
    everything = set(graph)
    found = []

    def letters_of(cycle):
        return [bk.letter_of(d.assessor) for d in cycle]

    if family == "sail-cycle":
        sails = {frozenset(s.letters) for s in classify_sails(bk)}
        for cycle in _closed_cycles(graph, 6, everything):
            ls = letters_of(cycle)
            if _periodic(ls, 3) and len(set(ls)) == 3 and frozenset(ls) in sails:
                found.append(Lanyard(family, cycle))
    elif family == "tray-rack-circuit":
        squares = {frozenset(tr.letters) for tr in tray_racks(bk)}
        for cycle in _closed_cycles(graph, 4, everything):
            ls = letters_of(cycle)
            if len(set(ls)) == 4 and frozenset(ls) in squares:
                found.append(Lanyard(family, cycle))
    elif family == "quincunx":
        for omitted in LETTERS:
            allowed = {d for d in graph if bk.letter_of(d.assessor) != omitted}
            for cycle in _closed_cycles(graph, 10, allowed):
                ls = letters_of(cycle)
                if _periodic(ls, 5) and len(set(ls)) == 5:
                    found.append(Lanyard(family, cycle))
    else:
        for cycle in _closed_cycles(graph, 12, everything):
            lanyard = Lanyard(family, cycle)
            if is_bicycle_chain(bk, lanyard):
                found.append(lanyard)
    return found


def quincunx_detours(bk: BoxKite) -> dict[str, list[Lanyard]]:
    """Per tray-rack, quincunxes that bypass its reversed edge via the perpendicular zigzag vertex."""
    out = {}
    quincunxes = find_lanyards(bk, "quincunx")
    for tr in tray_racks(bk):
        hunt = royal_hunt(bk, tr)
        apex = tr.perpendicular_strut[0]
        members = set(tr.letters) | {apex}
        p, q = hunt.reversed_edge
        hits = []
        for lan in quincunxes:
            ls = [bk.letter_of(a) for a in lan.assessors]
            if set(ls) != members:
                continue
            consecutive = {frozenset((ls[i], ls[(i + 1) % 10])) for i in range(10)}
            if frozenset((p, q)) not in consecutive:
                hits.append(lan)
        out[tr.label] = hits
    return out


# --- orientation audit ------------------------------------------------------


@dataclass
class OrientationAudit:
    context: StrutContext
    hexagon_lower: list[tuple[str, str, int]] = field(default_factory=list)
    hexagon_upper: list[tuple[str, str, int]] = field(default_factory=list)
    star_lower: list[tuple[str, str, int]] = field(default_factory=list)
    star_upper: list[tuple[str, str, int]] = field(default_factory=list)

    @property
    def hexagon_ok(self) -> bool:
        """Lowercase counterclockwise products positive, uppercase negative."""
        return all(s > 0 for *_, s in self.hexagon_lower) and all(s < 0 for *_, s in self.hexagon_upper)

    @property
    def star_ok(self) -> bool:
        """abc/ABC positive counterclockwise, def/DEF positive clockwise."""
        return all(s > 0 for *_, s in self.star_lower + self.star_upper)

    @property
    def passed(self) -> bool:
        return self.hexagon_ok and self.star_ok

    def lines(self) -> list[str]:
        out = []
        for name, rows in (("hexagon lower", self.hexagon_lower), ("hexagon upper", self.hexagon_upper),
                           ("star lower", self.star_lower), ("star upper", self.star_upper)):
            body = " ".join(f"{p}{q}:{'+' if s > 0 else '-'}" for p, q, s in rows)
            out.append(f"{name}: {body}")
        return out


def orientation_audit(bk: BoxKite) -> OrientationAudit:
    audit = OrientationAudit(bk.context)
    hex_edges = [(HEXAGON[i], HEXAGON[(i + 1) % 6]) for i in range(6)]
    # Zigzag read counterclockwise, vent (D, E, F) clockwise.
    star_edges = [("A", "B"), ("B", "C"), ("C", "A"), ("D", "E"), ("E", "F"), ("F", "D")]
    for p, q in hex_edges:
        audit.hexagon_lower.append((p.lower(), q.lower(), product_sign(bk[p].low, bk[q].low)))
        audit.hexagon_upper.append((p, q, product_sign(bk[p].high, bk[q].high)))
    for p, q in star_edges:
        audit.star_lower.append((p.lower(), q.lower(), product_sign(bk[p].low, bk[q].low)))
        audit.star_upper.append((p, q, product_sign(bk[p].high, bk[q].high)))
    return audit


def diagonal_count(n: int = 4) -> int:
    """Distinct diagonals lying in at least one box-kite, over every strut constant."""
    total = 0
    for s in range(1, 1 << (n - 1)):
        assessors = {a for bk in assemble_boxkites(StrutContext(n, s)) for a in bk.vertices.values()}
        total += 2 * len(assessors)
    return total
