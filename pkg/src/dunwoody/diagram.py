"""
Dunwoody Heegaard diagrams.

The diagram ``D(a, b, c, n, r, s)`` is drawn on a sphere with ``2n`` holes:
upper cycles ``C'_1..C'_n`` in one row and lower cycles ``C''_1..C''_n``
below them, with the rows closed up cyclically.  Each cycle carries
``d = 2a + b + c`` slots.  ``C'_i`` meets ``C'_{i+1}`` in ``a`` parallel arcs,
``C''_i`` in ``c`` arcs and ``C''_{i+1}`` in ``b`` arcs; the lower row has its
own ``a``-bundles.  ``C'_i`` is glued to ``C''_{i-s}`` by a reflection, which
closes the arcs up into the relator curves.

Slot layout (the frozen convention)
-----------------------------------
Slots are numbered clockwise.  Reading clockwise from the point of each
cycle that faces the end of the cylinder (the rotation's fixed points):

    ======== ========================================================
    cycle    blocks, in clockwise order from position 0
    ======== ========================================================
    C'_i     Ar (to C'_{i+1}), B (to C''_{i+1}), C (to C''_i), Al (to C'_{i-1})
    C''_i    Al (to C''_{i-1}), B (to C'_{i-1}), C (to C'_i), Ar (to C''_{i+1})
    ======== ========================================================

Arcs of one bundle are parallel, so position ``k`` of a block is joined
to position ``size-1-k`` of the partner block.  Upper slot ``p`` of
``C'_i`` is glued to lower slot ``(r - p) mod d`` of ``C''_{i-s}``.  The
``Convention`` record lets calibration flip the sign of ``r`` or ``s`` or
mirror the whole picture; ``CONVENTION`` holds the calibrated choice.

Generators: handle ``j`` is the glued pair ``(C'_j, C''_{j-s})``; passing
from the upper to the lower side of handle ``j`` reads ``x_j``.
"""
from collections import Counter, namedtuple
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import DomainError, NotHeegaardError
from .words import Presentation, Word, reduce

__all__ = [
    "UPPER", "LOWER", "Slot", "Port", "as_port", "Arc", "Handle", "Convention", "CONVENTION",
    "DunwoodyParams", "Diagram", "Step", "Curve", "TracedCurves", "ValidityReport",
    "SymmetryReport", "build", "trace", "validate", "curve_words",
    "induced_presentation", "check_symmetry", "rotate", "pole_regions",
]

UPPER, LOWER = "U", "L"

Slot = namedtuple("Slot", "side cycle pos")
# A position on a cycle boundary used for the planar layout; real slots have
# sub == 0, scaffold ports sit in the segment following slot ``pos``.
Port = namedtuple("Port", "side cycle pos sub")
Arc = namedtuple("Arc", "u v tag")
# Glues upper slot p of C'_upper to lower slot (offset - p) mod d of C''_lower.
Handle = namedtuple("Handle", "upper lower offset")

TAGS = ("A-upper", "A-lower", "B", "C")


def as_port(slot):
    return Port(slot.side, slot.cycle, slot.pos, 0)


@dataclass(frozen=True, order=True)
class Convention:
    mirror: bool = False
    r_sign: int = 1
    s_sign: int = 1

    def __str__(self):
        return (f"mirror={'yes' if self.mirror else 'no'} "
                f"r_sign={self.r_sign:+d} s_sign={self.s_sign:+d}")


# Chosen by calibration: every candidate reproduces the Sieradsky and
# Fibonacci groups, and this one is lexicographically first.
CONVENTION = Convention(mirror=False, r_sign=1, s_sign=1)


@dataclass(frozen=True)
class DunwoodyParams:
    """The six integers of ``D(a, b, c, n, r, s)``; ``r`` and ``s`` are stored reduced."""

    a: int
    b: int
    c: int
    n: int
    r: int = 0
    s: int = 0

    def __post_init__(self):
        for name in ("a", "b", "c", "n", "r", "s"):
            if not isinstance(getattr(self, name), int):
                raise DomainError(f"{name} must be an integer")
        if min(self.a, self.b, self.c) < 0:
            raise DomainError(f"a, b, c must be non-negative, got {self.a}, {self.b}, {self.c}")
        if self.a + self.b + self.c <= 0:
            raise DomainError("a + b + c must be positive")
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        object.__setattr__(self, "r", self.r % self.d)
        object.__setattr__(self, "s", self.s % self.n)

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def as_tuple(self):
        return (self.a, self.b, self.c, self.n, self.r, self.s)

    def __str__(self):
        return ",".join(str(x) for x in self.as_tuple())

    @classmethod
    def parse(cls, text: str) -> "DunwoodyParams":
        try:
            values = [int(x) for x in text.replace(" ", "").split(",")]
        except ValueError:
            raise DomainError(f"cannot parse parameters {text!r}")
        if len(values) != 6:
            raise DomainError(f"expected six integers a,b,c,n,r,s, got {text!r}")
        return cls(*values)


@dataclass(frozen=True)
class Diagram:
    """
    A combinatorial genus-``n`` Heegaard diagram with ``d`` slots per cycle.

    ``scaffold`` holds invisible arcs that keep the planar picture connected
    and ``poles`` the ports whose following corner contains a fixed point of
    the rotation; both are layout data used only by region computations.
    """

    n: int
    d: int
    arcs: tuple
    gluing: tuple
    params: Optional[DunwoodyParams] = None
    scaffold: tuple = ()
    poles: tuple = ()
    convention: Optional[Convention] = None

    def cycles(self):
        for side in (UPPER, LOWER):
            for i in range(1, self.n + 1):
                yield side, i

    def slots(self):
        return [Slot(side, i, p) for side, i in self.cycles() for p in range(self.d)]

    @cached_property
    def partner(self) -> dict:
        out = {}
        for arc in self.arcs:
            out.setdefault(arc.u, arc.v)
            out.setdefault(arc.v, arc.u)
        return out

    @cached_property
    def arc_at(self) -> dict:
        out = {}
        for k, arc in enumerate(self.arcs):
            out.setdefault(arc.u, k)
            out.setdefault(arc.v, k)
        return out

    @cached_property
    def glue(self) -> dict:
        """Slot-level gluing bijection, in both directions."""
        out = {}
        for h in self.gluing:
            for p in range(self.d):
                u = Slot(UPPER, h.upper, p)
                v = Slot(LOWER, h.lower, (h.offset - p) % self.d)
                out[u] = v
                out[v] = u
        return out

    @cached_property
    def handle_of(self) -> dict:
        """Handle index for every cycle ``(side, i)``."""
        out = {}
        for h in self.gluing:
            out[(UPPER, h.upper)] = h.upper
            out[(LOWER, h.lower)] = h.upper
        return out

    def invariant_errors(self) -> list:
        """Violations of the slot/arc/gluing bookkeeping, empty when sound."""
        errors = []
        valid = set(self.slots())
        count = Counter()
        for arc in self.arcs:
            for x in (arc.u, arc.v):
                if x not in valid:
                    errors.append(f"arc endpoint {x} is not a slot")
                count[x] += 1
        for x in sorted(valid):
            if count[x] != 1:
                errors.append(f"slot {tuple(x)} has {count[x]} incident arcs")
        uppers = Counter(h.upper for h in self.gluing)
        lowers = Counter(h.lower for h in self.gluing)
        if sorted(uppers) != list(range(1, self.n + 1)) or max(uppers.values(), default=0) > 1:
            errors.append("gluing does not pair every upper cycle exactly once")
        if sorted(lowers) != list(range(1, self.n + 1)) or max(lowers.values(), default=0) > 1:
            errors.append("gluing does not pair every lower cycle exactly once")
        if self.params is not None:
            conv = self.convention or CONVENTION
            s = conv.s_sign * self.params.s
            for h in self.gluing:
                if (h.upper - h.lower - s) % self.n:
                    errors.append(f"handle {tuple(h)} does not respect the shift s={s}")
        return errors

    def to_json(self) -> dict:
        return {
            "params": None if self.params is None else dict(
                zip("abcnrs", self.params.as_tuple())),
            "n": self.n,
            "d": self.d,
            "cycles": [
                {"side": side, "index": i,
                 "slots": [[side, i, p] for p in range(self.d)]}
                for side, i in self.cycles()
            ],
            "arcs": [{"ends": [list(a.u), list(a.v)], "tag": a.tag} for a in self.arcs],
            "gluing": [[list(u), list(self.glue[u])]
                       for u in sorted(s for s in self.glue if s.side == UPPER)],
            "scaffold": [[list(p), list(q)] for p, q in self.scaffold],
            "poles": [list(p) for p in self.poles],
            "convention": None if self.convention is None else {
                "mirror": self.convention.mirror,
                "r_sign": self.convention.r_sign,
                "s_sign": self.convention.s_sign},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        """Inverse of ``to_json``; the gluing must be a reflection on every handle."""
        try:
            n, d = int(data["n"]), int(data["d"])
            arcs = tuple(Arc(Slot(*e["ends"][0]), Slot(*e["ends"][1]), e.get("tag", ""))
                         for e in data["arcs"])
            pairs = [(Slot(*u), Slot(*v)) for u, v in data["gluing"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed diagram JSON: {exc}")
        handles = {}
        for u, v in pairs:
            if u.side != UPPER or v.side != LOWER:
                raise DomainError(f"gluing pair {u}, {v} must join an upper to a lower slot")
            offset = (u.pos + v.pos) % d
            h = Handle(u.cycle, v.cycle, offset)
            if handles.setdefault(u.cycle, h) != h:
                raise DomainError(f"gluing of cycle {u.cycle} is not a single reflection")
        if len(pairs) != n * d:
            raise DomainError(f"expected {n * d} gluing pairs, got {len(pairs)}")
        params = None
        if data.get("params"):
            p = data["params"]
            params = DunwoodyParams(*(int(p[k]) for k in "abcnrs"))
        conv = None
        if data.get("convention"):
            conv = Convention(**data["convention"])
        scaffold = tuple((Port(*p), Port(*q)) for p, q in data.get("scaffold", []))
        poles = tuple(Port(*p) for p in data.get("poles", []))
        return cls(n, d, arcs, tuple(handles[i] for i in sorted(handles)),
                   params, scaffold, poles, conv)


def _layout(side, a, b, c):
    """Clockwise block items of one cycle, before mirroring.

    Real items are ``(tag, block, k)``; scaffold items ``(tag, block, None)``.
    """
    def block(tag, name, size, phantom_first):
        items = [(tag, name, k) for k in range(size)]
        ph = (tag, name, None)
        return [ph] + items if phantom_first else items + [ph]

    if side == UPPER:
        return (block("A-upper", "Ar", a, False) + block("B", "B", b, False)
                + block("C", "C", c, False) + block("A-upper", "Al", a, True))
    return (block("A-lower", "Al", a, True) + block("B", "B", b, True)
            + block("C", "C", c, True) + block("A-lower", "Ar", a, False))


def build(params: DunwoodyParams, convention: Convention = None) -> Diagram:
    """Construct the Dunwoody diagram of ``params`` under ``convention``."""
    if not isinstance(params, DunwoodyParams):
        raise DomainError("build needs DunwoodyParams")
    conv = CONVENTION if convention is None else convention
    a, b, c, n = params.a, params.b, params.c, params.n
    d = params.d

    def nxt(i):
        return i % n + 1

    # Lay out every cycle, number its real slots and place scaffold ports.
    where = {}  # (side, i, block, k) -> Slot or Port
    poles = []
    for side in (UPPER, LOWER):
        items = _layout(side, a, b, c)
        if conv.mirror:
            items = items[::-1]
        for i in range(1, n + 1):
            first = next(j for j, it in enumerate(items) if it[2] is not None)
            rolled = items[first:] + items[:first]
            # The pole corner follows the last item of the unrolled list.
            pole_item = items[-1]
            pos, sub = -1, 0
            for tag, name, k in rolled:
                if k is None:
                    sub += 1
                    port = Port(side, i, pos, sub)
                else:
                    pos, sub = pos + 1, 0
                    port = Slot(side, i, pos)
                where[(side, i, name, k)] = port
            pp = where[(side, i, pole_item[1], pole_item[2])]
            poles.append(as_port(pp) if isinstance(pp, Slot) else pp)

    arcs, scaffold = [], []

    def join(tag, x_side, x_cycle, x_block, y_side, y_cycle, y_block, size):
        for k in range(size):
            arcs.append(Arc(where[(x_side, x_cycle, x_block, k)],
                            where[(y_side, y_cycle, y_block, size - 1 - k)], tag))
        scaffold.append((where[(x_side, x_cycle, x_block, None)],
                         where[(y_side, y_cycle, y_block, None)]))

    for i in range(1, n + 1):
        join("A-upper", UPPER, i, "Ar", UPPER, nxt(i), "Al", a)
        join("B", UPPER, i, "B", LOWER, nxt(i), "B", b)
        join("C", UPPER, i, "C", LOWER, i, "C", c)
        join("A-lower", LOWER, i, "Ar", LOWER, nxt(i), "Al", a)
    arcs.sort(key=lambda arc: (TAGS.index(arc.tag), arc.u, arc.v))
    scaffold = [(as_port(p) if isinstance(p, Slot) else p, as_port(q) if isinstance(q, Slot) else q)
                for p, q in scaffold]

    r = (conv.r_sign * params.r) % d
    s = (conv.s_sign * params.s) % n
    gluing = tuple(Handle(i, (i - 1 - s) % n + 1, r) for i in range(1, n + 1))
    return Diagram(n, d, tuple(arcs), gluing, params, tuple(scaffold), tuple(poles), conv)


def rotate(diagram: Diagram, k: int = 1) -> Diagram:
    """Apply the index rotation ``C'_i -> C'_{i+k}``, ``C''_i -> C''_{i+k}`` slot-wise."""
    n = diagram.n

    def rot(x):
        return type(x)(x[0], (x[1] - 1 + k) % n + 1, *x[2:])

    arcs = tuple(Arc(rot(a.u), rot(a.v), a.tag) for a in diagram.arcs)
    gluing = tuple(sorted(Handle((h.upper - 1 + k) % n + 1, (h.lower - 1 + k) % n + 1, h.offset)
                          for h in diagram.gluing))
    scaffold = tuple((rot(p), rot(q)) for p, q in diagram.scaffold)
    poles = tuple(rot(p) for p in diagram.poles)
    return Diagram(n, diagram.d, arcs, gluing, diagram.params, scaffold, poles,
                   diagram.convention)


Step = namedtuple("Step", "arc direction sign handle")


@dataclass(frozen=True)
class Curve:
    """A closed relator curve; each step runs along one arc and then crosses a handle."""

    steps: tuple

    def __len__(self):
        return len(self.steps)

    def arcs(self) -> frozenset:
        return frozenset(s.arc for s in self.steps)

    def letters(self) -> tuple:
        return tuple(s.sign * s.handle for s in self.steps)


@dataclass(frozen=True)
class TracedCurves:
    curves: tuple

    def __len__(self):
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def partition(self) -> frozenset:
        return frozenset(c.arcs() for c in self.curves)


def trace(diagram: Diagram) -> TracedCurves:
    """
    Follow the arcs through the gluing until every arc has been used.

    Each curve starts at its smallest upper crossing slot (by cycle, then
    position) and is oriented so that crossing is read as ``+handle``.
    Curves are listed in order of their starting crossing.
    """
    partner, glue, arc_at = diagram.partner, diagram.glue, diagram.arc_at
    missing = [x for x in diagram.slots() if x not in partner]
    if missing:
        raise DomainError(f"slot {tuple(missing[0])} has no arc")
    seen = set()
    curves = []
    for start in sorted((x for x in diagram.slots() if x.side == UPPER),
                        key=lambda x: (x.cycle, x.pos)):
        if start in seen:
            continue
        steps = []
        # Arrive at ``start`` along the arc of its partner, then cross.
        u = start
        v = partner[u]
        while True:
            k = arc_at[u]
            direction = 1 if diagram.arcs[k].v == u else -1
            sign = 1 if u.side == UPPER else -1
            steps.append(Step(k, direction, sign, diagram.handle_of[(u.side, u.cycle)]))
            seen.add(u if u.side == UPPER else glue[u])
            w = glue[u]
            u = partner[w]
            if u == start:
                break
            if len(steps) > len(diagram.arcs):
                raise DomainError("tracing did not close up")
        curves.append(Curve(tuple(steps)))
    return TracedCurves(tuple(curves))


def curve_words(diagram: Diagram) -> list:
    """Freely reduced word of every traced curve, with no validity check."""
    return [reduce(Word(diagram.n, c.letters())) for c in trace(diagram)]


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def roots(self):
        return {self.find(x) for x in list(self.parent)}


@dataclass(frozen=True)
class _Regions:
    uf: _UnionFind
    faces: int
    scaffold_edges: int


def _regions(diagram: Diagram) -> _Regions:
    """
    Regions of the surface cut along the curves, via the planar rotation system.

    Every cycle is collapsed to a vertex whose darts are its ports in
    clockwise order; corners between consecutive darts are pieces of the
    cycle boundary.  Corners are merged along faces, along a single
    boundary segment, and across the gluing.
    """
    other = {}
    for arc in diagram.arcs:
        other[as_port(arc.u)] = as_port(arc.v)
        other[as_port(arc.v)] = as_port(arc.u)
    for p, q in diagram.scaffold:
        other[p] = q
        other[q] = p
    by_cycle = {}
    for port in other:
        by_cycle.setdefault((port.side, port.cycle), []).append(port)
    succ = {}
    for ports in by_cycle.values():
        ports.sort(key=lambda x: (x.pos % diagram.d, x.sub))
        for x, y in zip(ports, ports[1:] + ports[:1]):
            succ[x] = y

    uf = _UnionFind()
    seen = set()
    faces = 0
    for start in other:
        if start in seen:
            continue
        faces += 1
        y = start
        while y not in seen:
            seen.add(y)
            z = other[succ[y]]
            uf.union(("corner", y), ("corner", z))
            y = z
    for y in other:
        uf.union(("corner", y), ("segment", y.side, y.cycle, y.pos % diagram.d))
    for h in diagram.gluing:
        for p in range(diagram.d):
            uf.union(("segment", UPPER, h.upper, p),
                     ("segment", LOWER, h.lower, (h.offset - p - 1) % diagram.d))
    return _Regions(uf, faces, len(diagram.scaffold))


@dataclass(frozen=True)
class ValidityReport:
    curve_count: int
    is_heegaard: bool
    cut_surface_connected: bool
    cut_surface_euler: int
    components: int = 1
    reason: str = ""

    @property
    def cut_surface_genus(self) -> Optional[int]:
        """Genus of the cut surface, which has ``2 * curve_count`` boundary circles."""
        if not self.cut_surface_connected:
            return None
        return (2 - self.cut_surface_euler - 2 * self.curve_count) // 2


def validate(diagram: Diagram) -> ValidityReport:
    """
    Decide whether the curves form a complete meridian system.

    Valid means exactly ``n`` curves whose complement in the closed genus-n
    surface is connected with Euler characteristic ``2 - 2n``, i.e. a sphere
    with ``2n`` holes.
    """
    n, d = diagram.n, diagram.d
    curves = trace(diagram)
    regions = _regions(diagram)
    components = len(regions.uf.roots())
    # Cut along the curves: 2nd vertices, 2nd arc copies + nd glued segments,
    # regions glued from planar faces along scaffold arcs.
    euler = regions.faces - regions.scaffold_edges - n * d
    connected = components == 1
    reasons = []
    if len(curves) != n:
        reasons.append(f"{len(curves)} curves, expected {n}")
    if not connected:
        reasons.append(f"cut surface has {components} components")
    if euler != 2 - 2 * n:
        reasons.append(f"cut surface Euler characteristic {euler}, expected {2 - 2 * n}")
    return ValidityReport(len(curves), not reasons, connected, euler, components,
                          "; ".join(reasons))


def induced_presentation(diagram: Diagram, require_valid: bool = True) -> Presentation:
    """Presentation of the fundamental group read off the relator curves."""
    if require_valid:
        report = validate(diagram)
        if not report.is_heegaard:
            raise NotHeegaardError(f"not a Heegaard diagram: {report.reason}")
    return Presentation(diagram.n, tuple(curve_words(diagram)))


@dataclass(frozen=True)
class SymmetryReport:
    """
    Result of ``check_symmetry``; truthy iff the rotation is a symmetry.

    ``curve_cycles`` is the cycle type of the rotation acting on the traced
    curves, filled in only for valid diagrams.
    """

    equivariant: bool
    curve_cycles: Optional[tuple] = None

    @property
    def single_cycle(self) -> Optional[bool]:
        if self.curve_cycles is None:
            return None
        return len(self.curve_cycles) == 1

    def __bool__(self):
        return self.equivariant


def _curve_permutation(diagram: Diagram, curves: TracedCurves) -> list:
    """Image of each curve under the rotation, as curve indices."""
    rot = {}
    index = {frozenset((a.u, a.v)): k for k, a in enumerate(diagram.arcs)}
    n = diagram.n
    for k, a in enumerate(diagram.arcs):
        ends = frozenset(Slot(x.side, x.cycle % n + 1, x.pos) for x in (a.u, a.v))
        rot[k] = index[ends]
    owner = {}
    for ci, c in enumerate(curves):
        for s in c.steps:
            owner[s.arc] = ci
    return [owner[rot[c.steps[0].arc]] for c in curves]


def _cycle_type(perm: list) -> tuple:
    seen = set()
    lengths = []
    for i in range(len(perm)):
        if i in seen:
            continue
        m, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            m += 1
        lengths.append(m)
    return tuple(sorted(lengths, reverse=True))


def check_symmetry(diagram: Diagram) -> SymmetryReport:
    """Check that the order-n rotation maps arcs to arcs and commutes with the gluing."""
    rotated = rotate(diagram)
    arcs = Counter(frozenset((a.u, a.v)) for a in diagram.arcs)
    if Counter(frozenset((a.u, a.v)) for a in rotated.arcs) != arcs:
        return SymmetryReport(False)
    if set(rotated.gluing) != set(diagram.gluing):
        return SymmetryReport(False)
    if diagram.invariant_errors() or not validate(diagram).is_heegaard:
        return SymmetryReport(True)
    curves = trace(diagram)
    return SymmetryReport(True, _cycle_type(_curve_permutation(diagram, curves)))


def pole_regions(diagram: Diagram) -> list:
    """
    Region labels of the corners holding the rotation's fixed points.

    Returns one list per pole (north: upper cycles, south: lower cycles),
    ordered by cycle index; empty when the diagram carries no layout.
    """
    if not diagram.poles:
        return []
    uf = _regions(diagram).uf
    north = sorted((p for p in diagram.poles if p.side == UPPER), key=lambda p: p.cycle)
    south = sorted((p for p in diagram.poles if p.side == LOWER), key=lambda p: p.cycle)
    return [[uf.find(("corner", p)) for p in ps] for ps in (north, south)]
