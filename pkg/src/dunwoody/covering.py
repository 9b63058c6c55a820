"""
Dunwoody diagrams as strongly-cyclic branched coverings.

The quotient of ``D(a, b, c, n, r, s)`` by its order-``n`` rotation is the
genus-one diagram ``D(a, b, c, 1, r, 0)`` of a (1,1)-knot in a lens space.
Here the quotient is that degree-one diagram, so it depends on ``a, b, c, r``
and nothing else; ``lift`` goes back up to degree ``n``.
"""
from dataclasses import dataclass

from .diagram import DunwoodyParams, build, check_symmetry, induced_presentation, pole_regions, validate
from .errors import DomainError

__all__ = [
    "QuotientData", "CoveringSpec", "LensOrder", "CyclicityReport",
    "quotient", "lift", "lens_order", "strongly_cyclic_check",
]


@dataclass(frozen=True)
class QuotientData:
    a: int
    b: int
    c: int
    r: int = 0

    def __post_init__(self):
        # Reuse the parameter checks with n = 1.
        p = DunwoodyParams(self.a, self.b, self.c, 1, self.r, 0)
        object.__setattr__(self, "r", p.r)

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def __str__(self):
        return f"{self.a},{self.b},{self.c},{self.r}"

    @classmethod
    def parse(cls, text: str) -> "QuotientData":
        try:
            values = [int(x) for x in text.replace(" ", "").split(",")]
        except ValueError:
            raise DomainError(f"cannot parse quotient {text!r}")
        if len(values) != 4:
            raise DomainError(f"expected four integers a,b,c,r, got {text!r}")
        return cls(*values)


@dataclass(frozen=True)
class CoveringSpec:
    """An ``n``-fold cyclic covering of the quotient, meridian sent to ``1 in Z_n``."""

    quotient: QuotientData
    n: int
    s: int = 0
    meridian_image: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"covering degree must be positive, got {self.n}")
        if self.meridian_image != 1:
            raise DomainError("the meridian image is normalized to 1")
        object.__setattr__(self, "s", self.s % self.n)

    def params(self) -> DunwoodyParams:
        return lift(self.quotient, self.n, self.s)


@dataclass(frozen=True)
class LensOrder:
    """Order ``p`` of the first homology of the quotient; 0 means infinite."""

    p: int

    @property
    def is_sphere(self) -> bool:
        return self.p == 1

    def __str__(self):
        return str(self.p)


@dataclass(frozen=True)
class CyclicityReport:
    strongly_cyclic: bool
    reason: str = ""

    def __bool__(self):
        return self.strongly_cyclic


def quotient(params: DunwoodyParams) -> QuotientData:
    return QuotientData(params.a, params.b, params.c, params.r)


def lift(q: QuotientData, n: int, s: int = 0) -> DunwoodyParams:
    if n < 1:
        raise DomainError(f"covering degree must be positive, got {n}")
    return DunwoodyParams(q.a, q.b, q.c, n, q.r, s)


def lens_order(q: QuotientData) -> LensOrder:
    """
    ``p`` for the lens space ``L(p, q)`` carrying the knot.

    The degree-one diagram has a single relator ``x1^e``; ``p = |e|``.
    Raises ``NotHeegaardError`` if that diagram is not valid.
    """
    diagram = build(lift(q, 1, 0))
    (relator,) = induced_presentation(diagram).relators
    return LensOrder(abs(sum(relator.exponent_sums())))


def strongly_cyclic_check(spec: CoveringSpec) -> CyclicityReport:
    """
    Combinatorial test for a strongly-cyclic covering.

    Requires the lifted diagram to be valid, the rotation to permute its
    ``n`` curves in a single ``n``-cycle, and each fixed point of the
    rotation to lift to one point: the ``n`` corners around a pole must
    all lie in the same region of the cut surface.
    """
    diagram = build(spec.params())
    report = validate(diagram)
    if not report.is_heegaard:
        return CyclicityReport(False, f"lifted diagram is not a Heegaard diagram: {report.reason}")
    sym = check_symmetry(diagram)
    if not sym:
        return CyclicityReport(False, "rotation is not a symmetry of the diagram")
    if not sym.single_cycle:
        return CyclicityReport(False, f"rotation acts on curves with cycle type {sym.curve_cycles}")
    for name, regions in zip(("north", "south"), pole_regions(diagram)):
        if len(set(regions)) != 1:
            return CyclicityReport(
                False, f"{name} branch point splits into {len(set(regions))} points")
    return CyclicityReport(True)

