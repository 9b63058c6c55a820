"""
Parameter scans over Dunwoody diagrams, and calibration of the slot layout.

A scan walks a product of parameter ranges in lexicographic order
``(a, b, c, n, r, s)`` and records, for each tuple, the validity report and
(for valid diagrams) a cyclic-presentation witness.  Failures are recorded
rather than raised.
"""
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .diagram import CONVENTION, Convention, DunwoodyParams, ValidityReport, build, induced_presentation, validate
from .errors import DunwoodyError
from .words import CyclicWitness, detect_cyclic, format_word, fractional, sieradsky

__all__ = [
    "ScanRecord", "scan", "scan_tuples", "format_record", "CANDIDATE_CONVENTIONS",
    "CALIBRATED", "calibrate", "matches",
]


@dataclass(frozen=True)
class ScanRecord:
    params: tuple
    report: Optional[ValidityReport] = None
    cyclic: Optional[CyclicWitness] = None
    error: Optional[str] = None

    @property
    def valid(self) -> bool:
        return self.report is not None and self.report.is_heegaard


def scan_tuples(a: Sequence[int], b: Sequence[int], c: Sequence[int], n: Sequence[int],
                r: Optional[Sequence[int]] = None, s: Optional[Sequence[int]] = None):
    """Parameter tuples in lexicographic order; ``None`` means all residues of r (mod d) or s (mod n)."""
    for aa, bb, cc, nn in itertools.product(sorted(a), sorted(b), sorted(c), sorted(n)):
        d = 2 * aa + bb + cc
        rs = sorted(r) if r is not None else range(max(d, 1))
        ss = sorted(s) if s is not None else range(max(nn, 1))
        for rr, sv in itertools.product(rs, ss):
            yield (aa, bb, cc, nn, rr, sv)


def _evaluate(args):
    values, convention = args
    try:
        params = DunwoodyParams(*values)
        diagram = build(params, convention)
        report = validate(diagram)
        cyclic = None
        if report.is_heegaard:
            cyclic = detect_cyclic(induced_presentation(diagram))
        return ScanRecord(values, report, cyclic)
    except DunwoodyError as exc:
        return ScanRecord(values, error=f"{type(exc).__name__}: {exc}")


def scan(a, b, c, n, r=None, s=None, convention: Convention = None, workers: int = 1) -> list:
    """
    Build and validate every tuple of the product range.

    With ``workers > 1`` tuples are evaluated in separate processes; the
    result order is the lexicographic tuple order regardless.
    """
    jobs = [(t, convention) for t in scan_tuples(a, b, c, n, r, s)]
    if workers <= 1 or len(jobs) < 2:
        return [_evaluate(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def format_record(rec: ScanRecord) -> str:
    """One JSON line per record, with sorted keys so output is byte-stable."""
    out = {"params": list(rec.params)}
    if rec.error is not None:
        out["error"] = rec.error
    else:
        rep = rec.report
        out.update(curves=rep.curve_count, valid=rep.is_heegaard,
                   connected=rep.cut_surface_connected, euler=rep.cut_surface_euler)
        if rec.cyclic is not None:
            out["w"] = format_word(rec.cyclic.w)
        elif rep.is_heegaard:
            out["w"] = None
    return json.dumps(out, sort_keys=True)


def matches(rec: ScanRecord, target) -> bool:
    """Whether a valid record's presentation is ``target`` up to relabeling and inversion."""
    if not rec.valid or rec.params[3] != target.n:
        return False
    return detect_cyclic(rec.cyclic.cyclic.presentation(), target) is not None


CANDIDATE_CONVENTIONS = tuple(
    Convention(mirror, r_sign, s_sign)
    for mirror in (False, True) for r_sign in (1, -1) for s_sign in (1, -1))


def calibrate(n_values=(2, 3, 4, 5), max_abc: int = 2, conventions=CANDIDATE_CONVENTIONS,
              workers: int = 1) -> dict:
    """
    Find, per candidate convention and degree, the tuples realizing the
    trefoil family ``S(n)`` and the figure-eight family ``G_n(x1^-1 x2^2 x3^-1 x2)``.

    Returns ``{convention: {"sieradsky": {n: [tuples]}, "figure_eight": {...}}}``.
    """
    rng = range(max_abc + 1)
    out = {}
    for conv in conventions:
        records = scan(rng, rng, rng, n_values, convention=conv, workers=workers)
        found = {"sieradsky": {n: [] for n in n_values}, "figure_eight": {n: [] for n in n_values}}
        for rec in records:
            if not rec.valid:
                continue
            n = rec.params[3]
            if n > 1 and matches(rec, sieradsky(n)):
                found["sieradsky"][n].append(rec.params)
            if n > 1 and matches(rec, fractional(1, 1, n)):
                found["figure_eight"][n].append(rec.params)
        out[conv] = found
    return out


# Output of ``calibrate()`` for CONVENTION: the lexicographically first tuple
# per degree.  Frozen here and re-derived by the test suite.
CALIBRATED = {
    "convention": CONVENTION,
    "sieradsky": {2: (1, 0, 1, 2, 0, 0), 3: (1, 0, 1, 3, 0, 2),
                  4: (1, 0, 1, 4, 0, 2), 5: (1, 0, 1, 5, 0, 2)},
    "figure_eight": {2: (2, 0, 1, 2, 0, 0), 3: (2, 0, 1, 3, 0, 0),
                     4: (2, 0, 1, 4, 0, 0), 5: (2, 0, 1, 5, 0, 0)},
}
