"""Independent verification engine: Schubert-basis expansion by elimination.

Any GKM class expands uniquely in the Schubert classes over the base
ring, because restriction is upper triangular with respect to Bruhat
order: ``S_w`` is supported on ``{v >= w}`` and its bottom value is the
product of the bottom factors.  Walking the group in increasing length,
the coefficient on ``S_w`` is the residual value at ``w`` divided exactly
by that product; subtracting ``coeff * S_w`` clears the point and never
touches shorter elements (an assertion guards this triangularity).

The expansion deliberately shares no code path with the recursive
structure-constant engine beyond the primitive modules, so the two can
check each other: :func:`verify_sweep` compares them on every triple of a
(small) group, and :func:`lemma_cover_sweep` exhaustively checks the
cover-ratio identity

    bottom(w') == S_w|_{w'} * (w . beta)        for covers w' = w r_beta

together with uniqueness of the removable letter in every reduced word.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .billey import bottom_factors, bottom_restriction, restrict, schubert_class
from .errors import GroupTooLargeError, NonzeroResidualError
from .gkm import GkmClass, SchubertExpansion
from .polyring import Polynomial, divide_exact, render
from .recurrence import structure_constant
from .rootsys import RootSystem, WeylElement, all_reduced_words, covers

__all__ = [
    "ExpansionReport",
    "SweepReport",
    "CoverSweepReport",
    "expand_in_schubert",
    "oracle_constant",
    "verify_sweep",
    "lemma_cover_sweep",
]

ORACLE_SWEEP_CAP = 120  # largest |W| swept by default


@dataclass
class ExpansionReport:
    expansion: SchubertExpansion
    residual_zero: bool
    steps: int


def expand_in_schubert(p: GkmClass) -> ExpansionReport:
    """Expand a class in the Schubert basis by triangular elimination.

    Raises :class:`NotDivisibleError` or :class:`NonzeroResidualError` when
    the input is not a class (or an upstream computation is corrupted);
    these are never silently absorbed.
    """
    rs = p.rs
    elements = rs.elements()
    residual = list(p.values)
    coeffs: dict[WeylElement, Polynomial] = {}
    steps = 0
    cleared_below = 0
    for idx, w in enumerate(elements):
        if w.length > cleared_below:
            for j in range(idx):
                if not residual[j].is_zero():
                    raise NonzeroResidualError(
                        f"residual survives at {elements[j]!r} below length {w.length}"
                    )
            cleared_below = w.length
        val = residual[idx]
        if val.is_zero():
            continue
        steps += 1
        coeff = val
        for beta in bottom_factors(w):
            coeff = divide_exact(coeff, beta.coords)
        coeffs[w] = coeff
        s = schubert_class(w)
        residual = [q - coeff * sv for q, sv in zip(residual, s.values)]
    residual_zero = all(q.is_zero() for q in residual)
    if not residual_zero:
        raise NonzeroResidualError("nonzero residual after full elimination")
    return ExpansionReport(SchubertExpansion(rs, coeffs), residual_zero, steps)


def oracle_constant(w: WeylElement, v: WeylElement, u: WeylElement) -> Polynomial:
    """The coefficient of ``S_u`` in ``S_w * S_v``, by direct expansion."""
    rs = w.rs
    cache = rs.cache("oracle_products")
    key = (w, v)
    got = cache.get(key)
    if got is None:
        got = expand_in_schubert(schubert_class(w) * schubert_class(v)).expansion
        cache[key] = got
    return got.coeff(u)


@dataclass
class SweepReport:
    """Outcome of a recurrence-vs-oracle sweep over structure constants."""

    group: str
    triples: int = 0
    mismatches: list[dict] = field(default_factory=list)
    max_coeff: int = 0
    elapsed_ms: float = 0.0
    ordinary_violations: list[dict] = field(default_factory=list)
    coeff_violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "triples": self.triples,
            "mismatches": self.mismatches,
            "max_coeff": self.max_coeff,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "ordinary_violations": self.ordinary_violations,
            "coeff_violations": self.coeff_violations,
        }

    def text_lines(self) -> list[str]:
        lines = [
            f"sweep {self.group}: {self.triples} triples, "
            f"{len(self.mismatches)} mismatches, max |coeff| {self.max_coeff}, "
            f"{self.elapsed_ms:.0f} ms"
        ]
        for m in self.mismatches:
            lines.append(
                f"  MISMATCH at ({m['w']}, {m['v']}, {m['u']}): "
                f"recurrence={m['recurrence']} oracle={m['oracle']}"
            )
        if self.ordinary_violations:
            lines.append(f"  ordinary positivity violations: {len(self.ordinary_violations)}")
        if self.coeff_violations:
            lines.append(f"  coefficient positivity violations: {len(self.coeff_violations)}")
        return lines


def verify_sweep(
    rs: RootSystem,
    ws=None,
    vs=None,
    us=None,
    *,
    force: bool = False,
    max_order: int = ORACLE_SWEEP_CAP,
) -> SweepReport:
    """Compare the two engines on all (filtered) triples of a group.

    Also collects positivity statistics: in the ordinary case every
    constant must be a nonnegative integer, and every equivariant constant
    must have nonnegative coefficients on the simple-root monomials.
    """
    if rs.order() > max_order and not force:
        raise GroupTooLargeError(
            f"|W| = {rs.order()} exceeds the oracle sweep cap {max_order}; "
            "pass force=True to override"
        )
    elements = rs.elements()
    ws = list(ws) if ws is not None else elements
    vs = list(vs) if vs is not None else elements
    us = list(us) if us is not None else elements
    report = SweepReport(group=rs.type_label or f"rank{rs.rank}")
    t0 = time.perf_counter()
    for w in ws:
        for v in vs:
            for u in us:
                report.triples += 1
                rec = structure_constant(w, v, u)
                orc = oracle_constant(w, v, u)
                if rec != orc:
                    report.mismatches.append(
                        {
                            "w": w.describe(),
                            "v": v.describe(),
                            "u": u.describe(),
                            "recurrence": render(rec),
                            "oracle": render(orc),
                        }
                    )
                if rec.is_zero():
                    continue
                report.max_coeff = max(report.max_coeff, rec.max_abs_coeff())
                where = {"w": w.describe(), "v": v.describe(), "u": u.describe()}
                if u.length == w.length + v.length:
                    if rec.homogeneous_degree() != 0 or next(iter(rec.terms.values())) < 0:
                        report.ordinary_violations.append(where | {"value": render(rec)})
                if any(c < 0 for c in rec.terms.values()):
                    report.coeff_violations.append(where | {"value": render(rec)})
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report


@dataclass
class CoverSweepReport:
    """Outcome of the cover-ratio and removable-letter sweep."""

    group: str
    covers_checked: int = 0
    words_checked: int = 0
    violations: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "covers_checked": self.covers_checked,
            "words_checked": self.words_checked,
            "violations": self.violations,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def text_lines(self) -> list[str]:
        lines = [
            f"cover sweep {self.group}: {self.covers_checked} covers, "
            f"{self.words_checked} reduced words, "
            f"{len(self.violations)} violations, {self.elapsed_ms:.0f} ms"
        ]
        lines.extend(f"  {v}" for v in self.violations)
        return lines


def lemma_cover_sweep(rs: RootSystem) -> CoverSweepReport:
    """Check the cover-ratio identity and removable-letter uniqueness.

    For every cover ``w' = w r_beta``:
      * ``bottom(w') == S_w|_{w'} * (w . beta)``;
      * for every reduced word of ``w'``, exactly one letter can be
        removed to leave a reduced word for ``w``.
    """
    report = CoverSweepReport(group=rs.type_label or f"rank{rs.rank}")
    t0 = time.perf_counter()
    for w in rs.elements():
        for wp, beta in covers(w):
            report.covers_checked += 1
            lhs = bottom_restriction(wp)
            rhs = restrict(w, wp).times_linear(w.act(beta).coords)
            if lhs != rhs:
                report.violations.append(
                    f"cover ratio fails at {w.describe()} -> {wp.describe()}"
                )
            for word in all_reduced_words(wp):
                report.words_checked += 1
                removable = 0
                for b in range(len(word)):
                    sub = word[:b] + word[b + 1:]
                    x = rs.identity
                    for i in sub:
                        x = x * rs.simple_reflection(i)
                    if x.length == len(sub) and x == w:
                        removable += 1
                if removable != 1:
                    report.violations.append(
                        f"removable letter count {removable} for word {word} "
                        f"of {wp.describe()} over {w.describe()}"
                    )
    report.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return report
