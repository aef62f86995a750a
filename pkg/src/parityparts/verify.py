"""Verification drivers with replayable reports.

Four modes: exhaustive structural checks over a whole weight, the same
checks over uniform samples at weights too large to enumerate, count
inequality scans between the two mapped families, and witness scans that
confirm non-surjectivity.  Every reported failure carries the partition
in canonical text form plus the check name, so it can be replayed by
hand through the library.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import asdict, dataclass, field

from .casemap import (
    IMAGE_FAMILY,
    SOURCE_FAMILY,
    backward,
    case_min_weight,
    forward,
    image_case_matches,
    source_case_matches,
    witness,
)
from .core import Partition, format_partition
from .families import (
    ENUMERATION_CUTOFF,
    FamilySampler,
    count_family,
    enumerate_family,
    in_family,
)
from .series import series_p_eu_od, series_p_od_eu

__all__ = [
    "CaseTally",
    "Failure",
    "InequalityRecord",
    "VerificationReport",
    "verify_exhaustive",
    "verify_sampled",
    "verify_inequality",
    "verify_witnesses",
]

INEQUALITY_METHODS = ("series", "dp", "both")


@dataclass
class CaseTally:
    """Member checks attempted, passed, and skipped for one case.

    Members below the case's minimum weight are counted as skipped; they
    are never silently passed.
    """

    tested: int = 0
    passed: int = 0
    skipped: int = 0


@dataclass(frozen=True)
class Failure:
    n: int
    partition: str
    check: str
    detail: str


@dataclass(frozen=True)
class InequalityRecord:
    n: int
    count_eu_od: int
    count_od_eu: int

    @property
    def strict(self) -> bool:
        return self.count_eu_od > self.count_od_eu


@dataclass
class VerificationReport:
    """Outcome of one verification run.

    ``per_case`` tallies source members by their case.  ``case_counts``
    (exhaustive mode) maps each case to the pair (source members,
    image-signature matches) at this weight.  ``inequalities`` (inequality
    mode) records the two counts per weight.  ``ok`` is true exactly when
    no check failed.
    """

    mode: str
    n_lo: int
    n_hi: int
    per_case: dict[int, CaseTally] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    case_counts: dict[int, tuple[int, int]] | None = None
    inequalities: list[InequalityRecord] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def tally(self, case: int) -> CaseTally:
        return self.per_case.setdefault(case, CaseTally())

    def record_failure(self, n: int, partition: str, check: str, detail: str) -> None:
        self.failures.append(Failure(n=n, partition=partition, check=check, detail=detail))

    def finish(self) -> "VerificationReport":
        """Sort everything so equal runs serialize identically."""
        self.failures.sort(key=lambda f: (f.n, f.check, f.partition, f.detail))
        self.per_case = dict(sorted(self.per_case.items()))
        if self.case_counts is not None:
            self.case_counts = dict(sorted(self.case_counts.items()))
        return self

    def to_dict(self) -> dict:
        data = {
            "mode": self.mode,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "ok": self.ok,
            "per_case": {str(case): asdict(tally) for case, tally in self.per_case.items()},
            "failures": [asdict(failure) for failure in self.failures],
            "case_counts": None
            if self.case_counts is None
            else {str(case): list(pair) for case, pair in self.case_counts.items()},
            "inequalities": None
            if self.inequalities is None
            else [
                {
                    "n": record.n,
                    "count_eu_od": record.count_eu_od,
                    "count_od_eu": record.count_od_eu,
                    "strict": record.strict,
                }
                for record in self.inequalities
            ],
        }
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def text_lines(self) -> list[str]:
        lines = [f"mode={self.mode} range={self.n_lo}..{self.n_hi} ok={'yes' if self.ok else 'NO'}"]
        for case, tally in self.per_case.items():
            lines.append(
                f"  case {case}: tested={tally.tested} passed={tally.passed} skipped={tally.skipped}"
            )
        if self.case_counts:
            pairs = " ".join(
                f"{case}:{source}/{image}" for case, (source, image) in self.case_counts.items()
            )
            lines.append(f"  source/image counts per case: {pairs}")
        if self.inequalities is not None:
            strict = sum(1 for record in self.inequalities if record.strict)
            lines.append(f"  strict at {strict} of {len(self.inequalities)} weights")
        for failure in self.failures:
            lines.append(
                f"  FAIL n={failure.n} check={failure.check}"
                f" partition={failure.partition or '-'} {failure.detail}"
            )
        return lines


def _check_source_member(
    source: Partition, n: int, report: VerificationReport, images: dict[Partition, Partition]
) -> None:
    """Run the per-member checks and file failures; shared by both modes."""
    matches = source_case_matches(source)
    if len(matches) != 1:
        report.record_failure(
            n,
            format_partition(source),
            "classify",
            f"source conditions matched {list(matches) or 'nothing'}, expected exactly one",
        )
        return
    case = matches[0]
    tally = report.tally(case)
    tally.tested += 1
    if n < case_min_weight(case):
        tally.skipped += 1
        return
    try:
        image = forward(source)
    except ValueError as exc:
        report.record_failure(n, format_partition(source), "forward", f"case {case}: {exc}")
        return
    if image.weight != n:
        report.record_failure(
            n,
            format_partition(source),
            "weight",
            f"case {case}: image {format_partition(image)} weighs {image.weight}",
        )
        return
    if not in_family(image, IMAGE_FAMILY):
        report.record_failure(
            n,
            format_partition(source),
            "membership",
            f"case {case}: image {format_partition(image)} is outside {IMAGE_FAMILY.value}",
        )
        return
    image_matches = image_case_matches(image)
    if image_matches != (case,):
        report.record_failure(
            n,
            format_partition(source),
            "image-signature",
            f"case {case}: image {format_partition(image)}"
            f" matched {list(image_matches) or 'nothing'}",
        )
        return
    recovered = backward(image)
    if recovered != source:
        report.record_failure(
            n,
            format_partition(source),
            "roundtrip",
            f"case {case}: image {format_partition(image)}"
            f" inverted to {format_partition(recovered)}",
        )
        return
    first_source = images.setdefault(image, source)
    if first_source != source:
        report.record_failure(
            n,
            format_partition(source),
            "distinct-images",
            f"case {case}: image {format_partition(image)}"
            f" already produced by {format_partition(first_source)}",
        )
        return
    tally.passed += 1


def _check_witness(n: int, report: VerificationReport) -> None:
    unmatched = witness(n)
    shown = format_partition(unmatched)
    if unmatched.weight != n:
        report.record_failure(n, shown, "witness-weight", f"weighs {unmatched.weight}")
        return
    if not in_family(unmatched, IMAGE_FAMILY):
        report.record_failure(n, shown, "witness-membership", f"outside {IMAGE_FAMILY.value}")
        return
    matches = image_case_matches(unmatched)
    if matches:
        report.record_failure(
            n, shown, "witness-unmatched", f"matched signatures {list(matches)}"
        )


def verify_exhaustive(n: int, *, cutoff: int = ENUMERATION_CUTOFF) -> VerificationReport:
    """Check every structural claim over both full families at weight n.

    Source side: unique classification and, at or above each case's
    minimum weight, weight preservation, image membership, image
    signature agreement, inverse roundtrip, and distinctness of images.
    Image side: at most one signature per member, signature-matched
    members invert into the matching source case and map back to
    themselves, and per-case member counts agree on both sides wherever
    the map is defined.
    """
    report = VerificationReport(mode="exhaustive", n_lo=n, n_hi=n)
    images: dict[Partition, Partition] = {}
    source_counts: Counter[int] = Counter()
    for member in enumerate_family(SOURCE_FAMILY, n, cutoff=cutoff):
        matches = source_case_matches(member)
        if len(matches) == 1:
            source_counts[matches[0]] += 1
        _check_source_member(member, n, report, images)
    image_counts: Counter[int] = Counter()
    for member in enumerate_family(IMAGE_FAMILY, n, cutoff=cutoff):
        matches = image_case_matches(member)
        if len(matches) > 1:
            report.record_failure(
                n,
                format_partition(member),
                "signature-overlap",
                f"signatures {list(matches)} all matched",
            )
            continue
        if not matches:
            continue
        case = matches[0]
        image_counts[case] += 1
        if n < case_min_weight(case):
            continue
        try:
            recovered = backward(member)
        except ValueError as exc:
            report.record_failure(
                n, format_partition(member), "inverse", f"case {case}: {exc}"
            )
            continue
        if (
            not in_family(recovered, SOURCE_FAMILY)
            or source_case_matches(recovered) != (case,)
            or forward(recovered) != member
        ):
            report.record_failure(
                n,
                format_partition(member),
                "inverse-roundtrip",
                f"case {case}: inverted to {format_partition(recovered)}",
            )
    report.case_counts = {
        case: (source_counts.get(case, 0), image_counts.get(case, 0))
        for case in sorted(set(source_counts) | set(image_counts))
    }
    for case, (source_total, image_total) in report.case_counts.items():
        if n >= case_min_weight(case) and source_total != image_total:
            report.record_failure(
                n,
                f"case {case}",
                "count-equality",
                f"{source_total} source members but {image_total} signature matches",
            )
    return report.finish()


def verify_sampled(n: int, samples: int, seed: int) -> VerificationReport:
    """Run the per-member checks on uniform draws from the source family.

    Deterministic for a fixed (n, samples, seed).  At weights of 373 and
    up the witness at n is checked as well.
    """
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    report = VerificationReport(mode="sampled", n_lo=n, n_hi=n)
    sampler = FamilySampler(SOURCE_FAMILY, n)
    rng = random.Random(seed)
    images: dict[Partition, Partition] = {}
    for _ in range(samples):
        _check_source_member(sampler.sample(rng), n, report, images)
    if n >= 373:
        _check_witness(n, report)
    return report.finish()


def verify_inequality(lo: int, hi: int, method: str = "both") -> VerificationReport:
    """Record both family counts per weight and fail wherever the image
    family is not strictly larger.

    ``method`` selects the counting route: "series", "dp", or "both",
    where "both" also fails on any disagreement between the two routes.
    """
    if method not in INEQUALITY_METHODS:
        raise ValueError(f"method must be one of {INEQUALITY_METHODS}, got {method!r}")
    if lo < 0 or hi < lo:
        raise ValueError(f"bad weight range {lo}..{hi}")
    report = VerificationReport(mode="inequality", n_lo=lo, n_hi=hi)
    report.inequalities = []
    series_counts = None
    if method in ("series", "both"):
        upper = series_p_eu_od(hi)
        lower = series_p_od_eu(hi)
        series_counts = [(upper[n], lower[n]) for n in range(lo, hi + 1)]
    dp_counts = None
    if method in ("dp", "both"):
        dp_counts = [
            (count_family(IMAGE_FAMILY, n), count_family(SOURCE_FAMILY, n))
            for n in range(lo, hi + 1)
        ]
    if series_counts is not None and dp_counts is not None:
        for offset, (from_series, from_dp) in enumerate(zip(series_counts, dp_counts)):
            if from_series != from_dp:
                report.record_failure(
                    lo + offset,
                    "-",
                    "count-mismatch",
                    f"series gives {from_series}, dynamic program gives {from_dp}",
                )
    chosen = series_counts if series_counts is not None else dp_counts
    for offset, (image_count, source_count) in enumerate(chosen):
        record = InequalityRecord(
            n=lo + offset, count_eu_od=image_count, count_od_eu=source_count
        )
        report.inequalities.append(record)
        if not record.strict:
            report.record_failure(
                record.n,
                "-",
                "inequality",
                f"count_eu_od={image_count} is not above count_od_eu={source_count}",
            )
    return report.finish()


def verify_witnesses(lo: int, hi: int) -> VerificationReport:
    """Check the witness at every weight in lo..hi; lo must be at least 373."""
    if lo < 373:
        raise ValueError(f"witness range starts at 373, got {lo}")
    if hi < lo:
        raise ValueError(f"bad weight range {lo}..{hi}")
    report = VerificationReport(mode="witnesses", n_lo=lo, n_hi=hi)
    for n in range(lo, hi + 1):
        _check_witness(n, report)
    return report.finish()
