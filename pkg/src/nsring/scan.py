"""Scan every numerical semigroup up to a genus bound.

Each row is a degree report plus the names of the identity checks that
failed on it.  Failures are data: the scan never raises on them, and only
``strict`` turns them into a non-zero exit code.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from . import degrees, endo, roots
from .enumerate import enumerate_semigroups
from .errors import NsringError
from .ideal import length_between
from .semigroup import NumericalSemigroup

log = logging.getLogger(__name__)

CSV_HEADER = (
    "generators,genus,frobenius,multiplicity,type,cdeg,bideg,tdeg,rho,e1,s0,"
    "gorenstein,almost_gorenstein,nearly_gorenstein,goto,conjecture_ok,check_failures"
)
FIELDS = tuple(CSV_HEADER.split(","))

CORE_CHECKS = ("conjecture", "tdeg_eq_bideg", "tcdeg", "ngens", "sally", "roots")
EXTRA_CHECKS = ("degrees", "rho", "powers", "endo_canonical")
ALL_CHECKS = CORE_CHECKS + EXTRA_CHECKS
DEFAULT_CHECKS = tuple(c for c in ALL_CHECKS if c != "roots")

EXIT_OK = 0
EXIT_IDENTITY = 2
EXIT_CONJECTURE = 3


# -- individual checks: each returns True when the identity holds ----------

def _conjecture(H, rep):
    return rep.cdeg >= rep.bideg


def _tdeg_eq_bideg(H, rep):
    return rep.tdeg == rep.bideg


def _tcdeg(H, rep):
    return endo.tcdeg_identity(H).ok


def _ngens(H, rep):
    return endo.endo_checks(H).nu_ok


def _sally(H, rep):
    if rep.type != 2:
        return True
    K = degrees.canonical_ideal(H)
    # K^2 \ K has length cdeg when K needs two generators
    k2_over_k = length_between(K.power(2), K)
    return (
        k2_over_k == rep.cdeg
        and rep.e1 <= rep.rho * rep.cdeg
        and (rep.rho == 2) == (rep.e1 == 2 * rep.cdeg)
    )


def _degrees(H, rep):
    gor = rep.gorenstein
    return (
        rep.cdeg >= rep.type - 1
        and gor == (rep.cdeg == 0) == (rep.bideg == 0)
        and (not rep.almost_gorenstein or rep.bideg == 1 or gor)
        and (not rep.almost_gorenstein or gor or rep.rho == 2)
    )


def _rho(H, rep):
    if rep.gorenstein:
        return rep.rho == 0
    return (
        rep.rho != 1
        and rep.rho <= H.multiplicity - 1
        and (H.multiplicity != 3 or rep.rho == 2)
    )


def _powers(H, rep):
    if rep.gorenstein:
        return True
    K = degrees.canonical_ideal(H)
    return not any(K.power(n).is_isomorphic(K) for n in range(2, 7))


def _endo_canonical(H, rep):
    return H.is_dvr or endo.endo_checks(H).canonical_of_endo_ok


def _roots(H, rep, guard=roots.DEFAULT_GUARD):
    if rep.gorenstein or H.genus > guard:
        return True
    try:
        for w in roots.rootset(H, guard):
            roots.rho_bound_from_root(H, w)
    except AssertionError:
        return False
    return True


CHECKS: dict[str, Callable] = {
    "conjecture": _conjecture,
    "tdeg_eq_bideg": _tdeg_eq_bideg,
    "tcdeg": _tcdeg,
    "ngens": _ngens,
    "sally": _sally,
    "roots": _roots,
    "degrees": _degrees,
    "rho": _rho,
    "powers": _powers,
    "endo_canonical": _endo_canonical,
}


# -- records ---------------------------------------------------------------

@dataclass(frozen=True)
class ScanRecord:
    generators: tuple[int, ...]
    genus: int
    frobenius: int
    multiplicity: int
    type: int
    cdeg: int
    bideg: int
    tdeg: int
    rho: int
    e1: int
    s0: int
    gorenstein: bool
    almost_gorenstein: bool
    nearly_gorenstein: bool
    goto: bool
    conjecture_ok: bool
    check_failures: tuple[str, ...] = ()
    gaps: tuple[int, ...] = field(default=(), compare=False)

    def csv_row(self) -> list[str]:
        out = []
        for name in FIELDS:
            v = getattr(self, name)
            if name in ("generators", "check_failures"):
                out.append("|".join(map(str, v)))
            elif isinstance(v, bool):
                out.append("1" if v else "0")
            else:
                out.append(str(v))
        return out

    def to_dict(self) -> dict:
        d = {name: getattr(self, name) for name in FIELDS}
        d["generators"] = list(self.generators)
        d["check_failures"] = list(self.check_failures)
        return d


def scan_record(H: NumericalSemigroup, checks: Iterable[str] = DEFAULT_CHECKS) -> ScanRecord:
    rep = degrees.degree_report(H)
    failures = tuple(name for name in _ordered(checks) if not CHECKS[name](H, rep))
    return ScanRecord(
        generators=rep.generators,
        genus=rep.genus,
        frobenius=rep.frobenius,
        multiplicity=rep.multiplicity,
        type=rep.type,
        cdeg=rep.cdeg,
        bideg=rep.bideg,
        tdeg=rep.tdeg,
        rho=rep.rho,
        e1=rep.e1,
        s0=rep.s0,
        gorenstein=rep.gorenstein,
        almost_gorenstein=rep.almost_gorenstein,
        nearly_gorenstein=rep.nearly_gorenstein,
        goto=rep.goto,
        conjecture_ok=rep.conjecture_ok,
        check_failures=failures,
        gaps=H.gaps,
    )


def _ordered(checks: Iterable[str]) -> tuple[str, ...]:
    wanted = set(checks)
    unknown = wanted - set(ALL_CHECKS)
    if unknown:
        raise NsringError(f"unknown checks: {', '.join(sorted(unknown))}")
    return tuple(c for c in ALL_CHECKS if c in wanted)


# -- the scan --------------------------------------------------------------

@dataclass
class ScanConfig:
    max_genus: int = 10
    checks: tuple[str, ...] = DEFAULT_CHECKS
    out: Path | str | None = None
    format: str = "csv"
    strict: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.max_genus < 0:
            raise NsringError("max_genus must be >= 0")
        if self.format not in ("csv", "jsonl"):
            raise NsringError(f"format must be csv or jsonl, got {self.format!r}")
        self.checks = _ordered(self.checks)


def _record_from_gaps(args) -> ScanRecord:
    gaps, checks = args
    return scan_record(NumericalSemigroup.from_gaps(gaps), checks)


def iter_records(config: ScanConfig):
    work = ((H.gaps, config.checks) for H in enumerate_semigroups(config.max_genus))
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            # map() yields in submission order, so the output stays deterministic
            yield from pool.map(_record_from_gaps, work, chunksize=32)
    else:
        yield from map(_record_from_gaps, work)


def _provenance(rec: ScanRecord) -> dict:
    H = NumericalSemigroup.from_gaps(rec.gaps)
    K = degrees.canonical_ideal(H)
    return {
        "generators": list(rec.generators),
        "gaps": list(rec.gaps),
        "cdeg": rec.cdeg,
        "bideg": rec.bideg,
        "K": str(K),
        "K_bidual": str(K.bidual()),
    }


def write_records(records: Iterable[ScanRecord], fh: io.TextIOBase, fmt: str) -> Iterable[ScanRecord]:
    if fmt == "csv":
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(FIELDS)
        for rec in records:
            writer.writerow(rec.csv_row())
            yield rec
    else:
        for rec in records:
            fh.write(json.dumps(rec.to_dict()) + "\n")
            yield rec


def run_scan(config: ScanConfig) -> dict:
    """Write all rows and return {rows_written, violations_by_check,
    conjecture_counterexamples, exit_code}."""
    if config.out is None:
        raise NsringError("an output path is required")
    violations = {name: 0 for name in config.checks}
    counterexamples = []
    rows = 0
    with open(config.out, "w", encoding="utf-8", newline="") as fh:
        for rec in write_records(iter_records(config), fh, config.format):
            rows += 1
            for name in rec.check_failures:
                violations[name] += 1
            if "conjecture" in rec.check_failures:
                prov = _provenance(rec)
                log.warning("conjecture counterexample: %s", prov)
                counterexamples.append(prov)
    identity_failed = any(n for name, n in violations.items() if name != "conjecture")
    code = EXIT_OK
    if config.strict:
        if identity_failed:
            code = EXIT_IDENTITY
        elif counterexamples:
            code = EXIT_CONJECTURE
    return {
        "rows_written": rows,
        "violations_by_check": violations,
        "conjecture_counterexamples": counterexamples,
        "exit_code": code,
    }
