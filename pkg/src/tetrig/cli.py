"""Command-line surface: exact reports, identity verification, and fuzzing.

Interchange documents are JSON with every field element carried as a
string in the element-literal grammar, so exact rationals and explicit
field membership survive the round trip.  Output is byte-stable for
identical input.  Exit codes: 0 success, 1 identity failure, 2 invalid
input or configuration.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .affine import Point3
from .blinalg import DegenerateForm, SymmetricForm
from .field import FieldElement, FieldError, FieldSpec, parse_element
from .tetra import (FAIL, IDENTITY_NAMES, INAPPLICABLE, PASS, SKEW_PAIRINGS,
                    CheckResults, DegenerateParams, InvariantReport,
                    NotTriRectangular, Tetrahedron, Verdict, analyze,
                    is_defined, pairing_name, skew_quadrance,
                    tri_rectangular_checks, verify_identities)
from .trig import quadrume

FUZZ_IDENTITY_NAMES = IDENTITY_NAMES + ("skew-quadrance-projection",)

_FORM_KEYS = ("a1", "a2", "a3", "b1", "b2", "b3")


class InputError(Exception):
    """Invalid input document or configuration; maps to exit code 2."""


@dataclass
class ReportOptions:
    checks: bool = False
    skew: bool = True
    tri_rectangular: bool = False


@dataclass
class InputDocument:
    spec: FieldSpec
    form: SymmetricForm
    tetrahedron: Tetrahedron
    options: ReportOptions


@dataclass
class FuzzConfig:
    prime: int
    samples: int
    seed: int
    reject_degenerate: bool = True
    random_form: bool = False
    workers: int = 1


# -- input documents -------------------------------------------------------

def _field_spec_from_obj(obj, path: str) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InputError(f"{path}: expected an object with a 'kind' entry")
    kind = obj["kind"]
    if kind == "rational":
        return FieldSpec.rational()
    if kind == "prime":
        if not isinstance(obj.get("p"), int):
            raise InputError(f"{path}.p: expected an integer modulus")
        try:
            return FieldSpec.prime(obj["p"])
        except FieldError as exc:
            raise InputError(f"{path}.p: {exc}") from exc
    raise InputError(f"{path}.kind: expected 'rational' or 'prime', got {kind!r}")


def _element_from_obj(obj, spec: FieldSpec, path: str) -> FieldElement:
    if not isinstance(obj, str):
        raise InputError(f"{path}: field elements must be literal strings")
    try:
        return parse_element(obj, spec)
    except FieldError as exc:
        raise InputError(f"{path}: {exc}") from exc


def document_from_obj(obj) -> InputDocument:
    if not isinstance(obj, dict):
        raise InputError("top level: expected a JSON object")
    spec = _field_spec_from_obj(obj.get("field"), "field")

    form_obj = obj.get("form")
    if not isinstance(form_obj, dict):
        raise InputError("form: expected an object with entries a1,a2,a3,b1,b2,b3")
    entries = []
    for key in _FORM_KEYS:
        if key not in form_obj:
            raise InputError(f"form.{key}: missing entry")
        entries.append(_element_from_obj(form_obj[key], spec, f"form.{key}"))
    try:
        form = SymmetricForm(*entries)
    except DegenerateForm as exc:
        raise InputError(f"form: {exc}") from exc

    points_obj = obj.get("points")
    if not isinstance(points_obj, list) or len(points_obj) != 4:
        raise InputError("points: expected a list of 4 coordinate triples")
    points = []
    for i, triple in enumerate(points_obj):
        if not isinstance(triple, list) or len(triple) != 3:
            raise InputError(f"points[{i}]: expected a triple of literals")
        coords = [_element_from_obj(triple[j], spec, f"points[{i}][{j}]") for j in range(3)]
        points.append(Point3(*coords))

    options_obj = obj.get("options", {})
    if not isinstance(options_obj, dict):
        raise InputError("options: expected an object")
    options = ReportOptions()
    for name in ("checks", "skew", "tri_rectangular"):
        if name in options_obj:
            if not isinstance(options_obj[name], bool):
                raise InputError(f"options.{name}: expected a boolean")
            setattr(options, name, options_obj[name])

    tet = Tetrahedron(points[0], points[1], points[2], points[3], form)
    return InputDocument(spec, form, tet, options)


def load_document(text: str) -> InputDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return document_from_obj(obj)


def _field_spec_obj(spec: FieldSpec) -> dict:
    if spec.is_rational:
        return {"kind": "rational"}
    return {"kind": "prime", "p": spec.p}


def document_to_obj(tet: Tetrahedron, options: ReportOptions | None = None) -> dict:
    """Replayable input document for a tetrahedron."""
    form = tet.form
    obj = {
        "field": _field_spec_obj(tet.spec),
        "form": {key: entry.literal() for key, entry in zip(_FORM_KEYS, form.entries())},
        "points": [[c.literal() for c in p.coordinates()] for p in tet.points],
    }
    if options is not None:
        obj["options"] = {"checks": options.checks, "skew": options.skew,
                          "tri_rectangular": options.tri_rectangular}
    return obj


# -- report / verify -------------------------------------------------------

def _entry_obj(entry):
    if is_defined(entry):
        return entry.literal()
    return {"undefined": entry.reason}


def report_to_obj(report: InvariantReport, options: ReportOptions) -> dict:
    out = {
        "field": _field_spec_obj(report.tetrahedron.spec),
        "Q": {f"{i}{j}": v.literal() for (i, j), v in report.quadrances.items()},
        "A": {f"{i}{j}{k}": v.literal() for (i, j, k), v in report.quadreas.items()},
        "V": report.quadrume.literal(),
        "s": {f"{i};{j}{k}": _entry_obj(v) for (i, j, k), v in report.face_spreads.items()},
        "E": {f"{i}{j}": _entry_obj(v) for (i, j), v in report.dihedral_spreads.items()},
        "S": {str(i): _entry_obj(v) for i, v in report.solid_spreads.items()},
        "D": {str(i): _entry_obj(v) for i, v in report.dual_solid_spreads.items()},
        "R": _entry_obj(report.ratio_constant),
    }
    if options.skew:
        out["skew"] = {pairing_name(p): _entry_obj(v)
                       for p, v in report.skew_quadrances.items()}
    return out


def results_to_obj(results: CheckResults) -> dict:
    counts = results.counts()
    return {
        "verdicts": [{"identity": v.identity, "instance": v.instance, "status": v.status}
                     for v in results.verdicts],
        "summary": {PASS: counts[PASS], FAIL: counts[FAIL],
                    INAPPLICABLE: counts[INAPPLICABLE]},
    }


def run_report(doc: InputDocument) -> dict:
    report = analyze(doc.tetrahedron)
    out = report_to_obj(report, doc.options)
    if doc.options.checks:
        out["identities"] = results_to_obj(verify_identities(report))
    if doc.options.tri_rectangular:
        try:
            out["tri_rectangular"] = results_to_obj(tri_rectangular_checks(doc.tetrahedron))
        except (NotTriRectangular, DegenerateParams) as exc:
            raise InputError(f"tri_rectangular: {exc}") from exc
    return out


def corrupt_entry(report: InvariantReport, key: str) -> None:
    """Debug aid: add 1 to one defined report entry, e.g. 'E.01' or 'V'."""
    one = report.tetrahedron.spec.one()
    if key == "V":
        report.quadrume = report.quadrume + one
        return
    if key == "R":
        if not is_defined(report.ratio_constant):
            raise InputError(f"--corrupt {key}: entry is undefined")
        report.ratio_constant = report.ratio_constant + one
        return
    section, _, name = key.partition(".")
    tables = {
        "Q": (report.quadrances, lambda t: (int(t[0]), int(t[1]))),
        "A": (report.quadreas, lambda t: (int(t[0]), int(t[1]), int(t[2]))),
        "s": (report.face_spreads, lambda t: (int(t[0]), int(t[2]), int(t[3]))),
        "E": (report.dihedral_spreads, lambda t: (int(t[0]), int(t[1]))),
        "S": (report.solid_spreads, lambda t: int(t)),
        "D": (report.dual_solid_spreads, lambda t: int(t)),
        "skew": (report.skew_quadrances,
                 lambda t: ((int(t[0]), int(t[1])), (int(t[3]), int(t[4])))),
    }
    if section not in tables or not name:
        raise InputError(f"--corrupt {key}: unknown entry")
    table, parse_key = tables[section]
    try:
        entry_key = parse_key(name)
        entry = table[entry_key]
    except (ValueError, IndexError, KeyError) as exc:
        raise InputError(f"--corrupt {key}: unknown entry") from exc
    if not is_defined(entry):
        raise InputError(f"--corrupt {key}: entry is undefined")
    table[entry_key] = entry + one


def run_verify(doc: InputDocument, corrupt: str | None = None) -> tuple[dict, int]:
    report = analyze(doc.tetrahedron)
    if corrupt is not None:
        corrupt_entry(report, corrupt)
    results = verify_identities(report)
    verdicts = list(results.verdicts)
    if doc.options.tri_rectangular:
        try:
            verdicts.extend(tri_rectangular_checks(doc.tetrahedron).verdicts)
        except (NotTriRectangular, DegenerateParams) as exc:
            raise InputError(f"tri_rectangular: {exc}") from exc
    combined = CheckResults(verdicts)
    return results_to_obj(combined), 1 if combined.failures else 0


# -- fuzzing ----------------------------------------------------------------

def _sample_tetrahedron(cfg: FuzzConfig, rng: random.Random, spec: FieldSpec):
    """One reproducible sample; returns (tetrahedron, rejected_forms, rejected_degenerate)."""
    rejected_forms = 0
    if cfg.random_form:
        while True:
            entries = [spec.element(rng.randrange(cfg.prime)) for _ in range(6)]
            try:
                form = SymmetricForm(*entries)
                break
            except DegenerateForm:
                rejected_forms += 1
    else:
        form = SymmetricForm.identity(spec)
    rejected_degenerate = 0
    while True:
        points = [Point3.of(spec, rng.randrange(cfg.prime), rng.randrange(cfg.prime),
                            rng.randrange(cfg.prime)) for _ in range(4)]
        tet = Tetrahedron(points[0], points[1], points[2], points[3], form)
        if not cfg.reject_degenerate or not quadrume(tet).is_zero:
            return tet, rejected_forms, rejected_degenerate
        rejected_degenerate += 1


def _run_sample(cfg: FuzzConfig, index: int):
    # per-sample stream derived from (seed, index): the summary cannot
    # depend on how samples are scheduled across workers
    rng = random.Random((cfg.seed << 32) + index)
    spec = FieldSpec.prime(cfg.prime)
    tet, rejected_forms, rejected_degenerate = _sample_tetrahedron(cfg, rng, spec)
    report = analyze(tet)
    verdicts = list(verify_identities(report).verdicts)
    for pairing in SKEW_PAIRINGS:
        entry = report.skew_quadrances[pairing]
        if not is_defined(entry):
            verdicts.append(Verdict("skew-quadrance-projection", pairing_name(pairing),
                                    INAPPLICABLE))
            continue
        params = (spec.element(rng.randrange(cfg.prime)),
                  spec.element(rng.randrange(cfg.prime)))
        moved = skew_quadrance(tet, pairing, params=params)
        verdicts.append(Verdict("skew-quadrance-projection", pairing_name(pairing),
                                PASS if moved == entry else FAIL))
    tally = {name: [0, 0, 0] for name in FUZZ_IDENTITY_NAMES}  # checked/passed/inapplicable
    failed = []
    for v in verdicts:
        row = tally[v.identity]
        row[0] += 1
        if v.status == PASS:
            row[1] += 1
        elif v.status == INAPPLICABLE:
            row[2] += 1
        else:
            failed.append(v)
    failure = None
    if failed:
        failure = {
            "sample": index,
            "input": document_to_obj(tet),
            "failed": [{"identity": v.identity, "instance": v.instance} for v in failed],
        }
    return tally, failure, rejected_forms, rejected_degenerate


def _run_range(cfg: FuzzConfig, lo: int, hi: int):
    tally = {name: [0, 0, 0] for name in FUZZ_IDENTITY_NAMES}
    failures = []
    rejected_forms = 0
    rejected_degenerate = 0
    for index in range(lo, hi):
        sample_tally, failure, forms, degenerate = _run_sample(cfg, index)
        for name, row in sample_tally.items():
            agg = tally[name]
            agg[0] += row[0]
            agg[1] += row[1]
            agg[2] += row[2]
        if failure is not None:
            failures.append(failure)
        rejected_forms += forms
        rejected_degenerate += degenerate
    return tally, failures, rejected_forms, rejected_degenerate


def run_fuzz(cfg: FuzzConfig) -> tuple[dict, int]:
    try:
        FieldSpec.prime(cfg.prime)
    except FieldError as exc:
        raise InputError(f"--prime: {exc}") from exc
    if cfg.samples < 0:
        raise InputError("--samples: expected a non-negative count")
    if cfg.workers < 1:
        raise InputError("--workers: expected a positive count")

    workers = min(cfg.workers, cfg.samples) if cfg.samples else 1
    if workers <= 1:
        parts = [_run_range(cfg, 0, cfg.samples)]
    else:
        step = -(-cfg.samples // workers)
        ranges = [(lo, min(lo + step, cfg.samples)) for lo in range(0, cfg.samples, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_range, [cfg] * len(ranges),
                                  [r[0] for r in ranges], [r[1] for r in ranges]))

    tally = {name: [0, 0, 0] for name in FUZZ_IDENTITY_NAMES}
    failures = []
    rejected_forms = 0
    rejected_degenerate = 0
    for part_tally, part_failures, forms, degenerate in parts:
        for name, row in part_tally.items():
            agg = tally[name]
            agg[0] += row[0]
            agg[1] += row[1]
            agg[2] += row[2]
        failures.extend(part_failures)
        rejected_forms += forms
        rejected_degenerate += degenerate
    failures.sort(key=lambda f: f["sample"])

    summary = {
        "config": {"prime": cfg.prime, "samples": cfg.samples, "seed": cfg.seed,
                   "reject_degenerate": cfg.reject_degenerate,
                   "random_form": cfg.random_form},
        "rejected": {"degenerate_tetrahedra": rejected_degenerate,
                     "singular_forms": rejected_forms},
        "identities": {name: {"checked": row[0], "passed": row[1],
                              "inapplicable": row[2]}
                       for name, row in tally.items()},
        "failures": failures,
    }
    return summary, (1 if failures else 0)


# -- entry point -------------------------------------------------------------

def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(path: str | None, obj: dict) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetrig",
        description="Exact tetrahedron trigonometry over Q or an odd prime field.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", help="compute the full invariant report")
    report.add_argument("--input", help="input document path (default: stdin)")
    report.add_argument("--output", help="output path (default: stdout)")

    verify = sub.add_parser("verify", help="check every identity on one tetrahedron")
    verify.add_argument("--input", help="input document path (default: stdin)")
    verify.add_argument("--output", help="output path (default: stdout)")
    verify.add_argument("--corrupt", metavar="ENTRY",
                        help="debug: add 1 to one report entry (e.g. E.01) before checking")

    fuzz = sub.add_parser("fuzz", help="randomized identity check over a prime field")
    fuzz.add_argument("--prime", type=int, required=True, help="odd prime modulus")
    fuzz.add_argument("--samples", type=int, required=True, help="number of tetrahedra")
    fuzz.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    fuzz.add_argument("--allow-degenerate", action="store_true",
                      help="keep quadrume-zero samples instead of resampling")
    fuzz.add_argument("--random-form", action="store_true",
                      help="sample a non-degenerate form per sample instead of the identity")
    fuzz.add_argument("--workers", type=int, default=1,
                      help="worker processes; the summary does not depend on this")
    fuzz.add_argument("--output", help="output path (default: stdout)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "report":
            doc = load_document(_read_input(args.input))
            _write_output(args.output, run_report(doc))
            return 0
        if args.command == "verify":
            doc = load_document(_read_input(args.input))
            out, code = run_verify(doc, corrupt=args.corrupt)
            _write_output(args.output, out)
            return code
        cfg = FuzzConfig(prime=args.prime, samples=args.samples, seed=args.seed,
                         reject_degenerate=not args.allow_degenerate,
                         random_form=args.random_form, workers=args.workers)
        summary, code = run_fuzz(cfg)
        _write_output(args.output, summary)
        return code
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
