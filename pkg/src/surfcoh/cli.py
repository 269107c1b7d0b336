"""Command-line front end: run job files, print resolutions, verify.

Exit codes: 0 on success, 1 on parse/validation errors, 2 when an
internal identity check fails.  Reports are emitted as text on stdout
and, with ``--json PATH``, as a canonical JSON document (sorted keys,
schema_version 1); the same job and seed always produce byte-identical
JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .coefficients import (
    CoefficientModule,
    DeterminantNotUnit,
    RelatorNotRespected,
    builtin_module,
    builtin_modules,
    make_module,
)
from .cohomology import (
    InternalCheckError,
    classify_torus_bundles,
    cohomology_of,
    cup_table,
    h1_generator_cochains,
)
from .diagonal import format_diagonal
from .intlinalg import AbelianGroup
from .presentation import (
    Generator,
    NONORIENTABLE,
    ORIENTABLE,
    SurfacePresentation,
    WordError,
)
from .resolution import build_resolution
from .verify import (
    DEFAULT_NONORIENTABLE_RANGE,
    DEFAULT_ORIENTABLE_RANGE,
    verify_suite,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USER_ERROR = 1
EXIT_CHECK_FAILED = 2


class JobError(ValueError):
    """A malformed or invalid job document."""


# -- job parsing -------------------------------------------------------


def _parse_surface(doc: dict) -> SurfacePresentation:
    surface = doc.get("surface")
    if not isinstance(surface, dict):
        raise JobError("job needs a [surface] section with kind and genus")
    kind = surface.get("kind")
    genus = surface.get("genus")
    if kind not in (ORIENTABLE, NONORIENTABLE):
        raise JobError(f"surface.kind must be {ORIENTABLE!r} or {NONORIENTABLE!r}")
    if not isinstance(genus, int):
        raise JobError("surface.genus must be an integer")
    try:
        return SurfacePresentation(kind, genus)
    except ValueError as exc:
        raise JobError(str(exc)) from exc


def _parse_generator(name: str, pres: SurfacePresentation) -> Generator:
    if len(name) < 2 or name[0] not in "ab" or not name[1:].isdigit():
        raise JobError(f"bad generator name {name!r}")
    gen = Generator(name[0], int(name[1:]))
    if not pres.has_generator(gen):
        raise JobError(f"generator {name!r} is not part of {pres}")
    return gen


def _parse_modules(doc: dict, pres: SurfacePresentation) -> dict[str, CoefficientModule]:
    modules: dict[str, CoefficientModule] = {
        m.name: m for m in builtin_modules(pres)
    }
    for name, body in (doc.get("modules") or {}).items():
        if not isinstance(body, dict) or "rank" not in body:
            raise JobError(f"module {name!r} needs a rank and an action table")
        rank = body["rank"]
        if not isinstance(rank, int) or rank < 1:
            raise JobError(f"module {name!r}: rank must be a positive integer")
        action: dict[Generator, Any] = {}
        for gen_name, rows in (body.get("action") or {}).items():
            gen = _parse_generator(gen_name, pres)
            if not (
                isinstance(rows, list)
                and all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows)
            ):
                raise JobError(f"module {name!r}: action of {gen_name} must be integer rows")
            action[gen] = rows
        try:
            modules[name] = make_module(rank, action, pres, name=name)
        except (DeterminantNotUnit, RelatorNotRespected, ValueError) as exc:
            raise JobError(f"module {name!r}: {exc}") from exc
    return modules


def _module_ref(name: Any, modules: dict[str, CoefficientModule]) -> CoefficientModule:
    if not isinstance(name, str) or name not in modules:
        known = ", ".join(sorted(modules))
        raise JobError(f"unknown module {name!r} (known: {known})")
    return modules[name]


# -- report pieces -----------------------------------------------------


def group_dict(g: AbelianGroup) -> dict:
    return {
        "free_rank": g.free_rank,
        "torsion": list(g.torsion),
        "generators": [list(v) for v in g.generators],
        "pretty": g.describe(),
    }


def run_cohomology_task(module: CoefficientModule) -> dict:
    rep = cohomology_of(module)
    return {
        "task": "cohomology",
        "module": module.display_name(),
        "H0": group_dict(rep.H0),
        "H1": group_dict(rep.H1),
        "H2": group_dict(rep.H2),
        "H1_generator_labels": [name for name, _ in h1_generator_cochains(module)],
    }


def run_cup_table_task(left: CoefficientModule, right: CoefficientModule) -> dict:
    table = cup_table(left, right)
    return {
        "task": "cup_table",
        "left": left.display_name(),
        "right": right.display_name(),
        "target_H2": group_dict(table.target),
        "left_generators": list(table.left_generators),
        "right_generators": list(table.right_generators),
        "entries": [
            {"left": ll, "right": rl, "coords": list(coords)}
            for ll, rl, coords in table.entries
        ],
    }


def run_classify_task(pres: SurfacePresentation, module: CoefficientModule) -> dict:
    result = classify_torus_bundles(pres, module)
    return {
        "task": "classify_bundles",
        "module": module.display_name(),
        "via_cohomology": group_dict(result.via_cohomology),
        "via_coinvariants": group_dict(result.via_coinvariants),
        "agree": True,
    }


def run_resolution_task(pres: SurfacePresentation) -> dict:
    res = build_resolution(pres)
    d1_lines = [f"d1({label}) = ({res.d1_coefficient(label)})*x" for label in res.basis(1)]
    d2_lines = [
        f"d2(w) coefficient of {label}: {res.d2_coefficient(label)}"
        for label in res.basis(1)
    ]
    return {
        "task": "resolution",
        "surface": str(pres),
        "d1": d1_lines,
        "d2": d2_lines,
        "diagonal": format_diagonal(pres),
    }


def run_verify_task(pres: SurfacePresentation, seed: int) -> dict:
    orientable = [pres.genus] if pres.orientable else []
    nonorientable = [] if pres.orientable else [pres.genus]
    ok, checks = verify_suite(
        orientable=orientable, nonorientable=nonorientable, seed=seed, quick=True
    )
    return {"task": "verify", "ok": ok, "checks": checks}


def execute_job(doc: dict, seed: int) -> dict:
    pres = _parse_surface(doc)
    modules = _parse_modules(doc, pres)
    tasks = doc.get("tasks")
    if not isinstance(tasks, list) or not tasks:
        raise JobError("job needs a nonempty [[tasks]] list")
    results = []
    for idx, task in enumerate(tasks):
        if not isinstance(task, dict) or "type" not in task:
            raise JobError(f"task #{idx}: needs a type")
        kind = task["type"]
        if kind == "cohomology":
            results.append(run_cohomology_task(_module_ref(task.get("module"), modules)))
        elif kind == "cup_table":
            results.append(
                run_cup_table_task(
                    _module_ref(task.get("left"), modules),
                    _module_ref(task.get("right"), modules),
                )
            )
        elif kind == "classify_bundles":
            results.append(run_classify_task(pres, _module_ref(task.get("module"), modules)))
        elif kind == "resolution":
            results.append(run_resolution_task(pres))
        elif kind == "verify":
            results.append(run_verify_task(pres, seed))
        else:
            raise JobError(f"task #{idx}: unknown type {kind!r}")
    ok = all(r.get("ok", True) for r in results)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "run",
        "surface": {"kind": pres.kind, "genus": pres.genus},
        "seed": seed,
        "ok": ok,
        "tasks": results,
    }


# -- rendering ---------------------------------------------------------


def render_text(report: dict) -> str:
    lines: list[str] = [f"surfcoh report (schema {report['schema_version']})"]
    if "surface" in report:
        lines.append(f"surface: {report['surface']['kind']} genus {report['surface']['genus']}")
    if "seed" in report:
        lines.append(f"seed: {report['seed']}")
    for task in report.get("tasks", []):
        lines.append("")
        lines.extend(_render_task(task))
    for check in report.get("checks", []):
        lines.extend(_render_check(check))
    lines.append("")
    lines.append(f"overall: {'ok' if report.get('ok', True) else 'FAILED'}")
    return "\n".join(lines) + "\n"


def _render_group(name: str, g: dict) -> str:
    gens = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in g["generators"])
    return f"  {name} = {g['pretty']}" + (f"   generators: {gens}" if gens else "")


def _render_task(task: dict) -> list[str]:
    kind = task["task"]
    if kind == "cohomology":
        lines = [f"task cohomology: module {task['module']}"]
        for h in ("H0", "H1", "H2"):
            lines.append(_render_group(h, task[h]))
        lines.append(f"  H1 generator labels: {', '.join(task['H1_generator_labels'])}")
        return lines
    if kind == "cup_table":
        lines = [
            f"task cup_table: {task['left']} x {task['right']} -> H2 = {task['target_H2']['pretty']}"
        ]
        for entry in task["entries"]:
            coords = ", ".join(str(x) for x in entry["coords"])
            lines.append(f"  {entry['left']} u {entry['right']} = ({coords})")
        return lines
    if kind == "classify_bundles":
        return [
            f"task classify_bundles: module {task['module']}",
            _render_group("H2 (cohomology route)", task["via_cohomology"]),
            _render_group("H2 (coinvariant route)", task["via_coinvariants"]),
            f"  agreement: {task['agree']}",
        ]
    if kind == "resolution":
        lines = [f"task resolution: {task['surface']}"]
        lines += [f"  {s}" for s in task["d1"]]
        lines += [f"  {s}" for s in task["d2"]]
        lines += [f"  {s}" for s in task["diagonal"]]
        return lines
    if kind == "verify":
        lines = [f"task verify: {'ok' if task['ok'] else 'FAILED'}"]
        for check in task["checks"]:
            lines.extend(_render_check(check))
        return lines
    return [f"task {kind}: {task}"]


def _render_check(check: dict) -> list[str]:
    status = "PASS" if check["passed"] else "FAIL"
    lines = [f"  [{status}] {check['name']}"]
    if check.get("details"):
        lines.append(f"         {check['details']}")
    for note in check.get("notes", []):
        lines.append(f"         note: {note}")
    return lines


def emit(report: dict, json_path: str | None) -> None:
    sys.stdout.write(render_text(report))
    if json_path:
        payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
        with open(json_path, "w") as fh:
            fh.write(payload)


# -- entry points ------------------------------------------------------


def _cmd_run(args: argparse.Namespace) -> int:
    try:
        with open(args.job, "rb") as fh:
            doc = tomllib.load(fh)
    except OSError as exc:
        print(f"error: cannot read job file: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    except tomllib.TOMLDecodeError as exc:
        print(f"error: job file parse error: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    try:
        report = execute_job(doc, seed=args.seed)
    except (JobError, WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    emit(report, args.json)
    return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


def _cmd_verify(args: argparse.Namespace) -> int:
    orientable = range(1, (args.genus_max or 5) + 1)
    if args.genus_max is None:
        nonorientable = DEFAULT_NONORIENTABLE_RANGE
    else:
        nonorientable = range(2, max(args.genus_max, 2) + 1)
    ok, checks = verify_suite(
        orientable=orientable,
        nonorientable=nonorientable,
        seed=args.seed,
        corrupt_delta11=args.corrupt_delta11,
    )
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "seed": args.seed,
        "orientable_range": list(orientable),
        "nonorientable_range": list(nonorientable),
        "ok": ok,
        "checks": checks,
    }
    emit(report, args.json)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_resolution(args: argparse.Namespace) -> int:
    try:
        pres = SurfacePresentation(args.kind, args.genus)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "resolution",
        "surface": {"kind": pres.kind, "genus": pres.genus},
        "ok": True,
        "tasks": [run_resolution_task(pres)],
    }
    emit(report, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfcoh",
        description="Exact cohomology of surface groups with local coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a TOML job file")
    p_run.add_argument("job", help="path to the job file")
    p_run.add_argument("--json", metavar="PATH", help="also write a JSON report")
    p_run.add_argument("--seed", type=int, default=0, help="seed for randomized tasks")
    p_run.set_defaults(func=_cmd_run)

    p_verify = sub.add_parser("verify", help="run the full identity suite")
    p_verify.add_argument("--json", metavar="PATH", help="also write a JSON report")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument(
        "--genus-max", type=int, default=None, help="cap both genus ranges"
    )
    p_verify.add_argument(
        "--corrupt-delta11", action="store_true", help=argparse.SUPPRESS
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_res = sub.add_parser("resolution", help="print the resolution and diagonal")
    p_res.add_argument("--kind", choices=(ORIENTABLE, NONORIENTABLE), required=True)
    p_res.add_argument("--genus", type=int, required=True)
    p_res.add_argument("--json", metavar="PATH")
    p_res.set_defaults(func=_cmd_resolution)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
