"""Command-line front end: eval, verify, sweep, selftest.

Output is JSON-lines with a schema tag on every record.  Exit codes:
0 = success / all passed, 1 = at least one identity failure, 2 = usage,
parse or validation error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .errors import LerchError
from .identities import (
    IDENTITY_IDS,
    RecurrenceParams,
    check_catalan_sum,
    check_product_identity,
    check_recurrence,
    check_tan_sum,
    check_theorem,
)
from .lerch import LerchParams, lerch_phi
from .numtheory import TheoremParams

SCHEMA = "lerchsum/1"

# default tolerances: elementary identities vs transcendent-based ones
DEFAULT_EVAL_TOL = 1e-10
DEFAULT_TOLS = {
    "theorem": 1e-8,
    "tan_sum": 1e-10,
    "product_ex2": 1e-10,
    "product_ex3": 1e-10,
    "product_ex4": 1e-10,
    "catalan": 1e-8,
    "recurrence": 1e-8,
}

# canonical grid/flag order per identity, used for sweep point ordering
IDENTITY_PARAMS = {
    "theorem": ("n", "q", "k", "a", "m"),
    "tan_sum": ("n", "q", "m"),
    "product_ex2": ("n", "q", "x"),
    "product_ex3": ("n", "q", "x"),
    "product_ex4": ("n", "q", "m", "r"),
    "catalan": ("n", "q"),
    "recurrence": ("q", "zz", "s", "aa"),
}
_INT_PARAMS = {"n", "q"}

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_RE_ONLY = re.compile(rf"^([+-]?{_NUM})$")
_IM_ONLY = re.compile(rf"^([+-]?{_NUM})i$")
_RE_IM = re.compile(rf"^([+-]?{_NUM})([+-]{_NUM})i$")


def parse_complex(text: str) -> complex:
    """Parse the RE / IMi / RE+-IMi literal grammar (no spaces)."""
    text = text.strip()
    m = _RE_ONLY.match(text)
    if m:
        return complex(float(m.group(1)), 0.0)
    m = _IM_ONLY.match(text)
    if m:
        return complex(0.0, float(m.group(1)))
    m = _RE_IM.match(text)
    if m:
        return complex(float(m.group(1)), float(m.group(2)))
    raise ValueError(f"cannot parse complex literal {text!r}")


def format_complex(c: complex) -> str:
    """Canonical inverse of parse_complex."""
    c = complex(c)
    if c.imag == 0.0:
        return repr(c.real)
    if c.real == 0.0:
        return f"{c.imag!r}i"
    sign = "+" if c.imag >= 0 else "-"
    return f"{c.real!r}{sign}{abs(c.imag)!r}i"


def _emit(record: dict, stream=None) -> None:
    print(json.dumps(record, sort_keys=True), file=stream or sys.stdout)


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _build_report(identity: str, values: dict, tol: float):
    if identity == "theorem":
        return check_theorem(
            TheoremParams(values["k"], values["a"], values["m"], values["n"], values["q"]),
            tol,
        )
    if identity == "tan_sum":
        return check_tan_sum(values["m"], values["n"], values["q"], tol)
    if identity in ("product_ex2", "product_ex3"):
        return check_product_identity(identity, {"x": values["x"]}, values["n"], values["q"], tol)
    if identity == "product_ex4":
        return check_product_identity(
            identity, {"m": values["m"], "r": values["r"]}, values["n"], values["q"], tol
        )
    if identity == "catalan":
        return check_catalan_sum(values["n"], values["q"], tol)
    if identity == "recurrence":
        return check_recurrence(
            RecurrenceParams(values["zz"], values["s"], values["aa"], values["q"]), tol
        )
    raise ValueError(f"unknown identity {identity!r}")


def cmd_eval(args) -> int:
    try:
        z = parse_complex(args.z)
        s = parse_complex(args.s)
        v = parse_complex(args.v)
    except ValueError as exc:
        return _usage_error(str(exc))
    try:
        result = lerch_phi(LerchParams(z, s, v), args.tol)
    except LerchError as exc:
        return _usage_error(str(exc))
    _emit({
        "schema": SCHEMA,
        "z": format_complex(z), "s": format_complex(s), "v": format_complex(v),
        "value": [result.value.real, result.value.imag],
        "abs_error_estimate": result.abs_error_estimate,
        "method": result.method,
        "work": result.work,
    })
    return 0


def cmd_verify(args) -> int:
    identity = args.identity
    tol = args.tol if args.tol is not None else DEFAULT_TOLS[identity]
    values = {}
    for name in IDENTITY_PARAMS[identity]:
        raw = getattr(args, name)
        if raw is None:
            return _usage_error(f"--{name} is required for identity {identity}")
        try:
            values[name] = int(raw) if name in _INT_PARAMS else parse_complex(raw)
        except ValueError as exc:
            return _usage_error(str(exc))
    report = _build_report(identity, values, tol)
    record = report.to_dict()
    record["schema"] = SCHEMA
    _emit(record)
    if report.notes.startswith("validation"):
        return 2
    return 0 if report.passed else 1


def _sweep_point(task):
    identity, values, tol = task
    report = _build_report(identity, values, tol)
    record = report.to_dict()
    record["schema"] = SCHEMA
    record["suspect"] = values.get("n") == 2 or "known-suspect" in report.notes
    return record


def _load_sweep_config(path: str):
    with open(path, "rb") as fh:
        cfg = tomllib.load(fh)
    identity = cfg.get("identity")
    if identity not in IDENTITY_IDS:
        raise ValueError(f"config: identity must be one of {IDENTITY_IDS}, got {identity!r}")
    tol = float(cfg.get("tol", DEFAULT_TOLS[identity]))
    if not 1e-14 <= tol <= 1e-2:
        raise ValueError(f"config: tol = {tol} outside [1e-14, 1e-2]")
    output = cfg.get("output")
    if not output:
        raise ValueError("config: 'output' path is required")
    parallel = bool(cfg.get("parallel", False))
    grid_cfg = cfg.get("grid", {})
    grids = []
    for name in IDENTITY_PARAMS[identity]:
        if name not in grid_cfg:
            raise ValueError(f"config: [grid] is missing parameter {name!r}")
        raw = grid_cfg[name]
        if not isinstance(raw, list) or not raw:
            raise ValueError(f"config: grid for {name!r} must be a non-empty list")
        if name in _INT_PARAMS:
            grids.append([int(x) for x in raw])
        else:
            grids.append([parse_complex(x) if isinstance(x, str) else complex(x) for x in raw])
    return identity, tol, output, parallel, grids


def cmd_sweep(args) -> int:
    try:
        identity, tol, output, parallel, grids = _load_sweep_config(args.config)
    except (OSError, ValueError, tomllib.TOMLDecodeError) as exc:
        return _usage_error(str(exc))

    names = IDENTITY_PARAMS[identity]
    tasks = [
        (identity, dict(zip(names, combo)), tol)
        for combo in itertools.product(*grids)
    ]
    if parallel:
        import multiprocessing

        with multiprocessing.Pool() as pool:
            records = pool.map(_sweep_point, tasks)  # output order = grid order
    else:
        records = [_sweep_point(t) for t in tasks]

    counts = {"total": len(records), "passed": 0, "failed": 0, "errored": 0, "suspect": 0}
    for i, record in enumerate(records):
        record["index"] = i
        if record["suspect"]:
            counts["suspect"] += 1  # recorded, excluded from the pass requirement
        elif record["notes"].startswith(("validation", "evaluation error", "pole proximity")):
            counts["errored"] += 1
        elif record["pass"]:
            counts["passed"] += 1
        else:
            counts["failed"] += 1
    summary = {"schema": SCHEMA, "summary": True, **counts}

    with open(output, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
        fh.write(json.dumps(summary, sort_keys=True) + "\n")
    _emit(summary)
    return 0 if counts["failed"] == 0 and counts["errored"] == 0 else 1


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    outcome = run_selftest()
    sys.stdout.write(outcome.text)
    print(f"elapsed: {outcome.elapsed:.1f} s", file=sys.stderr)
    return 0 if outcome.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lerchsum",
        description="Evaluate the Lerch transcendent and verify its prime-indexed finite-sum identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate Phi(z, s, v)")
    p_eval.add_argument("--z", required=True)
    p_eval.add_argument("--s", required=True)
    p_eval.add_argument("--v", required=True)
    p_eval.add_argument("--tol", type=float, default=DEFAULT_EVAL_TOL)
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="check one identity at one parameter point")
    p_verify.add_argument("--identity", required=True, choices=IDENTITY_IDS)
    p_verify.add_argument("--tol", type=float, default=None)
    for flag in ("--n", "--q", "--k", "--a", "--m", "--x", "--r", "--zz", "--s", "--aa"):
        p_verify.add_argument(flag)
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="run an identity over a parameter grid from a TOML config")
    p_sweep.add_argument("config")
    p_sweep.set_defaults(func=cmd_sweep)

    p_self = sub.add_parser("selftest", help="run the full acceptance suite")
    p_self.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
