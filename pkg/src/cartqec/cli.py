"""Command-line front end.

Subcommands: ``params``, ``table``, ``grid``, ``tau``, ``verify``.  Exit codes
are 0 on success, 1 for usage errors, 2 when a construction's hypothesis
fails and 3 when a verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .checks import run_checks
from .errors import BoundUndefined, CartQECError, HypothesisError
from .evalcode import matrix_cap
from .footprint import ProductSpec, sigma_grid, tau, tau_lower_bound
from .quantum import (
    classical_params,
    css_params,
    distance_pinned,
    gv_classify,
    singleton_slack,
    steane_params,
)
from .tables import render_csv, render_json, render_text, table_row

EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    spec: ProductSpec
    deltas: list[int]
    fmt: str = "text"
    level: str = "none"


def parse_range(text: str) -> list[int]:
    """``"7"`` -> ``[7]``; ``"3..8"`` -> ``[3, ..., 8]`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or A..B") from None


def _ambient(p: int, q: int | None, ambient_r: int | None) -> int:
    if q is None:
        return ambient_r or 0
    r, x = 0, 1
    while x < q:
        x *= p
        r += 1
    if x != q:
        raise UsageError(f"q={q} is not a power of p={p}")
    return r


def config_from_args(args, need_delta: bool = True) -> RunConfig:
    try:
        r_vec = tuple(int(x) for x in args.r.split(","))
    except ValueError:
        raise UsageError(f"bad --r {args.r!r}; use comma-separated integers") from None
    try:
        spec = ProductSpec(args.p, r_vec, _ambient(args.p, args.q, args.ambient_r))
    except CartQECError as exc:
        raise UsageError(str(exc)) from None
    deltas = parse_range(args.delta) if getattr(args, "delta", None) else []
    if need_delta and not deltas:
        raise UsageError("--delta is required")
    if deltas and not (2 <= deltas[0] and deltas[-1] <= spec.n + 1):
        raise UsageError(f"delta range must lie within [2, {spec.n + 1}]")
    level = getattr(args, "level", "none")
    if level == "matrix" and spec.n > matrix_cap():
        raise UsageError(f"--level matrix needs n <= {matrix_cap()}, got n={spec.n}")
    return RunConfig(spec, deltas, getattr(args, "format", "text"), level)


def _marker(params) -> str:
    try:
        return gv_classify(params).marker
    except CartQECError:
        return ""


def _singleton(params) -> str:
    slack = singleton_slack(params)
    return "SINGLETON: MDS" if slack == 0 else f"SINGLETON: slack={slack}"


def _steane_text(params) -> str:
    d = str(params.d) if distance_pinned(params) else f">={params.d}"
    return f"[[{params.n},{params.k},{d}]]"


def cmd_params(cfg: RunConfig) -> tuple[str, int]:
    spec = cfg.spec
    chunks = []
    records = []
    for delta in cfg.deltas:
        c = classical_params(spec, delta)
        css = css_params(spec, delta)
        rec = {
            "delta": delta,
            "q": spec.q,
            "classical": {"n": c.n, "k": c.k, "d": c.d},
            "css": {"n": css.n, "k": css.k, "d": css.d, "gv": _marker(css), "singleton_slack": singleton_slack(css)},
        }
        lines = [
            f"p={spec.p} r={','.join(map(str, spec.r_vec))} q={spec.q} delta={delta}",
            f"classical  [{c.n},{c.k},{c.d}]_{spec.q}",
            f"css        {css} {_marker(css)}".rstrip() + f"  {_singleton(css)}",
        ]
        try:
            st = steane_params(spec, delta)
        except HypothesisError as exc:
            lines.append(f"steane     n/a ({type(exc).__name__}: {exc})")
            rec["steane"] = None
        else:
            sp = st.params
            guarantee = "yes" if st.prop4_applies else "no"
            lines.append(
                f"steane     {_steane_text(sp)} {_marker(sp)}".rstrip()
                + f"  {_singleton(sp)}  increase={st.increase} guaranteed={guarantee}"
            )
            rec["steane"] = {
                "n": sp.n,
                "k": sp.k,
                "d": sp.d,
                "d_is_lower_bound": True,
                "gv": _marker(sp),
                "singleton_slack": singleton_slack(sp),
                "increase": st.increase,
                "prop4_applies": st.prop4_applies,
            }
        chunks.append("\n".join(lines) + "\n")
        records.append(rec)
    if cfg.fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in records), 0
    if cfg.fmt == "csv":
        return cmd_table(cfg)
    return "\n".join(chunks), 0


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    rows, notes = [], []
    for delta in cfg.deltas:
        try:
            rows.append(table_row(cfg.spec, delta))
        except HypothesisError as exc:
            note = f"delta={delta} skipped: {type(exc).__name__}: {exc}"
            notes.append(note)
            rows.append(note)
    if cfg.fmt == "text":
        return render_text(rows), 0
    for note in notes:
        print(f"warning: {note}", file=sys.stderr)
    data = [r for r in rows if not isinstance(r, str)]
    return (render_csv(data) if cfg.fmt == "csv" else render_json(data)), 0


def render_grid(grid) -> str:
    """Rows indexed by the second exponent, columns by the first; layers by the third."""
    width = len(str(int(grid.max())))

    def block(g2):
        return "\n".join(" ".join(str(int(v)).rjust(width) for v in row) for row in g2)

    if grid.ndim == 1:
        return block(grid[None, :]) + "\n"
    if grid.ndim == 2:
        return block(grid.T) + "\n"
    layers = []
    for a3 in range(grid.shape[2]):
        layers.append(f"# a3={a3}\n" + block(grid[:, :, a3].T))
    return "\n\n".join(layers) + "\n"


def cmd_grid(cfg: RunConfig) -> tuple[str, int]:
    return render_grid(sigma_grid(cfg.spec)), 0


def cmd_tau(cfg: RunConfig, s_values: list[int]) -> tuple[str, int]:
    spec = cfg.spec
    if not s_values:
        s_values = [s for s in range(1, spec.n + 1) if tau(spec, s)]
    records = []
    for s in s_values:
        try:
            b = tau_lower_bound(spec, s)
            K, bound, exact = b.K, b.bound, b.exact
        except BoundUndefined:
            K = bound = exact = None
        records.append({"s": s, "tau": tau(spec, s), "K": K, "bound": bound, "exact": exact})
    if cfg.fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in records), 0
    if cfg.fmt == "csv":
        lines = ["s,tau,K,bound,exact"]
        for r in records:
            vals = ["" if v is None else str(v).lower() for v in r.values()]
            lines.append(",".join(vals))
        return "\n".join(lines) + "\n", 0
    lines = [f"{'s':>6} {'tau':>6} {'K':>3} {'bound':>6}"]
    for r in records:
        bound = "-" if r["bound"] is None else str(r["bound"]) + ("*" if r["exact"] else "")
        K = "-" if r["K"] is None else str(r["K"])
        lines.append(f"{r['s']:>6} {r['tau']:>6} {K:>3} {bound:>6}")
    return "\n".join(lines) + "\n", 0


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    lines, failed = [], False
    for delta in cfg.deltas:
        lines.append(f"# p={cfg.spec.p} r={','.join(map(str, cfg.spec.r_vec))} q={cfg.spec.q} delta={delta}")
        for check in run_checks(cfg.spec, delta, cfg.level):
            failed |= check.status == "FAIL"
            lines.append(f"{check.status} {check.name} {check.detail}")
    return "\n".join(lines) + "\n", EXIT_VERIFY if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="characteristic")
    common.add_argument("--r", required=True, help="comma-separated r_1,...,r_m (non-increasing)")
    amb = common.add_mutually_exclusive_group()
    amb.add_argument("--q", type=int, help="ambient field size p^r")
    amb.add_argument("--ambient-r", type=int, help="ambient extension degree r")
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = _Parser(prog="cartqec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("params", "table", "verify"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--delta", help="N or A..B (inclusive)")
        if name == "verify":
            sp.add_argument("--level", choices=["none", "matrix"], default="matrix")
    sub.add_parser("grid", parents=[common])
    tp = sub.add_parser("tau", parents=[common])
    tp.add_argument("--s", help="N or A..B; default lists every s with tau(s) > 0")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args, need_delta=args.command in ("params", "table", "verify"))
        if args.command == "params":
            text, code = cmd_params(cfg)
        elif args.command == "table":
            text, code = cmd_table(cfg)
        elif args.command == "grid":
            text, code = cmd_grid(cfg)
        elif args.command == "tau":
            text, code = cmd_tau(cfg, parse_range(args.s) if args.s else [])
        else:
            text, code = cmd_verify(cfg)
    except UsageError as exc:
        print(f"cartqec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"cartqec: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except CartQECError as exc:
        print(f"cartqec: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
