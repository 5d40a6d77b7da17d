"""Command line surface: evaluation, expansion, verification, sweeps.

Value subcommands print one symmetric function in the canonical JSON
form.  verify and sweep print a report that embeds the library version
and the identity being checked.  Exit codes: 0 success or clean report,
1 counterexample or failed check, 2 invalid input, 3 limit exceeded.
"""

from __future__ import annotations

import inspect
import multiprocessing
import sys
from argparse import ArgumentParser
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .errors import KatalanError, LimitExceeded
from .families import FAMILIES as IDENTITY_SUITES
from .katalan_fn import evaluate, index
from .kkschur import (
    FAMILIES as MEMBER_FAMILIES,
    KK_SUITES,
    SWEEPS,
    branch,
    conjecture_sweep,
    expand_report,
    g_closed,
    g_kk,
    kschur,
    pieri_triple,
    set_cache,
    shift,
    tilde_g_w,
)
from .rootideal import RootIdeal
from .serialize import canonical_json, symfunc_to_json

VERIFY_SUITES = {**IDENTITY_SUITES, **KK_SUITES}


@dataclass(frozen=True)
class JobSpec:
    """One invocation: command, domain parameters, limits, plumbing.

    A fixed spec (seed included) gives a byte-identical output file.
    """

    command: str
    parameters: dict = field(default_factory=dict)
    support_cap: int | None = None
    jobs: int = 1
    cache_dir: str | None = None
    out: str | None = None
    seed: int = 0

    def __post_init__(self):
        if self.support_cap is not None and self.support_cap <= 0:
            raise ValueError("--support-cap must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")


def _parse_ints(text: str | None, flag: str) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise ValueError(
            f"{flag} wants comma separated integers, got {text!r}") from exc


def _index_from_args(args):
    gamma = _parse_ints(args.weight, "--weight")
    ell = args.ell if args.ell is not None else len(gamma)
    if args.psi is None or args.psi.strip() == "":
        rows = (0,) * ell
    else:
        rows = _parse_ints(args.psi, "--psi")
    psi = RootIdeal(ell, rows)
    items = _parse_ints(args.mult, "--mult")
    return index(psi, list(items) if items else None, gamma)


def _emit(text: str, spec: JobSpec) -> None:
    if spec.out:
        with open(spec.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload, spec: JobSpec) -> None:
    _emit(canonical_json(payload) + "\n", spec)


# -- subcommand handlers ----------------------------------------------------

def _cmd_eval(args, spec: JobSpec) -> int:
    f = evaluate(_index_from_args(args), support_cap=spec.support_cap)
    _emit_json(symfunc_to_json(f), spec)
    return 0


def _member_handler(fn):
    def handler(args, spec: JobSpec) -> int:
        f = fn(args.k, _parse_ints(args.lam, "--lambda"))
        _emit_json(symfunc_to_json(f), spec)
        return 0
    return handler


def _cmd_pieri(args, spec: JobSpec) -> int:
    lam = _parse_ints(args.lam, "--lambda")
    product, hecke, katalan = pieri_triple(args.k, lam, args.r)
    agree = product == hecke and product == katalan
    _emit_json({"k": args.k, "lambda": list(lam), "r": args.r,
                "product": symfunc_to_json(product),
                "hecke": symfunc_to_json(hecke),
                "katalan": symfunc_to_json(katalan),
                "agree": agree}, spec)
    return 0 if agree else 1


def _cmd_branch(args, spec: JobSpec) -> int:
    rep = branch(args.k, _parse_ints(args.lam, "--lambda"))
    _emit_json(rep.to_json(), spec)
    return 0 if rep.sign_flaw() is None else 1


def _cmd_expand(args, spec: JobSpec) -> int:
    f = evaluate(_index_from_args(args), support_cap=spec.support_cap)
    rep = expand_report(f, args.family, args.k)
    _emit_json(rep.to_json(), spec)
    return 0


def _cmd_tilde_g(args, spec: JobSpec) -> int:
    w = _parse_ints(args.weight, "--weight")
    _emit_json(symfunc_to_json(tilde_g_w(args.k, w)), spec)
    return 0


def _suite_kwargs(fn, args) -> dict:
    params = inspect.signature(fn).parameters
    kw = {}
    if "seed" in params:
        kw["seed"] = args.seed
    if "max_ell" in params and args.ell is not None:
        kw["max_ell"] = args.ell
    if "max_size" in params and args.max_deg is not None:
        kw["max_size"] = args.max_deg
    if "ks" in params and args.k is not None:
        kw["ks"] = (args.k,)
    if "all_w_ks" in params and args.k is not None:
        base = params["all_w_ks"].default
        kw["all_w_ks"] = tuple(x for x in base if x == args.k)
    if "max_k" in params and args.k is not None:
        kw["max_k"] = args.k
    return kw


def _verify_task(task):
    name, kw = task
    return VERIFY_SUITES[name](**kw)


def _sweep_task(task):
    which, kw = task
    return conjecture_sweep(which, **kw)


def _pool_map(task_fn, tasks, jobs):
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return None
    workers = min(jobs, len(tasks))
    with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
        return list(pool.map(task_fn, tasks))


def _cmd_verify(args, spec: JobSpec) -> int:
    fn = VERIFY_SUITES[args.suite]
    kw = _suite_kwargs(fn, args)
    params = inspect.signature(fn).parameters
    ks = kw.get("ks", params["ks"].default if "ks" in params else None)
    rep = None
    if spec.jobs > 1 and ks is not None and len(ks) > 1:
        base_all = kw.get(
            "all_w_ks",
            params["all_w_ks"].default if "all_w_ks" in params else None)
        tasks = []
        for k in ks:
            per = dict(kw)
            per["ks"] = (k,)
            if base_all is not None:
                per["all_w_ks"] = tuple(x for x in base_all if x == k)
            tasks.append((args.suite, per))
        reports = _pool_map(_verify_task, tasks, spec.jobs)
        if reports is not None:
            rep = reports[0]
            for extra in reports[1:]:
                rep.checked += extra.checked
                rep.failures.extend(extra.failures)
    if rep is None:
        rep = fn(**kw)
    _emit_json({"version": __version__, **rep.to_json()}, spec)
    return 0 if rep.ok() else 1


def _cmd_sweep(args, spec: JobSpec) -> int:
    ks = (args.k,) if args.k is not None else (2, 3)
    max_size = args.max_deg if args.max_deg is not None else 7
    max_ell = args.ell if args.ell is not None else 4
    rep = None
    if spec.jobs > 1 and len(ks) > 1:
        tasks = [(args.conjecture,
                  {"ks": (k,), "max_size": max_size, "max_ell": max_ell})
                 for k in ks]
        parts = _pool_map(_sweep_task, tasks, spec.jobs)
        if parts is not None:
            rep = parts[0]
            for extra in parts[1:]:
                rep.checked += extra.checked
                rep.witnesses.extend(extra.witnesses)
            rep.params = {"ks": list(ks), "max_size": max_size,
                          "max_ell": max_ell}
    if rep is None:
        rep = conjecture_sweep(args.conjecture, ks, max_size, max_ell)
    _emit_json({"version": __version__, **rep.to_json()}, spec)
    return 0 if rep.ok() else 1


def render_index(idx) -> str:
    """Text picture of an index: gamma on the diagonal, # for each root
    of Psi, . for a nonroot, bottom row the column multiplicities of M."""
    ell = idx.ell
    lines = [f"K(Psi; M; gamma), ell = {ell}"]
    if ell == 0:
        lines.append("(empty)")
        return "\n".join(lines) + "\n"
    labels = [str(g) for g in idx.gamma] + [str(m) for m in idx.mult.mult]
    width = max(1, max(len(s) for s in labels))
    for i in range(1, ell + 1):
        cells = []
        for j in range(1, ell + 1):
            if j < i:
                cells.append(" " * width)
            elif j == i:
                cells.append(str(idx.gamma[i - 1]).rjust(width))
            elif (i, j) in idx.psi:
                cells.append("#".rjust(width))
            else:
                cells.append(".".rjust(width))
        lines.append("  " + " ".join(cells).rstrip())
    lines.append("M " + " ".join(str(m).rjust(width) for m in idx.mult.mult))
    return "\n".join(lines) + "\n"


def _cmd_render(args, spec: JobSpec) -> int:
    _emit(render_index(_index_from_args(args)), spec)
    return 0


# -- parser and entry point -------------------------------------------------

def _add_index_flags(sp) -> None:
    sp.add_argument("--weight", required=True,
                    help="comma separated integer weight gamma")
    sp.add_argument("--psi",
                    help="root ideal row counts (default: empty ideal)")
    sp.add_argument("--mult",
                    help="lowering columns with multiplicity, comma separated")
    sp.add_argument("--ell", type=int,
                    help="ambient rank (default: length of the weight)")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="katalan",
        description="Exact Katalan function evaluation and verification.")
    common = ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--cache-dir", dest="cache_dir",
                        help="family cache directory "
                             "(default: KATALAN_CACHE_DIR)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for random subsets and cache audits")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes for verify and sweep")
    common.add_argument("--support-cap", dest="support_cap", type=int,
                        help="abort when the expansion support passes "
                             "this many states")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(handler=handler)
        return sp

    sp = cmd("eval", _cmd_eval, "evaluate K(Psi; M; gamma)")
    _add_index_flags(sp)

    for name, fn, help_text in (
            ("kkschur", g_kk, "K-k-Schur function of a k-bounded partition"),
            ("closed", g_closed, "closed k-Schur Katalan function"),
            ("kschur", kschur, "k-Schur function"),
            ("shift", shift, "shift invariance image from level k+1")):
        sp = cmd(name, _member_handler(fn), help_text)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--lambda", dest="lam",
                        help="comma separated partition (default: empty)")

    sp = cmd("pieri", _cmd_pieri,
             "vertical Pieri product three ways, with agreement flag")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--lambda", dest="lam",
                    help="comma separated k-bounded partition")
    sp.add_argument("--r", type=int, required=True,
                    help="column height, 0 <= r <= k")

    sp = cmd("branch", _cmd_branch,
             "expansion of a K-k-Schur function at level k+1")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--lambda", dest="lam",
                    help="comma separated k-bounded partition")

    sp = cmd("expand", _cmd_expand,
             "expand K(Psi; M; gamma) over a labeled family")
    sp.add_argument("family", choices=sorted(MEMBER_FAMILIES))
    sp.add_argument("--k", type=int, required=True,
                    help="family level (labels the dual-groth cache)")
    _add_index_flags(sp)

    sp = cmd("tilde-g", _cmd_tilde_g,
             "closed combination over a Bruhat interval")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--weight", required=True,
                    help="one line permutation of 1..k+1, comma separated")

    sp = cmd("verify", _cmd_verify, "run one verification suite")
    sp.add_argument("suite", choices=sorted(VERIFY_SUITES))
    sp.add_argument("--k", type=int, help="restrict to one level")
    sp.add_argument("--max-deg", dest="max_deg", type=int,
                    help="degree bound, where the suite takes one")
    sp.add_argument("--ell", type=int,
                    help="rank bound, where the suite takes one")

    sp = cmd("sweep", _cmd_sweep, "run one conjecture sweep")
    sp.add_argument("conjecture", choices=sorted(SWEEPS))
    sp.add_argument("--k", type=int, help="restrict to one level")
    sp.add_argument("--max-deg", dest="max_deg", type=int,
                    help="partition size bound (default 7)")
    sp.add_argument("--ell", type=int,
                    help="rank and length bound (default 4)")

    sp = cmd("render", _cmd_render, "text picture of an index")
    _add_index_flags(sp)

    return parser


def run(args) -> int:
    skip = {"handler", "command", "out", "cache_dir", "seed", "jobs",
            "support_cap"}
    parameters = {name: value for name, value in sorted(vars(args).items())
                  if name not in skip and value is not None
                  and not callable(value)}
    spec = JobSpec(args.command, parameters,
                   support_cap=args.support_cap, jobs=args.jobs,
                   cache_dir=args.cache_dir, out=args.out, seed=args.seed)
    set_cache(spec.cache_dir, audit_rate=0.01, seed=spec.seed)
    return args.handler(args, spec)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return run(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (KatalanError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
