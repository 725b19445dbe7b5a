"""Command-line front end: a thin client over the service handlers.

Every subcommand builds the same request model the HTTP API accepts and
either dispatches it in process (default) or POSTs it to a running service
(`--server URL`).  Output is plot-ready TSV by default, or the stable JSON
report with `--out json`.

Exit codes: 0 success, 1 usage or parse error, 2 hypothesis violation under
--strict, 3 internal invariant failure (including selftest failures).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    FrobstatError,
    HypothesisViolation,
    InvariantViolation,
    ParseError,
)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", choices=("json", "tsv"), default="tsv")
    sub.add_argument("--quiet", action="store_true", help="suppress warnings on stderr")
    sub.add_argument("--strict", action="store_true",
                     help="treat applicability violations as errors (exit 2)")
    sub.add_argument("--server", metavar="URL",
                     help="dispatch to a running frobstat service instead of in-process")


def build_parser() -> _Parser:
    parser = _Parser(prog="frobstat", description=__doc__.split("\n")[0])
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subs.add_parser("predict", help="predicted class distribution for a group shape")
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--splittings", type=_int_list)
    _add_common(p)

    p = subs.add_parser("bh", help="decomposition statistics of F_i(t, f) over degree-n f")
    p.add_argument("--F", action="append", required=True, metavar="EXPR",
                   help="bivariate polynomial in t, x (repeatable)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--samples", type=int)
    group.add_argument("--exhaustive", action="store_true")
    p.add_argument("--force-sample", action="store_true",
                   help="sample even when exhaustive enumeration would fit the budget")
    p.add_argument("--nu", type=_int_list, help="override the splitting degrees")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("intersect", help="Frobenius class of two random plane curves")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--samples", type=int)
    group.add_argument("--exhaustive", action="store_true")
    p.add_argument("--force-sample", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("sections", help="statistics of f_0 + sum A_i f_i specializations")
    p.add_argument("--param", required=True, metavar="LIST",
                   help="comma-separated univariate polynomials, e.g. 't^5,t,1'")
    p.add_argument("--q", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--samples", type=int)
    group.add_argument("--exhaustive", action="store_true")
    p.add_argument("--force-sample", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("galois", help="statistical full-symmetric-group detection")
    p.add_argument("--param", required=True, metavar="LIST")
    p.add_argument("--q", type=_int_list, required=True, help="comma-separated q values")
    p.add_argument("--samples", type=int)
    p.add_argument("--alpha", type=float, default=1e-3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("scan", help="error decay of an experiment across q")
    p.add_argument("--exp", default="bh", help="underlying experiment (bh)")
    p.add_argument("--F", action="append", required=True, metavar="EXPR")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=_int_list, required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--nu", type=_int_list)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("selftest", help="run the oracle-equivalence property suites")
    p.add_argument("--quick", action="store_true")
    _add_common(p)

    return parser


# --- request construction ----------------------------------------------------


def _build_request(args):
    from .api import models

    if args.command == "predict":
        return "/predict", models.PredictRequest(
            degrees=args.degrees, splittings=args.splittings
        )
    if args.command == "bh":
        return "/bh", models.BHRequest(
            F=args.F,
            n=args.n,
            q=args.q,
            samples=args.samples,
            exhaustive=args.exhaustive,
            force_sample=args.force_sample,
            nu=args.nu,
            strict=args.strict,
            seed=args.seed,
            workers=args.workers,
        )
    if args.command == "intersect":
        return "/intersect", models.IntersectRequest(
            d1=args.d1,
            d2=args.d2,
            q=args.q,
            samples=args.samples,
            exhaustive=args.exhaustive,
            force_sample=args.force_sample,
            seed=args.seed,
            workers=args.workers,
        )
    if args.command == "sections":
        return "/sections", models.SectionsRequest(
            param=args.param.split(","),
            q=args.q,
            samples=args.samples,
            exhaustive=args.exhaustive,
            force_sample=args.force_sample,
            seed=args.seed,
            workers=args.workers,
        )
    if args.command == "galois":
        return "/galois", models.GaloisRequest(
            param=args.param.split(","),
            q=args.q,
            samples=args.samples,
            alpha=args.alpha,
            seed=args.seed,
            workers=args.workers,
        )
    if args.command == "scan":
        return "/scan", models.ScanRequest(
            exp=args.exp,
            F=args.F,
            n=args.n,
            q=args.q,
            samples=args.samples,
            nu=args.nu,
            strict=args.strict,
            seed=args.seed,
            workers=args.workers,
        )
    if args.command == "selftest":
        return "/selftest", models.SelftestRequest(quick=args.quick)
    raise FrobstatError(f"unknown command {args.command}")  # pragma: no cover


def _dispatch(route: str, request, server: str | None) -> dict:
    if server:
        import httpx

        try:
            response = httpx.post(
                server.rstrip("/") + route, json=request.model_dump(), timeout=None
            )
        except httpx.HTTPError as exc:
            raise FrobstatError(f"server request failed: {exc}") from exc
        if response.status_code == 409:
            raise HypothesisViolation(response.json().get("detail", "strict violation"))
        if response.status_code >= 400:
            detail = response.json()
            raise FrobstatError(f"{detail.get('error')}: {detail.get('detail')}")
        return response.json()
    from .api import handlers

    handler = {
        "/predict": handlers.handle_predict,
        "/bh": handlers.handle_bh,
        "/intersect": handlers.handle_intersect,
        "/sections": handlers.handle_sections,
        "/galois": handlers.handle_galois,
        "/scan": handlers.handle_scan,
        "/selftest": handlers.handle_selftest,
    }[route]
    return handler(request)


# --- output formatting ---------------------------------------------------------


def _label_str(label: list[list[int]]) -> str:
    return ";".join(",".join(str(part) for part in comp) for comp in label)


def _excl_str(excl: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in excl.items())


def _report_tsv(d: dict) -> str:
    lines = [
        f"# experiment\t{d['experiment']}",
        f"# q\t{d['q']}",
        f"# trials\t{d['trials']}",
        f"# exclusions\t{_excl_str(d['exclusions'])}",
        f"# degrees\t{','.join(map(str, d['shape']['degrees']))}",
        f"# splittings\t{','.join(map(str, d['shape']['splittings']))}",
        f"# tv\t{d['tv']!r}",
    ]
    chi2 = d["chi2"]
    if chi2 is None:
        lines.append("# chi2\tNA")
    else:
        lines.append(f"# chi2\tstat={chi2['stat']!r} dof={chi2['dof']} p={chi2['p']!r}")
    lines.append(f"# seed\t{d['seed']}")
    lines.append("label\tcount\tpredicted\tfreq")
    accepted = sum(c["count"] for c in d["classes"])
    for entry in d["classes"]:
        freq = entry["count"] / accepted if accepted else 0.0
        lines.append(
            f"{_label_str(entry['label'])}\t{entry['count']}\t{entry['predicted']!r}\t{freq!r}"
        )
    return "\n".join(lines)


def _predict_tsv(d: dict) -> str:
    lines = [
        f"# degrees\t{','.join(map(str, d['shape']['degrees']))}",
        f"# splittings\t{','.join(map(str, d['shape']['splittings']))}",
        "label\tprobability\tfraction",
    ]
    for entry in d["classes"]:
        lines.append(f"{_label_str(entry['label'])}\t{entry['probability']!r}\t{entry['fraction']}")
    return "\n".join(lines)


def _scan_tsv(d: dict) -> str:
    lines = [
        "# experiment\tscan",
        f"# slope\t{d['slope']!r}",
        f"# points_used\t{d['points_used']}",
        f"# dropped_zero_tv\t{d['dropped_zero_tv']}",
        f"# seed\t{d['seed']}",
        "q\ttv\tsamples\tnot_squarefree\tdegree_drop\tnot_transversal",
    ]
    for pt in d["points"]:
        e = pt["exclusions"]
        lines.append(
            f"{pt['q']}\t{pt['tv']!r}\t{pt['samples']}\t"
            f"{e['not_squarefree']}\t{e['degree_drop']}\t{e['not_transversal']}"
        )
    return "\n".join(lines)


def _galois_tsv(d: dict) -> str:
    lines = [
        "# experiment\tgalois",
        f"# verdict\t{d['verdict']}",
        f"# alpha\t{d['alpha']!r}",
        f"# degree\t{d['degree']}",
        f"# seed\t{d['seed']}",
        "q\tp_value\ttv\ttrials\twronskian_ok",
    ]
    pre = {p["q"]: p for p in d["preconditions"]}
    for run in d["runs"]:
        q = run["q"]
        p_value = run["chi2"]["p"] if run["chi2"] else float("nan")
        wronskian_ok = bool(pre[q]["wronskian_nonzero_triples"])
        lines.append(f"{q}\t{p_value!r}\t{run['tv']!r}\t{run['trials']}\t{wronskian_ok}")
    for witness in d["witnesses"]:
        lines.append(
            f"# witness\tq={witness['q']} label={_label_str(witness['label'])} "
            f"observed={witness['observed_freq']!r} predicted={witness['predicted']!r}"
        )
    return "\n".join(lines)


def _selftest_text(d: dict) -> str:
    lines = []
    for check in d["checks"]:
        tag = "PASS" if check["ok"] else "FAIL"
        detail = f"  {check['detail']}" if check["detail"] else ""
        lines.append(f"{tag}  {check['name']}{detail}")
    lines.append("selftest: " + ("all checks passed" if d["passed"] else "FAILURES"))
    return "\n".join(lines)


def _emit(command: str, result: dict, out: str, quiet: bool) -> None:
    if not quiet:
        for warning in result.get("params", {}).get("warnings", []):
            print(f"warning: {warning}", file=sys.stderr)
        if command == "galois":
            for pre in result.get("preconditions", []):
                for warning in pre.get("warnings", []):
                    print(f"warning: q={pre['q']}: {warning}", file=sys.stderr)
    if out == "json":
        print(json.dumps(result))
        return
    if command == "predict":
        print(_predict_tsv(result))
    elif command == "scan":
        print(_scan_tsv(result))
    elif command == "galois":
        print(_galois_tsv(result))
    elif command == "selftest":
        print(_selftest_text(result))
    else:
        print(_report_tsv(result))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        route, request = _build_request(args)
        result = _dispatch(route, request, args.server)
    except ParseError as exc:
        print(f"frobstat: parse error: {exc}", file=sys.stderr)
        return 1
    except HypothesisViolation as exc:
        print(f"frobstat: hypothesis violation: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"frobstat: internal invariant failure: {exc}", file=sys.stderr)
        return 3
    except FrobstatError as exc:
        print(f"frobstat: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # unexpected: report as an internal failure
        print(f"frobstat: internal error: {exc!r}", file=sys.stderr)
        return 3
    _emit(args.command, result, getattr(args, "out", "tsv"), getattr(args, "quiet", False))
    if args.command == "selftest" and not result["passed"]:
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
