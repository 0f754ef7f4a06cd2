import argparse
import json
import logging
import sys

from .Bracket.moyBracket import bracket, normalized_bracket, web_value
from .core import WebError
from .Hochschild.hhhComputation import h12_shift, hhh
from .Oracle.braidChecks import verify_d_squared
from .Oracle.hochschildOracles import verify_a2_cases, verify_markov2_oracles
from .Oracle.moyAxioms import verify_moy_axioms
from .Oracle.squareLemmas import verify_square_lemmas
from .Oracle.verificationCheck import reports_to_json
from .ReportGeneration.poincare_report import summary_frame
from .Webs.colouredBraid import diagram_stats, parse_braid
from .Webs.ladderWeb import load_web
from .util import DEFAULT_QMAX, get_thread_count, logging_setup


EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_QMAX = 0, 1, 2, 3
MODES = ["hhh", "h12", "bracket", "normalized-bracket"]
SUITES = ["lemmas", "markov2", "a2", "dsq", "axioms", "all"]

DEGREE_NOTE = ("Degrees in machine output are doubled integers: h2, hh2, q2 and t2 are twice the homological, "
               "Hochschild, q- and t-degrees, so half-integer shifts stay exact.")


def build_parser():
    parser = argparse.ArgumentParser(prog = "homcat", description = "Exact 1,2-coloured HOMFLY-PT link homology of braid closures.",
                                     epilog = DEGREE_NOTE)
    parser.add_argument("--threads", type = int, default = None, help = "Worker threads (default: HOMCAT_THREADS or the core count).")
    parser.add_argument("--loglevel", default = "warning", choices = ["debug", "info", "warning", "error"])
    commands = parser.add_subparsers(dest = "command", required = True)

    braid = commands.add_parser("eval-braid", help = "Homology or bracket of a braid closure.", epilog = DEGREE_NOTE)
    braid.add_argument("--colours", required = True, help = "Comma separated strand colours, e.g. 2,2.")
    braid.add_argument("--word", default = "", help = "Comma separated signed generators, e.g. 1,-1.")
    braid.add_argument("--qmax", type = int, default = DEFAULT_QMAX)
    braid.add_argument("--mode", default = "hhh", choices = MODES)
    braid.add_argument("--format", default = "json", choices = ["json", "tsv"])

    web = commands.add_parser("eval-web", help = "Hochschild homology of a closed web read from JSON.", epilog = DEGREE_NOTE)
    web.add_argument("path")
    web.add_argument("--qmax", type = int, default = DEFAULT_QMAX)
    web.add_argument("--format", default = "json", choices = ["json", "tsv"])

    verify = commands.add_parser("verify", help = "Run verification suites and print a JSON report.")
    verify.add_argument("suite", choices = SUITES)
    verify.add_argument("--qmax", type = int, default = DEFAULT_QMAX)
    return parser


def _coefficient(value):
    return int(value) if value.denominator == 1 else str(value)


def _series_rows(series):
    return [{"t2": t2, "q2": q2, "coeff": _coefficient(coeff)} for (q2, t2), coeff in sorted(series.terms.items(), key = lambda kv: (kv[0][1], kv[0][0]))]


def _table_rows(table):
    return [{"h2": h2, "hh2": hh2, "q2": q2, "dim": dim} for h2, hh2, q2, dim in table.rows()]


def emit(metadata, rows, columns, fmt, out = None):
    """
    Writes metadata and rows as one JSON document or as a TSV table with '#' header lines.
    """
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps({**metadata, "rows": rows}, indent = 2, sort_keys = True) + "\n")
        return
    for key in sorted(metadata):
        out.write(f"# {key}: {json.dumps(metadata[key], sort_keys = True)}\n")
    out.write("\t".join(columns) + "\n")
    for row in rows:
        out.write("\t".join(str(row[column]) for column in columns) + "\n")


def cmd_eval_braid(args):
    braid = parse_braid(args.colours, args.word)
    stats = diagram_stats(braid)
    metadata = {"colours": list(braid.colours), "word": list(braid.word), "qmax": args.qmax, "mode": args.mode, "stats": stats.to_dict()}
    if args.mode in ("hhh", "h12"):
        table = hhh(braid, args.qmax, args.threads)
        shift = (0, 0, 0)
        if args.mode == "h12":
            shift = h12_shift(braid)
            table = table.shift(*shift)
        metadata["shift"] = dict(zip(["h2", "hh2", "q2"], shift))
        emit(metadata, _table_rows(table), ["h2", "hh2", "q2", "dim"], args.format)
        summary = summary_frame(table)
        sys.stderr.write(f"{args.mode} of {braid.colours} {braid.word} up to q = {table.qmax}:\n{summary.to_string(index = False)}\n")
        return EXIT_OK
    if args.mode == "bracket":
        series = bracket(braid, args.qmax, args.threads)
    else:
        series = normalized_bracket(braid, args.qmax, args.threads)
    if series.prefactor is not None:
        metadata["prefactor"] = {"sign_base": series.prefactor.sign_base, "t2": series.prefactor.t2, "q2": series.prefactor.q2}
    emit(metadata, _series_rows(series), ["t2", "q2", "coeff"], args.format)
    sys.stderr.write(f"{args.mode} of {braid.colours} {braid.word}: {series}\n")
    return EXIT_OK


def cmd_eval_web(args):
    web = load_web(args.path)
    value = web_value(web, args.qmax)
    rows = [{"hh2": t2, "q2": q2, "dim": _coefficient(coeff)} for (q2, t2), coeff in sorted(value.terms.items(), key = lambda kv: (kv[0][1], kv[0][0]))]
    emit({"path": str(args.path), "bottom": list(web.bottom), "qmax": args.qmax}, rows, ["hh2", "q2", "dim"], args.format)
    return EXIT_OK


def run_suites(suite, qmax, threads = None):
    """
    Reports of the selected verification suites, in a fixed order.
    """
    runners = {"lemmas": lambda: verify_square_lemmas(qmax),
               "markov2": lambda: verify_markov2_oracles(qmax, threads),
               "a2": lambda: verify_a2_cases(qmax),
               "dsq": lambda: verify_d_squared(qmax),
               "axioms": lambda: verify_moy_axioms(qmax)}
    selected = list(runners) if suite == "all" else [suite]
    return [runners[name]() for name in selected]


def cmd_verify(args):
    reports = run_suites(args.suite, args.qmax, args.threads)
    sys.stdout.write(reports_to_json(reports) + "\n")
    return EXIT_OK if all(report["status"] == "pass" for report in reports) else EXIT_FAILED


COMMANDS = {"eval-braid": cmd_eval_braid, "eval-web": cmd_eval_web, "verify": cmd_verify}


def main(argv = None):
    args = build_parser().parse_args(argv)
    logging_setup(args.loglevel)
    if args.qmax <= 0:
        logging.error(f"qmax must be positive, got {args.qmax}.")
        sys.stderr.write(f"homcat: qmax must be positive, got {args.qmax}\n")
        return EXIT_QMAX
    try:
        args.threads = get_thread_count(args.threads)
    except ValueError as error:
        sys.stderr.write(f"homcat: {error}\n")
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except (WebError, OSError) as error:
        sys.stderr.write(f"homcat: {error}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
