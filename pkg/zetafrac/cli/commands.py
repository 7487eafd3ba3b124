from __future__ import annotations

import argparse

from zetafrac.arith.bigratio import as_rational, int_text, json_text
from zetafrac.cli.output import ScanWriter, VerdictWriter
from zetafrac.exceptions import UsageError
from zetafrac.jobs.scanner import scan
from zetafrac.jobs.schemas import ScanConfig, ThresholdMode
from zetafrac.jobs.tasks import verify_range
from zetafrac.logger import GLOBAL_LOGGER as logger
from zetafrac.series.continued_fraction import cf_second_term, cf_terms
from zetafrac.settings import Settings
from zetafrac.theorems.claims import DEFAULT_X, validate_claim
from zetafrac.theorems.classify import X_LOWER, X_UPPER, check_egypt, check_m_class, classify_k, floor_identity_record
from zetafrac.theorems.sandwich import check_prime_gap
from zetafrac.theorems.schemas import ClaimId, Verdict

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INTEGRITY = 3

LONG_SCAN_N_MAX = 5_000_000
LONG_SCAN_THRESHOLD = "1e-9"
LONG_SCAN_CHECKPOINT = "zetafrac-long.ckpt"


def exit_code_for(verdicts) -> int:
    return EXIT_INCONCLUSIVE if Verdict.INCONCLUSIVE in verdicts else EXIT_OK


def _precision(cfg: Settings) -> dict:
    return {"precision_bits": cfg.precision_bits, "max_rounds": cfg.max_rounds}


def cmd_cf_term(args: argparse.Namespace, cfg: Settings) -> int:
    if args.terms is None:
        value = cf_second_term(args.n, **_precision(cfg))
        print(json_text({"n": args.n, "cf_second_term": value}) if cfg.output_format == "json" else int_text(value))
        return EXIT_OK
    if args.terms < 1:
        raise UsageError(f"--terms must be >= 1, got {args.terms}")
    terms = cf_terms(args.n, args.terms, **_precision(cfg))
    print(json_text({"n": args.n, "terms": terms}) if cfg.output_format == "json" else " ".join(map(int_text, terms)))
    return EXIT_OK


def cmd_k(args: argparse.Namespace, cfg: Settings) -> int:
    record = classify_k(args.n, **_precision(cfg))
    if cfg.output_format == "text":
        print(record.k)
        return EXIT_OK
    VerdictWriter(cfg.output_format).write(floor_identity_record(record))
    return EXIT_OK


def cmd_check(args: argparse.Namespace, cfg: Settings) -> int:
    validate_claim(args.claim, args.n_from, args.n_to)
    options = _precision(cfg)
    if args.claim == ClaimId.GENERAL_K.value:
        x = DEFAULT_X if args.x is None else as_rational(args.x)
        if not X_LOWER < x < X_UPPER:
            raise UsageError(f"--x must lie strictly between 1/2 and 3/4, got {args.x}")
        options["x"] = str(x)
    elif args.x is not None:
        raise UsageError(f"--x applies to {ClaimId.GENERAL_K.value} only")
    options["prime_limit"] = cfg.prime_limit

    logger.info(f"[check] claim={args.claim} n={args.n_from}..{args.n_to} workers={cfg.workers}")
    writer = VerdictWriter(cfg.output_format)
    writer.write_all(verify_range(args.claim, range(args.n_from, args.n_to + 1), workers=cfg.workers, **options))
    return exit_code_for(writer.verdicts)


def scan_config_from_args(args: argparse.Namespace, cfg: Settings) -> ScanConfig:
    fields = {
        "p": args.p,
        "q": args.q,
        "n_min": args.n_from,
        "n_max": args.n_to,
        "threshold_mode": ThresholdMode.ADAPTIVE if args.adaptive else ThresholdMode.FIXED,
        "threshold": args.threshold,
        "chunk_size": args.chunk_size or cfg.chunk_size,
        "sample_stride": args.stride or cfg.sample_stride,
        "histogram_bins": args.bins or cfg.histogram_bins,
        "prefilter": not args.no_prefilter,
        "checkpoint_path": args.checkpoint,
        "max_rounds": cfg.max_rounds,
    }
    if args.long:
        if args.adaptive:
            raise UsageError("--long scans against the fixed 1e-9 threshold; drop --adaptive")
        fields.update(p=4, q=3, threshold=LONG_SCAN_THRESHOLD, n_max=args.n_to or LONG_SCAN_N_MAX)
        fields["checkpoint_path"] = args.checkpoint or LONG_SCAN_CHECKPOINT
    elif args.n_to is None:
        raise UsageError("scan needs --to N (or --long)")
    if args.resume and not fields["checkpoint_path"]:
        raise UsageError("--resume needs --checkpoint PATH")
    return ScanConfig(**fields)


def cmd_scan(args: argparse.Namespace, cfg: Settings) -> int:
    scan_cfg = scan_config_from_args(args, cfg)
    writer = ScanWriter(cfg.output_format, summary_path=args.summary)
    for item in scan(scan_cfg, workers=cfg.workers, resume=args.resume or args.long, max_chunks=args.max_chunks):
        writer.write(item)
    return EXIT_OK


def cmd_prime_gap(args: argparse.Namespace, cfg: Settings) -> int:
    s = as_rational(args.s)
    record = check_prime_gap(s if s.denominator != 1 else int(s), prime_limit=cfg.prime_limit, **_precision(cfg))
    writer = VerdictWriter(cfg.output_format)
    writer.write(record)
    return exit_code_for(writer.verdicts)


def cmd_egypt(args: argparse.Namespace, cfg: Settings) -> int:
    writer = VerdictWriter(cfg.output_format)
    writer.write(check_egypt(args.n, **_precision(cfg)))
    return exit_code_for(writer.verdicts)


def cmd_m_class(args: argparse.Namespace, cfg: Settings) -> int:
    writer = VerdictWriter(cfg.output_format)
    writer.write(check_m_class(args.n, **_precision(cfg)))
    return exit_code_for(writer.verdicts)


COMMANDS = {
    "cf-term": cmd_cf_term,
    "k": cmd_k,
    "check": cmd_check,
    "scan": cmd_scan,
    "prime-gap": cmd_prime_gap,
    "egypt": cmd_egypt,
    "m-class": cmd_m_class,
}

__all__ = ["COMMANDS", "EXIT_INCONCLUSIVE", "EXIT_INTEGRITY", "EXIT_OK", "EXIT_USAGE", "exit_code_for"]
