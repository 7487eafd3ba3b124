"""
zetafrac command line.

    zetafrac cf-term 3                    -> 4
    zetafrac k 13                         -> 1
    zetafrac check thm1 --from 2 --to 1000 --json
    zetafrac scan --from 1 --to 200000 --adaptive --checkpoint scan.ckpt
    zetafrac prime-gap 7/2

Records go to stdout, logs to stderr. Exit status: 0 all claims hold,
1 usage/domain/resume error, 2 at least one INCONCLUSIVE, 3 integrity
violation (evidence as JSON on stderr).
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from pydantic import ValidationError

from zetafrac.arith.bigratio import json_text
from zetafrac.cli.commands import COMMANDS, EXIT_INCONCLUSIVE, EXIT_INTEGRITY, EXIT_USAGE
from zetafrac.exceptions import (
    DomainError,
    IntegrityError,
    ResumeError,
    StraddlesIntegerError,
    UsageError,
)
from zetafrac.logger import GLOBAL_LOGGER as logger
from zetafrac.logger import set_log_level
from zetafrac.settings import Settings, settings


class ZetaFracArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's parser from resetting flags given before it
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output_format", action="store_const", const="json", help="JSON lines output")
    fmt.add_argument("--csv", dest="output_format", action="store_const", const="csv", help="CSV output")
    common.add_argument("--precision-bits", type=int, help="working precision in bits (default 3*s + 64)")
    common.add_argument("--max-rounds", type=int, help="refinement rounds before a result is INCONCLUSIVE")
    common.add_argument("--prime-limit", type=int, help="primes summed explicitly before the tail bound")
    common.add_argument("--threads", type=int, help="worker processes (default: CPU count)")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = ZetaFracArgumentParser(prog="zetafrac", parents=[common], description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ZetaFracArgumentParser)

    p = sub.add_parser("cf-term", parents=[common], help="floor(1/(zeta(n)-1)), the second continued fraction term of zeta(n)")
    p.add_argument("n", type=int)
    p.add_argument("--terms", type=int, default=None, help="print the first K terms instead")

    p = sub.add_parser("k", parents=[common], help="k(n) with floor(1/(zeta(n)-1)) = 2^n - floor((4/3)^n) - k")
    p.add_argument("n", type=int)

    p = sub.add_parser("check", parents=[common], help="verify a claim over a range of n")
    p.add_argument("claim", help="claim-id, e.g. thm1, prop2.1, prop3.5")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--x", default=None, help="rational x in (1/2, 3/4) for prop3.5 (default 2/3)")

    p = sub.add_parser("scan", parents=[common], help="scan {(p/q)^n} for small fractional parts")
    p.add_argument("--p", type=int, default=4)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--from", dest="n_from", type=int, default=1)
    p.add_argument("--to", dest="n_to", type=int, default=None)
    p.add_argument("--threshold", default="1e-9", help="fixed threshold as a decimal or p/q literal")
    p.add_argument("--adaptive", action="store_true", help="compare against epsilon(n) for p/q = 4/3")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--no-prefilter", action="store_true", help="decide every n exactly")
    p.add_argument("--long", action="store_true", help="n up to 5,000,000 against 1e-9, checkpointed")
    p.add_argument("--summary", default=None, help="write the summary JSON to this path")
    p.add_argument("--chunk-size", type=int, default=None)
    p.add_argument("--stride", type=int, default=None, help="emit every stride-th n as a sample")
    p.add_argument("--bins", type=int, default=None, help="histogram bins over [0, 1)")
    p.add_argument("--stop-after-chunks", dest="max_chunks", type=int, default=None)

    p = sub.add_parser("prime-gap", parents=[common], help="certify 1 - eps(s) < 1/P(s) - 1/(zeta(s)-1) < 1 + delta(s) for s >= 7")
    p.add_argument("s", help="integer or rational exponent, e.g. 9 or 15/2")

    p = sub.add_parser("egypt", parents=[common], help="certify zeta(n) != 1 + 1/m: 1/(zeta(n)-1) avoids every integer (SKIPPED when k(n) = 1)")
    p.add_argument("n", type=int)

    p = sub.add_parser("m-class", parents=[common], help="m(n) for x = 2/3")
    p.add_argument("n", type=int)
    return parser


def resolve_settings(args: argparse.Namespace, base: Settings = settings) -> Settings:
    return base.with_overrides(
        output_format=getattr(args, "output_format", None),
        precision_bits=getattr(args, "precision_bits", None),
        max_rounds=getattr(args, "max_rounds", None),
        prime_limit=getattr(args, "prime_limit", None),
        threads=getattr(args, "threads", None),
        log_level=getattr(args, "log_level", None),
    )


def _report(kind: str, e: Exception) -> None:
    message = getattr(e, "error_message", str(e))
    print(f"zetafrac: {kind}: {message}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = resolve_settings(args)
        set_log_level(cfg.log_level)
        return COMMANDS[args.command](args, cfg)
    except IntegrityError as e:
        logger.error(f"[main] integrity violation: {e.error_message}")
        _report("integrity violation", e)
        print(json_text({"error": e.error_message, "evidence": e.evidence}), file=sys.stderr)
        return EXIT_INTEGRITY
    except StraddlesIntegerError as e:
        _report("inconclusive", e)
        return EXIT_INCONCLUSIVE
    except ResumeError as e:
        _report("cannot resume", e)
        if e.diff:
            print(json_text({"config_diff": e.diff}), file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, DomainError) as e:
        _report("error", e)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"zetafrac: invalid options: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
