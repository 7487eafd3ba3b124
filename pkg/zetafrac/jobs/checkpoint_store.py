"""
Scan checkpoints: a versioned header line followed by one JSON document.

    ZFSCAN1
    {"config_hash": ..., "config": {...}, "last_n": ..., "min": {"n", "num", "den"}, ...}

Big integers are stored as base-10 text through bigratio.int_text, which is not bound
by the interpreter's int/str digit limit. Writes go to a sibling temp file
that replaces the checkpoint in one rename.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from zetafrac.arith.bigratio import int_from_text, int_text
from zetafrac.exceptions import ResumeError
from zetafrac.jobs.schemas import ScanConfig
from zetafrac.logger import GLOBAL_LOGGER as logger

MAGIC = "ZFSCAN1"


@dataclass
class ScanState:
    """Merged scan progress; last_n is the last completed n (n_min - 1 before any work)."""

    last_n: int
    count: int = 0
    min_n: int | None = None
    min_num: int | None = None
    min_den: int | None = None
    min_margin_n: int | None = None
    min_margin: tuple[int, int] | None = None  # mpf (man, exp)
    hits: list[int] = field(default_factory=list)
    histogram: list[int] = field(default_factory=list)

    @classmethod
    def fresh(cls, cfg: ScanConfig) -> "ScanState":
        return cls(last_n=cfg.n_min - 1, histogram=[0] * cfg.histogram_bins)


def _big(value: int | None) -> str | None:
    return None if value is None else int_text(value)


def _unbig(text: str | None) -> int | None:
    return None if text is None else int_from_text(text)


def save_checkpoint(path: str, cfg: ScanConfig, state: ScanState) -> None:
    doc = {
        "config_hash": cfg.config_hash(),
        "config": cfg.hashed_view(),
        "last_n": state.last_n,
        "count": state.count,
        "min": None if state.min_n is None else {"n": state.min_n, "num": _big(state.min_num), "den": _big(state.min_den)},
        "min_margin": None if state.min_margin_n is None else {
            "n": state.min_margin_n, "man": _big(state.min_margin[0]), "exp": state.min_margin[1],
        },
        "hits": state.hits,
        "histogram": state.histogram,
    }
    tmp_path = f"{path}.tmp"
    with open(tmp_path, "w", encoding="utf-8") as fh:
        fh.write(MAGIC + "\n")
        json.dump(doc, fh, sort_keys=True)
        fh.write("\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp_path, path)
    logger.debug(f"[save_checkpoint] path={path} last_n={state.last_n}")


def load_checkpoint(path: str, cfg: ScanConfig) -> ScanState:
    """State to resume from. A missing or empty file starts a fresh scan."""
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        logger.info(f"[load_checkpoint] no checkpoint at {path}, starting at n={cfg.n_min}")
        return ScanState.fresh(cfg)

    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        body = fh.read()
    if header != MAGIC:
        raise ResumeError(f"not a scan checkpoint (header {header[:16]!r}): {path}")
    try:
        doc = json.loads(body)
    except json.JSONDecodeError as e:
        raise ResumeError(f"corrupt checkpoint body: {path}", error_details=e)

    if doc.get("config_hash") != cfg.config_hash():
        saved = doc.get("config") or {}
        current = cfg.hashed_view()
        diff = {
            key: {"checkpoint": saved.get(key), "requested": current.get(key)}
            for key in sorted(set(saved) | set(current))
            if saved.get(key) != current.get(key)
        }
        raise ResumeError(f"checkpoint was written by a different scan configuration: {path}", diff=diff)

    try:
        minimum = doc["min"]
        margin = doc["min_margin"]
        state = ScanState(
            last_n=int(doc["last_n"]),
            count=int(doc["count"]),
            min_n=None if minimum is None else int(minimum["n"]),
            min_num=None if minimum is None else _unbig(minimum["num"]),
            min_den=None if minimum is None else _unbig(minimum["den"]),
            min_margin_n=None if margin is None else int(margin["n"]),
            min_margin=None if margin is None else (_unbig(margin["man"]), int(margin["exp"])),
            hits=[int(n) for n in doc["hits"]],
            histogram=[int(c) for c in doc["histogram"]],
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ResumeError(f"checkpoint is missing fields: {path}", error_details=e)
    logger.info(f"[load_checkpoint] resuming {path} after n={state.last_n}")
    return state
