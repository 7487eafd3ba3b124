import json

import pytest

from zetafrac.exceptions import ResumeError
from zetafrac.jobs.checkpoint_store import MAGIC, ScanState, load_checkpoint, save_checkpoint
from zetafrac.jobs.scanner import scan

pytestmark = [pytest.mark.unit, pytest.mark.scan]


def rows(items) -> tuple[list[dict], dict]:
    items = list(items)
    return [r.to_row() for r in items[:-1]], items[-1].model_dump()


class TestCheckpointStore:
    """Checkpoint file format and refusal rules."""

    def test_round_trip_preserves_big_integers(self, scan_config, checkpoint_path):
        cfg = scan_config(checkpoint_path=checkpoint_path)
        state = ScanState.fresh(cfg)
        state.last_n = 5000
        state.count = 5000
        state.min_n, state.min_num, state.min_den = 5000, 4 ** 5000 % 3 ** 5000, 3 ** 5000
        state.min_margin_n, state.min_margin = 77, (123456789, -60)
        state.hits = [4, 5]
        save_checkpoint(checkpoint_path, cfg, state)

        loaded = load_checkpoint(checkpoint_path, cfg)
        assert loaded == state
        with open(checkpoint_path, encoding="utf-8") as fh:
            assert fh.readline().rstrip("\n") == MAGIC

    def test_missing_and_empty_files_start_fresh(self, scan_config, checkpoint_path):
        cfg = scan_config(n_min=10, checkpoint_path=checkpoint_path)
        assert load_checkpoint(checkpoint_path, cfg).last_n == 9
        open(checkpoint_path, "w").close()
        assert load_checkpoint(checkpoint_path, cfg) == ScanState.fresh(cfg)

    def test_bad_header(self, scan_config, checkpoint_path):
        with open(checkpoint_path, "w", encoding="utf-8") as fh:
            fh.write("not a checkpoint\n{}\n")
        with pytest.raises(ResumeError):
            load_checkpoint(checkpoint_path, scan_config())

    def test_corrupt_body(self, scan_config, checkpoint_path):
        with open(checkpoint_path, "w", encoding="utf-8") as fh:
            fh.write(MAGIC + "\n{\"last_n\": 12,")
        with pytest.raises(ResumeError):
            load_checkpoint(checkpoint_path, scan_config())

    def test_missing_fields(self, scan_config, checkpoint_path):
        cfg = scan_config()
        with open(checkpoint_path, "w", encoding="utf-8") as fh:
            fh.write(MAGIC + "\n" + json.dumps({"config_hash": cfg.config_hash()}) + "\n")
        with pytest.raises(ResumeError):
            load_checkpoint(checkpoint_path, cfg)

    def test_changed_threshold_is_refused_with_diff(self, scan_config, checkpoint_path):
        cfg = scan_config(checkpoint_path=checkpoint_path)
        save_checkpoint(checkpoint_path, cfg, ScanState.fresh(cfg))
        with pytest.raises(ResumeError) as exc:
            load_checkpoint(checkpoint_path, scan_config(threshold="1/2", checkpoint_path=checkpoint_path))
        assert exc.value.diff == {"threshold": {"checkpoint": "1/1000000000", "requested": "1/2"}}

    def test_no_temp_file_left_behind(self, scan_config, checkpoint_path, tmp_path):
        cfg = scan_config(checkpoint_path=checkpoint_path)
        save_checkpoint(checkpoint_path, cfg, ScanState.fresh(cfg))
        assert sorted(p.name for p in tmp_path.iterdir()) == ["scan.ckpt"]


class TestResume:
    """Interrupted and resumed scans reproduce the uninterrupted output."""

    def test_interrupt_and_resume(self, scan_config, checkpoint_path):
        full_rows, full_summary = rows(scan(scan_config(n_max=3000, chunk_size=500)))

        cfg = scan_config(n_max=3000, chunk_size=500, checkpoint_path=checkpoint_path)
        first_rows, partial = rows(scan(cfg, max_chunks=3))
        assert partial["last_n"] == 1500
        second_rows, resumed = rows(scan(cfg, resume=True))

        assert first_rows + second_rows == full_rows
        assert resumed == full_summary

    def test_resume_of_finished_scan_emits_only_summary(self, scan_config, checkpoint_path):
        cfg = scan_config(n_max=600, chunk_size=200, checkpoint_path=checkpoint_path)
        _, done = rows(scan(cfg))
        again_rows, again = rows(scan(cfg, resume=True))
        assert again_rows == []
        assert again == done

    def test_resume_with_different_chunking(self, scan_config, checkpoint_path):
        cfg = scan_config(n_max=2000, chunk_size=400, checkpoint_path=checkpoint_path)
        list(scan(cfg, max_chunks=2))
        rechunked = scan_config(n_max=2000, chunk_size=333, checkpoint_path=checkpoint_path)
        _, resumed = rows(scan(rechunked, resume=True))
        _, full = rows(scan(scan_config(n_max=2000)))
        assert resumed == full
