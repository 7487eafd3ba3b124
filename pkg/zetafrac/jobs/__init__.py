from zetafrac.jobs.checkpoint_store import ScanState, load_checkpoint, save_checkpoint
from zetafrac.jobs.scanner import scan
from zetafrac.jobs.schemas import ScanConfig, ScanRecord, ScanSummary, ThresholdMode
from zetafrac.jobs.tasks import scan_chunk, verify_range

__all__ = [
    "ScanConfig",
    "ScanRecord",
    "ScanState",
    "ScanSummary",
    "ThresholdMode",
    "load_checkpoint",
    "save_checkpoint",
    "scan",
    "scan_chunk",
    "verify_range",
]
