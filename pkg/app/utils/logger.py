import json
import logging
import sys
import time
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterator

from colorama import Fore, Style, init

init(autoreset=True)

STAGE_COLORS = {
    "Curve": Fore.CYAN,
    "GroupLaw": Fore.GREEN,
    "Birational": Fore.YELLOW,
    "Substitution": Fore.MAGENTA,
    "Normalize": Fore.BLUE,
    "Verify": Fore.GREEN,
    "Audit": Fore.YELLOW,
    "Search": Fore.CYAN,
    "System": Fore.WHITE,
}

STAGE_PREFIXES = {
    "Curve": "[LOG :: CURVE]",
    "GroupLaw": "[LOG :: GROUP_LAW]",
    "Birational": "[LOG :: BIRATIONAL]",
    "Substitution": "[LOG :: SUBSTITUTION]",
    "Normalize": "[LOG :: NORMALIZE]",
    "Verify": "[LOG :: VERIFY]",
    "Audit": "[LOG :: AUDIT]",
    "Search": "[LOG :: SEARCH]",
    "System": "[LOG :: SYSTEM]",
}


class DerivationLogger:
    """Stage-tagged trace of one command; colored lines go to stderr."""

    def __init__(self, log_dir: str = "logs", persist: bool = False, quiet: bool = False):
        self.log_dir = Path(log_dir)
        self.persist = persist
        self.quiet = quiet
        if persist:
            self.log_dir.mkdir(parents=True, exist_ok=True)
        self._setup_logger()
        self.reset()

    def _setup_logger(self):
        logger = logging.getLogger("biquad.trace")
        logger.setLevel(logging.INFO)
        logger.propagate = False
        if not logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter('%(message)s'))
            logger.addHandler(handler)
        self.logger = logger

    def reset(self, command: str = ""):
        started = datetime.now(timezone.utc)
        self.log_file = self.log_dir / f"derivation_log_{started.strftime('%Y%m%d_%H%M%S_%f')}.json"
        self.log_data: Dict[str, Any] = {
            "command": command,
            "timestamp": started.isoformat(),
            "events": [],
            "metrics": {"timings_ms": {}},
        }

    def spawn(self, command: str) -> "DerivationLogger":
        """A fresh trace for one command, sharing this logger's output settings."""
        trace = DerivationLogger(log_dir=str(self.log_dir), persist=self.persist, quiet=self.quiet)
        trace.reset(command=command)
        return trace

    def log(self, stage: str, message: str, data: Dict[str, Any] | None = None):
        self.log_data["events"].append({
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "stage": stage,
            "message": message,
            "data": data or {},
        })

        if not self.quiet:
            prefix = STAGE_PREFIXES.get(stage, f"[LOG :: {stage.upper()}]")
            formatted_msg = f"{STAGE_COLORS.get(stage, Fore.WHITE)}{prefix}{Style.RESET_ALL} {message}"
            if data:
                formatted_msg += f" | Data: {json.dumps(data, default=str)}"
            self.logger.info(formatted_msg)
        self._save_log()

    def log_metric(self, metric_name: str, value: Any):
        self.log_data["metrics"][metric_name] = value

    @contextmanager
    def timed(self, stage: str, label: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            elapsed = (time.perf_counter() - started) * 1000
            self.log_data["metrics"]["timings_ms"][label] = round(elapsed, 3)
            self.log(stage, f"[METRIC :: TIME] {label} took {elapsed:.2f}ms")

    def get_log_data(self) -> Dict[str, Any]:
        return self.log_data.copy()

    def _save_log(self):
        if not self.persist:
            return
        try:
            with open(self.log_file, 'w', encoding='utf-8') as f:
                json.dump(self.log_data, f, indent=2, default=str)
        except OSError as e:
            self.logger.warning(f"Error saving log: {e}")
