"""
Configuration and constants for fc-dyck
"""
import logging
import os
import sys
from typing import Dict, Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

LOGGER_NAME = "fc-dyck"

logger = logging.getLogger(LOGGER_NAME)

# Exhaustive searches (weight graphs, relation sweeps) enumerate up to height! words
DEFAULT_MAX_HEIGHT = 10

LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()

DEFAULT_ORIENTATION: str = os.getenv("FC_DYCK_ORIENTATION", "right").lower()

# Sweep orientations of the type-A quiver
ORIENTATION_ALIASES: Dict[str, str] = {
    "right": "right", "->": "right", "forward": "right", "increasing": "right", ">": "right",
    "left": "left", "<-": "left", "backward": "left", "decreasing": "left", "<": "left",
}

# Step spellings accepted for Dyck paths
STEP_ALIASES: Dict[str, str] = {
    "U": "U", "u": "U", "N": "U", "n": "U", "(": "U", "1": "U",
    "D": "D", "d": "D", "S": "D", "s": "D", "E": "D", "e": "D", ")": "D", "0": "D",
}


def max_height() -> int:
    """Height guard for exhaustive searches, read from FC_DYCK_MAX_HEIGHT at call time."""
    raw: Optional[str] = os.getenv("FC_DYCK_MAX_HEIGHT")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_HEIGHT
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring FC_DYCK_MAX_HEIGHT={raw!r}: not an integer")
        return DEFAULT_MAX_HEIGHT
    if value < 0:
        logger.warning(f"Ignoring FC_DYCK_MAX_HEIGHT={value}: must be non-negative")
        return DEFAULT_MAX_HEIGHT
    return value


def setup_logging(level: Optional[str] = None) -> None:
    """Send log records to stderr; stdout is reserved for JSON payloads."""
    logging.basicConfig(
        level=(level or LOG_LEVEL).upper(),
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
