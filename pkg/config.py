"""
Configuration management for the Boolean symmetry detector.

Handles resource bounds, rendering precision, logging and batch settings.
Every value can be overridden through environment variables (or a .env file).
"""

import os
from pathlib import Path
from typing import List
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

TOOL_VERSION = "1.0.0"

# Resource bounds
MAX_VARS = int(os.getenv("SYMDETECT_MAX_VARS", "64"))
TRUTH_TABLE_MAX_VARS = int(os.getenv("SYMDETECT_TRUTH_TABLE_MAX_VARS", "24"))
ORACLE_MAX_VARS = int(os.getenv("SYMDETECT_ORACLE_MAX_VARS", "20"))
COND_SET_MAX_VARS = int(os.getenv("SYMDETECT_COND_SET_MAX_VARS", "20"))

# Rendering
ENTROPY_DECIMALS = int(os.getenv("SYMDETECT_ENTROPY_DECIMALS", "2"))
TIME_DECIMALS = 1

# Variable name suggestions (0-100, higher = stricter)
FUZZY_MATCH_THRESHOLD = int(os.getenv("SYMDETECT_FUZZY_MATCH_THRESHOLD", "80"))

# Benchmark batches
BENCH_WORKERS = int(os.getenv("SYMDETECT_BENCH_WORKERS", "1"))

# Circuit file extensions picked up by the bench command
CIRCUIT_EXTENSIONS = {".pla", ".blif", ".tt"}

# Logging configuration
LOG_DIR = os.getenv("SYMDETECT_LOG_DIR", "")
LOG_PATH = os.path.join(LOG_DIR, "symdetect.log") if LOG_DIR else ""
LOG_MAX_BYTES = 10 * 1024 * 1024  # 10MB
LOG_BACKUP_COUNT = 5


def validate_config() -> List[str]:
    """
    Validate configuration and return list of warnings/errors.
    Creates the log directory if one is configured and missing.

    Returns:
        List of warning/error messages
    """
    issues = []

    if MAX_VARS < 0:
        issues.append(f"SYMDETECT_MAX_VARS must be non-negative (got {MAX_VARS})")

    for name, value in [
        ("SYMDETECT_TRUTH_TABLE_MAX_VARS", TRUTH_TABLE_MAX_VARS),
        ("SYMDETECT_ORACLE_MAX_VARS", ORACLE_MAX_VARS),
        ("SYMDETECT_COND_SET_MAX_VARS", COND_SET_MAX_VARS),
    ]:
        if value > MAX_VARS:
            issues.append(f"{name}={value} exceeds SYMDETECT_MAX_VARS={MAX_VARS}")

    if ENTROPY_DECIMALS < 0:
        issues.append(f"SYMDETECT_ENTROPY_DECIMALS must be non-negative (got {ENTROPY_DECIMALS})")

    if BENCH_WORKERS < 1:
        issues.append(f"SYMDETECT_BENCH_WORKERS must be at least 1 (got {BENCH_WORKERS})")

    if not 0 <= FUZZY_MATCH_THRESHOLD <= 100:
        issues.append(f"SYMDETECT_FUZZY_MATCH_THRESHOLD must be in 0..100 (got {FUZZY_MATCH_THRESHOLD})")

    # Check and create log directory
    if LOG_DIR:
        log_dir_path = Path(LOG_DIR)
        if not log_dir_path.exists():
            try:
                log_dir_path.mkdir(parents=True, exist_ok=True)
            except PermissionError:
                issues.append(f"Cannot create log directory: {LOG_DIR} (permission denied)")
            except Exception as e:
                issues.append(f"Error creating log directory: {LOG_DIR} ({e})")

    return issues
