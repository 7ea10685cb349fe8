"""Audit trail of verification events.

Every verifier call made through the CLI or the HTTP service can be
appended to a JSON file so that verdicts can be replayed and compared
across runs.
"""

import hashlib
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.utils import config

# Set up logging
logger = logging.getLogger(__name__)


def audit_trail_file() -> Path:
    return Path(config.AUDIT_FILE)


def ensure_logs_directory() -> None:
    """Ensure the directory holding the audit trail exists."""
    audit_trail_file().parent.mkdir(parents=True, exist_ok=True)


def load_audit_trail() -> List[Dict[str, Any]]:
    """
    Load the existing audit trail.

    Returns:
        List of audit trail entries (empty when the file is missing or unreadable)
    """
    path = audit_trail_file()
    if not path.exists():
        return []

    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (json.JSONDecodeError, IOError) as e:
        logger.warning(f"Error loading audit trail: {e}. Starting with empty trail.")
        return []


def save_audit_trail(entries: List[Dict[str, Any]]) -> None:
    """
    Save the audit trail.

    Args:
        entries: List of audit trail entries to save
    """
    ensure_logs_directory()

    try:
        with open(audit_trail_file(), "w", encoding="utf-8") as f:
            json.dump(entries, f, indent=2, ensure_ascii=False)
    except IOError as e:
        logger.error(f"Error saving audit trail: {e}")


def fingerprint(payload: Any) -> str:
    """Short stable hash of a JSON-serializable payload."""
    blob = json.dumps(payload, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


def log_verification(
    operation: str,
    verdict: Any,
    payload: Any = None,
    violated: Optional[str] = None,
    budget: Optional[Dict[str, Any]] = None,
    metadata: Optional[Dict[str, Any]] = None,
    force: bool = False,
) -> Optional[Dict[str, Any]]:
    """
    Append one verification event to the audit trail.

    Args:
        operation: Name of the verifier or search (e.g. "verify_minor_model")
        verdict: Result of the call (bool, count, or short string)
        payload: Input that was verified; only its fingerprint is stored
        violated: First violated clause when the verdict is negative
        budget: Budget snapshot (limit/spent) for searches
        metadata: Additional fields
        force: Write even when auditing is disabled in the configuration

    Returns:
        The stored entry, or None when auditing is disabled or writing failed
    """
    if not (config.AUDIT_ENABLED or force):
        return None

    try:
        audit_trail = load_audit_trail()
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "operation": operation,
            "verdict": verdict,
            "violated": violated,
            "input": fingerprint(payload) if payload is not None else None,
            "budget": budget or {},
            "metadata": metadata or {},
        }
        audit_trail.append(entry)
        save_audit_trail(audit_trail)
        logger.info(f"Logged {operation} -> {verdict} to audit trail")
        return entry
    except Exception as e:
        logger.error(f"Error logging verification to audit trail: {e}")
        return None


def get_audit_trail_stats() -> Dict[str, Any]:
    """
    Summarize the audit trail.

    Returns:
        Dictionary with totals and per-operation verdict counts
    """
    audit_trail = load_audit_trail()

    if not audit_trail:
        return {"total_events": 0, "operations": {}}

    operations: Dict[str, Dict[str, int]] = {}
    for entry in audit_trail:
        op = entry.get("operation", "unknown")
        verdict = str(entry.get("verdict"))
        counts = operations.setdefault(op, {})
        counts[verdict] = counts.get(verdict, 0) + 1

    return {
        "total_events": len(audit_trail),
        "operations": operations,
        "first_event": audit_trail[0].get("timestamp"),
        "last_event": audit_trail[-1].get("timestamp"),
    }
