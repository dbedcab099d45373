import csv
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

from errors import BadParameter
from simplex import ProbabilityDistribution, validate

logger = logging.getLogger(__name__)


def load_json(filename: str):
    with open(filename, "r") as f:
        return json.load(f)


def dump_json(data) -> str:
    # json writes floats with repr, which round-trips doubles exactly.
    return json.dumps(data, indent=2, allow_nan=False)


def save_as_json(data, filename: Optional[str] = None):
    """Write to ``filename``, or to stdout when it is None."""
    text = dump_json(data) + "\n"
    if filename is None:
        sys.stdout.write(text)
        return
    with open(filename, "w") as f:
        f.write(text)
    logger.info(f"Saved {filename}")


def load_distribution(filename: str) -> ProbabilityDistribution:
    """Read {"weights": [...]} and validate it."""
    data = load_json(filename)
    if not isinstance(data, dict) or not isinstance(data.get("weights"), list):
        raise BadParameter("input", filename, 'a JSON object {"weights": [...]}')
    return validate(data["weights"])


def save_as_csv(header: Sequence[str], rows: List[Sequence[float]], filename: Optional[str] = None):
    if filename is None:
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        writer.writerows(rows)
        return
    with open(filename, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        writer.writerows(rows)
    logger.info(f"Saved {filename}")


def rows_as_records(header: Sequence[str], rows: List[Sequence[float]]) -> List[Dict[str, float]]:
    return [dict(zip(header, row)) for row in rows]
