"""Distribution dump: grid metadata plus the probability array, as JSON.

Floats go through ``repr`` (shortest round-trip form, at most 17 significant
digits), so reloading reproduces every probability bit for bit.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..errors import ParseError
from .discretize import DiscretizedDistribution
from .grid import Grid, QubitAllocation

FORMAT_NAME = "qalloc-distribution"


def distribution_to_dict(dist: DiscretizedDistribution, metadata: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    grid = dist.grid
    doc: Dict[str, Any] = {
        "format": FORMAT_NAME,
        "alloc": list(grid.alloc.qubits_per_dim),
        "lows": [float(x) for x in grid.lows],
        "highs": [float(x) for x in grid.highs],
        "num_points": list(grid.num_points),
        "index_layout": "asset 0 in least-significant qubit block",
        "probabilities": [float(p) for p in dist.probabilities],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def distribution_from_dict(doc: Dict[str, Any]) -> DiscretizedDistribution:
    if doc.get("format") != FORMAT_NAME:
        raise ParseError(f"not a {FORMAT_NAME} document")
    try:
        grid = Grid(doc["lows"], doc["highs"], QubitAllocation(tuple(doc["alloc"])))
        return DiscretizedDistribution(grid, doc["probabilities"])
    except KeyError as e:
        raise ParseError(f"distribution document misses field {e}") from e


def save_distribution(
    dist: DiscretizedDistribution, path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(distribution_to_dict(dist, metadata), f, indent=1, sort_keys=True)
        f.write("\n")
    return path


def load_distribution(path: Union[str, Path]) -> DiscretizedDistribution:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read distribution dump {path}: {e}") from e
    return distribution_from_dict(doc)
