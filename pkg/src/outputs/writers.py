"""Output files with a provenance header.

Every artifact starts with the same metadata: tool, version, command, the
full parameter echo and the seed. No timestamps, so reruns with the same
flags write byte-identical files.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import polars as pl

from ..config import TOOL_NAME, TOOL_VERSION

logger = logging.getLogger(__name__)


def build_metadata(command: str, params: Dict[str, Any], seed: Optional[int] = None) -> Dict[str, Any]:
    meta: Dict[str, Any] = {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "command": command,
        "params": params,
    }
    if seed is not None:
        meta["seed"] = int(seed)
    return meta


def header_lines(metadata: Dict[str, Any]) -> List[str]:
    """``key=value`` lines for CSV headers; nested values as compact sorted JSON."""
    lines = []
    for key in ("tool", "version", "command", "params", "seed"):
        if key not in metadata:
            continue
        value = metadata[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        lines.append(f"{key}={value}")
    return lines


def write_json(doc: Dict[str, Any], path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if metadata:
        doc = {**doc, "metadata": metadata}
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(doc, f, indent=2, sort_keys=True, ensure_ascii=False)
        f.write("\n")
    logger.info(f"[output] wrote {path}")
    return path


def write_csv(df: pl.DataFrame, path: Union[str, Path], metadata: Optional[Dict[str, Any]] = None) -> Path:
    """Float columns at 17 significant digits, preceded by ``# key=value`` lines."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = df.write_csv(None, float_scientific=True, float_precision=16)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in header_lines(metadata or {}):
            f.write(f"# {line}\n")
        f.write(body)
    logger.info(f"[output] wrote {path} ({df.height} rows)")
    return path
