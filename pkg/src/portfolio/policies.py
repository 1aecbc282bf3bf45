"""Rebalancing schedules."""

from __future__ import annotations

from enum import Enum
from typing import Optional

from ..config import POLICY_NAMES
from ..errors import UnknownPolicy


class RebalancePolicy(Enum):
    MONTHLY = ("monthly", 1)
    QUARTERLY = ("quarterly", 3)
    SEMIANNUAL = ("semiannual", 6)
    ANNUAL = ("annual", 12)
    BUY_AND_HOLD = ("buyhold", None)

    def __init__(self, label: str, period: Optional[int]):
        self.label = label
        self.period = period

    def rebalances_at(self, month: int) -> bool:
        """Month 0 always rebalances; afterwards every ``period`` months."""
        if month == 0:
            return True
        return self.period is not None and month % self.period == 0

    @classmethod
    def from_name(cls, name: str) -> "RebalancePolicy":
        key = (name or "").strip().lower().replace("-", "").replace("_", "")
        aliases = {"semiannually": "semiannual", "annually": "annual", "buyandhold": "buyhold"}
        key = aliases.get(key, key)
        for policy in cls:
            if policy.label == key:
                return policy
        raise UnknownPolicy(f"unknown policy {name!r}; expected one of {'|'.join(POLICY_NAMES)}")
