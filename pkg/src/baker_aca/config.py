"""Run limits shared by the exhaustive enumerations."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_CAP = 22
CAP_ENV = "BAKER_ACA_CAP"


class CapExceeded(ValueError):
    """A requested enumeration is larger than the configured limit."""


@dataclass(frozen=True)
class Limits:
    cap: int = DEFAULT_CAP
    sweep_max: int = 12
    index_max: int = 10**7

    @classmethod
    def from_env(cls) -> Limits:
        raw = os.environ.get(CAP_ENV)
        if raw is None:
            return cls()
        return cls(cap=int(raw))


def resolve_cap(cap: int | None) -> int:
    return Limits.from_env().cap if cap is None else cap


def check_cap(n: int, cap: int | None = None, what: str = "state space") -> None:
    limit = resolve_cap(cap)
    if n > limit:
        raise CapExceeded(
            f"{what} of size 2**{n} = {2**n} exceeds the cap 2**{limit}; "
            f"raise it with {CAP_ENV} if you have the memory"
        )
