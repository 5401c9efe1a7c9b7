from __future__ import annotations

from dataclasses import dataclass

from .poly import is_prime

DEFAULT_PRIME = 32003
SECOND_PRIME = 31991


@dataclass(frozen=True)
class RunConfig:
    prime: int = DEFAULT_PRIME
    second_prime: int = SECOND_PRIME
    seed: int = 0
    trials: int = 3
    include_slow: bool = False
    claims: tuple[str, ...] | None = None
    format: str = "text"
    timings: bool = False
    jobs: int = 1

    def __post_init__(self) -> None:
        for p in (self.prime, self.second_prime):
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.format not in ("text", "json", "markdown"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
