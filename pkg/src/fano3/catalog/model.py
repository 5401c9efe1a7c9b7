from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

JSONValue = Any


class UnknownClaimError(KeyError):
    pass


class UnstableResult(Exception):
    """Raised by a check whose randomized samples disagree."""

    def __init__(self, computed: JSONValue) -> None:
        super().__init__(f"unstable: {computed!r}")
        self.computed = computed


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    paper_ref: str
    kind: str          # symbolic | chow | lattice | zerodim | birat | arithmetic
    expected: JSONValue
    entry_point: str
    check: Callable = field(repr=False, compare=False)
    parameters: dict = field(default_factory=dict, compare=False)
    cost: str = "fast"
    uses_seed: bool = False
    uses_prime: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("symbolic", "chow", "lattice", "zerodim", "birat", "arithmetic"):
            raise ValueError(f"unknown claim kind {self.kind!r}")
        if self.cost not in ("fast", "slow"):
            raise ValueError(f"unknown cost {self.cost!r}")


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    description: str
    paper_ref: str
    status: str         # pass | fail | skipped | unstable
    expected: JSONValue
    computed: JSONValue
    elapsed_ms: float
    seed: int | None
    prime: int | None

    def to_json_dict(self, timings: bool = False) -> dict:
        return {
            "claim_id": self.claim_id,
            "description": self.description,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "elapsed_ms": round(self.elapsed_ms, 3) if timings else None,
            "seed": self.seed,
            "prime": self.prime,
        }


@dataclass(frozen=True)
class LabeledTerm:
    label: str
    value: int
    coefficient: int = 1
    source: str = "stated"   # stated | computed | given | unlabeled | implementer reading


@dataclass(frozen=True)
class LedgerEntry:
    """``total == sum(coefficient * value)`` over labeled terms."""

    name: str
    total: int
    terms: tuple[LabeledTerm, ...]

    def balance(self) -> int:
        return sum(t.coefficient * t.value for t in self.terms)

    def holds(self) -> bool:
        return self.balance() == self.total

    def render(self) -> str:
        parts = []
        for t in self.terms:
            sign = "-" if t.coefficient < 0 else "+"
            mag = abs(t.coefficient)
            body = f"{mag}*{t.value}" if mag != 1 else str(t.value)
            parts.append(f"{sign} {body} [{t.label}]")
        text = " ".join(parts)
        return f"{self.total} = {text[2:] if text.startswith('+ ') else text}"
