"""Execute claims and collect results in a deterministic order."""

from __future__ import annotations

import json
import time
import traceback
from concurrent.futures import ProcessPoolExecutor

from ..config import RunConfig
from .claims import REGISTRY, get_claim
from .model import Claim, ClaimResult, UnstableResult


def _normalize(value):
    """JSON-shaped copy: tuples become lists, keys become strings."""
    return json.loads(json.dumps(value, sort_keys=False))


def _result(claim: Claim, config: RunConfig, status: str, computed, elapsed: float) -> ClaimResult:
    return ClaimResult(
        claim_id=claim.id, description=claim.description, paper_ref=claim.paper_ref,
        status=status, expected=_normalize(claim.expected), computed=computed,
        elapsed_ms=elapsed,
        seed=config.seed if claim.uses_seed else None,
        prime=config.prime if claim.uses_prime else None)


def run_claim(claim_id: str, config: RunConfig | None = None) -> ClaimResult:
    """Run one claim; exceptions become ``fail`` results with a diagnostic."""
    config = config or RunConfig()
    claim = get_claim(claim_id)
    if claim.cost == "slow" and not config.include_slow:
        return _result(claim, config, "skipped", None, 0.0)
    start = time.perf_counter()
    try:
        computed = _normalize(claim.check(config))
        status = "pass" if computed == _normalize(claim.expected) else "fail"
    except UnstableResult as exc:
        computed, status = _normalize(exc.computed), "unstable"
    except Exception as exc:  # noqa: BLE001 - recorded as a failed claim
        frame = traceback.extract_tb(exc.__traceback__)[-1]
        computed = {"error": f"{type(exc).__name__}: {exc}",
                    "at": f"{frame.name}:{frame.lineno}"}
        status = "fail"
    elapsed = (time.perf_counter() - start) * 1000.0
    return _result(claim, config, status, computed, elapsed)


def selected_ids(config: RunConfig) -> list[str]:
    if config.claims:
        for cid in config.claims:
            get_claim(cid)
        return sorted(set(config.claims))
    return sorted(cid for cid, c in REGISTRY.items() if c.cost == "fast" or config.include_slow)


def _run_pair(args: tuple[str, RunConfig]) -> ClaimResult:
    return run_claim(*args)


def run_all(config: RunConfig | None = None) -> list[ClaimResult]:
    """Run the selected claims (all fast ones by default), ordered by id."""
    config = config or RunConfig()
    ids = selected_ids(config)
    if config.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_pair, [(cid, config) for cid in ids]))
    else:
        results = [run_claim(cid, config) for cid in ids]
    return sorted(results, key=lambda r: r.claim_id)


def export_table() -> str:
    """Tab-separated registry: id, description, paper_ref, expected, cost."""
    lines = ["id\tdescription\tpaper_ref\texpected\tcost"]
    for cid in sorted(REGISTRY):
        c = REGISTRY[cid]
        lines.append("\t".join([cid, c.description, c.paper_ref,
                                json.dumps(_normalize(c.expected)), c.cost]))
    return "\n".join(lines) + "\n"
