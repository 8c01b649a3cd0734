"""Run named laws over instance families and collect the results."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from ..config import limits, override
from ..errors import CapacityError
from .families import FAMILIES
from .laws import LAWS, Instance, PreconditionError, Skip, failure

DEFAULT_FAMILIES = ("left-quasigroups", "quandles", "extensions")


@dataclass
class HarnessResult:
    law: str
    instances: int = 0
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)     # [{"instance", "reason"}]
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict:
        doc = {
            "law": self.law,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
            "skipped": self.skipped,
        }
        if timing:
            doc["elapsed"] = round(self.elapsed, 3)
        return doc


def results_json(results: Sequence[HarnessResult], timing: bool = False) -> str:
    """Serialized results; without timing the output depends only on the inputs."""
    return json.dumps([r.to_dict(timing) for r in results], sort_keys=True, indent=2) + "\n"


def check_instance(inst: Instance, law_names: Sequence[str]) -> list[tuple]:
    """(law, status, payload, seconds) for each law applicable to inst.

    status is "ok", "fail" (payload: failure list) or "skip" (payload: reason).
    PreconditionError and CapacityError propagate.
    """
    out = []
    for name in law_names:
        law = LAWS[name]
        if law.extensions_only and inst.ext is None:
            continue
        t = time.perf_counter()
        try:
            fails = law.check(inst)
            status, payload = ("fail", fails) if fails else ("ok", None)
        except Skip as s:
            status, payload = "skip", s.reason
        except (PreconditionError, CapacityError):
            raise
        except Exception as e:  # a crash inside a law is a failure of that law
            status, payload = "fail", [failure(inst, f"{type(e).__name__}: {e}")]
        out.append((name, status, payload, time.perf_counter() - t))
    return out


def _worker(args):
    insts, law_names, limit_values = args
    with override(**limit_values):
        return [check_instance(i, law_names) for i in insts]


def run_laws(instances: Sequence[Instance], law_names: Iterable[str] | None = None,
             jobs: int = 1) -> list[HarnessResult]:
    names = list(LAWS) if law_names is None else list(law_names)
    unknown = [n for n in names if n not in LAWS]
    if unknown:
        raise ValueError(f"unknown law(s): {', '.join(unknown)}")
    if jobs <= 1 or len(instances) < 2:
        per_instance = [check_instance(i, names) for i in instances]
    else:
        chunk = max(1, len(instances) // (jobs * 8))
        batches = [instances[k:k + chunk] for k in range(0, len(instances), chunk)]
        lv = asdict(limits)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_instance = [r for batch in pool.map(_worker, [(b, names, lv) for b in batches]) for r in batch]
    results = {n: HarnessResult(n) for n in names}
    for inst, rows in zip(instances, per_instance):
        for name, status, payload, secs in rows:
            r = results[name]
            r.instances += 1
            r.elapsed += secs
            if status == "fail":
                r.failures.extend(payload)
            elif status == "skip":
                r.skipped.append({"instance": inst.name, "reason": payload})
    return [results[n] for n in names]


def build_instances(families: Iterable[str] = DEFAULT_FAMILIES, max_order: int = 3,
                    quandle_order: int = 5) -> list[Instance]:
    out = []
    for fam in families:
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
        if fam == "left-quasigroups":
            out.extend(FAMILIES[fam](max_order))
        elif fam == "quandles":
            out.extend(FAMILIES[fam](quandle_order))
        else:
            out.extend(FAMILIES[fam]())
    return out


def verify_theorems(families: Iterable[str] = DEFAULT_FAMILIES, laws: Iterable[str] | None = None,
                    jobs: int = 1, max_order: int = 3, quandle_order: int = 5) -> list[HarnessResult]:
    return run_laws(build_instances(families, max_order, quandle_order), laws, jobs)
