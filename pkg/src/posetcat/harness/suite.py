"""Run the property catalog and collect reports."""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

from ..budget import Budget
from ..errors import BudgetExceeded
from ..maps import ContinuousMap
from ..space import FiniteSpace
from .properties import REGISTRY, Skip

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    instances: int = 100
    max_points: int = 5
    max_retries: int = 200
    properties: tuple | None = None
    unfiltered: tuple = ()
    budget: Budget = Budget(map_cap=200_000, open_cap=200_000, power_cap=5_000,
                            cover_node_cap=500_000)
    inject: tuple = ()
    workers: int = 1
    filter_normal: bool = True

    @classmethod
    def from_json(cls, d: dict) -> "SuiteConfig":
        d = dict(d)
        kw = {}
        for k in ("seed", "instances", "max_points", "max_retries", "workers"):
            if k in d:
                kw[k] = int(d.pop(k))
        if "properties" in d:
            p = d.pop("properties")
            kw["properties"] = None if p is None else tuple(p)
        if "unfiltered" in d:
            kw["unfiltered"] = tuple(d.pop("unfiltered"))
        if "budget" in d:
            kw["budget"] = replace(cls.budget, **{k: int(v) for k, v in d.pop("budget").items()})
        if "inject" in d:
            kw["inject"] = tuple((e["property"], json.dumps(e["instance"], sort_keys=True))
                                 for e in d.pop("inject"))
        if d:
            raise ValueError(f"unknown suite config keys: {sorted(d)}")
        return cls(**kw)

    @classmethod
    def load(cls, path) -> "SuiteConfig":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass
class PropertyReport:
    id: str
    statement: str
    instances_run: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    budget_exceeded: int = 0
    skipped: int = 0
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return asdict(self)


@dataclass
class SuiteReport:
    config: dict
    properties: list

    @property
    def ok(self):
        return all(p.ok for p in self.properties)

    @property
    def total_instances(self):
        return sum(p.instances_run for p in self.properties)

    @property
    def total_budget_exceeded(self):
        return sum(p.budget_exceeded for p in self.properties)

    def to_json(self):
        return {"schema_version": SCHEMA_VERSION, "config": self.config,
                "ok": self.ok, "properties": [p.to_json() for p in self.properties]}

    def table(self) -> str:
        rows = [("property", "run", "pass", "fail", "budget", "skip", "sec")]
        for p in self.properties:
            rows.append((p.id, str(p.instances_run), str(p.passed), str(len(p.failures)),
                         str(p.budget_exceeded), str(p.skipped), f"{p.seconds:.1f}"))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(c.ljust(w) if i == 0 else c.rjust(w)
                           for i, (c, w) in enumerate(zip(r, widths))) for r in rows]
        lines.insert(1, "-" * len(lines[0]))
        return "\n".join(lines)


# -- instance (de)serialization ------------------------------------------

def encode_instance(inst: dict) -> dict:
    out = {}
    for k, v in inst.items():
        if isinstance(v, ContinuousMap):
            out[k] = {"map": v.to_json()}
        elif isinstance(v, FiniteSpace):
            out[k] = {"space": v.to_json()}
        else:
            raise TypeError(f"cannot serialize instance field {k!r}")
    return out


def decode_instance(data: dict) -> dict:
    out = {}
    for k, v in data.items():
        if "map" in v:
            out[k] = ContinuousMap.from_json(v["map"])
        else:
            out[k] = FiniteSpace.from_json(v["space"])
    return out


def instance_rng(seed, pid, k) -> random.Random:
    return random.Random(f"{seed}:{pid}:{k}")


def check_instance(pid: str, inst: dict, budget: Budget):
    """Returns ("pass"|"fail"|"budget", detail)."""
    try:
        ok, detail = REGISTRY[pid].check(inst, budget)
    except BudgetExceeded as e:
        return "budget", str(e)
    return ("pass" if ok else "fail"), detail


def replay(pid: str, instance_json: dict, budget: Budget | None = None):
    """Re-run one stored instance in isolation."""
    return check_instance(pid, decode_instance(instance_json), budget or SuiteConfig.budget)


def run_property(pid: str, config: SuiteConfig) -> PropertyReport:
    prop = REGISTRY[pid]
    cfg = replace(config, filter_normal=pid not in config.unfiltered)
    rep = PropertyReport(pid, prop.statement)
    t0 = time.perf_counter()
    cases = []
    for k in range(config.instances):
        rng = instance_rng(config.seed, pid, k)
        try:
            cases.append(prop.make(rng, cfg))
        except Skip:
            rep.skipped += 1
        except BudgetExceeded:
            rep.budget_exceeded += 1
    cases += [decode_instance(json.loads(s)) for p, s in config.inject if p == pid]
    for inst in cases:
        status, detail = check_instance(pid, inst, config.budget)
        rep.instances_run += 1
        if status == "pass":
            rep.passed += 1
        elif status == "budget":
            rep.budget_exceeded += 1
        else:
            rep.failures.append({"instance": encode_instance(inst), "detail": detail})
    rep.seconds = time.perf_counter() - t0
    return rep


def _run_one(args):
    return run_property(*args)


def run_suite(config: SuiteConfig = SuiteConfig(), subset=None) -> SuiteReport:
    ids = subset if subset is not None else config.properties
    ids = sorted(REGISTRY) if ids is None else list(ids)
    unknown = [p for p in ids if p not in REGISTRY]
    if unknown:
        raise ValueError(f"unknown properties: {unknown}")
    if config.workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(config.workers) as ex:
            reports = list(ex.map(_run_one, [(p, config) for p in ids]))
    else:
        reports = [run_property(p, config) for p in ids]
    reports.sort(key=lambda r: r.id)
    cfg = asdict(config)
    cfg["inject"] = [{"property": p, "instance": json.loads(s)} for p, s in config.inject]
    return SuiteReport(cfg, reports)
