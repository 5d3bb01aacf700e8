"""The verification suite as a flat list of independent tasks.

Each task is a plain tuple so it can be shipped to worker processes; the
reports come back in task order whatever the worker count, so the merged
output is byte-stable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cato import check_rho, check_truncation, tpc2_check
from .fock import check_vacuum, verify_relations
from .indexset import Shape, check_defect, check_ideal_identity
from .superdual import DualityContext, verify_superduality

FAMILIES = ("relations", "tpc2", "rho", "ideals", "defect", "vacuum", "truncation", "superdual")

Task = Tuple[str, dict, dict]


def build_tasks(shape: Shape, level: int, families: Iterable[str] = FAMILIES,
                j_window: Optional[Tuple[int, int]] = None) -> List[Task]:
    """Tasks for every level from r_0 (or 1 for rho) up to ``level``."""
    families = set(families)
    unknown = families - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown check families: {sorted(unknown)}")
    if level < shape.r0:
        raise ValueError(f"level {level} is below r_0 = {shape.r0}")
    sh = shape.to_json()
    levels = range(shape.r0, level + 1)
    tasks: List[Task] = []
    for fam in FAMILIES:
        if fam not in families:
            continue
        if fam == "rho":
            tasks += [(fam, sh, {"r": r}) for r in range(1, level + 1)]
        elif fam in ("relations", "defect", "vacuum"):
            tasks += [(fam, sh, {"r": r}) for r in levels]
        elif fam in ("tpc2", "truncation"):
            tasks += [(fam, sh, {"r": r, "j": j}) for r in levels for j in range(1 - r, r)]
        elif fam == "ideals":
            tasks += [(fam, sh, {"r": r, "s": s}) for r in levels for s in (r + 1, r + 2)]
        else:
            for d in levels:
                lo, hi = j_window if j_window else (-d, d)
                tasks.append((fam, sh, {"depth": d, "j_min": lo, "j_max": hi}))
    return tasks


def run_task(task: Task) -> dict:
    fam, sh, params = task
    shape = Shape.from_json(sh)
    if fam == "relations":
        rep = verify_relations(shape, params["r"])
    elif fam == "tpc2":
        rep = tpc2_check(shape, params["r"], params["j"])
    elif fam == "rho":
        rep = check_rho(shape, params["r"])
    elif fam == "ideals":
        rep = check_ideal_identity(shape, params["r"], params["s"])
    elif fam == "defect":
        rep = check_defect(shape, params["r"])
    elif fam == "vacuum":
        rep = check_vacuum(shape, params["r"])
    elif fam == "truncation":
        rep = check_truncation(shape, params["r"], params["j"])
    elif fam == "superdual":
        ctx = DualityContext.of(shape)
        rep = verify_superduality(ctx, params["depth"], range(params["j_min"], params["j_max"] + 1))
    else:
        raise ValueError(f"unknown check family {fam!r}")
    out = rep.to_json()
    out.update(family=fam, shape=sh, params=params)
    return out


def run_tasks(tasks: Sequence[Task], workers: int = 1) -> dict:
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_task, tasks))
    else:
        reports = [run_task(t) for t in tasks]
    summary: Dict[str, dict] = {}
    for rep in reports:
        s = summary.setdefault(rep["family"], {"pass": True, "checks": 0, "tasks": 0})
        s["pass"] = s["pass"] and rep["pass"]
        s["checks"] += rep["checks"]
        s["tasks"] += 1
    return {"pass": all(r["pass"] for r in reports), "reports": reports, "summary": summary}
