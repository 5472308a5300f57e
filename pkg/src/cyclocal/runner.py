"""Execute scenario tasks and render reports.

Each task dispatches to one library operation; its result is a list of
witness strings (canonical polynomial text, indices, verdicts).  A task with
an `expect` clause passes only when the joined witness string matches.  Any
fail or error in a report makes the process exit status nonzero.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from random import Random

from .action import CyclicAction
from .descent import descend, recompose
from .errors import CyclocalError, NotAGenerator, TrivialAction
from .groebner import IdealGens, ideals_equal, is_principal_locally
from .poly import LocalFraction, Poly
from .randpoly import random_poly, random_unit
from .regularity import (
    free_rank_condition,
    invariant_parameters,
    lambda_count,
    p3_inequalities,
    pseudo_reflection_direct,
)
from .scenario import Scenario, Task
from .tower import tower_verify, universal_orbit_ring

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class TaskResult:
    name: str
    status: str
    witnesses: list[str]
    seconds: float

    @property
    def result_string(self) -> str:
        return " | ".join(self.witnesses)


@dataclass
class Report:
    scenario: str
    tasks: list[TaskResult]

    @property
    def ok(self) -> bool:
        return all(t.status == PASS for t in self.tasks)


_UNSET = object()


class _Context:
    def __init__(self, sc: Scenario, seed: int, max_degree: int):
        self.sc = sc
        self.seed = seed
        self.max_degree = max_degree
        self._generator_var = _UNSET

    def action(self) -> CyclicAction:
        if self.sc.action is None:
            raise CyclocalError("task requires an [action] section")
        return self.sc.action

    def generator_var(self) -> str:
        if self._generator_var is _UNSET:
            self._generator_var = self.action().find_augmentation_generator()
        if self._generator_var is None:
            raise NotAGenerator("augmentation ideal is not principal; no generator variable")
        return self._generator_var

    def rng(self) -> Random:
        return Random(self.seed)


def run_scenario(sc: Scenario, seed: int | None = None, max_degree: int = 8) -> Report:
    if seed is None:
        seed = sc.declarations.seed if sc.declarations.seed is not None else 0
    ctx = _Context(sc, seed, max_degree)
    results = []
    for task in sc.tasks:
        start = time.perf_counter()
        try:
            status, witnesses = _HANDLERS[task.name](ctx, task)
        except CyclocalError as exc:
            status, witnesses = ERROR, [f"{type(exc).__name__}: {exc}"]
        if status == PASS and task.expect is not None:
            got = " | ".join(witnesses)
            if got != task.expect:
                status = FAIL
                witnesses = witnesses + [f"expected: {task.expect}"]
        results.append(TaskResult(task.label, status, witnesses,
                                  round(time.perf_counter() - start, 6)))
    return Report(sc.name, results)


# --- individual tasks ---------------------------------------------------------

def _task_validate(ctx: _Context, task: Task):
    ctx.action().validate()
    return PASS, ["valid"]


def _task_augmentation_ideal(ctx: _Context, task: Task):
    ideal = ctx.action().augmentation_ideal()
    return PASS, [g.render() for g in ideal.gens.generators] or ["0"]


def _task_principality(ctx: _Context, task: Task):
    a = ctx.action()
    ideal = a.augmentation_ideal()
    if ideal.is_zero():
        raise TrivialAction("augmentation ideal is zero")
    idx = is_principal_locally(ideal.gens, a.prime)
    witness = ideal.source_vars[idx] if idx is not None else "NotPrincipal"
    return PASS, [witness]


def _task_generator_independence(ctx: _Context, task: Task):
    a = ctx.action()
    ring = a.ring

    def gens_for(t: int) -> IdealGens:
        polys = [a.apply_power(ring.var(v), t) - ring.var(v) for v in ring.variables]
        return IdealGens.make(ring, polys)

    base = gens_for(1)
    witnesses, ok = [], True
    for t in range(1, a.p):
        same = ideals_equal(base, gens_for(t))
        witnesses.append(f"t={t}: {'equal' if same else 'DIFFERENT'}")
        ok = ok and same
    return (PASS if ok else FAIL), witnesses


def _task_tower_verify(ctx: _Context, task: Task):
    a = ctx.action()
    y = a.ring.parse(task.args[0]) if task.args else a.ring.var(ctx.generator_var())
    report = tower_verify(a, y)
    bad = [f"cell ({c.n},{c.i})" for c in report.checks if not c.ok]
    ncells = len(report.checks)
    gen_note = "with generator propagation" if report.generator_checked \
        else "identities only"
    if bad:
        return FAIL, [f"{len(bad)}/{ncells} cells fail ({gen_note}): " + ", ".join(bad)]
    return PASS, [f"all {ncells} cells pass ({gen_note})"]


def _task_decompose(ctx: _Context, task: Task):
    a = ctx.action()
    b = a.ring.parse(task.args[0])
    y = a.ring.var(ctx.generator_var())
    d = descend(a, y, b)
    return PASS, [c.render() for c in d.coefficients]


def _task_min_poly(ctx: _Context, task: Task):
    a = ctx.action()
    coeffs = a.minimal_polynomial(a.ring.var(task.args[0]))
    return PASS, [c.render() for c in coeffs]


def _task_pseudo_reflection(ctx: _Context, task: Task):
    a = ctx.action()
    params = ctx.sc.declarations.parameters
    if params is None:
        params = tuple(a.ring.var(v) for v in a.ring.prime_vars)
    verdict = pseudo_reflection_direct(a, params)
    return PASS, ["true" if verdict else "false"]


def _task_invariant_parameters(ctx: _Context, task: Task):
    a = ctx.action()
    system = invariant_parameters(a, task.args[0], ctx.sc.declarations.parameters)
    ok = pseudo_reflection_direct(a, system.parameters)
    status = PASS if ok else FAIL
    return status, [q.render() for q in system.parameters]


def _task_free_rank(ctx: _Context, task: Task):
    a = ctx.action()
    gens = ctx.sc.declarations.invariant_gens
    if not gens:
        raise CyclocalError("free-rank needs declarations.invariant_gens")
    reports = free_rank_condition(a, gens, int(task.args[0]))
    witnesses = [f"n={r.n}: dimB={r.dim_ring} dimA={r.dim_invariants} "
                 f"{'ok' if r.ok else 'MISMATCH'}" for r in reports]
    return (PASS if all(r.ok for r in reports) else FAIL), witnesses


def _task_lemma3_universal(ctx: _Context, task: Task):
    p = int(task.args[0])
    a = universal_orbit_ring(p)
    report = tower_verify(a, a.ring.var("u0"))
    bad = [f"({c.n},{c.i})" for c in report.checks if not c.ok]
    if bad:
        return FAIL, [f"p={p}: failing cells " + ", ".join(bad)]
    return PASS, [f"p={p}: all {len(report.checks)} cells pass"]


def _task_lambda_table(ctx: _Context, task: Task):
    n_max, d_max = int(task.args[0]), int(task.args[1])
    witnesses, ok = [], True
    for n in range(n_max + 1):
        row = []
        for d in range(1, d_max + 1):
            value = lambda_count(n, d)
            brute = sum(1 for _ in combinations_with_replacement(range(d), n))
            if value != brute:
                ok = False
            row.append(str(value))
        witnesses.append(f"n={n}: " + " ".join(row))
    return (PASS if ok else FAIL), witnesses


def _task_p3_inequalities(ctx: _Context, task: Task):
    d_max = int(task.args[0])
    witnesses, ok = [], True
    for d in range(2, d_max + 1):
        chk = p3_inequalities(d)
        witnesses.append(f"d={d}: {chk.quadratic} >= {chk.bound}, {chk.cubic} > {chk.bound}")
        ok = ok and chk.ok
    return (PASS if ok else FAIL), witnesses


def _task_calculus(ctx: _Context, task: Task):
    a = ctx.action()
    ring = a.ring
    count = int(task.args[0])
    rng = ctx.rng()
    deg = ctx.max_degree
    for i in range(count):
        f = random_poly(rng, ring, deg, max_terms=5)
        g = random_poly(rng, ring, deg, max_terms=5)
        if a.augment(f + g) != a.augment(f) + a.augment(g):
            return FAIL, [f"additivity fails at instance {i}: f={f}, g={g}"]
        if a.augment(f * g) != a.augment(f) * a.apply(g) + f * a.augment(g):
            return FAIL, [f"product rule fails at instance {i}: f={f}, g={g}"]
        h = random_poly(rng, ring, min(deg, 3), max_terms=3)
        n = 2 + i % 5  # exponents 2..6
        sigma_h = a.apply(h)
        cofactor = ring.zero()
        for j in range(1, n + 1):
            cofactor = cofactor + sigma_h ** (j - 1) * h ** (n - j)
        if a.augment(h ** n) != cofactor * a.augment(h):
            return FAIL, [f"power rule fails at instance {i}: h={h}, n={n}"]
        b1 = random_poly(rng, ring, min(deg, 4), max_terms=4)
        b2 = random_unit(rng, ring, max_degree=3)
        lhs = a.augment_fraction(b1, b2)
        rhs = LocalFraction(a.apply(b1), a.apply(b2)) - LocalFraction(b1, b2)
        if lhs != rhs:
            return FAIL, [f"fraction rule fails at instance {i}: b1={b1}, b2={b2}"]
        if not a.is_invariant(a.trace(f)):
            return FAIL, [f"trace invariance fails at instance {i}: f={f}"]
    return PASS, [f"{count} instances ok (seed={ctx.seed}, max_degree={deg})"]


def _task_descent_roundtrip(ctx: _Context, task: Task):
    a = ctx.action()
    ring = a.ring
    count = int(task.args[0])
    rng = ctx.rng()
    y = ring.var(ctx.generator_var())
    for i in range(count):
        b = random_poly(rng, ring, ctx.max_degree, max_terms=6, allow_zero=True)
        d = descend(a, y, b)
        if recompose(d) != b:
            return FAIL, [f"round-trip fails at instance {i}: b={b}"]
    return PASS, [f"{count} round-trips ok (seed={ctx.seed}, max_degree={ctx.max_degree})"]


_HANDLERS = {
    "validate": _task_validate,
    "augmentation-ideal": _task_augmentation_ideal,
    "principality": _task_principality,
    "generator-independence": _task_generator_independence,
    "tower-verify": _task_tower_verify,
    "decompose": _task_decompose,
    "min-poly": _task_min_poly,
    "pseudo-reflection": _task_pseudo_reflection,
    "invariant-parameters": _task_invariant_parameters,
    "free-rank": _task_free_rank,
    "lemma3-universal": _task_lemma3_universal,
    "lambda-table": _task_lambda_table,
    "p3-inequalities": _task_p3_inequalities,
    "calculus": _task_calculus,
    "descent-roundtrip": _task_descent_roundtrip,
}


# --- rendering -----------------------------------------------------------------

def report_to_obj(report: Report) -> dict:
    return {
        "scenario": report.scenario,
        "tasks": [
            {"name": t.name, "status": t.status,
             "witnesses": t.witnesses, "seconds": t.seconds}
            for t in report.tasks
        ],
    }


def emit_report(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_to_obj(report), indent=2)
    lines = [f"scenario: {report.scenario}"]
    for t in report.tasks:
        lines.append(f"  [{t.status:5s}] {t.name} ({t.seconds:.3f}s)")
        for w in t.witnesses:
            lines.append(f"          {w}")
    n_pass = sum(1 for t in report.tasks if t.status == PASS)
    lines.append(f"  {n_pass}/{len(report.tasks)} tasks passed")
    return "\n".join(lines)


def emit_reports(reports: list[Report], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(
            {"ok": all(r.ok for r in reports),
             "reports": [report_to_obj(r) for r in reports]},
            indent=2)
    return "\n".join(emit_report(r, "text") for r in reports)
