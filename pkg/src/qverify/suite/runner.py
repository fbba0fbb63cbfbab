"""Running registered statements, singly or over parameter ranges."""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from ..congruence import (PadicModulus, TrivialModulus, congruent_mod,
                          modulus_build, padic_congruent)
from .registry import StatementKind, get_statement


class UnknownStatement(LookupError):
    pass


class DomainViolation(ValueError):
    pass


@dataclass
class VerificationResult:
    statement_id: str
    params: dict
    holds: Optional[bool]
    modulus_degree: int
    elapsed_ms: int
    warnings: list = field(default_factory=list)
    failed_claims: list = field(default_factory=list)

    def to_record(self):
        return {
            "id": self.statement_id,
            "params": dict(self.params),
            "holds": self.holds,
            "modulus_degree": self.modulus_degree,
            "elapsed_ms": self.elapsed_ms,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_record(cls, record):
        return cls(record["id"], dict(record["params"]), record["holds"],
                   record["modulus_degree"], record["elapsed_ms"], list(record["warnings"]))


@lru_cache(maxsize=256)
def _modulus(kind, n):
    return modulus_build(kind, n)


def _lookup(statement_id):
    stmt = get_statement(statement_id)
    if stmt is None:
        raise UnknownStatement(statement_id)
    return stmt


def _check_params(stmt, value, variant):
    if value is None:
        raise DomainViolation(f"{stmt.id} needs a value for {stmt.param}")
    if not stmt.domain.contains(value):
        raise DomainViolation(f"{stmt.id}: {stmt.param}={value} is outside {stmt.domain.description}")
    if stmt.variants:
        if variant is None:
            variant = stmt.variants[0]
        if variant not in stmt.variants:
            raise DomainViolation(f"{stmt.id}: unknown variant {variant!r}")
    elif variant is not None:
        raise DomainViolation(f"{stmt.id} has no variants")
    return variant


def _judge(claim, value, warnings):
    lhs, rhs = claim.lhs(), claim.rhs()
    mod = claim.modulus
    if mod is None:
        return lhs == rhs
    if isinstance(mod, int):
        return padic_congruent(lhs, rhs, PadicModulus(value, mod))
    try:
        modulus = _modulus(mod, value)
    except TrivialModulus as exc:
        note = f"TrivialModulus: {exc}"
        if note not in warnings:
            warnings.append(note)
        return True
    result = congruent_mod(lhs, rhs, modulus)
    for w in result.warnings:
        if w not in warnings:
            warnings.append(w)
    return result.holds


def _headline_degree(stmt, value):
    if stmt.kind is StatementKind.PADIC:
        return stmt.padic_exponent
    if stmt.modulus_kind is None:
        return 0
    try:
        return _modulus(stmt.modulus_kind, value).degree
    except TrivialModulus:
        return 0


def verify_statement(statement_id, n=None, *, p=None, variant=None):
    """Build every claim of the statement at the given parameter and test it exactly."""
    stmt = _lookup(statement_id)
    value = n if stmt.param == "n" else p
    other = p if stmt.param == "n" else n
    if other is not None:
        raise DomainViolation(f"{stmt.id} is indexed by {stmt.param}")
    variant = _check_params(stmt, value, variant)
    params = {stmt.param: value, "variant": variant}
    warnings, failed = [], []
    start = time.perf_counter()
    for claim in stmt.expand(value, variant):
        if not _judge(claim, value, warnings):
            failed.append(claim.label)
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationResult(stmt.id, params, not failed, _headline_degree(stmt, value),
                              elapsed, warnings, failed)


def _task(args):
    sid, param, value, variant = args
    start = time.perf_counter()
    try:
        kw = {param: value} if param == "p" else {"n": value}
        return verify_statement(sid, variant=variant, **kw)
    except Exception as exc:  # reported as a failed record, never aborts the batch
        elapsed = int((time.perf_counter() - start) * 1000)
        return VerificationResult(sid, {param: value, "variant": variant}, None, 0, elapsed,
                                  [f"Error: {type(exc).__name__}: {exc}"])


def plan_tasks(ids, n_range=(), p_range=()):
    """Deterministic list of (id, param, value, variant) for the cross product."""
    tasks = []
    for sid in ids:
        stmt = _lookup(sid)
        values = n_range if stmt.param == "n" else p_range
        for value in sorted(set(values)):
            if not stmt.domain.contains(value):
                continue
            for variant in stmt.variants or (None,):
                tasks.append((sid, stmt.param, value, variant))
    return tasks


def verify_range(ids, n_range=(), p_range=(), parallelism=1, fail_fast=False):
    """Verify each statement at each applicable parameter; results follow ``plan_tasks`` order."""
    if parallelism < 1:
        raise ValueError("parallelism must be at least 1")
    tasks = plan_tasks(ids, n_range, p_range)
    if parallelism == 1 or len(tasks) <= 1:
        results = []
        for t in tasks:
            results.append(_task(t))
            if fail_fast and results[-1].holds is not True:
                break
        return results
    # Largest parameters first so the slow tasks do not end up last.
    order = sorted(range(len(tasks)), key=lambda i: -tasks[i][2])
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        futures = {i: pool.submit(_task, tasks[i]) for i in order}
        results = [futures[i].result() for i in range(len(tasks))]
    if fail_fast:
        for i, r in enumerate(results):
            if r.holds is not True:
                return results[:i + 1]
    return results
