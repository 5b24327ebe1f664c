"""Named verification suites over the small rational grid.

A suite is a list of zero-argument tasks, each returning one
VerificationReport. Grid points outside an identity's precondition are left
out when the task list is built; any domain error raised while running is
turned into a failing report instead of propagating.
"""
from __future__ import annotations

import functools
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..errors import DomainError, EvaluationError, SingularSeriesError
from ..hermite import hermite2_genfun_check
from ..legendre_family import FamilyTag
from ..report import VerificationReport, sort_reports
from ..umbral import verify_bessel_derivative, verify_bessel_u2n, verify_umbral_hermite, verify_vacuum_identity
from .asymptotic import asymptotic_gegenbauer, asymptotic_hermite, asymptotic_legendre
from .genfun import (
    verify_genfun_chebyshev,
    verify_genfun_gegenbauer,
    verify_genfun_hermite_lacunary,
    verify_genfun_hermite_multivar,
    verify_genfun_humbert,
    verify_genfun_legendre2,
    verify_genfun_multivar_u,
    verify_laplace_route,
    verify_legendre_u2n_integral,
    verify_rainville_lacunary,
    verify_shifted_genfun_chebyshev,
    verify_shifted_genfun_hermite,
)
from .rodriguez import (
    lacunary_p,
    verify_rodriguez_chebyshev,
    verify_rodriguez_hermite,
    verify_rodriguez_legendre,
    verify_rodriguez_legendre_lacunary,
)
from .scaling import (
    dilation_gamma_operator,
    gegenbauer_scaling,
    legendre_scaling_2var,
    legendre_scaling_classical,
    verify_hermite_dilatation,
    verify_hermite_multiplication,
    verify_hermite_recurrence,
    verify_hermite_repeated_derivative,
)

SMALL_GRID: tuple[Fraction, ...] = tuple(
    Fraction(v) for v in ("0", "1", "-1", "1/2", "-1/2", "2", "-3/2")
)
LAMBDAS = (Fraction(1, 2), Fraction(2), Fraction(-3, 2), Fraction(1))
GEGENBAUER_INDICES = (Fraction(1, 2), Fraction(1), Fraction(3))

Task = functools.partial
P = functools.partial


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs shared by every suite; ``None`` means the suite's own default."""

    m: Sequence[int] | None = None
    n: Sequence[int] | None = None
    order: int | None = None
    grid: Sequence[Fraction] = SMALL_GRID
    extra: dict = field(default_factory=dict)


def _pairs(grid):
    return itertools.product(grid, repeat=2)


def _triples(grid):
    return itertools.product(grid, repeat=3)


def _pick(value, default):
    return default if value is None else value


# --- suite builders ------------------------------------------------------------


def genfun_tasks(opts: SuiteOptions) -> list[Task]:
    N = _pick(opts.order, 20)
    grid = opts.grid
    tasks: list[Task] = []
    for x, y in _pairs(grid):
        tasks.append(P(hermite2_genfun_check, x, y, N))
        tasks.append(P(verify_genfun_chebyshev, x, y, N))
        tasks.append(P(verify_genfun_legendre2, x, y, N))
        tasks.extend(P(verify_genfun_humbert, m, x, y, N) for m in (2, 3, 4, 5))
        tasks.extend(P(verify_genfun_hermite_lacunary, m, x, y, N) for m in (2, 3))
        tasks.append(P(verify_genfun_multivar_u, (x, y), N))
    tasks.extend(P(verify_genfun_multivar_u, (x,), N) for x in grid)
    tasks.extend(P(verify_genfun_multivar_u, xs, N) for xs in _triples(grid))
    tasks.extend(P(verify_genfun_hermite_multivar, xs, N) for xs in _triples(grid))
    tasks.extend(P(verify_genfun_gegenbauer, g, x, N) for g in GEGENBAUER_INDICES for x in grid)
    return tasks


def laplace_tasks(opts: SuiteOptions) -> list[Task]:
    ns = _pick(opts.n, range(13))
    nodes = opts.extra.get("nodes", 80)
    grid = opts.grid
    families = [FamilyTag.chebyshev_u(), FamilyTag.humbert(3), FamilyTag.legendre2()]
    tasks: list[Task] = []
    for n in ns:
        for tag in families:
            tasks.extend(P(verify_laplace_route, tag, n, xy, nodes=nodes) for xy in _pairs(grid))
        for gamma in GEGENBAUER_INDICES:
            tag = FamilyTag.gegenbauer(gamma)
            tasks.extend(P(verify_laplace_route, tag, n, (x,), nodes=nodes) for x in grid)
        tasks.extend(P(verify_legendre_u2n_integral, n, x, nodes=nodes) for x in grid)
    return tasks


def rodriguez_chebyshev_tasks(opts: SuiteOptions) -> list[Task]:
    ms = _pick(opts.m, range(7))
    tasks = []
    for x, y, t in _triples(opts.grid):
        if 1 + lacunary_p(x, y, 2)(t) != 0:
            tasks.extend(P(verify_rodriguez_chebyshev, m, x, y, t) for m in ms)
    return tasks


def rodriguez_hermite_tasks(opts: SuiteOptions) -> list[Task]:
    ms = _pick(opts.m, range(7))
    order = _pick(opts.order, 12)
    lacunarities = opts.extra.get("lacunarities", (2, 3))
    return [
        P(verify_rodriguez_hermite, m, n, x, y, t, max(order, m))
        for x, y, t in _triples(opts.grid)
        for n in lacunarities
        for m in ms
    ]


def rodriguez_legendre_tasks(opts: SuiteOptions) -> list[Task]:
    ms = _pick(opts.m, range(5))
    tasks = []
    for x, y, t in _triples(opts.grid):
        if 1 + lacunary_p(x, y, 2)(t) > 0:
            tasks.extend(P(verify_rodriguez_legendre, m, x, y, t) for m in ms)
    return tasks


def rodriguez_legendre_lacunary_tasks(opts: SuiteOptions) -> list[Task]:
    ns = _pick(opts.n, _pick(opts.m, range(5)))
    lacunarities = opts.extra.get("lacunarities", (2, 3))
    tasks = []
    for x, y, t in _triples(opts.grid):
        for lac in lacunarities:
            if 1 + lacunary_p(x, y, lac)(t) > 0:
                tasks.extend(P(verify_rodriguez_legendre_lacunary, n, lac, x, y, t) for n in ns)
    return tasks


def shifted_hermite_tasks(opts: SuiteOptions) -> list[Task]:
    N = _pick(opts.order, 9)
    ls = _pick(opts.n, range(4))
    return [P(verify_shifted_genfun_hermite, l, x, y, N) for l in ls for x, y in _pairs(opts.grid)]


def shifted_chebyshev_tasks(opts: SuiteOptions) -> list[Task]:
    N = _pick(opts.order, 9)
    ls = _pick(opts.n, range(4))
    return [P(verify_shifted_genfun_chebyshev, l, x, y, N) for l in ls for x, y in _pairs(opts.grid)]


def rainville_tasks(opts: SuiteOptions) -> list[Task]:
    N = _pick(opts.order, 9)
    ls = _pick(opts.n, range(4))
    ms = [m for m in _pick(opts.m, (2, 3)) if m >= 2]
    return [P(verify_rainville_lacunary, l, m, x, y, N) for l in ls for m in ms for x, y in _pairs(opts.grid)]


def scaling_tasks(opts: SuiteOptions) -> list[Task]:
    ns = _pick(opts.n, range(13))
    lambdas = opts.extra.get("lambdas", LAMBDAS)
    tasks: list[Task] = []
    for n in ns:
        for lam in lambdas:
            for x in opts.grid:
                tasks.append(P(legendre_scaling_classical, n, lam, x))
                tasks.extend(P(gegenbauer_scaling, n, g, lam, x) for g in GEGENBAUER_INDICES)
            tasks.extend(P(legendre_scaling_2var, n, lam, x, y) for x, y in _pairs(opts.grid))
    return tasks


def hermite_properties_tasks(opts: SuiteOptions) -> list[Task]:
    ns = _pick(opts.n, range(13))
    lambdas = opts.extra.get("lambdas", LAMBDAS)
    tasks: list[Task] = []
    for n in ns:
        for lam in lambdas:
            tasks.append(P(verify_hermite_dilatation, n, lam))
            tasks.append(P(verify_hermite_multiplication, n, lam))
        tasks.extend(P(verify_hermite_repeated_derivative, n, r) for r in range(n + 1))
    n_max = max(ns, default=0)
    tasks.extend(P(verify_hermite_recurrence, n_max, x, y) for x, y in _pairs(opts.grid))
    return tasks


def umbral_tasks(opts: SuiteOptions) -> list[Task]:
    n_max = max(_pick(opts.n, range(21)), default=0)
    order = _pick(opts.order, 24)
    tasks: list[Task] = [P(verify_umbral_hermite, n_max, x, y) for x, y in _pairs(opts.grid)]
    tasks.extend(P(verify_vacuum_identity, y, order) for y in opts.grid)
    for alpha, beta, x in _triples(opts.grid):
        # the partial sums are only checked where the series converges quickly
        if abs(alpha * x) + abs(beta * x * x) <= 2:
            tasks.append(P(verify_bessel_u2n, alpha, beta, x, 40))
            tasks.append(P(verify_bessel_derivative, alpha, beta, x, 40))
    return tasks


def operational_legendre_tasks(opts: SuiteOptions) -> list[Task]:
    ns = _pick(opts.n, range(17))
    return [P(dilation_gamma_operator, n, x, y) for n in ns for x, y in _pairs(opts.grid)]


ASYMPTOTIC_DEFAULTS = {
    "hermite_points": ((1, 1), (2, 1), (1, 0)),
    "hermite_ns": (8, 16, 32, 64),
    "legendre_points": ((1, 1), (2, 1), (1, 0)),
    "legendre_ns": (8, 16, 32),
    "gegenbauer_x": 1,
    "gegenbauer_ns": (1, 2, 3),
    "gammas": (10, 100, 1000),
}


def asymptotic_tasks(opts: SuiteOptions) -> list[Task]:
    cfg = {**ASYMPTOTIC_DEFAULTS, **opts.extra}
    tasks: list[Task] = []
    tasks.extend(P(asymptotic_hermite, x, y, tuple(cfg["hermite_ns"])) for x, y in cfg["hermite_points"])
    tasks.extend(P(asymptotic_legendre, x, y, tuple(cfg["legendre_ns"])) for x, y in cfg["legendre_points"])
    tasks.extend(
        P(asymptotic_gegenbauer, cfg["gegenbauer_x"], n, tuple(cfg["gammas"])) for n in cfg["gegenbauer_ns"]
    )
    return tasks


SUITES: dict[str, Callable[[SuiteOptions], list[Task]]] = {
    "genfun": genfun_tasks,
    "laplace": laplace_tasks,
    "rodriguez-chebyshev": rodriguez_chebyshev_tasks,
    "rodriguez-hermite": rodriguez_hermite_tasks,
    "rodriguez-legendre": rodriguez_legendre_tasks,
    "rodriguez-legendre-lacunary": rodriguez_legendre_lacunary_tasks,
    "shifted-hermite": shifted_hermite_tasks,
    "shifted-chebyshev": shifted_chebyshev_tasks,
    "rainville": rainville_tasks,
    "scaling": scaling_tasks,
    "hermite-properties": hermite_properties_tasks,
    "umbral": umbral_tasks,
    "operational-legendre": operational_legendre_tasks,
    "asymptotic": asymptotic_tasks,
}
SUITE_NAMES = (*SUITES, "all")


def build_tasks(name: str, opts: SuiteOptions | None = None) -> list[Task]:
    opts = opts or SuiteOptions()
    if name == "all":
        return [t for builder in SUITES.values() for t in builder(opts)]
    try:
        builder = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}") from None
    return builder(opts)


def _run_one(task: Task) -> VerificationReport:
    try:
        return task()
    except (DomainError, SingularSeriesError, EvaluationError) as exc:
        params = {f"arg{i}": v for i, v in enumerate(task.args)}
        params.update(task.keywords)
        note = f"{task.func.__name__}: {type(exc).__name__}: {exc}"
        return VerificationReport("domain-error", params, False, note=note)


def run_suite(name: str, opts: SuiteOptions | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Run a suite and return its reports in a deterministic order."""
    tasks = build_tasks(name, opts)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, tasks))
    else:
        reports = [_run_one(t) for t in tasks]
    return sort_reports(reports)
