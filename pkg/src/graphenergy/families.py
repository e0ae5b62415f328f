"""Parameterized equal-energy and border-energy graph families.

Each family identifier (C5_1 .. C5_9, C6_1 .. C6_3) names a parameterized
collection of operator graphs whose energies are provably related: the C5
families produce members of equal order and equal energy, and the C6
families produce graphs whose energy matches the complete graph of the same
order, 2(N-1). Verification computes energies along two routes (closed-form
scale factors and brute-force eigensolves) and reports the comparison.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .formulas import (
    EnergyPrediction,
    known_energy,
    shadow_split_energy_factor,
    split_energy_factor,
)
from .graphs import (
    Graph,
    check_order,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    star_graph,
)
from .operators import (
    generalized_splitting,
    kronecker_product,
    m_shadow,
    shadow_splitting,
)
from .spectral import adjacency_spectrum, verification_tolerance

EQUIENERGETIC = "equienergetic"
BORDERENERGETIC = "borderenergetic"

METHODS = ("formula", "oracle", "both")


class OutOfDomainError(ValueError):
    """Raised when family parameters fall outside the family's domain."""


def default_base() -> Graph:
    """Default base graph for base-parametric families: the 4-cycle."""
    return cycle_graph(4)


def canonical_equienergetic_pair() -> tuple[Graph, Graph]:
    """A stock equienergetic base pair for C5_1: the 4-leaf star and the
    4-cycle plus an isolated vertex (cospectral order-5 graphs)."""
    return star_graph(4), disjoint_union([cycle_graph(4), complete_graph(1)])


@dataclass(frozen=True)
class FamilySpec:
    """A family identifier with bound parameters and optional base graphs.

    `base` feeds the base-parametric families (ignored defaults to the
    4-cycle); `base_pair` feeds C5_1 only. The C6 families construct their
    own bases and reject caller-supplied ones.
    """

    corollary_id: str
    parameters: Mapping[str, int] = field(default_factory=dict)
    base: Graph | None = None
    base_pair: tuple[Graph, Graph] | None = None


@dataclass(frozen=True)
class MemberPlan:
    """One family member: how to build it and what energy to expect."""

    description: str
    order: int
    base: Graph
    prediction: EnergyPrediction
    build: Callable[[], Graph]
    base_energy_closed: float | None = None


@dataclass
class MemberReport:
    description: str
    order: int
    predicted_energy: float | None
    measured_energy: float | None
    target_energy: float | None

    def to_dict(self) -> dict:
        return {
            "description": self.description,
            "order": self.order,
            "predicted_energy": self.predicted_energy,
            "measured_energy": self.measured_energy,
            "target_energy": self.target_energy,
        }


@dataclass
class VerificationReport:
    """Outcome of checking one family instance.

    For border-energy families each member is compared against the complete
    graph of its own order (so `orders_equal` is trivially true and
    `target_energy` carries 2(order-1)); for equal-energy families the
    members are compared against each other and `target_energy` is null.
    """

    corollary_id: str
    kind: str
    parameters: dict[str, int]
    method: str
    tolerance: float | None
    members: list[MemberReport]
    orders_equal: bool | None
    energies_equal: bool | None
    cospectral: list[dict] | None
    verdict: str
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "corollary_id": self.corollary_id,
            "kind": self.kind,
            "parameters": dict(self.parameters),
            "method": self.method,
            "tolerance": self.tolerance,
            "members": [m.to_dict() for m in self.members],
            "orders_equal": self.orders_equal,
            "energies_equal": self.energies_equal,
            "cospectral": self.cospectral,
            "verdict": self.verdict,
            "error": self.error,
        }

    def to_table(self) -> str:
        """Plain-text rendering of the same record `to_dict` serializes.

        The JSON form is the source of truth; this is display only.
        """
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items()) or "-"
        head = f"{self.corollary_id} [{self.kind}]  params: {params}  verdict: {self.verdict.upper()}"
        lines = [head]
        if self.error:
            lines.append(f"  error: {self.error}")
        if self.tolerance is not None:
            lines.append(f"  tolerance: {self.tolerance:g}")
        if self.members:
            rows = [("member", "order", "predicted", "measured", "target")]
            for m in self.members:
                rows.append((
                    m.description,
                    str(m.order),
                    "-" if m.predicted_energy is None else f"{m.predicted_energy:.12g}",
                    "-" if m.measured_energy is None else f"{m.measured_energy:.12g}",
                    "-" if m.target_energy is None else f"{m.target_energy:.12g}",
                ))
            widths = [max(len(r[i]) for r in rows) for i in range(5)]
            for r in rows:
                lines.append(
                    "  " + "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
                )
        if self.orders_equal is not None:
            lines.append(
                f"  orders equal: {self.orders_equal}   energies equal: {self.energies_equal}"
            )
        if self.cospectral:
            flagged = ", ".join(
                f"({c['pair'][0]},{c['pair'][1]})={'yes' if c['cospectral'] else 'no'}"
                for c in self.cospectral
            )
            lines.append(f"  cospectral pairs: {flagged}")
        return "\n".join(lines) + "\n"

    @classmethod
    def skipped(cls, corollary_id, kind, parameters, method, message) -> "VerificationReport":
        return cls(
            corollary_id=corollary_id,
            kind=kind,
            parameters=dict(parameters),
            method=method,
            tolerance=None,
            members=[],
            orders_equal=None,
            energies_equal=None,
            cospectral=None,
            verdict="skipped",
            error=message,
        )


@dataclass(frozen=True)
class Family:
    family_id: str
    kind: str
    param_names: tuple[str, ...]
    summary: str
    plan: Callable[[FamilySpec], list[MemberPlan]]


def _require_params(spec: FamilySpec, names: tuple[str, ...]) -> dict[str, int]:
    given = set(spec.parameters)
    expected = set(names)
    if given != expected:
        missing = sorted(expected - given)
        extra = sorted(given - expected)
        parts = []
        if missing:
            parts.append(f"missing {missing}")
        if extra:
            parts.append(f"unexpected {extra}")
        raise ValueError(
            f"{spec.corollary_id} takes parameters {sorted(expected)}: " + ", ".join(parts)
        )
    out = {}
    for name in names:
        value = spec.parameters[name]
        if value != int(value):
            raise ValueError(f"parameter {name} must be an integer, got {value!r}")
        out[name] = int(value)
    return out


def _domain(condition: bool, message: str) -> None:
    if not condition:
        raise OutOfDomainError(message)


def _base_graph(spec: FamilySpec) -> Graph:
    if spec.base_pair is not None:
        raise ValueError(f"{spec.corollary_id} takes a single base graph, not a pair")
    return spec.base if spec.base is not None else default_base()


def _no_base(spec: FamilySpec) -> None:
    if spec.base is not None or spec.base_pair is not None:
        raise ValueError(f"{spec.corollary_id} constructs its own base graphs")


def _split_member(base: Graph, p: int, q: int, base_label: str = "base",
                  base_energy_closed: float | None = None) -> MemberPlan:
    order = (p + q) * base.order
    check_order(order, f"splitting(p={p},q={q})")
    return MemberPlan(
        description=f"splitting(p={p},q={q}) of {base_label}",
        order=order,
        base=base,
        prediction=EnergyPrediction(split_energy_factor(p, q), "splitting", {"p": p, "q": q}),
        build=lambda: generalized_splitting(base, p, q),
        base_energy_closed=base_energy_closed,
    )


def _shadow_split_member(base: Graph, c: int, k: int, base_label: str = "base",
                         base_energy_closed: float | None = None) -> MemberPlan:
    order = (c + k) * base.order
    check_order(order, f"shadow-splitting(c={c},k={k})")
    return MemberPlan(
        description=f"shadow-splitting(c={c},k={k}) of {base_label}",
        order=order,
        base=base,
        prediction=EnergyPrediction(
            shadow_split_energy_factor(c, k), "shadow-splitting", {"c": c, "k": k}
        ),
        build=lambda: shadow_splitting(base, c, k),
        base_energy_closed=base_energy_closed,
    )


def _shadow_member(base: Graph, m: int) -> MemberPlan:
    order = m * base.order
    check_order(order, f"shadow(m={m})")
    return MemberPlan(
        description=f"shadow(m={m}) of base",
        order=order,
        base=base,
        prediction=EnergyPrediction(known_energy("shadow", m), "shadow", {"m": m}),
        build=lambda: m_shadow(base, m),
    )


def _kron_complete_member(base: Graph, r: int) -> MemberPlan:
    order = base.order * r
    check_order(order, f"kron with complete({r})")
    return MemberPlan(
        description=f"kron of base with complete({r})",
        order=order,
        base=base,
        prediction=EnergyPrediction(known_energy("complete", r), "kron-complete", {"n": r}),
        build=lambda: kronecker_product(base, complete_graph(r)),
    )


def _kron_bipartite_member(base: Graph, r: int, base_first: bool) -> MemberPlan:
    order = base.order * 2 * r
    check_order(order, f"kron with complete-bipartite({r},{r})")
    if base_first:
        description = f"kron of base with complete-bipartite({r},{r})"
        build = lambda: kronecker_product(base, complete_bipartite(r, r))
    else:
        description = f"kron of complete-bipartite({r},{r}) with base"
        build = lambda: kronecker_product(complete_bipartite(r, r), base)
    return MemberPlan(
        description=description,
        order=order,
        base=base,
        prediction=EnergyPrediction(
            known_energy("complete-bipartite", r, r), "kron-complete-bipartite", {"m": r, "n": r}
        ),
        build=build,
    )


def _plan_c5_1(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("p", "q"))
    if spec.base is not None:
        raise ValueError("C5_1 takes a base pair, not a single base graph")
    pair = spec.base_pair if spec.base_pair is not None else canonical_equienergetic_pair()
    g1, g2 = pair
    _domain(g1.order == g2.order, "the base pair must share one order")
    p, q = params["p"], params["q"]
    return [
        _split_member(g1, p, q, base_label="first base"),
        _split_member(g2, p, q, base_label="second base"),
    ]


def _plan_c5_2(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("t", "m", "k"))
    t, m, k = params["t"], params["m"], params["k"]
    _domain(t >= 1 and m >= 1, f"C5_2 needs t,m >= 1, got t={t}, m={m}")
    _domain(k in (1, -1), f"C5_2 needs k in {{1, -1}}, got k={k}")
    p1 = (5 * t - 2) ** 2 * m + k * (5 * t - 2)
    q1 = m
    p2 = 5 * t * t * m + k * t
    q2 = 5 * (2 * t - 1) ** 2 * m + k * (4 * t - 2)
    _domain(
        min(p1, q1, p2, q2) >= 1,
        f"C5_2 derived parameters must be >= 1, got p1={p1}, q1={q1}, p2={p2}, q2={q2}",
    )
    base = _base_graph(spec)
    return [_split_member(base, p1, q1), _split_member(base, p2, q2)]


def _plan_c5_3(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("m", "t"))
    m, t = params["m"], params["t"]
    _domain(m > t >= 1, f"C5_3 needs m > t >= 1, got m={m}, t={t}")
    base = _base_graph(spec)
    return [
        _shadow_split_member(base, m + t, 2 * m - t),
        _shadow_split_member(base, 3 * m - t, t),
    ]


def _plan_c5_4(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("p", "q"))
    p, q = params["p"], params["q"]
    _domain(p >= 1 and q >= 1, f"C5_4 needs p,q >= 1, got p={p}, q={q}")
    base = _base_graph(spec)
    return [_split_member(base, p, q), _shadow_member(base, p + q)]


def _plan_c5_5(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("c", "k"))
    c, k = params["c"], params["k"]
    _domain(c >= 1 and k >= 1, f"C5_5 needs c,k >= 1, got c={c}, k={k}")
    base = _base_graph(spec)
    return [_shadow_split_member(base, c, k), _shadow_member(base, c + k)]


def _plan_c5_6(spec: FamilySpec) -> list[MemberPlan]:
    _require_params(spec, ())
    base = _base_graph(spec)
    return [_split_member(base, 2, 1), _kron_complete_member(base, 3)]


def _plan_c5_7(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("m",))
    m = params["m"]
    _domain(m >= 1, f"C5_7 needs m >= 1, got m={m}")
    base = _base_graph(spec)
    return [
        _split_member(base, 2 * m, 8 * m - 2),
        _kron_bipartite_member(base, 5 * m - 1, base_first=True),
    ]


def _plan_c5_8(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("m",))
    m = params["m"]
    _domain(m >= 1, f"C5_8 needs m >= 1, got m={m}")
    base = _base_graph(spec)
    return [
        _split_member(base, 3 * m + 1, 12 * m + 2),
        _shadow_split_member(base, 5 * m + 1, 10 * m + 2),
    ]


def _plan_c5_9(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("t",))
    t = params["t"]
    _domain(t >= 1, f"C5_9 needs t >= 1, got t={t}")
    base = _base_graph(spec)
    return [
        _shadow_split_member(base, 10 * t - 4, 20 * t - 8),
        _shadow_member(base, 30 * t - 12),
        _kron_bipartite_member(base, 15 * t - 6, base_first=False),
        _split_member(base, 6 * t - 2, 24 * t - 10),
    ]


def _plan_c6_1(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("k",))
    _no_base(spec)
    k = params["k"]
    _domain(k >= 1, f"C6_1 needs k >= 1, got k={k}")
    base = complete_graph(3)
    closed = known_energy("complete", 3)
    return [
        _split_member(base, k + 1, k, base_label="complete(3)", base_energy_closed=closed),
        _split_member(base, 9 * k + 6, k + 1, base_label="complete(3)", base_energy_closed=closed),
    ]


def _plan_c6_2(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("t",))
    _no_base(spec)
    t = params["t"]
    _domain(t >= 1, f"C6_2 needs t >= 1, got t={t}")
    r = 3 * t + 4
    base = complete_graph(r)
    return [
        _shadow_split_member(
            base,
            (t + 1) ** 2,
            t * (2 * t + 1),
            base_label=f"complete({r})",
            base_energy_closed=known_energy("complete", r),
        )
    ]


def _plan_c6_3(spec: FamilySpec) -> list[MemberPlan]:
    params = _require_params(spec, ("t",))
    _no_base(spec)
    t = params["t"]
    _domain(t >= 1, f"C6_3 needs t >= 1, got t={t}")
    small, large = 3 * t + 4, 3 * t + 5
    base = disjoint_union([complete_graph(small)] * t + [complete_graph(large)])
    closed = t * known_energy("complete", small) + known_energy("complete", large)
    return [
        _shadow_split_member(
            base,
            (t + 1) ** 2,
            t * (2 * t + 1),
            base_label=f"union({t}*complete({small}), complete({large}))",
            base_energy_closed=closed,
        )
    ]


FAMILIES: dict[str, Family] = {
    f.family_id: f
    for f in (
        Family("C5_1", EQUIENERGETIC, ("p", "q"),
               "same splitting operator applied to an equienergetic base pair", _plan_c5_1),
        Family("C5_2", EQUIENERGETIC, ("t", "m", "k"),
               "two splitting graphs with matched derived (p, q) parameters", _plan_c5_2),
        Family("C5_3", EQUIENERGETIC, ("m", "t"),
               "two shadow-splitting graphs with complementary (c, k) parameters", _plan_c5_3),
        Family("C5_4", EQUIENERGETIC, ("p", "q"),
               "splitting graph against the shadow graph of matching order "
               "(energies match exactly when q = 4p - 2)", _plan_c5_4),
        Family("C5_5", EQUIENERGETIC, ("c", "k"),
               "shadow-splitting graph against the shadow graph of matching order "
               "(energies match exactly when k = 2c)", _plan_c5_5),
        Family("C5_6", EQUIENERGETIC, (),
               "splitting(p=2,q=1) against the Kronecker product with complete(3)", _plan_c5_6),
        Family("C5_7", EQUIENERGETIC, ("m",),
               "splitting graph against the Kronecker product with a balanced "
               "complete bipartite graph", _plan_c5_7),
        Family("C5_8", EQUIENERGETIC, ("m",),
               "splitting graph against a shadow-splitting graph of equal order", _plan_c5_8),
        Family("C5_9", EQUIENERGETIC, ("t",),
               "four mutually equienergetic operator graphs of one order", _plan_c5_9),
        Family("C6_1", BORDERENERGETIC, ("k",),
               "two splitting graphs of complete(3) with complete-graph energy", _plan_c6_1),
        Family("C6_2", BORDERENERGETIC, ("t",),
               "shadow-splitting of a complete graph with complete-graph energy", _plan_c6_2),
        Family("C6_3", BORDERENERGETIC, ("t",),
               "shadow-splitting of a union of complete graphs with "
               "complete-graph energy", _plan_c6_3),
    )
}


def family_ids() -> list[str]:
    return sorted(FAMILIES)


def get_family(corollary_id: str) -> Family:
    try:
        return FAMILIES[corollary_id]
    except KeyError:
        raise ValueError(
            f"unknown family {corollary_id!r}; known ids: {', '.join(family_ids())}"
        ) from None


def instantiate_family(spec: FamilySpec) -> list[Graph]:
    """Construct the member graphs of a family instance."""
    family = get_family(spec.corollary_id)
    return [plan.build() for plan in family.plan(spec)]


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")


def verify(spec: FamilySpec, method: str = "both",
           tolerance: float | None = None) -> VerificationReport:
    """Verify one family instance and return the full report.

    method selects the energy routes: "formula" evaluates the closed-form
    scale factors, "oracle" eigensolves the constructed graphs, and "both"
    does both and additionally requires the two routes to agree per member.
    The formula route multiplies the scale factor by the base graph's energy,
    which is itself closed-form for the fixed-base families and eigensolved
    once otherwise; it never eigensolves a constructed member.
    """
    _check_method(method)
    if tolerance is not None and tolerance <= 0:
        raise ValueError("tolerance must be positive")
    family = get_family(spec.corollary_id)
    plans = family.plan(spec)
    tol = tolerance if tolerance is not None else verification_tolerance(
        max(plan.order for plan in plans)
    )

    base_energy_cache: dict[int, float] = {}

    def oracle_base_energy(base: Graph) -> float:
        key = id(base)
        if key not in base_energy_cache:
            base_energy_cache[key] = adjacency_spectrum(base).energy()
        return base_energy_cache[key]

    members: list[MemberReport] = []
    spectra = []
    for plan in plans:
        predicted = measured = None
        if method in ("formula", "both"):
            base_energy = (
                plan.base_energy_closed
                if plan.base_energy_closed is not None
                else oracle_base_energy(plan.base)
            )
            predicted = plan.prediction.energy(base_energy)
        if method in ("oracle", "both"):
            spectrum = adjacency_spectrum(plan.build())
            spectra.append(spectrum)
            measured = spectrum.energy()
        target = 2.0 * (plan.order - 1) if family.kind == BORDERENERGETIC else None
        members.append(MemberReport(plan.description, plan.order, predicted, measured, target))

    if family.kind == BORDERENERGETIC:
        orders_equal = True  # each member is matched against K_N of its own order
        energies_equal = all(
            abs(e - m.target_energy) <= tol
            for m in members
            for e in (m.predicted_energy, m.measured_energy)
            if e is not None
        )
    else:
        orders_equal = len({m.order for m in members}) == 1
        def route_equal(values):
            present = [v for v in values if v is not None]
            return all(abs(a - b) <= tol for a, b in itertools.combinations(present, 2))
        energies_equal = (
            route_equal([m.predicted_energy for m in members])
            and route_equal([m.measured_energy for m in members])
        )
    if method == "both":
        energies_equal = energies_equal and all(
            abs(m.predicted_energy - m.measured_energy) <= tol for m in members
        )

    cospectral = None
    if spectra:
        cospectral = [
            {
                "pair": [i, j],
                "cospectral": (
                    len(spectra[i]) == len(spectra[j])
                    and spectra[i].matches(spectra[j], tol)
                ),
            }
            for i, j in itertools.combinations(range(len(spectra)), 2)
        ]

    verdict = "pass" if (orders_equal and energies_equal) else "fail"
    return VerificationReport(
        corollary_id=spec.corollary_id,
        kind=family.kind,
        parameters=dict(spec.parameters),
        method=method,
        tolerance=tol,
        members=members,
        orders_equal=orders_equal,
        energies_equal=energies_equal,
        cospectral=cospectral,
        verdict=verdict,
    )


def verify_equienergetic(spec: FamilySpec, method: str = "both",
                         tolerance: float | None = None) -> VerificationReport:
    """Verify an equal-energy family instance (C5_*)."""
    if get_family(spec.corollary_id).kind != EQUIENERGETIC:
        raise ValueError(f"{spec.corollary_id} is not an equienergetic family")
    return verify(spec, method, tolerance)


def verify_borderenergetic(spec: FamilySpec, method: str = "both",
                           tolerance: float | None = None) -> VerificationReport:
    """Verify a border-energy family instance (C6_*)."""
    if get_family(spec.corollary_id).kind != BORDERENERGETIC:
        raise ValueError(f"{spec.corollary_id} is not a borderenergetic family")
    return verify(spec, method, tolerance)


def sweep(corollary_id: str, ranges: Mapping[str, Sequence[int]],
          method: str = "both", base: Graph | None = None,
          base_pair: tuple[Graph, Graph] | None = None,
          tolerance: float | None = None, jobs: int | None = None) -> list[VerificationReport]:
    """Verify a family over a parameter grid.

    `ranges` maps every free parameter of the family to a nonempty value
    list; the grid is their cartesian product, walked in the family's
    declared parameter order. Grid points outside the family's domain (or
    beyond the dense-order cap) yield "skipped" reports instead of aborting
    the sweep. Reports come back in grid order regardless of `jobs`.
    """
    _check_method(method)
    family = get_family(corollary_id)
    if set(ranges) != set(family.param_names):
        raise ValueError(
            f"{corollary_id} sweep needs ranges for exactly {list(family.param_names)}, "
            f"got {sorted(ranges)}"
        )
    values = []
    for name in family.param_names:
        seq = list(ranges[name])
        if not seq:
            raise ValueError(f"empty range for parameter {name!r}")
        values.append(seq)
    grid = list(itertools.product(*values)) if values else [()]

    def run(point) -> VerificationReport:
        params = dict(zip(family.param_names, point))
        spec = FamilySpec(corollary_id, params, base=base, base_pair=base_pair)
        try:
            return verify(spec, method=method, tolerance=tolerance)
        except ValueError as exc:
            return VerificationReport.skipped(corollary_id, family.kind, params, method, str(exc))

    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(grid) <= 1:
        return [run(point) for point in grid]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, grid))
