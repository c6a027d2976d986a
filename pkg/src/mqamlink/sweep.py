"""Parameter-study engine for the standard experiment grids.

Three sweep kinds: single-hop energy over (constellation, distance),
multi-hop optimal-route energy/delay over (BER target, constellation),
and the joint (constellation, transmit power) surface. Rows come back in
canonical grid order with argmin flags, so CSV output is deterministic.
Grid points with infeasible BER targets become error rows instead of
aborting the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .channel import PropagationParams
from .energy import (
    CircuitProfile,
    FixedPower,
    PowerPolicy,
    energy_to_dbmj,
    link_metrics,
)
from .modulation import BerTarget, InfeasibleTargetError, ModulationScheme, RadioConfig
from .network import LinearNetwork, optimal_route

__all__ = ["SweepPlan", "SweepRow", "run_singlehop", "run_multihop", "run_joint"]

_KINDS = ("singlehop", "multihop", "joint")


@dataclass(frozen=True)
class SweepPlan:
    """Grid definition for one sweep run."""

    kind: str
    b_grid: tuple[int, ...] = (2, 4, 6, 8, 10)
    d_grid_m: tuple[float, ...] = (5.0, 25.0, 50.0, 75.0, 100.0)
    pt_grid_w: tuple[float, ...] = tuple(0.005 * k for k in range(1, 21))
    ber_grid: tuple[float, ...] = (1e-4, 3e-4, 5e-4, 8e-4, 1e-3)
    policy: PowerPolicy = FixedPower(0.1)

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        # canonical row order: ascending grids regardless of input order
        for name in ("b_grid", "d_grid_m", "pt_grid_w", "ber_grid"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))
        if not self.b_grid or not self.ber_grid:
            raise ValueError("b_grid and ber_grid must be nonempty")
        if self.kind == "singlehop" and not self.d_grid_m:
            raise ValueError("singlehop sweeps need a nonempty d_grid_m")
        if self.kind == "joint" and not self.pt_grid_w:
            raise ValueError("joint sweeps need a nonempty pt_grid_w")
        if self.kind in ("singlehop", "joint") and len(self.ber_grid) != 1:
            raise ValueError(f"{self.kind} sweeps use exactly one BER target")


@dataclass
class SweepRow:
    """One grid point; fields not applicable to the sweep kind stay None."""

    policy: str
    b: int
    ber_target: float
    d_m: Optional[float] = None
    pt_mw: Optional[float] = None
    pt_dbm: Optional[float] = None
    pmin_dbm: Optional[float] = None
    p_link: Optional[float] = None
    route_mask: Optional[str] = None
    hops: Optional[int] = None
    energy_j_per_bit: Optional[float] = None
    energy_dbmj: Optional[float] = None
    delay_s: Optional[float] = None
    is_argmin: bool = False
    error: Optional[str] = None


def _policy_name(policy: PowerPolicy) -> str:
    return "fixed" if isinstance(policy, FixedPower) else "variable"


def _flag_argmin(rows: list[SweepRow], groups: dict, key) -> None:
    """Mark, within each group, the row minimizing key (errors excluded)."""
    for group_rows in groups.values():
        valid = [r for r in group_rows if r.error is None]
        if not valid:
            continue
        best = min(valid, key=key)
        best.is_argmin = True


def run_singlehop(
    plan: SweepPlan,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    t_r_s: float | None = None,
) -> list[SweepRow]:
    """Evaluate every (b, d) grid point; flag the per-distance energy argmin."""
    if plan.kind != "singlehop":
        raise ValueError(f"plan kind must be 'singlehop', got {plan.kind!r}")
    pb_bar = plan.ber_grid[0]
    rows: list[SweepRow] = []
    groups: dict[float, list[SweepRow]] = {}
    for b in plan.b_grid:
        for d in plan.d_grid_m:
            row = SweepRow(policy=_policy_name(plan.policy), b=b, ber_target=pb_bar, d_m=d)
            try:
                m = link_metrics(
                    d, plan.policy, ModulationScheme(b), BerTarget(pb_bar),
                    circuit, radio, prop, t_r_s=t_r_s,
                )
            except InfeasibleTargetError as exc:
                row.error = str(exc)
            else:
                row.pt_dbm = m.pt_dbm
                row.pmin_dbm = m.pmin_dbm
                row.p_link = m.p_link
                row.energy_j_per_bit = m.energy_per_bit
                row.energy_dbmj = energy_to_dbmj(m.energy_per_bit)
                row.delay_s = m.delay
            rows.append(row)
            groups.setdefault(d, []).append(row)
    _flag_argmin(rows, groups, key=lambda r: r.energy_j_per_bit)
    return rows


def run_multihop(
    plan: SweepPlan,
    net: LinearNetwork,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    objective: str = "energy",
    t_r_s: float | None = None,
) -> list[SweepRow]:
    """Optimal route per (BER target, b); flag the per-target argmin under
    the chosen objective."""
    if plan.kind != "multihop":
        raise ValueError(f"plan kind must be 'multihop', got {plan.kind!r}")
    pt_mw = plan.policy.pt_watts * 1e3 if isinstance(plan.policy, FixedPower) else None
    rows: list[SweepRow] = []
    groups: dict[float, list[SweepRow]] = {}
    for pb_bar in plan.ber_grid:
        for b in plan.b_grid:
            row = SweepRow(
                policy=_policy_name(plan.policy), b=b, ber_target=pb_bar, pt_mw=pt_mw
            )
            try:
                result = optimal_route(
                    net, plan.policy, ModulationScheme(b), BerTarget(pb_bar),
                    circuit, radio, prop, objective=objective, t_r_s=t_r_s,
                )
            except InfeasibleTargetError as exc:
                row.error = str(exc)
            else:
                row.route_mask = result.route.mask_string(net.relay_count)
                row.hops = len(result.per_hop)
                row.energy_j_per_bit = result.total_energy_per_bit
                row.energy_dbmj = energy_to_dbmj(result.total_energy_per_bit)
                row.delay_s = result.total_delay
            rows.append(row)
            groups.setdefault(pb_bar, []).append(row)
    objective_key = (
        (lambda r: r.energy_j_per_bit) if objective == "energy" else (lambda r: r.delay_s)
    )
    _flag_argmin(rows, groups, key=objective_key)
    return rows


def run_joint(
    plan: SweepPlan,
    net: LinearNetwork,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    t_r_s: float | None = None,
) -> tuple[list[SweepRow], Optional[SweepRow]]:
    """Optimal-route energy surface over (b, pt); returns rows plus the
    global-minimum row (None when every grid point is infeasible)."""
    if plan.kind != "joint":
        raise ValueError(f"plan kind must be 'joint', got {plan.kind!r}")
    pb_bar = plan.ber_grid[0]
    rows: list[SweepRow] = []
    for b in plan.b_grid:
        for pt_w in plan.pt_grid_w:
            row = SweepRow(
                policy="fixed", b=b, ber_target=pb_bar, pt_mw=pt_w * 1e3
            )
            try:
                result = optimal_route(
                    net, FixedPower(pt_w), ModulationScheme(b), BerTarget(pb_bar),
                    circuit, radio, prop, objective="energy", t_r_s=t_r_s,
                )
            except InfeasibleTargetError as exc:
                row.error = str(exc)
            else:
                row.route_mask = result.route.mask_string(net.relay_count)
                row.hops = len(result.per_hop)
                row.energy_j_per_bit = result.total_energy_per_bit
                row.energy_dbmj = energy_to_dbmj(result.total_energy_per_bit)
                row.delay_s = result.total_delay
            rows.append(row)
    valid = [r for r in rows if r.error is None]
    best = min(valid, key=lambda r: r.energy_j_per_bit) if valid else None
    if best is not None:
        best.is_argmin = True
    return rows, best
