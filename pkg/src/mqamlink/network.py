"""Multi-hop routing on a line of equally spaced relays.

Between a source and a destination sit N relays, each either forwarding
or sleeping; a route is the bitmask of forwarding relays, giving 2^N
candidates. Route cost is the sum of independent per-hop costs, which
makes exhaustive search and a shortest-path dynamic program over node
indices interchangeable; the latter serves as a cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .channel import PropagationParams
from .energy import CircuitProfile, FixedPower, LinkMetrics, PowerPolicy, link_metrics
from .modulation import BerTarget, ModulationScheme, RadioConfig

__all__ = [
    "MAX_ENUMERATED_RELAYS",
    "LinearNetwork",
    "Route",
    "RouteResult",
    "route_hops",
    "route_cost",
    "optimal_route",
    "optimal_route_dp",
    "joint_optimize",
]

MAX_ENUMERATED_RELAYS = 30


@dataclass(frozen=True)
class LinearNetwork:
    """Source-to-destination span with equally spaced intermediate relays."""

    total_distance_m: float = 100.0
    relay_count: int = 9

    def __post_init__(self) -> None:
        if self.total_distance_m <= 0:
            raise ValueError(f"total_distance_m must be positive, got {self.total_distance_m}")
        if not 0 <= self.relay_count <= MAX_ENUMERATED_RELAYS:
            raise ValueError(
                f"relay_count must lie in [0, {MAX_ENUMERATED_RELAYS}], got {self.relay_count}"
            )

    @property
    def spacing_m(self) -> float:
        return self.total_distance_m / (self.relay_count + 1)


@dataclass(frozen=True)
class Route:
    """Forwarding relays as a bitmask: bit i set means relay i (closest to
    the source first) forwards."""

    active_mask: int

    def mask_string(self, relay_count: int) -> str:
        """Binary-code rendering, relay 0 leftmost, 1 = forwarding."""
        return "".join(
            "1" if self.active_mask >> i & 1 else "0" for i in range(relay_count)
        )


@dataclass(frozen=True)
class RouteResult:
    route: Route
    total_energy_per_bit: float  # J/bit summed over hops
    total_delay: float  # s summed over hops
    per_hop: tuple[LinkMetrics, ...]


def _node_indices(mask: int, relay_count: int) -> list[int]:
    """Active node indices on the line: source 0, relays 1..N, destination N+1."""
    nodes = [0]
    for i in range(relay_count):
        if mask >> i & 1:
            nodes.append(i + 1)
    nodes.append(relay_count + 1)
    return nodes


def _hop_gaps(mask: int, relay_count: int) -> list[int]:
    nodes = _node_indices(mask, relay_count)
    return [nodes[k + 1] - nodes[k] for k in range(len(nodes) - 1)]


def route_hops(route: Route, net: LinearNetwork) -> list[float]:
    """Hop distances (m) between consecutive forwarding nodes; they sum to
    the total span."""
    if not 0 <= route.active_mask < 2**net.relay_count:
        raise ValueError(
            f"mask {route.active_mask} out of range for {net.relay_count} relays"
        )
    return [gap * net.spacing_m for gap in _hop_gaps(route.active_mask, net.relay_count)]


def _gap_metrics(
    net: LinearNetwork,
    policy: PowerPolicy,
    scheme: ModulationScheme,
    target: BerTarget,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    t_r_s: float | None,
) -> dict[int, LinkMetrics]:
    """Per-hop metrics keyed by index gap; only N+1 distinct hop lengths exist."""
    return {
        gap: link_metrics(
            gap * net.spacing_m, policy, scheme, target, circuit, radio, prop, t_r_s=t_r_s
        )
        for gap in range(1, net.relay_count + 2)
    }


def _assemble(route: Route, net: LinearNetwork, metrics: dict[int, LinkMetrics]) -> RouteResult:
    energy = 0.0
    delay = 0.0
    per_hop = []
    for gap in _hop_gaps(route.active_mask, net.relay_count):
        hop = metrics[gap]
        energy += hop.energy_per_bit
        delay += hop.delay
        per_hop.append(hop)
    return RouteResult(route, energy, delay, tuple(per_hop))


def route_cost(
    route: Route,
    net: LinearNetwork,
    policy: PowerPolicy,
    scheme: ModulationScheme,
    target: BerTarget,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    t_r_s: float | None = None,
) -> RouteResult:
    """Expected energy and delay of one route, hop costs summed independently."""
    if not 0 <= route.active_mask < 2**net.relay_count:
        raise ValueError(
            f"mask {route.active_mask} out of range for {net.relay_count} relays"
        )
    metrics = _gap_metrics(net, policy, scheme, target, circuit, radio, prop, t_r_s)
    return _assemble(route, net, metrics)


def _objective_key(objective: str):
    if objective == "energy":
        return lambda r: r.total_energy_per_bit
    if objective == "delay":
        return lambda r: r.total_delay
    raise ValueError(f"objective must be 'energy' or 'delay', got {objective!r}")


def optimal_route(
    net: LinearNetwork,
    policy: PowerPolicy,
    scheme: ModulationScheme,
    target: BerTarget,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    objective: str = "energy",
    t_r_s: float | None = None,
) -> RouteResult:
    """Exhaustive search over all 2^N relay subsets for the cheapest route.

    Ties break toward the smaller mask value so results are reproducible.
    """
    key = _objective_key(objective)
    metrics = _gap_metrics(net, policy, scheme, target, circuit, radio, prop, t_r_s)
    best: RouteResult | None = None
    best_key = float("inf")
    for mask in range(2**net.relay_count):
        result = _assemble(Route(mask), net, metrics)
        value = key(result)
        if value < best_key:
            best = result
            best_key = value
    assert best is not None
    return best


def optimal_route_dp(
    net: LinearNetwork,
    policy: PowerPolicy,
    scheme: ModulationScheme,
    target: BerTarget,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    objective: str = "energy",
    t_r_s: float | None = None,
) -> RouteResult:
    """Same contract as optimal_route via an O(N^2) shortest-path recursion.

    Nodes along the line form a DAG whose edge (i, j) costs one hop of
    length (j - i) * spacing; additive hop costs make the cheapest path
    the cheapest route. Independent of the exhaustive enumeration, which
    it cross-validates.
    """
    _objective_key(objective)  # validate
    metrics = _gap_metrics(net, policy, scheme, target, circuit, radio, prop, t_r_s)
    n_nodes = net.relay_count + 2
    dist = [float("inf")] * n_nodes
    pred = [-1] * n_nodes
    dist[0] = 0.0
    hop_value = {
        gap: (m.energy_per_bit if objective == "energy" else m.delay)
        for gap, m in metrics.items()
    }
    for j in range(1, n_nodes):
        for i in range(j):
            candidate = dist[i] + hop_value[j - i]
            if candidate < dist[j]:
                dist[j] = candidate
                pred[j] = i
    nodes = [n_nodes - 1]
    while nodes[-1] != 0:
        nodes.append(pred[nodes[-1]])
    nodes.reverse()
    mask = 0
    for node in nodes[1:-1]:
        mask |= 1 << (node - 1)
    return _assemble(Route(mask), net, metrics)


def joint_optimize(
    net: LinearNetwork,
    pt_grid_watts: list[float],
    b_grid: list[int],
    target: BerTarget,
    circuit: CircuitProfile,
    radio: RadioConfig,
    prop: PropagationParams,
    t_r_s: float | None = None,
) -> tuple[int, float, RouteResult]:
    """Minimize route energy jointly over constellation size and transmit power.

    Runs the optimal-route search for every (b, pt) grid point and returns
    (b, pt_watts, RouteResult) of the global minimizer; ties break toward
    smaller b, then smaller pt, then smaller mask.
    """
    if not pt_grid_watts or not b_grid:
        raise ValueError("pt_grid_watts and b_grid must be nonempty")
    best: tuple[int, float, RouteResult] | None = None
    for b in sorted(b_grid):
        scheme = ModulationScheme(b)
        for pt_w in sorted(pt_grid_watts):
            result = optimal_route(
                net, FixedPower(pt_w), scheme, target, circuit, radio, prop,
                objective="energy", t_r_s=t_r_s,
            )
            if best is None or result.total_energy_per_bit < best[2].total_energy_per_bit:
                best = (b, pt_w, result)
    assert best is not None
    return best
