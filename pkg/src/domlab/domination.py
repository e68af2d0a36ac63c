"""Dominating-set predicates and exact solvers.

Two exact routes are provided: a pruned size-layered search
(:func:`minimum_connected_dominating`, :func:`minimum_wcon_dominating`)
and a deliberately pruning-free oracle (:func:`all_minimum_sets_oracle`)
used to cross-validate the pruned route on small graphs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .errors import DisconnectedHost, EmptySet, TierExceeded
from .graph import (
    Graph,
    graph6_encode,
    iter_bits,
    mask_connected,
    raw_distance_matrix,
    set_to_list,
    vertex_roles,
)

ORACLE_TIER = 14


class Kind(Enum):
    DOMINATING = "dominating"
    CONNECTED = "connected"
    WEAKLY_CONVEX = "weakly-convex"


@dataclass(frozen=True)
class SolverConfig:
    use_forced_pruning: bool = True
    node_budget: int = 50_000_000
    deterministic: bool = True


@dataclass
class DominationCertificate:
    set: int
    kind: Kind
    value: int
    optimal: bool
    graph_hash: str
    nodes_expanded: int = 0

    def to_json_dict(self, g: Graph) -> dict:
        return {
            "graph6": graph6_encode(g),
            "kind": self.kind.value,
            "value": self.value,
            "set": set_to_list(self.set),
            "optimal": self.optimal,
            "nodes_expanded": self.nodes_expanded,
        }


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(graph6_encode(g).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# predicates


def is_dominating(g: Graph, x: int) -> bool:
    """True iff every vertex outside ``x`` has a neighbour in ``x``."""
    if x == 0:
        raise EmptySet("dominating predicate on the empty set")
    covered = x
    for v in iter_bits(x):
        covered |= g.adj[v]
    return covered == g.full_mask


def is_connected_dominating(g: Graph, x: int) -> bool:
    if x == 0:
        raise EmptySet("connected-dominating predicate on the empty set")
    return is_dominating(g, x) and mask_connected(g.adj, x)


def is_weakly_convex(g: Graph, x: int) -> bool:
    """Induced-distance criterion: d_{G[X]}(a,b) == d_G(a,b) for all a,b in X.

    A set is weakly convex exactly when the induced subgraph is isometric,
    which is equivalent to the existence of a full geodesic inside X for
    every pair.
    """
    if x == 0:
        raise EmptySet("weak-convexity predicate on the empty set")
    dist = raw_distance_matrix(g)
    if any(d < 0 for d in dist[0]):
        raise DisconnectedHost("weak convexity requires a connected host graph")
    members = set_to_list(x)
    if len(members) <= 1:
        return True
    adj = g.adj
    for i, a in enumerate(members):
        row = dist[a]
        # layered bitmask BFS inside x
        seen = 1 << a
        frontier = seen
        d = 0
        ind = {a: 0}
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= x & ~seen
            d += 1
            for v in iter_bits(nxt):
                ind[v] = d
            seen |= nxt
            frontier = nxt
        for b in members[i + 1 :]:
            if ind.get(b, -1) != row[b]:
                return False
    return True


def is_wcon_dominating(g: Graph, x: int) -> bool:
    return is_dominating(g, x) and is_weakly_convex(g, x)


def is_perfect_connected_dominating(g: Graph, d: int, outside_only: bool = True) -> bool:
    """Connected dominating set whose dominated vertices have a unique dominator.

    With ``outside_only`` (default) the exactly-one constraint applies to
    vertices outside ``d``; the alternative reading counts members of ``d``
    as dominating themselves plus any neighbours inside ``d``.
    """
    if d == 0:
        raise EmptySet("perfect-domination predicate on the empty set")
    if not is_connected_dominating(g, d):
        return False
    for v in iter_bits(g.full_mask & ~d):
        if (g.adj[v] & d).bit_count() != 1:
            return False
    if not outside_only:
        for v in iter_bits(d):
            if (g.adj[v] & d).bit_count() != 0:
                return False
    return True


_KIND_PREDICATE = {
    Kind.DOMINATING: is_dominating,
    Kind.CONNECTED: is_connected_dominating,
    Kind.WEAKLY_CONVEX: is_wcon_dominating,
}


def kind_predicate(kind: Kind):
    return _KIND_PREDICATE[kind]


# ---------------------------------------------------------------------------
# pruned exact solver


def _forced_and_excluded(g: Graph) -> tuple[int, int]:
    """Cut vertices are forced into, simplicial vertices out of, any minimum set.

    Valid for connected G != K_n with n >= 3.
    """
    roles = vertex_roles(g)
    return roles.cut_vertices, roles.simplicial


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _solve_minimum(g: Graph, kind: Kind, cfg: SolverConfig) -> DominationCertificate:
    n = g.n
    predicate = _KIND_PREDICATE[kind]
    digest = graph_digest(g)
    if n == 1:
        return DominationCertificate(1, kind, 1, True, digest)
    forced, excluded = 0, 0
    if cfg.use_forced_pruning and n >= 3 and not _is_complete(g):
        forced, excluded = _forced_and_excluded(g)
    free = [v for v in range(n) if not (forced >> v | excluded >> v) & 1]
    nodes = 0
    base = forced.bit_count()
    for extra in range(0, len(free) + 1):
        size = base + extra
        if size == 0:
            continue
        hits = []
        for combo in combinations(free, extra):
            nodes += 1
            if nodes > cfg.node_budget:
                # fall back to the trivially feasible whole vertex set
                best = min(hits) if hits else g.full_mask
                return DominationCertificate(
                    best, kind, best.bit_count(), False, digest, nodes
                )
            x = forced
            for v in combo:
                x |= 1 << v
            if is_dominating(g, x) and predicate(g, x):
                if not cfg.deterministic:
                    return DominationCertificate(x, kind, size, True, digest, nodes)
                hits.append(x)
        if hits:
            return DominationCertificate(min(hits), kind, size, True, digest, nodes)
    # pruning can never make the problem infeasible (V itself qualifies),
    # so reaching this point means forced/excluded were misapplied
    raise AssertionError("exact search exhausted without a feasible set")


def minimum_connected_dominating(
    g: Graph, cfg: SolverConfig = SolverConfig()
) -> DominationCertificate:
    return _solve_minimum(g, Kind.CONNECTED, cfg)


def minimum_wcon_dominating(
    g: Graph, cfg: SolverConfig = SolverConfig()
) -> DominationCertificate:
    return _solve_minimum(g, Kind.WEAKLY_CONVEX, cfg)


def gamma_gap(g: Graph, cfg: SolverConfig = SolverConfig()):
    """(gamma_c, gamma_wcon, gap) with gap = gamma_wcon - gamma_c >= 0."""
    c = minimum_connected_dominating(g, cfg)
    w = minimum_wcon_dominating(g, cfg)
    return c.value, w.value, w.value - c.value


# ---------------------------------------------------------------------------
# pruning-free oracle


def all_minimum_sets_oracle(g: Graph, kind: Kind, tier: int = ORACLE_TIER) -> list[int]:
    """All minimum sets of ``kind`` by plain cardinality-layered enumeration."""
    if g.n > tier:
        raise TierExceeded(f"oracle tier is {tier}, graph has {g.n} vertices")
    predicate = _KIND_PREDICATE[kind]
    verts = range(g.n)
    for size in range(1, g.n + 1):
        hits = []
        for combo in combinations(verts, size):
            x = 0
            for v in combo:
                x |= 1 << v
            if predicate(g, x):
                hits.append(x)
        if hits:
            return hits
    return []
