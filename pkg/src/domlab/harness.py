"""Theorem registry, corpus expansion, and verification reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional

from .errors import CorpusReadError, TierExceeded, UnknownTheoremId
from .domination import (
    Kind,
    SolverConfig,
    all_minimum_sets_oracle,
    is_perfect_connected_dominating,
    minimum_connected_dominating,
    minimum_wcon_dominating,
)
from .gadgets import (
    edge_gap_gadget,
    gap_gadget,
    random_cactus,
    random_connected_graph,
    random_long_cycle_tree,
    random_tree,
    random_unicyclic,
)
from .graph import (
    ACYCLIC,
    Graph,
    diameter,
    from_edge_list,
    girth,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
    iter_bits,
    remove_edge,
    raw_distance_matrix,
    vertex_roles,
)
from .recognizers import (
    cactus_equality_characterization,
    is_cactus,
    is_chordal,
    is_complete,
    is_distance_hereditary,
    is_gc_gwcon_perfect,
    is_h_star_free,
    is_path,
    is_cycle_graph,
    lemma_perfect_conditions,
)
from .spanning import (
    edge_removal_sweep,
    unicyclic_cycle_edge_analysis,
    wcon_spectrum,
)

ORACLE_SCOPE = 8  # oracle-backed checks skip larger graphs


@dataclass
class TheoremCheck:
    id: str
    scope: str
    status: str  # PASS | FAIL | SKIPPED
    counterexamples: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "scope": self.scope,
            "status": self.status,
            "counterexamples": self.counterexamples,
            "stats": self.stats,
        }


@dataclass
class VerificationReport:
    checks: list[TheoremCheck]
    elapsed_s: float

    @property
    def ok(self) -> bool:
        return all(c.status in ("PASS", "SKIPPED") for c in self.checks)

    def to_json_lines(self, include_timing: bool = True) -> str:
        lines = [json.dumps(c.to_json_dict(), sort_keys=True) for c in self.checks]
        summary = {
            "summary": True,
            "total": len(self.checks),
            "passed": sum(c.status == "PASS" for c in self.checks),
            "failed": sum(c.status == "FAIL" for c in self.checks),
            "skipped": sum(c.status == "SKIPPED" for c in self.checks),
        }
        if include_timing:
            summary["timing"] = {"elapsed_s": round(self.elapsed_s, 3)}
        lines.append(json.dumps(summary, sort_keys=True))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# corpora


@dataclass(frozen=True)
class CorpusSpec:
    """Deterministic graph source: exhaustive tier, file, random family
    or gadget parameter list."""

    kind: str  # exhaustive | file | random | gadget
    params: tuple = ()

    @staticmethod
    def parse(text: str) -> "CorpusSpec":
        parts = text.split(":")
        kind = parts[0]
        if kind == "exhaustive":
            if len(parts) != 2:
                raise CorpusReadError(f"bad corpus spec {text!r}")
            return CorpusSpec("exhaustive", (int(parts[1]),))
        if kind == "file":
            if len(parts) < 2:
                raise CorpusReadError(f"bad corpus spec {text!r}")
            return CorpusSpec("file", (":".join(parts[1:]),))
        if kind == "random":
            if len(parts) != 4:
                raise CorpusReadError(
                    f"bad corpus spec {text!r} (want random:family:count:seed)"
                )
            return CorpusSpec("random", (parts[1], int(parts[2]), int(parts[3])))
        if kind == "gadget":
            if len(parts) != 3:
                raise CorpusReadError(
                    f"bad corpus spec {text!r} (want gadget:family:k1,k2,...)"
                )
            ks = tuple(int(x) for x in parts[2].split(","))
            return CorpusSpec("gadget", (parts[1], ks))
        raise CorpusReadError(f"unknown corpus kind {kind!r}")

    def describe(self) -> str:
        if self.kind == "exhaustive":
            return f"exhaustive connected n<={self.params[0]}"
        if self.kind == "file":
            return f"graph6 file {self.params[0]}"
        if self.kind == "random":
            fam, count, seed = self.params
            return f"random {fam} x{count} seed={seed}"
        fam, ks = self.params
        return f"gadget {fam} k in {list(ks)}"

    def graphs(self) -> Iterator[Graph]:
        if self.kind == "exhaustive":
            yield from exhaustive_connected(self.params[0])
        elif self.kind == "file":
            yield from read_graph6_file(self.params[0])
        elif self.kind == "random":
            fam, count, seed = self.params
            yield from random_family(fam, count, seed)
        else:
            fam, ks = self.params
            for k in ks:
                desc = gap_gadget(k) if fam == "gap" else edge_gap_gadget(k)
                yield desc.graph


def exhaustive_connected(max_n: int) -> Iterator[Graph]:
    """All labeled connected graphs on 1..max_n vertices."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = from_edge_list(n, [pairs[i] for i in iter_bits(mask)])
            if is_connected(g):
                yield g


def read_graph6_file(path: str) -> Iterator[Graph]:
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line == ">>graph6<<":
                    continue
                try:
                    yield graph6_decode(line)
                except Exception as exc:
                    raise CorpusReadError(f"{path}:{lineno}: {exc}") from exc
    except OSError as exc:
        raise CorpusReadError(f"cannot read corpus file {path}: {exc}") from exc


def random_family(family: str, count: int, seed: int) -> Iterator[Graph]:
    """Seeded random corpora; sizes are fixed per family tier."""
    import random as _random

    rng = _random.Random(seed)
    for i in range(count):
        sub = seed * 1_000_003 + i
        if family == "connected":
            yield random_connected_graph(rng.randint(4, 14), sub)
        elif family == "tree":
            yield random_tree(rng.randint(3, 20), sub)
        elif family == "unicyclic":
            yield random_unicyclic(rng.randint(3, 18), sub)
        elif family == "cactus":
            yield random_cactus(rng.randint(1, 16), rng.random(), sub)
        elif family == "girth7":
            yield random_long_cycle_tree(rng.randint(7, 18), sub)
        elif family == "graph6roundtrip":
            yield random_connected_graph(rng.randint(1, 20), sub)
        else:
            raise CorpusReadError(f"unknown random family {family!r}")


# ---------------------------------------------------------------------------
# cached gamma values (labeled subgraphs repeat heavily across corpora)

from functools import lru_cache


@lru_cache(maxsize=1 << 18)
def _gammas_cached(g: Graph, cfg: SolverConfig) -> tuple[int, int]:
    return (
        minimum_connected_dominating(g, cfg).value,
        minimum_wcon_dominating(g, cfg).value,
    )


def gamma_pair(g: Graph, cfg: SolverConfig) -> tuple[int, int]:
    return _gammas_cached(g, cfg)


# ---------------------------------------------------------------------------
# theorem checkers


def _counterexample(g: Graph, **extra) -> dict:
    return {"graph6": graph6_encode(g), **extra}


def _check_gap_gadgets(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ks = corpus.params[1] if corpus.kind == "gadget" and corpus.params[0] == "gap" else (6, 7)
    ces = []
    for k in ks:
        desc = gap_gadget(k)
        gc, gw = gamma_pair(desc.graph, cfg)
        if gc != desc.predictions["gamma_c"] or gw != desc.predictions["gamma_wcon"]:
            ces.append(_counterexample(desc.graph, k=k, gamma_c=gc, gamma_wcon=gw))
    return TheoremCheck(
        "S2.gap", f"gap gadgets k in {list(ks)}",
        "FAIL" if ces else "PASS", ces, {"checked": len(ks)},
    )


def _check_edge_gadgets(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ks = corpus.params[1] if corpus.kind == "gadget" and corpus.params[0] == "edge" else tuple(range(-3, 4))
    ces = []
    for k in ks:
        desc = edge_gap_gadget(k)
        before = minimum_wcon_dominating(desc.graph, cfg).value
        after = minimum_wcon_dominating(
            remove_edge(desc.graph, *desc.special_edge), cfg
        ).value
        if after - before != k or before != desc.predictions["gamma_wcon"]:
            ces.append(_counterexample(desc.graph, k=k, before=before, after=after))
    return TheoremCheck(
        "S4.edge-gadget", f"edge gadgets k in {list(ks)}",
        "FAIL" if ces else "PASS", ces, {"checked": len(ks)},
    )


def _check_bounds_2m_n(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if g.n < 3:
            continue
        seen += 1
        gc, gw = gamma_pair(g, cfg)
        bound = 2 * g.m - g.n
        pathlike = is_path(g)
        long_cycle = is_cycle_graph(g) and g.n >= 7
        if gc > gw:
            ces.append(_counterexample(g, reason="gamma_c > gamma_wcon"))
        if gc > bound or (gc == bound) != pathlike:
            ces.append(_counterexample(g, reason="gamma_c vs 2m-n", gamma_c=gc))
        if gw > bound or (gw == bound) != (pathlike or long_cycle):
            ces.append(_counterexample(g, reason="gamma_wcon vs 2m-n", gamma_wcon=gw))
    return TheoremCheck(
        "S2.bounds-2m-n", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_n_minus_2(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if g.n < 3:
            continue
        seen += 1
        gc, _ = gamma_pair(g, cfg)
        eq_family = is_path(g) or is_cycle_graph(g)
        if gc > g.n - 2 or (gc == g.n - 2) != eq_family:
            ces.append(_counterexample(g, gamma_c=gc))
    return TheoremCheck(
        "S2.n-2", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_observation(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if g.n < 3 or g.n > ORACLE_SCOPE or is_complete(g):
            continue
        seen += 1
        roles = vertex_roles(g)
        for kind in (Kind.CONNECTED, Kind.WEAKLY_CONVEX):
            for d in all_minimum_sets_oracle(g, kind):
                if roles.cut_vertices & ~d or roles.simplicial & d:
                    ces.append(_counterexample(g, kind=kind.value, set=d))
    return TheoremCheck(
        "S2.observation", corpus.describe() + f" (oracle n<={ORACLE_SCOPE})",
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_diameter_lemma(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = applicable_outside = applicable_all = 0
    for g in corpus.graphs():
        if g.n > ORACLE_SCOPE:
            continue
        seen += 1
        mins = all_minimum_sets_oracle(g, Kind.CONNECTED)
        hit_outside = hit_all = False
        for d in mins:
            sub, _ = induced_subgraph(g, d)
            dm = diameter(sub)
            if not isinstance(dm, int):
                continue
            if dm <= 2:
                hit_outside = hit_all = True
                break
            if dm == 3:
                if is_perfect_connected_dominating(g, d, outside_only=True):
                    hit_outside = True
                if is_perfect_connected_dominating(g, d, outside_only=False):
                    hit_all = True
        if hit_outside or hit_all:
            applicable_outside += hit_outside
            applicable_all += hit_all
            gc, gw = gamma_pair(g, cfg)
            if gc != gw:
                ces.append(_counterexample(g, gamma_c=gc, gamma_wcon=gw))
    return TheoremCheck(
        "S2.diameter-lemma", corpus.describe() + f" (oracle n<={ORACLE_SCOPE})",
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces,
        {
            "checked": seen,
            "applicable_outside_reading": applicable_outside,
            "applicable_all_vertices_reading": applicable_all,
        },
    )


def _check_girth7(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        gth = girth(g)
        if g.n < 3 or (gth is not ACYCLIC and gth < 7):
            continue
        seen += 1
        roles = vertex_roles(g)
        gc, gw = gamma_pair(g, cfg)
        formula = g.n - roles.leaves.bit_count()
        every = (roles.leaves | roles.cut_vertices) == g.full_mask
        if gw != formula:
            ces.append(_counterexample(g, reason="formula", gamma_wcon=gw, formula=formula))
        if (gc == gw) != every:
            ces.append(_counterexample(g, reason="equality-biconditional", gamma_c=gc, gamma_wcon=gw))
    return TheoremCheck(
        "S2.girth7", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_cactus(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if not is_cactus(g):
            continue
        seen += 1
        predicted, _ = cactus_equality_characterization(g)
        gc, gw = gamma_pair(g, cfg)
        if predicted != (gc == gw):
            ces.append(_counterexample(g, predicted=predicted, gamma_c=gc, gamma_wcon=gw))
    return TheoremCheck(
        "S3.cactus", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_dh(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if not is_distance_hereditary(g):
            continue
        seen += 1
        gc, gw = gamma_pair(g, cfg)
        if gc != gw:
            ces.append(_counterexample(g, gamma_c=gc, gamma_wcon=gw))
    return TheoremCheck(
        "S3.dh", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_chordal_hstar(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if not is_chordal(g) or not is_h_star_free(g):
            continue
        seen += 1
        gc, gw = gamma_pair(g, cfg)
        if gc != gw:
            ces.append(_counterexample(g, gamma_c=gc, gamma_wcon=gw))
    return TheoremCheck(
        "S3.chordal-Hstar", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_perfect_lemma(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = perfect_count = 0
    for g in corpus.graphs():
        if g.n > 9:
            continue
        seen += 1
        try:
            perfect, _ = is_gc_gwcon_perfect(g, cfg)
        except TierExceeded:
            continue
        if not perfect:
            continue
        perfect_count += 1
        holds, violations = lemma_perfect_conditions(g)
        if not holds:
            ces.append(_counterexample(g, violations=[str(v) for v in violations]))
    return TheoremCheck(
        "S3.perfect-lemma", corpus.describe() + " (n<=9)",
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces,
        {"checked": seen, "perfect": perfect_count},
    )


def _check_unicyclic(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if not (is_connected(g) and g.m == g.n):
            continue
        seen += 1
        for rec in unicyclic_cycle_edge_analysis(g, cfg):
            if abs(rec.delta_wcon) > 2:
                ces.append(_counterexample(g, edge=list(rec.edge), delta=rec.delta_wcon))
    return TheoremCheck(
        "S4.unicyclic", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_interpolation(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    ces = []
    seen = 0
    for g in corpus.graphs():
        if not is_connected(g):
            continue
        seen += 1
        report = wcon_spectrum(g)
        if not report.is_interval:
            ces.append(_counterexample(g, values=sorted(set(report.values))))
    return TheoremCheck(
        "S4.interpolation", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


def _check_edge_bound(corpus: CorpusSpec, cfg: SolverConfig) -> TheoremCheck:
    """Removal of a non-cut edge shifts gamma_c by 0, 1 or 2; graphs whose
    vertices are all simplicial-or-cut additionally shift by at most 1 and
    have equal numbers after removal."""
    ces = []
    seen = 0
    for g in corpus.graphs():
        if not is_connected(g) or g.n < 3:
            continue
        seen += 1
        roles = vertex_roles(g)
        all_sc = (roles.simplicial | roles.cut_vertices) == g.full_mask
        for rec in edge_removal_sweep(g, cfg):
            if rec.is_bridge:
                continue
            if rec.delta_c not in (0, 1, 2):
                ces.append(_counterexample(g, edge=list(rec.edge), delta_c=rec.delta_c))
            if all_sc:
                if rec.delta_c not in (0, 1):
                    ces.append(_counterexample(g, edge=list(rec.edge), reason="sc-delta", delta_c=rec.delta_c))
                if rec.gamma_c_after != rec.gamma_wcon_after:
                    ces.append(_counterexample(g, edge=list(rec.edge), reason="sc-equality"))
                if rec.delta_wcon not in (0, 1):
                    ces.append(_counterexample(g, edge=list(rec.edge), reason="sc-wcon-delta", delta_wcon=rec.delta_wcon))
    return TheoremCheck(
        "S4.edge-bound", corpus.describe(),
        "FAIL" if ces else ("PASS" if seen else "SKIPPED"), ces, {"checked": seen},
    )


THEOREMS: dict[str, Callable[[CorpusSpec, SolverConfig], TheoremCheck]] = {
    "S2.gap": _check_gap_gadgets,
    "S2.bounds-2m-n": _check_bounds_2m_n,
    "S2.n-2": _check_n_minus_2,
    "S2.observation": _check_observation,
    "S2.diameter-lemma": _check_diameter_lemma,
    "S2.girth7": _check_girth7,
    "S3.cactus": _check_cactus,
    "S3.dh": _check_dh,
    "S3.chordal-Hstar": _check_chordal_hstar,
    "S3.perfect-lemma": _check_perfect_lemma,
    "S4.edge-gadget": _check_edge_gadgets,
    "S4.unicyclic": _check_unicyclic,
    "S4.interpolation": _check_interpolation,
    "S4.edge-bound": _check_edge_bound,
}


def run_verification(
    ids: Iterable[str],
    corpus: CorpusSpec,
    cfg: SolverConfig = SolverConfig(),
) -> VerificationReport:
    """Run the named theorem checks against one corpus."""
    ids = list(ids)
    for tid in ids:
        if tid not in THEOREMS:
            raise UnknownTheoremId(f"unknown theorem id {tid!r}")
    t0 = time.perf_counter()
    checks = [THEOREMS[tid](corpus, cfg) for tid in ids]
    return VerificationReport(checks, time.perf_counter() - t0)
