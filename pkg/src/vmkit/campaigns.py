"""Verification campaigns: exhaustive or seeded sweeps producing one record per instance."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_form
from .families import all_graphs, complete, cycle, h_graph, join, wheel_variant
from .graph import Graph, delete_vertices, local_complement, pivot
from .rank import cross_rank, cut_rank, cutrank_profile
from .search import is_vertex_minor, local_orbit, locally_equivalent
from .structure import is_prime

SUITES = ("bouchet", "optimality", "h3-census", "invariants")

# 3-sets through a fixed vertex with cut-rank 2, reference counts; cutrank_profile still enumerates every set
PROFILE_COUNTS = {"cycle 7": 3, "F1": 3, "F2": 3, "F3": 1}


@dataclass
class CampaignConfig:
    suite: str
    min_n: int = 5
    max_n: int = 7
    seed: int = 42
    jobs: int = 1
    budget_ms: float | None = None
    out: str | None = None

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unsupported suite {self.suite!r}; choose from {', '.join(SUITES)}")
        if self.suite == "bouchet" and not (1 <= self.min_n <= self.max_n <= 8):
            raise ValueError("bouchet sweeps support 1 <= min-n <= max-n <= 8")


@dataclass
class CampaignReport:
    suite: str
    records: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.records if r["result"] == "fail")

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> dict:
        return {"suite": self.suite, "checked": len(self.records), "failures": self.failures,
                "passed": len(self.records) - self.failures}


def code_of(g: Graph) -> str:
    return canonical_form(g).decode()


def _record(g: Graph, check: str, passed: bool, witness: str | None = None, **extra) -> dict:
    out = {"code": code_of(g), "check": check, "result": "pass" if passed else "fail", "witness": witness}
    out.update(extra)
    return out


def _sorted(records: list[dict]) -> list[dict]:
    return sorted(records, key=lambda r: (r["code"], r["check"]))


# -- bouchet ---------------------------------------------------------------


def _bouchet_one(args) -> dict:
    g, budget_ms = args
    w = is_vertex_minor(cycle(5), g, budget_ms=budget_ms)
    return _record(g, "C5 vertex-minor", w is not None, None if w is None else w.trace.to_text())


def bouchet(cfg: CampaignConfig) -> CampaignReport:
    primes = [g for n in range(cfg.min_n, cfg.max_n + 1) for g in all_graphs(n) if is_prime(g)]
    work = [(g, cfg.budget_ms) for g in primes]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            recs = list(pool.map(_bouchet_one, work, chunksize=16))
    else:
        recs = [_bouchet_one(w) for w in work]
    return CampaignReport("bouchet", _sorted(recs))


# -- optimality -----------------------------------------------------------


def matched_cliques(n: int) -> Graph:
    return join(complete(n), complete(n), "matching")


def optimality(cfg: CampaignConfig) -> CampaignReport:
    recs = []
    k33 = matched_cliques(3)
    for n in range(6, 13):
        w = is_vertex_minor(k33, cycle(n), budget_ms=cfg.budget_ms)
        recs.append(_record(cycle(n), f"K3=K3 not in C{n}", w is None))
    for n in (3, 4):
        w = is_vertex_minor(cycle(7), matched_cliques(n), budget_ms=cfg.budget_ms)
        recs.append(_record(matched_cliques(n), f"C7 not in K{n}=K{n}", w is None))
    for i in (1, 2, 3):
        f = wheel_variant(i)
        orbit = local_orbit(f, budget_ms=cfg.budget_ms)
        eq = locally_equivalent(f, cycle(7), budget_ms=cfg.budget_ms)
        recs.append(_record(f, f"F{i} not locally equivalent to C7", eq is None and orbit.complete,
                            orbit_size=orbit.size))
    for name, want in PROFILE_COUNTS.items():
        g = cycle(7) if name == "cycle 7" else wheel_variant(int(name[1]))
        got = len(cutrank_profile(g, 0, 3, 2).sets)
        recs.append(_record(g, f"profile {name}", got == want, None, count=got, expected=want))
    return CampaignReport("optimality", _sorted(recs))


# -- H3 census ------------------------------------------------------------


def seven_vertex_minors(g: Graph, budget_ms: float | None = None) -> dict[str, Graph]:
    """Every vertex-minor on one vertex fewer, up to isomorphism.

    Deleting one vertex from each member of the local-equivalence orbit
    covers all of them.
    """
    orbit = local_orbit(g, budget_ms=budget_ms)
    if not orbit.complete:
        raise RuntimeError("orbit enumeration incomplete")
    out: dict[str, Graph] = {}
    for h in orbit.graphs.values():
        for v in h.vertices():
            d = delete_vertices(h, [v])
            out.setdefault(code_of(d), d)
    return out


def h3_census(cfg: CampaignConfig) -> CampaignReport:
    allowed: dict[str, str] = {}
    for i in (1, 2, 3):
        for code in local_orbit(wheel_variant(i), budget_ms=cfg.budget_ms).codes:
            allowed[code.decode()] = f"F{i}"
    recs = []
    for code, h in sorted(seven_vertex_minors(h_graph(3), cfg.budget_ms).items()):
        if not is_prime(h):
            continue
        cls = allowed.get(code)
        recs.append(_record(h, "locally equivalent to F1, F2 or F3", cls is not None, cls))
    return CampaignReport("h3-census", _sorted(recs))


# -- invariants -----------------------------------------------------------


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def algebra_failures(g: Graph) -> list[str]:
    bad = []
    vs = g.vertices()
    for v in vs:
        if local_complement(local_complement(g, v), v) != g:
            bad.append(f"LC involution at {v}")
    for x, y in g.edges():
        p = pivot(g, x, y)
        if pivot(p, x, y) != g:
            bad.append(f"pivot involution at {x}{y}")
        if p != local_complement(local_complement(local_complement(g, x), y), x):
            bad.append(f"pivot = LC word at {x}{y}")
        for z in g.neighbors(x):
            if z != y and pivot(pivot(g, x, z), y, z) != p:
                bad.append(f"pivot chain at {x}{y}{z}")
    return bad


def rank_failures(g: Graph, rng: random.Random, cuts: int = 20) -> list[str]:
    bad = []
    vs = g.vertices()
    for _ in range(cuts):
        xs = [v for v in vs if rng.random() < 0.5]
        v = rng.choice(vs)
        if cut_rank(g, xs) != cut_rank(local_complement(g, v), xs):
            bad.append("cut-rank changed under LC")
        a, b, a2, b2 = ([v for v in vs if rng.random() < 0.3] for _ in range(4))
        if set(a) & set(b) or set(a2) & set(b2):
            continue
        lhs = cross_rank(g, a, b) + cross_rank(g, a2, b2)
        u1, u2 = set(a) | set(a2), set(b) & set(b2)
        i1, i2 = set(a) & set(a2), set(b) | set(b2)
        if not u1 & u2 and not i1 & i2 and lhs < cross_rank(g, u1, u2) + cross_rank(g, i1, i2):
            bad.append("cross-rank submodularity")
    return bad


def invariants(cfg: CampaignConfig) -> CampaignReport:
    rng = random.Random(cfg.seed)
    recs = []
    for _ in range(50):
        n = rng.randint(2, 10)
        g = random_graph(n, rng.random(), rng)
        bad = algebra_failures(g) + rank_failures(g, rng)
        recs.append(_record(g, "operation algebra and rank", not bad, "; ".join(bad) or None))
    return CampaignReport("invariants", _sorted(recs))


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    return {"bouchet": bouchet, "optimality": optimality, "h3-census": h3_census,
            "invariants": invariants}[cfg.suite](cfg)
