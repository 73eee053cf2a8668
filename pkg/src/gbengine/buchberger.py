"""Classic Buchberger algorithm with layered S-pair elimination.

Pairs run through the relatively-prime check and the cached lcm criterion
as they are constructed, through the lcm criterion again when popped
(later eliminations may have set new bits by then), and through the graph
criterion just before an S-polynomial would actually be reduced.  A
triangular bit array marks pairs that were eliminated or reduced; the lcm
criterion's anti-circularity rule consults it so that of three pairwise
equal lcms exactly one pair can ever be eliminated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .division import classic_reduce, interreduce, reduced_basis
from .lookup import make_lookup
from .pairbits import BitTriangle
from .poly import Polynomial, poly_monic, poly_normalize
from .ring import Ring
from .spairqueue import make_spair_queue
from .termqueue import QueueConfig


@dataclass
class ClassicStats:
    spairs: int = 0
    relprime: int = 0
    lcm_cache: int = 0
    lcm_simple: int = 0
    graph: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    basis_size: int = 0
    monomials: int = 0
    divmask: object = None
    reduced_pairs: object = None

    def check(self):
        assert self.spairs == (self.relprime + self.lcm_cache
                               + self.lcm_simple + self.graph
                               + self.reductions), "pair accounting"

    def rows(self):
        return [
            ("#S-pairs", self.spairs),
            ("rel prime", self.relprime),
            ("lcm cache hits", self.lcm_cache),
            ("lcm simple hits", self.lcm_simple),
            ("lcm graph hits", self.graph),
            ("#reductions", self.reductions),
            ("0-reductions", self.zero_reductions),
        ]


@dataclass
class ClassicConfig:
    queue: QueueConfig = field(default_factory=QueueConfig)
    lookup: str = "divkdtree"
    spair_queue: str = "triangle-tt"
    use_relprime: bool = True
    use_lcm: bool = True
    use_graph: bool = True
    interreduce: bool = True
    trace_pairs: bool = False
    audit: bool = False


def relprime_check(ring: Ring, a: Polynomial, b: Polynomial) -> bool:
    """True iff the lead terms of a and b are relatively prime."""
    return ring.mono_coprime(a.lead_mono, b.lead_mono)


def lcm_criterion(ring: Ring, leads, a: int, b: int, c: int,
                  tri: BitTriangle) -> bool:
    """Anti-circular lcm criterion: c may eliminate (a, b).

    Requires hd c | lcm(hd a, hd b); then (a, b) goes iff
    lcm(a,c) != lcm(a,b) or (a,c) is done, and likewise for (b,c).
    """
    la, lb, lc = leads[a], leads[b], leads[c]
    lab = ring.mono_lcm(la, lb)
    if not ring.mono_divides(lc, lab):
        return False
    lac = ring.mono_lcm(la, lc)
    if lac.key == lab.key and not tri.get(a, c):
        return False
    lbc = ring.mono_lcm(lb, lc)
    if lbc.key == lab.key and not tri.get(b, c):
        return False
    return True


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def graph_criterion(ring: Ring, leads, a: int, b: int, tri: BitTriangle,
                    vertices) -> bool:
    """Bayer's criterion: eliminate (a, b) when a and b are connected in
    the graph on the divisors of m = lcm(hd a, hd b) whose edges are the
    pairs with lcm != m or already eliminated."""
    m = ring.mono_lcm(leads[a], leads[b])
    verts = sorted(set(vertices) | {a, b})
    uf = _UnionFind(verts)
    mkey = m.key
    for s in range(len(verts)):
        u = verts[s]
        for t in range(s + 1, len(verts)):
            v = verts[t]
            if ring.mono_lcm(leads[u], leads[v]).key != mkey or tri.get(u, v):
                uf.union(u, v)
    return uf.find(a) == uf.find(b)


class _ClassicEngine:
    def __init__(self, ring: Ring, inputs, cfg: ClassicConfig):
        self.ring = ring
        self.cfg = cfg
        self.polys = []
        self.live = []
        self.leads = []
        self.lookup = make_lookup(cfg.lookup, ring)
        self.tri = BitTriangle()
        self.cache = {}          # element -> last c that eliminated its pair
        self.pairs = make_spair_queue(cfg.spair_queue, self._pair_key)
        self.stats = ClassicStats()
        if cfg.trace_pairs:
            self.stats.reduced_pairs = []
        for g in inputs:
            self._add(g)

    def _pair_key(self, i, j):
        m = self.ring.mono_lcm(self.leads[i], self.leads[j])
        # smallest lcm degree first, ring-order ties, then newest column
        return (m.deg, m.key, j, i)

    def _add(self, g: Polynomial):
        n = len(self.polys)
        self.polys.append(g)
        self.live.append(True)
        self.leads.append(g.lead_mono)
        self._sweep_new_pairs(n)
        # retire stale elements whose lead the new one divides
        mine = g.lead_mono
        for i in range(n):
            if self.live[i] and self.ring.mono_divides(mine, self.leads[i]):
                self.live[i] = False
                self.lookup.retire(i)
                self.cache.pop(i, None)
                for k, c in list(self.cache.items()):
                    if c == i:
                        del self.cache[k]
        self.lookup.insert(mine, n)
        self.lookup.maybe_rebuild()

    def _try_lcm(self, i, j) -> bool:
        """Cached candidates first, then a full divisor sweep of the lcm."""
        ring = self.ring
        leads = self.leads
        tri = self.tri
        for c in (self.cache.get(i), self.cache.get(j)):
            if c is not None and c != i and c != j and self.live[c] \
                    and lcm_criterion(ring, leads, i, j, c, tri):
                self.stats.lcm_cache += 1
                self.cache[i] = self.cache[j] = c
                return True
        m = ring.mono_lcm(leads[i], leads[j])
        for c in sorted(self.lookup.find_all_divisors(m)):
            if c != i and c != j and lcm_criterion(ring, leads, i, j, c, tri):
                self.stats.lcm_simple += 1
                self.cache[i] = self.cache[j] = c
                return True
        return False

    def _sweep_new_pairs(self, n):
        ring = self.ring
        cfg = self.cfg
        stats = self.stats
        stats.spairs += n
        batch = []
        for i in range(n):
            if cfg.use_relprime and ring.mono_coprime(self.leads[i],
                                                      self.leads[n]):
                stats.relprime += 1
                self.tri.set(i, n)
                continue
            if cfg.use_lcm and self._try_lcm(i, n):
                self.tri.set(i, n)
                continue
            batch.append((i, self._pair_key(i, n)))
        self.pairs.add_column(n, batch)

    def _spoly(self, i, j):
        ring = self.ring
        gi, gj = self.polys[i], self.polys[j]
        m = ring.mono_lcm(self.leads[i], self.leads[j])
        raw = []
        p = ring.char
        ui = ring.mono_div(m, self.leads[i])
        uj = ring.mono_div(m, self.leads[j])
        for c, mo in gi.terms:
            raw.append((c, ring.mono_mul(mo, ui)))
        for c, mo in gj.terms:
            raw.append((p - c, ring.mono_mul(mo, uj)))
        return poly_normalize(ring, raw)

    def run(self):
        cfg = self.cfg
        stats = self.stats
        while len(self.pairs):
            if cfg.audit:
                self.pairs.check_accounting()
            i, j = self.pairs.pop_min()
            if cfg.use_lcm and self._try_lcm(i, j):
                self.tri.set(i, j)
                continue
            if cfg.use_graph:
                m = self.ring.mono_lcm(self.leads[i], self.leads[j])
                verts = self.lookup.find_all_divisors(m)
                if graph_criterion(self.ring, self.leads, i, j, self.tri,
                                   verts):
                    stats.graph += 1
                    self.tri.set(i, j)
                    continue
            stats.reductions += 1
            if stats.reduced_pairs is not None:
                stats.reduced_pairs.append((i, j))
            self.tri.set(i, j)
            spoly = self._spoly(i, j)
            if spoly:
                _, r = classic_reduce(self.ring, spoly, self.polys,
                                      self.lookup, top_only=True,
                                      queue_cfg=cfg.queue,
                                      track_quotients=False)
            else:
                r = spoly
            if r:
                self._add(poly_monic(self.ring, r))
            else:
                stats.zero_reductions += 1
        stats.check()

    def result_basis(self):
        alive = [g for g, ok in zip(self.polys, self.live) if ok]
        return reduced_basis(self.ring, alive, queue_cfg=self.cfg.queue)


def buchberger_run(ring: Ring, polys, cfg: ClassicConfig | None = None):
    """Reduced Groebner basis of the input ideal, plus run statistics."""
    cfg = cfg or ClassicConfig()
    inputs = [poly_normalize(ring, g.terms) for g in polys]
    inputs = [g for g in inputs if g]
    if not inputs:
        raise ValueError("no nonzero input polynomials")
    if cfg.interreduce:
        inputs = interreduce(ring, inputs, queue_cfg=cfg.queue)
    else:
        inputs = [poly_monic(ring, g) for g in inputs]
    # canonical presentation: generators in decreasing lead-term order
    inputs.sort(key=lambda g: g.lead_mono.key, reverse=True)
    engine = _ClassicEngine(ring, inputs, cfg)
    engine.run()
    basis = engine.result_basis()
    engine.stats.basis_size = len(basis)
    engine.stats.monomials = sum(len(g) for g in basis)
    engine.stats.divmask = engine.lookup.stats
    return basis, engine.stats
