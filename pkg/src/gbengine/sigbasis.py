"""Signature-based Groebner basis engine.

Implements the signature-driven completion loop: S-pairs are processed in
ascending signature order, each surviving signature is regular-reduced
once, and the remainder either joins the basis or contributes a minimal
generator of the initial syzygy module.  The full elimination pipeline is
here: non-regular and base-divisor checks plus the signature criterion at
pair construction; duplicate-signature, late signature, Koszul, relatively
prime and singular checks at pop time.

Each basis element carries its sig/lead ratio as a precomputed rank tuple
whose ordering equals the module-order comparison of the formal
quotients, plus an integer ratio id embedding that order, so almost every
signature comparison in the hot paths is one or two integer comparisons.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .division import interreduce, reduced_basis
from .lookup import make_lookup
from .pairbits import BitTriangle
from .poly import Polynomial, poly_monic, poly_normalize
from .ring import Monomial, Ring
from .spairqueue import MinHeap, make_spair_queue
from .termqueue import QueueConfig, ReducerQueue

RATIO_ID_SPACING = 1 << 20

MODULE_ORDERS = ("schreyer", "potop")
TIEBREAKS = ("low-gt", "high-gt")
KOSZUL_PUSH_MODES = ("survivor", "group")


class ModuleOrder:
    """Term order on the free module R^m over the input generators.

    schreyer: compare a*e_i against b*e_j through the ring order on
    a*hd(g_i) vs b*hd(g_j); ties broken by component ("low-gt": the lower
    component wins).  potop: higher component wins outright, ties fall
    back to the Schreyer comparison (within one component that is just the
    ring order).
    """

    __slots__ = ("kind", "tiebreak", "hd_keys", "hd_monos")

    def __init__(self, kind: str, tiebreak: str, input_leads):
        if kind not in MODULE_ORDERS:
            raise ValueError("unknown module order %r" % (kind,))
        if tiebreak not in TIEBREAKS:
            raise ValueError("unknown tiebreak %r" % (tiebreak,))
        self.kind = kind
        self.tiebreak = tiebreak
        self.hd_monos = tuple(input_leads)
        self.hd_keys = tuple(m.key for m in input_leads)

    def _tb(self, comp: int) -> int:
        return -comp if self.tiebreak == "low-gt" else comp

    def sig_key(self, mono: Monomial, comp: int):
        """Ascending sort key; equal keys iff equal module terms."""
        if self.kind == "schreyer":
            return (mono.key + self.hd_keys[comp], self._tb(comp))
        return (comp, mono.key)

    def ratio_rank(self, sig_mono, lead_mono, comp: int):
        """Sort key of the formal quotient sig/lead under this order."""
        if self.kind == "schreyer":
            return (sig_mono.key - lead_mono.key + self.hd_keys[comp],
                    self._tb(comp))
        return (comp, sig_mono.key - lead_mono.key)

    def module_cmp(self, a_mono, a_comp, b_mono, b_comp) -> int:
        ka = self.sig_key(a_mono, a_comp)
        kb = self.sig_key(b_mono, b_comp)
        return -1 if ka < kb else (1 if ka > kb else 0)


class SigEntry:
    """Basis member: signature, monic polynomial and sig/lead ratio data."""

    __slots__ = ("idx", "sig_mono", "sig_comp", "poly", "lead",
                 "ratio_rank", "ratio_id")

    def __init__(self, idx, sig_mono, sig_comp, poly, ratio_rank):
        self.idx = idx
        self.sig_mono = sig_mono
        self.sig_comp = sig_comp
        self.poly = poly
        self.lead = poly.lead_mono
        self.ratio_rank = ratio_rank
        self.ratio_id = None

    def __repr__(self):
        return "SigEntry(idx=%d, comp=%d)" % (self.idx, self.sig_comp)


class RatioTable:
    """Order-embedding of ratio ranks into sparse 64-bit integers.

    New ids land midway between their neighbours; equal ranks share an id.
    When no integer gap remains the whole table is rebuilt with fresh
    spacing.
    """

    __slots__ = ("ranks", "ids", "members")

    def __init__(self):
        self.ranks = []
        self.ids = []
        self.members = []

    def assign(self, entry: SigEntry) -> int:
        ranks = self.ranks
        pos = bisect.bisect_left(ranks, entry.ratio_rank)
        if pos < len(ranks) and ranks[pos] == entry.ratio_rank:
            entry.ratio_id = self.ids[pos]
            self.members[pos].append(entry)
            return entry.ratio_id
        lo = self.ids[pos - 1] if pos > 0 else None
        hi = self.ids[pos] if pos < len(self.ids) else None
        if lo is None and hi is None:
            nid = 0
        elif lo is None:
            nid = hi - RATIO_ID_SPACING
        elif hi is None:
            nid = lo + RATIO_ID_SPACING
        elif hi - lo >= 2:
            nid = (lo + hi) // 2
        else:
            nid = None
        ranks.insert(pos, entry.ratio_rank)
        self.ids.insert(pos, nid if nid is not None else 0)
        self.members.insert(pos, [entry])
        if nid is None:
            self._rebuild()
            nid = self.ids[pos]
        entry.ratio_id = nid
        return nid

    def _rebuild(self):
        for i, group in enumerate(self.members):
            nid = i * RATIO_ID_SPACING
            self.ids[i] = nid
            for e in group:
                e.ratio_id = nid


@dataclass
class SigStats:
    """Counters over the whole run, one bucket per S-pair."""

    spairs: int = 0
    nonregular: int = 0
    basedivisor: int = 0
    sig_early: int = 0
    early_singular: int = 0
    queued: int = 0
    duplicate: int = 0
    sig_late: int = 0
    koszul: int = 0
    relprime: int = 0
    singular_late: int = 0
    need_reduction: int = 0
    to_sb: int = 0
    to_syzygy: int = 0
    sb_size: int = 0
    monomials: int = 0
    divmask: object = None

    def check(self, early_singular_enabled=False):
        assert self.spairs == (self.nonregular + self.basedivisor
                               + self.sig_early + self.early_singular
                               + self.queued), "construction accounting"
        if not early_singular_enabled:
            assert self.early_singular == 0
        assert self.need_reduction == self.to_sb + self.to_syzygy, \
            "reduction-count law"

    def rows(self):
        out = [
            ("#spairs", self.spairs),
            ("elim via non-regular criterion", self.nonregular),
            ("elim via base divisor criterion", self.basedivisor),
            ("elim via signature criterion", self.sig_early),
        ]
        if self.early_singular:
            out.append(("elim via singular criterion(early)",
                        self.early_singular))
        out += [
            ("#spairs queued", self.queued),
            ("elim via duplicate signature", self.duplicate),
            ("elim via signature criterion(late)", self.sig_late),
            ("elim via Koszul criterion", self.koszul),
            ("elim via rel. prime criterion", self.relprime),
            ("elim via singular criterion(late)", self.singular_late),
            ("#spairs which need reduction", self.need_reduction),
            ("reduce to SB elements", self.to_sb),
            ("reduce to new syzygy signatures", self.to_syzygy),
        ]
        return out


@dataclass
class SBConfig:
    module_order: str = "schreyer"
    tiebreak: str = "low-gt"
    queue: QueueConfig = field(default_factory=QueueConfig)
    lookup: str = "divkdtree"
    spair_queue: str = "triangle-tt"
    base_divisors: int = 2
    use_signature: bool = True
    use_koszul: bool = True
    use_singular: bool = True
    early_singular: bool = False
    koszul_push: str = "group"
    bits_on_base_divisor: bool = True
    tri_bit_cap: int | None = None
    interreduce: bool = True
    reducer_select: object = None
    audit: bool = False

    def __post_init__(self):
        if self.koszul_push not in KOSZUL_PUSH_MODES:
            raise ValueError("unknown koszul push mode %r"
                             % (self.koszul_push,))
        if self.base_divisors not in (0, 1, 2):
            raise ValueError("base_divisors takes 0, 1 or 2")


class SyzygySet:
    """Minimal known syzygy signatures, one divisor structure per component."""

    def __init__(self, ring: Ring, num_components: int, kind: str):
        self.ring = ring
        self.lookups = [make_lookup(kind, ring) for _ in range(num_components)]
        self.items = []
        self._next_id = 0

    def divides(self, mono: Monomial, comp: int) -> bool:
        return self.lookups[comp].find_divisor(mono) is not None

    def insert(self, mono: Monomial, comp: int) -> bool:
        lk = self.lookups[comp]
        if lk.find_divisor(mono) is not None:
            return False
        # keep the set an antichain: retire stored multiples of the newcomer
        doomed = [pid for stored, pid in lk.entries()
                  if self.ring.mono_divides(mono, stored)]
        for pid in doomed:
            lk.retire(pid)
        self.items = [(m, c, pid) for (m, c, pid) in self.items
                      if not (c == comp and pid in set(doomed))]
        pid = self._next_id
        self._next_id += 1
        lk.insert(mono, pid)
        self.items.append((mono, comp, pid))
        lk.maybe_rebuild()
        return True

    def signatures(self):
        return [(m, c) for m, c, _ in self.items]

    def audit_minimal(self):
        sigs = self.signatures()
        for i, (m1, c1) in enumerate(sigs):
            for j, (m2, c2) in enumerate(sigs):
                if i != j and c1 == c2:
                    assert not self.ring.mono_divides(m1, m2), \
                        "syzygy set not minimal"


def _ratio_pair(a: SigEntry, b: SigEntry):
    if a.ratio_id is not None and b.ratio_id is not None:
        return a.ratio_id, b.ratio_id
    return a.ratio_rank, b.ratio_rank


def spair_signature(ring: Ring, a: SigEntry, b: SigEntry):
    """Signature of the S-pair of a and b: ((mono, comp), is_regular).

    Compares the stored sig/lead ratios to pick the larger of
    (hd b / gcd) * sig a and (hd a / gcd) * sig b, and only computes the
    winning side.
    """
    ra, rb = _ratio_pair(a, b)
    regular = ra != rb
    win, other = (a, b) if ra >= rb else (b, a)
    we = win.lead.exps
    oe = other.lead.exps
    mult = tuple(y - x if y > x else 0 for x, y in zip(we, oe))
    mono = ring.mono_mul(win.sig_mono, ring.mono(mult))
    return (mono, win.sig_comp), regular


def koszul_signature(ring: Ring, a: SigEntry, b: SigEntry):
    """Signature of the Koszul syzygy of a and b (the larger cross product)."""
    ra, rb = _ratio_pair(a, b)
    win, other = (a, b) if ra >= rb else (b, a)
    return (ring.mono_mul(win.sig_mono, other.lead), win.sig_comp)


def high_base_divisor_eliminates(alpha: SigEntry, beta: SigEntry,
                                 gamma: SigEntry, tri: BitTriangle) -> bool:
    """High-ratio base divisor test: alpha's known-syzygy pair covers
    (beta, gamma) when hd alpha | hd beta and gamma outranks both."""
    for x, y in zip(alpha.lead.exps, beta.lead.exps):
        if x > y:
            return False
    if not (gamma.ratio_id > alpha.ratio_id
            and gamma.ratio_id > beta.ratio_id):
        return False
    return tri.get(alpha.idx, gamma.idx)


def low_base_divisor_bound(alpha: SigEntry, beta: SigEntry):
    """Exponent bound x^v of the low-ratio base divisor criterion.

    Requires sig alpha | sig beta.  For gamma ranked below both, the
    covering divisibility sig S(alpha,gamma) | sig S(beta,gamma) holds
    exactly when hd gamma divides x^v; entries of None mean "no bound".
    """
    if alpha.sig_comp != beta.sig_comp:
        raise ValueError("signatures in different components")
    sa, sb = alpha.sig_mono.exps, beta.sig_mono.exps
    if any(x > y for x, y in zip(sa, sb)):
        raise ValueError("sig alpha does not divide sig beta")
    av = alpha.lead.exps
    bv = beta.lead.exps
    v = []
    for i in range(len(av)):
        p_i = av[i] + sb[i] - sa[i]
        if bv[i] <= p_i:
            v.append(None)
        else:
            v.append(max(p_i, av[i]))
    return tuple(v)


def _divides_bound(mono: Monomial, bound) -> bool:
    for e, b in zip(mono.exps, bound):
        if b is not None and e > b:
            return False
    return True


class _SBEngine:
    def __init__(self, ring: Ring, inputs, cfg: SBConfig):
        self.ring = ring
        self.cfg = cfg
        self.p = ring.char
        self.morder = ModuleOrder(cfg.module_order, cfg.tiebreak,
                                  [g.lead_mono for g in inputs])
        self.m = len(inputs)
        self.entries = []
        self.ratios = RatioTable()
        self.lead_lookup = make_lookup(cfg.lookup, ring)
        self.sig_lookups = [make_lookup(cfg.lookup, ring)
                            for _ in range(self.m)]
        self.syz = SyzygySet(ring, self.m, cfg.lookup)
        self.tri = BitTriangle(cfg.tri_bit_cap)
        self.koszul = MinHeap()
        self.pairs = make_spair_queue(cfg.spair_queue, self._pair_key)
        self.stats = SigStats()
        self._last_key = None
        for i, g in enumerate(inputs):
            self._append_entry(ring.one, i, g)

    # -- bookkeeping ------------------------------------------------------

    def _append_entry(self, sig_mono, sig_comp, poly):
        idx = len(self.entries)
        rank = self.morder.ratio_rank(sig_mono, poly.lead_mono, sig_comp)
        entry = SigEntry(idx, sig_mono, sig_comp, poly, rank)
        self.ratios.assign(entry)
        self.entries.append(entry)
        self._make_new_spairs(entry)
        self.lead_lookup.insert(entry.lead, idx)
        self.lead_lookup.maybe_rebuild()
        self.sig_lookups[sig_comp].insert(sig_mono, idx)
        self.sig_lookups[sig_comp].maybe_rebuild()
        return entry

    def _pair_key(self, i, j):
        sig, _ = spair_signature(self.ring, self.entries[i],
                                 self.entries[j])
        return self.morder.sig_key(*sig)

    def _set_bits(self, pairs):
        tri = self.tri
        for i, j in pairs:
            tri.set(i, j)

    # -- S-pair construction ----------------------------------------------

    def _find_base_divisors(self, beta: SigEntry):
        high = low = None
        vbound = None
        if self.cfg.base_divisors >= 1:
            cands = self.lead_lookup.find_all_divisors(beta.lead)
            if cands:
                entries = self.entries
                high = max((entries[i] for i in cands),
                           key=lambda e: (e.ratio_id, -e.idx))
        if self.cfg.base_divisors >= 2:
            cands = self.sig_lookups[beta.sig_comp].find_all_divisors(
                beta.sig_mono)
            if cands:
                entries = self.entries
                low = max((entries[i] for i in cands),
                          key=lambda e: (e.ratio_id, -e.idx))
                vbound = low_base_divisor_bound(low, beta)
        return high, low, vbound

    def _make_new_spairs(self, beta: SigEntry):
        stats = self.stats
        cfg = self.cfg
        bidx = beta.idx
        stats.spairs += bidx
        if bidx == 0:
            return
        high = low = None
        vbound = None
        if cfg.base_divisors and not self.tri.dropped:
            high, low, vbound = self._find_base_divisors(beta)
        brid = beta.ratio_id
        tri = self.tri
        syz = self.syz
        morder = self.morder
        batch = []
        for gamma in self.entries[:bidx]:
            grid = gamma.ratio_id
            if grid == brid:
                stats.nonregular += 1
                continue
            if high is not None and grid > brid and grid > high.ratio_id \
                    and tri.get(high.idx, gamma.idx):
                stats.basedivisor += 1
                if cfg.bits_on_base_divisor:
                    tri.set(gamma.idx, bidx)
                continue
            if low is not None and grid < brid and grid < low.ratio_id \
                    and _divides_bound(gamma.lead, vbound) \
                    and tri.get(low.idx, gamma.idx):
                stats.basedivisor += 1
                if cfg.bits_on_base_divisor:
                    tri.set(gamma.idx, bidx)
                continue
            sig, _ = spair_signature(self.ring, beta, gamma)
            if cfg.use_signature and syz.divides(sig[0], sig[1]):
                stats.sig_early += 1
                tri.set(gamma.idx, bidx)
                continue
            if cfg.early_singular and self._early_singular(sig, beta, gamma):
                stats.early_singular += 1
                continue
            batch.append((gamma.idx, morder.sig_key(*sig)))
        stats.queued += len(batch)
        self.pairs.add_column(bidx, batch)

    def _early_singular(self, sig, beta, gamma):
        # a module term with this signature and a strictly smaller lead
        # term rewrites the pair away (strictly larger sig/lead ratio)
        winner = beta if beta.ratio_id > gamma.ratio_id else gamma
        mono, comp = sig
        for i in self.sig_lookups[comp].find_all_divisors(mono):
            if self.entries[i].ratio_id > winner.ratio_id:
                return True
        return False

    # -- pop-time pipeline --------------------------------------------------

    def _pop_group(self):
        pairs = self.pairs
        if self.cfg.audit:
            pairs.check_accounting()
        tkey = pairs.peek_min_key()
        group = []
        while True:
            group.append(pairs.pop_min())
            nxt = pairs.peek_min_key()
            if nxt is None or nxt != tkey:
                break
        group.sort(key=lambda ij: (ij[1], ij[0]))
        if self._last_key is not None:
            assert tkey >= self._last_key, "signature monotonicity"
        self._last_key = tkey
        stats = self.stats
        cfg = self.cfg
        stats.duplicate += len(group) - 1
        i0, j0 = group[0]
        entries = self.entries
        sig, _ = spair_signature(self.ring, entries[i0], entries[j0])
        tmono, tcomp = sig
        if cfg.use_signature and self.syz.divides(tmono, tcomp):
            stats.sig_late += 1
            self._set_bits(group)
            return None
        if cfg.use_koszul:
            kq = self.koszul
            top = kq.peek()
            while top is not None and top[0] < tkey:
                kq.pop()
                top = kq.peek()
            if top is not None and top[0] == tkey:
                stats.koszul += 1
                self.syz.insert(tmono, tcomp)
                self._set_bits(group)
                return None
        coprime = self.ring.mono_coprime
        for i, j in group:
            if coprime(entries[i].lead, entries[j].lead):
                stats.relprime += 1
                self.syz.insert(tmono, tcomp)
                self._set_bits(group)
                return None
        if cfg.use_koszul:
            pushees = group if cfg.koszul_push == "group" else group[:1]
            for i, j in pushees:
                ksig = koszul_signature(self.ring, entries[i], entries[j])
                self.koszul.push((self.morder.sig_key(*ksig),) + ksig)
        champion, tmult = self._champion(tmono, tcomp)
        if cfg.use_singular and not self._regular_top_reducible(
                self.ring.mono_mul(tmult, champion.lead), champion.ratio_id):
            stats.singular_late += 1
            return None
        return sig, champion, tmult, group

    def _champion(self, tmono, tcomp):
        """Basis element whose signature divides T with the smallest lead
        multiple; equivalently the divisor of maximal sig/lead ratio."""
        cands = self.sig_lookups[tcomp].find_all_divisors(tmono)
        assert cands, "no signature divisor for a popped S-pair signature"
        entries = self.entries
        champ = max((entries[i] for i in cands),
                    key=lambda e: (e.ratio_id, -e.idx))
        tmult = self.ring.mono_div(tmono, champ.sig_mono)
        if self.cfg.audit:
            best = min(self.ring.mono_mul(
                self.ring.mono_div(tmono, entries[i].sig_mono),
                entries[i].lead).key for i in cands)
            got = self.ring.mono_mul(tmult, champ.lead).key
            assert got == best, "champion lead not minimal"
        return champ, tmult

    def _regular_top_reducible(self, lead_mono, rank_or_id):
        """Any reducer of lead_mono with ratio strictly below the given one?"""
        entries = self.entries
        if isinstance(rank_or_id, tuple):
            for i in self.lead_lookup.find_all_divisors(lead_mono):
                if entries[i].ratio_rank < rank_or_id:
                    return True
        else:
            for i in self.lead_lookup.find_all_divisors(lead_mono):
                if entries[i].ratio_id < rank_or_id:
                    return True
        return False

    # -- regular reduction ---------------------------------------------------

    def _regular_reduce(self, tmono, tcomp, seed_entry, seed_mult):
        ring = self.ring
        cfg = self.cfg
        p = self.p
        queue = ReducerQueue(ring, cfg.queue)
        queue.push_product(1, seed_mult, seed_entry.poly)
        morder = self.morder
        schreyer = morder.kind == "schreyer"
        if schreyer:
            base = tmono.key + morder.hd_keys[tcomp]
            tb = -tcomp if morder.tiebreak == "low-gt" else tcomp
        else:
            base = tmono.key
        entries = self.entries
        lookup = self.lead_lookup
        select = cfg.reducer_select
        remainder = []
        while True:
            top = queue.pop_max()
            if top is None:
                break
            coeff, mono = top
            rank = (base - mono.key, tb) if schreyer else (tcomp,
                                                           base - mono.key)
            reducer = None
            if select is None:
                best = -1
                for i in lookup.find_all_divisors(mono):
                    if (best < 0 or i < best) and entries[i].ratio_rank < rank:
                        best = i
                if best >= 0:
                    reducer = entries[best]
            else:
                valid = [entries[i] for i in lookup.find_all_divisors(mono)
                         if entries[i].ratio_rank < rank]
                if valid:
                    valid.sort(key=lambda e: e.idx)
                    reducer = select(valid)
            if reducer is None:
                remainder.append(top)
                continue
            mult = ring.mono_div(mono, reducer.lead)
            queue.push_product(p - coeff, mult, reducer.poly, start=1)
        return Polynomial(remainder)

    # -- main loop -------------------------------------------------------------

    def run(self):
        stats = self.stats
        while len(self.pairs):
            res = self._pop_group()
            if res is None:
                continue
            (tmono, tcomp), champion, tmult, group = res
            rem = self._regular_reduce(tmono, tcomp, champion, tmult)
            if rem:
                rank = self.morder.ratio_rank(tmono, rem.lead_mono, tcomp)
                if self._singular_top_reducible(rem.lead_mono, rank):
                    # the champion construction makes this unreachable while
                    # the singular criterion is enabled
                    assert not self.cfg.use_singular, "singular remainder"
                    stats.singular_late += 1
                    continue
                stats.need_reduction += 1
                stats.to_sb += 1
                self._append_entry(tmono, tcomp, poly_monic(self.ring, rem))
            else:
                stats.need_reduction += 1
                stats.to_syzygy += 1
                self.syz.insert(tmono, tcomp)
                self._set_bits(group)
        stats.sb_size = len(self.entries)
        stats.monomials = sum(len(e.poly) for e in self.entries)
        stats.divmask = self.lead_lookup.stats
        stats.check(self.cfg.early_singular)
        if self.cfg.audit:
            self.syz.audit_minimal()

    def _singular_top_reducible(self, lead_mono, rank):
        entries = self.entries
        for i in self.lead_lookup.find_all_divisors(lead_mono):
            if entries[i].ratio_rank == rank:
                return True
        return False


class SBResult:
    """Signature basis entries, minimal syzygy signatures and counters."""

    def __init__(self, ring, morder, entries, syzygies, stats, cfg):
        self.ring = ring
        self.module_order = morder
        self.entries = entries
        self.syzygies = syzygies
        self.stats = stats
        self.config = cfg

    def images(self):
        return [e.poly for e in self.entries]

    def groebner_basis(self):
        return reduced_basis(self.ring, self.images(),
                             queue_cfg=self.config.queue)


def sb_run(ring: Ring, polys, cfg: SBConfig | None = None) -> SBResult:
    """Compute a signature Groebner basis and the initial syzygy module."""
    cfg = cfg or SBConfig()
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
    engine = _SBEngine(ring, inputs, cfg)
    engine.run()
    syzygies = sorted(engine.syz.signatures(),
                      key=lambda mc: engine.morder.sig_key(*mc))
    return SBResult(ring, engine.morder, engine.entries, syzygies,
                    engine.stats, cfg)
