"""Divisor-query structures over a dynamic monomial set.

Four interchangeable variants answer "which stored monomials divide q":

* list        - scan every entry
* divlist     - scan with a 32-bit divmask pre-filter per entry
* kdtree      - binary tree whose interior nodes hold a pure power x_i^k;
                the right subtree holds exactly the multiples of x_i^k
* divkdtree   - kd-tree whose nodes also carry the divmask of the gcd of
                their subtree, pruning whole subtrees at once

Entries are retired by tombstone and physically dropped at the next
rebuild; a rebuild also recalibrates the divmap so masks always fit the
current contents.
"""

from __future__ import annotations

from .ring import Monomial, Ring

MASK_BITS = 32
DEFAULT_LEAF_CAPACITY = 32
REBUILD_CHURN_RATIO = 0.5

LOOKUP_KINDS = ("list", "divlist", "kdtree", "divkdtree")


class DivMap:
    """32 pure-power bit predicates x_i >= t, derived from a monomial set.

    Bits are spread round-robin over the first min(32, num_vars)
    variables; each variable's thresholds are evenly spaced strictly
    between its min and max exponent in the calibration set (the average
    of min and max when the variable gets a single bit).
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    @classmethod
    def trivial(cls, ring: Ring):
        nv = min(MASK_BITS, ring.num_vars)
        return cls([(b % nv, 1) for b in range(MASK_BITS)])

    @classmethod
    def calibrate(cls, ring: Ring, monomials) -> "DivMap":
        monomials = list(monomials)
        if not monomials:
            raise ValueError("cannot calibrate a divmap from an empty set")
        nv = min(MASK_BITS, ring.num_vars)
        lo = list(monomials[0].exps[:nv])
        hi = list(lo)
        for m in monomials[1:]:
            e = m.exps
            for i in range(nv):
                if e[i] < lo[i]:
                    lo[i] = e[i]
                elif e[i] > hi[i]:
                    hi[i] = e[i]
        per_var = [0] * nv
        for b in range(MASK_BITS):
            per_var[b % nv] += 1
        entries = []
        for i in range(nv):
            c = per_var[i]
            span = hi[i] - lo[i]
            for j in range(c):
                # one bit: floor((lo+hi)/2); several: evenly spaced in between
                entries.append((i, lo[i] + span * (j + 1) // (c + 1)))
        return cls(entries)

    def mask_of(self, mono: Monomial) -> int:
        e = mono.exps
        mask = 0
        bit = 1
        for i, t in self.entries:
            if e[i] >= t:
                mask |= bit
            bit <<= 1
        return mask


def may_divide(a_mask: int, b_mask: int) -> bool:
    """False guarantees the monomial behind a_mask does not divide b's."""
    return not (a_mask & ~b_mask)


class DivmaskStats:
    """Hit/miss/divisible accounting for mask consultations (one structure)."""

    __slots__ = ("hits", "misses", "divisibilities")

    def __init__(self):
        self.hits = 0
        self.misses = 0
        self.divisibilities = 0

    @property
    def consultations(self):
        return self.hits + self.misses + self.divisibilities

    def hit_rate(self):
        d = self.hits + self.misses
        return self.hits / d if d else 0.0

    def effective_hit_rate(self):
        d = self.consultations
        return self.hits / d if d else 0.0


# Entry record layout: [mono, payload-id, mask, live-flag].
_MONO, _PID, _MASK, _LIVE = range(4)


class _LookupBase:
    def __init__(self, ring: Ring, use_masks: bool):
        self.ring = ring
        self.use_masks = use_masks
        self.divmap = DivMap.trivial(ring) if use_masks else None
        self.stats = DivmaskStats()
        self.by_id = {}
        self.live = 0
        self.churn = 0
        # query results keyed by packed monomial key; any mutation clears
        # them, so between mutations repeated queries cost one dict hit.
        # Callers must not mutate returned lists.
        self._one_cache = {}
        self._all_cache = {}

    def find_divisor(self, q: Monomial):
        k = q.key
        cache = self._one_cache
        if k in cache:
            return cache[k]
        out = self._find_divisor(q)
        cache[k] = out
        return out

    def find_all_divisors(self, q: Monomial):
        k = q.key
        cache = self._all_cache
        out = cache.get(k)
        if out is None:
            out = self._find_all_divisors(q)
            cache[k] = out
        return out

    def _clear_caches(self):
        if self._one_cache:
            self._one_cache = {}
        if self._all_cache:
            self._all_cache = {}

    def __len__(self):
        return self.live

    def entries(self):
        """Live (mono, payload) pairs, in no particular order."""
        for rec in self.by_id.values():
            if rec[_LIVE]:
                yield rec[_MONO], rec[_PID]

    def _new_record(self, mono, pid):
        if pid in self.by_id:
            raise ValueError("payload id %r already present" % (pid,))
        mask = self.divmap.mask_of(mono) if self.use_masks else 0
        rec = [mono, pid, mask, True]
        self.by_id[pid] = rec
        self.live += 1
        self.churn += 1
        self._clear_caches()
        return rec

    def retire(self, pid) -> None:
        try:
            rec = self.by_id[pid]
        except KeyError:
            raise KeyError("unknown payload id %r" % (pid,))
        rec[_LIVE] = False
        del self.by_id[pid]
        self.live -= 1
        self.churn += 1
        self._clear_caches()

    def maybe_rebuild(self) -> bool:
        if self.churn <= self.live * REBUILD_CHURN_RATIO:
            return False
        self.rebuild()
        return True

    def rebuild(self) -> None:
        recs = list(self.by_id.values())
        if self.use_masks and recs:
            self.divmap = DivMap.calibrate(self.ring, [r[_MONO] for r in recs])
            mask_of = self.divmap.mask_of
            for r in recs:
                r[_MASK] = mask_of(r[_MONO])
        self.churn = 0
        self._clear_caches()
        self._rebuild_storage(recs)

    def _rebuild_storage(self, recs):
        raise NotImplementedError


class ListLookup(_LookupBase):
    """Flat list of entries; the oracle the tree variants are checked against."""

    def __init__(self, ring, use_masks=False, leaf_capacity=None):
        super().__init__(ring, use_masks)
        self.records = []

    def insert(self, mono: Monomial, pid) -> None:
        self.records.append(self._new_record(mono, pid))

    def _rebuild_storage(self, recs):
        self.records = recs

    def _find_divisor(self, q: Monomial):
        qexps = q.exps
        stats = self.stats
        if self.use_masks:
            notq = ~self.divmap.mask_of(q)
            for rec in self.records:
                if not rec[_LIVE]:
                    continue
                if rec[_MASK] & notq:
                    stats.hits += 1
                    continue
                if _divides(rec[_MONO].exps, qexps):
                    stats.divisibilities += 1
                    return rec[_PID]
                stats.misses += 1
            return None
        for rec in self.records:
            if rec[_LIVE] and _divides(rec[_MONO].exps, qexps):
                return rec[_PID]
        return None

    def _find_all_divisors(self, q: Monomial):
        qexps = q.exps
        out = []
        stats = self.stats
        if self.use_masks:
            notq = ~self.divmap.mask_of(q)
            for rec in self.records:
                if not rec[_LIVE]:
                    continue
                if rec[_MASK] & notq:
                    stats.hits += 1
                    continue
                if _divides(rec[_MONO].exps, qexps):
                    stats.divisibilities += 1
                    out.append(rec[_PID])
                else:
                    stats.misses += 1
            return out
        for rec in self.records:
            if rec[_LIVE] and _divides(rec[_MONO].exps, qexps):
                out.append(rec[_PID])
        return out


def _divides(a_exps, b_exps) -> bool:
    for x, y in zip(a_exps, b_exps):
        if x > y:
            return False
    return True


class _KdLeaf:
    __slots__ = ("records",)

    def __init__(self, records):
        self.records = records


class _KdNode:
    __slots__ = ("var", "exp", "left", "right", "mask", "gcd")

    def __init__(self, var, exp, left, right, mask, gcd):
        self.var = var
        self.exp = exp
        self.left = left      # entries NOT divisible by x_var^exp
        self.right = right    # entries divisible by x_var^exp
        self.mask = mask      # mask of the gcd of the subtree (divmask variant)
        self.gcd = gcd        # gcd exponent list of the subtree (divmask variant)


class KdLookup(_LookupBase):
    """Kd-tree over exponent vectors, leaves split on pure powers."""

    def __init__(self, ring, use_masks=False,
                 leaf_capacity=DEFAULT_LEAF_CAPACITY):
        super().__init__(ring, use_masks)
        self.leaf_capacity = leaf_capacity
        self.root = _KdLeaf([])

    # -- construction ----------------------------------------------------

    def insert(self, mono: Monomial, pid) -> None:
        rec = self._new_record(mono, pid)
        node = self.root
        parent = None
        pside = 0
        exps = mono.exps
        while isinstance(node, _KdNode):
            if self.use_masks:
                node.mask &= rec[_MASK]
                g = node.gcd
                for i, e in enumerate(exps):
                    if e < g[i]:
                        g[i] = e
            parent = node
            if exps[node.var] >= node.exp:
                node, pside = node.right, 1
            else:
                node, pside = node.left, 0
        node.records.append(rec)
        if len(node.records) > self.leaf_capacity:
            split = self._split_leaf(node, parent.var if parent else -1)
            if split is not None:
                if parent is None:
                    self.root = split
                elif pside:
                    parent.right = split
                else:
                    parent.left = split

    def _split_leaf(self, leaf, parent_var):
        # Split variable cycles from the parent's; the split exponent is the
        # average of the min and max exponent among the leaf's monomials.
        n = self.ring.num_vars
        var = (parent_var + 1) % n
        for _ in range(n):
            los = his = None
            for rec in leaf.records:
                e = rec[_MONO].exps[var]
                if los is None or e < los:
                    los = e
                if his is None or e > his:
                    his = e
            if los != his:
                exp = max(1, (los + his + 1) // 2)
                left, right = [], []
                for rec in leaf.records:
                    (right if rec[_MONO].exps[var] >= exp else left).append(rec)
                if left and right:
                    return _KdNode(var, exp, _KdLeaf(left), _KdLeaf(right),
                                   *self._subtree_summary(leaf.records))
            var = (var + 1) % n
        return None  # all member exponent vectors equal: cannot split

    def _subtree_summary(self, recs):
        if not self.use_masks:
            return 0, None
        mask = -1
        gcd = list(recs[0][_MONO].exps)
        for rec in recs:
            mask &= rec[_MASK]
            e = rec[_MONO].exps
            for i in range(len(gcd)):
                if e[i] < gcd[i]:
                    gcd[i] = e[i]
        return mask, gcd

    def _rebuild_storage(self, recs):
        self.root = self._bulk_build(recs, -1)

    def _bulk_build(self, recs, parent_var):
        if len(recs) <= self.leaf_capacity:
            return _KdLeaf(recs)
        leaf = _KdLeaf(recs)
        node = self._split_leaf(leaf, parent_var)
        if node is None:
            return leaf
        node.left = self._bulk_build(node.left.records, node.var)
        node.right = self._bulk_build(node.right.records, node.var)
        return node

    # -- queries ----------------------------------------------------------

    def _find_divisor(self, q: Monomial):
        out = self._query(q, first_only=True)
        return out[0] if out else None

    def _find_all_divisors(self, q: Monomial):
        return self._query(q, first_only=False)

    def _query(self, q, first_only):
        qexps = q.exps
        stats = self.stats
        masks = self.use_masks
        notq = ~self.divmap.mask_of(q) if masks else 0
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, _KdNode):
                if masks:
                    if node.mask & notq:
                        # subtree gcd cannot divide q: prune both children
                        stats.hits += 1
                        continue
                    if _divides(node.gcd, qexps):
                        stats.divisibilities += 1
                    else:
                        stats.misses += 1
                if qexps[node.var] >= node.exp:
                    stack.append(node.right)
                stack.append(node.left)
                continue
            for rec in node.records:
                if not rec[_LIVE]:
                    continue
                if masks:
                    if rec[_MASK] & notq:
                        stats.hits += 1
                        continue
                    if _divides(rec[_MONO].exps, qexps):
                        stats.divisibilities += 1
                        out.append(rec[_PID])
                        if first_only:
                            return out
                    else:
                        stats.misses += 1
                elif _divides(rec[_MONO].exps, qexps):
                    out.append(rec[_PID])
                    if first_only:
                        return out
        return out

    # -- debug audit -------------------------------------------------------

    def audit(self) -> None:
        """Assert the pure-power routing invariant over the whole tree."""
        def walk(node):
            if isinstance(node, _KdLeaf):
                return [rec for rec in node.records]
            lrecs = walk(node.left)
            rrecs = walk(node.right)
            for rec in lrecs:
                assert rec[_MONO].exps[node.var] < node.exp, "left routing"
            for rec in rrecs:
                assert rec[_MONO].exps[node.var] >= node.exp, "right routing"
            return lrecs + rrecs
        walk(self.root)


def make_lookup(kind: str, ring: Ring,
                leaf_capacity: int = DEFAULT_LEAF_CAPACITY):
    if kind == "list":
        return ListLookup(ring, use_masks=False)
    if kind == "divlist":
        return ListLookup(ring, use_masks=True)
    if kind == "kdtree":
        return KdLookup(ring, use_masks=False, leaf_capacity=leaf_capacity)
    if kind == "divkdtree":
        return KdLookup(ring, use_masks=True, leaf_capacity=leaf_capacity)
    raise ValueError("unknown lookup kind %r" % (kind,))
