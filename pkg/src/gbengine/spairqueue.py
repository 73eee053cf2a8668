"""S-pair priority queues.

The main structure is the pair triangle: every new basis element j gets a
column holding the row indices i of its pairs (i, j), sorted by the pair
key; the keys themselves are discarded after sorting, and a small front
queue over the per-column minima yields the global minimum.  Columns
store bare integers (16-bit entries while j < 2^16, 32-bit beyond), so a
queued pair costs one integer plus one materialized key per column.

Two reference queues keep every pair with its key in a single heap or
tournament tree; they trade memory for simplicity and are used for
cross-checking.
"""

from __future__ import annotations

from array import array

SPAIR_QUEUE_KINDS = ("triangle-tt", "triangle-heap", "heap", "tourtree")

_U16_LIMIT = 1 << 16


class MinHeap:
    """Binary min-heap over (key, payload) with replace-top."""

    __slots__ = ("a",)

    def __init__(self):
        self.a = [None]

    def __len__(self):
        return len(self.a) - 1

    def peek(self):
        a = self.a
        return a[1] if len(a) > 1 else None

    def push(self, e):
        a = self.a
        a.append(e)
        i = len(a) - 1
        k = e[0]
        while i > 1:
            j = i >> 1
            if a[j][0] <= k:
                break
            a[i] = a[j]
            i = j
        a[i] = e

    def pop(self):
        a = self.a
        n = len(a) - 1
        if n == 0:
            return None
        top = a[1]
        last = a.pop()
        n -= 1
        if n:
            i = 1
            while True:
                l = i << 1
                if l > n:
                    break
                r = l + 1
                c = r if r <= n and a[r][0] < a[l][0] else l
                a[i] = a[c]
                i = c
            k = last[0]
            while i > 1:
                j = i >> 1
                if a[j][0] <= k:
                    break
                a[i] = a[j]
                i = j
            a[i] = last
        return top

    def replace_top(self, e):
        a = self.a
        n = len(a) - 1
        if n == 0:
            raise ValueError("replace_top on empty queue")
        k = e[0]
        i = 1
        while True:
            l = i << 1
            if l > n:
                break
            r = l + 1
            c = r if r <= n and a[r][0] < a[l][0] else l
            if a[c][0] >= k:
                break
            a[i] = a[c]
            i = c
        a[i] = e


class MinTourTree:
    """Tournament tree returning the minimum; fast winner replacement."""

    __slots__ = ("cap", "leaves", "inner", "free", "size")

    def __init__(self):
        self.cap = 2
        self.leaves = [None, None]
        self.inner = [0, 0]
        self.free = [1, 0]
        self.size = 0

    def __len__(self):
        return self.size

    def _grow(self):
        old = [e for e in self.leaves if e is not None]
        self.cap *= 2
        self.leaves = [None] * self.cap
        for i, e in enumerate(old):
            self.leaves[i] = e
        self.free = list(range(self.cap - 1, len(old) - 1, -1))
        self.inner = [0] * self.cap
        for leaf in range(0, self.cap, 2):
            self._replay(leaf)

    def _winner_of(self, pos):
        return pos - self.cap if pos >= self.cap else self.inner[pos]

    def _pick(self, i, j):
        a, b = self.leaves[i], self.leaves[j]
        if a is None:
            return j
        if b is None:
            return i
        return i if a[0] <= b[0] else j

    def _replay(self, leaf):
        inner = self.inner
        pos = (self.cap + leaf) >> 1
        while pos >= 1:
            l = pos << 1
            inner[pos] = self._pick(self._winner_of(l), self._winner_of(l + 1))
            pos >>= 1

    def push(self, e):
        if not self.free:
            self._grow()
        leaf = self.free.pop()
        self.leaves[leaf] = e
        self.size += 1
        self._replay(leaf)

    def peek(self):
        if self.size == 0:
            return None
        return self.leaves[self.inner[1]]

    def pop(self):
        if self.size == 0:
            return None
        leaf = self.inner[1]
        e = self.leaves[leaf]
        self.leaves[leaf] = None
        self.free.append(leaf)
        self.size -= 1
        self._replay(leaf)
        return e

    def replace_top(self, e):
        if self.size == 0:
            raise ValueError("replace_top on empty queue")
        leaf = self.inner[1]
        self.leaves[leaf] = e
        self._replay(leaf)


def _front(kind):
    return MinTourTree() if kind == "tourtree" else MinHeap()


class PairTriangle:
    """Per-column sorted row lists plus a front queue of column minima.

    key_fn(i, j) recomputes a pair's key on demand; it must be
    deterministic since all keys but the column minimum are discarded.
    """

    __slots__ = ("key_fn", "front", "cols", "queued_bytes", "pairs_16",
                 "pairs_32")

    def __init__(self, key_fn, front: str = "tourtree"):
        self.key_fn = key_fn
        self.front = _front(front)
        self.cols = {}
        self.queued_bytes = 0
        self.pairs_16 = 0
        self.pairs_32 = 0

    def __len__(self):
        return self.pairs_16 + self.pairs_32

    def add_column(self, j: int, pairs) -> None:
        """Register the batch of pairs (i, key) for the new element j."""
        if not pairs:
            return
        if j in self.cols:
            raise ValueError("column %d already present" % j)
        pairs = sorted(pairs, key=lambda t: t[1])
        # rows kept descending by key so the column minimum pops from the end
        code = "H" if j < _U16_LIMIT else ("I" if array("I").itemsize == 4
                                           else "L")
        col = array(code, [i for i, _ in reversed(pairs)])
        self.cols[j] = col
        n = len(col)
        if j < _U16_LIMIT:
            self.pairs_16 += n
        else:
            self.pairs_32 += n
        self.queued_bytes += n * col.itemsize
        self.front.push((pairs[0][1], j))

    def peek_min_key(self):
        top = self.front.peek()
        return top[0] if top is not None else None

    def pop_min(self):
        top = self.front.peek()
        if top is None:
            return None
        _, j = top
        col = self.cols[j]
        i = col.pop()
        self.queued_bytes -= col.itemsize
        if j < _U16_LIMIT:
            self.pairs_16 -= 1
        else:
            self.pairs_32 -= 1
        if col:
            # recompute the successor's key and sink it into the front
            self.front.replace_top((self.key_fn(col[-1], j), j))
        else:
            self.front.pop()
            del self.cols[j]
        return (i, j)

    def check_accounting(self):
        assert self.queued_bytes <= 2 * self.pairs_16 + 4 * self.pairs_32, \
            "pair triangle byte accounting"
        assert len(self.front) <= len(self.cols) or not self.cols, \
            "front queue size"
        assert len(self.front) == len(self.cols), "front/column mismatch"


class FlatPairQueue:
    """All pairs individually queued with their keys (heap or tourtree)."""

    __slots__ = ("q",)

    def __init__(self, backend: str = "heap"):
        self.q = _front("tourtree" if backend == "tourtree" else "heap")

    def __len__(self):
        return len(self.q)

    def add_column(self, j, pairs) -> None:
        for i, key in pairs:
            self.q.push((key, j, i))

    def peek_min_key(self):
        top = self.q.peek()
        return top[0] if top is not None else None

    def pop_min(self):
        top = self.q.pop()
        if top is None:
            return None
        return (top[2], top[1])

    def check_accounting(self):
        pass


def make_spair_queue(kind: str, key_fn):
    if kind == "triangle-tt":
        return PairTriangle(key_fn, front="tourtree")
    if kind == "triangle-heap":
        return PairTriangle(key_fn, front="heap")
    if kind in ("heap", "tourtree"):
        return FlatPairQueue(kind)
    raise ValueError("unknown S-pair queue kind %r" % (kind,))
