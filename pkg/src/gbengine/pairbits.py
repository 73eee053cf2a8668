"""Triangular bit array over unordered basis-element pairs.

Used by the classic algorithm to mark eliminated-or-reduced pairs and by
the signature algorithm to mark pairs whose S-pair signature is known to
be a syzygy signature.  An optional bit cap implements the memory
fallback: on overflow the whole triangle is dropped and every later query
answers False.
"""

from __future__ import annotations


class BitTriangle:
    __slots__ = ("bits", "cap_bits", "dropped")

    def __init__(self, cap_bits: int | None = None):
        self.bits = bytearray()
        self.cap_bits = cap_bits
        self.dropped = False

    @staticmethod
    def _index(i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return j * (j - 1) // 2 + i

    def set(self, i: int, j: int) -> None:
        if self.dropped or i == j:
            return
        idx = self._index(i, j)
        if self.cap_bits is not None and idx >= self.cap_bits:
            self.drop()
            return
        byte = idx >> 3
        if byte >= len(self.bits):
            self.bits.extend(b"\0" * (byte + 1 - len(self.bits)))
        self.bits[byte] |= 1 << (idx & 7)

    def get(self, i: int, j: int) -> bool:
        if self.dropped or i == j:
            return False
        idx = self._index(i, j)
        byte = idx >> 3
        if byte >= len(self.bits):
            return False
        return bool(self.bits[byte] & (1 << (idx & 7)))

    def drop(self) -> None:
        """Memory fallback: forget everything, answer False from now on."""
        self.bits = bytearray()
        self.dropped = True
