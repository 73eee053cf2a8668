"""Prime fields, monomials and ring term orders.

Monomial comparison is the hottest operation in the whole engine, so every
monomial caches an integer sort key.  All supported orders are linear
functionals of the exponent vector, packed into one big integer with
28-bit digits; comparing keys as integers is then equivalent to comparing
monomials in the ring order, and the key of a product is the sum of the
keys.  The linearity also holds for formal exponent differences (used by
sig/lead ratio comparisons), as long as every entry stays well below the
digit base.
"""

from __future__ import annotations

from operator import add as _add, sub as _sub

GREVLEX = "grevlex"
LEX = "lex"
ELIM = "elim"

LT, EQ, GT = -1, 0, 1

# Exponents are capped so that packed keys of monomials, and of differences
# of a few monomials, never produce a digit carry.
MAX_EXPONENT = 1 << 16
_DIGIT_BASE = 1 << 28

_HASH_SEED = 0xCBF29CE484222325
_HASH_MULT = 0x100000001B3
_HASH_MASK = 0xFFFFFFFFFFFFFFFF

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Deterministic Miller-Rabin for anything below 3.3 * 10^24.
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ff_inv(a: int, p: int) -> int:
    """Multiplicative inverse of a modulo the prime p."""
    if a % p == 0:
        raise ValueError("not invertible")
    return pow(a, -1, p)


class Monomial:
    """Exponent vector with cached degree, order key and hash digest."""

    __slots__ = ("exps", "deg", "key", "_hash")

    def __init__(self, exps, deg, key):
        self.exps = exps
        self.deg = deg
        self.key = key
        self._hash = None

    def __hash__(self):
        h = self._hash
        if h is None:
            # multiply-xor fold over the exponents with a fixed odd constant
            h = _HASH_SEED
            for e in self.exps:
                h = ((h ^ e) * _HASH_MULT) & _HASH_MASK
            self._hash = h
        return h

    def __eq__(self, other):
        return self is other or self.exps == other.exps

    def __ne__(self, other):
        return self.exps != other.exps

    def __repr__(self):
        return "Monomial%r" % (self.exps,)


class Ring:
    """Polynomial ring F_p[x1..xn] with a fixed term order.

    order is one of "grevlex", "lex" or "elim"; for "elim" the first
    elim_block variables are eliminated (compared by their degree sum),
    with ties broken by grevlex on the whole exponent vector.
    """

    __slots__ = ("char", "num_vars", "order", "elim_block", "_weights", "one")

    def __init__(self, char: int, num_vars: int, order: str = GREVLEX,
                 elim_block: int | None = None):
        if not is_prime(char) or not 2 <= char < 2**31:
            raise ValueError("characteristic not prime or out of range")
        if num_vars < 1:
            raise ValueError("need at least one variable")
        if order == ELIM:
            if elim_block is None or not 1 <= elim_block < num_vars:
                raise ValueError("elimination block size out of range")
        elif order in (GREVLEX, LEX):
            elim_block = None
        else:
            raise ValueError("unknown term order %r" % (order,))
        self.char = char
        self.num_vars = num_vars
        self.order = order
        self.elim_block = elim_block
        self._weights = self._order_weights()
        self.one = Monomial((0,) * num_vars, 0, 0)

    def _order_weights(self):
        n = self.num_vars
        B = _DIGIT_BASE
        if self.order == LEX:
            return tuple(B ** (n - 1 - i) for i in range(n))
        # grevlex: key(v) = deg(v)*B^n - sum_k v_k B^(k-1); the most
        # significant varying digit is the negated last exponent.
        grev = tuple(B ** n - B ** i for i in range(n))
        if self.order == GREVLEX:
            return grev
        k = self.elim_block
        top = B ** (n + 2)
        return tuple(grev[i] + (top if i < k else 0) for i in range(n))

    # -- monomial construction ------------------------------------------

    def mono(self, exps) -> Monomial:
        exps = tuple(exps)
        if len(exps) != self.num_vars:
            raise ValueError("wrong number of exponents")
        key = 0
        deg = 0
        for e, w in zip(exps, self._weights):
            if e < 0 or e >= MAX_EXPONENT:
                raise ValueError("exponent out of range")
            key += e * w
            deg += e
        return Monomial(exps, deg, key)

    def key_of(self, exps) -> int:
        key = 0
        for e, w in zip(exps, self._weights):
            key += e * w
        return key

    # -- monomial arithmetic --------------------------------------------

    def mono_mul(self, a: Monomial, b: Monomial) -> Monomial:
        return Monomial(tuple(map(_add, a.exps, b.exps)),
                        a.deg + b.deg, a.key + b.key)

    def mono_div(self, a: Monomial, b: Monomial) -> Monomial:
        exps = tuple(map(_sub, a.exps, b.exps))
        if min(exps) < 0:
            raise ValueError("not divisible")
        return Monomial(exps, a.deg - b.deg, a.key - b.key)

    def mono_gcd(self, a: Monomial, b: Monomial) -> Monomial:
        return self.mono(tuple(min(x, y) for x, y in zip(a.exps, b.exps)))

    def mono_lcm(self, a: Monomial, b: Monomial) -> Monomial:
        return self.mono(tuple(max(x, y) for x, y in zip(a.exps, b.exps)))

    def mono_divides(self, a: Monomial, b: Monomial) -> bool:
        """True when a divides b."""
        for x, y in zip(a.exps, b.exps):
            if x > y:
                return False
        return True

    def mono_coprime(self, a: Monomial, b: Monomial) -> bool:
        for x, y in zip(a.exps, b.exps):
            if x and y:
                return False
        return True

    def mono_cmp(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or +1 as a is below, equal to or above b in the ring order."""
        ka, kb = a.key, b.key
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ

    def order_spec(self) -> str:
        if self.order == ELIM:
            return "elim %d" % self.elim_block
        return self.order

    def __repr__(self):
        return "Ring(char=%d, num_vars=%d, order=%s)" % (
            self.char, self.num_vars, self.order_spec())


def ring_from_order_spec(char: int, num_vars: int, spec: str) -> Ring:
    """Build a ring from an order line such as "grevlex" or "elim 4"."""
    parts = spec.split()
    if not parts:
        raise ValueError("empty order spec")
    if parts[0] == ELIM:
        if len(parts) != 2 or not parts[1].isdigit():
            raise ValueError("bad elimination order spec %r" % (spec,))
        return Ring(char, num_vars, ELIM, int(parts[1]))
    if len(parts) != 1 or parts[0] not in (GREVLEX, LEX):
        raise ValueError("unknown term order %r" % (spec,))
    return Ring(char, num_vars, parts[0])
