"""Truncated p-adic integers with explicit precision, and Teichmuller lifts.

A value is a residue modulo p^N together with the precision N.  All operations
are exact; combining two values keeps the smaller precision.  The valuation of
a value that is 0 mod p^N cannot be told apart from N, so asking for it raises
``PrecisionExhausted`` and the caller must recompute at higher precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import is_odd_prime


class PrecisionExhausted(ArithmeticError):
    """The value is 0 mod p^N; its true valuation may be N or larger."""


@dataclass(frozen=True)
class PAdicInt:
    p: int
    precision: int
    value: int

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        object.__setattr__(self, "value", self.value % self.p**self.precision)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    def is_zero(self) -> bool:
        return self.value == 0

    def reduce(self, precision: int) -> "PAdicInt":
        if precision > self.precision:
            raise ValueError("cannot increase precision by reduction")
        return PAdicInt(self.p, precision, self.value)

    def _coerce(self, other) -> "PAdicInt | None":
        if isinstance(other, PAdicInt):
            if other.p != self.p:
                raise ValueError(f"mixed primes {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return PAdicInt(self.p, self.precision, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return PAdicInt(self.p, n, self.value + o.value)

    __radd__ = __add__

    def __neg__(self):
        return PAdicInt(self.p, self.precision, -self.value)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return PAdicInt(self.p, n, self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return PAdicInt(self.p, n, self.value * o.value)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return PAdicInt(self.p, self.precision, pow(self.value, exponent, self.modulus))

    def valuation(self) -> int:
        """Exact p-adic valuation; raises if indistinguishable from >= N."""
        if self.value == 0:
            raise PrecisionExhausted(
                f"value is 0 mod {self.p}^{self.precision}; recompute at higher precision"
            )
        v, x = 0, self.value
        while x % self.p == 0:
            x //= self.p
            v += 1
        return v

    def digits(self) -> tuple[int, ...]:
        """Base-p digits c_0, ..., c_{N-1} with value = sum c_k p^k."""
        out, x = [], self.value
        for _ in range(self.precision):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def expansion_str(self) -> str:
        """Render as a truncated p-adic expansion, e.g. ``4*5 + O(5^3)``."""
        terms = []
        for k, c in enumerate(self.digits()):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*{self.p}")
            else:
                terms.append(f"{c}*{self.p}^{k}")
        terms.append(f"O({self.p}^{self.precision})")
        return " + ".join(terms)

    def __str__(self):
        return self.expansion_str()


@lru_cache(maxsize=None)
def teichmuller(a: int, p: int, precision: int) -> PAdicInt:
    """The (p-1)th root of unity congruent to a mod p, to the given precision.

    Iterating x -> x^p mod p^N contracts towards the root; N steps always
    reach the fixed point at precision N, and we stop early once stable.
    """
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if a % p == 0:
        raise ValueError(f"{a} is not a unit mod {p}")
    modulus = p**precision
    x = a % modulus
    for _ in range(precision):
        nxt = pow(x, p, modulus)
        if nxt == x:
            break
        x = nxt
    assert pow(x, p, modulus) == x
    return PAdicInt(p, precision, x)


def valuation(x: PAdicInt) -> int:
    return x.valuation()


def abs_p_inverse(x: PAdicInt) -> int:
    """Reciprocal of the p-adic absolute value, i.e. p^(valuation)."""
    return x.p ** x.valuation()
