"""Exact arithmetic in Z[G] for G cyclic of order p-1 (the units mod p).

Elements are integer coefficient vectors indexed by powers of a fixed
generator, so multiplication is cyclic convolution in Z[x]/(x^(p-1) - 1).
Determinants are computed by cofactor expansion: the group ring has zero
divisors, so fraction-free elimination would be unsound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arith import is_odd_prime, multiplicative_order, smallest_primitive_root
from .padic import PAdicInt, PrecisionExhausted


@dataclass(frozen=True)
class CyclicGroup:
    """The unit group mod an odd prime p, presented by a fixed generator."""

    p: int
    generator: int

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if multiplicative_order(self.generator, self.p) != self.p - 1:
            raise ValueError(f"{self.generator} does not generate the units mod {self.p}")

    @classmethod
    def for_prime(cls, p: int) -> "CyclicGroup":
        return cls(p, smallest_primitive_root(p))

    @property
    def order(self) -> int:
        return self.p - 1

    @cached_property
    def elements(self) -> tuple[int, ...]:
        """Group elements ordered as generator^0, generator^1, ..."""
        out = [1]
        for _ in range(self.order - 1):
            out.append(out[-1] * self.generator % self.p)
        return tuple(out)

    @cached_property
    def _log(self) -> dict[int, int]:
        return {s: k for k, s in enumerate(self.elements)}

    def element(self, k: int) -> int:
        return self.elements[k % self.order]

    def index_of(self, sigma: int) -> int:
        sigma %= self.p
        if sigma not in self._log:
            raise ValueError(f"{sigma} is not a unit mod {self.p}")
        return self._log[sigma]

    def inverse(self, sigma: int) -> int:
        return self.element(-self.index_of(sigma))

    def units(self) -> tuple[int, ...]:
        """All units mod p in residue order 1, 2, ..., p-1."""
        return tuple(range(1, self.p))


@dataclass(frozen=True)
class GroupRingElement:
    group: CyclicGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient vector has wrong length")

    @classmethod
    def zero(cls, group: CyclicGroup) -> "GroupRingElement":
        return cls(group, (0,) * group.order)

    @classmethod
    def one(cls, group: CyclicGroup) -> "GroupRingElement":
        return cls(group, (1,) + (0,) * (group.order - 1))

    @classmethod
    def of(cls, group: CyclicGroup, sigma: int, coefficient: int = 1) -> "GroupRingElement":
        """coefficient * sigma for a single group element sigma."""
        c = [0] * group.order
        c[group.index_of(sigma)] = coefficient
        return cls(group, tuple(c))

    @classmethod
    def from_unit_counts(cls, group: CyclicGroup, counts: dict[int, int]) -> "GroupRingElement":
        c = [0] * group.order
        for sigma, m in counts.items():
            c[group.index_of(sigma)] += m
        return cls(group, tuple(c))

    def coefficient(self, sigma: int) -> int:
        return self.coeffs[self.group.index_of(sigma)]

    def _check(self, other: "GroupRingElement"):
        if self.group != other.group:
            raise ValueError("group mismatch")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        return GroupRingElement(self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        return GroupRingElement(self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return GroupRingElement(self.group, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.group, tuple(other * a for a in self.coeffs))
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        n = self.group.order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % n] += a * b
        return GroupRingElement(self.group, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def involution(self) -> "GroupRingElement":
        """Coefficientwise pullback along sigma -> sigma^(-1)."""
        n = self.group.order
        out = [0] * n
        for k, a in enumerate(self.coeffs):
            out[(-k) % n] = a
        return GroupRingElement(self.group, tuple(out))

    def augmentation(self) -> int:
        """Sum of coefficients: evaluation at the trivial character over Z."""
        return sum(self.coeffs)

    def reduce(self, modulus: int) -> "GroupRingElement":
        return GroupRingElement(self.group, tuple(a % modulus for a in self.coeffs))

    def evaluate(self, character):
        """Image under the ring morphism sending sigma to character.value(sigma).

        Returns an element of F_p (a plain int in [0, p)) or a PAdicInt,
        depending on the character's codomain.
        """
        total = None
        for k, a in enumerate(self.coeffs):
            term = character.value(self.group.element(k)) * a
            total = term if total is None else total + term
        if isinstance(total, PAdicInt):
            return total
        return total % self.group.p

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            sigma = self.group.element(k)
            terms.append(f"{a}*[{sigma}]")
        return " + ".join(terms) if terms else "0"


def eval_character(a: GroupRingElement, character):
    return a.evaluate(character)


def idempotent_mod(character, k: int) -> GroupRingElement:
    """Reduction mod p^k of the idempotent attached to a character.

    The idempotent is (1/#G) * sum over sigma of character(sigma) * sigma^(-1);
    #G = p-1 is a unit mod p^k.  The character must carry at least k digits of
    precision (an F_p-valued character suffices only for k = 1).
    """
    group: CyclicGroup = character.group
    p = group.p
    if k < 1:
        raise ValueError("modulus exponent must be at least 1")
    if character.precision is None:
        if k > 1:
            raise PrecisionExhausted("F_p-valued character only determines the idempotent mod p")
    elif character.precision < k:
        raise PrecisionExhausted(
            f"character precision {character.precision} below requested exponent {k}"
        )
    modulus = p**k
    inv_order = pow(group.order, -1, modulus)
    coeffs = [0] * group.order
    for sigma in group.elements:
        v = character.value(sigma)
        v = v.value if isinstance(v, PAdicInt) else v
        coeffs[group.index_of(group.inverse(sigma))] = v * inv_order % modulus
    return GroupRingElement(group, tuple(coeffs))


def ring_determinant(entries, zero):
    """Determinant of a square matrix over any commutative ring.

    Cofactor expansion memoized over column subsets (bitmask), valid in rings
    with zero divisors.  Entries only need +, - and *.
    """
    n = len(entries)
    if n == 0:
        raise ValueError("empty matrix")
    for row in entries:
        if len(row) != n:
            raise ValueError("matrix is not square")
    memo: dict[int, object] = {}

    def minor(mask: int):
        count = bin(mask).count("1")
        row = n - count
        if count == 1:
            j = mask.bit_length() - 1
            return entries[row][j]
        if mask in memo:
            return memo[mask]
        acc = None
        pos = 0
        for j in range(n):
            if not (mask >> j) & 1:
                continue
            a = entries[row][j]
            term = a * minor(mask & ~(1 << j))
            if acc is None:
                acc = term if pos % 2 == 0 else zero - term
            else:
                acc = acc + term if pos % 2 == 0 else acc - term
            pos += 1
        memo[mask] = acc
        return acc

    return minor((1 << n) - 1)


@dataclass(frozen=True)
class GroupRingMatrix:
    group: CyclicGroup
    entries: tuple[tuple[GroupRingElement, ...], ...]

    def __post_init__(self):
        width = {len(r) for r in self.entries}
        if len(width) > 1:
            raise ValueError("ragged matrix")
        for row in self.entries:
            for e in row:
                if e.group != self.group:
                    raise ValueError("entry from a different group ring")

    @classmethod
    def from_rows(cls, group: CyclicGroup, rows) -> "GroupRingMatrix":
        return cls(group, tuple(tuple(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __sub__(self, other: "GroupRingMatrix") -> "GroupRingMatrix":
        if self.group != other.group or self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape or group mismatch")
        return GroupRingMatrix(
            self.group,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def determinant(self) -> GroupRingElement:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return ring_determinant(self.entries, GroupRingElement.zero(self.group))

    def evaluate(self, character):
        """Entrywise character evaluation; returns a list-of-lists matrix."""
        return [[e.evaluate(character) for e in row] for row in self.entries]


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def involution(a: GroupRingElement) -> GroupRingElement:
    return a.involution()


def augmentation(a: GroupRingElement) -> int:
    return a.augmentation()


def gr_det(m: GroupRingMatrix) -> GroupRingElement:
    return m.determinant()
