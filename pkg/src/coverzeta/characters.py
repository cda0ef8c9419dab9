"""Characters of the unit group mod p, valued in F_p or in truncated Z_p.

The F_p-valued character of exponent i sends sigma to sigma^i mod p.  Its
canonical lift replaces sigma by its Teichmuller representative, so reduction
mod p recovers the F_p value on every group element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groupring import CyclicGroup
from .padic import teichmuller


@dataclass(frozen=True)
class Character:
    """Character of exponent i; precision None means F_p-valued."""

    group: CyclicGroup
    exponent: int
    precision: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.group.order)
        if self.precision is not None and self.precision < 1:
            raise ValueError("precision must be at least 1")

    @property
    def codomain(self) -> str:
        return "Fp" if self.precision is None else "Zp"

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    def value(self, sigma: int):
        """Character value on a unit sigma mod p."""
        p = self.group.p
        sigma %= p
        if sigma == 0:
            raise ValueError(f"{sigma} is not a unit mod {p}")
        if self.precision is None:
            return pow(sigma, self.exponent, p)
        return teichmuller(sigma, p, self.precision) ** self.exponent

    def contragredient(self) -> "Character":
        return Character(self.group, -self.exponent % self.group.order, self.precision)

    def lift(self, precision: int) -> "Character":
        """Teichmuller lift of an F_p character (or re-precision of a lift)."""
        return Character(self.group, self.exponent, precision)

    def reduction(self) -> "Character":
        return Character(self.group, self.exponent, None)


def character_value(chi: Character, sigma: int):
    return chi.value(sigma)


def fp_characters(group: CyclicGroup) -> tuple[Character, ...]:
    """All F_p-valued characters, indexed by exponent 0..p-2."""
    return tuple(Character(group, i, None) for i in range(group.order))


def zp_characters(group: CyclicGroup, precision: int) -> tuple[Character, ...]:
    return tuple(Character(group, i, precision) for i in range(group.order))
