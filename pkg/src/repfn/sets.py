"""Subsets of Z_m backed by an m-bit mask.

Bit a of ``mask`` is set iff residue a is a member.  The encoding gives O(1)
membership and complement, a canonical total order on subsets (the integer
value of the mask), and trivially partitionable enumeration ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["ResidueSet"]


@dataclass(frozen=True, slots=True)
class ResidueSet:
    """An immutable subset of Z_m."""

    m: int
    mask: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got {self.m}")
        if not 0 <= self.mask < (1 << self.m):
            raise ValueError(f"mask {self.mask:#x} out of range for m={self.m}")

    @classmethod
    def from_members(cls, m: int, members: Iterable[int]) -> "ResidueSet":
        mask = 0
        for a in members:
            if not 0 <= a < m:
                raise ValueError(f"residue {a} out of range for m={m}")
            mask |= 1 << a
        return cls(m, mask)

    @classmethod
    def empty(cls, m: int) -> "ResidueSet":
        return cls(m, 0)

    @classmethod
    def full(cls, m: int) -> "ResidueSet":
        return cls(m, (1 << m) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        """Members in ascending order."""
        return tuple(a for a in range(self.m) if (self.mask >> a) & 1)

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.m, self.mask ^ ((1 << self.m) - 1))

    def __contains__(self, a: int) -> bool:
        return 0 <= a < self.m and bool((self.mask >> a) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.members) + "}"
