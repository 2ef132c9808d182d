"""Finite measurable spaces and their subsets.

A space is an ordered tuple of distinct atom labels; the σ-algebra is
implicitly the full powerset, so every subset is measurable and is
represented as a bitmask over the atom order.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import SizeCapError, SpaceMismatchError

__all__ = ["Space", "SubsetB", "ENUM_CAP"]

# Hard ceiling for exhaustive powerset enumeration; operations refuse
# beyond it rather than sample.
ENUM_CAP = 20


class Space:
    """A finite set of named atoms carrying the full powerset σ-algebra."""

    __slots__ = ("atoms", "_index")

    def __init__(self, atoms: Sequence[str]):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("a space needs at least one atom")
        if len(set(atoms)) != len(atoms):
            raise ValueError("atom labels must be distinct")
        if not all(isinstance(a, str) and a for a in atoms):
            raise ValueError("atom labels must be nonempty strings")
        self.atoms = atoms
        self._index = {a: i for i, a in enumerate(atoms)}

    @property
    def n(self) -> int:
        return len(self.atoms)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown atom {label!r}") from None

    def subset(self, labels: Iterable[str]) -> "SubsetB":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return SubsetB(self, mask)

    def singleton(self, label: str) -> "SubsetB":
        return SubsetB(self, 1 << self.index(label))

    @property
    def empty(self) -> "SubsetB":
        return SubsetB(self, 0)

    @property
    def full(self) -> "SubsetB":
        return SubsetB(self, (1 << self.n) - 1)

    def check_enum_cap(self, limit: int | None = None) -> None:
        cap = ENUM_CAP if limit is None else min(limit, ENUM_CAP)
        if self.n > cap:
            raise SizeCapError(
                f"powerset enumeration over {self.n} atoms exceeds the cap of {cap}")

    def subsets(self, limit: int | None = None) -> Iterator["SubsetB"]:
        """All 2^n subsets, refusing beyond the enumeration cap."""
        self.check_enum_cap(limit)
        for mask in range(1 << self.n):
            yield SubsetB(self, mask)

    def __eq__(self, other) -> bool:
        return isinstance(other, Space) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"Space({list(self.atoms)!r})"


def _same_space(a: Space, b: Space) -> None:
    if a != b:
        raise SpaceMismatchError(f"objects live on different spaces: {a!r} vs {b!r}")


class SubsetB:
    """A measurable set: a bitmask bound to one space."""

    __slots__ = ("space", "mask")

    def __init__(self, space: Space, mask: int):
        if not 0 <= mask < (1 << space.n):
            raise ValueError(f"mask {mask:#x} is out of range for {space!r}")
        self.space = space
        self.mask = mask

    def _check(self, other: "SubsetB") -> None:
        if not isinstance(other, SubsetB):
            raise TypeError("expected a SubsetB")
        _same_space(self.space, other.space)

    def __or__(self, other: "SubsetB") -> "SubsetB":
        self._check(other)
        return SubsetB(self.space, self.mask | other.mask)

    def __and__(self, other: "SubsetB") -> "SubsetB":
        self._check(other)
        return SubsetB(self.space, self.mask & other.mask)

    def __sub__(self, other: "SubsetB") -> "SubsetB":
        self._check(other)
        return SubsetB(self.space, self.mask & ~other.mask)

    def __invert__(self) -> "SubsetB":
        return SubsetB(self.space, self.space.full.mask & ~self.mask)

    def issubset(self, other: "SubsetB") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.space.index(label) & 1)

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[str]:
        for i, label in enumerate(self.space.atoms):
            if self.mask >> i & 1:
                yield label

    @property
    def labels(self) -> tuple:
        return tuple(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubsetB)
                and self.space == other.space and self.mask == other.mask)

    def __hash__(self) -> int:
        return hash((self.space, self.mask))

    def __repr__(self) -> str:
        return "{" + ", ".join(self) + "}"
