"""σ-maxitive measures, measurable functions, σ-ideals, and finiteness diagnostics.

On a finite powerset a σ-maxitive measure is determined by its atom
masses: μ(B) = ⊕_{x ∈ B} mass(x) with μ(∅) = 0, where ⊕ is max.  All
σ-notions (σ-maxitivity, σ-ideals, σ-⊙-finiteness) collapse to their
finite counterparts, which keeps every hypothesis decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import SizeCapError
from .extreal import ONE, ZERO, ExtNonneg, as_extnn, ext_max
from .pseudomul import PseudoMul
from .spaces import ENUM_CAP, Space, SubsetB, _same_space

__all__ = [
    "MaxMeasure",
    "MeasurableFn",
    "SigmaIdeal",
    "SetFunctionTable",
    "SpotReport",
    "delta_sharp",
    "measure_eval",
    "is_negligible",
    "is_sigma_odot_finite",
    "is_semi_odot_finite",
    "semi_odot_finite_bruteforce",
    "find_odot_spots",
    "check_maxitive",
]


def _values_from(space: Space, values) -> tuple:
    if isinstance(values, Mapping):
        missing = [a for a in space.atoms if a not in values]
        if missing:
            raise ValueError(f"missing masses for atoms {missing}")
        extra = [k for k in values if k not in space.atoms]
        if extra:
            raise ValueError(f"values given for unknown atoms {extra}")
        return tuple(as_extnn(values[a]) for a in space.atoms)
    values = tuple(as_extnn(v) for v in values)
    if len(values) != space.n:
        raise ValueError(f"expected {space.n} values, got {len(values)}")
    return values


class _AtomMap:
    """Shared storage for atom-indexed ExtNonneg values."""

    __slots__ = ("space", "_values")

    def __init__(self, space: Space, values):
        self.space = space
        self._values = _values_from(space, values)

    def __eq__(self, other) -> bool:
        return (type(self) is type(other)
                and self.space == other.space and self._values == other._values)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.space, self._values))

    def as_dict(self) -> dict:
        return dict(zip(self.space.atoms, self._values))


class MaxMeasure(_AtomMap):
    """A σ-maxitive measure on a finite powerset, stored as atom masses."""

    def mass(self, label: str) -> ExtNonneg:
        return self._values[self.space.index(label)]

    @property
    def masses(self) -> tuple:
        return self._values

    def __call__(self, B: SubsetB) -> ExtNonneg:
        return measure_eval(self, B)

    @classmethod
    def constant(cls, space: Space, value) -> "MaxMeasure":
        v = as_extnn(value)
        return cls(space, [v] * space.n)

    @property
    def total(self) -> ExtNonneg:
        return ext_max(self._values)

    @property
    def support(self) -> SubsetB:
        """The atoms of positive mass."""
        mask = 0
        for i, v in enumerate(self._values):
            if not v.is_zero:
                mask |= 1 << i
        return SubsetB(self.space, mask)

    @property
    def null_atoms(self) -> SubsetB:
        return ~self.support

    def table(self, limit: int | None = None) -> "SetFunctionTable":
        """The full induced set function (2^n entries)."""
        self.space.check_enum_cap(limit)
        n = self.space.n
        out = [ZERO] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            rest = mask ^ low
            v = self._values[low.bit_length() - 1]
            out[mask] = out[rest] if out[rest] > v else v
        return SetFunctionTable(self.space, out)

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}: {v}" for a, v in zip(self.space.atoms, self._values))
        return f"MaxMeasure({{{inner}}})"


class MeasurableFn(_AtomMap):
    """A map from atoms to [0, ∞]; integrands and densities."""

    def __call__(self, label: str) -> ExtNonneg:
        return self._values[self.space.index(label)]

    @property
    def values(self) -> tuple:
        return self._values

    @classmethod
    def constant(cls, space: Space, value) -> "MeasurableFn":
        v = as_extnn(value)
        return cls(space, [v] * space.n)

    @classmethod
    def indicator(cls, B: SubsetB, height=ONE) -> "MeasurableFn":
        h = as_extnn(height)
        return cls(B.space, [h if (B.mask >> i & 1) else ZERO
                             for i in range(B.space.n)])

    def strictly_above(self, t: ExtNonneg) -> SubsetB:
        """The level set {f > t}."""
        t = as_extnn(t)
        mask = 0
        for i, v in enumerate(self._values):
            if v > t:
                mask |= 1 << i
        return SubsetB(self.space, mask)

    def at_least(self, v: ExtNonneg) -> SubsetB:
        """The level set {f ≥ v}."""
        v = as_extnn(v)
        mask = 0
        for i, x in enumerate(self._values):
            if x >= v:
                mask |= 1 << i
        return SubsetB(self.space, mask)

    def level(self, v: ExtNonneg) -> SubsetB:
        v = as_extnn(v)
        mask = 0
        for i, x in enumerate(self._values):
            if x == v:
                mask |= 1 << i
        return SubsetB(self.space, mask)

    @property
    def support(self) -> SubsetB:
        return self.strictly_above(ZERO)

    def finite_positive_values(self, B: Optional[SubsetB] = None) -> list:
        """Distinct finite nonzero values taken on B (default: everywhere), ascending."""
        if B is not None:
            _same_space(self.space, B.space)
        out = {v for i, v in enumerate(self._values)
               if v.is_finite and not v.is_zero and (B is None or B.mask >> i & 1)}
        return sorted(out)

    def attains_inf(self, B: Optional[SubsetB] = None) -> bool:
        return any(v.is_inf and (B is None or B.mask >> i & 1)
                   for i, v in enumerate(self._values))

    def pointwise_max(self, other: "MeasurableFn") -> "MeasurableFn":
        _same_space(self.space, other.space)
        return MeasurableFn(self.space, [max(a, b) for a, b in zip(self._values, other._values)])

    def scale_left(self, pm: PseudoMul, r) -> "MeasurableFn":
        """The pointwise map x ↦ r ⊙ f(x)."""
        r = as_extnn(r)
        return MeasurableFn(self.space, [pm(r, v) for v in self._values])

    def with_value(self, label: str, value) -> "MeasurableFn":
        vals = list(self._values)
        vals[self.space.index(label)] = as_extnn(value)
        return MeasurableFn(self.space, vals)

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}: {v}" for a, v in zip(self.space.atoms, self._values))
        return f"MeasurableFn({{{inner}}})"


class SigmaIdeal:
    """A σ-ideal of the powerset: downward closed and union closed.

    On a finite powerset every σ-ideal equals the powerset of its union,
    so the top set determines membership; generator sets are retained
    only for reporting.
    """

    __slots__ = ("space", "top", "generators")

    def __init__(self, space: Space, top: SubsetB, generators: Optional[Sequence[SubsetB]] = None):
        _same_space(space, top.space)
        self.space = space
        self.top = top
        self.generators = tuple(generators) if generators is not None else None

    @classmethod
    def from_generators(cls, space: Space, generators: Iterable[SubsetB]) -> "SigmaIdeal":
        gens = tuple(generators)
        top = space.empty
        for g in gens:
            top = top | g
        return cls(space, top, gens)

    @classmethod
    def full(cls, space: Space) -> "SigmaIdeal":
        return cls(space, space.full)

    @classmethod
    def trivial(cls, space: Space) -> "SigmaIdeal":
        """The ideal containing only the empty set."""
        return cls(space, space.empty)

    def contains(self, B: SubsetB) -> bool:
        return B.issubset(self.top)

    def members(self, limit: int | None = None):
        """All member sets (the powerset of the top set)."""
        k = len(self.top)
        cap = ENUM_CAP if limit is None else min(limit, ENUM_CAP)
        if k > cap:
            raise SizeCapError(f"ideal has 2^{k} members, beyond the cap of {cap}")
        sub = self.top.mask
        mask = 0
        while True:
            yield SubsetB(self.space, mask)
            if mask == sub:
                return
            mask = (mask - sub) & sub

    def __eq__(self, other) -> bool:
        return (isinstance(other, SigmaIdeal)
                and self.space == other.space and self.top == other.top)

    def __hash__(self) -> int:
        return hash((self.space, self.top))

    def __repr__(self) -> str:
        return f"SigmaIdeal(top={self.top!r})"


class SetFunctionTable:
    """An arbitrary set function given by all 2^n values; zero at ∅."""

    __slots__ = ("space", "values")

    def __init__(self, space: Space, values: Sequence[ExtNonneg]):
        values = tuple(as_extnn(v) for v in values)
        if len(values) != (1 << space.n):
            raise ValueError(f"expected {1 << space.n} values, got {len(values)}")
        if not values[0].is_zero:
            raise ValueError("a set function must vanish at the empty set")
        self.space = space
        self.values = values

    def value(self, B: SubsetB) -> ExtNonneg:
        _same_space(self.space, B.space)
        return self.values[B.mask]

    def __eq__(self, other) -> bool:
        return (isinstance(other, SetFunctionTable)
                and self.space == other.space and self.values == other.values)

    def __hash__(self) -> int:
        return hash((self.space, self.values))

    def __repr__(self) -> str:
        return f"SetFunctionTable(n={self.space.n})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def measure_eval(mu: MaxMeasure, B: SubsetB) -> ExtNonneg:
    """μ(B) = ⊕ of atom masses over B; 0 at the empty set."""
    _same_space(mu.space, B.space)
    best = ZERO
    mask = B.mask
    values = mu.masses
    while mask:
        low = mask & -mask
        v = values[low.bit_length() - 1]
        if best < v:
            best = v
        mask ^= low
    return best


def delta_sharp(space: Space) -> MaxMeasure:
    """The measure assigning 1 to every nonempty set (all atom masses 1)."""
    return MaxMeasure.constant(space, ONE)


def is_negligible(mu: MaxMeasure, N: SubsetB) -> bool:
    """Whether N is contained in a set of measure zero (here: μ(N) = 0)."""
    return measure_eval(mu, N).is_zero


def is_sigma_odot_finite(pm: PseudoMul, mu: MaxMeasure) -> bool:
    """Whether a countable cover by sets of ⊙-finite measure exists.

    On a finite space this holds exactly when every atom mass is
    ⊙-finite, which (F_⊙ being downward closed) is the same as μ(E)
    being ⊙-finite.
    """
    return all(pm.is_odot_finite(v) for v in mu.masses)


def is_semi_odot_finite(pm: PseudoMul, mu: MaxMeasure, limit: int | None = None) -> bool:
    """Whether μ(B) = ⊕ {μ(A) : A ⊆ B, μ(A) ⊙-finite} for every B.

    μ(A) is ⊙-finite exactly when every atom of A has ⊙-finite mass, so
    the supremum equals μ(B ∩ Fin) with Fin the ⊙-finite-mass atoms; the
    identity is checked for every subset (refusing past the cap).
    """
    mu.space.check_enum_cap(limit)
    fin_mask = 0
    for i, v in enumerate(mu.masses):
        if pm.is_odot_finite(v):
            fin_mask |= 1 << i
    table = mu.table(limit).values
    return all(table[mask] == table[mask & fin_mask]
               for mask in range(1 << mu.space.n))


def semi_odot_finite_bruteforce(pm: PseudoMul, mu: MaxMeasure, limit: int = 12) -> bool:
    """Literal sub-enumeration form of semi-⊙-finiteness (test oracle).

    Enumerates, for every B, all A ⊆ B, keeping those with μ(A)
    ⊙-finite.  Exponentially slower than is_semi_odot_finite; they must
    agree.
    """
    mu.space.check_enum_cap(limit)
    table = mu.table(limit).values
    finite = [pm.is_odot_finite(v) for v in table]
    for bmask in range(1 << mu.space.n):
        sup = ZERO
        amask = bmask
        while True:
            if finite[amask] and table[amask] > sup:
                sup = table[amask]
            if amask == 0:
                break
            amask = (amask - 1) & bmask
        if table[bmask] != sup:
            return False
    return True


@dataclass(frozen=True)
class SpotReport:
    """⊙-spots of a measure: sets of ⊙-infinite measure whose subsets all
    have measure zero or ⊙-infinite."""

    maximal_spot: Optional[SubsetB]
    atom_spots: tuple

    @property
    def has_spots(self) -> bool:
        return self.maximal_spot is not None

    def __str__(self):
        if not self.has_spots:
            return "no ⊙-spots"
        return f"maximal ⊙-spot {self.maximal_spot!r}; atom spots {list(self.atom_spots)}"


def find_odot_spots(pm: PseudoMul, mu: MaxMeasure) -> SpotReport:
    """The maximal ⊙-spot (atoms of ⊙-infinite mass) and atom-level spots.

    Any subset of the ⊙-infinite-mass atoms has measure 0 (empty) or
    ⊙-infinite (the max of ⊙-infinite masses stays outside the downward
    closed finite set), so that atom set is a spot whenever nonempty.
    """
    mask = 0
    atoms = []
    for i, v in enumerate(mu.masses):
        if not pm.is_odot_finite(v):
            mask |= 1 << i
            atoms.append(mu.space.atoms[i])
    if mask == 0:
        return SpotReport(None, ())
    return SpotReport(SubsetB(mu.space, mask), tuple(atoms))


def check_maxitive(table: SetFunctionTable, limit: int | None = None) -> bool:
    """Whether table(B ∪ B') = table(B) ⊕ table(B') for all pairs.

    Runs the literal all-pairs scan for n ≤ 10; for larger n (up to the
    cap) it checks the equivalent atom-generation property
    table(B) = ⊕_{x ∈ B} table({x}), which on a powerset characterizes
    the same measures.
    """
    table.space.check_enum_cap(limit)
    n = table.space.n
    values = table.values
    if n <= 10:
        size = 1 << n
        for a in range(size):
            va = values[a]
            for b in range(a, size):
                u = values[a | b]
                vb = values[b]
                if u != (va if vb < va else vb):
                    return False
        return True
    for mask in range(1, 1 << n):
        best = ZERO
        m = mask
        while m:
            low = m & -m
            v = values[low]
            if best < v:
                best = v
            m ^= low
        if values[mask] != best:
            return False
    return True
