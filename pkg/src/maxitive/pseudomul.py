"""Pseudo-multiplications ⊙ on [0, ∞] and their finiteness theory.

A pseudo-multiplication is a binary operation on [0, ∞] that is
associative, monotone in both arguments, continuous on (0, ∞) × [0, ∞]
and in its first argument on (0, ∞], has a left identity 1_⊙, has 0 as
an annihilator, and has no zero divisors.  The usual product and the
minimum are the two classical instances (giving the Shilkret and Sugeno
integrals respectively).

The zero map O(t) = inf_{s>0} s ⊙ t classifies elements: t is ⊙-finite
when O(t) = 0.  The set F_⊙ of ⊙-finite elements is always [0, ∞] or a
half-open interval [0, φ); φ = sup F_⊙ is the finiteness frontier.

Two deliberate extensions of the continuous theory live here:

* ``DiscreteChain`` is a finite totally ordered carrier with an explicit
  operation table.  It drops the continuity axiom, which makes the raw
  infimum O(t) unreachable below the smallest positive carrier element;
  ⊙-finiteness on a chain is therefore decided by the invertibility
  criterion (some s > 0 with s ⊙ t ≤ 1_⊙, and symmetrically on the
  right), which coincides with O(t) = 0 in the continuous case.  Chains
  exist chiefly to exercise the finite-φ branch of the frontier theory.
* ``CustomContinuous`` wraps an arbitrary float-valued operation; its
  zero map is estimated along a dyadic descent and all comparisons carry
  a relative tolerance.
"""

from __future__ import annotations

import abc
import enum
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .errors import CarrierDomainError, UnresolvedInfimumError
from .extreal import INF, ONE, ZERO, ExtNonneg, as_extnn, ext_min

__all__ = [
    "FrontierShape",
    "FinitenessProfile",
    "PseudoMul",
    "StandardProduct",
    "Minimum",
    "DiscreteChain",
    "CustomContinuous",
    "SampleBudget",
    "AxiomCheck",
    "AxiomReport",
    "validate_pseudo_mul",
]


class FrontierShape(enum.Enum):
    """Shape of the set of ⊙-finite elements."""

    WHOLE_INTERVAL = "whole-interval"  # F = [0, ∞]
    HALF_OPEN = "half-open"            # F = [0, φ)


@dataclass(frozen=True)
class FinitenessProfile:
    """Classification of F_⊙ for one pseudo-multiplication.

    ``phi`` is sup F_⊙.  ``finite_elements`` is the explicit finite set
    for discrete chains and None for continuous kinds (where F is an
    interval).  ``notes`` records structural violations found while
    classifying (a healthy ⊙ has none).
    """

    shape: FrontierShape
    phi: ExtNonneg
    degenerate: bool
    finite_elements: Optional[frozenset] = None
    approximate: bool = False
    notes: tuple = ()


class PseudoMul(abc.ABC):
    """Base class for pseudo-multiplications.

    Instances are immutable; every method is a pure function of the
    arguments, so unrestricted concurrent use is safe.  The finiteness
    profile is computed lazily and cached (idempotent, hence benign).
    """

    kind: str = "abstract"
    exact: bool = True
    tolerance: float = 0.0

    def __init__(self, identity: ExtNonneg):
        self.identity = as_extnn(identity)
        self._profile: Optional[FinitenessProfile] = None

    @abc.abstractmethod
    def omul(self, s: ExtNonneg, t: ExtNonneg) -> ExtNonneg:
        """Return s ⊙ t."""

    def __call__(self, s: ExtNonneg, t: ExtNonneg) -> ExtNonneg:
        return self.omul(s, t)

    @abc.abstractmethod
    def zero_map(self, t: ExtNonneg) -> ExtNonneg:
        """Return O(t) = inf_{s > 0} s ⊙ t."""

    @abc.abstractmethod
    def is_odot_finite(self, t: ExtNonneg) -> bool:
        """Whether t is ⊙-finite."""

    def is_odot_infinite(self, t: ExtNonneg) -> bool:
        return not self.is_odot_finite(t)

    @abc.abstractmethod
    def _compute_profile(self) -> FinitenessProfile:
        ...

    def finiteness_profile(self) -> FinitenessProfile:
        if self._profile is None:
            self._profile = self._compute_profile()
        return self._profile

    @property
    def degenerate(self) -> bool:
        """True when 0 is the only ⊙-finite element."""
        return self.finiteness_profile().degenerate

    def representable(self, t: ExtNonneg) -> bool:
        """Whether t belongs to this operation's carrier."""
        return True

    def values_equal(self, a: ExtNonneg, b: ExtNonneg) -> bool:
        """Equality, exact or within the relative tolerance."""
        if self.exact or a == b:
            return a == b
        if a.is_inf or b.is_inf:
            return False
        fa, fb = float(a), float(b)
        return abs(fa - fb) <= self.tolerance * max(1.0, abs(fa), abs(fb))

    # Positive probe values used for existential finiteness witnesses
    # (Lemma-style criteria): a dyadic descent, adapted to t when the
    # arithmetic is exact so that large finite t still finds s ~ 1/t.
    def finiteness_probes(self, t: ExtNonneg) -> list:
        probes = [ExtNonneg(Fraction(1, 2 ** k)) for k in range(0, 61, 6)]
        probes.append(self.identity)
        if self.exact and t.is_finite and not t.is_zero:
            probes.append(self.identity / (ExtNonneg(2) * t))
        return [p for p in probes if not p.is_zero]

    def describe(self) -> str:
        return self.kind


class StandardProduct(PseudoMul):
    """The usual product on [0, ∞] with 0 · ∞ = 0; identity 1.

    Gives the Shilkret integral.  F_⊙ = [0, ∞): every finite value is
    ⊙-finite and ∞ is not, so the frontier is half-open with φ = ∞.
    """

    kind = "times"

    def __init__(self):
        super().__init__(ONE)

    def omul(self, s: ExtNonneg, t: ExtNonneg) -> ExtNonneg:
        return s * t

    def zero_map(self, t: ExtNonneg) -> ExtNonneg:
        return INF if t.is_inf else ZERO

    def is_odot_finite(self, t: ExtNonneg) -> bool:
        return t.is_finite

    def _compute_profile(self) -> FinitenessProfile:
        return FinitenessProfile(FrontierShape.HALF_OPEN, INF, degenerate=False)


class Minimum(PseudoMul):
    """The minimum on [0, ∞]; identity ∞ (min(∞, t) = t).

    Gives the Sugeno integral.  O ≡ 0, so every element is ⊙-finite and
    F_⊙ is the whole interval.
    """

    kind = "min"

    def __init__(self):
        super().__init__(INF)

    def omul(self, s: ExtNonneg, t: ExtNonneg) -> ExtNonneg:
        return s if s < t else t

    def zero_map(self, t: ExtNonneg) -> ExtNonneg:
        return ZERO

    def is_odot_finite(self, t: ExtNonneg) -> bool:
        return True

    def _compute_profile(self) -> FinitenessProfile:
        return FinitenessProfile(FrontierShape.WHOLE_INTERVAL, INF, degenerate=False)


class DiscreteChain(PseudoMul):
    """A pseudo-multiplication on a finite chain, given by a full table.

    The carrier is a finite totally ordered subset of [0, ∞] containing
    0; the table must be closed over the carrier.  Continuity is
    vacuous, which is the point: chains can realize a finite frontier φ,
    which no shipped continuous operation does.

    O(t) is the exhaustive minimum of s ⊙ t over positive carrier
    elements.  Because a chain has a least positive element and no zero
    divisors, O(t) > 0 for every t > 0; ⊙-finiteness is therefore
    decided by the invertibility criterion (s ⊙ t ≤ 1_⊙ and t ⊙ s' ≤ 1_⊙
    for some positive carrier s, s'), which agrees with O(t) = 0 on
    continuous operations.
    """

    kind = "chain"

    def __init__(self, carrier: Sequence, table, identity):
        values = tuple(sorted({as_extnn(v) for v in carrier}))
        if len(values) < 2:
            raise ValueError("chain carrier needs at least two elements")
        if values[0] != ZERO:
            raise ValueError("chain carrier must contain 0")
        ident = as_extnn(identity)
        if ident not in values:
            raise ValueError("chain identity must belong to the carrier")
        if ident.is_zero:
            raise ValueError("chain identity must be positive")
        self.carrier = values
        self._carrier_set = frozenset(values)
        self._table = self._normalize_table(values, table)
        super().__init__(ident)

    @staticmethod
    def _normalize_table(carrier, table) -> dict:
        cset = set(carrier)
        out = {}
        if isinstance(table, Mapping):
            items = (((as_extnn(a), as_extnn(b)), as_extnn(v)) for (a, b), v in table.items())
        else:
            rows = list(table)
            if len(rows) != len(carrier):
                raise ValueError(f"table must have {len(carrier)} rows, got {len(rows)}")
            items = []
            for a, row in zip(carrier, rows):
                row = list(row)
                if len(row) != len(carrier):
                    raise ValueError(f"table row for {a} must have {len(carrier)} entries")
                for b, v in zip(carrier, row):
                    items.append(((a, b), as_extnn(v)))
        for (a, b), v in items:
            if a not in cset or b not in cset or v not in cset:
                raise ValueError(f"table entry {a} ⊙ {b} = {v} leaves the carrier")
            out[(a, b)] = v
        for a in carrier:
            for b in carrier:
                if (a, b) not in out:
                    raise ValueError(f"table is missing entry for ({a}, {b})")
        return out

    @classmethod
    def clamped_product(cls, carrier: Sequence, identity=ONE) -> "DiscreteChain":
        """Chain whose operation is the product rounded down into the carrier."""
        values = tuple(sorted({as_extnn(v) for v in carrier}))
        table = {}
        for a in values:
            for b in values:
                p = a * b
                table[(a, b)] = max((v for v in values if v <= p), default=ZERO)
        return cls(values, table, identity)

    def representable(self, t: ExtNonneg) -> bool:
        return t in self._carrier_set

    def _require(self, t: ExtNonneg) -> ExtNonneg:
        t = as_extnn(t)
        if t not in self._carrier_set:
            raise CarrierDomainError(
                f"{t} is not in the chain carrier {[str(c) for c in self.carrier]}")
        return t

    def omul(self, s: ExtNonneg, t: ExtNonneg) -> ExtNonneg:
        return self._table[(self._require(s), self._require(t))]

    def zero_map(self, t: ExtNonneg) -> ExtNonneg:
        t = self._require(t)
        return ext_min(self._table[(s, t)] for s in self.carrier if not s.is_zero)

    def is_odot_finite(self, t: ExtNonneg) -> bool:
        t = self._require(t)
        if t.is_zero:
            return True
        positives = [s for s in self.carrier if not s.is_zero]
        left = any(self._table[(s, t)] <= self.identity for s in positives)
        right = any(self._table[(t, s)] <= self.identity for s in positives)
        return left and right

    def finiteness_probes(self, t: ExtNonneg) -> list:
        return [s for s in self.carrier if not s.is_zero]

    def _compute_profile(self) -> FinitenessProfile:
        finite = frozenset(t for t in self.carrier if self.is_odot_finite(t))
        infinite = [t for t in self.carrier if t not in finite]
        notes = []
        if not infinite:
            return FinitenessProfile(
                FrontierShape.WHOLE_INTERVAL, INF, degenerate=(finite == {ZERO}),
                finite_elements=finite,
            )
        phi = ext_min(infinite)
        expected = frozenset(t for t in self.carrier if t < phi)
        if finite != expected:
            notes.append("finite set is not downward closed below its frontier")
        if self.zero_map(phi) != phi:
            notes.append(f"O(φ) = {self.zero_map(phi)} differs from φ = {phi}")
        if self._table[(phi, phi)] != phi:
            notes.append("φ is not idempotent")
        for t in self.carrier:
            if not t.is_zero and t <= phi:
                if self._table[(t, phi)] != phi or self._table[(phi, t)] != phi:
                    notes.append(f"φ is not absorbing at t = {t}")
        return FinitenessProfile(
            FrontierShape.HALF_OPEN, phi, degenerate=(finite == {ZERO}),
            finite_elements=finite, notes=tuple(notes),
        )

    def describe(self) -> str:
        return "chain{" + ", ".join(str(c) for c in self.carrier) + "}"


class CustomContinuous(PseudoMul):
    """A user-supplied operation on floats, checked numerically.

    ``fn`` must accept two nonnegative floats (possibly ``math.inf``)
    and return one.  All derived quantities (zero map, frontier,
    equality) are estimated with the configured relative tolerance;
    nothing symbolic is attempted.
    """

    kind = "custom"
    exact = False

    def __init__(self, fn: Callable[[float, float], float], identity,
                 name: str = "custom", tolerance: float = 1e-12,
                 sample_domain: Sequence[float] = (0.0, 0.25, 0.5, 1.0, 2.0, 8.0, 1024.0)):
        self.fn = fn
        self.name = name
        self.tolerance = tolerance
        self.sample_domain = tuple(sample_domain)
        super().__init__(identity)

    def omul(self, s: ExtNonneg, t: ExtNonneg) -> ExtNonneg:
        r = self.fn(float(s), float(t))
        if isinstance(r, bool) or not isinstance(r, (int, float)):
            raise TypeError(f"custom operation returned {r!r}")
        if math.isnan(r) or r < 0:
            raise ValueError(f"custom operation returned {r!r} outside [0, inf]")
        return INF if math.isinf(r) else ExtNonneg(Fraction(r))

    def _descent(self, t: ExtNonneg, kmax: int = 60) -> list:
        tf = float(t)
        return [self.fn(2.0 ** -k, tf) for k in range(kmax + 1)]

    def zero_map(self, t: ExtNonneg) -> ExtNonneg:
        """Estimate inf_{s>0} s ⊙ t along s = 2^-k, k = 0..60.

        Monotonicity makes the sampled sequence non-increasing, so the
        final term is an upper bound of the infimum.  The estimate is
        declared 0 below tolerance and accepted as the limit once the
        tail has stabilized; otherwise the bracket is surfaced.
        """
        values = self._descent(t)
        last = values[-1]
        scale = max(1.0, abs(values[0])) if math.isfinite(values[0]) else 1.0
        if math.isinf(last):
            return INF
        if last <= self.tolerance * scale:
            return ZERO
        prev = values[-6]
        if math.isfinite(prev) and abs(prev - last) <= 1e-9 * max(1.0, last):
            return ExtNonneg(Fraction(last))
        raise UnresolvedInfimumError(
            f"zero-map descent for t = {t} still moving at k = 60",
            bracket=(ZERO, ExtNonneg(Fraction(last))),
        )

    def is_odot_finite(self, t: ExtNonneg) -> bool:
        return self.zero_map(t).is_zero

    def _compute_profile(self) -> FinitenessProfile:
        degenerate = not self.is_odot_finite(self.identity)
        if self.is_odot_finite(INF):
            return FinitenessProfile(
                FrontierShape.WHOLE_INTERVAL, INF, degenerate=degenerate, approximate=True)
        # ∞ is not ⊙-finite; locate the frontier among finite values.
        probes = [float(self.identity) if self.identity.is_finite else 1.0,
                  1.0, 2.0, 2.0 ** 10, 2.0 ** 20, 2.0 ** 40]
        finite_probes = [p for p in probes if self.is_odot_finite(ExtNonneg(Fraction(p)))]
        infinite_probes = [p for p in probes if p not in finite_probes]
        if not infinite_probes:
            return FinitenessProfile(
                FrontierShape.HALF_OPEN, INF, degenerate=degenerate, approximate=True)
        if not finite_probes:
            return FinitenessProfile(
                FrontierShape.HALF_OPEN, ZERO, degenerate=True, approximate=True,
                notes=("no positive probe is ⊙-finite",))
        lo, hi = max(finite_probes), min(infinite_probes)
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if hi - lo <= 1e-12 * max(1.0, hi):
                break
            if self.is_odot_finite(ExtNonneg(Fraction(mid))):
                lo = mid
            else:
                hi = mid
        return FinitenessProfile(
            FrontierShape.HALF_OPEN, ExtNonneg(Fraction(hi)), degenerate=degenerate,
            approximate=True, notes=("frontier located by bisection",))

    def finiteness_probes(self, t: ExtNonneg) -> list:
        return [ExtNonneg(Fraction(2.0 ** -k)) for k in range(0, 61, 4)]

    def describe(self) -> str:
        return f"custom({self.name})"


# ---------------------------------------------------------------------------
# Axiom validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SampleBudget:
    """Sampling effort for axiom validation of non-discrete operations."""

    seed: int = 0
    values: int = 24
    pairs: int = 10_000
    triples: int = 2_000


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: Optional[tuple] = None
    detail: str = ""

    def __str__(self):
        mark = "pass" if self.passed else "FAIL"
        extra = ""
        if self.witness is not None:
            extra = " witness=(" + ", ".join(str(w) for w in self.witness) + ")"
        if self.detail:
            extra += f" [{self.detail}]"
        return f"{mark:4} {self.name}{extra}"


@dataclass(frozen=True)
class AxiomReport:
    operation: str
    degenerate: bool
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list:
        return [c for c in self.checks if not c.passed]

    def __str__(self):
        head = f"axiom report for {self.operation}" + (" (degenerate)" if self.degenerate else "")
        return "\n".join([head] + ["  " + str(c) for c in self.checks])


_SPECIAL_SAMPLES = (
    Fraction(0), Fraction(1, 1024), Fraction(1, 16), Fraction(1, 4), Fraction(1, 2),
    Fraction(1), Fraction(3, 2), Fraction(2), Fraction(4), Fraction(16),
    Fraction(256), Fraction(2 ** 12), Fraction(2 ** 20),
)


def _sample_values(pm: PseudoMul, budget: SampleBudget) -> list:
    if isinstance(pm, DiscreteChain):
        return list(pm.carrier)
    rng = random.Random(budget.seed)
    values = {ExtNonneg(f) for f in _SPECIAL_SAMPLES}
    values.add(INF)
    values.add(pm.identity)
    while len(values) < len(_SPECIAL_SAMPLES) + 2 + budget.values:
        values.add(ExtNonneg(Fraction(rng.randint(0, 64), rng.randint(1, 16))))
    return sorted(values)


def _check_continuity(pm: CustomContinuous) -> AxiomCheck:
    # Heuristic grid check: perturbations of shrinking size must produce
    # shrinking output changes at interior sample points.
    worst = None
    for s in pm.sample_domain:
        if s <= 0 or math.isinf(s):
            continue
        for t in pm.sample_domain:
            if math.isinf(t):
                continue
            base = pm.fn(s, t)
            if math.isinf(base):
                continue
            deltas = []
            for d in (1e-3, 1e-6, 1e-9):
                hs = min(d * max(1.0, s), s / 2)
                ht = d * max(1.0, t)
                jump = max(abs(pm.fn(s + hs, t + ht) - base), abs(pm.fn(s - hs, max(t - ht, 0.0)) - base))
                deltas.append(jump)
            if not (deltas[2] <= deltas[0] + 1e-9 * max(1.0, abs(base))):
                worst = (ExtNonneg(Fraction(s)), ExtNonneg(Fraction(t)))
    return AxiomCheck("continuity (sampled)", worst is None, worst,
                      detail="ε-δ grid on the sample domain")


def validate_pseudo_mul(pm: PseudoMul, budget: SampleBudget = SampleBudget()) -> AxiomReport:
    """Check the pseudo-multiplication axioms and structural consequences.

    Exhaustive over the carrier for chains, sampled otherwise.  Failures
    are report entries carrying a witness tuple, never exceptions.  For a
    non-degenerate operation the report additionally covers commutativity
    below the identity, the frontier identities at φ (idempotency and
    absorption), the no-crossing property at φ, and the agreement of the
    left and right invertibility criteria for ⊙-finiteness.
    """
    rng = random.Random(budget.seed + 1)
    samples = _sample_values(pm, budget)
    positives = [v for v in samples if not v.is_zero]
    exhaustive = isinstance(pm, DiscreteChain)
    checks = []

    # Totality gate: a custom map may blow up (nan, negatives) on some
    # pair; that is itself an axiom failure and must not crash the rest.
    for s, t in itertools.product(samples, samples):
        try:
            pm(s, t)
        except (ValueError, TypeError, ArithmeticError) as exc:
            gate = AxiomCheck("defined on all sampled pairs", False, (s, t), str(exc))
            return AxiomReport(pm.describe(), False, (gate,))

    def pick_pairs(count):
        if exhaustive:
            return list(itertools.product(samples, samples))
        return [(rng.choice(samples), rng.choice(samples)) for _ in range(count)]

    def pick_triples(count):
        if exhaustive:
            return list(itertools.product(samples, samples, samples))
        return [(rng.choice(samples), rng.choice(samples), rng.choice(samples))
                for _ in range(count)]

    # Left identity, annihilator, zero divisors: over all samples.
    witness = next((t for t in samples if not pm.values_equal(pm(pm.identity, t), t)), None)
    checks.append(AxiomCheck("left identity", witness is None,
                             None if witness is None else (pm.identity, witness)))

    witness = next((t for t in samples
                    if not (pm(ZERO, t).is_zero and pm(t, ZERO).is_zero)), None)
    checks.append(AxiomCheck("annihilator", witness is None,
                             None if witness is None else (ZERO, witness)))

    witness = next(((s, t) for s in positives for t in positives
                    if pm(s, t).is_zero), None)
    checks.append(AxiomCheck("no zero divisors", witness is None, witness))

    # Monotonicity in both arguments.
    mono_witness = None
    if exhaustive:
        mono_candidates = itertools.product(samples, samples, samples)
    else:
        mono_candidates = ((a, b, rng.choice(samples))
                           for a, b in pick_pairs(budget.pairs // 4))
    for a, b, t in mono_candidates:
        lo, hi = (a, b) if a <= b else (b, a)
        if pm(lo, t) > pm(hi, t) or pm(t, lo) > pm(t, hi):
            mono_witness = (lo, hi, t)
            break
    checks.append(AxiomCheck("monotonicity", mono_witness is None, mono_witness))

    assoc_witness = next(
        ((s, t, u) for (s, t, u) in pick_triples(budget.triples)
         if not pm.values_equal(pm(pm(s, t), u), pm(s, pm(t, u)))),
        None)
    checks.append(AxiomCheck("associativity", assoc_witness is None, assoc_witness))

    if isinstance(pm, CustomContinuous):
        checks.append(_check_continuity(pm))

    try:
        profile = pm.finiteness_profile()
    except UnresolvedInfimumError as exc:
        checks.append(AxiomCheck("finiteness profile resolves", False, None, str(exc)))
        return AxiomReport(pm.describe(), False, tuple(checks))
    if not profile.degenerate:
        below = [v for v in samples if v <= pm.identity]
        comm_witness = next(((a, b) for a in below for b in below
                             if not pm.values_equal(pm(a, b), pm(b, a))), None)
        checks.append(AxiomCheck("commutative on [0, 1_⊙]", comm_witness is None, comm_witness))

        if profile.shape is FrontierShape.HALF_OPEN and pm.representable(profile.phi):
            phi = profile.phi
            checks.append(AxiomCheck("φ exceeds the identity", pm.identity < phi,
                                     None if pm.identity < phi else (pm.identity, phi),
                                     detail="a non-degenerate frontier lies in (1_⊙, ∞]"))
            ok = pm.values_equal(pm(phi, phi), phi)
            checks.append(AxiomCheck("φ ⊙ φ = φ", ok, None if ok else (phi, phi)))
            absorb_witness = next(
                ((t, phi) for t in samples
                 if not t.is_zero and t <= phi
                 and not (pm.values_equal(pm(t, phi), phi) and pm.values_equal(pm(phi, t), phi))),
                None)
            checks.append(AxiomCheck("φ absorbing on (0, φ]", absorb_witness is None, absorb_witness))

            cross_witness = None
            lows = [t for t in samples if t < phi]
            highs = [t for t in samples if t > phi]
            cross_pairs = (itertools.product(lows, highs) if exhaustive else
                           ((rng.choice(lows), rng.choice(highs))
                            for _ in range(budget.pairs)) if lows and highs else ())
            for (t, u) in cross_pairs:
                if pm.values_equal(pm(t, u), phi):
                    cross_witness = (t, u)
                    break
            checks.append(AxiomCheck("no crossing at φ", cross_witness is None, cross_witness,
                                     detail="no t < φ, t' > φ with t ⊙ t' = φ"))

        lemma_witness = None
        for t in samples:
            probes = pm.finiteness_probes(t)
            left = any(pm(s, t) <= pm.identity for s in probes)
            right = any(pm(t, s) <= pm.identity for s in probes)
            fin = pm.is_odot_finite(t)
            if t.is_zero:
                continue
            if not (left == right == fin):
                lemma_witness = (t,)
                break
        checks.append(AxiomCheck("finiteness criteria agree", lemma_witness is None,
                                 lemma_witness,
                                 detail="O(t)=0 ⇔ ∃s: s⊙t ≤ 1_⊙ ⇔ ∃s': t⊙s' ≤ 1_⊙"))

    return AxiomReport(pm.describe(), profile.degenerate, tuple(checks))
