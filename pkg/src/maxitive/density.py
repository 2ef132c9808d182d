"""⊙-absolute continuity, Radon-Nikodym densities, and the RN-property diagnosis.

A density of ν with respect to τ is a map c with ν(B) = ∫_B c ⊙ dτ for
every B.  On a finite powerset the identity reduces atom by atom to
c(x) ⊙ τ({x}) = ν({x}), so the solver works pointwise, returning the
minimal solution where one exists and a per-atom failure certificate
otherwise.  The diagnosis assembles the finiteness conditions that
characterize when every ⊙-dominated measure admits a density: on a
finite space that happens exactly when τ is σ-⊙-finite (σ-principality
being automatic).

All operations here refuse degenerate ⊙ (only 0 is ⊙-finite), which the
density theory excludes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DegenerateOperationError, PreconditionError, UnresolvedInfimumError
from .extreal import INF, ONE, ZERO, ExtNonneg, as_extnn
from .integral import integrate_threshold
from .measure import (
    MaxMeasure,
    MeasurableFn,
    SpotReport,
    find_odot_spots,
    is_semi_odot_finite,
    is_sigma_odot_finite,
    measure_eval,
)
from .pseudomul import (
    CustomContinuous,
    DiscreteChain,
    FrontierShape,
    Minimum,
    PseudoMul,
    StandardProduct,
)
from .spaces import SubsetB, _same_space

__all__ = [
    "AchievableSet",
    "FailureReason",
    "AtomFailure",
    "DensityResult",
    "TotalVsPhi",
    "RNDiagnosis",
    "achievable_set",
    "is_abs_continuous",
    "solve_atom_density",
    "solve_density",
    "verify_density",
    "finitize_density",
    "diagnose_rn",
    "rn_failure_witness",
]


def _require_non_degenerate(pm: PseudoMul, op: str) -> None:
    if pm.degenerate:
        raise DegenerateOperationError(
            f"{op} requires a non-degenerate ⊙ (some positive element must be ⊙-finite)")


@dataclass(frozen=True)
class AchievableSet:
    """The image { c ⊙ t : c ∈ [0, ∞] } for a fixed t.

    For a continuous ⊙ this is {0} ∪ [O(t), ∞ ⊙ t]; whether the lower
    end is attained is known exactly only for the built-ins
    (``lower_attained`` is None when undetermined).  For a discrete
    chain the set is finite and listed explicitly.
    """

    lower: ExtNonneg
    upper: ExtNonneg
    lower_attained: Optional[bool]
    contains_zero: bool = True
    explicit_values: Optional[frozenset] = None

    def contains(self, v: ExtNonneg) -> Optional[bool]:
        """Membership; None when it hinges on unknown lower-end attainment."""
        if self.explicit_values is not None:
            return v in self.explicit_values
        if v.is_zero:
            return True
        if v < self.lower or v > self.upper:
            return False
        if v == self.lower:
            return self.lower_attained
        return True

    def __str__(self):
        if self.explicit_values is not None:
            return "{" + ", ".join(str(v) for v in sorted(self.explicit_values)) + "}"
        if self.lower == self.upper:
            if self.lower.is_zero:
                return "{0}"
            return "{0, " + str(self.lower) + "}"
        left = "[" if self.lower_attained else "("
        zero = "{0} ∪ " if not self.lower.is_zero else ""
        return f"{zero}{left}{self.lower}, {self.upper}]"


def achievable_set(pm: PseudoMul, t: ExtNonneg) -> AchievableSet:
    """Describe { c ⊙ t : c ∈ [0, ∞] }; exact for the built-ins."""
    t = as_extnn(t)
    if isinstance(pm, StandardProduct):
        if t.is_zero:
            return AchievableSet(ZERO, ZERO, True)
        if t.is_inf:
            return AchievableSet(INF, INF, True)
        return AchievableSet(ZERO, INF, True)
    if isinstance(pm, Minimum):
        return AchievableSet(ZERO, t, True)
    if isinstance(pm, DiscreteChain):
        values = frozenset(pm(c, t) for c in pm.carrier)
        nonzero = [v for v in values if not v.is_zero]
        lower = min(nonzero) if nonzero else ZERO
        return AchievableSet(lower, max(values), True, explicit_values=values)
    lower = pm.zero_map(t)
    return AchievableSet(lower, pm(INF, t), None if not lower.is_zero else True)


def is_abs_continuous(pm: PseudoMul, nu: MaxMeasure, tau: MaxMeasure,
                      cross_check: bool = False) -> bool:
    """Whether ν(B) ≤ ∞ ⊙ τ(B) for every B with τ(B) ⊙-finite.

    Sets with ⊙-infinite τ-measure are deliberately unconstrained.  The
    check runs atom by atom (sound on a powerset since F_⊙ is downward
    closed); ``cross_check`` reruns it exhaustively over all subsets and
    verifies agreement.
    """
    _require_non_degenerate(pm, "is_abs_continuous")
    _same_space(nu.space, tau.space)
    atomwise = all(
        not pm.is_odot_finite(tv) or nv <= achievable_set(pm, tv).upper
        for nv, tv in zip(nu.masses, tau.masses))
    if cross_check:
        exhaustive = True
        for B in nu.space.subsets(12):
            tv = measure_eval(tau, B)
            if pm.is_odot_finite(tv) and measure_eval(nu, B) > achievable_set(pm, tv).upper:
                exhaustive = False
                break
        if exhaustive != atomwise:
            raise AssertionError(
                "atom-wise absolute continuity disagrees with the exhaustive scan")
    return atomwise


# ---------------------------------------------------------------------------
# The density solver
# ---------------------------------------------------------------------------

class FailureReason(enum.Enum):
    TARGET_OUTSIDE_ACHIEVABLE = "target outside achievable set"
    NULL_TAU_POSITIVE_NU = "τ-null atom with positive ν"
    UNRESOLVED_NUMERIC = "numeric solve did not resolve"


@dataclass(frozen=True)
class AtomFailure:
    atom: str
    target: ExtNonneg
    tau_mass: ExtNonneg
    reason: FailureReason
    achievable: Optional[AchievableSet] = None
    bracket: Optional[tuple] = None

    def __str__(self):
        extra = f"; achievable {self.achievable}" if self.achievable is not None else ""
        if self.bracket is not None:
            extra += f"; bracket ({self.bracket[0]}, {self.bracket[1]})"
        return (f"atom {self.atom}: no c with c ⊙ {self.tau_mass} = {self.target} "
                f"({self.reason.value}{extra})")


@dataclass(frozen=True)
class DensityResult:
    density: Optional[MeasurableFn]
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return self.density is not None

    def __str__(self):
        if self.ok:
            return f"density found: {self.density!r}"
        return "no density:\n" + "\n".join("  " + str(f) for f in self.failures)


def _solve_custom_atom(pm: CustomContinuous, nu_x: ExtNonneg, tau_x: ExtNonneg,
                       max_iter: int = 200) -> Optional[ExtNonneg]:
    # nu_x > 0 here.  c ↦ c ⊙ t is monotone, so bisect for the least c
    # with c ⊙ t ≥ ν_x and accept it only if equality holds within
    # tolerance (a gap means the target sits below O(t) or in a jump).
    lower = pm.zero_map(tau_x)
    if nu_x < lower and not pm.values_equal(nu_x, lower):
        return None
    if pm.values_equal(nu_x, lower):
        # the target is the infimum of the positive branch; a least
        # solution need not exist, and the identity is the canonical
        # representative when it solves
        if pm.values_equal(pm(pm.identity, tau_x), nu_x):
            return pm.identity
    target = float(nu_x)
    tf = float(tau_x)
    g = pm.fn
    hi = None
    for k in range(0, 101, 4):
        if g(2.0 ** k, tf) >= target:
            hi = 2.0 ** k
            break
    if hi is None:
        if pm.values_equal(pm(INF, tau_x), nu_x):
            return INF
        return None
    lo = 0.0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:  # float saturation, finer than any tolerance
            break
        if g(mid, tf) >= target:
            hi = mid
        else:
            lo = mid
    else:
        raise UnresolvedInfimumError(
            f"bisection for c ⊙ {tau_x} = {nu_x} did not converge",
            bracket=(ExtNonneg(Fraction(lo)), ExtNonneg(Fraction(hi))))
    c = ExtNonneg(Fraction(hi))
    if pm.values_equal(pm(c, tau_x), nu_x):
        return c
    return None


def solve_atom_density(pm: PseudoMul, nu_x: ExtNonneg, tau_x: ExtNonneg) -> Optional[ExtNonneg]:
    """The least c with c ⊙ tau_x = nu_x, or None when no solution exists.

    Closed forms for the built-ins; an exhaustive ascending scan for
    chains; bisection inside the achievable bracket otherwise.  One case
    has no least solution: under the standard product with
    nu_x = tau_x = ∞ every positive c works, and the canonical choice
    1_⊙ is returned.
    """
    _require_non_degenerate(pm, "solve_atom_density")
    nu_x = as_extnn(nu_x)
    tau_x = as_extnn(tau_x)
    if nu_x.is_zero:
        return ZERO
    if isinstance(pm, StandardProduct):
        if tau_x.is_zero:
            return None
        if tau_x.is_inf:
            return ONE if nu_x.is_inf else None
        return nu_x / tau_x
    if isinstance(pm, Minimum):
        return nu_x if nu_x <= tau_x else None
    if isinstance(pm, DiscreteChain):
        for c in pm.carrier:
            if pm(c, tau_x) == nu_x:
                return c
        return None
    return _solve_custom_atom(pm, nu_x, tau_x)


def solve_density(pm: PseudoMul, nu: MaxMeasure, tau: MaxMeasure) -> DensityResult:
    """Solve ν(B) = ∫_B c ⊙ dτ for all B, atom by atom.

    Success returns the pointwise-minimal density.  Failure lists every
    offending atom with the target value and the achievable set of its
    τ-mass.  When ν is ⊙-absolutely continuous with respect to a
    σ-⊙-finite τ (and ⊙ is continuous), the solve always succeeds: a
    finite space is σ-principal, so those hypotheses are the whole story.
    """
    _require_non_degenerate(pm, "solve_density")
    _same_space(nu.space, tau.space)
    values = []
    failures = []
    for atom, nv, tv in zip(nu.space.atoms, nu.masses, tau.masses):
        if tv.is_zero and not nv.is_zero:
            failures.append(AtomFailure(atom, nv, tv, FailureReason.NULL_TAU_POSITIVE_NU,
                                        achievable_set(pm, tv)))
            continue
        try:
            c = solve_atom_density(pm, nv, tv)
        except UnresolvedInfimumError as exc:
            failures.append(AtomFailure(atom, nv, tv, FailureReason.UNRESOLVED_NUMERIC,
                                        bracket=exc.bracket))
            continue
        if c is None:
            failures.append(AtomFailure(atom, nv, tv, FailureReason.TARGET_OUTSIDE_ACHIEVABLE,
                                        achievable_set(pm, tv)))
        else:
            values.append(c)
    if failures:
        return DensityResult(None, tuple(failures))
    return DensityResult(MeasurableFn(nu.space, values))


def verify_density(pm: PseudoMul, c: MeasurableFn, nu: MaxMeasure, tau: MaxMeasure,
                   limit: int | None = None) -> bool:
    """Exhaustively check ν(B) = ∫_B c ⊙ dτ over every subset."""
    _require_non_degenerate(pm, "verify_density")
    _same_space(c.space, nu.space)
    _same_space(c.space, tau.space)
    space = c.space
    space.check_enum_cap(limit)
    nu_table = nu.table(limit).values
    for mask in range(1 << space.n):
        B = SubsetB(space, mask)
        if not pm.values_equal(integrate_threshold(pm, c, tau, B), nu_table[mask]):
            return False
    return True


def finitize_density(pm: PseudoMul, c: MeasurableFn, nu: MaxMeasure, tau: MaxMeasure,
                     limit: int | None = None) -> MeasurableFn:
    """Replace a verified density by the ⊙-finite-valued one c ⊙ 1_F.

    F is the set where c is ⊙-finite.  Requires c to verify and ν to be
    semi-⊙-finite; under those hypotheses the truncation is again a
    density (asserted before returning).
    """
    _require_non_degenerate(pm, "finitize_density")
    if not verify_density(pm, c, nu, tau, limit):
        raise PreconditionError("finitize_density: c is not a density of ν w.r.t. τ")
    if not is_semi_odot_finite(pm, nu, limit):
        raise PreconditionError("finitize_density: ν is not semi-⊙-finite")
    c1 = MeasurableFn(c.space, [v if pm.is_odot_finite(v) else ZERO for v in c.values])
    if not verify_density(pm, c1, nu, tau, limit):
        raise AssertionError("finitized density failed to verify; this cannot happen "
                             "for a semi-⊙-finite ν")
    return c1


# ---------------------------------------------------------------------------
# Diagnosis of the Radon-Nikodym property
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TotalVsPhi:
    """Verdict of the necessary condition τ(E) ≤ φ."""

    total: ExtNonneg
    phi: ExtNonneg
    satisfied: bool
    total_odot_finite: bool
    at_boundary: bool

    def __str__(self):
        rel = "=" if self.at_boundary else ("≤" if self.satisfied else ">")
        fin = "⊙-finite" if self.total_odot_finite else "⊙-infinite"
        return f"τ(E) = {self.total} {rel} φ = {self.phi} (total is {fin})"


@dataclass(frozen=True)
class RNDiagnosis:
    """Whether every measure ⊙-dominated by τ has a density w.r.t. τ."""

    sigma_odot_finite: bool
    sigma_principal: bool
    spots: SpotReport
    semi_finite: bool
    total_vs_phi: TotalVsPhi
    rn_property: bool
    failed_conditions: tuple = ()
    note: str = ""

    def __str__(self):
        lines = [
            f"σ-⊙-finite:      {self.sigma_odot_finite}",
            f"σ-principal:     {self.sigma_principal}" + (f"  ({self.note})" if self.note else ""),
            f"⊙-spots:         {self.spots}",
            f"semi-⊙-finite:   {self.semi_finite}",
            f"frontier check:  {self.total_vs_phi}",
            f"RN property:     {self.rn_property}",
        ]
        if self.failed_conditions:
            lines.append("failed necessary conditions: " + "; ".join(self.failed_conditions))
        return "\n".join(lines)


def diagnose_rn(pm: PseudoMul, tau: MaxMeasure, limit: int | None = None) -> RNDiagnosis:
    """Assemble the Radon-Nikodym-property verdict for τ.

    On a finite space σ-principality is automatic, so the verdict is
    σ-⊙-finiteness; the report also carries each necessary condition
    (no ⊙-spots, semi-⊙-finiteness, τ(E) ≤ φ) so that a failing τ names
    what breaks.
    """
    _require_non_degenerate(pm, "diagnose_rn")
    sigma = is_sigma_odot_finite(pm, tau)
    spots = find_odot_spots(pm, tau)
    semi = is_semi_odot_finite(pm, tau, limit)
    profile = pm.finiteness_profile()
    total = tau.total
    satisfied = profile.shape is FrontierShape.WHOLE_INTERVAL or total <= profile.phi
    tv = TotalVsPhi(total, profile.phi, satisfied,
                    pm.is_odot_finite(total) if pm.representable(total) else False,
                    at_boundary=(total == profile.phi))
    principal = True
    rn = sigma and principal
    failed = []
    if spots.has_spots:
        failed.append(f"has a ⊙-spot ({spots.maximal_spot!r})")
    if not satisfied:
        failed.append("total mass exceeds the frontier φ")
    if not semi:
        failed.append("not semi-⊙-finite")
    if not sigma:
        failed.append("not σ-⊙-finite")
    return RNDiagnosis(
        sigma_odot_finite=sigma,
        sigma_principal=principal,
        spots=spots,
        semi_finite=semi,
        total_vs_phi=tv,
        rn_property=rn,
        failed_conditions=tuple(failed),
        note="every σ-ideal of a finite powerset is principal",
    )


def rn_failure_witness(pm: PseudoMul, tau: MaxMeasure) -> MaxMeasure:
    """A ⊙-dominated measure with no density, for τ not σ-⊙-finite.

    Values 0 on the ideal generated by the sets of ⊙-finite measure and
    1_⊙ elsewhere: as atom masses, 1_⊙ on every atom of ⊙-infinite mass.
    It is ⊙-absolutely continuous with respect to τ (the constraint only
    sees ⊙-finite sets), yet c ⊙ τ({x}) = 1_⊙ is unsolvable on a
    ⊙-infinite atom, because c ⊙ τ({x}) ≤ 1_⊙ forces τ({x}) ⊙-finite.
    """
    _require_non_degenerate(pm, "rn_failure_witness")
    return MaxMeasure(
        tau.space,
        [ZERO if pm.is_odot_finite(v) else pm.identity for v in tau.masses])
