"""Character values at the Coxeter conjugacy class, in polynomial time.

The value of an irreducible character with highest weight lambda at the
Coxeter class is 0, +1 or -1.  It is nonzero exactly when mu = lambda +
rho pairs nonzero mod h with every positive coroot; in that case mu
reduces under the affine reflection group W x hQ to the unique integral
point of the open fundamental alcove, which is rho, and the value is the
determinant of the linear parts of the applied reflections.  None of
this enumerates the Weyl group, so E8 is as cheap as A1.

Also here: the central character of rho, the order of the canonical
Coxeter lift in the simply connected cover of the dual adjoint group,
the Frobenius-Schur indicator, and the principal-cocharacter checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InternalCheckError, TheoremViolation
from .rootdata import RootDatum, RootPair, SimpleFactor, Weight
from .weyl import duality_involution, make_dominant

ALCOVE_ITERATION_CAP = 10**6


@dataclass(frozen=True)
class BlockingCoroot:
    """Witness that mu = lambda + rho is singular mod h."""

    factor: int
    pair: RootPair  # full-rank embedded coordinates
    pairing_mod_h: int

    def as_dict(self) -> dict:
        return {
            "factor": self.factor,
            "root": list(self.pair.root),
            "simple_coords": list(self.pair.simple_coords),
            "coroot": list(self.pair.coroot),
            "pairing_mod_h": self.pairing_mod_h,
        }


@dataclass(frozen=True)
class FactorCharValue:
    value: int
    regular: bool
    sign_parity: Optional[int]
    endpoint_is_rho: Optional[bool]
    steps: Optional[int]
    blocking_coroot: Optional[BlockingCoroot]


@dataclass(frozen=True)
class CharReport:
    """Value and provenance of a character evaluation at the Coxeter class."""

    value: int
    regular: bool
    sign_parity: Optional[int]
    endpoint_is_rho: Optional[bool]
    blocking_coroot: Optional[BlockingCoroot]
    factors: tuple[FactorCharValue, ...]

    def __post_init__(self):
        assert self.value in (-1, 0, 1)
        assert (self.value == 0) == (not self.regular) == (self.blocking_coroot is not None)
        if self.value != 0:
            assert self.endpoint_is_rho is True

    def as_dict(self) -> dict:
        out: dict = {"value": self.value, "regular": self.regular}
        if self.sign_parity is not None:
            out["sign_parity"] = self.sign_parity
        if self.endpoint_is_rho is not None:
            out["endpoint_is_rho"] = self.endpoint_is_rho
        if self.blocking_coroot is not None:
            out["blocking_coroot"] = self.blocking_coroot.as_dict()
        out["factors"] = [
            {
                "value": f.value,
                "regular": f.regular,
                **({"sign_parity": f.sign_parity} if f.sign_parity is not None else {}),
                **({"steps": f.steps} if f.steps is not None else {}),
            }
            for f in self.factors
        ]
        return out


def _factor_blocking(f: SimpleFactor, mu: Sequence[int]) -> Optional[tuple[RootPair, int]]:
    h = f.coxeter_number
    for p in f.positive:
        s = sum(a * b for a, b in zip(mu, p.coroot)) % h
        if s == 0:
            return p, s
    return None


def regularity_test(
    rd: RootDatum, lam: Sequence[int]
) -> tuple[bool, Optional[BlockingCoroot]]:
    """Is <lambda + rho, beta_vee> nonzero mod h for every positive
    coroot beta_vee (per simple factor, with that factor's h)?

    Returns the first blocking coroot as a witness when the answer is
    no.  Rejects non-dominant or non-integral lambda.
    """
    lam = rd.validate_weight(lam, dominant=True)
    for k, f in enumerate(rd.factors):
        mu = tuple(c + 1 for c in lam[rd.factor_slice(k)])
        hit = _factor_blocking(f, mu)
        if hit is not None:
            pair, s = hit
            embedded = RootPair(
                root=rd.embed(k, pair.root),
                simple_coords=rd.embed(k, pair.simple_coords),
                coroot=rd.embed(k, pair.coroot),
            )
            return False, BlockingCoroot(factor=k, pair=embedded, pairing_mod_h=s)
    return True, None


def _alcove_reduce_factor(f: SimpleFactor, mu: Sequence[int]) -> tuple[tuple[int, ...], int, int]:
    """Reflect mu into the open fundamental alcove of W x hQ.

    Walls: the r linear walls <x, alpha_i_vee> = 0 (apply s_i, lowest
    index first) and the affine wall <x, gamma_vee> = h for the highest
    coroot gamma_vee (apply x -> x - (<x, gamma_vee> - h) * gamma).
    Every reflection flips the sign; hitting a wall exactly contradicts
    the regularity precondition and raises.
    """
    a = f.cartan
    h = f.coxeter_number
    gamma = f.highest_coroot.root  # fundamental-weight coords of the partner root
    gamma_vee = f.highest_coroot.coroot
    x = list(mu)
    sign = 1
    steps = 0
    r = f.rank
    while True:
        moved = False
        for j in range(r):
            cj = x[j]
            if cj == 0:
                raise InternalCheckError(
                    f"alcove reduction hit wall <x, alpha_{j+1}_vee> = 0 at {tuple(x)}"
                )
            if cj < 0:
                for k in range(r):
                    x[k] -= cj * a[k][j]
                sign = -sign
                steps += 1
                moved = True
                break
        if moved:
            if steps > ALCOVE_ITERATION_CAP:
                raise InternalCheckError("alcove reduction exceeded its iteration cap")
            continue
        t = sum(c * g for c, g in zip(x, gamma_vee))
        if t == h:
            raise InternalCheckError(
                f"alcove reduction hit the affine wall <x, gamma_vee> = {h} at {tuple(x)}"
            )
        if t > h:
            excess = t - h
            for k in range(r):
                x[k] -= excess * gamma[k]
            sign = -sign
            steps += 1
            if steps > ALCOVE_ITERATION_CAP:
                raise InternalCheckError("alcove reduction exceeded its iteration cap")
            continue
        return tuple(x), sign, steps


def alcove_reduce(rd: RootDatum, mu: Sequence[int]) -> tuple[Weight, int, int]:
    """Factorwise alcove reduction of a strictly dominant, regular-mod-h
    weight; returns (endpoint, sign, steps) with sign the product of the
    per-factor reflection determinants.

    The endpoint must be rho; anything else would falsify the theory
    and raises TheoremViolation.
    """
    mu = rd.validate_weight(mu)
    if any(c <= 0 for c in mu):
        raise ValueError(f"{mu} is not strictly dominant")
    endpoint: list[int] = []
    sign = 1
    steps = 0
    for k, f in enumerate(rd.factors):
        e, s, n = _alcove_reduce_factor(f, mu[rd.factor_slice(k)])
        endpoint.extend(e)
        sign *= s
        steps += n
    endpoint_t = tuple(endpoint)
    if endpoint_t != rd.rho:
        raise _endpoint_violation(rd, mu, endpoint_t)
    return endpoint_t, sign, steps


def _endpoint_violation(rd: RootDatum, mu, endpoint) -> TheoremViolation:
    return TheoremViolation(
        f"alcove reduction of {tuple(mu)} in {rd.type_string} ended at "
        f"{endpoint}, not rho",
        witness={"type": rd.type_string, "mu": list(mu), "endpoint": list(endpoint)},
    )


def char_at_coxeter(rd: RootDatum, lam: Sequence[int]) -> CharReport:
    """Character value of the irreducible with highest weight lambda at
    the Coxeter conjugacy class; always one of -1, 0, +1."""
    lam = rd.validate_weight(lam, dominant=True)
    factor_reports: list[FactorCharValue] = []
    value = 1
    blocking: Optional[BlockingCoroot] = None
    total_steps = 0
    for k, f in enumerate(rd.factors):
        lam_k = lam[rd.factor_slice(k)]
        mu = tuple(c + 1 for c in lam_k)
        hit = _factor_blocking(f, mu)
        if hit is not None:
            pair, s = hit
            witness = BlockingCoroot(
                factor=k,
                pair=RootPair(
                    root=rd.embed(k, pair.root),
                    simple_coords=rd.embed(k, pair.simple_coords),
                    coroot=rd.embed(k, pair.coroot),
                ),
                pairing_mod_h=s,
            )
            if blocking is None:
                blocking = witness
            factor_reports.append(
                FactorCharValue(
                    value=0, regular=False, sign_parity=None,
                    endpoint_is_rho=None, steps=None,
                    blocking_coroot=witness,
                )
            )
            value = 0
            continue
        endpoint, sign, steps = _alcove_reduce_factor(f, mu)
        if endpoint != f.rho:
            raise _endpoint_violation(rd, mu, endpoint)
        assert sign == (-1) ** (steps % 2)
        factor_reports.append(
            FactorCharValue(
                value=sign, regular=True, sign_parity=steps % 2,
                endpoint_is_rho=True, steps=steps, blocking_coroot=None,
            )
        )
        value *= sign
        total_steps += steps
    regular = blocking is None
    return CharReport(
        value=value if regular else 0,
        regular=regular,
        sign_parity=total_steps % 2 if regular else None,
        endpoint_is_rho=True if regular else None,
        blocking_coroot=blocking,
        factors=tuple(factor_reports),
    )


@dataclass(frozen=True)
class CentralCharacter:
    """Restriction of rho to the center, on the canonical generators."""

    values: tuple[int, ...]  # +1 or -1 per invariant factor of P/Q
    order: int  # 1 or 2

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def as_dict(self) -> dict:
        return {"values": list(self.values), "order": self.order}


def rho_central_character(rd: RootDatum) -> CentralCharacter:
    """rho on the center: project rho into P/Q and read off +-1 per
    generator.  The order always divides 2 (twice rho is a sum of
    roots); anything else raises TheoremViolation."""
    residues = rd.center.project(rd.rho)
    values = []
    for r_i, d_i in zip(residues, rd.center.invariant_factors):
        if r_i == 0:
            values.append(1)
        elif 2 * r_i == d_i:
            values.append(-1)
        else:
            raise TheoremViolation(
                f"rho has order > 2 on the center of {rd.type_string}",
                witness={"residues": list(residues)},
            )
    order = 2 if any(v == -1 for v in values) else 1
    return CentralCharacter(values=tuple(values), order=order)


@dataclass(frozen=True)
class LiftOrderReport:
    factor: str
    coxeter_number: int
    lift_order: int
    matches_h: bool

    def as_dict(self) -> dict:
        return {
            "factor": self.factor,
            "coxeter_number": self.coxeter_number,
            "lift_order": self.lift_order,
            "matches_h": self.matches_h,
        }


def coxeter_lift_order(rd: RootDatum) -> tuple[LiftOrderReport, ...]:
    """Order of the canonical lift of the Coxeter class of the adjoint
    form of the dual group into its simply connected cover, per factor.

    The adjoint-side element is rho viewed as a cocharacter evaluated at
    a primitive h-th root of unity; its lifts have order equal to the
    least m with m*rho/h in the root lattice, namely h times the order
    of [rho] in P/Q.  ``matches_h`` holds iff rho is trivial on the
    center; the equivalence is asserted both ways.
    """
    reports = []
    for f in rd.factors:
        h = f.coxeter_number
        # least m with (m/h) * rho in Q: h | m is forced by <alpha_i, rho_check> = 1,
        # then m/h must kill [rho] in P/Q, whose order divides 2
        multiplier = next(
            k for k in (1, 2)
            if all(r == 0 for r in f.center.project(tuple(k for _ in range(f.rank))))
        )
        lift_order = h * multiplier
        trivial = all(v == 1 for v in _factor_central_values(f))
        matches = lift_order == h
        if matches != trivial:
            raise TheoremViolation(
                f"central-character/lift-order equivalence failed for {f.name}",
                witness={"factor": f.name, "lift_order": lift_order, "rho_trivial": trivial},
            )
        reports.append(
            LiftOrderReport(
                factor=f.name, coxeter_number=h, lift_order=lift_order, matches_h=matches
            )
        )
    return tuple(reports)


def _factor_central_values(f: SimpleFactor) -> tuple[int, ...]:
    residues = f.center.project(f.rho)
    out = []
    for r_i, d_i in zip(residues, f.center.invariant_factors):
        if r_i == 0:
            out.append(1)
        elif 2 * r_i == d_i:
            out.append(-1)
        else:
            raise TheoremViolation(f"rho has order > 2 on the center of {f.name}")
    return tuple(out)


def fs_indicator(rd: RootDatum, lam: Sequence[int]) -> int:
    """Frobenius-Schur indicator: 0 unless the representation is
    self-dual, else the sign of <lambda, sum of positive coroots>.

    The sign is the value on lambda of the central involution obtained
    by evaluating the principal cocharacter at -1, which separates
    orthogonal (+1) from symplectic (-1).
    """
    lam = rd.validate_weight(lam, dominant=True)
    if duality_involution(rd, lam) != lam:
        return 0
    total = 0
    for k, f in enumerate(rd.factors):
        total += sum(a * b for a, b in zip(lam[rd.factor_slice(k)], f.two_rho_check))
    return -1 if total % 2 else 1


@dataclass(frozen=True)
class PrincipalCocharacterReport:
    factor: str
    coxeter_number: int
    rho_pairings_all_one: bool
    adjoint_order: int
    adjoint_order_is_h: bool
    regular: bool

    @property
    def passed(self) -> bool:
        return self.rho_pairings_all_one and self.adjoint_order_is_h and self.regular

    def as_dict(self) -> dict:
        return {
            "factor": self.factor,
            "coxeter_number": self.coxeter_number,
            "rho_pairings_all_one": self.rho_pairings_all_one,
            "adjoint_order": self.adjoint_order,
            "adjoint_order_is_h": self.adjoint_order_is_h,
            "regular": self.regular,
            "passed": self.passed,
        }


def verify_principal_cocharacter(rd: RootDatum) -> tuple[PrincipalCocharacterReport, ...]:
    """Per-factor checks that rho-as-cocharacter is the principal one:

    (a) <rho, alpha_i_vee> = 1 for every simple i;
    (b) the adjoint-torus element exp(2 pi i rho_check / h) has order
        exactly h (least m with m*rho_check/h in the coweight lattice);
    (c) it is regular: no root height vanishes mod h.

    Failures are reported, not silently absorbed.
    """
    from math import lcm

    reports = []
    for f in rd.factors:
        h = f.coxeter_number
        r = f.rank
        # pair rho against the computed coroots of the simple roots (the
        # height-1 entries of the positive-root table), not against the
        # unit coweights they should equal
        simple_pairs = [p for p in f.positive if p.height == 1]
        pairings_ok = len(simple_pairs) == r and all(
            sum(a * b for a, b in zip(f.rho, p.coroot)) == 1 for p in simple_pairs
        )
        # adjoint order: m * rho_check / h lands in P_vee iff all <alpha_i, .> integral
        denoms = []
        for i in range(r):
            v = sum(Fraction(f.cartan[j][i]) * f.rho_check[j] for j in range(r)) / h
            denoms.append(v.denominator)
        adjoint_order = lcm(*denoms) if denoms else 1
        heights_ok = all(p.height % h != 0 for p in f.positive)
        reports.append(
            PrincipalCocharacterReport(
                factor=f.name,
                coxeter_number=h,
                rho_pairings_all_one=pairings_ok,
                adjoint_order=adjoint_order,
                adjoint_order_is_h=adjoint_order == h,
                regular=heights_ok,
            )
        )
    return tuple(reports)
