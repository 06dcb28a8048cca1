"""Brute-force Weyl character formula at the Coxeter class, exactly.

This is the independent falsifier for the fast path in ``character``.
The evaluation point is t = exp(2 pi i rho_check / h), the canonical
representative of the Coxeter class; a weight nu takes the value
exp(2 pi i <nu, rho_check> / h) there, which the conductor N = h * e
(e the exponent of the center P/Q) turns into an integer power of
zeta_N.  Numerator and denominator are alternating sums over the full
Weyl group, accumulated exactly in ZZ[zeta_N]; the character is their
exact quotient in QQ(zeta_N) and must come out as a literal -1, 0 or
+1.  Any other value raises with a full witness: the oracle can
falsify the theory, it never assumes it.

The Weyl sum runs as a breadth-first walk over the orbit of the
strictly dominant weight mu = lambda + rho; strict dominance makes
w -> w(mu) a bijection, every edge flips the sign, and an inconsistent
revisit (the symptom of a violated precondition) raises.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cyclotomic import CyclotomicInt, divide_exact
from .errors import CapExceeded, InternalCheckError, TheoremViolation
from .rootdata import RootDatum, SimpleFactor

DEFAULT_WEYL_CAP = 5_000_000
FLOAT_SHADOW_TOLERANCE = 1e-6


@dataclass
class CoxeterEvaluation:
    """Evaluation data at the Coxeter element of one simple factor."""

    factor: SimpleFactor
    conductor: int
    exponent_scale: int  # e = exponent of P/Q
    weight_exponents: tuple[int, ...]  # e * <omega_k, rho_check>, all integral
    _denominator: CyclotomicInt | None = field(default=None, repr=False)
    _denominator_shadow: complex = field(default=0j, repr=False)

    @classmethod
    def for_factor(cls, f: SimpleFactor) -> "CoxeterEvaluation":
        e = f.center.exponent
        n = f.coxeter_number * e
        exps = []
        for coord in f.rho_check:
            v = Fraction(e) * coord
            if v.denominator != 1:
                raise InternalCheckError(
                    f"conductor {n} does not clear the exponent denominators of {f.name}"
                )
            exps.append(int(v))
        return cls(factor=f, conductor=n, exponent_scale=e, weight_exponents=tuple(exps))

    def exponent(self, nu: Sequence[int]) -> int:
        """e * <nu, rho_check>; additive in nu."""
        return sum(a * b for a, b in zip(nu, self.weight_exponents))

    def signed_orbit_counts(self, mu: Sequence[int]) -> list[int]:
        """counts[k] = sum of det(w) over w with exponent(w(mu)) = k mod N.

        BFS over the orbit of mu.  The exponent updates incrementally:
        reflecting at i subtracts c_i * e, because every simple root
        pairs to 1 with rho_check.
        """
        f = self.factor
        n = self.conductor
        e = self.exponent_scale
        r = f.rank
        a = f.cartan
        nz = [
            tuple((k, a[k][j]) for k in range(r) if a[k][j] != 0)
            for j in range(r)
        ]
        start = tuple(mu)
        visited: dict[tuple[int, ...], int] = {start: 1}
        counts = [0] * n
        counts[self.exponent(start) % n] += 1
        stack: list[tuple[tuple[int, ...], int, int]] = [(start, self.exponent(start), 1)]
        while stack:
            x, ex, sgn = stack.pop()
            for j in range(r):
                cj = x[j]
                if cj == 0:
                    raise InternalCheckError(
                        "orbit walk found a stabilized point; mu was not strictly dominant"
                    )
                y = list(x)
                for k, akj in nz[j]:
                    y[k] -= cj * akj
                yt = tuple(y)
                ysgn = -sgn
                prev = visited.get(yt)
                if prev is None:
                    visited[yt] = ysgn
                    yex = ex - cj * e
                    counts[yex % n] += ysgn
                    stack.append((yt, yex, ysgn))
                elif prev != ysgn:
                    raise InternalCheckError("orbit walk sign inconsistency")
        if len(visited) != f.weyl_order:
            raise InternalCheckError(
                f"orbit size {len(visited)} != Weyl order {f.weyl_order}"
            )
        return counts

    def numerator(self, lam: Sequence[int]) -> tuple[CyclotomicInt, complex]:
        """Exact Weyl numerator at the Coxeter element, with its float shadow."""
        mu = tuple(c + 1 for c in lam)
        counts = self.signed_orbit_counts(mu)
        exact = CyclotomicInt.from_poly(self.conductor, counts)
        z = cmath.exp(2j * cmath.pi / self.conductor)
        shadow = sum(c * z**k for k, c in enumerate(counts) if c) or 0j
        return exact, shadow

    def denominator(self) -> tuple[CyclotomicInt, complex]:
        if self._denominator is None:
            exact, shadow = self.numerator((0,) * self.factor.rank)
            if not exact:
                raise InternalCheckError(
                    f"Weyl denominator of {self.factor.name} vanished at the Coxeter element"
                )
            self._denominator = exact
            self._denominator_shadow = shadow
        return self._denominator, self._denominator_shadow


@lru_cache(maxsize=None)
def _evaluation(f: SimpleFactor) -> CoxeterEvaluation:
    return CoxeterEvaluation.for_factor(f)


def _check_cap(rd: RootDatum, cap: int | None) -> None:
    if cap is not None and rd.weyl_order > cap:
        raise CapExceeded(
            f"oracle needs the full Weyl sum: |W({rd.type_string})| = {rd.weyl_order} "
            f"exceeds the cap {cap}; use the fast path, or raise the cap to force this"
        )


def weyl_numerator(
    rd: RootDatum, lam: Sequence[int], cap: int | None = DEFAULT_WEYL_CAP
) -> CyclotomicInt:
    """Alternating Weyl sum for lambda at the Coxeter element of a
    simple datum, as an exact element of ZZ[zeta_N]."""
    if not rd.is_simple:
        raise ValueError("weyl_numerator is per simple factor; products factorize")
    lam = rd.validate_weight(lam, dominant=True)
    _check_cap(rd, cap)
    exact, _ = _evaluation(rd.factors[0]).numerator(lam)
    return exact


def char_at_coxeter_oracle(
    rd: RootDatum, lam: Sequence[int], cap: int | None = DEFAULT_WEYL_CAP
) -> int:
    """Character value at the Coxeter class by exact division of Weyl
    sums; product types multiply per-factor values.

    Asserts the quotient is literally -1, 0 or +1 (TheoremViolation
    otherwise, with the full witness) and that the double-precision
    shadow of every factor quotient agrees within 1e-6."""
    lam = rd.validate_weight(lam, dominant=True)
    _check_cap(rd, cap)
    value = 1
    for k, f in enumerate(rd.factors):
        ev = _evaluation(f)
        num, num_shadow = ev.numerator(lam[rd.factor_slice(k)])
        den, den_shadow = ev.denominator()
        quotient = divide_exact(num, den)
        q = quotient.as_integer()
        if q is None or q not in (-1, 0, 1):
            raise TheoremViolation(
                f"oracle got character value outside {{-1, 0, 1}} for {f.name}",
                witness={
                    "type": rd.type_string,
                    "factor": f.name,
                    "lambda": list(lam),
                    "conductor": ev.conductor,
                    "numerator": list(num.coeffs),
                    "denominator": list(den.coeffs),
                    "quotient": [str(c) for c in quotient.coeffs],
                },
            )
        shadow = num_shadow / den_shadow
        if abs(shadow - q) > FLOAT_SHADOW_TOLERANCE:
            raise InternalCheckError(
                f"float shadow {shadow} strayed from exact value {q} on {f.name}, "
                f"lambda={list(lam)}"
            )
        value *= q
    return value


def float_shadow(
    rd: RootDatum, lam: Sequence[int], cap: int | None = DEFAULT_WEYL_CAP
) -> complex:
    """The same quotient of Weyl sums in double-precision complex
    arithmetic only; a regression tripwire, not a substitute for the
    exact value."""
    lam = rd.validate_weight(lam, dominant=True)
    _check_cap(rd, cap)
    value = complex(1)
    for k, f in enumerate(rd.factors):
        ev = _evaluation(f)
        _, num_shadow = ev.numerator(lam[rd.factor_slice(k)])
        _, den_shadow = ev.denominator()
        value *= num_shadow / den_shadow
    return value
