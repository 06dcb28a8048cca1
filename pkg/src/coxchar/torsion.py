"""Torsion points of the simply-connected / adjoint torus pair.

For a datum with weight lattice P, root lattice Q and their duals, the
n-torsion of the kernel-of-multiplication construction is presented two
ways: as the coweight-side quotient P_vee / n Q_vee and as the
weight-side character group P / n Q.  The two presentations are
abstractly isomorphic, Weyl-equivariantly; ``duality_report`` checks
this executable content, and ``classify_regular_orbits`` enumerates
classes to exhibit the distinguished regular orbit at n = h.

Class representatives live in weight coordinates; the canonical key of
a class is its residue tuple under the invariant-factor projection, so
there is no coset-representative ambiguity anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import CapExceeded
from .lattice import FiniteAbelianGroup, quotient
from .rootdata import RootDatum
from .weyl import _reflect

DEFAULT_CLASS_CAP = 10**6


def torsion_points(rd: RootDatum, n: int) -> FiniteAbelianGroup:
    """The coweight-side presentation P_vee / n Q_vee.

    In the fundamental-coweight basis the simple coroots have coordinate
    matrix A^T (column j is alpha_j_vee), so the quotient is ZZ^r modulo
    the column span of n * A^T.  Its order is n^r * |P/Q|.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return quotient(rd.rank, rd.cartan.transpose().scale(n))


def char_group_of_torsion(rd: RootDatum, n: int) -> FiniteAbelianGroup:
    """The weight-side presentation P / n Q (column span of n * A)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return quotient(rd.rank, rd.cartan.scale(n))


@dataclass(frozen=True)
class DualityReport:
    type_string: str
    n: int
    invariant_factors_coweight_side: tuple[int, ...]
    invariant_factors_weight_side: tuple[int, ...]
    isomorphic: bool
    action_well_defined: bool
    trials: int
    witness: Optional[dict]

    @property
    def passed(self) -> bool:
        return self.isomorphic and self.action_well_defined

    def as_dict(self) -> dict:
        return {
            "type": self.type_string,
            "n": self.n,
            "invariant_factors_coweight_side": list(self.invariant_factors_coweight_side),
            "invariant_factors_weight_side": list(self.invariant_factors_weight_side),
            "isomorphic": self.isomorphic,
            "action_well_defined": self.action_well_defined,
            "trials": self.trials,
            "witness": self.witness,
            "passed": self.passed,
        }


def duality_report(
    rd: RootDatum,
    n: int,
    trials: int = 1000,
    seed: int = 0,
    cap: int = DEFAULT_CLASS_CAP,
) -> DualityReport:
    """Check the two torsion presentations agree and the Weyl action on
    weight-side classes is independent of the representative.

    The representative check is randomized: for x' = x + n*(root lattice
    vector) and every simple reflection s, the classes of s(x) and s(x')
    must coincide.  A failure is reported with a witness.
    """
    tp = torsion_points(rd, n)
    cg = char_group_of_torsion(rd, n)
    if cg.order > cap:
        raise CapExceeded(
            f"{rd.type_string} at n={n}: {cg.order} classes exceed the cap {cap}"
        )
    isomorphic = tp.invariant_factors == cg.invariant_factors

    rng = random.Random(seed)
    witness = None
    well_defined = True
    r = rd.rank
    for _ in range(trials):
        x = tuple(rng.randrange(-3 * n, 3 * n + 1) for _ in range(r))
        m = tuple(rng.randrange(-2, 3) for _ in range(r))
        shift = rd.cartan.apply(m)  # a root-lattice vector in weight coords
        x2 = tuple(a + n * b for a, b in zip(x, shift))
        if cg.project(x) != cg.project(x2):
            well_defined = False
            witness = {"x": list(x), "x2": list(x2), "reflection": None}
            break
        for j in range(r):
            if cg.project(_reflect(rd.cartan, x, j)) != cg.project(_reflect(rd.cartan, x2, j)):
                well_defined = False
                witness = {"x": list(x), "x2": list(x2), "reflection": j + 1}
                break
        if not well_defined:
            break

    return DualityReport(
        type_string=rd.type_string,
        n=n,
        invariant_factors_coweight_side=tp.invariant_factors,
        invariant_factors_weight_side=cg.invariant_factors,
        isomorphic=isomorphic,
        action_well_defined=well_defined,
        trials=trials,
        witness=witness,
    )


@dataclass(frozen=True)
class OrbitReport:
    type_string: str
    n: int
    total_classes: int
    regular_classes: int
    regular_orbits: int
    regular_orbits_with_image_order_n: int
    rho_in_distinguished_orbit: bool

    def as_dict(self) -> dict:
        return {
            "type": self.type_string,
            "n": self.n,
            "total_classes": self.total_classes,
            "regular_classes": self.regular_classes,
            "regular_orbits": self.regular_orbits,
            "regular_orbits_with_image_order_n": self.regular_orbits_with_image_order_n,
            "rho_in_distinguished_orbit": self.rho_in_distinguished_orbit,
        }


def classify_regular_orbits(
    rd: RootDatum, n: int, cap: int = DEFAULT_CLASS_CAP
) -> OrbitReport:
    """Enumerate P/nQ, group classes into Weyl orbits, and count the
    regular ones, flagging those whose image in P/nP has order n.

    A class is regular when no positive-coroot pairing vanishes mod n.
    Image order of a class with representative x is n / gcd(n, coords of
    x), the order of x in P/nP; it is constant on orbits.  At n = h
    exactly one regular orbit has image order h and it contains [rho].
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    group = char_group_of_torsion(rd, n)
    if group.order > cap:
        raise CapExceeded(
            f"{rd.type_string} at n={n}: {group.order} classes exceed the cap {cap}"
        )
    coroots = [p.coroot for p in rd.positive_roots()]
    r = rd.rank

    def is_regular(x: tuple[int, ...]) -> bool:
        return all(sum(a * b for a, b in zip(x, cor)) % n != 0 for cor in coroots)

    def image_order(x: tuple[int, ...]) -> int:
        g = n
        for c in x:
            g = gcd(g, c)
        return n // g

    # enumerate residue tuples; orbits by BFS under simple reflections
    from itertools import product as iproduct

    rho_key = group.project(rd.rho)
    seen: set[tuple[int, ...]] = set()
    total = 0
    regular_classes = 0
    regular_orbits = 0
    distinguished = 0
    rho_in_distinguished = False
    for residues in iproduct(*(range(d) for d in group.invariant_factors)):
        total += 1
        if residues in seen:
            continue
        rep = group.section(residues)
        orbit = {residues}
        frontier = [rep]
        contains_rho = residues == rho_key
        while frontier:
            x = frontier.pop()
            for j in range(r):
                y = _reflect(rd.cartan, x, j)
                key = group.project(y)
                if key not in orbit:
                    orbit.add(key)
                    frontier.append(y)
                    if key == rho_key:
                        contains_rho = True
        seen |= orbit
        if is_regular(rep):
            regular_classes += len(orbit)
            regular_orbits += 1
            if image_order(rep) == n:
                distinguished += 1
                if contains_rho:
                    rho_in_distinguished = True
    assert total == group.order

    return OrbitReport(
        type_string=rd.type_string,
        n=n,
        total_classes=total,
        regular_classes=regular_classes,
        regular_orbits=regular_orbits,
        regular_orbits_with_image_order_n=distinguished,
        rho_in_distinguished_orbit=rho_in_distinguished and distinguished == 1,
    )
