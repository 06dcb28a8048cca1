"""Root data of simply connected complex semisimple groups.

Conventions, fixed once and documented in the README:

* Bourbaki numbering of simple roots for every family.
* The Cartan matrix is stored as ``A[i][j] = <alpha_j, alpha_i_vee>``,
  so simple root alpha_j has fundamental-weight coordinates equal to
  column j of A.
* A weight is an integer tuple of coordinates in the fundamental-weight
  basis; a coweight is a tuple (rational in general) in the simple-coroot
  basis.  With these bases ``<weight, coweight>`` is the plain dot
  product of coordinate tuples.
* Root lengths are normalised per simple factor so that short roots have
  squared length 2; only the long:short ratio (2 for B/C/F, 3 for G)
  enters coroot formation.

Product types concatenate blocks along the diagonal; per-factor data
(Coxeter number, highest coroot, ...) is retained on the factors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple, Sequence

from .lattice import FiniteAbelianGroup, IntMatrix, quotient

Weight = tuple[int, ...]

_FAMILY_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
_FACTOR_RE = re.compile(r"([A-G])([0-9]+)")


class CartanType(NamedTuple):
    """Ordered list of (family, rank) simple factors."""

    factors: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        return "x".join(f"{fam}{rank}" for fam, rank in self.factors)


def parse_cartan_type(type_string: str) -> CartanType:
    """Parse a string like ``"A2"`` or ``"A1xB3"``; raises ValueError."""
    s = type_string.strip()
    if not s:
        raise ValueError("empty Cartan type string")
    factors = []
    for part in s.split("x"):
        m = _FACTOR_RE.fullmatch(part.strip())
        if m is None:
            raise ValueError(f"malformed Cartan type factor {part!r} in {type_string!r}")
        fam, rank = m.group(1), int(m.group(2))
        lo = _FAMILY_MIN_RANK[fam]
        if rank < lo:
            raise ValueError(f"{fam}{rank}: rank must be >= {lo} (D3 is written A3)")
        if fam == "E" and rank not in (6, 7, 8):
            raise ValueError(f"E{rank}: rank must be 6, 7 or 8")
        if fam == "F" and rank != 4:
            raise ValueError(f"F{rank}: only F4 exists")
        if fam == "G" and rank != 2:
            raise ValueError(f"G{rank}: only G2 exists")
        factors.append((fam, rank))
    return CartanType(tuple(factors))


def _cartan_and_lengths(family: str, rank: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix A[i][j] = <alpha_j, alpha_i_vee> and the symmetrizer.

    The symmetrizer d gives squared lengths 2*d[i]; d[i] = 1 for short
    roots and the length ratio for long ones, making A[j][i]*d[j] a
    symmetric integer matrix.
    """
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i: int, j: int) -> None:
        a[i][j] = -1
        a[j][i] = -1

    d = [1] * rank
    if family == "A":
        for i in range(rank - 1):
            link(i, i + 1)
    elif family == "B":  # alpha_rank is the short root
        for i in range(rank - 1):
            link(i, i + 1)
        a[rank - 1][rank - 2] = -2
        d = [2] * (rank - 1) + [1]
    elif family == "C":  # alpha_rank is the long root
        for i in range(rank - 1):
            link(i, i + 1)
        a[rank - 2][rank - 1] = -2
        d = [1] * (rank - 1) + [2]
    elif family == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
    elif family == "E":  # chain 1-3-4-5-... with node 2 hanging off node 4
        chain = [0] + list(range(2, rank))
        for x, y in zip(chain, chain[1:]):
            link(x, y)
        link(1, 3)
    elif family == "F":  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(0, 1)
        link(1, 2)
        link(2, 3)
        a[2][1] = -2
        d = [2, 2, 1, 1]
    elif family == "G":  # alpha_1 short, alpha_2 long
        a[0][1] = -3
        a[1][0] = -1
        d = [1, 3]
    else:  # pragma: no cover
        raise ValueError(f"unknown family {family!r}")
    for i in range(rank):
        for j in range(rank):
            if a[j][i] * d[j] != a[i][j] * d[i]:
                raise AssertionError(f"{family}{rank}: Cartan matrix not symmetrizable")
    return a, d


class RootPair(NamedTuple):
    """A positive root with its coroot.

    ``root`` is in fundamental-weight coordinates, ``simple_coords`` in
    the simple-root basis, ``coroot`` (always integral) in the
    simple-coroot basis.
    """

    root: tuple[int, ...]
    simple_coords: tuple[int, ...]
    coroot: tuple[int, ...]

    @property
    def coroot_height(self) -> int:
        return sum(self.coroot)

    @property
    def height(self) -> int:
        return sum(self.simple_coords)


def _positive_roots(a: list[list[int]], d: list[int]) -> list[RootPair]:
    """All positive roots by string closure from the simple roots.

    Works entirely in simple-root coordinates: beta + alpha_i is a root
    iff the alpha_i-string through beta has q = p - <beta, alpha_i_vee>
    >= 1, where p counts how far the string descends.  No inner products
    beyond Cartan pairings are used.
    """
    rank = len(a)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    known = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i in range(rank):
                pairing = sum(a[i][j] * b[j] for j in range(rank))
                p = 0
                probe = list(b)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in known:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(b)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        layer = nxt

    gram = [[a[k][j] * d[k] for k in range(rank)] for j in range(rank)]  # (alpha_j, alpha_k)
    pairs = []
    for b in sorted(known, key=lambda t: (sum(t), t)):
        len2 = sum(b[j] * b[k] * gram[j][k] for j in range(rank) for k in range(rank))
        if len2 % 2 != 0:
            raise AssertionError("odd squared length")
        d_beta = len2 // 2
        coroot = []
        for j in range(rank):
            num = b[j] * d[j]
            if num % d_beta != 0:
                raise AssertionError("non-integral coroot")
            coroot.append(num // d_beta)
        fw = tuple(sum(a[i][j] * b[j] for j in range(rank)) for i in range(rank))
        pairs.append(RootPair(root=fw, simple_coords=b, coroot=tuple(coroot)))
    return pairs


def _weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(family, rank)]


@dataclass(frozen=True)
class SimpleFactor:
    """One simple factor of a root datum, fully precomputed."""

    family: str
    rank: int
    cartan: IntMatrix
    symmetrizer: tuple[int, ...]
    positive: tuple[RootPair, ...]
    coxeter_number: int
    center: FiniteAbelianGroup
    highest_coroot: RootPair
    rho_check: tuple[Fraction, ...]  # simple-coroot coords of the half-sum of positive coroots
    two_rho_check: tuple[int, ...]
    weyl_order: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank


def _build_factor(family: str, rank: int) -> SimpleFactor:
    a, d = _cartan_and_lengths(family, rank)
    cartan = IntMatrix.from_rows(a)
    positive = _positive_roots(a, d)

    num_roots = 2 * len(positive)
    if num_roots % rank != 0:
        raise AssertionError("|Phi| not divisible by rank")
    h = num_roots // rank
    if h != 1 + max(p.height for p in positive):
        raise AssertionError("Coxeter number disagrees with highest-root height")

    center = quotient(rank, cartan)
    if center.order != abs(cartan.det()):
        raise AssertionError("|P/Q| != |det(Cartan)|")

    by_coht = sorted(positive, key=lambda p: p.coroot_height)
    highest = by_coht[-1]
    if highest.coroot_height != h - 1:
        raise AssertionError("highest coroot height != h - 1")
    if len(by_coht) > 1 and by_coht[-2].coroot_height == h - 1:
        raise AssertionError("highest coroot not unique")

    two_rho_check = tuple(
        sum(p.coroot[j] for p in positive) for j in range(rank)
    )
    rho_check = tuple(Fraction(x, 2) for x in two_rho_check)
    # <alpha_i, rho_check> = 1 is the identity everything downstream leans on
    for i in range(rank):
        if sum(Fraction(a[j][i]) * rho_check[j] for j in range(rank)) != 1:
            raise AssertionError("<alpha_i, rho_check> != 1")

    return SimpleFactor(
        family=family,
        rank=rank,
        cartan=cartan,
        symmetrizer=tuple(d),
        positive=tuple(positive),
        coxeter_number=h,
        center=center,
        highest_coroot=highest,
        rho_check=rho_check,
        two_rho_check=two_rho_check,
        weyl_order=_weyl_order(family, rank),
    )


@dataclass(frozen=True)
class RootDatum:
    """Root datum of a simply connected semisimple group (possibly a product)."""

    cartan_type: CartanType
    factors: tuple[SimpleFactor, ...]
    rank: int
    cartan: IntMatrix
    center: FiniteAbelianGroup  # P/Q with the canonical divisibility chain
    offsets: tuple[int, ...]  # start index of each factor's coordinate block

    @property
    def type_string(self) -> str:
        return str(self.cartan_type)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def is_simple(self) -> bool:
        return len(self.factors) == 1

    @property
    def num_positive_roots(self) -> int:
        return sum(len(f.positive) for f in self.factors)

    @property
    def coxeter_numbers(self) -> tuple[int, ...]:
        return tuple(f.coxeter_number for f in self.factors)

    @property
    def weyl_order(self) -> int:
        n = 1
        for f in self.factors:
            n *= f.weyl_order
        return n

    def factor_slice(self, k: int) -> slice:
        start = self.offsets[k]
        return slice(start, start + self.factors[k].rank)

    def embed(self, k: int, local: Sequence[int]) -> tuple[int, ...]:
        """Pad a factor-local coordinate vector with zeros to full rank."""
        out = [0] * self.rank
        out[self.factor_slice(k)] = list(local)
        return tuple(out)

    def positive_roots(self) -> list[RootPair]:
        """All positive roots in full-rank coordinates."""
        out = []
        for k, f in enumerate(self.factors):
            for p in f.positive:
                out.append(
                    RootPair(
                        root=self.embed(k, p.root),
                        simple_coords=self.embed(k, p.simple_coords),
                        coroot=self.embed(k, p.coroot),
                    )
                )
        return out

    def validate_weight(self, coords: Sequence[int], dominant: bool = False) -> Weight:
        if len(coords) != self.rank:
            raise ValueError(f"weight has {len(coords)} coordinates, rank is {self.rank}")
        lam = tuple(int(c) for c in coords)
        if any(c != int(v) for c, v in zip(lam, coords)):
            raise ValueError("weight coordinates must be integers")
        if dominant and any(c < 0 for c in lam):
            raise ValueError(f"weight {lam} is not dominant")
        return lam


_FACTOR_CACHE: dict[tuple[str, int], SimpleFactor] = {}


def build(type_string: str) -> RootDatum:
    """Construct the root datum for a Cartan type string like ``"A2xB3"``."""
    ct = parse_cartan_type(type_string)
    factors = []
    for fam, rank in ct.factors:
        key = (fam, rank)
        if key not in _FACTOR_CACHE:
            _FACTOR_CACHE[key] = _build_factor(fam, rank)
        factors.append(_FACTOR_CACHE[key])
    total = sum(f.rank for f in factors)
    offsets = []
    pos = 0
    for f in factors:
        offsets.append(pos)
        pos += f.rank
    rows = []
    for k, f in enumerate(factors):
        for i in range(f.rank):
            row = [0] * total
            row[offsets[k]:offsets[k] + f.rank] = list(f.cartan[i])
            rows.append(row)
    cartan = IntMatrix.from_rows(rows)
    return RootDatum(
        cartan_type=ct,
        factors=tuple(factors),
        rank=total,
        cartan=cartan,
        center=quotient(total, cartan),
        offsets=tuple(offsets),
    )


def pairing(weight: Sequence, coweight: Sequence):
    """Canonical pairing: dot product of fundamental-weight coordinates
    with simple-coroot coordinates."""
    if len(weight) != len(coweight):
        raise ValueError("rank mismatch in pairing")
    return sum(a * b for a, b in zip(weight, coweight))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)
