"""Weyl group actions on the weight lattice.

Elements act on fundamental-weight coordinates by exact integer
matrices; the sign of an element is the determinant of its matrix,
which equals (-1)^(reduced word length).  Simple-root indices in the
public API are 1-based (Bourbaki numbering, matching the README tables);
everything internal is 0-based.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import CapExceeded, InternalCheckError
from .lattice import IntMatrix
from .rootdata import RootDatum, Weight

DEFAULT_ENUMERATION_CAP = 5_000_000


class WeylElement(NamedTuple):
    matrix: IntMatrix
    sign: int
    word: Optional[tuple[int, ...]] = None  # 1-based simple indices, when known


def reflection_matrix(rd: RootDatum, i: int) -> IntMatrix:
    """Matrix of the simple reflection s_i (1-based) on weight coordinates."""
    if not 1 <= i <= rd.rank:
        raise ValueError(f"simple index {i} out of range 1..{rd.rank}")
    j = i - 1
    n = rd.rank
    rows = []
    for k in range(n):
        row = [int(k == c) for c in range(n)]
        row[j] -= rd.cartan[k][j]
        rows.append(row)
    return IntMatrix.from_rows(rows)


def _reflect(cartan: IntMatrix, coords: Sequence[int], j: int) -> tuple[int, ...]:
    """Apply s_{j+1} in coordinates: c_k -> c_k - c_j * A[k][j]."""
    cj = coords[j]
    if cj == 0:
        return tuple(coords)
    return tuple(c - cj * cartan[k][j] for k, c in enumerate(coords))


def simple_reflection(rd: RootDatum, i: int, lam: Sequence[int]) -> Weight:
    """s_i(lam) = lam - <lam, alpha_i_vee> alpha_i, with i 1-based."""
    if not 1 <= i <= rd.rank:
        raise ValueError(f"simple index {i} out of range 1..{rd.rank}")
    lam = rd.validate_weight(lam)
    return _reflect(rd.cartan, lam, i - 1)


def make_dominant(rd: RootDatum, lam: Sequence[int]) -> tuple[Weight, int, int]:
    """Reflect lam into the dominant chamber.

    Returns (dominant, sign, steps) where dominant = w(lam) for the
    product w of the applied reflections and sign = det(w).  Each step
    applies the simple reflection at the smallest negative coordinate,
    which strictly increases <x, rho_check>, so the loop terminates.
    """
    x = rd.validate_weight(lam)
    cap = 10 * rd.num_positive_roots * (1 + max((abs(c) for c in x), default=0))
    sign = 1
    steps = 0
    while True:
        j = next((k for k, c in enumerate(x) if c < 0), None)
        if j is None:
            return x, sign, steps
        x = _reflect(rd.cartan, x, j)
        sign = -sign
        steps += 1
        if steps > cap:
            raise InternalCheckError(
                f"make_dominant exceeded its iteration cap {cap} on {lam} ({rd.type_string})"
            )


def duality_involution(rd: RootDatum, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual representation: the dominant form of -lam."""
    lam = rd.validate_weight(lam)
    dominant, _, _ = make_dominant(rd, tuple(-c for c in lam))
    return dominant


def weyl_order(rd: RootDatum) -> int:
    return rd.weyl_order


def enumerate_weyl(
    rd: RootDatum, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> Iterator[WeylElement]:
    """Yield every Weyl group element exactly once (BFS closure).

    Elements are deduplicated by their integer matrix, the canonical
    form.  Refuses upfront when the group order exceeds ``cap`` (pass
    ``cap=None`` to override); E8 exceeds the default cap.
    """
    order = rd.weyl_order
    if cap is not None and order > cap:
        raise CapExceeded(
            f"Weyl group of {rd.type_string} has {order} elements, "
            f"above the enumeration cap {cap}; raise the cap to force this"
        )
    n = rd.rank
    gens = [reflection_matrix(rd, i) for i in range(1, n + 1)]
    ident = IntMatrix.identity(n)
    seen = {ident.data}
    frontier = [WeylElement(ident, 1, ())]
    while frontier:
        nxt = []
        for el in frontier:
            yield el
            for i, g in enumerate(gens, start=1):
                m = el.matrix @ g
                if m.data not in seen:
                    seen.add(m.data)
                    nxt.append(WeylElement(m, -el.sign, el.word + (i,)))
        frontier = nxt
    if len(seen) != order:
        raise InternalCheckError(
            f"BFS closure produced {len(seen)} elements, expected {order}"
        )


def coxeter_element(rd: RootDatum) -> WeylElement:
    """The product s_1 s_2 ... s_r of the simple reflections, in order.

    Its matrix has multiplicative order exactly the Coxeter number; only
    order and determinant are canonical, the word is a fixed choice.
    """
    if not rd.is_simple:
        raise ValueError("Coxeter element is defined per simple factor")
    m = IntMatrix.identity(rd.rank)
    for i in range(1, rd.rank + 1):
        m = m @ reflection_matrix(rd, i)
    return WeylElement(m, (-1) ** rd.rank, tuple(range(1, rd.rank + 1)))


def matrix_order(m: IntMatrix, bound: int = 10_000) -> int:
    """Multiplicative order of an integer matrix (raises past the bound)."""
    ident = IntMatrix.identity(m.rows)
    p = m
    for k in range(1, bound + 1):
        if p == ident:
            return k
        p = p @ m
    raise InternalCheckError(f"matrix order exceeds bound {bound}")
