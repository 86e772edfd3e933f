"""All-to-all to local mapping in the LHZ parity layout.

A fully connected n-spin problem (couplings only, no local fields) is
carried by K = n(n-1)/2 physical bits, one per logical pair (i, j) with
i < j. Physical bit k stands for the product sigma_i * sigma_j; its field
is the logical coupling J_ij. Consistency is enforced by four-body parity
tiles whose spin product is +1 on every valid encoding. The triangular
arrangement has rows of n-1 down to 1 bits plus n-2 fixed +1 spins that
close the boundary tiles.

Logical indices are 0-based throughout. Physical bit order is the
lexicographic pair order (0,1), (0,2), ..., which coincides with row-major
order over the rows (row r holds the pairs (r, r+1) ... (r, n-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DecodeError, UnsupportedProblemError
from .spins import IsingProblem, as_spins

FIXED = None  # tile slot carried by a fixed +1 spin


def physical_count(n: int) -> int:
    """Physical bits needed for n logical spins: n(n-1)/2."""
    if n < 2:
        raise ValueError("the mapping needs at least 2 logical spins")
    return n * (n - 1) // 2


def constraint_count(n: int) -> int:
    """Parity tiles needed for n logical spins: K - n + 1."""
    return physical_count(n) - n + 1


def pair_index(n: int, i: int, j: int) -> int:
    """Physical index of logical pair (i, j), i < j, lexicographic order."""
    if not (0 <= i < j < n):
        raise ValueError(f"pair ({i}, {j}) is not a valid 0-based pair for n={n}")
    # pairs (0,*) come first, then (1,*), ...
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Tile:
    """One four-body parity check. Slots are (north, east, south, west);
    a None slot is carried by a fixed +1 spin of the boundary row."""

    north: Optional[int]
    east: Optional[int]
    south: Optional[int]
    west: Optional[int]

    @property
    def members(self) -> tuple[Optional[int], Optional[int], Optional[int], Optional[int]]:
        return (self.north, self.east, self.south, self.west)

    @property
    def fixed_flags(self) -> tuple[bool, bool, bool, bool]:
        return tuple(m is FIXED for m in self.members)

    @property
    def indices(self) -> tuple[int, ...]:
        """Physical indices only, fixed slots skipped."""
        return tuple(m for m in self.members if m is not FIXED)


@dataclass(frozen=True)
class LhzLayout:
    n_logical: int
    k_physical: int
    rows: tuple[int, ...]          # row lengths, base (n-1) first
    fixed_row: int                 # count of fixed +1 boundary spins
    pairs: tuple[tuple[int, int], ...]  # physical k -> logical pair (i, j)
    tiles: tuple[Tile, ...]


def build_layout(n: int) -> LhzLayout:
    """Construct the triangular layout for n logical spins.

    Tiles come in two kinds. Bulk tiles are diamonds over the pairs
    {(i,j), (i,j+1), (i+1,j), (i+1,j+1)}; boundary tiles close the triangle
    with {(i,i+1), (i,i+2), (i+1,i+2)} plus one fixed spin. Both have spin
    product +1 on every encoded configuration. Tile order: for each i
    ascending, the boundary tile first, then its bulk diamonds by j.
    """
    if n < 3:
        raise ValueError("the triangular layout needs at least 3 logical spins")
    k = physical_count(n)
    pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    tiles: list[Tile] = []
    for i in range(n - 2):
        tiles.append(
            Tile(
                north=pair_index(n, i, i + 2),
                east=pair_index(n, i + 1, i + 2),
                south=FIXED,
                west=pair_index(n, i, i + 1),
            )
        )
        for j in range(i + 2, n - 1):
            tiles.append(
                Tile(
                    north=pair_index(n, i, j + 1),
                    east=pair_index(n, i + 1, j + 1),
                    south=pair_index(n, i + 1, j),
                    west=pair_index(n, i, j),
                )
            )
    layout = LhzLayout(
        n_logical=n,
        k_physical=k,
        rows=tuple(n - 1 - r for r in range(n - 1)),
        fixed_row=n - 2,
        pairs=pairs,
        tiles=tuple(tiles),
    )
    assert len(tiles) == constraint_count(n)
    return layout


def row_members(layout: LhzLayout) -> tuple[tuple[int, ...], ...]:
    """Physical indices per row, base row first, left to right."""
    rows = []
    k = 0
    for length in layout.rows:
        rows.append(tuple(range(k, k + length)))
        k += length
    return tuple(rows)


@dataclass(frozen=True)
class LhzProblem:
    """Per-bit fields J_k plus the uniform tile penalty strength C."""

    j_fields: np.ndarray
    c_penalty: float

    def __post_init__(self):
        j = np.asarray(self.j_fields, dtype=float)
        if j.ndim != 1:
            raise ValueError("j_fields must be a 1-D array")
        if not self.c_penalty > 0:
            raise ValueError("c_penalty must be > 0")
        j.setflags(write=False)
        object.__setattr__(self, "j_fields", j)


def map_couplings(problem: IsingProblem) -> np.ndarray:
    """Logical couplings J_ij -> physical field vector J_k (pair order).

    The logical energy is -sum J_ij sigma_i sigma_j while the physical
    field term is +sum J_k sigma_k, so the fields carry the negated
    couplings: J_k = -J_ij. Minimizing the physical energy then minimizes
    the logical energy rather than maximizing it.

    Local fields are not representable here; any nonzero h is rejected.
    """
    if problem.n < 3:
        raise ValueError("mapping is defined for n >= 3 logical spins")
    if np.any(problem.h != 0.0):
        raise UnsupportedProblemError(
            "nonzero local fields cannot be carried by the pair mapping; "
            "set h = 0"
        )
    n = problem.n
    return np.array(
        [-problem.j[i, j] for i in range(n) for j in range(i + 1, n)], dtype=float
    )


def encode(layout: LhzLayout, logical: Sequence[int] | np.ndarray) -> np.ndarray:
    """Physical configuration carrying a logical one: bit (i,j) = sigma_i*sigma_j."""
    sigma = as_spins(logical)
    if sigma.size != layout.n_logical:
        raise ValueError(
            f"logical configuration has {sigma.size} spins, layout expects "
            f"{layout.n_logical}"
        )
    return np.array([sigma[i] * sigma[j] for i, j in layout.pairs], dtype=np.int8)


def tile_products(layout: LhzLayout, physical: Sequence[int] | np.ndarray) -> np.ndarray:
    """Spin product of each tile; fixed slots contribute +1."""
    sigma = as_spins(physical)
    if sigma.size != layout.k_physical:
        raise ValueError(
            f"physical configuration has {sigma.size} bits, layout expects "
            f"{layout.k_physical}"
        )
    out = np.ones(len(layout.tiles), dtype=np.int64)
    for t, tile in enumerate(layout.tiles):
        for m in tile.indices:
            out[t] *= sigma[m]
    return out


def lhz_energy(
    problem: LhzProblem, layout: LhzLayout, physical: Sequence[int] | np.ndarray
) -> float:
    """Field energy plus tile penalties: sum_k J_k sigma_k - C * sum_l prod_l."""
    sigma = as_spins(physical).astype(float)
    if problem.j_fields.size != layout.k_physical:
        raise ValueError(
            f"j_fields has {problem.j_fields.size} entries, layout expects "
            f"{layout.k_physical}"
        )
    if sigma.size != layout.k_physical:
        raise ValueError(
            f"physical configuration has {sigma.size} bits, layout expects "
            f"{layout.k_physical}"
        )
    products = tile_products(layout, physical)
    return float(problem.j_fields @ sigma - problem.c_penalty * products.sum())


def decode_readout(
    physical: Sequence[int] | np.ndarray, layout: LhzLayout
) -> np.ndarray:
    """Logical configuration from a physical readout, canonical form.

    All tiles must check out (product +1); the first violated tile is
    reported otherwise. Logical spin 0 is fixed to +1 and the base-row bits
    (0, j) supply the rest, so the result is canonical up to the global
    flip the encoding cannot distinguish.
    """
    sigma = as_spins(physical)
    if sigma.size != layout.k_physical:
        raise ValueError(
            f"physical configuration has {sigma.size} bits, layout expects "
            f"{layout.k_physical}"
        )
    products = tile_products(layout, physical)
    bad = np.nonzero(products != 1)[0]
    if bad.size > 0:
        first = int(bad[0])
        raise DecodeError(
            first,
            f"parity tile {first} violated (members "
            f"{layout.tiles[first].members}); readout is not a valid encoding",
        )
    n = layout.n_logical
    logical = np.empty(n, dtype=np.int8)
    logical[0] = 1
    for j in range(1, n):
        logical[j] = sigma[pair_index(n, 0, j)]
    return logical


def penalty_too_weak(j_fields: np.ndarray | Sequence[float], c_penalty: float) -> bool:
    """True when C fails to dominate the largest field magnitude. A weak
    penalty lets field terms pay for a broken tile; treat as a warning."""
    j = np.asarray(j_fields, dtype=float)
    return bool(c_penalty <= np.max(np.abs(j))) if j.size else False


def layout_to_dict(layout: LhzLayout, j_fields: np.ndarray | None = None) -> dict:
    """JSON-ready description: rows, tile membership, and the k <-> (i, j) table."""
    doc = {
        "n_logical": layout.n_logical,
        "k_physical": layout.k_physical,
        "rows": list(layout.rows),
        "row_members": [list(r) for r in row_members(layout)],
        "fixed_row": layout.fixed_row,
        "pairs": [[i, j] for i, j in layout.pairs],
        "tiles": [
            {
                "north": t.north,
                "east": t.east,
                "south": t.south,
                "west": t.west,
                "fixed": list(t.fixed_flags),
            }
            for t in layout.tiles
        ],
    }
    if j_fields is not None:
        doc["j_fields"] = [float(v) for v in np.asarray(j_fields, dtype=float)]
    return doc
