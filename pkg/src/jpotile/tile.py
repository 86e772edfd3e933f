"""Classical energy model of the six-oscillator tile.

Four logical spins carry fields J_1..J_4; two ancilla spins and a constant
offset C_cnst multiply the four-body logical parity:

    E = sum_i J_i s_i - (J_a1 a_1 + J_a2 a_2 + C_cnst) * s_1 s_2 s_3 s_4

With a positive bracket the tile pays for odd logical parity, which is how
the parity tiles of the LHZ layout are realized in hardware.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .spins import DEGENERACY_TOL, as_spins, enumerate_ground_states


@dataclass(frozen=True)
class TileParams:
    """Couplings of one tile: per-spin fields j, ancilla couplings, offset."""

    j: tuple[float, float, float, float]
    j_a1: float
    j_a2: float
    c_cnst: float

    def __post_init__(self):
        j = tuple(float(v) for v in self.j)
        if len(j) != 4:
            raise ValueError("j must hold exactly 4 field values")
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "j_a1", float(self.j_a1))
        object.__setattr__(self, "j_a2", float(self.j_a2))
        object.__setattr__(self, "c_cnst", float(self.c_cnst))


def uniform_tile_params(j_b: float, j_c: float) -> TileParams:
    """Equal fields j_b with ancilla couplings at twice the field scale and
    offset j_c. The doubled ancilla weight keeps the consistent
    configurations exactly degenerate at energy -j_c."""
    return TileParams(j=(j_b,) * 4, j_a1=2 * j_b, j_a2=2 * j_b, c_cnst=j_c)


@dataclass(frozen=True)
class TileConfig:
    """One assignment of the tile: four logical spins and two ancillas."""

    logical: tuple[int, int, int, int]
    ancilla: tuple[int, int]

    def __post_init__(self):
        logical = tuple(int(v) for v in self.logical)
        ancilla = tuple(int(v) for v in self.ancilla)
        if len(logical) != 4 or any(v not in (-1, 1) for v in logical):
            raise ValueError("logical must be 4 spins valued -1 or +1")
        if len(ancilla) != 2 or any(v not in (-1, 1) for v in ancilla):
            raise ValueError("ancilla must be 2 spins valued -1 or +1")
        object.__setattr__(self, "logical", logical)
        object.__setattr__(self, "ancilla", ancilla)

    @property
    def spins(self) -> tuple[int, ...]:
        return self.logical + self.ancilla

    @property
    def logical_parity(self) -> int:
        p = 1
        for v in self.logical:
            p *= v
        return p

    @property
    def label(self) -> str:
        return "".join("1" if v == 1 else "0" for v in self.spins)


def tile_energy(params: TileParams, config: TileConfig) -> float:
    """Energy of one tile assignment."""
    pi = config.logical_parity
    field = sum(jv * sv for jv, sv in zip(params.j, config.logical))
    a1, a2 = config.ancilla
    return float(field - (params.j_a1 * a1 + params.j_a2 * a2 + params.c_cnst) * pi)


def tile_energy_effective(params: TileParams, config: TileConfig) -> float:
    """Energy in grouped form, the ancilla terms folded into one bracket.

    Requires equal ancilla couplings; agrees with tile_energy bit for bit
    because the grouping is a re-association of the same products.
    """
    if params.j_a1 != params.j_a2:
        raise ValueError(
            "grouped form needs j_a1 == j_a2; use tile_energy for distinct "
            "ancilla couplings"
        )
    j_a = params.j_a1
    pi = config.logical_parity
    a1, a2 = config.ancilla
    field = sum(jv * sv for jv, sv in zip(params.j, config.logical))
    return float(field - (a2 * j_a + a1 * j_a + params.c_cnst) * pi)


def _config_from_spins(spins: Sequence[int]) -> TileConfig:
    return TileConfig(logical=tuple(spins[:4]), ancilla=tuple(spins[4:6]))


def ground_set(
    params: TileParams,
    clamp_ancilla: Optional[tuple[int, int]] = None,
    tol: float = DEGENERACY_TOL,
) -> tuple[float, set[TileConfig]]:
    """Exhaustive minimum over the 64 tile assignments.

    With clamp_ancilla the two ancilla spins are pinned and only the 16
    logical assignments are enumerated.
    """
    if clamp_ancilla is not None:
        pinned = tuple(int(v) for v in clamp_ancilla)
        if len(pinned) != 2 or any(v not in (-1, 1) for v in pinned):
            raise ValueError("clamp_ancilla must be two spins valued -1 or +1")

        def energy(config: np.ndarray) -> float:
            return tile_energy(
                params, TileConfig(logical=tuple(config), ancilla=pinned)
            )

        e_min, raw = enumerate_ground_states(energy, 4, tol=tol)
        return e_min, {TileConfig(logical=s, ancilla=pinned) for s in raw}

    def energy(config: np.ndarray) -> float:
        return tile_energy(params, _config_from_spins(config))

    e_min, raw = enumerate_ground_states(energy, 6, tol=tol)
    return e_min, {_config_from_spins(s) for s in raw}


@dataclass(frozen=True)
class ParityCheck:
    """Outcome of the ground-sector parity audit."""

    valid: bool
    violations: tuple[TileConfig, ...]

    def __bool__(self) -> bool:
        return self.valid


def lhz_parity_valid(params: TileParams, tol: float = DEGENERACY_TOL) -> ParityCheck:
    """Do all ground assignments have even logical parity?"""
    _, ground = ground_set(params, tol=tol)
    bad = tuple(
        sorted((g for g in ground if g.logical_parity != 1), key=lambda g: g.label)
    )
    return ParityCheck(valid=len(bad) == 0, violations=bad)


def penalty_negative_in_ground(params: TileParams, tol: float = DEGENERACY_TOL) -> bool:
    """True when the four-body contribution is negative in every ground
    assignment, the regime the offset C_cnst is meant to enforce."""
    _, ground = ground_set(params, tol=tol)
    for g in ground:
        a1, a2 = g.ancilla
        term = -(params.j_a1 * a1 + params.j_a2 * a2 + params.c_cnst) * g.logical_parity
        if term >= 0:
            return False
    return True
