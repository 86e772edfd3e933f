"""Exhaustive checks of the six-spin tile energy model."""

import itertools

import numpy as np
import pytest

from jpotile.tile import (
    TileConfig,
    TileParams,
    ground_set,
    lhz_parity_valid,
    penalty_negative_in_ground,
    tile_energy,
    tile_energy_effective,
    uniform_tile_params,
)


def all_tile_configs():
    for spins in itertools.product((-1, 1), repeat=6):
        yield TileConfig(logical=spins[:4], ancilla=spins[4:])


def random_params(rng, zero_field=False, dyadic=False):
    if dyadic:
        vals = rng.integers(-8, 9, size=7) * 0.25
    else:
        vals = rng.normal(size=7)
    j = (0.0,) * 4 if zero_field else tuple(vals[:4])
    return TileParams(j=j, j_a1=vals[4], j_a2=vals[5], c_cnst=vals[6])


@pytest.mark.parametrize("j_b, j_c", [(1.0, 1.0), (0.5, 2.0), (0.25, 0.75)])
def test_consistent_reference_rows(j_b, j_c):
    params = uniform_tile_params(j_b, j_c)
    rows = [
        TileConfig(logical=(1, 1, 1, 1), ancilla=(1, 1)),
        TileConfig(logical=(1, 1, -1, -1), ancilla=(1, -1)),
        TileConfig(logical=(-1, -1, -1, -1), ancilla=(-1, -1)),
    ]
    for config in rows:
        assert tile_energy(params, config) == -j_c


def test_uniform_params_doubles_ancilla_weight():
    params = uniform_tile_params(1.5, 0.25)
    assert params.j == (1.5, 1.5, 1.5, 1.5)
    assert params.j_a1 == 3.0
    assert params.j_a2 == 3.0
    assert params.c_cnst == 0.25


def test_config_properties_and_validation():
    config = TileConfig(logical=(1, -1, 1, -1), ancilla=(1, 1))
    assert config.spins == (1, -1, 1, -1, 1, 1)
    assert config.logical_parity == 1
    assert config.label == "101011"
    assert TileConfig(logical=(1, 1, 1, -1), ancilla=(-1, 1)).logical_parity == -1

    with pytest.raises(ValueError):
        TileConfig(logical=(1, 1, 1), ancilla=(1, 1))
    with pytest.raises(ValueError):
        TileConfig(logical=(1, 1, 1, 0), ancilla=(1, 1))
    with pytest.raises(ValueError):
        TileConfig(logical=(1, 1, 1, 1), ancilla=(1,))
    with pytest.raises(ValueError):
        TileParams(j=(1.0, 2.0, 3.0), j_a1=0.0, j_a2=0.0, c_cnst=0.0)


def test_zero_params_zero_energy_everywhere():
    params = TileParams(j=(0.0,) * 4, j_a1=0.0, j_a2=0.0, c_cnst=0.0)
    for config in all_tile_configs():
        assert tile_energy(params, config) == 0.0


def test_effective_form_matches_bit_for_bit():
    rng = np.random.default_rng(23)
    for _ in range(20):
        vals = rng.normal(size=6)
        params = TileParams(
            j=tuple(vals[:4]), j_a1=vals[4], j_a2=vals[4], c_cnst=vals[5]
        )
        for config in all_tile_configs():
            assert tile_energy_effective(params, config) == tile_energy(
                params, config
            )

    uneven = TileParams(j=(0.0,) * 4, j_a1=1.0, j_a2=2.0, c_cnst=0.0)
    with pytest.raises(ValueError):
        tile_energy_effective(uneven, TileConfig((1, 1, 1, 1), (1, 1)))


def test_effective_form_zero_field_values():
    params = TileParams(j=(0.0,) * 4, j_a1=1.25, j_a2=1.25, c_cnst=0.5)
    even = TileConfig(logical=(1, 1, -1, -1), ancilla=(1, 1))
    odd = TileConfig(logical=(1, 1, 1, -1), ancilla=(-1, -1))
    assert tile_energy_effective(params, even) == -3.0
    assert tile_energy_effective(params, odd) == -2.0


def test_ground_set_even_parity_oracle():
    e_min, ground = ground_set(TileParams((0.0,) * 4, 1.0, 1.0, 1.0))
    assert e_min == -3.0
    expected = {
        TileConfig(logical=s, ancilla=(1, 1))
        for s in itertools.product((-1, 1), repeat=4)
        if s[0] * s[1] * s[2] * s[3] == 1
    }
    assert len(expected) == 8
    assert ground == expected


def test_ground_set_decoupled_ancillas():
    e_min, ground = ground_set(TileParams((0.0,) * 4, 0.0, 0.0, 1.0))
    assert e_min == -1.0
    assert len(ground) == 32
    assert all(g.logical_parity == 1 for g in ground)
    assert {g.ancilla for g in ground} == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_ground_set_small_field_breaks_degeneracy():
    eps = 0.05
    e_min, ground = ground_set(TileParams((eps,) * 4, 1.0, 1.0, 1.0))
    assert e_min == pytest.approx(-3.0 - 4 * eps, rel=1e-12)
    assert ground == {TileConfig(logical=(-1, -1, -1, -1), ancilla=(1, 1))}


def test_ground_set_with_clamped_ancillas():
    params = TileParams((0.0,) * 4, 1.0, 1.0, 1.0)

    e_min, ground = ground_set(params, clamp_ancilla=(1, 1))
    assert e_min == -3.0
    assert all(g.logical_parity == 1 and g.ancilla == (1, 1) for g in ground)
    assert len(ground) == 8

    # pinning the ancillas the wrong way makes odd parity the cheap sector
    e_min, ground = ground_set(params, clamp_ancilla=(-1, -1))
    assert e_min == -1.0
    assert len(ground) == 8
    assert all(g.logical_parity == -1 and g.ancilla == (-1, -1) for g in ground)

    with pytest.raises(ValueError):
        ground_set(params, clamp_ancilla=(0, 1))
    with pytest.raises(ValueError):
        ground_set(params, clamp_ancilla=(1, 1, 1))


def test_zero_field_ground_floor_formula():
    rng = np.random.default_rng(31)
    for _ in range(15):
        j_a = float(rng.uniform(0.2, 3.0))
        c = float(rng.uniform(0.2, 3.0))
        e_min, ground = ground_set(TileParams((0.0,) * 4, j_a, j_a, c))
        assert e_min == -(2 * j_a + c)
        assert all(
            g.logical_parity == 1 and g.ancilla == (1, 1) for g in ground
        )
        assert len(ground) == 8


def test_parity_audit():
    good = lhz_parity_valid(TileParams((0.0,) * 4, 1.0, 1.0, 1.0))
    assert bool(good)
    assert good.violations == ()

    decoupled = lhz_parity_valid(TileParams((0.0,) * 4, 0.0, 0.0, 1.0))
    assert bool(decoupled)

    flipped = lhz_parity_valid(TileParams((0.0,) * 4, 1.0, 1.0, -1.0))
    assert not bool(flipped)
    assert len(flipped.violations) > 0
    assert all(v.logical_parity == -1 for v in flipped.violations)


def test_flip_all_logical_spins_zero_field_symmetry():
    rng = np.random.default_rng(37)
    for _ in range(25):
        params = random_params(rng, zero_field=True)
        for config in all_tile_configs():
            flipped = TileConfig(
                logical=tuple(-v for v in config.logical), ancilla=config.ancilla
            )
            assert tile_energy(params, flipped) == tile_energy(params, config)


def test_offset_shifts_energy_by_parity_exactly():
    # dyadic parameters keep every sum exact, so the shift is bitwise
    rng = np.random.default_rng(41)
    for _ in range(10):
        params = random_params(rng, dyadic=True)
        for delta in (0.5, 1.25):
            raised = TileParams(
                j=params.j,
                j_a1=params.j_a1,
                j_a2=params.j_a2,
                c_cnst=params.c_cnst + delta,
            )
            for config in all_tile_configs():
                pi = config.logical_parity
                assert tile_energy(raised, config) == (
                    tile_energy(params, config) - pi * delta
                )


def test_penalty_sign_predicate():
    assert penalty_negative_in_ground(TileParams((0.0,) * 4, 1.0, 1.0, 1.0))
    assert penalty_negative_in_ground(TileParams((0.0,) * 4, 0.0, 0.0, 1.0))
    assert not penalty_negative_in_ground(
        TileParams((1.0, -2.0, 0.5, 0.0), 0.0, 0.0, 0.0)
    )
