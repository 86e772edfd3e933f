"""Classical spin groundwork: Ising and QUBO energies, parity, exhaustive
ground-state search, and the problem file reader.

Conventions used everywhere in the package:

* a bit b in {0, 1} maps to a spin sigma = 2*b - 1, so bit 1 is spin +1;
* state labels are bit strings with the first spin leftmost (most
  significant);
* Ising energy is E = -sum_i h_i sigma_i - sum_{i<j} J_ij sigma_i sigma_j,
  each unordered pair counted once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import CapacityError, ParseError

ENUMERATION_LIMIT = 24
DEGENERACY_TOL = 1e-9


def as_spins(config: Sequence[int] | np.ndarray) -> np.ndarray:
    """Validate a +-1 configuration and return it as an int8 array."""
    arr = np.asarray(config)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("spin configuration must be a non-empty 1-D sequence")
    if not np.all((arr == 1) | (arr == -1)):
        raise ValueError("spin values must be exactly -1 or +1")
    return arr.astype(np.int8)


def bits_to_spins(bits: Sequence[int] | np.ndarray) -> np.ndarray:
    arr = np.asarray(bits)
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError("bit values must be 0 or 1")
    return (2 * arr - 1).astype(np.int8)


def spins_to_bits(spins: Sequence[int] | np.ndarray) -> np.ndarray:
    return ((as_spins(spins) + 1) // 2).astype(np.int8)


def spin_label(config: Sequence[int] | np.ndarray) -> str:
    """Bit-string label of a configuration, first spin leftmost."""
    return "".join(str(b) for b in spins_to_bits(config))


def label_to_spins(label: str) -> np.ndarray:
    if not label or any(ch not in "01" for ch in label):
        raise ValueError(f"state label must be a non-empty 0/1 string, got {label!r}")
    return bits_to_spins([int(ch) for ch in label])


def all_configs(n: int) -> np.ndarray:
    """All 2**n spin configurations, row r labelled by r's binary digits
    (first spin = most significant bit)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ENUMERATION_LIMIT:
        raise CapacityError(
            f"n={n} exceeds the exhaustive enumeration bound of {ENUMERATION_LIMIT}"
        )
    idx = np.arange(2**n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (idx[:, None] >> shifts[None, :]) & 1
    return (2 * bits - 1).astype(np.int8)


@dataclass(frozen=True)
class IsingProblem:
    """Fields h and symmetric zero-diagonal couplings J over n spins."""

    h: np.ndarray
    j: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=float)
        j = np.asarray(self.j, dtype=float)
        if h.ndim != 1:
            raise ValueError("h must be a 1-D array")
        n = h.size
        if j.shape != (n, n):
            raise ValueError(f"J must have shape ({n}, {n}), got {j.shape}")
        if not np.array_equal(j, j.T):
            raise ValueError("J must be symmetric")
        if np.any(np.diag(j) != 0.0):
            raise ValueError("J must have a zero diagonal")
        h.setflags(write=False)
        j.setflags(write=False)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "j", j)

    @property
    def n(self) -> int:
        return self.h.size


@dataclass(frozen=True)
class QuboProblem:
    """Symmetric QUBO matrix Q; cost is x^T Q x over bit vectors x."""

    q: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ValueError("Q must be a square matrix")
        if not np.array_equal(q, q.T):
            raise ValueError("Q must be symmetric")
        q.setflags(write=False)
        object.__setattr__(self, "q", q)

    @property
    def n(self) -> int:
        return self.q.shape[0]


def ising_energy(problem: IsingProblem, config: Sequence[int] | np.ndarray) -> float:
    sigma = as_spins(config).astype(float)
    if sigma.size != problem.n:
        raise ValueError(
            f"configuration has {sigma.size} spins, problem has {problem.n}"
        )
    # zero diagonal makes sigma.J.sigma twice the pair sum
    return float(-problem.h @ sigma - 0.5 * sigma @ problem.j @ sigma)


def qubo_energy(problem: QuboProblem, bits: Sequence[int] | np.ndarray) -> float:
    x = np.asarray(bits, dtype=float)
    if x.size != problem.n:
        raise ValueError(f"bit vector has {x.size} entries, problem has {problem.n}")
    if not np.all((x == 0.0) | (x == 1.0)):
        raise ValueError("bit values must be 0 or 1")
    return float(x @ problem.q @ x)


def qubo_to_ising(problem: QuboProblem) -> tuple[IsingProblem, float]:
    """Rewrite x^T Q x over bits as an Ising energy plus a constant offset.

    Uses x = (1 + sigma) / 2. For every configuration,
    qubo_energy(Q, x) == ising_energy(h, J, sigma) + offset exactly up to
    float rounding.
    """
    q = problem.q
    h = -0.5 * q.sum(axis=1)
    j = -0.5 * q
    np.fill_diagonal(j, 0.0)
    trace = float(np.trace(q))
    off_diag_sum = float(q.sum() - trace)
    offset = 0.5 * trace + 0.25 * off_diag_sum
    return IsingProblem(h=h, j=j), offset


def parity(config: Sequence[int] | np.ndarray) -> int:
    """Product of all spins: +1 for an even number of -1 entries."""
    sigma = as_spins(config)
    return int(np.prod(sigma, dtype=np.int64))


def enumerate_ground_states(
    energy_fn: Callable[[np.ndarray], float],
    n: int,
    tol: float = DEGENERACY_TOL,
    chunk_size: int = 1 << 16,
    vectorized: bool = False,
) -> tuple[float, set[tuple[int, ...]]]:
    """Exhaustive minimum of energy_fn over all 2**n configurations.

    Returns the minimum energy and the set of configurations within tol
    (absolute) of it. Enumeration is chunked; the result is independent of
    chunk_size. With vectorized=True, energy_fn must accept an (m, n) array
    and return m energies.

    Raises CapacityError above n = 24 (2**24 is about 17M evaluations).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > ENUMERATION_LIMIT:
        raise CapacityError(
            f"n={n} exceeds the exhaustive enumeration bound of {ENUMERATION_LIMIT}"
        )
    if tol < 0:
        raise ValueError("tol must be >= 0")
    total = 1 << n
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    best = np.inf
    # (energy, index) candidates within tol of the running minimum
    candidates: list[tuple[float, int]] = []
    for start in range(0, total, chunk_size):
        idx = np.arange(start, min(start + chunk_size, total), dtype=np.int64)
        configs = (2 * ((idx[:, None] >> shifts[None, :]) & 1) - 1).astype(np.int8)
        if vectorized:
            energies = np.asarray(energy_fn(configs), dtype=float)
        else:
            energies = np.array([energy_fn(c) for c in configs], dtype=float)
        chunk_min = float(energies.min())
        if chunk_min < best:
            best = chunk_min
            candidates = [(e, i) for e, i in candidates if e <= best + tol]
        keep = np.nonzero(energies <= best + tol)[0]
        candidates.extend((float(energies[k]), int(idx[k])) for k in keep)
    ground = set()
    for e, i in candidates:
        if e <= best + tol:
            bits = (i >> shifts) & 1
            ground.add(tuple(int(2 * b - 1) for b in bits))
    return best, ground


def _parse_field(data: dict, key: str, path: str):
    if key not in data:
        raise ParseError(f"{path}: missing required field '{key}'")
    return data[key]


def load_ising_problem(path: str) -> IsingProblem:
    """Read a problem file: JSON with keys n, h, and J.

    J is either a flat row-major list of n*n numbers or a list of sparse
    [i, j, value] triples with 0-based indices. Malformed input raises
    ParseError naming the line or field.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be an object")

    n = _parse_field(data, "n", path)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"{path}: field 'n': expected a positive integer, got {n!r}")

    h_raw = _parse_field(data, "h", path)
    if not isinstance(h_raw, list) or len(h_raw) != n:
        raise ParseError(f"{path}: field 'h': expected a list of {n} numbers")
    try:
        h = np.array(h_raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: field 'h': entries must be numbers") from exc

    j_raw = _parse_field(data, "J", path)
    if not isinstance(j_raw, list):
        raise ParseError(f"{path}: field 'J': expected a list")
    j = np.zeros((n, n))
    if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in j_raw):
        if len(j_raw) != n * n:
            raise ParseError(
                f"{path}: field 'J': flat row-major form needs {n * n} numbers, "
                f"got {len(j_raw)}"
            )
        j = np.array(j_raw, dtype=float).reshape(n, n)
        if not np.array_equal(j, j.T):
            raise ParseError(f"{path}: field 'J': matrix must be symmetric")
        if np.any(np.diag(j) != 0.0):
            raise ParseError(f"{path}: field 'J': diagonal must be zero")
    else:
        seen: set[tuple[int, int]] = set()
        for pos, triple in enumerate(j_raw):
            if (
                not isinstance(triple, list)
                or len(triple) != 3
                or not all(
                    isinstance(v, (int, float)) and not isinstance(v, bool)
                    for v in triple
                )
            ):
                raise ParseError(
                    f"{path}: field 'J' entry {pos}: expected [i, j, value]"
                )
            a, b, val = triple
            if a != int(a) or b != int(b):
                raise ParseError(
                    f"{path}: field 'J' entry {pos}: indices must be integers"
                )
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise ParseError(
                    f"{path}: field 'J' entry {pos}: index out of range for n={n}"
                )
            if a == b:
                raise ParseError(
                    f"{path}: field 'J' entry {pos}: diagonal coupling not allowed"
                )
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ParseError(
                    f"{path}: field 'J' entry {pos}: duplicate pair {key}"
                )
            seen.add(key)
            j[a, b] = float(val)
            j[b, a] = float(val)
    return IsingProblem(h=h, j=j)
