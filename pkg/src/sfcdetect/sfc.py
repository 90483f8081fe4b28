"""Quantization grids and Morton / Hilbert space-filling-curve codecs.

A :class:`GridSpec` discretizes an n-dimensional box of real values into
``2**bits_per_dim`` cells per dimension.  Cell coordinates are mapped
bijectively onto a single unsigned integer either by bit interleaving
(Morton, Z-order) or by the Gray-code transform of the Hilbert curve.

Conventions locked here and by the test suite:

* Morton: bit ``j`` of dimension ``d`` lands at code bit ``j*n + d``,
  i.e. dimension 0 occupies the least-significant bit of each group.
* Hilbert: the order-1 curve in 2D visits (0,0), (0,1), (1,1), (1,0) for
  codes 0..3; higher orders and dimensions follow the Gray-code
  bit-transpose transform, so consecutive codes are always L1-adjacent
  cells.

All codecs accept single cells (tuples) or sample batches (``(N, n)``
integer arrays).  Everything is pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

MAX_BITS_PER_DIM = 21
MAX_CODE_BITS = 63


class CurveKind(str, Enum):
    MORTON = "morton"
    HILBERT = "hilbert"


# One unsigned integer per dimension, each in [0, 2**bits_per_dim).
CellCoords = tuple[int, ...]


@dataclass(frozen=True)
class GridSpec:
    """Quantization grid: dimension count, bit depth and per-dim value ranges.

    ``ranges[d]`` is the ``(min, max)`` of dimension ``d`` in physical
    units.  ``dims * bits_per_dim`` must stay below 64 so every code fits
    a single machine word.
    """

    dims: int
    bits_per_dim: int
    ranges: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if self.dims < 1:
            raise ValueError(f"grid needs at least one dimension, got {self.dims}")
        if not 1 <= self.bits_per_dim <= MAX_BITS_PER_DIM:
            raise ValueError(
                f"bits_per_dim must be in [1, {MAX_BITS_PER_DIM}], got {self.bits_per_dim}"
            )
        if self.dims * self.bits_per_dim > MAX_CODE_BITS:
            raise ValueError(
                f"dims*bits_per_dim = {self.dims * self.bits_per_dim} exceeds "
                f"{MAX_CODE_BITS} (code must fit one machine word)"
            )
        ranges = tuple((float(lo), float(hi)) for lo, hi in self.ranges)
        if len(ranges) != self.dims:
            raise ValueError(f"expected {self.dims} ranges, got {len(ranges)}")
        for d, (lo, hi) in enumerate(ranges):
            if not (np.isfinite(lo) and np.isfinite(hi)) or not lo < hi:
                raise ValueError(f"range of dimension {d} must satisfy min < max, got ({lo}, {hi})")
        object.__setattr__(self, "ranges", ranges)

    @property
    def cells_per_dim(self) -> int:
        return 1 << self.bits_per_dim

    @property
    def code_count(self) -> int:
        return 1 << (self.dims * self.bits_per_dim)


@dataclass(frozen=True)
class SfcCode:
    """A single curve index: value plus the kind and grid it belongs to.

    Codes from different grids or curve kinds must never be compared;
    ordering is only defined against the same (kind, grid) pair.
    """

    value: int
    kind: CurveKind
    grid: GridSpec

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.grid.code_count:
            raise ValueError(
                f"code value {self.value} outside [0, {self.grid.code_count}) for this grid"
            )


# ---------------------------------------------------------------------------
# quantization


def quantize_batch(values: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Map an ``(N, dims)`` array of real samples to integer cell coords.

    ``coord = clamp(floor((v - min) / (max - min) * 2**b), 0, 2**b - 1)``;
    out-of-range values clamp to the boundary cells so sensor overshoot
    never breaks a stream.  Non-finite input raises, flagging a corrupt
    sample.
    """
    vals = np.asarray(values, dtype=np.float64)
    if vals.ndim == 1:
        vals = vals[np.newaxis, :]
    if vals.shape[1] != grid.dims:
        raise ValueError(f"expected {grid.dims}-dimensional samples, got shape {vals.shape}")
    if not np.isfinite(vals).all():
        raise ValueError("non-finite sample value (corrupt sample)")
    lo = np.array([r[0] for r in grid.ranges])
    hi = np.array([r[1] for r in grid.ranges])
    size = grid.cells_per_dim
    scaled = np.floor((vals - lo) / (hi - lo) * size)
    return np.clip(scaled, 0, size - 1).astype(np.int64)


def quantize(values: Sequence[float], grid: GridSpec) -> CellCoords:
    """Quantize one real tuple to cell coordinates (see :func:`quantize_batch`)."""
    if len(values) != grid.dims:
        raise ValueError(f"expected {grid.dims} values, got {len(values)}")
    return tuple(int(c) for c in quantize_batch(np.asarray(values, dtype=np.float64), grid)[0])


def cell_center(cells: CellCoords, grid: GridSpec) -> tuple[float, ...]:
    """Physical coordinates of a cell's center point."""
    size = grid.cells_per_dim
    return tuple(
        lo + (c + 0.5) * (hi - lo) / size for c, (lo, hi) in zip(cells, grid.ranges)
    )


def _check_cells(cells: np.ndarray, grid: GridSpec) -> np.ndarray:
    arr = np.asarray(cells, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.shape[1] != grid.dims:
        raise ValueError(f"expected cells of dimension {grid.dims}, got shape {arr.shape}")
    if arr.min(initial=0) < 0 or arr.max(initial=0) >= grid.cells_per_dim:
        raise ValueError(f"cell coordinate outside [0, {grid.cells_per_dim})")
    return arr


# ---------------------------------------------------------------------------
# Morton (Z-order)


def morton_encode_batch(cells: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Bit-interleave ``(N, dims)`` cell coords into ``(N,)`` Morton codes."""
    arr = _check_cells(cells, grid)
    n, b = grid.dims, grid.bits_per_dim
    codes = np.zeros(arr.shape[0], dtype=np.int64)
    for j in range(b):
        for d in range(n):
            codes |= ((arr[:, d] >> j) & 1) << (j * n + d)
    return codes


def morton_decode_batch(codes: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Inverse of :func:`morton_encode_batch`."""
    vals = _check_codes(codes, grid)
    n, b = grid.dims, grid.bits_per_dim
    cells = np.zeros((vals.shape[0], n), dtype=np.int64)
    for j in range(b):
        for d in range(n):
            cells[:, d] |= ((vals >> (j * n + d)) & 1) << j
    return cells


def morton_encode(cells: CellCoords, grid: GridSpec) -> SfcCode:
    value = int(morton_encode_batch(np.asarray(cells, dtype=np.int64), grid)[0])
    return SfcCode(value, CurveKind.MORTON, grid)


def morton_decode(code: SfcCode) -> CellCoords:
    if code.kind is not CurveKind.MORTON:
        raise ValueError(f"expected a Morton code, got {code.kind.value}")
    return tuple(int(c) for c in morton_decode_batch(np.asarray([code.value]), code.grid)[0])


# ---------------------------------------------------------------------------
# Hilbert
#
# Gray-code bit-transpose transform: the code is carried in "transposed"
# form, one lane per dimension where lane i holds code bits i, i+n,
# i+2n, ... (most-significant chunk first).  Encoding folds each cell's
# coordinate bits top-down through Gray-code rotations; decoding replays
# them bottom-up.  Lane 0 corresponds to dimension 0, which pins the
# order-1 orientation asserted in the module docstring.


def _transpose_to_codes(lanes: np.ndarray, bits: int) -> np.ndarray:
    n = lanes.shape[0]
    codes = np.zeros(lanes.shape[1], dtype=np.int64)
    for j in range(bits - 1, -1, -1):
        for i in range(n):
            codes = (codes << 1) | ((lanes[i] >> j) & 1)
    return codes


def _codes_to_transpose(codes: np.ndarray, n: int, bits: int) -> np.ndarray:
    lanes = np.zeros((n, codes.shape[0]), dtype=np.int64)
    for j in range(bits - 1, -1, -1):
        for i in range(n):
            shift = j * n + (n - 1 - i)
            lanes[i] |= ((codes >> shift) & 1) << j
    return lanes


def hilbert_encode_batch(cells: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Map ``(N, dims)`` cell coords to ``(N,)`` Hilbert codes."""
    arr = _check_cells(cells, grid)
    n, b = grid.dims, grid.bits_per_dim
    x = arr.T.copy()
    m = 1 << (b - 1)
    q = m
    while q > 1:
        p = q - 1
        for i in range(n):
            high = (x[i] & q) != 0
            t = np.where(high, 0, (x[0] ^ x[i]) & p)
            x0 = np.where(high, x[0] ^ p, x[0] ^ t)
            x[i] ^= t
            x[0] = x0
        q >>= 1
    # Gray encode
    for i in range(1, n):
        x[i] ^= x[i - 1]
    t = np.zeros_like(x[0])
    q = m
    while q > 1:
        t = np.where((x[n - 1] & q) != 0, t ^ (q - 1), t)
        q >>= 1
    for i in range(n):
        x[i] ^= t
    return _transpose_to_codes(x, b)


def hilbert_decode_batch(codes: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Inverse of :func:`hilbert_encode_batch`."""
    vals = _check_codes(codes, grid)
    n, b = grid.dims, grid.bits_per_dim
    x = _codes_to_transpose(vals, n, b)
    # Gray decode
    t = x[n - 1] >> 1
    for i in range(n - 1, 0, -1):
        x[i] ^= x[i - 1]
    x[0] ^= t
    top = 2 << (b - 1)
    q = 2
    while q != top:
        p = q - 1
        for i in range(n - 1, -1, -1):
            high = (x[i] & q) != 0
            t = np.where(high, 0, (x[0] ^ x[i]) & p)
            x0 = np.where(high, x[0] ^ p, x[0] ^ t)
            x[i] ^= t
            x[0] = x0
        q <<= 1
    return x.T.copy()


def hilbert_encode(cells: CellCoords, grid: GridSpec) -> SfcCode:
    value = int(hilbert_encode_batch(np.asarray(cells, dtype=np.int64), grid)[0])
    return SfcCode(value, CurveKind.HILBERT, grid)


def hilbert_decode(code: SfcCode) -> CellCoords:
    if code.kind is not CurveKind.HILBERT:
        raise ValueError(f"expected a Hilbert code, got {code.kind.value}")
    return tuple(int(c) for c in hilbert_decode_batch(np.asarray([code.value]), code.grid)[0])


# ---------------------------------------------------------------------------
# kind-dispatching helpers


def encode_batch(cells: np.ndarray, grid: GridSpec, kind: CurveKind) -> np.ndarray:
    if kind is CurveKind.MORTON:
        return morton_encode_batch(cells, grid)
    return hilbert_encode_batch(cells, grid)


def decode_batch(codes: np.ndarray, grid: GridSpec, kind: CurveKind) -> np.ndarray:
    if kind is CurveKind.MORTON:
        return morton_decode_batch(codes, grid)
    return hilbert_decode_batch(codes, grid)


def encode_points(values: np.ndarray, grid: GridSpec, kind: CurveKind) -> np.ndarray:
    """Quantize and encode ``(N, dims)`` real samples in one step."""
    return encode_batch(quantize_batch(values, grid), grid, kind)


def _check_codes(codes: np.ndarray, grid: GridSpec) -> np.ndarray:
    vals = np.asarray(codes, dtype=np.int64)
    if vals.ndim == 0:
        vals = vals[np.newaxis]
    if vals.size and (vals.min() < 0 or vals.max() >= grid.code_count):
        raise ValueError(f"code value outside [0, {grid.code_count})")
    return vals
