#
# tbgroup: groups generated by the round functions of translation based ciphers
# Copyright (C) 2026  The tbgroup authors
# SPDX-License-Identifier: GPL-3.0-or-later
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
#
"""Mixing layers: walls of a brick partition, proper and strongly
proper layers."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from tbgroup import debug
from tbgroup.common import (
    DimensionMismatch,
    InputError,
    PropertyCheck,
    ResourceCapExceeded,
)
from tbgroup.gf2 import Gf2Matrix, Gf2Subspace, popcount, subspace_image

# Largest brick count for wall enumeration (2^n - 2 walls)
MAX_BRICKS = 24


@dataclass(frozen=True)
class BrickPartition:
    """The split of (F_2)^d into n bricks of m consecutive coordinates;
    brick i (from 1) holds coordinates (i - 1)m, ..., im - 1."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise InputError(
                f"bricks of width {self.m} and count {self.n} "
                "must both exceed 1"
            )

    @property
    def d(self):
        """Dimension of the full state"""
        return self.m * self.n

    def brick_mask(self, i):
        """Return the coordinate mask of the brick with 0-based index i."""
        return ((1 << self.m) - 1) << (i * self.m)

    def coordinates(self, brick_mask):
        """Return the coordinates of the bricks selected by brick_mask."""
        return [
            c for c in range(self.d) if (brick_mask >> (c // self.m)) & 1
        ]


@dataclass(frozen=True)
class Wall:
    """A sum of the brick subspaces selected by a nonempty proper
    subset of the bricks."""

    partition: BrickPartition
    brick_mask: int

    def __post_init__(self):
        full = (1 << self.partition.n) - 1
        if not 0 < self.brick_mask < full:
            raise ValueError(f"brick set {self.brick_mask:b} is not a wall")

    @property
    def index_set(self):
        """Indices (from 1) of the bricks making up the wall"""
        return frozenset(
            i + 1
            for i in range(self.partition.n)
            if (self.brick_mask >> i) & 1
        )

    @cached_property
    def as_subspace(self):
        """The wall as a coordinate subspace of (F_2)^d"""
        return Gf2Subspace.coordinate(
            self.partition.d, self.partition.coordinates(self.brick_mask)
        )

    def __str__(self):
        return "+".join(f"V_{i}" for i in sorted(self.index_set))


def linear_parity(matrix):
    """Return 0 or 1 for the parity of the permutation of (F_2)^d
    induced by an invertible d x d matrix, by counting the elementary
    operations that reduce it to the identity; each moves 2^(d-1)
    points in 2^(d-2) transpositions."""
    d = matrix.nrows
    if d < 2:
        return 0
    work = list(matrix.rows)
    operations = 0
    for col in range(d):
        pivot = next((r for r in range(col, d) if (work[r] >> col) & 1), None)
        if pivot is None:
            raise InputError("the matrix is singular")
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            operations += 1
        for r in range(d):
            if r != col and (work[r] >> col) & 1:
                work[r] ^= work[col]
                operations += 1
    return (operations << (d - 2)) & 1


@dataclass(frozen=True)
class LinearLayer:
    """An invertible linear map of (F_2)^d acting on row vectors,
    optionally remembered as a permutation of the coordinates."""

    matrix: Gf2Matrix
    bit_permutation: tuple = None

    def __post_init__(self):
        if not self.matrix.is_invertible():
            raise InputError("the mixing layer matrix is singular")

    @classmethod
    def from_bit_permutation(cls, images, msb0=False):
        """
        Return the layer moving coordinate i to coordinate images[i].

        :param images: The coordinate images.
        :type images: list(int)

        :param msb0: Number coordinates from the most significant bit
            of the state integer.
        :type msb0: bool, optional
        """
        images = [int(i) for i in images]
        d = len(images)
        if msb0:
            converted = [0] * d
            for i, target in enumerate(images):
                if not 0 <= target < d:
                    raise InputError(f"coordinate image {target} is out of range")
                converted[d - 1 - i] = d - 1 - target
            images = converted
        return cls(Gf2Matrix.permutation(images), tuple(images))

    @classmethod
    def identity(cls, d):
        """Return the identity layer."""
        return cls.from_bit_permutation(range(d))

    @classmethod
    def block_rotation(cls, m, n):
        """Return the layer sending brick i to brick i + 1 (mod n)."""
        d = m * n
        return cls.from_bit_permutation([(i + m) % d for i in range(d)])

    @classmethod
    def brick_swap(cls, m):
        """Return the layer exchanging the two bricks of a 2m-bit state."""
        return cls.block_rotation(m, 2)

    @classmethod
    def random_invertible(cls, d, rng):
        """
        Return a uniformly random invertible layer.

        :param d: The dimension.
        :type d: int

        :param rng: The random number generator.
        :type rng: numpy.random.Generator
        """
        mask = (1 << d) - 1
        while True:
            rows = tuple(
                int.from_bytes(rng.bytes(8), "little") & mask
                for _ in range(d)
            )
            matrix = Gf2Matrix(d, d, rows)
            if matrix.is_invertible():
                return cls(matrix)

    @property
    def d(self):
        """Dimension of the state"""
        return self.matrix.nrows

    def apply(self, x):
        """Return the image of a packed state."""
        return self.matrix.apply(x)

    def apply_all(self, points):
        """Return the images of a numpy array of packed states."""
        if self.bit_permutation is not None and self.d <= 62:
            points = np.asarray(points, dtype=np.int64)
            out = np.zeros_like(points)
            for i, target in enumerate(self.bit_permutation):
                out |= ((points >> i) & 1) << target
            return out
        return self.matrix.apply_all(points)

    def inverse(self):
        """Return the inverse layer."""
        if self.bit_permutation is not None:
            images = [0] * self.d
            for i, target in enumerate(self.bit_permutation):
                images[target] = i
            return LinearLayer.from_bit_permutation(images)
        return LinearLayer(self.matrix.inverse())

    def parity(self):
        """Return 0 or 1 for the parity of the induced permutation."""
        return linear_parity(self.matrix)


def _check_dimensions(layer, partition):
    if layer.d != partition.d:
        raise DimensionMismatch(
            f"a layer of dimension {layer.d} does not fit "
            f"{partition.n} bricks of width {partition.m}"
        )
    if partition.n > MAX_BRICKS:
        raise ResourceCapExceeded("brick count", partition.n, MAX_BRICKS)


def walls(partition):
    """
    Return all walls of a brick partition.

    :param partition: The brick partition.
    :type partition: BrickPartition

    :return: The 2^n - 2 walls, ordered by their brick sets.
    :rtype: list(Wall)

    :raises ResourceCapExceeded: If n exceeds MAX_BRICKS.
    """
    if partition.n > MAX_BRICKS:
        raise ResourceCapExceeded("brick count", partition.n, MAX_BRICKS)
    return [Wall(partition, mask) for mask in range(1, (1 << partition.n) - 1)]


def brick_touch_masks(layer, partition):
    """Return for each brick the mask of the bricks met by the images
    of its coordinates."""
    masks = []
    for i in range(partition.n):
        touched = 0
        for c in range(i * partition.m, (i + 1) * partition.m):
            row = layer.matrix.rows[c]
            for j in range(partition.n):
                if row & partition.brick_mask(j):
                    touched |= 1 << j
        masks.append(touched)
    return masks


def touched_bricks(layer, partition):
    """Return a numpy array giving for every brick set (as a mask) the
    smallest brick set whose wall contains the image of its wall."""
    _check_dimensions(layer, partition)
    touched = np.zeros(1 << partition.n, dtype=np.int64)
    for i, mask in enumerate(brick_touch_masks(layer, partition)):
        low = 1 << i
        touched[low : 2 * low] = touched[:low] | mask
    return touched


def _first_wall(violations):
    """Return the smallest brick set flagged in violations, skipping
    the empty and the full set."""
    violations[0] = False
    violations[-1] = False
    found = np.flatnonzero(violations)
    return int(found[0]) if found.size else None


def is_proper(layer, partition):
    """
    Check that the layer maps no wall onto itself.

    :param layer: The mixing layer.
    :type layer: LinearLayer

    :param partition: The brick partition.
    :type partition: BrickPartition

    :return: The outcome with an invariant wall as witness.
    :rtype: PropertyCheck
    """
    touched = touched_bricks(layer, partition)
    invariant = touched == np.arange(touched.size)
    mask = _first_wall(invariant)
    if mask is None:
        return PropertyCheck(True)
    wall = Wall(partition, mask)
    debug.log("witness", f"invariant wall {wall}")
    return PropertyCheck(False, wall)


def is_strongly_proper(layer, partition):
    """
    Check that the layer maps no wall onto a wall.

    :param layer: The mixing layer.
    :type layer: LinearLayer

    :param partition: The brick partition.
    :type partition: BrickPartition

    :return: The outcome with a pair (W, W') with W mapped onto W'
        as witness.
    :rtype: PropertyCheck
    """
    touched = touched_bricks(layer, partition)
    sets = np.arange(touched.size)
    wall_to_wall = popcount(touched) == popcount(sets)
    mask = _first_wall(wall_to_wall)
    if mask is None:
        return PropertyCheck(True)
    pair = (Wall(partition, mask), Wall(partition, int(touched[mask])))
    debug.log("witness", f"wall {pair[0]} is mapped onto {pair[1]}")
    return PropertyCheck(False, pair)


def wall_image(wall, layer):
    """Return the image of a wall under the layer as a subspace."""
    return subspace_image(wall.as_subspace, layer.matrix)


def as_wall(subspace, partition):
    """Return the wall equal to the subspace, or None if it is not a
    wall."""
    full = (1 << partition.n) - 1
    for mask in range(1, full):
        if subspace.dim != partition.m * bin(mask).count("1"):
            continue
        wall = Wall(partition, mask)
        if wall.as_subspace == subspace:
            return wall
    return None
