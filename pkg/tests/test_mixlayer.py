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
"""Mixing layer test"""

import unittest

import numpy as np

from .test_dir import add_src_dir, fixture
add_src_dir()

from tbgroup.common import DimensionMismatch, InputError
from tbgroup.gf2 import Gf2Matrix, Gf2Subspace
from tbgroup.ingest import read_layer
from tbgroup.mixlayer import (
    BrickPartition,
    LinearLayer,
    Wall,
    as_wall,
    is_proper,
    is_strongly_proper,
    linear_parity,
    touched_bricks,
    wall_image,
    walls,
)
from tbgroup.vboolfn import EVEN, ODD, SBox, permutation_parity


class TestPartition(unittest.TestCase):
    def test_masks(self):
        p = BrickPartition(3, 2)
        self.assertEqual(p.d, 6)
        self.assertEqual(p.brick_mask(1), 0b111000)
        self.assertEqual(p.coordinates(0b10), [3, 4, 5])

    def test_degenerate(self):
        with self.assertRaises(InputError):
            BrickPartition(1, 4)
        with self.assertRaises(InputError):
            BrickPartition(4, 1)


class TestWalls(unittest.TestCase):
    def test_count(self):
        self.assertEqual(len(walls(BrickPartition(2, 3))), 6)
        self.assertEqual(len(walls(BrickPartition(4, 16))), 65534)

    def test_wall(self):
        p = BrickPartition(2, 3)
        w = Wall(p, 0b101)
        self.assertEqual(w.index_set, frozenset({1, 3}))
        self.assertEqual(str(w), "V_1+V_3")
        self.assertEqual(w.as_subspace, Gf2Subspace.coordinate(6, [0, 1, 4, 5]))
        with self.assertRaises(ValueError):
            Wall(p, 0b111)
        with self.assertRaises(ValueError):
            Wall(p, 0)

    def test_as_wall(self):
        p = BrickPartition(4, 2)
        self.assertEqual(as_wall(Gf2Subspace.coordinate(8, [4, 5, 6, 7]), p), Wall(p, 2))
        self.assertIsNone(as_wall(Gf2Subspace.coordinate(8, [0, 1, 2, 4]), p))

    def test_wall_image(self):
        p = BrickPartition(4, 2)
        image = wall_image(Wall(p, 1), LinearLayer.brick_swap(4))
        self.assertEqual(image, Wall(p, 2).as_subspace)


class TestLayer(unittest.TestCase):
    def test_bit_permutation(self):
        layer = LinearLayer.from_bit_permutation([2, 0, 1])
        self.assertEqual(layer.apply(0b001), 0b100)
        self.assertEqual(layer.bit_permutation, (2, 0, 1))

    def test_msb0(self):
        layer = LinearLayer.from_bit_permutation([1, 2, 3, 0], msb0=True)
        self.assertEqual(layer.bit_permutation, (3, 0, 1, 2))
        self.assertEqual(layer.apply(0b0001), 0b1000)

    def test_apply_all(self):
        rng = np.random.default_rng(3)
        points = np.arange(256)
        for layer in (
            LinearLayer.random_invertible(8, rng),
            LinearLayer.block_rotation(2, 4),
        ):
            self.assertEqual(
                list(layer.apply_all(points)), [layer.apply(int(x)) for x in points]
            )

    def test_inverse(self):
        rng = np.random.default_rng(5)
        for layer in (
            LinearLayer.random_invertible(6, rng),
            LinearLayer.block_rotation(3, 2),
        ):
            inverse = layer.inverse()
            self.assertTrue(all(inverse.apply(layer.apply(x)) == x for x in range(64)))

    def test_singular(self):
        with self.assertRaises(InputError):
            LinearLayer(Gf2Matrix.from_bit_rows(["11", "11"]))

    def test_rotation(self):
        layer = LinearLayer.block_rotation(4, 4)
        self.assertEqual(layer.apply(0x000F), 0x00F0)
        self.assertEqual(layer.apply(0xF000), 0x000F)


class TestParity(unittest.TestCase):
    def test_against_cycles(self):
        rng = np.random.default_rng(11)
        for d in range(2, 9):
            for _ in range(5):
                layer = LinearLayer.random_invertible(d, rng)
                images = layer.apply_all(np.arange(1 << d))
                expected = permutation_parity(SBox(d, tuple(images.tolist())))
                self.assertEqual(permutation_parity(layer), expected)

    def test_swap(self):
        self.assertEqual(linear_parity(Gf2Matrix.permutation([1, 0])), 1)
        self.assertEqual(permutation_parity(LinearLayer.brick_swap(4)), EVEN)
        self.assertEqual(
            permutation_parity(LinearLayer.from_bit_permutation([1, 0])), ODD
        )

    def test_present(self):
        layer = read_layer(fixture("present.layer"))
        self.assertEqual(layer.parity(), 0)


class TestProper(unittest.TestCase):
    def test_identity(self):
        p = BrickPartition(3, 3)
        check = is_proper(LinearLayer.identity(9), p)
        self.assertFalse(check)
        self.assertEqual(check.witness, Wall(p, 1))

    def test_rotation(self):
        p = BrickPartition(4, 4)
        layer = read_layer(fixture("rotation4x4.layer"))
        self.assertEqual(layer, LinearLayer(LinearLayer.block_rotation(4, 4).matrix))
        self.assertTrue(is_proper(layer, p))
        check = is_strongly_proper(layer, p)
        self.assertFalse(check)
        self.assertEqual([str(w) for w in check.witness], ["V_1", "V_2"])

    def test_present(self):
        p = BrickPartition(4, 16)
        layer = read_layer(fixture("present.layer"))
        self.assertTrue(is_proper(layer, p))
        # Bits 0..15 move onto bricks 1, 5, 9 and 13
        check = is_strongly_proper(layer, p)
        self.assertFalse(check)
        self.assertEqual(
            [str(w) for w in check.witness],
            ["V_1+V_2+V_3+V_4", "V_1+V_5+V_9+V_13"],
        )

    def test_rectangle(self):
        layer = read_layer(fixture("rectangle.layer"))
        self.assertTrue(is_strongly_proper(layer, BrickPartition(4, 16)))

    def test_printcipher(self):
        layer = read_layer(fixture("printcipher.layer"))
        self.assertTrue(is_strongly_proper(layer, BrickPartition(3, 16)))

    def test_strong_implies_proper(self):
        rng = np.random.default_rng(2)
        p = BrickPartition(2, 3)
        for _ in range(50):
            layer = LinearLayer.random_invertible(6, rng)
            if is_strongly_proper(layer, p):
                self.assertTrue(is_proper(layer, p))

    def test_touched_bricks(self):
        p = BrickPartition(4, 2)
        touched = touched_bricks(LinearLayer.brick_swap(4), p)
        self.assertEqual(list(touched), [0, 2, 1, 3])

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            is_proper(LinearLayer.identity(8), BrickPartition(3, 3))


if __name__ == "__main__":
    unittest.main()
