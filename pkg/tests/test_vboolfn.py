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
"""Vectorial Boolean function test"""

import unittest

import numpy as np

from .test_dir import add_src_dir
add_src_dir()

from tbgroup.common import InputError
from tbgroup.gf2 import Gf2Matrix, Gf2Vec
from tbgroup.vboolfn import (
    EVEN,
    ODD,
    BoolComponent,
    SBox,
    affine_sbox,
    anf,
    anf_degree,
    component_nonlinearity,
    ddt,
    derivative_image,
    inversion_sbox,
    nonlinearity,
    normalize_zero,
    permutation_parity,
    random_permutations,
    walsh_spectrum,
)

PRESENT = "C56B90AD3EF84712"


class TestSBox(unittest.TestCase):
    def test_hex(self):
        f = SBox.from_hex(PRESENT)
        self.assertEqual(f(0), 0xC)
        self.assertEqual(f(Gf2Vec(0xF, 4)), 2)
        self.assertEqual(f.to_hex(), PRESENT)
        self.assertFalse(f.is_normalized())

    def test_bad_hex(self):
        with self.assertRaises(InputError):
            SBox.from_hex("C56B90AD3EF8471")
        with self.assertRaises(InputError):
            SBox.from_hex("C56B90AD3EF8471G")

    def test_not_bijective(self):
        with self.assertRaises(InputError):
            SBox(2, (0, 1, 1, 3))
        f = SBox(2, (0, 1, 1, 3), allow_non_bijective=True)
        self.assertEqual(f.table, (0, 1, 1, 3))

    def test_width(self):
        with self.assertRaises(InputError):
            SBox(1, (1, 0))
        with self.assertRaises(InputError):
            SBox(3, tuple(range(7)))

    def test_inverse(self):
        f = SBox.from_hex(PRESENT)
        g = f.inverse()
        self.assertTrue(all(g(f(x)) == x for x in range(16)))

    def test_normalize_zero(self):
        f = normalize_zero(SBox.from_hex(PRESENT))
        self.assertTrue(f.is_normalized())
        self.assertEqual(f(1), 0x5 ^ 0xC)
        g = SBox.identity(3)
        self.assertIs(normalize_zero(g), g)


class TestDifferential(unittest.TestCase):
    def test_ddt_shape(self):
        table = ddt(SBox.from_hex(PRESENT))
        self.assertEqual(table.shape, (16, 16))
        self.assertEqual(table[0, 0], 16)
        self.assertTrue((table.sum(axis=1) == 16).all())
        self.assertTrue((table % 2 == 0).all())
        self.assertEqual(table[1:].max(), 4)

    def test_apn(self):
        self.assertEqual(ddt(inversion_sbox(3))[1:].max(), 2)

    def test_derivative_image(self):
        f = SBox.from_hex(PRESENT)
        table = ddt(f)
        for u in range(1, 16):
            image = derivative_image(f, u)
            self.assertEqual(
                {v.bits for v in image}, set(np.nonzero(table[u])[0].tolist())
            )

    def test_derivative_zero(self):
        with self.assertRaises(ValueError):
            derivative_image(SBox.identity(4), 0)
        with self.assertRaises(ValueError):
            derivative_image(SBox.identity(4), 16)


class TestLinearity(unittest.TestCase):
    def test_present(self):
        self.assertEqual(nonlinearity(SBox.from_hex(PRESENT)), 4)

    def test_inversion(self):
        self.assertEqual(nonlinearity(inversion_sbox(4)), 4)
        self.assertEqual(nonlinearity(inversion_sbox(3)), 2)

    def test_affine(self):
        m = Gf2Matrix.from_bit_rows(["1100", "0110", "0011", "0001"])
        f = affine_sbox(m, 0b1010)
        self.assertEqual(nonlinearity(f), 0)
        self.assertEqual(ddt(f)[1:].max(), 16)

    def test_walsh_trivial_row(self):
        spectrum = walsh_spectrum(SBox.from_hex(PRESENT))
        self.assertEqual(spectrum[0, 0], 16)
        self.assertTrue((spectrum[0, 1:] == 0).all())
        # Parseval
        self.assertTrue(((spectrum.astype(np.int64) ** 2).sum(axis=1) == 256).all())

    def test_component(self):
        f = SBox.from_hex(PRESENT)
        c = f.component(1)
        self.assertEqual(c.truth_table, tuple(v & 1 for v in f.table))
        self.assertGreaterEqual(component_nonlinearity(c), 4)
        self.assertEqual(len(f.components()), 15)


class TestAnf(unittest.TestCase):
    def test_product(self):
        c = BoolComponent(2, (0, 0, 0, 1))
        self.assertEqual(list(anf(c)), [0, 0, 0, 1])
        self.assertEqual(anf_degree(c), 2)

    def test_affine_function(self):
        c = BoolComponent(3, (1, 0, 1, 0, 1, 0, 1, 0))
        self.assertEqual(list(anf(c)), [1, 1, 0, 0, 0, 0, 0, 0])
        self.assertEqual(anf_degree(c), 1)
        self.assertEqual(anf_degree(BoolComponent(2, (0, 0, 0, 0))), 0)

    def test_inversion_degree(self):
        f = inversion_sbox(4)
        self.assertEqual({anf_degree(c) for c in f.components()}, {3})


class TestParity(unittest.TestCase):
    def test_present(self):
        # Cycles of lengths 7, 4, 3 and 2
        self.assertEqual(permutation_parity(SBox.from_hex(PRESENT)), EVEN)

    def test_transposition(self):
        self.assertEqual(permutation_parity(SBox(2, (1, 0, 2, 3))), ODD)
        self.assertEqual(permutation_parity(SBox.identity(5)), EVEN)

    def test_inversion(self):
        # Fixes 0 and 1, swaps the other 14 elements in pairs
        self.assertEqual(permutation_parity(inversion_sbox(4)), ODD)


class TestInversion(unittest.TestCase):
    def test_table(self):
        f = inversion_sbox(4)
        self.assertEqual(f(0), 0)
        self.assertEqual(f(1), 1)
        self.assertEqual(f(2), 9)
        self.assertTrue(all(f(f(x)) == x for x in range(16)))

    def test_unknown_width(self):
        with self.assertRaises(InputError):
            inversion_sbox(12)


class TestRandom(unittest.TestCase):
    def test_reproducible(self):
        a = [f.table for f in random_permutations(5, 10, 42)]
        b = [f.table for f in random_permutations(5, 10, 42)]
        self.assertEqual(len(a), 10)
        self.assertEqual(a, b)
        self.assertNotEqual(a, [f.table for f in random_permutations(5, 10, 43)])


if __name__ == "__main__":
    unittest.main()
