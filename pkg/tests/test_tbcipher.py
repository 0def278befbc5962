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
"""Cipher model and theorem engine test"""

from math import factorial
import unittest

import numpy as np

from .test_dir import add_src_dir, fixture
add_src_dir()

from .common import load_spec

from tbgroup.common import AnalysisError, DimensionMismatch, ModelNotApplicable
from tbgroup.ingest import read_spec
from tbgroup.mixlayer import BrickPartition, LinearLayer, is_strongly_proper
from tbgroup.permgroup import ALT, GIANT_ALT, PRODUCT_ACTION, is_primitive
from tbgroup.tbcipher import (
    MODEL_NOT_APPLICABLE,
    NOT_AFFINE_ONLY,
    PROVEN_ALT,
    PROVEN_PRIMITIVE,
    UNKNOWN,
    CipherSpec,
    analyze,
    apply_alternating_theorems,
    apply_primitivity_theorems,
    brute_force_imprimitivity,
    build_round,
    desk_check,
    desk_scale_reduction,
    evaluate_round,
    random_spec,
    round_group,
)
from tbgroup.vboolfn import EVEN, SBox, inversion_sbox, permutation_parity

PRESENT = SBox.from_hex("C56B90AD3EF84712")
PRINTCIPHER = SBox(3, (0, 1, 3, 6, 7, 4, 5, 2))


def toy_spec(brick=PRESENT, n=2, layer=None, **kwargs):
    """Return a cipher repeating one brick, by default with swapped bricks"""
    layer = layer or LinearLayer.block_rotation(brick.m, n)
    return CipherSpec.uniform(brick, n, layer, **kwargs)


class TestCipherSpec(unittest.TestCase):
    def test_dimensions(self):
        spec = toy_spec()
        self.assertEqual(spec.d, 8)
        self.assertEqual(spec.partition, BrickPartition(4, 2))

    def test_brick_count(self):
        with self.assertRaises(DimensionMismatch):
            CipherSpec(4, 3, (PRESENT, PRESENT), LinearLayer.identity(12))

    def test_brick_width(self):
        with self.assertRaises(DimensionMismatch):
            CipherSpec(4, 2, (PRESENT, PRINTCIPHER), LinearLayer.identity(8))

    def test_layer_dimension(self):
        with self.assertRaises(DimensionMismatch):
            CipherSpec.uniform(PRESENT, 2, LinearLayer.identity(9))


class TestRound(unittest.TestCase):
    def test_against_evaluator(self):
        spec = toy_spec()
        rho = build_round(spec)
        for x in range(256):
            self.assertEqual(rho(x), evaluate_round(spec, x))

    def test_normalized(self):
        rho = build_round(toy_spec())
        self.assertEqual(rho(0), 0)

    def test_swap(self):
        # f(1) + f(0) = 5 + C in the low brick moves to the high brick
        rho = build_round(toy_spec())
        self.assertEqual(rho(0x01), 0x90)

    def test_even(self):
        for spec in (toy_spec(), toy_spec(PRINTCIPHER, 3), random_spec(3, 3, 9)):
            self.assertEqual(permutation_parity(build_round(spec)), EVEN)

    def test_not_surjective(self):
        spec = toy_spec(proper_round_key_surjective=False)
        with self.assertRaises(ModelNotApplicable):
            round_group(spec)

    def test_group(self):
        group = round_group(toy_spec(PRINTCIPHER))
        self.assertEqual(group.degree, 64)
        self.assertTrue(group.is_transitive())
        self.assertEqual(len(group.generators), 7)


class TestPrimitivity(unittest.TestCase):
    def test_present(self):
        verdict = apply_primitivity_theorems(load_spec("present.spec"))
        self.assertEqual(verdict.primitivity, PROVEN_PRIMITIVE)
        self.assertEqual(verdict.primitivity_rule.label, "uniform-primitivity(r=2)")
        first = verdict.hypothesis_trail[0]
        self.assertEqual(first.label, "weak-uniform-primitivity(r=1)")
        self.assertFalse(first.held)
        self.assertTrue(verdict.layer["proper"])
        self.assertEqual(verdict.brick_facts["1"]["delta"], 4)
        self.assertEqual(len(verdict.brick_facts), 16)

    def test_inversion(self):
        verdict = apply_primitivity_theorems(load_spec("inversion_rotation.spec"))
        self.assertEqual(verdict.primitivity, PROVEN_PRIMITIVE)
        self.assertEqual(
            verdict.primitivity_rule.label, "weak-uniform-primitivity(r=1)"
        )

    def test_printcipher(self):
        verdict = apply_primitivity_theorems(load_spec("printcipher.spec"))
        self.assertEqual(
            verdict.primitivity_rule.label, "weak-uniform-primitivity(r=1)"
        )

    def test_identity_bricks(self):
        spec = toy_spec(SBox.identity(4))
        verdict = apply_primitivity_theorems(spec)
        self.assertEqual(verdict.primitivity, UNKNOWN)
        self.assertTrue(all(not f.held for f in verdict.hypothesis_trail))

    def test_not_proper(self):
        spec = toy_spec(layer=LinearLayer.identity(8))
        verdict = apply_primitivity_theorems(spec)
        self.assertEqual(verdict.primitivity, UNKNOWN)
        self.assertFalse(verdict.layer["proper"])
        self.assertEqual(verdict.layer["invariant_wall"], "V_1")
        self.assertIn("the round is not proper", verdict.notes)

    def test_small_width(self):
        spec = toy_spec(SBox(2, (0, 2, 3, 1)))
        verdict = apply_primitivity_theorems(spec)
        self.assertEqual(verdict.primitivity, UNKNOWN)
        self.assertEqual(verdict.hypothesis_trail, [])

    def test_not_surjective(self):
        verdict = apply_primitivity_theorems(
            toy_spec(proper_round_key_surjective=False)
        )
        self.assertEqual(verdict.primitivity, MODEL_NOT_APPLICABLE)


class TestAlternating(unittest.TestCase):
    def test_present(self):
        # The bit permutation maps bricks 1 to 4 onto bricks 1, 5, 9, 13
        verdict = apply_alternating_theorems(load_spec("present.spec"))
        self.assertEqual(verdict.group_identity, NOT_AFFINE_ONLY)
        self.assertFalse(verdict.layer["strongly_proper"])
        self.assertEqual(
            verdict.layer["wall_to_wall"], ["V_1+V_2+V_3+V_4", "V_1+V_5+V_9+V_13"]
        )
        self.assertEqual(
            verdict.rule_chain, ["uniform-primitivity(r=2)", "small-bricks"]
        )

    def test_rectangle(self):
        verdict = apply_alternating_theorems(load_spec("rectangle.spec"))
        self.assertEqual(verdict.primitivity, PROVEN_PRIMITIVE)
        self.assertEqual(verdict.group_identity, PROVEN_ALT)
        self.assertEqual(verdict.rule_chain[1:], ["strongly-proper-round", "small-bricks"])

    def test_printcipher(self):
        verdict = apply_alternating_theorems(load_spec("printcipher.spec"))
        self.assertEqual(verdict.group_identity, PROVEN_ALT)
        self.assertEqual(
            verdict.rule_chain,
            [
                "weak-uniform-primitivity(r=1)",
                "strongly-proper-round",
                "small-bricks",
            ],
        )

    def test_inversion_rotation(self):
        verdict = apply_alternating_theorems(load_spec("inversion_rotation.spec"))
        self.assertEqual(verdict.group_identity, NOT_AFFINE_ONLY)
        self.assertEqual(verdict.layer["wall_to_wall"], ["V_1", "V_2"])
        self.assertTrue(verdict.notes)

    def test_anti_crooked_rule(self):
        # Width 6 is outside the small brick rule
        brick = inversion_sbox(6)
        layer = desk_scale_reduction(toy_spec(brick), 2, seed=4).layer
        verdict = apply_alternating_theorems(toy_spec(brick, layer=layer))
        self.assertEqual(verdict.primitivity, PROVEN_PRIMITIVE)
        labels = [f.label for f in verdict.hypothesis_trail]
        self.assertIn("small-bricks", labels)
        self.assertIn("anti-crooked-bricks", labels)
        if verdict.group_identity == PROVEN_ALT:
            self.assertIn(
                verdict.rule_chain[-1], ("anti-crooked-bricks", "brick-alternating")
            )

    def test_not_primitive_stops(self):
        verdict = apply_alternating_theorems(toy_spec(SBox.identity(4)))
        self.assertEqual(verdict.group_identity, UNKNOWN)
        self.assertEqual(verdict.group_rules, [])


class TestOracle(unittest.TestCase):
    def test_identity_layer(self):
        spec = toy_spec(PRINTCIPHER, layer=LinearLayer.identity(6))
        witness = brute_force_imprimitivity(spec)
        self.assertIsNotNone(witness)
        self.assertFalse(witness.is_full())
        self.assertFalse(is_primitive(round_group(spec)))

    def test_strongly_proper(self):
        spec = desk_scale_reduction(load_spec("printcipher.spec"), 2, seed=1)
        self.assertIsNone(brute_force_imprimitivity(spec))
        self.assertTrue(is_primitive(round_group(spec)))

    def test_agreement(self):
        for seed in range(8):
            spec = random_spec(3, 2, seed)
            witness = brute_force_imprimitivity(spec)
            primitive = is_primitive(round_group(spec))
            self.assertEqual(witness is None, bool(primitive), seed)


class TestReduction(unittest.TestCase):
    def test_auto_layer(self):
        spec = load_spec("present.spec")
        reduced = desk_scale_reduction(spec, 2, seed=3)
        self.assertEqual(reduced.d, 8)
        self.assertEqual(reduced.bricks, (PRESENT, PRESENT))
        self.assertTrue(is_strongly_proper(reduced.layer, reduced.partition))
        self.assertTrue(reduced.layer_provenance.startswith("random strongly proper layer"))
        self.assertEqual(reduced.name, "PRESENT (n = 2)")

    def test_supplied_layer(self):
        spec_file = read_spec(fixture("inversion_rotation.spec"))
        reduced = desk_scale_reduction(spec_file.spec, 2, spec_file.reduced_layer)
        self.assertEqual(reduced.layer_provenance, "supplied")
        self.assertEqual(reduced.layer, LinearLayer.brick_swap(4))

    def test_cyclic_bricks(self):
        spec = CipherSpec(
            3, 2, (PRINTCIPHER, PRINTCIPHER.inverse()), LinearLayer.block_rotation(3, 2)
        )
        reduced = desk_scale_reduction(spec, 3, seed=0)
        self.assertEqual(
            reduced.bricks, (PRINTCIPHER, PRINTCIPHER.inverse(), PRINTCIPHER)
        )

    def test_too_small(self):
        with self.assertRaises(ValueError):
            desk_scale_reduction(load_spec("present.spec"), 1)

    def test_no_strongly_proper_layer(self):
        # Two bricks of width 2 admit strongly proper layers only rarely
        spec = toy_spec(SBox(2, (0, 2, 3, 1)))
        try:
            reduced = desk_scale_reduction(spec, 2, seed=0)
        except AnalysisError:
            return
        self.assertTrue(is_strongly_proper(reduced.layer, reduced.partition))


class TestDeskCheck(unittest.TestCase):
    def test_printcipher(self):
        reduced = desk_scale_reduction(load_spec("printcipher.spec"), 2, seed=0)
        check = desk_check(reduced, seed=0)
        self.assertEqual(check.degree, 64)
        self.assertEqual(check.verdict.group_identity, PROVEN_ALT)
        self.assertTrue(check.primitive)
        self.assertEqual(check.classification, GIANT_ALT)
        self.assertEqual(check.giant, ALT)
        self.assertEqual(check.order, factorial(64) // 2)
        self.assertTrue(check.consistent)

    def test_present(self):
        verdict = analyze(load_spec("present.spec"), desk_check_n=2, seed=0)
        check = verdict.desk_check
        self.assertEqual(check.degree, 256)
        self.assertEqual(check.verdict.group_identity, PROVEN_ALT)
        self.assertEqual(check.order, factorial(256) // 2)
        self.assertTrue(check.consistent)

    def test_inversion_rotation(self):
        spec_file = read_spec(fixture("inversion_rotation.spec"))
        verdict = analyze(
            spec_file.spec, desk_check_n=2, desk_layer=spec_file.reduced_layer
        )
        check = verdict.desk_check
        self.assertTrue(check.primitive)
        self.assertEqual(check.classification, PRODUCT_ACTION)
        self.assertLess(check.order, factorial(256) // 2)
        self.assertTrue(check.consistent)

    def test_imprimitive(self):
        spec = toy_spec(PRINTCIPHER, layer=LinearLayer.identity(6))
        check = desk_check(spec)
        self.assertFalse(check.primitive)
        self.assertEqual(check.classification, "imprimitive")
        self.assertTrue(check.block_witness.endswith("blocks of size 8"))


class TestRandomSpec(unittest.TestCase):
    def test_reproducible(self):
        a = random_spec(3, 3, 5)
        self.assertEqual(a, random_spec(3, 3, 5))
        self.assertEqual(a.name, "random-5")
        self.assertEqual(a.d, 9)
        self.assertTrue(all(b.m == 3 for b in a.bricks))

    def test_bricks_vary(self):
        tables = {b.table for seed in range(5) for b in random_spec(3, 2, seed).bricks}
        self.assertGreater(len(tables), 1)
        self.assertTrue(np.all([len(t) == 8 for t in tables]))


if __name__ == "__main__":
    unittest.main()
