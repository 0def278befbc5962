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
"""
Translation based cipher model and theorem engine.

A round is the parallel application of the bricks followed by the
mixing layer; with a surjective round key map the round functions and
key additions generate the group spanned by the round and the
translations of the state space.
The engine applies the sufficient conditions for this group to be
primitive and alternating, records the hypotheses that fired, and can
confirm its conclusions by direct computation on reduced instances.
"""

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from tbgroup import debug, kernels, perf
from tbgroup.common import (
    AnalysisError,
    DimensionMismatch,
    ModelNotApplicable,
    ResourceCapExceeded,
)
from tbgroup.gf2 import Gf2Subspace
from tbgroup.mixlayer import (
    BrickPartition,
    LinearLayer,
    is_proper,
    is_strongly_proper,
)
from tbgroup.permgroup import (
    ALT,
    GIANT_ALT,
    GroupHandle,
    NO,
    Permutation,
    SYM,
    check_condition_2,
    classify_primitive,
    is_primitive,
    translation_generators,
)
from tbgroup.sboxprops import brick_facts
from tbgroup.vboolfn import SBox, affine_sbox, normalize_zero

# Largest state dimension for explicit round permutations
MAX_ROUND_DIMENSION = 16

# Largest state dimension for the exhaustive imprimitivity oracle
MAX_ORACLE_DIMENSION = 12

# Random layers tried when looking for a strongly proper reduced layer
MAX_LAYER_ATTEMPTS = 1000

# Widest brick whose alternating condition is checked by group computation
MAX_CONDITION_WIDTH = 8

PROVEN_PRIMITIVE = "proven_primitive"
PROVEN_ALT = "proven_alt"
NOT_AFFINE_ONLY = "not_affine_only"
UNKNOWN = "unknown"
MODEL_NOT_APPLICABLE = "model_not_applicable"

UNIFORM_PRIMITIVITY = "uniform-primitivity"
WEAK_UNIFORM_PRIMITIVITY = "weak-uniform-primitivity"
ANTI_CROOKED_BRICKS = "anti-crooked-bricks"
BRICK_ALTERNATING = "brick-alternating"
SMALL_BRICKS = "small-bricks"
STRONGLY_PROPER_ROUND = "strongly-proper-round"


@dataclass(frozen=True)
class CipherSpec:
    """
    A translation based cipher reduced to what determines the group
    generated by its round functions.

    :param m: Brick width.
    :param n: Brick count.
    :param bricks: The n bricks, brick i acting on coordinates
        im, ..., (i + 1)m - 1.
    :param layer: The mixing layer on m * n coordinates.
    :param proper_round_key_surjective: Whether the round keys of the
        proper round cover the whole state space.
    """

    m: int
    n: int
    bricks: tuple
    layer: LinearLayer
    proper_round_key_surjective: bool = True
    name: str = ""
    layer_provenance: str = field(default="supplied", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bricks", tuple(self.bricks))
        partition = BrickPartition(self.m, self.n)
        if len(self.bricks) != self.n:
            raise DimensionMismatch(
                f"{len(self.bricks)} bricks given for n = {self.n}"
            )
        for i, brick in enumerate(self.bricks):
            if brick.m != self.m:
                raise DimensionMismatch(
                    f"brick {i + 1} has width {brick.m}, not {self.m}"
                )
        if self.layer.d != partition.d:
            raise DimensionMismatch(
                f"layer dimension {self.layer.d} differs from "
                f"{self.n} x {self.m}"
            )

    @classmethod
    def uniform(cls, brick, n, layer, **kwargs):
        """Return a specification using the same brick n times."""
        return cls(brick.m, n, (brick,) * n, layer, **kwargs)

    @property
    def d(self):
        """Dimension of the state"""
        return self.m * self.n

    @property
    def partition(self):
        """The brick partition of the state"""
        return BrickPartition(self.m, self.n)


@dataclass
class RuleFiring:
    """An evaluated rule: whether its hypotheses held and the per-brick
    or per-layer facts it was decided on."""

    rule: str
    held: bool
    r: int = None
    facts: dict = field(default_factory=dict)

    @property
    def label(self):
        """Rule name with its parameter"""
        if self.r is not None:
            return f"{self.rule}(r={self.r})"
        return self.rule


@dataclass
class DeskCheck:
    """Direct computation of the round function group of a reduced
    instance."""

    n: int
    degree: int
    layer_provenance: str
    seed: int
    verdict: "Verdict" = None
    primitive: bool = None
    block_witness: str = None
    classification: str = None
    giant: str = None
    order: int = None
    consistent: bool = None


@dataclass
class Verdict:
    """The conclusions of the theorem engine and the hypotheses behind
    them."""

    primitivity: str = UNKNOWN
    primitivity_rule: RuleFiring = None
    group_identity: str = UNKNOWN
    group_rules: list = field(default_factory=list)
    hypothesis_trail: list = field(default_factory=list)
    brick_facts: dict = field(default_factory=dict)
    layer: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    desk_check: DeskCheck = None

    @property
    def rule_chain(self):
        """Labels of the rules behind the strongest conclusion"""
        chain = []
        if self.primitivity_rule is not None:
            chain.append(self.primitivity_rule.label)
        chain.extend(r.label for r in self.group_rules)
        return chain


def _normalized_bricks(spec):
    return [normalize_zero(b) for b in spec.bricks]


def parallel_sbox(spec):
    """Return the table of the parallel application of the bricks,
    normalized to fix 0, over all states."""
    if spec.d > MAX_ROUND_DIMENSION:
        raise ResourceCapExceeded("round dimension", spec.d, MAX_ROUND_DIMENSION)
    states = np.arange(1 << spec.d, dtype=np.int64)
    mask = (1 << spec.m) - 1
    out = np.zeros_like(states)
    for i, brick in enumerate(_normalized_bricks(spec)):
        shift = i * spec.m
        out |= brick.values[(states >> shift) & mask] << shift
    return out


def build_round(spec):
    """
    Return the round permutation: the parallel bricks, normalized to
    fix 0, followed by the mixing layer.

    :param spec: The cipher.
    :type spec: CipherSpec

    :rtype: Permutation

    :raises ResourceCapExceeded: If the state has more than
        MAX_ROUND_DIMENSION bits.
    """
    images = spec.layer.apply_all(parallel_sbox(spec))
    return Permutation(images, check=False)


def evaluate_round(spec, x):
    """Return the image of a single state under the round, computed
    brick by brick."""
    mask = (1 << spec.m) - 1
    y = 0
    for i, brick in enumerate(_normalized_bricks(spec)):
        y |= brick((x >> (i * spec.m)) & mask) << (i * spec.m)
    return spec.layer.apply(y)


def round_group(spec, degree_cap=None, seed=0):
    """
    Return the group generated by the round and the translations.

    :param spec: The cipher.
    :type spec: CipherSpec

    :rtype: GroupHandle

    :raises ModelNotApplicable: If the round keys are not surjective.
    """
    if not spec.proper_round_key_surjective:
        raise ModelNotApplicable(
            "the round key map of the proper round is not surjective"
        )
    generators = [build_round(spec)] + translation_generators(spec.d)
    return GroupHandle(generators, degree_cap=degree_cap, seed=seed)


def _brick_facts(spec):
    return [brick_facts(b) for b in spec.bricks]


def _per_brick(facts, *names):
    return {
        str(i + 1): {name: getattr(f, name) for name in names}
        for i, f in enumerate(facts)
    }


def apply_primitivity_theorems(spec):
    """
    Apply the sufficient conditions for the round function group to be
    primitive.
    For r = 1, ..., m - 1 the engine tries, in this order:
    all bricks 2^r-uniform and strongly (r - 1)-anti-invariant (r >= 2),
    and all bricks weakly 2^r-uniform and strongly r-anti-invariant;
    both require a proper round.

    :param spec: The cipher.
    :type spec: CipherSpec

    :return: A verdict with the primitivity conclusion.
    :rtype: Verdict
    """
    verdict = Verdict()
    partition = spec.partition
    proper = is_proper(spec.layer, partition)
    verdict.layer["proper"] = proper.holds
    if not proper:
        verdict.layer["invariant_wall"] = str(proper.witness)
    if not spec.proper_round_key_surjective:
        verdict.primitivity = MODEL_NOT_APPLICABLE
        verdict.notes.append(
            "the round key map is not surjective; no group conclusion applies"
        )
        return verdict
    if spec.m < 3:
        verdict.notes.append("the theorems require bricks of at least 3 bits")
        return verdict

    facts = _brick_facts(spec)
    for i, f in enumerate(facts):
        verdict.brick_facts[str(i + 1)] = f.as_dict()
    if not proper:
        verdict.notes.append("the round is not proper")
        return verdict

    for r in range(1, spec.m):
        candidates = []
        if r >= 2:
            candidates.append(
                RuleFiring(
                    UNIFORM_PRIMITIVITY,
                    all(f.is_uniform(1 << r) and f.max_r_strong >= r - 1 for f in facts),
                    r,
                    _per_brick(facts, "delta", "max_r_strong"),
                )
            )
        candidates.append(
            RuleFiring(
                WEAK_UNIFORM_PRIMITIVITY,
                all(
                    f.is_weakly_uniform(1 << r) and f.max_r_strong >= r
                    for f in facts
                ),
                r,
                _per_brick(facts, "min_image_size", "max_r_strong"),
            )
        )
        for firing in candidates:
            verdict.hypothesis_trail.append(firing)
            debug.log("witness", f"{firing.label}: {firing.held}")
            if firing.held and verdict.primitivity_rule is None:
                verdict.primitivity = PROVEN_PRIMITIVE
                verdict.primitivity_rule = firing
        if verdict.primitivity_rule is not None:
            break
    perf.log("Primitivity theorems")
    return verdict


def _non_affine_rules(spec, facts, seed):
    """Yield the evaluated rules excluding the affine case, stopping at
    the first that holds."""
    small = RuleFiring(SMALL_BRICKS, spec.m in (3, 4, 5) and spec.n >= 2)
    small.facts = {"m": spec.m, "n": spec.n}
    yield small
    if small.held:
        return
    crooked = RuleFiring(
        ANTI_CROOKED_BRICKS,
        all(f.anti_crooked for f in facts),
        facts=_per_brick(facts, "anti_crooked"),
    )
    yield crooked
    if crooked.held or spec.m > MAX_CONDITION_WIDTH:
        return
    passing = []
    for i, brick in enumerate(spec.bricks):
        if check_condition_2(brick, max_width=MAX_CONDITION_WIDTH, seed=seed):
            passing.append(i + 1)
            break
    yield RuleFiring(
        BRICK_ALTERNATING,
        bool(passing),
        facts={"passing_bricks": passing},
    )


def apply_alternating_theorems(spec, verdict=None, seed=0):
    """
    Apply the sufficient conditions for the round function group to be
    the alternating group: a primitive group by the primitivity
    theorems, a strongly proper round, and one of bricks of width 3, 4
    or 5, all bricks anti-crooked, or some brick whose translation group
    and its conjugate generate the alternating group.

    :param spec: The cipher.
    :type spec: CipherSpec

    :param verdict: The outcome of :func:`apply_primitivity_theorems`,
        computed if not given.
    :type verdict: Verdict, optional

    :rtype: Verdict
    """
    if verdict is None:
        verdict = apply_primitivity_theorems(spec)
    if verdict.primitivity != PROVEN_PRIMITIVE:
        return verdict

    strong = is_strongly_proper(spec.layer, spec.partition)
    verdict.layer["strongly_proper"] = strong.holds
    strong_firing = RuleFiring(STRONGLY_PROPER_ROUND, strong.holds)
    if not strong:
        walls = strong.witness
        verdict.layer["wall_to_wall"] = [str(walls[0]), str(walls[1])]
        strong_firing.facts = {"wall": str(walls[0]), "image": str(walls[1])}
    verdict.hypothesis_trail.append(strong_firing)

    facts = _brick_facts(spec)
    non_affine = None
    for firing in _non_affine_rules(spec, facts, seed):
        verdict.hypothesis_trail.append(firing)
        if firing.held:
            non_affine = firing

    if non_affine is not None and strong:
        verdict.group_identity = PROVEN_ALT
        verdict.group_rules = [strong_firing, non_affine]
    elif non_affine is not None:
        verdict.group_identity = NOT_AFFINE_ONLY
        verdict.group_rules = [non_affine]
        verdict.notes.append(
            "the round is not strongly proper; the group may be a "
            "wreath product in product action"
        )
    perf.log("Alternating group theorems")
    return verdict


def brute_force_imprimitivity(spec):
    """
    Search for a nontrivial proper subspace U of the state space with
    (u + v)g + vg in U l^-1 for all u in U and all states v, where g is
    the parallel S-box and l the mixing layer.
    The cosets of such a subspace form a block system of the round
    function group, and every block system arises in this way.

    :param spec: The cipher.
    :type spec: CipherSpec

    :return: The smallest such subspace containing some nonzero
        vector, or None if the group is primitive.
    :rtype: Gf2Subspace

    :raises ResourceCapExceeded: If the state has more than
        MAX_ORACLE_DIMENSION bits.
    """
    if spec.d > MAX_ORACLE_DIMENSION:
        raise ResourceCapExceeded("oracle dimension", spec.d, MAX_ORACLE_DIMENSION)
    table = np.ascontiguousarray(parallel_sbox(spec))
    points = np.arange(1 << spec.d, dtype=np.int64)
    layer_images = np.ascontiguousarray(spec.layer.apply_all(points))
    for seed in range(1, 1 << spec.d):
        member = kernels.derivative_closure(table, layer_images, seed)
        if not member.all():
            subspace = Gf2Subspace.span(spec.d, np.flatnonzero(member).tolist())
            debug.log("witness", f"invariant subspace {subspace}")
            return subspace
    return None


def desk_scale_reduction(spec, target_n, layer=None, seed=0):
    """
    Return the cipher with its first target_n bricks and a mixing layer
    of the reduced dimension.

    :param spec: The cipher.
    :type spec: CipherSpec

    :param target_n: The reduced brick count, at least 2.
    :type target_n: int

    :param layer: The reduced layer; if not given, random invertible
        layers are drawn until one is strongly proper.
    :type layer: LinearLayer, optional

    :param seed: Seed for drawing the reduced layer.
    :type seed: int, optional

    :rtype: CipherSpec

    :raises AnalysisError: If no strongly proper layer was found.
    """
    if target_n < 2:
        raise ValueError(f"reduced brick count {target_n} is below 2")
    bricks = [spec.bricks[i % spec.n] for i in range(target_n)]
    partition = BrickPartition(spec.m, target_n)
    if layer is not None:
        provenance = "supplied"
    else:
        rng = np.random.default_rng(seed)
        for attempt in range(1, MAX_LAYER_ATTEMPTS + 1):
            candidate = LinearLayer.random_invertible(partition.d, rng)
            if is_strongly_proper(candidate, partition):
                layer = candidate
                provenance = (
                    f"random strongly proper layer (seed {seed}, "
                    f"attempt {attempt})"
                )
                break
        else:
            raise AnalysisError(
                f"no strongly proper layer found in {MAX_LAYER_ATTEMPTS} attempts"
            )
    return CipherSpec(
        spec.m,
        target_n,
        tuple(bricks),
        layer,
        spec.proper_round_key_surjective,
        name=f"{spec.name} (n = {target_n})" if spec.name else "",
        layer_provenance=provenance,
    )


def desk_check(spec, seed=0, degree_cap=None):
    """
    Compute the round function group of a desk-scale cipher directly and
    compare it with the conclusions of the theorem engine.

    :param spec: The (reduced) cipher.
    :type spec: CipherSpec

    :rtype: DeskCheck
    """
    verdict = apply_alternating_theorems(spec, seed=seed)
    group = round_group(spec, degree_cap=degree_cap, seed=seed)
    result = DeskCheck(
        n=spec.n,
        degree=group.degree,
        layer_provenance=spec.layer_provenance,
        seed=seed,
        verdict=verdict,
    )
    primitive = is_primitive(group)
    result.primitive = primitive.holds
    if not primitive:
        blocks = primitive.witness
        result.block_witness = (
            f"{blocks.block_count} blocks of size {blocks.block_size}"
        )
        result.classification = "imprimitive"
    else:
        translations = GroupHandle(translation_generators(spec.d), seed=seed)
        result.classification = classify_primitive(group, translations)
    result.order = group.order()
    full = factorial(group.degree)
    result.giant = SYM if result.order == full else ALT if 2 * result.order == full else NO
    result.consistent = (
        (verdict.primitivity != PROVEN_PRIMITIVE or result.primitive)
        and (verdict.group_identity != PROVEN_ALT or result.classification == GIANT_ALT)
        and (result.classification != GIANT_ALT or result.giant == ALT)
    )
    perf.log(f"Desk check of degree {group.degree}")
    return result


def analyze(spec, desk_check_n=None, desk_layer=None, seed=0, degree_cap=None):
    """
    Run the theorem engine on a cipher and optionally confirm it on a
    reduced instance.

    :param spec: The cipher.
    :type spec: CipherSpec

    :param desk_check_n: Brick count of the reduced instance.
    :type desk_check_n: int, optional

    :param desk_layer: Mixing layer of the reduced instance.
    :type desk_layer: LinearLayer, optional

    :rtype: Verdict
    """
    verdict = apply_alternating_theorems(spec, seed=seed)
    if desk_check_n is not None:
        reduced = desk_scale_reduction(spec, desk_check_n, desk_layer, seed)
        verdict.desk_check = desk_check(reduced, seed, degree_cap)
    return verdict


def _random_affine_brick(m, rng):
    layer = LinearLayer.random_invertible(m, rng)
    return affine_sbox(layer.matrix, int(rng.integers(1 << m)))


def random_spec(m, n, seed):
    """
    Return a random cipher; a quarter of the bricks are affine and a
    quarter of the layers permute the bricks, so that imprimitive groups
    also occur.

    :param m: Brick width.
    :type m: int

    :param n: Brick count.
    :type n: int

    :param seed: Seed of the random number generator.
    :type seed: int

    :rtype: CipherSpec
    """
    rng = np.random.default_rng(seed)
    bricks = []
    for _ in range(n):
        if rng.random() < 0.25:
            bricks.append(_random_affine_brick(m, rng))
        else:
            bricks.append(SBox(m, tuple(rng.permutation(1 << m).tolist())))
    if rng.random() < 0.25:
        layer = LinearLayer.block_rotation(m, n)
    else:
        layer = LinearLayer.random_invertible(m * n, rng)
    return CipherSpec(m, n, tuple(bricks), layer, name=f"random-{seed}")
