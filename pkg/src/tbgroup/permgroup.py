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
Permutation groups on {0, ..., N - 1}: permutation arithmetic,
stabilizer chains (Schreier-Sims), order and membership, block systems,
primitivity, recognition of the alternating and symmetric groups, and
the classification of primitive groups containing a regular
elementary abelian subgroup.

Permutations act on the right: p * q applies p first, then q.
"""

from collections import Counter, deque
from dataclasses import dataclass, field
from math import factorial, gcd, prod

import numpy as np

from tbgroup import debug, kernels, perf
from tbgroup.common import (
    AnalysisError,
    ClassificationError,
    PropertyCheck,
    ResourceCapExceeded,
)
from tbgroup.gf2 import Gf2Matrix
from tbgroup.vboolfn import EVEN, SBox, permutation_parity

# Largest degree for which stabilizer chains are built by default
DEFAULT_DEGREE_CAP = 4096

# Largest degree of explicitly stored permutations
MAX_EXPLICIT_DEGREE = 65536

# Consecutive random elements sifting to the identity that end the
# randomized Schreier-Sims phase
RANDOM_SIFT_PATIENCE = 40

# Product replacement state size and warm-up steps
REPLACEMENT_STATE = 10
REPLACEMENT_WARMUP = 50

NO = "no"
ALT = "alt"
SYM = "sym"

AFFINE = "affine"
GIANT_ALT = "giant_alt"
GIANT_SYM = "giant_sym"
PRODUCT_ACTION = "product_action"

# Schreier vector entries
_OUTSIDE = -2
_ROOT = -1


class Permutation:
    """An immutable bijection of {0, ..., N - 1} held as an array of
    images."""

    __slots__ = ("images",)

    def __init__(self, images, check=True):
        images = np.array(images, dtype=np.int32)
        if images.ndim != 1:
            raise ValueError("permutation images must form a vector")
        if images.size > MAX_EXPLICIT_DEGREE:
            raise ResourceCapExceeded(
                "permutation degree", images.size, MAX_EXPLICIT_DEGREE
            )
        if check and (
            images.size
            and (
                images.min() < 0
                or images.max() >= images.size
                or not np.all(np.bincount(images, minlength=images.size) == 1)
            )
        ):
            raise ValueError("the images do not form a permutation")
        images.setflags(write=False)
        self.images = images

    @classmethod
    def identity(cls, degree):
        """Return the identity of the specified degree."""
        return cls(np.arange(degree), check=False)

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Return the permutation with the specified cycles, e.g.
        [(0, 1), (2, 3, 4)]."""
        images = np.arange(degree)
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @classmethod
    def from_sbox(cls, f):
        """Return the permutation of an S-box table."""
        return cls(f.values)

    @property
    def degree(self):
        """Number of points acted on"""
        return self.images.size

    def __call__(self, x):
        return int(self.images[x])

    def __mul__(self, other):
        if other.degree != self.degree:
            raise ValueError("cannot multiply permutations of different degrees")
        return Permutation(other.images[self.images], check=False)

    def inverse(self):
        """Return the inverse permutation."""
        inverse = np.empty_like(self.images)
        inverse[self.images] = np.arange(self.degree, dtype=np.int32)
        return Permutation(inverse, check=False)

    def __pow__(self, exponent):
        result = Permutation.identity(self.degree)
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(
            self.images, other.images
        )

    def __hash__(self):
        return hash(self.images.tobytes())

    def is_identity(self):
        """Return True for the identity."""
        return bool(np.all(self.images == np.arange(self.degree)))

    def cycle_type(self):
        """Return a Counter mapping cycle lengths to their multiplicity."""
        return Counter(
            int(n) for n in kernels.cycle_lengths(np.ascontiguousarray(self.images))
        )

    def order(self):
        """Return the order of the permutation."""
        result = 1
        for length in self.cycle_type():
            result = result * length // gcd(result, length)
        return result

    def parity(self):
        """Return EVEN or ODD."""
        return permutation_parity(self)

    def __repr__(self):
        if self.degree <= 16:
            return f"Permutation({self.images.tolist()})"
        return f"Permutation(<degree {self.degree}>)"


def _inverse_images(images):
    inverse = np.empty_like(images)
    inverse[images] = np.arange(images.size, dtype=images.dtype)
    return inverse


class _Level:
    """One level of a stabilizer chain: a base point, the indices of
    the strong generators fixing the earlier base points, and a
    Schreier vector for the orbit of the base point."""

    __slots__ = ("base", "generators", "vector", "orbit", "checked")

    def __init__(self, base, degree):
        self.base = base
        self.generators = []
        self.vector = np.full(degree, _OUTSIDE, dtype=np.int32)
        self.vector[base] = _ROOT
        self.orbit = np.array([base], dtype=np.int32)
        self.checked = set()


class StabilizerChain:
    """A base and strong generating set built with the Schreier-Sims
    algorithm; transversals are stored as Schreier vectors."""

    def __init__(self, degree):
        self.degree = degree
        self.identity = np.arange(degree, dtype=np.int32)
        self.strong = []
        self.strong_inverse = []
        self.levels = []

    @property
    def base(self):
        """The base points"""
        return [level.base for level in self.levels]

    def orbit_lengths(self):
        """Return the lengths of the basic orbits."""
        return [int(level.orbit.size) for level in self.levels]

    def order(self):
        """Return the product of the basic orbit lengths, which is a
        lower bound of the group order and equal to it once the chain is
        complete."""
        return prod(self.orbit_lengths())

    def _extend_orbit(self, depth, new_generator):
        """Close the orbit of a level under its generators, keeping
        the existing Schreier vector entries."""
        level = self.levels[depth]
        if level.orbit.size == self.degree - depth:
            return
        frontier = level.orbit
        generators = [new_generator]
        added = []
        while frontier.size:
            fresh_parts = []
            for index in generators:
                images = self.strong[index][frontier]
                fresh = images[level.vector[images] == _OUTSIDE]
                if fresh.size:
                    level.vector[fresh] = index
                    fresh_parts.append(fresh)
            if not fresh_parts:
                break
            frontier = np.concatenate(fresh_parts)
            added.append(frontier)
            generators = level.generators
        if added:
            level.orbit = np.concatenate([level.orbit] + added)

    def add_generator(self, images, depth):
        """Add a strong generator that fixes the base points before
        position depth, extending the base if depth equals its length."""
        index = len(self.strong)
        self.strong.append(images)
        self.strong_inverse.append(_inverse_images(images))
        if depth == len(self.levels):
            moved = np.flatnonzero(images != self.identity)
            self.levels.append(_Level(int(moved[0]), self.degree))
            debug.log(
                "bsgs",
                f"base point {int(moved[0])} added at depth {depth}",
            )
        for i in range(depth + 1):
            self.levels[i].generators.append(index)
            self._extend_orbit(i, index)

    def strip(self, images, start=0):
        """Sift the permutation through the chain from level start.
        Return (None, depth) if it reduces to the identity, otherwise the
        residue and the depth at which sifting stopped."""
        h = images
        for depth in range(start, len(self.levels)):
            level = self.levels[depth]
            b = int(h[level.base])
            if level.vector[b] == _OUTSIDE:
                return h, depth
            h = self._trace(level, h, b)
        if np.array_equal(h, self.identity):
            return None, len(self.levels)
        return h, len(self.levels)

    def _trace(self, level, h, b):
        """Return h followed by the inverse of the transversal element
        mapping the base point of the level to b."""
        while b != level.base:
            inverse = self.strong_inverse[level.vector[b]]
            h = inverse[h]
            b = int(inverse[b])
        return h

    def _transversal(self, level, x):
        """Return the transversal element mapping the base point of the
        level to x."""
        labels = []
        while x != level.base:
            index = level.vector[x]
            labels.append(index)
            x = int(self.strong_inverse[index][x])
        u = self.identity
        for index in reversed(labels):
            u = self.strong[index][u]
        return u

    def verify(self, target=None):
        """Complete the chain by sifting all Schreier generators,
        stopping early if the order reaches target."""
        depth = len(self.levels) - 1
        while depth >= 0:
            if target is not None and self.order() == target:
                return
            added_at = self._verify_level(depth)
            if added_at is None:
                depth -= 1
            else:
                depth = min(added_at, len(self.levels) - 1)

    def _verify_level(self, depth):
        """Sift the unchecked Schreier generators of one level; return the
        depth at which a new strong generator was added, or None."""
        level = self.levels[depth]
        i = 0
        while i < level.orbit.size:
            x = int(level.orbit[i])
            i += 1
            u = None
            for index in list(level.generators):
                if (x, index) in level.checked:
                    continue
                level.checked.add((x, index))
                y = int(self.strong[index][x])
                if level.vector[y] == index and int(
                    self.strong_inverse[index][y]
                ) == x:
                    continue
                if u is None:
                    u = self._transversal(level, x)
                h = self._trace(level, self.strong[index][u], y)
                residue, at = self.strip(h, depth + 1)
                if residue is not None:
                    debug.log("bsgs", f"Schreier generator added at depth {at}")
                    self.add_generator(residue, at)
                    return at
        return None


class _ProductReplacement:
    """Random group elements by product replacement."""

    def __init__(self, generators, degree, rng):
        self.rng = rng
        seeds = list(generators) or [np.arange(degree, dtype=np.int32)]
        size = max(REPLACEMENT_STATE, len(seeds))
        self.state = [seeds[i % len(seeds)].copy() for i in range(size)]
        self.accumulator = np.arange(degree, dtype=np.int32)
        for _ in range(REPLACEMENT_WARMUP):
            self.next()

    def next(self):
        """Return the images of the next random element."""
        i, j = self.rng.choice(len(self.state), size=2, replace=False)
        other = self.state[j]
        if self.rng.random() < 0.5:
            other = _inverse_images(other)
        if self.rng.random() < 0.5:
            self.state[i] = other[self.state[i]]
        else:
            self.state[i] = self.state[i][other]
        self.accumulator = self.state[i][self.accumulator]
        return self.accumulator


@dataclass
class BlockSystem:
    """A partition of the points into blocks of equal size."""

    block_map: np.ndarray = field(repr=False)
    block_size: int
    block_count: int

    def blocks(self):
        """Return the blocks as sorted lists of points."""
        result = {}
        for x, block in enumerate(self.block_map.tolist()):
            result.setdefault(block, []).append(x)
        return [result[b] for b in sorted(result)]

    def is_trivial(self):
        """Return True for the single block or the singletons."""
        return self.block_count == 1 or self.block_size == 1


class GroupHandle:
    """
    A permutation group given by generators, with a lazily built
    stabilizer chain.

    :param generators: The generators.
    :type generators: list(Permutation)

    :param degree: The degree; required only without generators.
    :type degree: int, optional

    :param degree_cap: Largest degree for which a stabilizer chain is built.
    :type degree_cap: int, optional

    :param seed: Seed of the randomized Schreier-Sims phase.
    :type seed: int, optional
    """

    def __init__(self, generators, degree=None, degree_cap=None, seed=0):
        self.generators = list(generators)
        if degree is None:
            if not self.generators:
                raise ValueError("a group without generators needs a degree")
            degree = self.generators[0].degree
        for g in self.generators:
            if g.degree != degree:
                raise ValueError("generators of different degrees")
        self.degree = degree
        self.degree_cap = degree_cap or DEFAULT_DEGREE_CAP
        self.seed = seed
        self._chain = None
        self._generator_matrix = None
        self.certified_giant = None

    @property
    def generator_matrix(self):
        """The generators' images as rows of a two-dimensional array"""
        if self._generator_matrix is None:
            if self.generators:
                matrix = np.stack([g.images for g in self.generators])
            else:
                matrix = np.arange(self.degree, dtype=np.int32)[None, :]
            self._generator_matrix = np.ascontiguousarray(matrix)
        return self._generator_matrix

    def is_even(self):
        """Return True if all generators are even permutations."""
        return all(g.parity() == EVEN for g in self.generators)

    def orbit(self, point):
        """Return the sorted orbit of a point."""
        return np.flatnonzero(kernels.orbit_mask(self.generator_matrix, point))

    def is_transitive(self):
        """Return True if the group is transitive."""
        return bool(kernels.orbit_mask(self.generator_matrix, 0).all())

    def largest_possible_order(self):
        """Return the order of the alternating group of the degree if
        all generators are even, else that of the symmetric group."""
        full = factorial(self.degree)
        return full // 2 if self.is_even() else full

    @property
    def chain(self):
        """The stabilizer chain, built on first use"""
        if self._chain is None:
            self._chain = self._build_chain()
        return self._chain

    def _build_chain(self):
        if self.degree > self.degree_cap:
            raise ResourceCapExceeded(
                "stabilizer chain degree", self.degree, self.degree_cap
            )
        chain = StabilizerChain(self.degree)
        for g in self.generators:
            residue, depth = chain.strip(g.images)
            if residue is not None:
                chain.add_generator(residue, depth)
        target = self.largest_possible_order()
        rng = np.random.default_rng(self.seed)
        if chain.levels:
            random_elements = _ProductReplacement(
                [g.images for g in self.generators], self.degree, rng
            )
            streak = 0
            while streak < RANDOM_SIFT_PATIENCE and chain.order() != target:
                residue, depth = chain.strip(random_elements.next())
                if residue is None:
                    streak += 1
                else:
                    chain.add_generator(residue, depth)
                    streak = 0
            debug.log(
                "bsgs",
                lambda: f"randomized phase: base length {len(chain.levels)}, "
                f"order bound {chain.order()}",
            )
            if chain.order() != target:
                chain.verify(target)
        perf.log(f"Stabilizer chain of degree {self.degree}")
        return chain

    def bsgs_build(self):
        """Build the stabilizer chain and return the group order."""
        return self.chain.order()

    def order(self):
        """Return the group order."""
        return self.chain.order()

    def base(self):
        """Return the base of the stabilizer chain."""
        return self.chain.base

    def contains(self, g):
        """Return True if the permutation g is an element of the group."""
        if g.degree != self.degree:
            return False
        if self._chain is None and self.certified_giant == SYM:
            return True
        if self._chain is None and self.certified_giant == ALT:
            return g.parity() == EVEN
        residue, _depth = self.chain.strip(g.images)
        return residue is None

    def random_elements(self, count, seed=None):
        """Yield count random elements of the group."""
        rng = np.random.default_rng(self.seed if seed is None else seed)
        source = _ProductReplacement(
            [g.images for g in self.generators], self.degree, rng
        )
        for _ in range(count):
            yield Permutation(source.next(), check=False)


def translation_generators(d):
    """
    Return the translations x -> x + e_i of (F_2)^d, which generate the
    group of all translations.

    :param d: The dimension.
    :type d: int

    :rtype: list(Permutation)
    """
    if d < 1:
        raise ValueError("translations need a positive dimension")
    points = np.arange(1 << d)
    return [Permutation(points ^ (1 << i), check=False) for i in range(d)]


def conjugate_translations(f):
    """
    Return the conjugates x -> f^-1(f(x) + e_i) of the basic
    translations by f.

    :param f: A permutation of (F_2)^m.
    :type f: SBox or Permutation

    :rtype: list(Permutation)
    """
    images = f.values if isinstance(f, SBox) else f.images
    images = np.asarray(images, dtype=np.int64)
    size = images.size
    d = size.bit_length() - 1
    if 1 << d != size:
        raise ValueError(f"degree {size} is not a power of 2")
    inverse = np.empty_like(images)
    inverse[images] = np.arange(size)
    return [
        Permutation(inverse[images ^ (1 << i)], check=False) for i in range(d)
    ]


def bsgs_build(group):
    """
    Build the stabilizer chain of a group.

    :param group: The group.
    :type group: GroupHandle

    :return: The group order.
    :rtype: int

    :raises ResourceCapExceeded: If the degree exceeds the group's cap.
    """
    return group.bsgs_build()


def _require_transitive(group):
    if not group.is_transitive():
        raise AnalysisError("block systems require a transitive group")


def _block_system(labels):
    _roots, block_map = np.unique(labels, return_inverse=True)
    count = int(block_map.max()) + 1
    return BlockSystem(
        block_map=block_map.astype(np.int64),
        block_size=labels.size // count,
        block_count=count,
    )


def minimal_block_system(group, seed_pair):
    """
    Return the finest block system of a transitive group in which the
    two seed points lie in the same block.

    :param group: The group.
    :type group: GroupHandle

    :param seed_pair: Two distinct points.
    :type seed_pair: tuple(int, int)

    :rtype: BlockSystem
    """
    _require_transitive(group)
    alpha, beta = seed_pair
    labels = kernels.minimal_block(group.generator_matrix, alpha, beta)
    return _block_system(labels)


def is_primitive(group):
    """
    Check that a transitive group has no nontrivial block system.

    :param group: The group.
    :type group: GroupHandle

    :return: The outcome with a nontrivial block system as witness.
    :rtype: PropertyCheck
    """
    _require_transitive(group)
    if group.degree <= 2:
        return PropertyCheck(True)
    beta = kernels.nontrivial_block_seed(group.generator_matrix)
    if beta < 0:
        return PropertyCheck(True)
    blocks = minimal_block_system(group, (0, int(beta)))
    debug.log(
        "blocks",
        f"{blocks.block_count} blocks of size {blocks.block_size} "
        f"joining 0 and {beta}",
    )
    return PropertyCheck(False, blocks)


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def giant_certificate(group, attempts=200, seed=0):
    """
    Search for a proof that a group contains the alternating group of
    its degree: a primitive group containing an element with a cycle of
    prime length p, with degree / 2 < p <= degree - 3, does.

    :param group: The group.
    :type group: GroupHandle

    :param attempts: Number of random elements examined.
    :type attempts: int, optional

    :return: True if a certificate was found; False proves nothing.
    :rtype: bool
    """
    n = group.degree
    if n < 8 or not group.is_transitive() or not is_primitive(group):
        return False
    for g in group.random_elements(attempts, seed):
        for length in g.cycle_type():
            if n < 2 * length <= 2 * (n - 3) and _is_prime(length):
                debug.log("bsgs", f"giant certificate: {length}-cycle")
                return True
    return False


def contains_alternating(group, use_certificate=False):
    """
    Decide whether a group contains the alternating group of its
    degree, by comparing its order with N!/2 and N!.

    :param group: The group.
    :type group: GroupHandle

    :param use_certificate: First look for a cycle-type certificate,
        which avoids the stabilizer chain for giants.
    :type use_certificate: bool, optional

    :return: NO, ALT or SYM.
    :rtype: str
    """
    if not group.is_transitive():
        return NO
    if use_certificate and giant_certificate(group, seed=group.seed):
        group.certified_giant = ALT if group.is_even() else SYM
        return group.certified_giant
    order = group.order()
    full = factorial(group.degree)
    if order == full:
        return SYM
    if 2 * order == full:
        return ALT
    return NO


def is_affine_map(permutation):
    """Return True if a permutation of (F_2)^d is an affine map."""
    images = permutation.images.astype(np.int64)
    d = images.size.bit_length() - 1
    if 1 << d != images.size:
        raise ValueError(f"degree {images.size} is not a power of 2")
    linear = images ^ images[0]
    matrix = Gf2Matrix(d, d, tuple(int(linear[1 << i]) for i in range(d)))
    return bool(np.array_equal(matrix.apply_all(np.arange(images.size)), linear))


def is_elementary_abelian_regular(group):
    """Return True if the group is elementary abelian and regular."""
    gens = group.generators
    for g in gens:
        if not (g * g).is_identity():
            return False
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            if g * h != h * g:
                return False
    return group.is_transitive() and group.order() == group.degree


def classify_primitive(group, translations):
    """
    Classify a primitive group of degree 2^d containing a regular
    elementary abelian subgroup.

    :param group: The primitive group G.
    :type group: GroupHandle

    :param translations: A regular elementary abelian subgroup T of G.
    :type translations: GroupHandle

    :return: AFFINE, GIANT_ALT, GIANT_SYM or PRODUCT_ACTION.
    :rtype: str

    :raises ClassificationError: If the hypotheses fail, or the outcome
        contradicts the absence of product action groups for d <= 5.
    """
    d = group.degree.bit_length() - 1
    if 1 << d != group.degree:
        raise ClassificationError(f"degree {group.degree} is not a power of 2")
    if not group.is_transitive() or not is_primitive(group):
        raise ClassificationError("the group is not primitive")
    if not is_elementary_abelian_regular(translations):
        raise ClassificationError(
            "the subgroup is not regular elementary abelian"
        )
    affine = all(is_affine_map(g) for g in group.generators)
    giant = NO if affine else contains_alternating(group, use_certificate=True)
    if not all(group.contains(t) for t in translations.generators):
        raise ClassificationError("the subgroup is not contained in the group")
    if affine:
        return AFFINE
    if giant == ALT:
        return GIANT_ALT
    if giant == SYM:
        return GIANT_SYM
    if d <= 5:
        raise ClassificationError(
            f"a non-affine primitive group of degree 2^{d} must be a giant"
        )
    return PRODUCT_ACTION


def check_condition_2(f, max_width=5, seed=0):
    """
    Check whether the group generated by the translations of (F_2)^m
    and their conjugates by f contains Alt((F_2)^m).

    :param f: The brick.
    :type f: SBox

    :param max_width: Largest accepted brick width.
    :type max_width: int, optional

    :raises ResourceCapExceeded: If the width of f exceeds max_width.
    """
    if f.m > max_width:
        raise ResourceCapExceeded("brick width", f.m, max_width)
    group = GroupHandle(
        translation_generators(f.m) + conjugate_translations(f), seed=seed
    )
    return contains_alternating(group, use_certificate=True) != NO


@dataclass
class AffinePropositionReport:
    """Outcome of checking that primitive groups generated by two regular
    elementary abelian subgroups are giants."""

    d: int
    trials: int = 0
    primitive: int = 0
    violations: list = field(default_factory=list)


def validate_affine_proposition(d, trials, seed):
    """
    For random permutations g fixing 0, check that every primitive
    <T, gTg^-1> has order (2^d)!/2 or (2^d)!.

    :param d: The dimension, 3, 4 or 5.
    :type d: int

    :param trials: Number of random permutations.
    :type trials: int

    :param seed: Seed of the random number generator.
    :type seed: int

    :rtype: AffinePropositionReport
    """
    if d not in (3, 4, 5):
        raise ValueError(f"dimension {d} is not 3, 4 or 5")
    n = 1 << d
    rng = np.random.default_rng(seed)
    report = AffinePropositionReport(d)
    translations = translation_generators(d)
    full = factorial(n)
    for trial in range(trials):
        images = np.concatenate(([0], rng.permutation(n - 1) + 1))
        g = Permutation(images, check=False)
        group = GroupHandle(translations + conjugate_translations(g), seed=trial)
        report.trials += 1
        if trial and trial % 1000 == 0:
            debug.log("progress", f"{trial} groups of degree {n} checked")
        if not is_primitive(group):
            continue
        report.primitive += 1
        if group.order() not in (full // 2, full):
            report.violations.append(images.tolist())
    return report


def naive_closure_order(generators, limit=10**6):
    """
    Return the order of the group generated by the permutations,
    enumerating all its elements.

    :raises ResourceCapExceeded: If the group has more than limit elements.
    """
    degree = generators[0].degree if generators else 1
    identity = tuple(range(degree))
    seen = {identity}
    queue = deque([identity])
    images = [g.images.tolist() for g in generators]
    while queue:
        element = queue.popleft()
        for g in images:
            product = tuple(g[x] for x in element)
            if product not in seen:
                seen.add(product)
                if len(seen) > limit:
                    raise ResourceCapExceeded("closure size", len(seen), limit)
                queue.append(product)
    return len(seen)
