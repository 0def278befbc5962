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
"""S-box predicates: differential uniformity, weak uniformity,
(strong) anti-invariance, anti-crookedness and the affine hull of
derivative images."""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from tbgroup import debug, kernels
from tbgroup.common import InputError, PropertyCheck, warn
from tbgroup.gf2 import (
    Gf2Subspace,
    Gf2Vec,
    affine_hull,
    enumerate_subspaces,
    orthogonal_complement,
    parity,
)
from tbgroup.vboolfn import (
    anf_degree,
    derivative_values,
    nonlinearity,
    normalize_zero,
)

# Default number of random S-boxes checked by the 4-uniformity fact suite
DEFAULT_FACT_TRIALS = 10**6

# Items between progress messages of corpus scans
PROGRESS_INTERVAL = 100_000


@dataclass(frozen=True)
class UniformityProfile:
    """Differential uniformity of an S-box and the sizes of its
    derivative images."""

    m: int
    delta: int
    weak_bounds: dict = field(hash=False)
    is_weakly_delta: dict = field(hash=False)

    @property
    def min_image_size(self):
        """Smallest derivative image size over nonzero directions"""
        return min(self.weak_bounds.values())


@dataclass(frozen=True)
class AntiInvarianceReport:
    """Largest r for which an S-box is (strongly) r-anti-invariant.
    The witness (U, W) has f(U) = W with U a proper subspace of
    dimension m - max_r_strong - 1; it is None when max_r_strong is
    m - 1."""

    m: int
    max_r_strong: int
    max_r_plain: int
    witness: tuple = None
    normalized: bool = False


@dataclass(frozen=True)
class VaSpace:
    """The space V_a of output masks whose component of the derivative
    in direction a is constant, with the resulting affine hull."""

    a: Gf2Vec
    Va: Gf2Subspace
    hull_offset: Gf2Vec
    hull_dir: Gf2Subspace


def _image_counts(f):
    table = kernels.ddt(np.ascontiguousarray(f.values))
    return table, (table[1:] > 0).sum(axis=1)


def differential_uniformity(f):
    """
    Return the differential uniformity profile of f.

    :param f: The function, a permutation.
    :type f: SBox

    :rtype: UniformityProfile
    """
    table, images = _image_counts(f)
    half = 1 << (f.m - 1)
    weak_bounds = {u: int(images[u - 1]) for u in range(1, f.size)}
    is_weakly = {}
    delta = 1
    while delta <= f.size:
        is_weakly[delta] = bool(np.all(images * delta > half))
        delta *= 2
    return UniformityProfile(
        m=f.m,
        delta=int(table[1:].max()),
        weak_bounds=weak_bounds,
        is_weakly_delta=is_weakly,
    )


def is_weakly_delta_uniform(f, delta):
    """
    Return True if every derivative image of f has more than
    2^(m-1) / delta elements.

    :param f: The function.
    :type f: SBox

    :param delta: The uniformity bound.
    :type delta: int
    """
    if delta < 1:
        raise ValueError(f"uniformity bound {delta} is not positive")
    _table, images = _image_counts(f)
    return bool(np.all(images * delta > 1 << (f.m - 1)))


def _check_r(f, r):
    if not 1 <= r < f.m:
        raise ValueError(f"r = {r} is not in [1, {f.m - 1}]")


def _image_if_subspace(values, subspace, m):
    """Return f(U) if it is a subspace of the dimension of U, else None;
    f must fix 0."""
    image = values[subspace.elements()]
    span = Gf2Subspace.span(m, image.tolist())
    if span.dim == subspace.dim:
        return span
    return None


def is_strongly_r_anti_invariant(f, r):
    """
    Check that no subspace U of dimension at least m - r, other than
    the whole space, is mapped onto a subspace.
    The function is first normalized to fix 0; the check records whether
    this changed the table.

    :param f: The function.
    :type f: SBox

    :param r: The level, 1 <= r < m.
    :type r: int

    :return: The outcome with a violating pair (U, W) as witness.
    :rtype: PropertyCheck
    """
    _check_r(f, r)
    normalized = normalize_zero(f)
    changed = normalized is not f
    values = normalized.values
    for dim in range(f.m - 1, f.m - r - 1, -1):
        for subspace in enumerate_subspaces(f.m, dim):
            image = _image_if_subspace(values, subspace, f.m)
            if image is not None:
                debug.log("witness", f"f({subspace}) = {image}")
                return PropertyCheck(False, (subspace, image), changed)
    return PropertyCheck(True, None, changed)


def is_r_anti_invariant(f, r):
    """
    Check that no subspace U of dimension at least m - r, other than
    the whole space, is invariant under f.

    :param f: The function; it must fix 0.
    :type f: SBox

    :param r: The level, 1 <= r < m.
    :type r: int

    :return: The outcome with an invariant subspace as witness.
    :rtype: PropertyCheck

    :raises InputError: If f does not fix 0.
    """
    _check_r(f, r)
    if not f.is_normalized():
        raise InputError("r-anti-invariance requires f(0) = 0; normalize first")
    values = f.values
    for dim in range(f.m - 1, f.m - r - 1, -1):
        for subspace in enumerate_subspaces(f.m, dim):
            elements = subspace.elements()
            if np.array_equal(np.sort(values[elements]), np.sort(elements)):
                debug.log("witness", f"f({subspace}) = {subspace}")
                return PropertyCheck(False, subspace)
    return PropertyCheck(True)


def anti_invariance_report(f):
    """
    Return the largest levels of strong and plain anti-invariance of
    f, after normalizing it to fix 0.

    :param f: The function.
    :type f: SBox

    :rtype: AntiInvarianceReport
    """
    normalized = normalize_zero(f)
    values = normalized.values
    strong = plain = None
    witness = None
    for dim in range(f.m - 1, 0, -1):
        for subspace in enumerate_subspaces(f.m, dim):
            image = _image_if_subspace(values, subspace, f.m)
            if image is None:
                continue
            if strong is None:
                strong = dim
                witness = (subspace, image)
            if image == subspace:
                plain = dim
                break
        if plain is not None:
            break
    return AntiInvarianceReport(
        m=f.m,
        max_r_strong=f.m - 1 if strong is None else f.m - 1 - strong,
        max_r_plain=f.m - 1 if plain is None else f.m - 1 - plain,
        witness=witness,
        normalized=normalized is not f,
    )


def is_anti_crooked(f):
    """
    Check that no derivative image of f is an affine subspace.

    :param f: The function.
    :type f: SBox

    :return: The outcome with an offending direction a as witness.
    :rtype: PropertyCheck
    """
    for a in range(1, f.size):
        image = np.unique(derivative_values(f, a))
        _offset, direction = affine_hull(image.tolist(), f.m)
        if image.size == direction.size:
            debug.log("witness", f"Im(D_{a}) is an affine subspace")
            return PropertyCheck(False, Gf2Vec(a, f.m))
    return PropertyCheck(True)


def va_space(f, a):
    """
    Return the space V_a and the affine hull f(a) + f(0) + V_a^perp of
    the image of the derivative of f in direction a.

    :param f: The function.
    :type f: SBox

    :param a: A nonzero direction.
    :type a: Gf2Vec or int

    :rtype: VaSpace
    """
    a = a if isinstance(a, Gf2Vec) else Gf2Vec(int(a), f.m)
    if a.is_zero():
        raise ValueError("V_a is undefined for a = 0")
    derivative = derivative_values(f, a.bits)
    masks = np.arange(f.size, dtype=np.int64)
    components = parity(masks[:, None] & derivative[None, :])
    constant = np.all(components == components[:, :1], axis=1)
    members = masks[constant].tolist()
    space = Gf2Subspace.span(f.m, members)
    assert space.size == len(members), "V_a is not closed under addition"
    hull_dir = orthogonal_complement(space)
    canonical = hull_dir.coset_minimum(int(derivative[0]))
    return VaSpace(
        a=a,
        Va=space,
        hull_offset=Gf2Vec(canonical, f.m),
        hull_dir=hull_dir,
    )


def va_hull_matches(f, a):
    """Return True if the V_a formula gives exactly the affine hull of
    the image of the derivative of f in direction a."""
    space = va_space(f, a)
    image = np.unique(derivative_values(f, space.a.bits)).tolist()
    offset, direction = affine_hull(image, f.m)
    return direction == space.hull_dir and direction.contains(
        offset.bits ^ space.hull_offset.bits
    )


@dataclass
class FactReport:
    """Outcome of scanning a corpus for 4-uniform maps that are not
    strongly 1-anti-invariant."""

    checked: int = 0
    four_uniform: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)


def check_fact_4uniform(corpus, batch=4096):
    """
    Verify over a corpus of 4-bit permutations that every 4-uniform
    member is strongly 1-anti-invariant.

    :param corpus: The S-boxes to check; members of another width are
        skipped with a warning.
    :type corpus: iterable(SBox)

    :param batch: Number of S-boxes whose uniformity is computed in
        one kernel call.
    :type batch: int

    :rtype: FactReport
    """
    report = FactReport()
    pending = []

    def flush():
        tables = np.ascontiguousarray(np.stack([f.values for f in pending]))
        for f, best in zip(pending, kernels.max_ddt_entries(tables)):
            if best > 4:
                continue
            report.four_uniform += 1
            if not is_strongly_r_anti_invariant(f, 1):
                report.violations.append(f)
        pending.clear()

    for f in corpus:
        if f.m != 4:
            warn(f"skipping {f.m}-bit S-box in a 4-bit corpus")
            report.skipped += 1
            continue
        report.checked += 1
        if report.checked % PROGRESS_INTERVAL == 0:
            debug.log("progress", f"{report.checked} S-boxes checked")
        pending.append(f)
        if len(pending) >= batch:
            flush()
    if pending:
        flush()
    return report


@dataclass(frozen=True)
class BrickFacts:
    """All per-brick properties consumed by the theorem engine."""

    m: int
    normalized: bool
    delta: int
    min_image_size: int
    max_r_strong: int
    max_r_plain: int
    anti_crooked: bool
    ac_witness: object
    nonlinearity: int
    min_anf_degree: int

    def is_uniform(self, delta):
        """Return True if the brick is delta-uniform."""
        return self.delta <= delta

    def is_weakly_uniform(self, delta):
        """Return True if the brick is weakly delta-uniform."""
        return self.min_image_size * delta > 1 << (self.m - 1)

    def as_dict(self):
        """Return the facts as a dictionary for reports."""
        return {
            "delta": self.delta,
            "min_derivative_image": self.min_image_size,
            "max_r_strong": self.max_r_strong,
            "max_r_plain": self.max_r_plain,
            "anti_crooked": self.anti_crooked,
            "nonlinearity": self.nonlinearity,
            "min_anf_degree": self.min_anf_degree,
            "normalized": self.normalized,
        }


@lru_cache(maxsize=64)
def brick_facts(f):
    """
    Return the properties of a brick used by the theorem engine.
    Results are cached per table, since bricks usually repeat.

    :param f: The brick.
    :type f: SBox

    :rtype: BrickFacts
    """
    profile = differential_uniformity(f)
    anti = anti_invariance_report(f)
    crooked = is_anti_crooked(f)
    return BrickFacts(
        m=f.m,
        normalized=anti.normalized,
        delta=profile.delta,
        min_image_size=profile.min_image_size,
        max_r_strong=anti.max_r_strong,
        max_r_plain=anti.max_r_plain,
        anti_crooked=crooked.holds,
        ac_witness=crooked.witness,
        nonlinearity=nonlinearity(f),
        min_anf_degree=min(anf_degree(c) for c in f.components()),
    )
