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
"""Vectorial Boolean functions: S-box tables, derivatives, components,
algebraic normal form, Walsh spectrum, nonlinearity and parity."""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from tbgroup import kernels
from tbgroup.common import InputError
from tbgroup.gf2 import Gf2Vec, parity, popcount

# Widest supported lookup table
MAX_WIDTH = 16

EVEN = "even"
ODD = "odd"

# Irreducible polynomials defining F_{2^m} for the inversion brick
FIELD_POLYNOMIALS = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


def _bits_of(v):
    return v.bits if isinstance(v, Gf2Vec) else int(v)


@dataclass(frozen=True)
class SBox:
    """A lookup table mapping (F_2)^m to itself, normally a permutation.

    :param m: The bit width.
    :type m: int

    :param table: The 2^m images f(0), f(1), ...
    :type table: tuple

    :param allow_non_bijective: Accept tables that are not permutations.
    :type allow_non_bijective: bool, optional
    """

    m: int
    table: tuple
    allow_non_bijective: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not 2 <= self.m <= MAX_WIDTH:
            raise InputError(f"S-box width {self.m} is not in [2, {MAX_WIDTH}]")
        size = 1 << self.m
        if len(self.table) != size:
            raise InputError(
                f"an {self.m}-bit S-box needs {size} entries, "
                f"not {len(self.table)}"
            )
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        for x, v in enumerate(self.table):
            if not 0 <= v < size:
                raise InputError(f"entry {x} value {v} is out of range")
        if not self.allow_non_bijective and len(set(self.table)) != size:
            raise InputError("the S-box table is not a permutation")

    @classmethod
    def from_hex(cls, text):
        """Return the 4-bit S-box given as 16 hexadecimal digits,
        read left to right as f(0), ..., f(15)."""
        text = text.strip()
        if len(text) != 16:
            raise InputError(f"'{text}' is not a string of 16 hexadecimal digits")
        try:
            return cls(4, tuple(int(c, 16) for c in text))
        except ValueError:
            raise InputError(f"'{text}' is not a hexadecimal string") from None

    @classmethod
    def identity(cls, m):
        """Return the identity map on (F_2)^m."""
        return cls(m, tuple(range(1 << m)))

    @cached_property
    def values(self):
        """The table as a read-only numpy array"""
        values = np.array(self.table, dtype=np.int64)
        values.setflags(write=False)
        return values

    @property
    def size(self):
        """Number of table entries"""
        return 1 << self.m

    def __call__(self, x):
        return self.table[_bits_of(x)]

    def to_hex(self):
        """Return the table as a hexadecimal digit string (4-bit only)."""
        return "".join(f"{v:X}" for v in self.table)

    def is_normalized(self):
        """Return True if the map fixes 0."""
        return self.table[0] == 0

    def inverse(self):
        """Return the inverse permutation."""
        out = [0] * self.size
        for x, v in enumerate(self.table):
            out[v] = x
        return SBox(self.m, tuple(out))

    def component(self, v):
        """Return the component x -> <v, f(x)>."""
        v = _bits_of(v)
        bits = parity(self.values & v)
        return BoolComponent(self.m, tuple(int(b) for b in bits))

    def components(self):
        """Return the components for all nonzero output masks."""
        return [self.component(v) for v in range(1, self.size)]


@dataclass(frozen=True)
class BoolComponent:
    """A Boolean function on (F_2)^m given by its truth table."""

    m: int
    truth_table: tuple

    def __post_init__(self):
        if len(self.truth_table) != 1 << self.m:
            raise InputError(
                f"a truth table on {self.m} variables needs {1 << self.m} bits"
            )

    @property
    def values(self):
        """The truth table as a numpy array"""
        return np.array(self.truth_table, dtype=np.int64)


def ddt(f):
    """Return the difference distribution table of f as a 2^m x 2^m
    array; entry [u, v] counts the x with f(x + u) + f(x) = v."""
    return kernels.ddt(np.ascontiguousarray(f.values))


def derivative_values(f, u):
    """Return the numpy array of f(x + u) + f(x) over all x."""
    u = _bits_of(u)
    values = f.values
    return values[np.arange(f.size) ^ u] ^ values


def derivative_image(f, u):
    """
    Return the image of the derivative of f in direction u.

    :param f: The function.
    :type f: SBox

    :param u: A nonzero direction.
    :type u: Gf2Vec or int

    :return: {f(x + u) + f(x) : x in (F_2)^m}
    :rtype: frozenset(Gf2Vec)

    :raises ValueError: If u is zero.
    """
    if _bits_of(u) == 0:
        raise ValueError("the derivative in direction 0 is degenerate")
    if _bits_of(u) >= f.size:
        raise ValueError(f"direction {_bits_of(u)} is outside (F_2)^{f.m}")
    if isinstance(u, Gf2Vec) and u.k != f.m:
        raise ValueError(f"direction of length {u.k} for an {f.m}-bit S-box")
    return frozenset(
        Gf2Vec(int(v), f.m) for v in np.unique(derivative_values(f, u))
    )


def normalize_zero(f):
    """Return x -> f(x) + f(0), which fixes 0."""
    if f.table[0] == 0:
        return f
    c = f.table[0]
    return SBox(
        f.m,
        tuple(v ^ c for v in f.table),
        allow_non_bijective=f.allow_non_bijective,
    )


def walsh_spectrum(f):
    """
    Return the Walsh spectrum of f as a 2^m x 2^m integer array with
    entry [v, a] equal to the sum over x of
    (-1)^(<v, f(x)> + <a, x>).
    Row 0 is the trivial component, kept so that output masks index
    rows directly.
    """
    masks = np.arange(f.size, dtype=np.int64)
    signs = 1 - 2 * parity(masks[:, None] & f.values[None, :])
    signs = np.ascontiguousarray(signs, dtype=np.int64)
    kernels.fwht_rows(signs)
    return signs


def _component_walsh(c):
    signs = np.ascontiguousarray(1 - 2 * c.values[None, :], dtype=np.int64)
    kernels.fwht_rows(signs)
    return signs[0]


def component_nonlinearity(c):
    """Return the Hamming distance of a Boolean function to the set of
    affine functions."""
    return (1 << (c.m - 1)) - int(np.abs(_component_walsh(c)).max()) // 2


def nonlinearity(f):
    """
    Return the nonlinearity of f: the minimum, over its nonzero
    components, of the distance to the affine functions.
    It is zero exactly when some component is affine.

    :param f: The function.
    :type f: SBox

    :rtype: int
    """
    spectrum = walsh_spectrum(f)
    return (1 << (f.m - 1)) - int(np.abs(spectrum[1:]).max()) // 2


def anf(c):
    """Return the algebraic normal form coefficients of a Boolean
    function (binary Moebius transform); entry i is the coefficient
    of the monomial formed by the variables set in i."""
    coefficients = c.values.copy()
    for i in range(c.m):
        view = coefficients.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return coefficients


def anf_degree(c):
    """Return the algebraic degree of a Boolean function; the zero
    function has degree 0."""
    monomials = np.nonzero(anf(c))[0]
    if monomials.size == 0:
        return 0
    return int(popcount(monomials).max())


def permutation_parity(p):
    """
    Return the parity of a permutation, EVEN or ODD, through its cycle
    decomposition.

    :param p: An S-box, a permutation exposing its images, or a linear
        layer, whose parity is found by elimination.
    :type p: SBox or Permutation or LinearLayer
    """
    if hasattr(p, "matrix"):
        return EVEN if p.parity() == 0 else ODD
    images = p.values if isinstance(p, SBox) else p.images
    images = np.ascontiguousarray(images)
    cycles = kernels.cycle_count(images)
    return EVEN if (images.shape[0] - cycles) % 2 == 0 else ODD


def inversion_sbox(m):
    """Return the field inversion x -> x^(2^m - 2) of F_{2^m}, which
    maps 0 to 0."""
    if m not in FIELD_POLYNOMIALS:
        raise InputError(f"no field polynomial for width {m}")
    modulus = FIELD_POLYNOMIALS[m]
    size = 1 << m

    def multiply(a, b):
        result = 0
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a & size:
                a ^= modulus
        return result

    table = [0] * size
    for x in range(1, size):
        for y in range(1, size):
            if multiply(x, y) == 1:
                table[x] = y
                break
    return SBox(m, tuple(table))


def affine_sbox(matrix, constant=0):
    """Return the affine permutation x -> xM + c for an invertible
    square Gf2Matrix M."""
    images = matrix.apply_all(np.arange(1 << matrix.nrows)) ^ constant
    return SBox(matrix.nrows, tuple(int(v) for v in images))


def random_tables(m, count, seed, batch=4096):
    """Yield numpy arrays with rows of uniformly random permutations of
    (F_2)^m, count rows in total."""
    rng = np.random.default_rng(seed)
    base = np.arange(1 << m, dtype=np.int64)
    while count > 0:
        rows = min(batch, count)
        yield rng.permuted(np.tile(base, (rows, 1)), axis=1)
        count -= rows


def random_permutations(m, count, seed):
    """
    Yield count uniformly random m-bit S-boxes.

    :param m: The bit width.
    :type m: int

    :param count: Number of S-boxes to generate.
    :type count: int

    :param seed: Seed of the random number generator.
    :type seed: int
    """
    for tables in random_tables(m, count, seed):
        for row in tables:
            yield SBox(m, tuple(row.tolist()))
