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
"""Bit-packed linear algebra over the field with two elements.

Vectors of (F_2)^k are packed into integers: coordinate i is bit i, so
that the coordinate tuple (1, 1, 0) is the integer 3.
Matrices act on row vectors (v -> vM); row i of a matrix is the image
of the basis vector e_i.
Subspaces are kept in a canonical reduced row-echelon form, so that
equal subspaces have identical bases.
"""

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from tbgroup.common import DimensionMismatch, InputError, ResourceCapExceeded

# Largest ambient dimension for exhaustive subspace enumeration
MAX_ENUMERATION_DIMENSION = 8


def lowest_bit(value):
    """Return the index of the lowest set bit of a nonzero integer."""
    return (value & -value).bit_length() - 1


def popcount(values):
    """Return the number of set bits of every element of an integer
    numpy array (of at most 64 bits)."""
    x = np.asarray(values).astype(np.uint64)
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + (
        (x >> np.uint64(2)) & np.uint64(0x3333333333333333)
    )
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return ((x * np.uint64(0x0101010101010101)) >> np.uint64(56)).astype(
        np.int64
    )


def parity(values):
    """Return the parity (0 or 1) of the set bits of every element of
    an integer numpy array."""
    return popcount(values) & 1


def dot(a, b):
    """Return the inner product of two packed vectors."""
    return bin(a & b).count("1") & 1


@dataclass(frozen=True)
class Gf2Vec:
    """An element of (F_2)^k."""

    bits: int
    k: int

    def __post_init__(self):
        if self.k < 0 or self.bits < 0 or self.bits >> self.k:
            raise ValueError(f"{self.bits} is not a vector of length {self.k}")

    @classmethod
    def zero(cls, k):
        """Return the zero vector of (F_2)^k."""
        return cls(0, k)

    @classmethod
    def unit(cls, k, i):
        """Return the basis vector e_i of (F_2)^k (coordinates from 0)."""
        return cls(1 << i, k)

    @classmethod
    def from_coords(cls, coords):
        """Return the vector with the specified coordinate sequence;
        element 0 of the sequence is coordinate 0."""
        bits = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError(f"coordinate {c} is not in F_2")
            bits |= c << i
        return cls(bits, len(coords))

    def coords(self):
        """Return the coordinates as a tuple."""
        return tuple((self.bits >> i) & 1 for i in range(self.k))

    def is_zero(self):
        """Return True for the zero vector."""
        return self.bits == 0

    def weight(self):
        """Return the Hamming weight."""
        return bin(self.bits).count("1")

    def __add__(self, other):
        if self.k != other.k:
            raise DimensionMismatch(
                f"cannot add vectors of lengths {self.k} and {other.k}"
            )
        return Gf2Vec(self.bits ^ other.bits, self.k)

    __xor__ = __add__

    def __int__(self):
        return self.bits

    def __str__(self):
        return "".join(str(c) for c in self.coords())


def _ambient(vectors, k):
    """Return the packed form of vectors and their common length.
    The vectors can be Gf2Vec objects, or integers when k is given."""
    bits = []
    for v in vectors:
        if isinstance(v, Gf2Vec):
            if k is None:
                k = v.k
            elif v.k != k:
                raise DimensionMismatch(
                    f"vector of length {v.k} in a set of length {k}"
                )
            bits.append(v.bits)
        else:
            if k is None:
                raise ValueError("packed vectors require an ambient dimension")
            if v < 0 or v >> k:
                raise DimensionMismatch(f"{v} does not fit in {k} bits")
            bits.append(int(v))
    if k is None:
        raise ValueError("an empty vector list needs an ambient dimension")
    return bits, k


def _echelon(rows):
    """Return the canonical reduced row-echelon basis of the span of
    the packed rows: pivots are the lowest set bits, every pivot column
    is zero in the other rows, rows are ordered by ascending pivot."""
    basis = {}
    for v in rows:
        for p, row in basis.items():
            if (v >> p) & 1:
                v ^= row
        if not v:
            continue
        p = lowest_bit(v)
        for q, row in basis.items():
            if (row >> p) & 1:
                basis[q] = row ^ v
        basis[p] = v
    return tuple(basis[p] for p in sorted(basis))


@dataclass(frozen=True)
class Gf2Subspace:
    """A subspace of (F_2)^k, given by its canonical packed basis.
    Construct instances through :meth:`span` or :func:`rref`."""

    k: int
    basis: tuple

    @classmethod
    def span(cls, k, vectors):
        """Return the span of the specified packed vectors."""
        return cls(k, _echelon(vectors))

    @classmethod
    def full(cls, k):
        """Return (F_2)^k."""
        return cls(k, tuple(1 << i for i in range(k)))

    @classmethod
    def zero(cls, k):
        """Return the zero subspace of (F_2)^k."""
        return cls(k, ())

    @classmethod
    def coordinate(cls, k, coordinates):
        """Return the span of the basis vectors with the specified
        coordinate indices."""
        return cls(k, tuple(1 << i for i in sorted(set(coordinates))))

    @property
    def dim(self):
        """Dimension of the subspace"""
        return len(self.basis)

    @property
    def size(self):
        """Number of elements of the subspace"""
        return 1 << len(self.basis)

    @property
    def pivots(self):
        """Pivot columns of the canonical basis"""
        return tuple(lowest_bit(row) for row in self.basis)

    def basis_vectors(self):
        """Return the basis as a list of Gf2Vec."""
        return [Gf2Vec(row, self.k) for row in self.basis]

    def is_full(self):
        """Return True if this is the whole ambient space."""
        return len(self.basis) == self.k

    def reduce(self, v):
        """Return the packed vector v reduced modulo the subspace."""
        for row in self.basis:
            if (v >> lowest_bit(row)) & 1:
                v ^= row
        return v

    def contains(self, v):
        """Return True if the vector (Gf2Vec or packed) lies in the
        subspace."""
        if isinstance(v, Gf2Vec):
            if v.k != self.k:
                raise DimensionMismatch(
                    f"vector of length {v.k} tested against (F_2)^{self.k}"
                )
            v = v.bits
        return self.reduce(v) == 0

    def __contains__(self, v):
        return self.contains(v)

    def join(self, other):
        """Return the sum of two subspaces."""
        if other.k != self.k:
            raise DimensionMismatch(
                f"cannot join subspaces of (F_2)^{self.k} and (F_2)^{other.k}"
            )
        return Gf2Subspace.span(self.k, self.basis + other.basis)

    def coset_minimum(self, v):
        """Return the element of the coset v + self with the smallest
        integer encoding, the canonical representative of the coset."""
        v = v.bits if isinstance(v, Gf2Vec) else int(v)
        rows = []
        for b in self.basis:
            for r in rows:
                b = min(b, b ^ r)
            rows.append(b)
            rows.sort(reverse=True)
        for r in rows:
            v = min(v, v ^ r)
        return v

    def elements(self):
        """Return a numpy array with all elements of the subspace.
        The element at index i is the combination of the basis rows
        selected by the bits of i."""
        dtype = np.int64 if self.k < 63 else np.uint64
        out = np.zeros(1, dtype=dtype)
        for row in self.basis:
            out = np.concatenate((out, out ^ dtype(row)))
        return out

    def __str__(self):
        rows = ", ".join(str(v) for v in self.basis_vectors())
        return f"<{rows}>"


def rref(vectors, k=None):
    """
    Return the span of the specified vectors in canonical reduced
    row-echelon form.

    :param vectors: The spanning vectors, as Gf2Vec objects or, when
        k is given, as packed integers.
    :type vectors: iterable

    :param k: The ambient dimension.
    :type k: int, optional

    :raises DimensionMismatch: If the vectors have different lengths.
    """
    bits, k = _ambient(vectors, k)
    return Gf2Subspace.span(k, bits)


@dataclass(frozen=True)
class Gf2Matrix:
    """An nrows x ncols matrix over F_2 with packed rows."""

    nrows: int
    ncols: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise DimensionMismatch(
                f"{len(self.rows)} rows given for a {self.nrows}-row matrix"
            )
        for row in self.rows:
            if row < 0 or row >> self.ncols:
                raise DimensionMismatch(f"row {row} has more than {self.ncols} columns")

    @classmethod
    def identity(cls, k):
        """Return the k x k identity matrix."""
        return cls(k, k, tuple(1 << i for i in range(k)))

    @classmethod
    def from_bit_rows(cls, strings):
        """Return the matrix whose rows are given as strings of 0 and 1;
        the leftmost character is coordinate 0."""
        rows = []
        ncols = None
        for s in strings:
            if ncols is None:
                ncols = len(s)
            elif len(s) != ncols:
                raise DimensionMismatch(f"row '{s}' does not have {ncols} columns")
            rows.append(Gf2Vec.from_coords([int(c) for c in s]).bits)
        return cls(len(rows), ncols or 0, tuple(rows))

    @classmethod
    def permutation(cls, images):
        """Return the matrix mapping e_i to e_images[i]."""
        images = [int(i) for i in images]
        if sorted(images) != list(range(len(images))):
            raise InputError("the coordinate map is not a permutation")
        return cls(len(images), len(images), tuple(1 << i for i in images))

    def to_bit_rows(self):
        """Return the rows as strings of 0 and 1, coordinate 0 first."""
        return [str(Gf2Vec(row, self.ncols)) for row in self.rows]

    def apply(self, v):
        """Return vM for a Gf2Vec or packed vector v."""
        if isinstance(v, Gf2Vec):
            if v.k != self.nrows:
                raise DimensionMismatch(
                    f"vector of length {v.k} applied to a {self.nrows}-row matrix"
                )
            return Gf2Vec(self.apply(v.bits), self.ncols)
        out = 0
        i = 0
        while v:
            if v & 1:
                out ^= self.rows[i]
            v >>= 1
            i += 1
        return out

    def apply_all(self, points):
        """Return vM for every packed vector v of the numpy array points."""
        points = np.asarray(points, dtype=np.int64)
        out = np.zeros_like(points)
        for i, row in enumerate(self.rows):
            out ^= np.where(((points >> i) & 1) == 1, row, 0)
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} "
                f"by {other.nrows}x{other.ncols}"
            )
        return Gf2Matrix(
            self.nrows,
            other.ncols,
            tuple(other.apply(row) for row in self.rows),
        )

    def transpose(self):
        """Return the transposed matrix."""
        rows = []
        for j in range(self.ncols):
            col = 0
            for i, row in enumerate(self.rows):
                col |= ((row >> j) & 1) << i
            rows.append(col)
        return Gf2Matrix(self.ncols, self.nrows, tuple(rows))

    def rank(self):
        """Return the rank of the matrix."""
        return len(_echelon(self.rows))

    def is_invertible(self):
        """Return True if the matrix is square and nonsingular."""
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self):
        """Return the inverse matrix.

        :raises InputError: If the matrix is singular.
        """
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices have inverses")
        n = self.nrows
        mask = (1 << n) - 1
        work = [row | (1 << (n + i)) for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if (work[r] >> col) & 1), None
            )
            if pivot is None:
                raise InputError("the matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            for r in range(n):
                if r != col and (work[r] >> col) & 1:
                    work[r] ^= work[col]
        assert all(work[i] & mask == 1 << i for i in range(n))
        return Gf2Matrix(n, n, tuple(row >> n for row in work))


def subspace_image(subspace, matrix):
    """
    Return the image {vM : v in S} of a subspace under a matrix.

    :param subspace: The subspace S.
    :type subspace: Gf2Subspace

    :param matrix: The matrix M, acting on row vectors.
    :type matrix: Gf2Matrix

    :raises DimensionMismatch: If S does not live in the row space of M.
    """
    if subspace.k != matrix.nrows:
        raise DimensionMismatch(
            f"subspace of (F_2)^{subspace.k} mapped by a "
            f"{matrix.nrows}x{matrix.ncols} matrix"
        )
    return Gf2Subspace.span(
        matrix.ncols, [matrix.apply(row) for row in subspace.basis]
    )


def gaussian_binomial(k, j):
    """Return the number of j-dimensional subspaces of (F_2)^k."""
    if j < 0 or j > k:
        return 0
    numerator = 1
    denominator = 1
    for i in range(j):
        numerator *= (1 << (k - i)) - 1
        denominator *= (1 << (i + 1)) - 1
    return numerator // denominator


def _dimensions(k, dim_filter):
    if dim_filter is None:
        return range(k + 1)
    if isinstance(dim_filter, int):
        return [dim_filter] if 0 <= dim_filter <= k else []
    return sorted(d for d in set(dim_filter) if 0 <= d <= k)


def enumerate_subspaces(k, dim_filter=None):
    """
    Yield every subspace of (F_2)^k exactly once, in canonical form.
    Subspaces are produced by increasing dimension and, for each
    dimension, by pivot columns.

    :param k: The ambient dimension.
    :type k: int

    :param dim_filter: A dimension or a collection of dimensions to
        restrict the output to.
    :type dim_filter: int or iterable, optional

    :raises ResourceCapExceeded: If k exceeds MAX_ENUMERATION_DIMENSION.
    """
    if k > MAX_ENUMERATION_DIMENSION:
        raise ResourceCapExceeded(
            "subspace enumeration dimension", k, MAX_ENUMERATION_DIMENSION
        )
    for dim in _dimensions(k, dim_filter):
        for pivots in combinations(range(k), dim):
            pivot_set = set(pivots)
            free = [
                [c for c in range(p + 1, k) if c not in pivot_set]
                for p in pivots
            ]
            choices = [range(1 << len(f)) for f in free]
            for selection in product(*choices):
                rows = []
                for p, columns, chosen in zip(pivots, free, selection):
                    row = 1 << p
                    for i, c in enumerate(columns):
                        if (chosen >> i) & 1:
                            row |= 1 << c
                    rows.append(row)
                yield Gf2Subspace(k, tuple(rows))


def orthogonal_complement(subspace):
    """Return {v : <v, s> = 0 for all s in S} for a subspace S."""
    pivots = subspace.pivots
    pivot_set = set(pivots)
    rows = []
    for f in range(subspace.k):
        if f in pivot_set:
            continue
        w = 1 << f
        for p, row in zip(pivots, subspace.basis):
            if (row >> f) & 1:
                w |= 1 << p
        rows.append(w)
    return Gf2Subspace.span(subspace.k, rows)


def affine_hull(points, k=None):
    """
    Return the smallest affine subspace containing the specified points.

    :param points: The points, as Gf2Vec objects or, when k is given,
        as packed integers.
    :type points: iterable

    :param k: The ambient dimension.
    :type k: int, optional

    :return: A pair (offset, direction); the hull is offset + direction
        and the offset is its element with the minimum integer encoding.
    :rtype: tuple(Gf2Vec, Gf2Subspace)

    :raises ValueError: If no points are given.
    """
    bits, k = _ambient(points, k)
    if not bits:
        raise ValueError("the affine hull of an empty set is undefined")
    base = bits[0]
    direction = Gf2Subspace.span(k, [p ^ base for p in bits])
    return Gf2Vec(direction.coset_minimum(base), k), direction


def is_affine_subspace(points, k=None):
    """Return True if the set of points is an affine subspace."""
    bits, k = _ambient(points, k)
    distinct = set(bits)
    _offset, direction = affine_hull(distinct, k)
    return len(distinct) == direction.size
