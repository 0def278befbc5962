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
"""Compiled inner loops over S-box tables and permutation arrays.

All kernels take contiguous numpy integer arrays and are compiled on
first use; results are cached on disk between runs.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def ddt(table):
    """Return the difference distribution table of the specified lookup
    table: entry [u, v] counts the x with table[x ^ u] ^ table[x] == v."""
    size = table.shape[0]
    out = np.zeros((size, size), np.int64)
    for u in range(size):
        for x in range(size):
            out[u, table[x ^ u] ^ table[x]] += 1
    return out


@njit(cache=True)
def max_ddt_entries(tables):
    """Return for each row of tables the largest entry of its difference
    distribution table outside the u = 0 row."""
    count, size = tables.shape
    out = np.zeros(count, np.int64)
    row = np.zeros(size, np.int64)
    for k in range(count):
        best = 0
        for u in range(1, size):
            row[:] = 0
            for x in range(size):
                v = tables[k, x ^ u] ^ tables[k, x]
                row[v] += 1
                if row[v] > best:
                    best = row[v]
        out[k] = best
    return out


@njit(cache=True)
def fwht_rows(values):
    """Apply in place the fast Walsh-Hadamard transform to every row of
    the two-dimensional array values."""
    rows, size = values.shape
    half = 1
    while half < size:
        for r in range(rows):
            for start in range(0, size, 2 * half):
                for j in range(start, start + half):
                    a = values[r, j]
                    b = values[r, j + half]
                    values[r, j] = a + b
                    values[r, j + half] = a - b
        half *= 2


@njit(cache=True)
def cycle_count(images):
    """Return the number of cycles (fixed points included) of the
    permutation given by its images."""
    size = images.shape[0]
    seen = np.zeros(size, np.bool_)
    cycles = 0
    for start in range(size):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
    return cycles


@njit(cache=True)
def cycle_lengths(images):
    """Return the lengths of all cycles of the permutation, in the order
    of their smallest point."""
    size = images.shape[0]
    seen = np.zeros(size, np.bool_)
    out = np.zeros(size, np.int64)
    count = 0
    for start in range(size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        out[count] = length
        count += 1
    return out[:count]


@njit(cache=True)
def orbit_mask(generators, start):
    """Return a boolean mask of the orbit of start under the group
    generated by the rows of generators."""
    count, size = generators.shape
    mask = np.zeros(size, np.bool_)
    queue = np.empty(size, np.int64)
    mask[start] = True
    queue[0] = start
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(count):
            y = generators[k, x]
            if not mask[y]:
                mask[y] = True
                queue[tail] = y
                tail += 1
    return mask


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def minimal_block(generators, alpha, beta):
    """Return, for every point, the representative of its block in the
    finest block system of the transitive group generated by the rows of
    generators in which alpha and beta lie in the same block."""
    count, size = generators.shape
    parent = np.arange(size)
    rank = np.zeros(size, np.int64)
    # Every union enqueues one pair, so at most size - 1 pairs are queued.
    first = np.empty(size, np.int64)
    second = np.empty(size, np.int64)
    head = 0
    tail = 0

    a = _find(parent, alpha)
    b = _find(parent, beta)
    if a != b:
        if rank[a] < rank[b]:
            a, b = b, a
        elif rank[a] == rank[b]:
            rank[a] += 1
        parent[b] = a
        first[tail] = a
        second[tail] = b
        tail += 1

    while head < tail:
        x = first[head]
        y = second[head]
        head += 1
        for k in range(count):
            u = _find(parent, generators[k, x])
            v = _find(parent, generators[k, y])
            if u == v:
                continue
            if rank[u] < rank[v]:
                u, v = v, u
            elif rank[u] == rank[v]:
                rank[u] += 1
            parent[v] = u
            first[tail] = u
            second[tail] = v
            tail += 1

    out = np.empty(size, np.int64)
    for x in range(size):
        out[x] = _find(parent, x)
    return out


@njit(cache=True)
def nontrivial_block_seed(generators):
    """Return the first point beta such that the finest block system
    joining 0 and beta is not the single block of all points, or -1
    if there is none (a primitive group)."""
    size = generators.shape[1]
    for beta in range(1, size):
        labels = minimal_block(generators, 0, beta)
        root = labels[0]
        block = 0
        for x in range(size):
            if labels[x] == root:
                block += 1
        if block < size:
            return beta
    return -1


@njit(cache=True)
def derivative_closure(table, layer_images, seed):
    """Return the smallest subspace U containing seed such that for all
    u in U and all v the value (table[u ^ v] ^ table[v]) mapped through
    layer_images lies in U.
    The subspace is returned as a membership mask over all points."""
    size = table.shape[0]
    member = np.zeros(size, np.bool_)
    queued = np.zeros(size, np.bool_)
    elements = np.empty(size, np.int64)
    member[0] = True
    elements[0] = 0
    count = 1
    # Each point is queued at most once.
    pending = np.empty(size, np.int64)
    pending[0] = seed
    queued[seed] = True
    waiting = 1
    processed = 0

    while waiting > 0:
        waiting -= 1
        w = pending[waiting]
        if member[w]:
            continue
        for i in range(count):
            z = elements[i] ^ w
            member[z] = True
            elements[count + i] = z
        count *= 2
        if count == size:
            return member
        while processed < count:
            u = elements[processed]
            processed += 1
            if u == 0:
                continue
            for v in range(size):
                image = layer_images[table[u ^ v] ^ table[v]]
                if not member[image] and not queued[image]:
                    queued[image] = True
                    pending[waiting] = image
                    waiting += 1
    return member
