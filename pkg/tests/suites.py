"""Deterministic instance suites shared between module and acceptance tests."""

from __future__ import annotations

import random

import numpy as np

from confluent_hasse import (
    Poset,
    SpLeaf,
    SpParallel,
    SpSeries,
    gen_random,
)
from confluent_hasse.sp import SpTree


def random_realizer_suite(count: int = 200, max_n: int = 9):
    """``count`` seeded random realizers with n cycling over 0..max_n."""
    return [gen_random(i % (max_n + 1), i) for i in range(count)]


def all_sp_trees(max_leaves: int = 6) -> list[SpTree]:
    """Every series-parallel tree shape/labelling with up to ``max_leaves``
    leaves, labelled a, b, c, ... left to right."""
    alphabet = "abcdefghij"

    def shapes(k: int) -> list:
        # shape: None for a leaf, (kind, left, right) otherwise
        if k == 1:
            return [None]
        out = []
        for split in range(1, k):
            for left in shapes(split):
                for right in shapes(k - split):
                    out.append(("s", left, right))
                    out.append(("p", left, right))
        return out

    def realize(shape, counter: list[int]) -> SpTree:
        if shape is None:
            label = alphabet[counter[0]]
            counter[0] += 1
            return SpLeaf(label)
        kind, left, right = shape
        l = realize(left, counter)
        r = realize(right, counter)
        return SpSeries(l, r) if kind == "s" else SpParallel(l, r)

    trees = []
    for k in range(1, max_leaves + 1):
        for shape in shapes(k):
            trees.append(realize(shape, [0]))
    return trees


def random_poset(n: int, seed: int, density: float = 0.3) -> Poset:
    """Random poset: sample pairs consistent with the index order, close."""
    rng = random.Random(seed)
    labels = [f"x{i}" for i in range(n)]
    mat = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                mat[i, j] = True
    # transitive closure
    for k in range(n):
        mat |= np.outer(mat[:, k], mat[k, :])
    return Poset(labels, mat)
