"""Streaming enumeration of unlabeled free trees."""

from __future__ import annotations

from itertools import product
from typing import Iterator

import numpy as np

from . import _kernels
from .tree import Tree, free_canonical, pruefer_decode, tree_from_level_sequence

PRUEFER_MAX_N = 9


class TreeStream:
    """Iterator over the free trees of order ``n``, each emitted exactly once.

    Trees come out labelled in preorder of their canonical depth sequence
    rooted at a centre, so ``free_canonical(t).code`` equals that sequence.
    With ``shards > 1`` only the blocks of ``block`` consecutive trees whose
    block index is congruent to ``shard`` are emitted; the union over all
    shards is the full stream.
    """

    def __init__(self, n: int, shard: int = 0, shards: int = 1, block: int = 256, batch: int = 4096):
        if n < 1:
            raise ValueError("order must be at least 1")
        if not 0 <= shard < shards:
            raise ValueError(f"shard {shard} out of range for {shards} shards")
        self.n = n
        self.shard = shard
        self.shards = shards
        self.block = block
        self._levels = _kernels.init_state(n)
        self._state = np.zeros(1, dtype=np.int64)
        self._buf = np.zeros((batch, max(n, 1)), dtype=np.int8)
        self._rows: list[tuple[int, ...]] = []
        self._pos = 0
        self._index = -1

    def __iter__(self) -> TreeStream:
        return self

    def next_levels(self) -> tuple[int, ...]:
        while True:
            if self._pos == len(self._rows):
                k = _kernels.fill_batch(self._levels, self.n, self._state, self._buf)
                if k == 0:
                    raise StopIteration
                self._rows = [tuple(int(x) for x in row) for row in self._buf[:k, : self.n]]
                self._pos = 0
            row = self._rows[self._pos]
            self._pos += 1
            self._index += 1
            if (self._index // self.block) % self.shards == self.shard:
                return row

    def __next__(self) -> Tree:
        return tree_from_level_sequence(self.next_levels())


def free_trees_stream(n: int, shard: int = 0, shards: int = 1, block: int = 256) -> TreeStream:
    return TreeStream(n, shard=shard, shards=shards, block=block)


def level_sequences(n: int, shard: int = 0, shards: int = 1, block: int = 256) -> Iterator[tuple[int, ...]]:
    stream = TreeStream(n, shard=shard, shards=shards, block=block)
    while True:
        try:
            yield stream.next_levels()
        except StopIteration:
            return


def count_free_trees(n: int) -> int:
    if n < 1:
        raise ValueError("order must be at least 1")
    levels = _kernels.init_state(n)
    state = np.zeros(1, dtype=np.int64)
    buf = np.zeros((1 << 14, n), dtype=np.int8)
    total = 0
    while True:
        k = _kernels.fill_batch(levels, n, state, buf)
        if k == 0:
            return total
        total += k


def free_trees_pruefer(n: int) -> dict[tuple[int, ...], Tree]:
    """Slow reference enumeration: every labelled tree, deduplicated by free code.

    Only meant as an independent check of the fast stream.
    """
    if not 1 <= n <= PRUEFER_MAX_N:
        raise ValueError(f"Pruefer oracle supports 1 <= n <= {PRUEFER_MAX_N}")
    found: dict[tuple[int, ...], Tree] = {}
    for seq in product(range(n), repeat=max(n - 2, 0)):
        t = pruefer_decode(seq, n)
        found.setdefault(free_canonical(t).code, t)
    return found
