"""Backtracking search for colorings in which every pair is covered by a rainbow set.

Items (edges for rd, vertices for rvd) get colors 1..k. Each candidate is a
set of items together with the vertex pairs it would separate; a pair is
satisfied when at least one of its candidates receives pairwise distinct
colors. Both rainbow disconnection searches reduce to this form.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .coloring import BudgetExceeded


def _drop_dominated(cands: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Remove candidates whose items contain another's while covering no more pairs."""
    cands = sorted(set(cands), key=lambda c: (c[0].bit_count(), c[0], c[1]))
    kept: list[tuple[int, int]] = []
    for items, pairs in cands:
        dominated = False
        for k_items, k_pairs in kept:
            if k_items & items == k_items and pairs & ~k_pairs == 0:
                dominated = True
                break
        if not dominated:
            kept.append((items, pairs))
    return kept


def _item_order(n_items: int, cands: list[tuple[int, int]]) -> list[int]:
    order: list[int] = []
    placed = 0
    for items, _ in sorted(cands, key=lambda c: (c[0].bit_count(), c[0])):
        rest = items & ~placed
        while rest:
            low = rest & -rest
            order.append(low.bit_length() - 1)
            rest ^= low
        placed |= items
    order += [i for i in range(n_items) if not placed >> i & 1]
    return order


class CoverSearch:
    def __init__(self, n_items: int, candidates: Sequence[tuple[int, int]], n_pairs: int,
                 k: int, node_limit: Optional[int] = None):
        self.n_items = n_items
        self.k = k
        self.node_limit = node_limit
        self.nodes = 0
        cands = _drop_dominated([c for c in candidates if c[0].bit_count() <= k])
        self.cands = cands
        self.pairs_of = [[p for p in range(n_pairs) if pm >> p & 1] for _, pm in cands]
        self.alive = [0] * n_pairs
        for pl in self.pairs_of:
            for p in pl:
                self.alive[p] += 1
        self.feasible = all(self.alive)
        self.item_cands: list[list[int]] = [[] for _ in range(n_items)]
        for j, (items, _) in enumerate(cands):
            for i in range(n_items):
                if items >> i & 1:
                    self.item_cands[i].append(j)
        self.order = _item_order(n_items, cands)
        self.used = [0] * len(cands)
        self.dead = [False] * len(cands)
        self.color = [0] * n_items

    def run(self) -> Optional[list[int]]:
        if not self.feasible:
            return None
        if self.n_items == 0:
            return []
        if self._extend(0, 0):
            return list(self.color)
        return None

    def _assign(self, item: int, c: int, trail: list) -> bool:
        bit = 1 << c
        ok = True
        used, dead, alive, pairs_of = self.used, self.dead, self.alive, self.pairs_of
        for j in self.item_cands[item]:
            if dead[j]:
                continue
            if used[j] & bit:
                dead[j] = True
                trail.append(~j)
                for p in pairs_of[j]:
                    alive[p] -= 1
                    if alive[p] == 0:
                        ok = False
            else:
                used[j] |= bit
                trail.append(j)
        return ok

    def _undo(self, c: int, trail: list) -> None:
        bit = 1 << c
        for j in reversed(trail):
            if j < 0:
                j = ~j
                self.dead[j] = False
                for p in self.pairs_of[j]:
                    self.alive[p] += 1
            else:
                self.used[j] &= ~bit

    def _extend(self, i: int, top: int) -> bool:
        if i == len(self.order):
            return True
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded
        item = self.order[i]
        for c in range(1, min(self.k, top + 1) + 1):
            trail: list[int] = []
            if self._assign(item, c, trail):
                self.color[item] = c
                if self._extend(i + 1, max(top, c)):
                    return True
                self.color[item] = 0
            self._undo(c, trail)
        return False


def cover_search(n_items: int, candidates: Sequence[tuple[int, int]], n_pairs: int, k: int,
                 node_limit: Optional[int] = None) -> Optional[list[int]]:
    """Colors (1-based, per item) meeting every pair, or None if impossible with k colors."""
    return CoverSearch(n_items, candidates, n_pairs, k, node_limit).run()
