"""Flip connectivity between tilings of the same all-positive type."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NonPositiveType, TypeMismatch
from .tiling import (
    Tiling,
    U,
    V,
    W,
    _flipped_letters,
    flip,
    height_function,
    sources_and_sinks,
    type_of,
)


@dataclass(frozen=True)
class FlipSequence:
    """A start tiling and coset indices to flip, in order."""

    start: Tiling
    steps: tuple[int, ...]

    def replay(self) -> Tiling:
        """Apply the steps to the start tiling and return the endpoint."""
        current = self.start
        for x in self.steps:
            current = flip(current, x)
        return current


def flip_connect(t1: Tiling, t2: Tiling) -> FlipSequence:
    """Produce a flip sequence turning t1 into t2.

    Works on the height difference divided by 3: while some coset is above
    target, walk surviving arrows of the evolving first tiling to a sink and
    flip there (the difference never decreases along such a walk, so the sink
    sits strictly above target and away from the pinned zero coset); when only
    below-target cosets remain, play the same game on the second tiling and
    emit those flips reversed. Each flip moves one unit of difference, so the
    sequence length is exactly the initial absolute difference sum.
    """
    if t1.quotient != t2.quotient:
        raise TypeMismatch("tilings live on different quotients")
    gamma = type_of(t1)
    if gamma != type_of(t2):
        raise TypeMismatch(f"types differ: {gamma} vs {type_of(t2)}")
    if not gamma.positive:
        raise NonPositiveType(f"type {gamma} lacks a letter; flips cannot connect")
    q = t1.quotient
    n = len(q.reps)
    nb_u = [q.index_of((x1 + 1, x2)) for x1, x2 in q.reps]
    nb_v = [q.index_of((x1, x2 + 1)) for x1, x2 in q.reps]
    nb_w = [q.index_of((x1 - 1, x2 - 1)) for x1, x2 in q.reps]
    nb_mu = [q.index_of((x1 - 1, x2)) for x1, x2 in q.reps]

    def walk_to_sink(letters: list[str], i: int) -> int:
        # Surviving out-arrows in preference order u, v, w; paths cannot
        # revisit a coset because positive-type cut quivers are acyclic.
        for _ in range(n + 1):
            if letters[i] != U:
                i = nb_u[i]
            elif letters[nb_v[i]] != V:
                i = nb_v[i]
            elif letters[nb_mu[i]] != W:
                i = nb_w[i]
            else:
                return i
        raise AssertionError("maximal path failed to terminate")

    def sink_flip(letters: list[str], s: int) -> None:
        assert letters[s] == U and letters[nb_v[s]] == V and letters[nb_mu[s]] == W
        letters[nb_mu[s]] = U
        letters[s] = V
        letters[nb_v[s]] = W

    base1 = height_function(t1).base
    base2 = height_function(t2).base
    ht = []
    for h1, h2 in zip(base1, base2):
        assert (h1 - h2) % 3 == 0
        ht.append((h1 - h2) // 3)
    letters1 = list(t1.letters)
    letters2 = list(t2.letters)
    steps_down: list[int] = []
    steps_up: list[int] = []
    while True:
        i0 = max(range(n), key=lambda i: (ht[i], -i))
        if ht[i0] <= 0:
            break
        s = walk_to_sink(letters1, i0)
        assert ht[s] >= ht[i0] > 0
        sink_flip(letters1, s)
        ht[s] -= 1
        steps_down.append(s)
    while True:
        i0 = min(range(n), key=lambda i: (ht[i], i))
        if ht[i0] >= 0:
            break
        s = walk_to_sink(letters2, i0)
        assert ht[s] <= ht[i0] < 0
        sink_flip(letters2, s)
        ht[s] += 1
        steps_up.append(s)
    assert all(value == 0 for value in ht)
    assert letters1 == letters2  # equal heights force equal tilings
    return FlipSequence(t1, tuple(steps_down) + tuple(reversed(steps_up)))


def flip_class(tiling: Tiling) -> tuple[Tiling, ...]:
    """Enumerate every tiling reachable by flips, sorted by letter string."""
    type_of(tiling)  # reject invalid assignments up front
    seen = {tiling.letters}
    found = [tiling]
    todo = deque([tiling])
    while todo:
        current = todo.popleft()
        sources, sinks = sources_and_sinks(current)
        for x in sorted(sources | sinks):
            letters = _flipped_letters(current, x, sources, sinks)
            if letters not in seen:
                seen.add(letters)
                flipped = Tiling(current.quotient, letters)
                found.append(flipped)
                todo.append(flipped)
    return tuple(sorted(found, key=lambda t: t.letters))
