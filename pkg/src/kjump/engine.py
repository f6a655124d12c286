"""Exact search oracle over independent-set configurations under the k-Jump
rule: adjacency, successor generation, reachability and shortest sequences by
breadth-first search over bitmask-encoded states, sequence validation, and a
matching-based lower bound on sequence length.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from .graph import GraphError, _dist_row, dist, is_independent

DEFAULT_STATE_CAP = 50_000_000


class ResourceExhausted(RuntimeError):
    """Visited-set cap hit; the query outcome is unknown, not 'no'."""


class Move(NamedTuple):
    src: int
    dst: int


@dataclass(frozen=True)
class MoveSequence:
    start: frozenset
    moves: tuple
    k: int

    def __len__(self):
        return len(self.moves)

    def final(self):
        cur = set(self.start)
        for m in self.moves:
            cur.discard(m.src)
            cur.add(m.dst)
        return frozenset(cur)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    step: int | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


def _to_mask(vs):
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _from_mask(m):
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def _check_config(g, c, name):
    if not is_independent(g, c):
        raise GraphError(f"{name} is not an independent set: {sorted(c)}")


def k_adjacent(g, a, b, k):
    """Single-token relation: |a \\ b| = |b \\ a| = 1 and the pair is within
    distance k."""
    _check_config(g, a, "first configuration")
    _check_config(g, b, "second configuration")
    a, b = frozenset(a), frozenset(b)
    da, db = a - b, b - a
    if len(da) != 1 or len(db) != 1:
        return False
    (u,) = da
    (v,) = db
    d = dist(g, u, v)
    return d is not None and d <= k


def _succ_moves(g, cmask, k):
    """Deterministic (src, dst, next-mask) moves, ascending src then dst."""
    tokens = _from_mask(cmask)
    out = []
    for u in sorted(tokens):
        row = _dist_row(g, u)
        rest = cmask & ~(1 << u)
        for v in range(g.n):
            if v == u or cmask >> v & 1:
                continue
            d = row[v]
            if d is None or d > k:
                continue
            if g.adj_mask[v] & rest:
                continue
            out.append((u, v, rest | (1 << v)))
    return out


def successors(g, c, k):
    """All configurations one k-Jump move away from c."""
    _check_config(g, c, "configuration")
    return {_from_mask(m) for _, _, m in _succ_moves(g, _to_mask(c), k)}


def _bfs(g, s, t, k, max_states, depth_cap=None, want_parents=False):
    """Returns (found_depth, parents) with found_depth None when t was not
    reached. parents maps state -> (prev_state, Move)."""
    smask, tmask = _to_mask(s), _to_mask(t)
    if smask == tmask:
        return 0, {}
    depth = {smask: 0}
    parents = {} if want_parents else None
    q = deque([smask])
    while q:
        cur = q.popleft()
        d = depth[cur]
        if depth_cap is not None and d >= depth_cap:
            continue
        for u, v, nxt in _succ_moves(g, cur, k):
            if nxt in depth:
                continue
            if len(depth) >= max_states:
                raise ResourceExhausted(
                    f"visited-state cap of {max_states} reached"
                )
            depth[nxt] = d + 1
            if want_parents:
                parents[nxt] = (cur, Move(u, v))
            if nxt == tmask:
                return d + 1, parents
            q.append(nxt)
    return None, parents


def _explore(g, s, k, max_states, depth_cap=None, want_parents=False):
    """Full component exploration from s. Returns (depth, parents) keyed by
    state bitmask; parents maps state -> (prev_state, Move)."""
    smask = _to_mask(s)
    depth = {smask: 0}
    parents = {} if want_parents else None
    q = deque([smask])
    while q:
        cur = q.popleft()
        d = depth[cur]
        if depth_cap is not None and d >= depth_cap:
            continue
        for u, v, nxt in _succ_moves(g, cur, k):
            if nxt in depth:
                continue
            if len(depth) >= max_states:
                raise ResourceExhausted(
                    f"visited-state cap of {max_states} reached"
                )
            depth[nxt] = d + 1
            if want_parents:
                parents[nxt] = (cur, Move(u, v))
            q.append(nxt)
    return depth, parents


def reachable_configs(g, c, k, max_states=DEFAULT_STATE_CAP):
    """Every configuration reachable from c, c included."""
    _check_config(g, c, "configuration")
    depth, _ = _explore(g, c, k, max_states)
    return {_from_mask(m) for m in depth}


def _check_pair(g, s, t):
    _check_config(g, s, "start")
    _check_config(g, t, "target")
    if len(set(s)) != len(set(t)):
        raise GraphError(
            f"size mismatch: |start| = {len(set(s))}, |target| = {len(set(t))}"
        )


def decide(g, s, t, k, max_states=DEFAULT_STATE_CAP):
    """Reachability of t from s in the k-Jump transition graph."""
    _check_pair(g, s, t)
    found, _ = _bfs(g, s, t, k, max_states)
    return found is not None


def shortest(g, s, t, k, max_states=DEFAULT_STATE_CAP):
    """A minimum-length valid sequence from s to t, or None if unreachable."""
    _check_pair(g, s, t)
    s, t = frozenset(s), frozenset(t)
    found, parents = _bfs(g, s, t, k, max_states, want_parents=True)
    if found is None:
        return None
    moves = []
    cur = _to_mask(t)
    smask = _to_mask(s)
    while cur != smask:
        cur, mv = parents[cur]
        moves.append(mv)
    moves.reverse()
    return MoveSequence(s, tuple(moves), k)


def exists_within(g, s, t, k, budget, max_states=DEFAULT_STATE_CAP):
    """True iff a valid sequence of at most `budget` moves exists."""
    _check_pair(g, s, t)
    if budget < 0:
        raise GraphError("move budget must be nonnegative")
    found, _ = _bfs(g, s, t, k, max_states, depth_cap=budget)
    return found is not None


def validate_sequence(g, seq, k=None):
    """Replay a move sequence, checking occupancy, distance and independence
    at every step. Rejection is a value, not an exception."""
    if k is None:
        k = seq.k
    cur = set(seq.start)
    if not is_independent(g, cur):
        return ValidationReport(False, None, "start set is not independent")
    for i, mv in enumerate(seq.moves):
        if mv.src == mv.dst:
            return ValidationReport(False, i, f"null move at {mv.src}")
        if mv.src not in cur:
            return ValidationReport(False, i, f"no token on {mv.src}")
        if mv.dst in cur:
            return ValidationReport(False, i, f"vertex {mv.dst} already occupied")
        d = dist(g, mv.src, mv.dst)
        if d is None:
            return ValidationReport(False, i, f"{mv.src} cannot reach {mv.dst}")
        if d > k:
            return ValidationReport(False, i, f"distance {d} exceeds bound {k}")
        cur.discard(mv.src)
        cur.add(mv.dst)
        if not is_independent(g, cur):
            return ValidationReport(
                False, i, f"set not independent after moving {mv.src} to {mv.dst}"
            )
    return ValidationReport(True)


_UNREACHABLE = 10**9


def lower_bound_moves(g, s, t, k):
    """Minimum-cost perfect matching between start and target vertices with
    per-pair cost ceil(dist / k); a valid lower bound on sequence length since
    every token must end on some target vertex. Returns None when some token
    cannot reach any target in every matching (unbounded marker)."""
    _check_pair(g, s, t)
    svs, tvs = sorted(set(s)), sorted(set(t))
    r = len(svs)
    if r == 0:
        return 0
    cost = np.empty((r, r), dtype=np.int64)
    for i, u in enumerate(svs):
        row = _dist_row(g, u)
        for j, v in enumerate(tvs):
            d = row[v]
            cost[i, j] = _UNREACHABLE if d is None else -(-d // k)
    rows, cols = linear_sum_assignment(cost)
    total = int(cost[rows, cols].sum())
    if total >= _UNREACHABLE:
        return None
    return total


def sequence_to_json(seq):
    return {
        "start": sorted(seq.start),
        "moves": [[m.src, m.dst] for m in seq.moves],
        "k": seq.k,
    }


def sequence_from_json(data):
    return MoveSequence(
        frozenset(data["start"]),
        tuple(Move(int(a), int(b)) for a, b in data["moves"]),
        int(data["k"]),
    )
