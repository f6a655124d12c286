"""Compile token-jump moves (distance up to the diameter) into k-Jump
sequences for k >= 3.

A single long jump u -> v is expanded recursively along a shortest path
u_0..u_l. With w = u_{l-k+1}: if w is unoccupied and unblocked, move the
token to w first and finish with one jump; otherwise some token sits on w or
a neighbor u' of w, and that token jumps to v (within distance k) before the
original token recurses into u'.
"""

from __future__ import annotations

from .graph import GraphError, dist, is_independent, shortest_path
from .engine import Move, MoveSequence, validate_sequence


class SimulationError(RuntimeError):
    """A generated step failed online validation; indicates a bug, never a
    legitimate 'no' answer."""


def _step(g, cur, u, v, k, out):
    """Emit k-Jump moves transforming cur so the token on u ends up on v.

    Returns the resulting configuration. Token identities may swap when the
    blocked cases fire; only set equality of the outcome is promised.
    """
    d = dist(g, u, v)
    if d is None:
        raise GraphError(f"{u} cannot reach {v}")
    if d <= k:
        _emit(g, cur, u, v, k, out)
        return cur - {u} | {v}
    path = shortest_path(g, u, v)
    ell = len(path) - 1
    w = path[ell - k + 1]
    rest = cur - {u}
    occupied = w in cur
    blocked = any(x in cur for x in g.adj[w])
    if not occupied and not blocked:
        cur = _step(g, cur, u, w, k, out)
        _emit(g, cur, w, v, k, out)
        return cur - {w} | {v}
    # Prefer the token on w itself, else the lowest-id occupied neighbor.
    if occupied:
        uprime = w
    else:
        uprime = min(x for x in g.adj[w] if x in cur)
    _emit(g, cur, uprime, v, k, out)
    cur = cur - {uprime} | {v}
    return _step(g, cur, u, uprime, k, out)


def _emit(g, cur, src, dst, k, out):
    d = dist(g, src, dst)
    if d is None or d > k or src not in cur or dst in cur:
        raise SimulationError(f"illegal generated move {src} -> {dst}")
    if not is_independent(g, cur - {src} | {dst}):
        raise SimulationError(f"generated move {src} -> {dst} breaks independence")
    out.append(Move(src, dst))


def simulate_move(g, c, u, v, k):
    """Expand the single jump u -> v on configuration c into a valid k-Jump
    sequence with the same final set, for k >= 3."""
    if k < 3:
        raise GraphError("simulation requires k >= 3")
    c = frozenset(c)
    if not is_independent(g, c):
        raise GraphError("configuration is not independent")
    if u not in c:
        raise GraphError(f"no token on {u}")
    if v in c:
        raise GraphError(f"vertex {v} already occupied")
    if not is_independent(g, c - {u} | {v}):
        raise GraphError(f"move {u} -> {v} does not preserve independence")
    if dist(g, u, v) is None:
        raise GraphError(f"{u} cannot reach {v}")
    out = []
    final = _step(g, set(c), u, v, k, out)
    seq = MoveSequence(c, tuple(out), k)
    report = validate_sequence(g, seq, k)
    if not report or seq.final() != frozenset(final) or seq.final() != c - {u} | {v}:
        raise SimulationError(f"internal validation failed: {report}")
    return seq


def simulate_sequence(g, seq, k):
    """Expand every move of a TJ-valid sequence independently, yielding a
    k-Jump sequence with identical start and end configurations."""
    if k < 3:
        raise GraphError("simulation requires k >= 3")
    report = validate_sequence(g, seq, seq.k)
    if not report:
        raise GraphError(f"input sequence invalid at step {report.step}: {report.reason}")
    cur = frozenset(seq.start)
    out = []
    for mv in seq.moves:
        piece = simulate_move(g, cur, mv.src, mv.dst, k)
        out.extend(piece.moves)
        cur = piece.final()
    result = MoveSequence(frozenset(seq.start), tuple(out), k)
    check = validate_sequence(g, result, k)
    if not check or result.final() != seq.final():
        raise SimulationError(f"internal validation failed: {check}")
    return result
