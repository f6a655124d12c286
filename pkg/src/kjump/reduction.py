"""E3-SAT to shortest k-Jump reconfiguration on chordal graphs.

Each clause becomes a path v_0..v_2k with two extra vertices k_0, k_2 hung on
v_{k-1} and v_{k+1} (k_1 is an alias for v_k); the k-vertices of all clauses
form one clique. Each variable becomes a path u_0..u_{k-1} (aliases t_0 = u_0
and t_1 = u_{k-1}) with two pendant vertices s_0, s_1 on t_0. Literal
occurrences wire s/t vertices to the clause's clique vertices. Satisfying
assignments translate to move sequences of length exactly 2(m+n), which
matches the matching lower bound; short sequences translate back to
satisfying assignments via the open/closed state of the variable gadgets.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import engine
from .graph import (
    GraphError,
    bfs_distances,
    build_graph,
    find_peo,
    verify_peo,
)
from .engine import Move, MoveSequence, lower_bound_moves


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """Exactly-3-literal CNF. A literal is (variable index, positive flag)."""

    num_vars: int
    clauses: tuple

    def satisfies(self, assignment):
        if len(assignment) != self.num_vars:
            raise CnfError("assignment length mismatch")
        for clause in self.clauses:
            if not any(assignment[v] == pos for v, pos in clause):
                return False
        return True

    def violated_clause(self, assignment):
        for idx, clause in enumerate(self.clauses):
            if not any(assignment[v] == pos for v, pos in clause):
                return idx
        return None


def parse_e3cnf(text):
    """DIMACS CNF parser that enforces exactly three literals per clause."""
    num_vars = None
    num_clauses = None
    clauses = []
    pending = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith(("c", "%")):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"malformed header at line {lineno}: {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise CnfError("clause before 'p cnf' header")
        for tok in parts:
            lit = int(tok)
            if lit == 0:
                if len(pending) != 3:
                    raise CnfError(
                        f"clause {pending} has {len(pending)} literals, need 3"
                    )
                clauses.append(tuple(pending))
                pending = []
            else:
                var = abs(lit) - 1
                if var >= num_vars:
                    raise CnfError(f"variable {abs(lit)} out of range")
                pending.append((var, lit > 0))
    if pending:
        raise CnfError(f"unterminated clause {pending}")
    if num_vars is None:
        raise CnfError("missing 'p cnf' header")
    if num_clauses is not None and len(clauses) != num_clauses:
        raise CnfError(
            f"header promises {num_clauses} clauses, found {len(clauses)}"
        )
    return CnfFormula(num_vars, tuple(clauses))


@dataclass(frozen=True)
class ReductionInstance:
    graph: object
    k: int
    start: frozenset
    target: frozenset
    label_map: dict  # vertex id -> "v:i:j" / "k:i:x" / "u:i:j" / "s:i:x"
    formula: CnfFormula

    def vertex(self, label):
        return self._index()[label]

    def _index(self):
        idx = getattr(self, "_rev", None)
        if idx is None:
            idx = {lab: v for v, lab in self.label_map.items()}
            object.__setattr__(self, "_rev", idx)
        return idx

    # Gadget accessors. t-aliases resolve into the variable path.
    def v(self, i, j):
        return self.vertex(f"v:{i}:{j}")

    def kv(self, i, x):
        if x == 1:
            return self.vertex(f"v:{i}:{self.k}")
        return self.vertex(f"k:{i}:{x}")

    def u(self, i, j):
        return self.vertex(f"u:{i}:{j}")

    def s(self, i, x):
        return self.vertex(f"s:{i}:{x}")

    def t(self, i, x):
        return self.u(i, 0) if x == 0 else self.u(i, self.k - 1)


def build_instance(phi, k):
    if k < 3:
        raise GraphError("reduction requires k >= 3")
    m, n = len(phi.clauses), phi.num_vars
    labels = {}
    edges = set()

    def add(a, b):
        edges.add((min(a, b), max(a, b)))

    clause_base = [i * (2 * k + 3) for i in range(m)]
    var_base = [m * (2 * k + 3) + j * (k + 2) for j in range(n)]

    for i in range(m):
        base = clause_base[i]
        for j in range(2 * k + 1):
            labels[base + j] = f"v:{i}:{j}"
        labels[base + 2 * k + 1] = f"k:{i}:0"
        labels[base + 2 * k + 2] = f"k:{i}:2"
        for j in range(2 * k):
            add(base + j, base + j + 1)
        for kx in (base + 2 * k + 1, base + 2 * k + 2):
            add(kx, base + k - 1)
            add(kx, base + k + 1)

    # K = {k_0, k_1 (= v_k), k_2 over all clauses} forms a clique.
    kvs = []
    for i in range(m):
        base = clause_base[i]
        kvs.extend([base + 2 * k + 1, base + k, base + 2 * k + 2])
    for a in range(len(kvs)):
        for b in range(a + 1, len(kvs)):
            add(kvs[a], kvs[b])

    for j in range(n):
        base = var_base[j]
        for x in range(k):
            labels[base + x] = f"u:{j}:{x}"
        labels[base + k] = f"s:{j}:0"
        labels[base + k + 1] = f"s:{j}:1"
        for x in range(k - 1):
            add(base + x, base + x + 1)
        add(base + k, base)
        add(base + k + 1, base)

    for i, clause in enumerate(phi.clauses):
        base = clause_base[i]
        rho = [base + 2 * k + 1, base + k, base + 2 * k + 2]
        for pos, (var, positive) in enumerate(clause):
            vb = var_base[var]
            s_vertex = vb + k if positive else vb + k + 1
            add(s_vertex, rho[pos])
            add(vb, rho[pos])  # t_0 = u_0

    total = m * (2 * k + 3) + n * (k + 2)
    g = build_graph(total, sorted(edges), labels)
    start = frozenset(
        [clause_base[i] for i in range(m)]
        + [var_base[j] + k for j in range(n)]
        + [var_base[j] + k + 1 for j in range(n)]
    )
    target = frozenset(
        [clause_base[i] + 2 * k for i in range(m)]
        + [var_base[j] for j in range(n)]
        + [var_base[j] + k - 1 for j in range(n)]
    )
    return ReductionInstance(g, k, start, target, labels, phi)


def peo_order(inst):
    """The explicit seven-phase perfect elimination ordering: climb each
    clause path from both ends, peel the variable paths, then the pendant
    s-vertices, t_0, and finally the clique."""
    k, m, n = inst.k, len(inst.formula.clauses), inst.formula.num_vars
    order = []
    for i in range(m):
        order.extend(inst.v(i, j) for j in range(k))
    for i in range(m):
        order.extend(inst.v(i, 2 * k - j) for j in range(k))
    for i in range(n):
        order.extend(inst.u(i, k - j - 1) for j in range(k - 1))
    order.extend(inst.s(i, 0) for i in range(n))
    order.extend(inst.s(i, 1) for i in range(n))
    order.extend(inst.u(i, 0) for i in range(n))
    for i in range(m):
        order.extend(inst.kv(i, j) for j in range(3))
    return order


def assignment_to_sequence(inst, assignment):
    """Optimal witness for a satisfying assignment: per variable open the
    chosen polarity (M1), route each clause token through the witness
    literal's clique vertex (M2), then park the remaining s-tokens (M3)."""
    phi = inst.formula
    bad = phi.violated_clause(assignment)
    if bad is not None:
        raise CnfError(f"assignment does not satisfy clause {bad}")
    moves = []
    for i in range(phi.num_vars):
        src = inst.s(i, 0) if assignment[i] else inst.s(i, 1)
        moves.append(Move(src, inst.t(i, 1)))
    for j, clause in enumerate(phi.clauses):
        pos = next(
            p for p, (var, positive) in enumerate(clause)
            if assignment[var] == positive
        )
        gate = inst.kv(j, pos)
        moves.append(Move(inst.v(j, 0), gate))
        moves.append(Move(gate, inst.v(j, 2 * inst.k)))
    for i in range(phi.num_vars):
        src = inst.s(i, 1) if assignment[i] else inst.s(i, 0)
        moves.append(Move(src, inst.t(i, 0)))
    return MoveSequence(inst.start, tuple(moves), inst.k)


def sequence_to_assignment(inst, seq):
    """Extract a satisfying assignment from any valid start-to-target
    sequence of length at most 2(m+n), by watching when each variable gadget
    becomes positively or negatively open."""
    phi = inst.formula
    m, n = len(phi.clauses), phi.num_vars
    if len(seq.moves) > 2 * (m + n):
        raise GraphError(
            f"sequence length {len(seq.moves)} exceeds 2(m+n) = {2 * (m + n)}"
        )
    report = engine.validate_sequence(inst.graph, seq, inst.k)
    if not report:
        raise GraphError(f"invalid sequence at step {report.step}: {report.reason}")
    if frozenset(seq.start) != inst.start or seq.final() != inst.target:
        raise GraphError("sequence does not run from the start set to the target set")

    pos_open = [False] * n
    neg_open = [False] * n
    cur = set(seq.start)
    configs = [frozenset(cur)]
    for mv in seq.moves:
        cur.discard(mv.src)
        cur.add(mv.dst)
        configs.append(frozenset(cur))
    for i in range(n):
        s0, s1, t0 = inst.s(i, 0), inst.s(i, 1), inst.t(i, 0)
        for conf in configs:
            if s0 not in conf and t0 not in conf:
                pos_open[i] = True
            if s1 not in conf and t0 not in conf:
                neg_open[i] = True
    assignment = tuple(
        True if pos_open[i] else False for i in range(n)
    )
    return assignment


@dataclass(frozen=True)
class InstanceStats:
    vertices: int
    tokens: int
    diameter: int | None
    chordal: bool
    lower_bound: int


def instance_stats(inst):
    g = inst.graph
    diam = None
    row0 = bfs_distances(g, 0) if g.n else []
    if g.n and all(d is not None for d in row0):
        diam = 0
        for u in range(g.n):
            diam = max(diam, max(bfs_distances(g, u)))
    order = peo_order(inst)
    chordal = verify_peo(g, order) and find_peo(g) is not None
    bound = lower_bound_moves(g, inst.start, inst.target, inst.k)
    return InstanceStats(g.n, len(inst.start), diam, chordal, bound)


def instance_to_json(inst):
    from .graph import graph_to_json

    return {
        "graph": graph_to_json(inst.graph),
        "start": sorted(inst.start),
        "target": sorted(inst.target),
        "k": inst.k,
        "labelMap": {str(v): lab for v, lab in inst.label_map.items()},
        "formula": {
            "numVars": inst.formula.num_vars,
            "clauses": [
                [(var + 1) if positive else -(var + 1) for var, positive in cl]
                for cl in inst.formula.clauses
            ],
        },
    }


def instance_from_json(data):
    from .graph import graph_from_json

    phi = CnfFormula(
        data["formula"]["numVars"],
        tuple(
            tuple((abs(lit) - 1, lit > 0) for lit in cl)
            for cl in data["formula"]["clauses"]
        ),
    )
    return ReductionInstance(
        graph_from_json(data["graph"]),
        int(data["k"]),
        frozenset(data["start"]),
        frozenset(data["target"]),
        {int(v): lab for v, lab in data["labelMap"].items()},
        phi,
    )
