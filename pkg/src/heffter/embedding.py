"""Combinatorial embeddings of complete graphs from array orderings.

The embedding of K_q built from a Heffter array with compatible orderings is
vertex-transitive: the rotation at vertex x sends neighbor x+a to x+r0(a),
where the single permutation r0 of the nonzero group elements is

    r0(a) = -row_successor(a)   if a is an entry of the array,
    r0(a) = col_successor(-a)   otherwise.

Faces are traced with the convention that the directed edge (u,v) is followed
by (v, rotation_v(u)).  Under that convention the face through (x, x+a) with
a an entry develops a column of the array, and the face through the opposite
edge develops a row backwards; `closed_form_faces` computes both directly
from the orderings, independently of the tracer, and the test suite checks
the two routes agree edge by edge.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .algebra import Field
from .arrays import PartiallyFilledArray
from .orderings import OrderingPair


@dataclass(frozen=True)
class Face:
    """A directed face boundary, canonicalized by rotation only."""

    vertices: tuple[int, ...]

    @classmethod
    def from_walk(cls, walk: Sequence[int]) -> "Face":
        smallest = min(walk)
        best = None
        for i, v in enumerate(walk):
            if v == smallest:
                rotated = tuple(walk[i:]) + tuple(walk[:i])
                if best is None or rotated < best:
                    best = rotated
        return cls(best)

    def __len__(self) -> int:
        return len(self.vertices)

    def is_simple_cycle(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def translated(self, g: int, add) -> "Face":
        return Face.from_walk([add(v, g) for v in self.vertices])


def _group_add_table(field: Field) -> np.ndarray:
    q, p, e = field.q, field.p, field.e
    if e == 1:
        idx = np.arange(q, dtype=np.int64)
        return (idx[:, None] + idx[None, :]) % q
    idx = np.arange(q, dtype=np.int64)
    table = np.zeros((q, q), dtype=np.int64)
    weight = 1
    for _ in range(e):
        digit = (idx // weight) % p
        table += weight * ((digit[:, None] + digit[None, :]) % p)
        weight *= p
    return table


class Embedding:
    """Rotation system on the complete graph with vertices 0..q-1.

    `table[u][v]` is the vertex w with rotation(u,v) = (u,w); the diagonal
    holds the sentinel table[u][u] = u.  For embeddings over a group the
    rotation is the translate of the rotation at vertex 0.
    """

    def __init__(self, table: np.ndarray, field: Field | None = None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("rotation table must be square")
        self.table = table
        self.field = field
        self.q = table.shape[0]
        self._add_table = _group_add_table(field) if field is not None else None
        self._inverse_table: np.ndarray | None = None

    @property
    def rotation_at_zero(self) -> np.ndarray:
        return self.table[0]

    @property
    def add_table(self) -> np.ndarray:
        if self._add_table is None:
            raise ValueError("embedding has no group structure")
        return self._add_table

    @property
    def inverse_table(self) -> np.ndarray:
        if self._inverse_table is None:
            q = self.q
            inv = np.empty_like(self.table)
            rows = np.repeat(np.arange(q, dtype=np.int64), q)
            inv[rows, self.table.ravel()] = np.tile(np.arange(q, dtype=np.int64), q)
            self._inverse_table = inv
        return self._inverse_table

    @classmethod
    def from_zero_rotation(
        cls, field: Field, rho0: Mapping[int, int], check_cycle: bool = True
    ) -> "Embedding":
        q = field.q
        if set(rho0) != set(range(1, q)) or set(rho0.values()) != set(range(1, q)):
            raise ValueError("rotation at 0 must permute the nonzero group elements")
        if check_cycle and _orbit_length(rho0, next(iter(rho0))) != q - 1:
            raise ValueError("rotation at 0 is not a single cycle; orderings are not compatible")
        rho = np.zeros(q, dtype=np.int64)
        for a, b in rho0.items():
            rho[a] = b
        add = _group_add_table(field)
        table = np.empty((q, q), dtype=np.int64)
        rows = np.arange(q, dtype=np.int64)
        table[rows[:, None], add[:, 1:]] = add[:, rho[1:]]
        table[rows, rows] = rows
        emb = cls(table, field)
        emb._add_table = add
        return emb

    @classmethod
    def from_vertex_cycles(cls, cycles: Mapping[int, Sequence[int]]) -> "Embedding":
        """Hand-built rotation: cycles[u] lists the neighbors of u in rotation
        order.  Vertices must be 0..q-1 and every cycle must cover them all
        but u (complete graph)."""
        q = len(cycles)
        if set(cycles) != set(range(q)):
            raise ValueError("vertices must be 0..q-1")
        table = np.empty((q, q), dtype=np.int64)
        for u, cycle in cycles.items():
            if sorted(cycle) != [v for v in range(q) if v != u]:
                raise ValueError(f"rotation at {u} must list every other vertex once")
            table[u, u] = u
            for i, v in enumerate(cycle):
                table[u, v] = cycle[(i + 1) % len(cycle)]
        return cls(table)

    def rotation_cycle_at(self, x: int) -> list[int]:
        """Neighbors of x in rotation order, starting at the smallest."""
        start = 0 if x != 0 else 1
        cycle = [start]
        v = int(self.table[x, start])
        while v != start:
            cycle.append(v)
            v = int(self.table[x, v])
        return cycle


def _orbit_length(mapping: Mapping[int, int], start: int) -> int:
    length = 1
    x = mapping[start]
    while x != start:
        x = mapping[x]
        length += 1
    return length


def zero_rotation_from_orderings(
    array: PartiallyFilledArray, pair: OrderingPair
) -> dict[int, int]:
    """The permutation r0 of the nonzero elements induced by the orderings."""
    g = array.group
    entries = pair.entries
    negatives = {g.neg(x) for x in entries}
    if entries | negatives != set(range(1, g.q)) or entries & negatives:
        raise ValueError("entries and their negatives do not cover the nonzero elements once each")
    rho0 = {}
    for a in entries:
        rho0[a] = g.neg(pair.row_successor[a])
    for a in negatives:
        rho0[a] = pair.col_successor[g.neg(a)]
    return rho0


def build_embedding(array: PartiallyFilledArray, pair: OrderingPair) -> Embedding:
    """Embedding of K_q from a Heffter array and compatible orderings."""
    rho0 = zero_rotation_from_orderings(array, pair)
    return Embedding.from_zero_rotation(array.group, rho0, check_cycle=True)


def validate_rotation(emb: Embedding) -> bool:
    """True iff at every vertex the rotation is one (q-1)-cycle on the rest."""
    q = emb.q
    table = emb.table.tolist()
    for x in range(q):
        row = table[x]
        if row[x] != x:
            return False
        start = 0 if x != 0 else 1
        seen = 1
        v = row[start]
        while v != start:
            if v == x or seen > q:
                return False
            v = row[v]
            seen += 1
        if seen != q - 1:
            return False
    return True


def trace_faces(emb: Embedding) -> list[Face]:
    """Partition all q(q-1) directed edges into faces.

    Directed edge (u,v) is followed by (v, rotation_v(u)); each face is the
    closed walk of first vertices.  Returned in canonical sorted order.
    """
    q = emb.q
    table = emb.table.tolist()
    visited = [[False] * q for _ in range(q)]
    faces = []
    for u0 in range(q):
        for v0 in range(q):
            if u0 == v0 or visited[u0][v0]:
                continue
            walk = []
            u, v = u0, v0
            while not visited[u][v]:
                visited[u][v] = True
                walk.append(u)
                u, v = v, table[v][u]
            faces.append(Face.from_walk(walk))
    faces.sort(key=lambda f: f.vertices)
    return faces


def closed_form_faces(
    array: PartiallyFilledArray, pair: OrderingPair, x: int, a: int
) -> tuple[Face, Face]:
    """The two faces on the edge {x, x+a}, straight from the orderings.

    Returns (face through the directed edge (x, x+a), face through (x+a, x)).
    The face whose edge difference is an array entry develops a column via
    the column successor; the other develops a row via predecessors.
    """
    if a == 0:
        raise ValueError("zero difference does not define an edge")
    g = array.group
    entries = pair.entries

    def face_through(base: int, diff: int) -> Face:
        if diff in entries:
            verts = [base]
            s = g.add(base, diff)
            w = diff
            while s != base:
                if len(verts) > g.q:
                    raise ValueError("column development does not close")
                verts.append(s)
                w = pair.col_successor[w]
                s = g.add(s, w)
            return Face.from_walk(verts)
        b = g.neg(diff)
        if b not in entries:
            raise ValueError(f"difference {diff} is not covered by the array")
        row_pred = {v: k for k, v in pair.row_successor.items()}
        h = _orbit_length(pair.row_successor, b)
        terms = []
        c = b
        for _ in range(h - 1):
            c = row_pred[c]
            terms.append(c)
        partial = []
        s = 0
        for t in terms:
            s = g.add(s, t)
            partial.append(s)
        verts = [base] + [g.add(base, partial[t]) for t in range(h - 2, -1, -1)]
        return Face.from_walk(verts)

    return face_through(x, a), face_through(g.add(x, a), g.neg(a))


@dataclass
class BiembeddingReport:
    ok: bool
    edge_face_lengths_ok: bool
    faces_simple_ok: bool
    two_colorable_ok: bool
    failures: list[str]
    face_census: dict[int, int]


def verify_biembedding(
    emb: Embedding, m: int, n: int, faces: list[Face] | None = None
) -> BiembeddingReport:
    """Check the two-face-lengths structure of the embedding.

    (i) every undirected edge lies on one face of length m and one of length
    n, (ii) every face boundary is a simple cycle, (iii) faces are
    2-colorable by length class (the two faces along any edge differ in
    length).
    """
    if faces is None:
        faces = trace_faces(emb)
    failures: list[str] = []

    faces_simple_ok = True
    for face in faces:
        if not face.is_simple_cycle():
            faces_simple_ok = False
            if len(failures) < 5:
                failures.append(f"face {face.vertices} repeats a vertex")

    edge_side_lengths: dict[tuple[int, int], list[int]] = {}
    for face in faces:
        verts = face.vertices
        size = len(verts)
        for i in range(size):
            u, v = verts[i], verts[(i + 1) % size]
            edge_side_lengths.setdefault((u, v), []).append(size)

    edge_face_lengths_ok = True
    two_colorable_ok = True
    for u in range(emb.q):
        for v in range(u + 1, emb.q):
            sides = edge_side_lengths.get((u, v), []) + edge_side_lengths.get((v, u), [])
            if sorted(sides) != sorted([m, n]):
                edge_face_lengths_ok = False
                if len(failures) < 5:
                    failures.append(f"edge {{{u},{v}}} lies on faces of lengths {sides}")
            if len(sides) == 2 and sides[0] == sides[1]:
                two_colorable_ok = False

    census = dict(sorted(Counter(len(f) for f in faces).items()))
    ok = edge_face_lengths_ok and faces_simple_ok and two_colorable_ok
    return BiembeddingReport(
        ok=ok,
        edge_face_lengths_ok=edge_face_lengths_ok,
        faces_simple_ok=faces_simple_ok,
        two_colorable_ok=two_colorable_ok,
        failures=failures,
        face_census=census,
    )


@dataclass(frozen=True)
class SurfaceReport:
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    genus: int
    face_census: dict[int, int]


def surface_report(emb: Embedding, faces: list[Face] | None = None) -> SurfaceReport:
    """Euler characteristic and genus of the orientable surface."""
    if faces is None:
        faces = trace_faces(emb)
    v = emb.q
    e = emb.q * (emb.q - 1) // 2
    f = len(faces)
    chi = v - e + f
    if (2 - chi) % 2 != 0 or chi > 2:
        raise ValueError(f"non-integer or negative genus from euler characteristic {chi}")
    census = dict(sorted(Counter(len(face) for face in faces).items()))
    return SurfaceReport(
        vertices=v,
        edges=e,
        faces=f,
        euler_characteristic=chi,
        genus=(2 - chi) // 2,
        face_census=census,
    )


def faces_to_text(faces: Iterable[Face]) -> str:
    """One face per line, canonical rotation, lines sorted."""
    lines = sorted(" ".join(str(v) for v in f.vertices) for f in faces)
    return "\n".join(lines) + "\n"


def faces_to_json(faces: Iterable[Face]) -> list[dict]:
    return [
        {"length": len(f), "vertices": list(f.vertices)}
        for f in sorted(faces, key=lambda f: f.vertices)
    ]
