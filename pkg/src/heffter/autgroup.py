"""Automorphisms of complete-graph embeddings.

A bijection s of the vertices is an automorphism of the embedding when it
commutes with the rotation on every directed edge (orientation preserving)
or conjugates it to its inverse on every directed edge (orientation
reversing).  Mixed behavior across edges does not qualify.

Two searches are implemented and must agree wherever both run:

- `restricted_search` enumerates the 2(q-1) dihedral candidates that any
  0-fixing automorphism of a group-translate rotation must restrict to on
  the nonzero elements (powers of the rotation cycle at 0 and reflections of
  it), then extends the stabilizer by the q translations.
- `exhaustive_search` uses no structure at all: an automorphism of a
  connected embedding is pinned down by the image of one directed edge plus
  an orientation flag, so all q(q-1) images are propagated around the
  rotation at vertex 0 and each resulting bijection is verified against the
  full rotation table.  Quadratic-size checks keep this honest but cap it at
  small q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .arrays import PartiallyFilledArray
from .embedding import Embedding, validate_rotation

Orientation = str  # "preserving" | "reversing"


def _as_perm(emb_size: int, perm: Sequence[int] | np.ndarray) -> np.ndarray:
    arr = np.asarray(perm, dtype=np.int64)
    if arr.shape != (emb_size,) or not np.array_equal(np.sort(arr), np.arange(emb_size)):
        raise ValueError("not a bijection of the vertex set")
    return arr


def classify_isomorphism(
    emb_from: Embedding, emb_to: Embedding, perm: Sequence[int] | np.ndarray
) -> Orientation | None:
    """Orientation class of perm as an embedding isomorphism, or None."""
    if emb_from.q != emb_to.q:
        return None
    sigma = _as_perm(emb_from.q, perm)
    image = sigma[emb_from.table]
    target = emb_to.table[sigma[:, None], sigma[None, :]]
    if np.array_equal(image, target):
        return "preserving"
    target_inv = emb_to.inverse_table[sigma[:, None], sigma[None, :]]
    if np.array_equal(image, target_inv):
        return "reversing"
    return None


def classify_automorphism(emb: Embedding, perm: Sequence[int] | np.ndarray) -> Orientation | None:
    return classify_isomorphism(emb, emb, perm)


def translation_perm(emb: Embedding, g: int) -> np.ndarray:
    """The translation x -> x + g as a vertex permutation."""
    return emb.add_table[:, g].copy()


def cycle_notation(perm: Sequence[int] | np.ndarray) -> str:
    """Cycle decomposition, fixed points omitted, smallest elements first."""
    perm = list(perm)
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = perm[x]
        parts.append("(" + " ".join(str(v) for v in cycle) + ")")
    return "".join(parts) if parts else "()"


def perm_order(perm: tuple[int, ...]) -> int:
    identity = tuple(range(len(perm)))
    power = perm
    order = 1
    while power != identity:
        power = tuple(perm[i] for i in power)
        order += 1
    return order


@dataclass(frozen=True)
class GroupCertificate:
    size: int
    cyclic: bool
    generator: tuple[int, ...] | None
    generator_order: int | None
    order_profile: tuple[tuple[int, int], ...]  # (element order, multiplicity)


def group_structure(perms: Iterable[Sequence[int]]) -> GroupCertificate:
    """Closure check plus cyclic-structure certificate for a set of perms."""
    elements = {tuple(int(v) for v in p) for p in perms}
    if not elements:
        raise ValueError("empty permutation set")
    size = len(next(iter(elements)))
    identity = tuple(range(size))
    if identity not in elements:
        raise ValueError("not closed: identity missing")
    for a in elements:
        for b in elements:
            composed = tuple(a[i] for i in b)
            if composed not in elements:
                raise ValueError("not closed under composition")
    orders = sorted((perm_order(p), p) for p in elements)
    profile: dict[int, int] = {}
    for order, _ in orders:
        profile[order] = profile.get(order, 0) + 1
    max_order, generator = orders[-1]
    cyclic = max_order == len(elements)
    return GroupCertificate(
        size=len(elements),
        cyclic=cyclic,
        generator=generator if cyclic else None,
        generator_order=max_order if cyclic else None,
        order_profile=tuple(sorted(profile.items())),
    )


@dataclass
class AutReport:
    q: int
    aut0_plus: int
    aut0_minus: int
    total: int
    cyclic: bool
    generator: str
    generator_order: int | None
    method: str
    stabilizer: tuple[tuple[int, ...], ...]  # 0-fixing automorphisms, sorted
    m: int | None = None
    n: int | None = None

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "aut0_plus": self.aut0_plus,
            "aut0_minus": self.aut0_minus,
            "total": self.total,
            "cyclic": self.cyclic,
            "generator": self.generator,
            "method": self.method,
        }


def _stabilizer_report(
    emb: Embedding,
    classified: Mapping[tuple[int, ...], Orientation],
    total: int,
    method: str,
    m: int | None,
    n: int | None,
) -> AutReport:
    plus = sorted(p for p, o in classified.items() if o == "preserving")
    minus = sorted(p for p, o in classified.items() if o == "reversing")
    cert = group_structure(list(classified)) if classified else None
    return AutReport(
        q=emb.q,
        aut0_plus=len(plus),
        aut0_minus=len(minus),
        total=total,
        cyclic=cert.cyclic if cert else False,
        generator=cycle_notation(cert.generator) if cert and cert.generator else "()",
        generator_order=cert.generator_order if cert else None,
        method=method,
        stabilizer=tuple(sorted(classified)),
        m=m,
        n=n,
    )


def restricted_search(emb: Embedding, m: int | None = None, n: int | None = None) -> AutReport:
    """Stabilizer of 0 from the dihedral candidates, extended by translations.

    Any automorphism fixing 0 of a group-translate embedding restricts to the
    nonzero elements as a power of the rotation cycle at 0 or as a reflection
    of it.  All 2(q-1) candidates are classified against the full rotation
    table; all q translations are verified orientation preserving, so the
    group order is q times the stabilizer size.
    """
    if emb.field is None:
        raise ValueError("restricted search needs the group structure of the embedding")
    q = emb.q
    cycle = emb.rotation_cycle_at(0)
    length = len(cycle)
    if length != q - 1:
        raise ValueError("rotation at 0 is not a single cycle")
    cyc = np.array(cycle, dtype=np.int64)
    shifts = np.arange(length)

    classified: dict[tuple[int, ...], Orientation] = {}
    for ell in range(length):
        for indices in (shifts + ell, ell - shifts):
            perm = np.arange(q, dtype=np.int64)
            perm[cyc] = cyc[indices % length]
            orientation = classify_automorphism(emb, perm)
            if orientation is not None:
                classified[tuple(int(v) for v in perm)] = orientation

    for g in range(q):
        if classify_automorphism(emb, translation_perm(emb, g)) != "preserving":
            raise AssertionError(f"translation by {g} is not orientation preserving")

    return _stabilizer_report(emb, classified, total=q * len(classified), method="restricted", m=m, n=n)


def exhaustive_search(
    emb: Embedding, m: int | None = None, n: int | None = None, limit: int | None = 71
) -> AutReport:
    """Structure-free enumeration of the full automorphism group.

    Every candidate image of the directed edge (0, first neighbor) plus an
    orientation flag is propagated around the rotation at 0 and the induced
    bijection verified on all directed edges.  Cost grows cubically; refuse
    above the limit unless it is lifted.
    """
    q = emb.q
    if limit is not None and q > limit:
        raise ValueError(f"too large: q={q} exceeds the exhaustive-search budget {limit}")
    if not validate_rotation(emb):
        raise ValueError("not a valid rotation system")
    cycle0 = emb.rotation_cycle_at(0)
    length = len(cycle0)
    cyc0 = np.array(cycle0, dtype=np.int64)
    shifts = np.arange(length)

    found: dict[tuple[int, ...], Orientation] = {}
    for u in range(q):
        cycle_u = np.array(emb.rotation_cycle_at(u), dtype=np.int64)
        position = {int(v): j for j, v in enumerate(cycle_u)}
        for w in range(q):
            if w == u:
                continue
            base = position[w]
            for oriented_shifts in (base + shifts, base - shifts):
                perm = np.empty(q, dtype=np.int64)
                perm[0] = u
                perm[cyc0] = cycle_u[oriented_shifts % length]
                key = tuple(int(v) for v in perm)
                if key in found:
                    continue
                orientation = classify_automorphism(emb, perm)
                if orientation is not None:
                    found[key] = orientation

    stabilizer = {p: o for p, o in found.items() if p[0] == 0}
    return _stabilizer_report(emb, stabilizer, total=len(found), method="exhaustive", m=m, n=n)


def iter_full_group(emb: Embedding, report: AutReport):
    """Expand the (translation, stabilizer) representation on demand.

    Yields every automorphism as an explicit permutation: translation by g
    composed after each 0-fixing automorphism, q * |stabilizer| in total.
    """
    for g in range(emb.q):
        tau = translation_perm(emb, g)
        for sigma in report.stabilizer:
            yield tau[np.asarray(sigma, dtype=np.int64)]


def multiplicative_auts(emb: Embedding, array: PartiallyFilledArray) -> dict[int, np.ndarray]:
    """The multiplication maps z -> entry * z, one per array entry.

    Each must classify as orientation preserving, and together they must be
    closed under composition (the entry set is a multiplicative subgroup).
    """
    g = array.group
    if emb.field != g:
        raise ValueError("embedding and array live over different groups")
    maps: dict[int, np.ndarray] = {}
    for entry in sorted(set(array.entries())):
        perm = np.array([g.mul(entry, z) for z in range(g.q)], dtype=np.int64)
        if classify_automorphism(emb, perm) != "preserving":
            raise ValueError(f"multiplication by {entry} is not an embedding automorphism")
        maps[entry] = perm
    cert = group_structure([tuple(int(v) for v in p) for p in maps.values()])
    if cert.size != len(maps):
        raise AssertionError("multiplication maps collapsed unexpectedly")
    return maps
