from __future__ import annotations

import numpy as np
import pytest

from heffter.algebra import make_field
from heffter.arrays import build_rank_one
from heffter.autgroup import (
    classify_automorphism,
    classify_isomorphism,
    cycle_notation,
    exhaustive_search,
    group_structure,
    iter_full_group,
    multiplicative_auts,
    perm_order,
    restricted_search,
    translation_perm,
)
from heffter.embedding import Embedding, build_embedding, trace_faces
from heffter.orderings import natural_orderings

from test_embedding import k3_embedding, perturbed_embedding

# product of three 10-cycles: multiplication by 9 composed with the rotation
# at 0 of the reference embedding, in signed residues mod 31
LAMBDA9_AFTER_ROTATION = (
    (1, -18, 4, -10, 16, -9, 2, -5, 8, -20),
    (-2, 28, -8, 19, -1, 14, -4, 25, -16, 7),
    (5, -28, 20, -19, 18, -14, 10, -25, 9, -7),
)


def multiplication_perm(q, eta):
    return np.array([(eta * x) % q for x in range(q)], dtype=np.int64)


def test_identity_is_preserving(h35_embedding):
    assert classify_automorphism(h35_embedding, np.arange(31)) == "preserving"


def test_all_translations_are_preserving(h35_embedding):
    for g in range(31):
        perm = translation_perm(h35_embedding, g)
        assert classify_automorphism(h35_embedding, perm) == "preserving"


def test_multiplication_by_9_is_preserving(h35_embedding):
    assert classify_automorphism(h35_embedding, multiplication_perm(31, 9)) == "preserving"


def test_vertex_swap_is_not_an_automorphism(h35_embedding):
    perm = np.arange(31)
    perm[[1, 2]] = perm[[2, 1]]
    assert classify_automorphism(h35_embedding, perm) is None


def test_classify_rejects_non_bijection(h35_embedding):
    with pytest.raises(ValueError, match="bijection"):
        classify_automorphism(h35_embedding, [0] * 31)


def test_lambda9_conjugation_matches_reference_cycles(h35_embedding):
    lam9 = multiplication_perm(31, 9)
    rho0 = h35_embedding.rotation_at_zero
    expected = np.arange(31)
    for cycle in LAMBDA9_AFTER_ROTATION:
        values = [v % 31 for v in cycle]
        for i, v in enumerate(values):
            expected[v] = values[(i + 1) % len(values)]
    assert np.array_equal(lam9[rho0], expected)
    assert np.array_equal(rho0[lam9], expected)  # the two maps commute


def test_restricted_search_reference_counts(h35_embedding):
    report = restricted_search(h35_embedding, 3, 5)
    assert (report.aut0_plus, report.aut0_minus) == (15, 0)
    assert report.total == 465 == 31 * 30 // 2
    assert report.cyclic and report.generator_order == 15
    assert report.method == "restricted"
    assert report.to_json()["aut0_plus"] == 15


def test_restricted_search_h37():
    field = make_field(43, 1)
    array = build_rank_one(field, 3, 7)
    emb = build_embedding(array, natural_orderings(array, 0))
    report = restricted_search(emb, 3, 7)
    assert (report.aut0_plus, report.aut0_minus, report.total) == (21, 0, 903)
    assert report.cyclic
    # the 0-stabilizer is exactly the set of multiplication maps by entries
    maps = multiplicative_auts(emb, array)
    assert {tuple(int(v) for v in p) for p in maps.values()} == set(report.stabilizer)


def test_exhaustive_agrees_with_restricted(h35_embedding):
    restricted = restricted_search(h35_embedding, 3, 5)
    exhaustive = exhaustive_search(h35_embedding, 3, 5)
    assert exhaustive.method == "exhaustive"
    assert restricted.stabilizer == exhaustive.stabilizer
    assert (restricted.aut0_plus, restricted.aut0_minus, restricted.total) == (
        exhaustive.aut0_plus,
        exhaustive.aut0_minus,
        exhaustive.total,
    )


def test_exhaustive_agrees_with_restricted_q43():
    field = make_field(43, 1)
    array = build_rank_one(field, 3, 7)
    emb = build_embedding(array, natural_orderings(array, 0))
    assert restricted_search(emb, 3, 7).stabilizer == exhaustive_search(emb, 3, 7).stabilizer


def test_exhaustive_respects_budget(h35_embedding):
    with pytest.raises(ValueError, match="too large"):
        exhaustive_search(h35_embedding, limit=29)


def test_exhaustive_k3_full_symmetric_group():
    report = exhaustive_search(k3_embedding())
    assert report.total == 6
    assert report.aut0_plus + report.aut0_minus == 2


def test_perturbed_rotation_keeps_only_translations(h35_embedding):
    pert = perturbed_embedding(h35_embedding)
    report = exhaustive_search(pert, limit=None)
    assert report.total == 31  # translations survive, multiplications do not
    assert report.aut0_plus + report.aut0_minus == 1


def test_restricted_requires_group(h35_embedding):
    with pytest.raises(ValueError, match="group structure"):
        restricted_search(k3_embedding())


def test_restricted_rejects_split_rotation(z31):
    fake = Embedding.from_zero_rotation(
        z31, {a: a for a in range(1, 31)}, check_cycle=False
    )
    with pytest.raises(ValueError, match="single cycle"):
        restricted_search(fake)


def test_full_group_expansion(h35_embedding):
    report = restricted_search(h35_embedding, 3, 5)
    expanded = {tuple(int(v) for v in p) for p in iter_full_group(h35_embedding, report)}
    assert len(expanded) == report.total == 465
    for perm in list(expanded)[::31]:  # spot-check a coset transversal
        assert classify_automorphism(h35_embedding, perm) == "preserving"


def test_multiplicative_auts_reference(h35, h35_embedding):
    maps = multiplicative_auts(h35_embedding, h35)
    assert len(maps) == 15
    assert set(maps) == set(h35.entries())
    composed = maps[2][maps[5]]  # multiply by 5, then by 2
    assert np.array_equal(composed, maps[10])


def test_multiplicative_auts_rejects_mismatched_group(h35):
    with pytest.raises(ValueError, match="different groups"):
        multiplicative_auts(k3_embedding(), h35)


def test_group_structure_cyclic(h35_embedding):
    report = restricted_search(h35_embedding, 3, 5)
    cert = group_structure(report.stabilizer)
    assert cert.size == 15 and cert.cyclic
    assert cert.generator_order == 15
    assert perm_order(cert.generator) == 15
    # certificate is re-verifiable: powers of the generator enumerate the group
    power = cert.generator
    generated = {power}
    for _ in range(cert.generator_order - 1):
        power = tuple(cert.generator[i] for i in power)
        generated.add(power)
    assert generated == set(report.stabilizer)


def test_group_structure_trivial_and_not_closed():
    identity = tuple(range(4))
    cert = group_structure([identity])
    assert cert.size == 1 and cert.cyclic and cert.generator == identity
    with pytest.raises(ValueError, match="closed"):
        group_structure([identity, (1, 2, 0, 3)])
    with pytest.raises(ValueError, match="identity"):
        group_structure([(1, 2, 0, 3)])


def test_automorphisms_preserve_face_lengths(h35_embedding):
    faces = trace_faces(h35_embedding)
    by_length = {}
    for face in faces:
        by_length.setdefault(len(face), set()).add(face.vertices)
    report = restricted_search(h35_embedding, 3, 5)
    for perm in report.stabilizer:
        for face in faces:
            image = [perm[v] for v in face.vertices]
            smallest = image.index(min(image))
            canonical = tuple(image[smallest:] + image[:smallest])
            assert canonical in by_length[len(face)]


def test_stabilizer_bound(h35_embedding):
    report = restricted_search(h35_embedding, 3, 5)
    assert report.aut0_plus + report.aut0_minus <= 15
    assert report.aut0_minus == 0


def test_classify_isomorphism_thin_variant(h35_embedding):
    perm = translation_perm(h35_embedding, 4)
    assert classify_isomorphism(h35_embedding, h35_embedding, perm) == "preserving"
    assert classify_isomorphism(h35_embedding, k3_embedding(), np.arange(31)) is None


def test_cycle_notation():
    assert cycle_notation([0, 1, 2]) == "()"
    assert cycle_notation([1, 2, 0, 3]) == "(0 1 2)"
    assert cycle_notation([1, 0, 3, 2]) == "(0 1)(2 3)"
