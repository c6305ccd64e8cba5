"""Surface-group epimorphisms, quick products, witness search, pair counts
and the quadruple search."""

import numpy as np
import pytest

from handlebody.groups import (coset_enumerate, cyclic, direct_product,
                               evaluate_in_group, Presentation, semidirect_pq)
from handlebody.homs import (EXTENDS, Epimorphism, IMMEDIATE, NO_WITNESS,
                             NotGenerating, QuadrupleCapExceeded,
                             RelationViolated, batch_pair_witnesses, evaluate,
                             handlebody_witness, make_epimorphism,
                             noncommuting_pair_count, partner_pairs,
                             quadruple_search, quick_verdict, quick_witness,
                             r3_criterion_word, r_cubed_criterion,
                             standard_metacyclic_images)
from handlebody.orbit import generate_c0
from handlebody.words import Word, parse_word


def test_epimorphism_validation(group55, heis3):
    a, b = group55.generators
    theta = Epimorphism(group55, standard_metacyclic_images(group55))
    assert theta.images[0] == a
    assert theta.genus_of_total_space == 56

    with pytest.raises(RelationViolated) as err:
        Epimorphism(group55, (a, b, a, b))  # [a,b]^2 != 1
    assert err.value.element != 0

    x, _ = heis3.generators
    with pytest.raises(NotGenerating) as err:
        Epimorphism(heis3, (x, x, x, x))
    assert err.value.closure_size == 3

    with pytest.raises(ValueError):
        Epimorphism(heis3, (x, x, x))

    # The swap pattern satisfies [a,b][b,a] = 1 in any group.
    x, y = heis3.generators
    assert make_epimorphism(heis3, x, y, y, x) == Epimorphism(heis3,
                                                              (x, y, y, x))


def test_evaluate_matches_scalar_reference(heis3, orbit3):
    x, y = heis3.generators
    theta = Epimorphism(heis3, (x, y, y, x))
    for w in orbit3:
        assert evaluate(theta, w) == evaluate_in_group(heis3, w, theta.images)
    with pytest.raises(ValueError):
        evaluate(theta, Word([(0, 1)], rank=3))


def test_quick_witness_kinds(heis3):
    x, y = heis3.generators
    zinv = heis3.inverse(heis3.commutator(x, y))

    # Abelian images: the commutator product fires first.
    K = cyclic(5)
    g = K.generators[0]
    assert quick_witness(Epimorphism(K, (g, g, g, g))) == \
        "commutator [u,v] trivial"

    # (x, y, x^-1, y): [x^-1, y] = [x,y]^-1 in a class-2 group, and
    # u*r = 1 while [u,v] != 1.
    assert heis3.commutator(heis3.inverse(x), y) == zinv
    theta = Epimorphism(heis3, (x, y, heis3.inverse(x), y))
    assert quick_witness(theta) == "ur trivial"
    v = quick_verdict(theta)
    assert v.value == IMMEDIATE and v.kind == "ur trivial"


def test_quick_witness_none_for_standard_metacyclic(group55):
    theta = Epimorphism(group55, standard_metacyclic_images(group55))
    assert quick_witness(theta) is None
    assert quick_verdict(theta) is None


def test_handlebody_witness_finds_recorded_word(group55, orbit3):
    theta = Epimorphism(group55, standard_metacyclic_images(group55))
    verdict = handlebody_witness(theta, orbit3)
    assert verdict.value == EXTENDS
    report = verdict.report
    assert evaluate(theta, report.witness) == 0
    assert report.sigma_path == (3, 4, 4)
    assert report.verification == 0
    assert verdict.searched_depth == 3


def test_handlebody_witness_negative_at_depth_zero(group55):
    theta = Epimorphism(group55, standard_metacyclic_images(group55))
    verdict = handlebody_witness(theta, generate_c0(depth=0))
    assert verdict.value == NO_WITNESS
    assert verdict.report is None
    assert verdict.searched_depth == 0


def test_r3_criterion_equivalence():
    w = r3_criterion_word()
    assert len(w) > 0
    for p, q, r in ((7, 3, 2), (11, 5, 3), (11, 5, 4), (23, 11, 2),
                    (31, 5, 2)):
        G = semidirect_pq(p, q, r)
        theta = Epimorphism(G, standard_metacyclic_images(G))
        assert (evaluate(theta, w) == 0) == r_cubed_criterion(p, r)


def test_noncommuting_pair_count(heis3, group55):
    assert noncommuting_pair_count(heis3) == 432
    assert noncommuting_pair_count(group55) == 2640
    s3 = coset_enumerate(Presentation(["a", "b"], ["a^3", "b^2", "(a b)^2"]))
    brute = sum(1 for u in range(6) for v in range(6)
                if s3.commutator(u, v) != 0)
    assert noncommuting_pair_count(s3) == brute
    assert noncommuting_pair_count(cyclic(9)) == 0


def _brute_partner_pairs(G, a, b):
    target = G.inverse(G.commutator(a, b))
    out = []
    for r in range(G.order):
        for t in range(G.order):
            if G.commutator(r, t) != target:
                continue
            if len(G.subgroup_closure([a, b, r, t])) == G.order:
                out.append((r, t))
    return out


def test_partner_pairs_against_brute_force(heis3, group55):
    x, y = heis3.generators
    pairs = partner_pairs(heis3, x, y)
    assert pairs == _brute_partner_pairs(heis3, x, y)
    assert len(pairs) == 216
    assert pairs == sorted(pairs)

    filtered = partner_pairs(heis3, x, y, filter_quick=True)
    assert len(filtered) == 181
    assert set(filtered) <= set(pairs)

    a, b = group55.generators
    assert partner_pairs(group55, a, b) == _brute_partner_pairs(group55, a, b)


def test_batch_pair_witnesses(heis3, orbit9):
    x, y = heis3.generators
    pairs = partner_pairs(heis3, x, y)
    idxs = batch_pair_witnesses(heis3, x, y, pairs, orbit9)
    assert idxs.shape == (216,)
    assert (idxs >= 0).all()
    words = list(orbit9)
    for k in (0, 57, 215):  # spot-check first-index semantics
        r, t = pairs[k]
        theta = Epimorphism(heis3, (x, y, r, t))
        idx = int(idxs[k])
        assert evaluate(theta, words[idx]) == 0
        assert all(evaluate(theta, w) != 0 for w in words[:idx])


def test_batch_pair_witnesses_reports_missing(heis3):
    x, y = heis3.generators
    pairs = partner_pairs(heis3, x, y)[:4]
    idxs = batch_pair_witnesses(heis3, x, y, pairs, generate_c0(depth=0))
    assert (idxs == -1).sum() + (idxs >= 0).sum() == 4


def test_quadruple_search_known_values(group55):
    K = cyclic(5)
    assert quadruple_search(K) == (0, 0, 0, 1)
    assert quadruple_search(group55) == (0, 1, 0, 5)
    s1, s2, s3, s4 = quadruple_search(group55)
    assert group55.commutator(s1, s2) == 0
    assert group55.commutator(s3, s4) == 0
    assert len(group55.subgroup_closure([s1, s2, s3, s4])) == 55


def test_quadruple_search_exhaustion_and_cap(heis3):
    Z2 = cyclic(2)
    G = direct_product(direct_product(direct_product(direct_product(Z2, Z2),
                                                     Z2), Z2), Z2)
    assert quadruple_search(G) is None
    with pytest.raises(QuadrupleCapExceeded):
        quadruple_search(heis3, node_cap=3)


def test_standard_metacyclic_images_family():
    for p, q, r in ((7, 3, 2), (11, 5, 3), (23, 11, 2)):
        G = semidirect_pq(p, q, r)
        theta = Epimorphism(G, standard_metacyclic_images(G))
        assert theta.genus_of_total_space == 1 + p * q
