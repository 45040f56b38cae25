"""Orbit classification, endomorphism images, and the degeneration verdicts."""

import pytest

from extraspecial import orbits
from extraspecial.errors import CapExceeded, ContextError
from extraspecial.groups import ES1, ES2, group
from extraspecial.orbits import (CENTER, CENTRAL_NONID, ES1_NONCENTRAL,
                                 ES2_H_MINUS_K, ES2_ORDER_P2, IDENTITY,
                                 NO_PARTIAL_ORDER, PARTIAL_ORDER, SUBGROUP_H,
                                 TRIVIAL, WHOLE_GROUP, OrbitLabel, classify,
                                 degeneration, endo_image_class,
                                 endo_image_set_bruteforce, image_subgroup_coords,
                                 ob_label, orbit_cardinality, orbit_labels,
                                 orbits_bruteforce, partial_order_report)


def test_classify_frozen(es1_31, es2_31, es2_32):
    assert str(classify(es1_31.identity())) == "IDENTITY"
    assert str(classify(es1_31.element((0, 0, 2)))) == "CENTRAL_NONID"
    assert str(classify(es1_31.element((1, 2, 0)))) == "ES1_NONCENTRAL"
    assert str(classify(es2_31.element((3, 2)))) == "ES2_OB(2)"
    assert str(classify(es2_31.element((6, 1)))) == "ES2_OB(1)"
    assert str(classify(es2_31.element((1, 0)))) == "ES2_ORDER_P2"
    assert str(classify(es2_31.element((3, 0)))) == "CENTRAL_NONID"
    assert str(classify(es2_32.element((3, 0, 2, 0)))) == "ES2_OB(2)"
    assert str(classify(es2_32.element((0, 1, 0, 0)))) == "ES2_H_MINUS_K"
    assert str(classify(es2_32.element((0, 0, 0, 1)))) == "ES2_H_MINUS_K"
    assert str(classify(es2_32.element((2, 0, 0, 0)))) == "ES2_ORDER_P2"


def test_classify_rejects_tilde_kinds():
    gt = group("es1~", 3, 1)
    with pytest.raises(ContextError):
        classify(gt.identity())


def test_orbit_labels(es1_31, es2_31, es2_32):
    assert [str(l) for l in orbit_labels(es1_31)] == [
        "IDENTITY", "CENTRAL_NONID", "ES1_NONCENTRAL"]
    assert [str(l) for l in orbit_labels(es2_31)] == [
        "IDENTITY", "CENTRAL_NONID", "ES2_OB(1)", "ES2_OB(2)", "ES2_ORDER_P2"]
    assert [str(l) for l in orbit_labels(es2_32)] == [
        "IDENTITY", "CENTRAL_NONID", "ES2_OB(1)", "ES2_OB(2)",
        "ES2_H_MINUS_K", "ES2_ORDER_P2"]


def test_orbit_cardinalities_sum_to_group_order():
    for kind, p, n in ((ES1, 3, 1), (ES2, 3, 1), (ES1, 5, 1), (ES2, 5, 1),
                       (ES1, 3, 2), (ES2, 3, 2), (ES2, 7, 3)):
        g = group(kind, p, n)
        assert sum(orbit_cardinality(l, g) for l in orbit_labels(g)) == g.size


def test_orbit_cardinality_frozen(es1_31, es2_31, es2_32):
    assert [orbit_cardinality(l, es1_31) for l in orbit_labels(es1_31)] == [1, 2, 24]
    assert [orbit_cardinality(l, es2_31) for l in orbit_labels(es2_31)] == [1, 2, 3, 3, 18]
    assert [orbit_cardinality(l, es2_32) for l in orbit_labels(es2_32)] == [1, 2, 3, 3, 72, 162]


def test_orbit_cardinality_domain_errors(es1_31, es2_31):
    with pytest.raises(ContextError):
        orbit_cardinality(OrbitLabel(ES1_NONCENTRAL), es2_31)
    with pytest.raises(ContextError):
        orbit_cardinality(ob_label(0), es2_31)
    with pytest.raises(ContextError):
        orbit_cardinality(OrbitLabel(ES2_H_MINUS_K), es2_31)  # H = K at n = 1


def test_bruteforce_partition_matches_classifier(es1_31, es2_31):
    for g in (es1_31, es2_31):
        for cls in orbits_bruteforce(g):
            labels = {str(classify(g.element(c))) for c in cls}
            assert len(labels) == 1
            label = classify(g.element(next(iter(cls))))
            assert orbit_cardinality(label, g) == len(cls)


def test_bruteforce_cap():
    with pytest.raises(CapExceeded):
        orbits_bruteforce(group(ES1, 11, 1))


def test_endo_image_class_frozen(es1_31, es2_31, es2_32):
    assert endo_image_class(es1_31.identity()) == TRIVIAL
    assert endo_image_class(es1_31.element((0, 0, 1))) == CENTER
    assert endo_image_class(es1_31.element((0, 1, 0))) == WHOLE_GROUP
    assert endo_image_class(es2_31.element((3, 1))) == SUBGROUP_H
    assert endo_image_class(es2_31.element((1, 1))) == WHOLE_GROUP
    assert endo_image_class(es2_32.element((0, 0, 1, 0))) == SUBGROUP_H
    assert endo_image_class(es2_32.element((0, 1, 0, 0))) == SUBGROUP_H


def test_image_sets_brute_vs_closed_form(es1_31, es2_31):
    # one representative per orbit; the whole-group sweep lives in acceptance
    for g in (es1_31, es2_31):
        for label in orbit_labels(g):
            rep = next(c for c in g.elements()
                       if classify(g.element(c)) == label)
            e = g.element(rep)
            expected = image_subgroup_coords(g, endo_image_class(e))
            assert endo_image_set_bruteforce(e) == expected


def test_image_subgroup_sizes(es2_31):
    assert len(image_subgroup_coords(es2_31, TRIVIAL)) == 1
    assert len(image_subgroup_coords(es2_31, CENTER)) == 3
    assert len(image_subgroup_coords(es2_31, SUBGROUP_H)) == 9
    assert len(image_subgroup_coords(es2_31, WHOLE_GROUP)) == 27


def test_degeneration_directions(es1_31, es2_31):
    z, x = es1_31.element((0, 0, 1)), es1_31.element((1, 0, 0))
    assert degeneration(x, z) and not degeneration(z, x)
    assert degeneration(z, es1_31.identity())
    assert degeneration(x, x)
    # the es2 failure mode: distinct orbits, both directions
    g1, g2 = es2_31.element((0, 1)), es2_31.element((0, 2))
    assert classify(g1) != classify(g2)
    assert degeneration(g1, g2) and degeneration(g2, g1)
    with pytest.raises(ContextError):
        degeneration(x, g1)


def test_partial_order_report_es1(es1_31):
    rep = partial_order_report(es1_31)
    assert rep.verdict == PARTIAL_ORDER
    assert rep.verified
    assert (IDENTITY, CENTRAL_NONID) in rep.order_chains
    assert (CENTRAL_NONID, ES1_NONCENTRAL) in rep.order_chains
    assert rep.witness is None
    d = rep.to_json_dict()
    assert d["verdict"] == PARTIAL_ORDER and "witness" not in d


def test_partial_order_report_es2(es2_31):
    rep = partial_order_report(es2_31)
    assert rep.verdict == NO_PARTIAL_ORDER
    assert rep.verified
    g1, g2 = rep.witness
    fwd, back = rep.witness_endos
    assert classify(g1) != classify(g2)
    assert fwd.apply(g1) == g2 and back.apply(g2) == g1
    assert not fwd.is_automorphism and not back.is_automorphism
    d = rep.to_json_dict()
    assert d["witness"] == [str(g1), str(g2)]
    assert len(d["witness_endos"]) == 2


def test_partial_order_report_unverified_mode(es2_51):
    # skip verification to stay cheap at larger sizes; verdict is still emitted
    rep = partial_order_report(es2_51, verify=False)
    assert rep.verdict == NO_PARTIAL_ORDER and not rep.verified
    fwd, _ = rep.witness_endos
    assert fwd.apply(rep.witness[0]) == rep.witness[1]
