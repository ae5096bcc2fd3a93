from __future__ import annotations

import pytest

from cyconf.baseline import affine_image, canonical_form, enumerate_base_lines
from cyconf.configuration import CyclicConfiguration
from cyconf.iso import (
    IsoWitness,
    automorphisms,
    completeness_report,
    exact_isomorphic,
    isomorphic,
    multiplier_equivalent,
    witness_valid,
)
from cyconf.residue_ring import CapExceeded, units

FANO = CyclicConfiguration(7, (0, 1, 3))
MOEBIUS_KANTOR = CyclicConfiguration(8, (0, 1, 3))


def test_witness_point_maps():
    w = IsoWitness(kind="multiplier", a=5, b=0)
    assert w.as_point_map(8) == tuple(5 * x % 8 for x in range(8))
    table = tuple(range(7))
    assert IsoWitness(kind="explicit", point_map=table).as_point_map(7) == table


def test_witness_valid_checks_bijectivity_and_lines():
    w = IsoWitness(kind="explicit", point_map=(0,) * 7)
    assert not witness_valid(FANO, FANO, w)
    shuffle = IsoWitness(kind="explicit", point_map=(1, 0, 2, 3, 4, 5, 6))
    assert not witness_valid(FANO, FANO, shuffle)
    translation = IsoWitness(kind="multiplier", a=1, b=3)
    assert witness_valid(FANO, FANO, translation)


def test_multiplier_equivalent_least_pair():
    assert multiplier_equivalent(8, (0, 1, 3), (0, 5, 7)) == (5, 0)
    assert multiplier_equivalent(13, (0, 1, 3), (0, 1, 4)) is None


def test_exact_identity_shortcut():
    w = exact_isomorphic(FANO, FANO)
    assert w is not None and w.as_point_map(7) == tuple(range(7))


def test_exact_finds_affine_pairs():
    C2 = CyclicConfiguration(8, (0, 5, 7))
    w = exact_isomorphic(MOEBIUS_KANTOR, C2)
    assert w is not None
    assert witness_valid(MOEBIUS_KANTOR, C2, w)


def test_exact_separates_the_two_classes_at_13():
    C1 = CyclicConfiguration(13, (0, 1, 3))
    C2 = CyclicConfiguration(13, (0, 1, 4))
    assert exact_isomorphic(C1, C2) is None


def test_exact_requires_common_modulus():
    with pytest.raises(ValueError):
        exact_isomorphic(FANO, MOEBIUS_KANTOR)


def test_exact_distinguishes_line_sizes():
    C4 = CyclicConfiguration(13, (0, 1, 3, 9))
    C3 = CyclicConfiguration(13, (0, 1, 3))
    assert exact_isomorphic(C3, C4) is None


def test_exact_cap():
    big = CyclicConfiguration(400, (0, 1, 3))
    with pytest.raises(CapExceeded):
        exact_isomorphic(big, big)
    with pytest.raises(CapExceeded):
        automorphisms(big)


def test_exact_deterministic():
    C2 = CyclicConfiguration(8, (0, 5, 7))
    w1 = exact_isomorphic(MOEBIUS_KANTOR, C2)
    w2 = exact_isomorphic(MOEBIUS_KANTOR, C2)
    assert w1 == w2


def test_automorphism_group_orders():
    assert len(automorphisms(FANO)) == 168
    assert len(automorphisms(MOEBIUS_KANTOR)) == 48


def test_automorphisms_form_a_group():
    auts = automorphisms(MOEBIUS_KANTOR)
    aut_set = set(auts)
    assert tuple(range(8)) in aut_set
    assert tuple((x + 1) % 8 for x in range(8)) in aut_set
    sample = auts[5], auts[17], auts[30]
    for f in sample:
        for g in sample:
            assert tuple(g[f[x]] for x in range(8)) in aut_set
        assert tuple(sorted(f)) == tuple(range(8))


def test_every_automorphism_preserves_lines():
    target = FANO.line_set()
    for sigma in automorphisms(FANO):
        assert {frozenset(sigma[x] for x in L) for L in FANO.lines()} == target


def test_isomorphic_method_dispatch_agrees():
    C1 = CyclicConfiguration(8, (0, 1, 3))
    C2 = CyclicConfiguration(8, (0, 5, 7))
    for method in ("auto", "multiplier", "exact"):
        w = isomorphic(C1, C2, method=method)
        assert w is not None and witness_valid(C1, C2, w)
    C3 = CyclicConfiguration(13, (0, 1, 3))
    C4 = CyclicConfiguration(13, (0, 1, 4))
    for method in ("auto", "multiplier", "exact"):
        assert isomorphic(C3, C4, method=method) is None


def test_isomorphic_solving_set_method():
    C1 = CyclicConfiguration(21, (0, 1, 3))
    C2 = CyclicConfiguration(21, tuple(affine_image((0, 1, 3), 2, 5, 21)))
    w = isomorphic(C1, C2, method="solving-set")
    assert w is not None and witness_valid(C1, C2, w)


def test_isomorphic_rejects_unknown_method():
    with pytest.raises(ValueError):
        isomorphic(FANO, FANO, method="magic")


def test_isomorphic_k_mismatch_is_none():
    assert isomorphic(CyclicConfiguration(13, (0, 1, 3)), CyclicConfiguration(13, (0, 1, 3, 9))) is None


def test_connectivity_mismatch_is_none():
    conn = CyclicConfiguration(26, (0, 1, 3))
    split = CyclicConfiguration(26, (0, 2, 6))
    assert isomorphic(conn, split) is None


def test_disconnected_isomorphic_pair():
    # both decompose into two Fano-class components on Z_13
    C1 = CyclicConfiguration(26, (0, 2, 6))
    C2 = CyclicConfiguration(26, (0, 4, 12))
    w = isomorphic(C1, C2)
    assert w is not None
    assert w.kind == "explicit"
    assert witness_valid(C1, C2, w)


def test_disconnected_distinct_components():
    # components fall in the two different classes mod 13
    C1 = CyclicConfiguration(26, (0, 2, 6))
    C2 = CyclicConfiguration(26, (0, 2, 8))
    assert isomorphic(C1, C2) is None


def test_disconnected_verdicts_match_exact_oracle():
    for v in (14, 21, 26):
        split = [S for S in enumerate_base_lines(v, 3) if not __import__("cyconf").is_connected(S, v)]
        for S1 in split:
            for S2 in split:
                C1, C2 = CyclicConfiguration(v, S1), CyclicConfiguration(v, S2)
                w = isomorphic(C1, C2)
                exact = exact_isomorphic(C1, C2)
                assert (w is None) == (exact is None), (v, S1, S2)
                if w is not None:
                    assert witness_valid(C1, C2, w)


def test_auto_verdicts_match_exact_on_small_slices():
    for v in (9, 12, 16):
        slice_ = enumerate_base_lines(v, 3, connected_only=True)
        reps = sorted({canonical_form(S, v) for S in slice_})
        for S in slice_:
            for R in reps:
                C1, C2 = CyclicConfiguration(v, S), CyclicConfiguration(v, R)
                w = isomorphic(C1, C2)
                assert (w is not None) == (canonical_form(S, v) == R)
                if w is not None:
                    assert witness_valid(C1, C2, w)


def test_completeness_report_clean():
    rep = completeness_report(13, 3)
    assert rep["orbits"] == 2
    assert rep["members"] == 48
    assert rep["mismatches"] == []
    rep16 = completeness_report(16, 3, exact_members=2)
    assert rep16["orbits"] == 3
    assert rep16["mismatches"] == []
