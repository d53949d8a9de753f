#!/usr/bin/env python3
"""Test script for Tor tables, flatness and the E1 page."""

from math import comb
from pathlib import Path

import pytest

from src.cli.selftest import load_corpus_fan
from src.core.fans import star_subdivision, validate_fan
from src.core.ktheory import (
    blowup_tor_delta,
    flatness_report,
    higher_tor_table,
    koszul_tor_ranks,
    link_obstructions,
    merkurjev_e1_page,
    projective_dimension,
    stanley_reisner_presentation,
    subdivision_safe,
    tor_table,
)
from src.linalg.groups import parse_group
from src.models import (
    AbelianGroup,
    INTEGERS,
    ZERO,
    ConeNotInFan,
    DimensionTooSmall,
    FanData,
    FlatnessReport,
    HypothesesNotMet,
)
from src.storage.json_storage import JSONFanCorpus

CORPUS_FILE = Path(__file__).resolve().parent.parent / 'data' / 'fans.json'

PROJECTIVE_LINE = FanData(1, [[1], [-1]], [[0], [1]])
PROJECTIVE_PLANE = FanData(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
AFFINE_PLANE = FanData(2, [[1, 0], [0, 1]], [[0, 1]])
# rays sorted: (-1,0) = 0, (0,-1) = 1, (0,1) = 2, (1,0) = 3
TWO_QUADRANTS = FanData(2, [[1, 0], [0, 1], [-1, 0], [0, -1]], [[0, 1], [2, 3]])
# rays sorted: (-1,0,0) = 0, (0,-1,0) = 1, (0,0,1) = 2, (0,1,0) = 3, (1,0,0) = 4
PINCHED = FanData(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [0, -1, 0]], [[0, 1, 2], [3, 4, 2]])
OCTANTS = FanData(
    3,
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1]],
    [[0, 1, 2], [0, 4, 2], [0, 4, 5], [3, 4, 5]],
)
# rays sorted: (0,0,-1,0) = 0, (0,0,0,-1) = 1, (0,0,0,1) = 2, (0,0,1,0) = 3, (0,1,0,0) = 4, (1,0,0,0) = 5
RANK4 = FanData(
    4,
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, -1, 0], [0, 0, 0, -1]],
    [[0, 1, 2, 3], [0, 1, 4, 5]],
)

KQ_GROUPS = ['Z/2', 'Z/3', 'Z^2', 'Z + Z/4']


def _tor_fans():
    """Corpus fans meeting the Tor hypotheses."""
    corpus = JSONFanCorpus(str(CORPUS_FILE))
    fans = []
    for name in corpus.names():
        fan = load_corpus_fan(corpus, name)
        try:
            tor_table(fan)
        except HypothesesNotMet:
            continue
        fans.append(fan)
    return fans


def test_koszul():
    """Koszul resolution ranks."""
    print("✓ Test 1: Binomial ranks")
    assert koszul_tor_ranks(3, 3) == [1]
    assert koszul_tor_ranks(2, 0) == [1, 2, 1]
    assert koszul_tor_ranks(4, 1) == [1, 3, 3, 1]

    print("✓ Test 2: Projective dimension")
    assert projective_dimension(4, 1) == 3
    assert projective_dimension(2, 2) == 0
    with pytest.raises(ValueError):
        koszul_tor_ranks(2, 3)
    with pytest.raises(ValueError):
        projective_dimension(2, -1)


def test_flatness():
    """Flatness verdicts on known fans."""
    print("✓ Test 1: Flat fans")
    for raw in (PROJECTIVE_LINE, PROJECTIVE_PLANE, AFFINE_PLANE, OCTANTS):
        report = flatness_report(validate_fan(raw))
        assert report.flat
        assert report.merkurjev_degenerates

    print("✓ Test 2: Two opposite quadrants fail the global condition")
    report = flatness_report(validate_fan(TWO_QUADRANTS))
    assert report.pure
    assert report.link_conditions_ok
    assert report.global_offenders == [0]
    assert not report.cohen_macaulay
    assert not report.flat

    print("✓ Test 3: Pinched octants fail a link condition")
    report = flatness_report(validate_fan(PINCHED))
    assert report.link_offenders == [('[[0,0,1]]', 0)]
    assert report.global_ok
    assert not report.flat
    assert subdivision_safe(validate_fan(PINCHED)) == (False, [('[[0,0,1]]', 0)])

    print("✓ Test 4: Non-pure fans are not flat")
    report = flatness_report(validate_fan(FanData(2, [[1, 0], [0, 1], [-1, 0]], [[0, 1], [2]])))
    assert not report.pure
    assert not report.flat

    print("✓ Test 5: Report dictionaries")
    again = FlatnessReport.from_dict(report.to_dict())
    assert again.to_dict() == report.to_dict()
    with pytest.raises(ValueError):
        FlatnessReport.from_dict({'pure': True})


def test_tor_table():
    """Tor of K_0."""
    print("✓ Test 1: Known tables")
    table = tor_table(validate_fan(TWO_QUADRANTS))
    assert table[1] == INTEGERS
    assert table[2] == ZERO
    # Tor_p of K_0 is the exterior power of degree p + 1 of Z^2
    for p in (1, 2):
        assert table[p] == AbelianGroup.free(comb(2, p + 1))
    for raw in (PROJECTIVE_LINE, PROJECTIVE_PLANE, AFFINE_PLANE, OCTANTS):
        assert tor_table(validate_fan(raw)).is_zero()

    print("✓ Test 2: Hypotheses")
    with pytest.raises(HypothesesNotMet):
        tor_table(validate_fan(FanData(2, [[1, 0]], [[0]])))
    with pytest.raises(HypothesesNotMet):
        tor_table(validate_fan(PINCHED))
    with pytest.raises(HypothesesNotMet):
        tor_table(validate_fan(RANK4))

    print("✓ Test 3: Subdivision keeps two opposite quadrants non-flat")
    fan = validate_fan(TWO_QUADRANTS)
    assert tor_table(star_subdivision(fan, (0, 1))) == tor_table(fan)


def test_higher_tor():
    """Tor of K_q for several coefficient groups."""
    fans = _tor_fans()
    assert fans

    print("✓ Test 1: Both methods agree")
    for fan in fans:
        for text in KQ_GROUPS:
            kq = parse_group(text)
            assert higher_tor_table(fan, kq, 'splitting') == higher_tor_table(fan, kq, 'coefficients'), \
                (fan.name, text)

    print("✓ Test 2: Trivial coefficient groups")
    for fan in fans:
        assert higher_tor_table(fan, INTEGERS) == tor_table(fan)
        assert higher_tor_table(fan, ZERO).is_zero()

    print("✓ Test 3: Two opposite quadrants")
    fan = validate_fan(TWO_QUADRANTS)
    assert higher_tor_table(fan, parse_group('Z/3'))[1] == parse_group('Z/3')
    assert higher_tor_table(fan, parse_group('Z + Z/4'))[1] == parse_group('Z + Z/4')
    with pytest.raises(ValueError):
        higher_tor_table(fan, INTEGERS, method='spectral')


def test_e1_page():
    """Nonzero entries of the E1 page."""
    print("✓ Test 1: Projective line")
    page = merkurjev_e1_page(validate_fan(PROJECTIVE_LINE))
    assert page[(1, -1)] == parse_group('Z^2')
    assert page[(2, -1)] == INTEGERS
    assert page[(2, -2)] == INTEGERS
    assert page.tor0_rank_bound == 3

    print("✓ Test 2: Projective plane")
    page = merkurjev_e1_page(validate_fan(PROJECTIVE_PLANE))
    assert page[(1, -1)] == parse_group('Z^3')
    assert page[(2, -1)] == parse_group('Z^3')
    assert page[(2, -2)] == parse_group('Z^3')
    assert page[(3, -1)] == INTEGERS
    assert page[(3, -2)] == parse_group('Z^2')
    assert page[(3, -3)] == INTEGERS
    assert page[(3, -4)] == ZERO
    assert page.tor0_rank_bound == 7

    print("✓ Test 3: Two opposite quadrants carry Tor_1 in the last column")
    page = merkurjev_e1_page(validate_fan(TWO_QUADRANTS))
    assert page[(3, -4)] == INTEGERS

    print("✓ Test 4: Last column holds the Tor table")
    for fan in _tor_fans():
        page = merkurjev_e1_page(fan)
        table = tor_table(fan)
        n = fan.n
        for t in range(1, n + 1):
            assert page[(n + 1, -t - n - 1)] == table[t], (fan.name, t)

    print("✓ Test 5: Hypotheses")
    with pytest.raises(HypothesesNotMet):
        merkurjev_e1_page(validate_fan(PINCHED))


def test_blowup():
    """Tor changes under star subdivision."""
    print("✓ Test 1: Rank 4 example")
    fan = validate_fan(RANK4)
    deltas, invariant = blowup_tor_delta(fan, (4, 5))
    assert deltas[1] == INTEGERS
    assert all(deltas[i] == ZERO for i in (2, 3, 4))
    assert not invariant

    print("✓ Test 2: Octant fan is invariant")
    octants = validate_fan(OCTANTS)
    for d in (2, 3):
        for sigma in octants.cones_of_dim(d):
            deltas, invariant = blowup_tor_delta(octants, sigma)
            assert invariant
            assert sorted(deltas) == [1, 2, 3]

    print("✓ Test 3: Safe fans are invariant at every cone")
    for safe in _tor_fans():
        for sigma in safe.all_cones:
            if len(sigma) >= 2:
                assert blowup_tor_delta(safe, sigma)[1], (safe.name, sigma)

    print("✓ Test 4: Errors")
    with pytest.raises(DimensionTooSmall):
        blowup_tor_delta(fan, (4,))
    with pytest.raises(DimensionTooSmall):
        blowup_tor_delta(fan, ())
    with pytest.raises(ConeNotInFan):
        blowup_tor_delta(fan, (0, 3))


def test_link_obstructions():
    """Faces of a cone whose links fail the link condition."""
    print("✓ Test 1: Pinched octants")
    fan = validate_fan(PINCHED)
    assert link_obstructions(fan, (2, 3, 4)) == [('[[0,0,1]]', 0)]
    assert link_obstructions(fan, (3, 4)) == []

    print("✓ Test 2: Octant fan and errors")
    octants = validate_fan(OCTANTS)
    for sigma in octants.max_cones:
        assert link_obstructions(octants, sigma) == []
    with pytest.raises(ConeNotInFan):
        link_obstructions(fan, (0, 4))


def test_stanley_reisner():
    """Minimal non-face relations."""
    print("✓ Test 1: Known presentations")
    assert stanley_reisner_presentation(validate_fan(PROJECTIVE_PLANE)) == ['(X_1 - 1)(X_2 - 1)(X_3 - 1)']
    assert stanley_reisner_presentation(validate_fan(TWO_QUADRANTS)) == [
        '(X_1 - 1)(X_3 - 1)',
        '(X_1 - 1)(X_4 - 1)',
        '(X_2 - 1)(X_3 - 1)',
        '(X_2 - 1)(X_4 - 1)',
    ]
    assert stanley_reisner_presentation(validate_fan(AFFINE_PLANE)) == []


if __name__ == '__main__':
    test_koszul()
    test_flatness()
    test_tor_table()
    test_higher_tor()
    test_e1_page()
    test_blowup()
    test_link_obstructions()
    test_stanley_reisner()
    print("\n✅ All tests passed!")
