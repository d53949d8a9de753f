#!/usr/bin/env python3
"""Test script for sheaves on the poset of a fan."""

from pathlib import Path

import pytest

from src.cli.selftest import load_corpus_fan
from src.core.fans import validate_fan
from src.core.sheaf import (
    constant_sheaf,
    global_sections,
    is_flabby,
    poset_sheaf_cohomology,
    sections,
    simple_sheaf,
    simple_sheaf_cohomology,
    validate_sheaf,
    zero_sheaf,
)
from src.linalg.groups import parse_group, presentation
from src.linalg.matrices import identity, int_matrix, zeros
from src.models import INTEGERS, ZERO, ConeNotInFan, FanData, FanPoset, NotOpen, PosetSheaf
from src.storage.json_storage import JSONFanCorpus

CORPUS_FILE = Path(__file__).resolve().parent.parent / 'data' / 'fans.json'

# rays sorted: (-1,) = 0, (1,) = 1
PROJECTIVE_LINE = FanData(1, [[1], [-1]], [[0], [1]])
# rays sorted: (-1,-1) = 0, (0,1) = 1, (1,0) = 2
PROJECTIVE_PLANE = FanData(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
AFFINE_PLANE = FanData(2, [[1, 0], [0, 1]], [[0, 1]])


def test_fan_poset():
    """Order, open sets and boundaries."""
    poset = FanPoset(validate_fan(PROJECTIVE_PLANE))

    print("✓ Test 1: Order reverses inclusion")
    assert poset.leq((0, 1), (1,))
    assert poset.leq((0, 1), ())
    assert not poset.leq((1,), (0, 1))

    print("✓ Test 2: Open sets")
    assert poset.is_open([(), (0,), (1,), (0, 1)])
    assert poset.is_open([])
    assert poset.missing_face([(0, 1)]) == (1,)
    with pytest.raises(NotOpen):
        poset.require_open([(0,), (0, 1)])
    with pytest.raises(ConeNotInFan):
        poset.missing_face([(0, 1, 2)])

    print("✓ Test 3: Boundary and generating cones")
    assert poset.boundary((0, 1)) == [(), (0,), (1,)]
    assert poset.generating_cones(list(poset.elements)) == [(0, 1), (0, 2), (1, 2)]


def test_sections():
    """Sections over open sets."""
    fan = validate_fan(PROJECTIVE_LINE)
    constant = constant_sheaf(fan, INTEGERS)

    print("✓ Test 1: Constant sheaf")
    assert global_sections(constant) == INTEGERS
    assert sections(constant, [(), (0,)]) == INTEGERS
    assert sections(constant, []) == ZERO
    with pytest.raises(NotOpen):
        sections(constant, [(0,)])

    print("✓ Test 2: Disconnected fan still has connected sections")
    quadrants = validate_fan(FanData(2, [[1, 0], [0, 1], [-1, 0], [0, -1]], [[0, 1], [2, 3]]))
    assert global_sections(constant_sheaf(quadrants, parse_group('Z/2'))) == parse_group('Z/2')

    print("✓ Test 3: Simple sheaves")
    assert global_sections(simple_sheaf(fan, (0,), INTEGERS)) == INTEGERS
    assert global_sections(simple_sheaf(fan, (), INTEGERS)) == ZERO
    with pytest.raises(ConeNotInFan):
        simple_sheaf(fan, (0, 1), INTEGERS)


def test_flabby():
    """Flabbiness verdicts."""
    fan = validate_fan(PROJECTIVE_LINE)

    print("✓ Test 1: Constant and zero sheaves are flabby")
    assert is_flabby(constant_sheaf(fan, INTEGERS)) == (True, None)
    assert is_flabby(constant_sheaf(validate_fan(PROJECTIVE_PLANE), parse_group('Z/3'))) == (True, None)
    assert is_flabby(zero_sheaf(fan)) == (True, None)

    print("✓ Test 2: Simple sheaf at the zero cone is not")
    assert is_flabby(simple_sheaf(fan, (), INTEGERS)) == (False, (0,))
    assert is_flabby(simple_sheaf(fan, (0,), INTEGERS)) == (True, None)


def test_validate_sheaf():
    """Ill-defined restrictions are rejected."""
    print("✓ Test 1: Restrictions must compose")
    fan = validate_fan(PROJECTIVE_PLANE)
    constant = constant_sheaf(fan, INTEGERS)
    restrictions = dict(constant.restrictions)
    restrictions[((1, 2), ())] = int_matrix([[2]])
    with pytest.raises(ValueError, match="do not compose"):
        validate_sheaf(PosetSheaf(fan, constant.stalks, restrictions))

    print("✓ Test 2: Restrictions must respect relations")
    line = validate_fan(PROJECTIVE_LINE)
    stalks = {
        (): (1, zeros(1, 0)),
        (0,): (1, int_matrix([[2]])),
        (1,): (1, zeros(1, 0)),
    }
    restrictions = {((0,), ()): int_matrix([[1]]), ((1,), ()): int_matrix([[1]])}
    with pytest.raises(ValueError, match="does not respect relations"):
        validate_sheaf(PosetSheaf(line, stalks, restrictions))

    print("✓ Test 3: Shapes are checked on construction")
    with pytest.raises(ValueError, match="No stalk"):
        PosetSheaf(line, {(): (1, zeros(1, 0))}, {})
    with pytest.raises(ValueError, match="shape"):
        PosetSheaf(line, stalks, {((0,), ()): int_matrix([[1, 0]]), ((1,), ()): int_matrix([[1]])})


def test_constant_sheaf_cohomology():
    """Constant sheaves are acyclic."""
    print("✓ Test 1: Constant sheaves on small fans")
    for raw in (PROJECTIVE_LINE, PROJECTIVE_PLANE, AFFINE_PLANE):
        fan = validate_fan(raw)
        for group in (INTEGERS, parse_group('Z/2')):
            cohomology = poset_sheaf_cohomology(constant_sheaf(fan, group))
            assert cohomology == [group] + [ZERO] * fan.max_dim()

    print("✓ Test 2: Simple sheaves at the zero cone")
    assert simple_sheaf_cohomology(validate_fan(PROJECTIVE_LINE), (), INTEGERS) == [ZERO, INTEGERS]
    assert simple_sheaf_cohomology(validate_fan(PROJECTIVE_PLANE), (), INTEGERS) == [ZERO, ZERO, INTEGERS]

def _supported_sheaf(fan, support, group):
    """Stalk group on support and zero elsewhere, identity restrictions inside support."""
    relations = presentation(group)
    g = relations.shape[0]
    stalks = {c: (g, relations) if c in support else (0, zeros(0, 0)) for c in fan.all_cones}
    restrictions = {}
    for sigma in fan.all_cones:
        for tau in fan.all_cones:
            if set(tau) < set(sigma):
                if sigma in support and tau in support:
                    restrictions[(sigma, tau)] = identity(g)
                else:
                    restrictions[(sigma, tau)] = zeros(stalks[tau][0], stalks[sigma][0])
    return validate_sheaf(PosetSheaf(fan, stalks, restrictions, name=f"{group} on {len(support)} cones"))


def _supports(fan):
    """Stars, unions of two stars and face closures of cones."""
    stars = [frozenset(c for c in fan.all_cones if set(rho) <= set(c)) for rho in fan.all_cones if rho]
    closures = [frozenset(c for c in fan.all_cones if set(c) <= set(sigma)) for sigma in fan.max_cones]
    unions = [a | b for a, b in zip(stars, stars[1:])]
    return stars + unions + closures


def test_sheaf_properties():
    """Sections against the bar complex, and acyclicity of flabby sheaves."""
    corpus = JSONFanCorpus(str(CORPUS_FILE))
    fans = [validate_fan(raw) for raw in (PROJECTIVE_LINE, PROJECTIVE_PLANE, AFFINE_PLANE)]
    fans += [load_corpus_fan(corpus, name) for name in ('two_opposite_quadrants', 'octant_example')]

    print("✓ Test 1: Global sections are H^0 of the bar complex")
    print("✓ Test 2: Flabby sheaves have no higher cohomology")
    flabby_count = 0
    for fan in fans:
        sheaves = [simple_sheaf(fan, sigma, INTEGERS) for sigma in fan.all_cones]
        for group in (INTEGERS, parse_group('Z/2')):
            sheaves += [_supported_sheaf(fan, support, group) for support in _supports(fan)]
        for sheaf in sheaves:
            cohomology = poset_sheaf_cohomology(sheaf)
            assert global_sections(sheaf) == cohomology[0], sheaf
            flabby, _ = is_flabby(sheaf)
            if flabby:
                assert all(h.is_zero() for h in cohomology[1:]), (sheaf, [str(h) for h in cohomology])
                flabby_count += 1
        for sigma in fan.max_cones:
            assert is_flabby(simple_sheaf(fan, sigma, INTEGERS)) == (True, None)
    assert flabby_count > 0


def test_simple_sheaf_two_ways():
    """Bar complex and orbit-closure formula agree on every corpus fan."""
    corpus = JSONFanCorpus(str(CORPUS_FILE))
    groups = [INTEGERS, parse_group('Z/2'), parse_group('Z^2')]
    checked = 0
    for name in corpus.names():
        fan = load_corpus_fan(corpus, name)
        for sigma in fan.all_cones:
            for group in groups:
                by_chains = poset_sheaf_cohomology(simple_sheaf(fan, sigma, group))
                by_formula = simple_sheaf_cohomology(fan, sigma, group)
                assert by_chains == by_formula, (name, sigma, str(group))
                checked += 1
        print(f"✓ {name}: {len(fan.all_cones)} cones")
    assert checked > 0


if __name__ == '__main__':
    test_fan_poset()
    test_sections()
    test_flabby()
    test_validate_sheaf()
    test_constant_sheaf_cohomology()
    test_sheaf_properties()
    test_simple_sheaf_two_ways()
    print("\n✅ All tests passed!")
