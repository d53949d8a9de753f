#!/usr/bin/env python3
"""Test script for storage layer."""

import json
import os
import shutil
import tempfile
from pathlib import Path

import pytest

from src.cli.selftest import load_corpus_fan
from src.core.fans import fan_from_dict
from src.models import AbelianGroup, FanData, IndexOutOfRange, ParseError, RationalCone
from src.storage import JSONFanCorpus, dump_fan_file, parse_fan_file
from src.utils.config import DEFAULT_CONFIG, PROJECT_ROOT, load_config, resolve_path
from utils.generate_corpus import fill_corpus

CORPUS_FILE = Path(__file__).resolve().parent.parent / 'data' / 'fans.json'
ENV_VARS = ['TOROMATIC_CONFIG', 'TOROMATIC_LOG_LEVEL', 'TOROMATIC_CORPUS', 'TOROMATIC_DEBUG']


def test_storage():
    """Test all corpus operations."""
    test_dir = tempfile.mkdtemp()
    print(f"Testing in: {test_dir}")

    try:
        corpus = JSONFanCorpus(data_file=str(Path(test_dir, 'fans.json')))

        # Test 1: File is created
        print("✓ Test 1: File created")
        assert Path(test_dir, 'fans.json').exists()
        assert corpus.names() == []

        # Test 2: Fan CRUD
        print("✓ Test 2: Fan CRUD")
        record = {
            'name': 'affine_plane',
            'dim': 2,
            'rays': [[1, 0], [0, 1]],
            'cones': [[0, 1]],
            'tags': ['affine', 'rank2'],
            'description': 'A single quadrant',
        }
        assert corpus.add_fan(record) == 'affine_plane'
        retrieved = corpus.get_fan('affine_plane')
        assert retrieved is not None
        assert retrieved['rays'] == [[1, 0], [0, 1]]
        assert retrieved['tags'] == ['affine', 'rank2']
        assert not Path(test_dir, 'fans.tmp').exists()

        corpus.add_fan({'name': 'projective_line', 'dim': 1, 'rays': [[1], [-1]],
                        'cones': [[0], [1]], 'tags': ['complete']})
        assert corpus.names() == ['affine_plane', 'projective_line']
        assert len(corpus.get_all_fans({'dim': 2})) == 1
        assert len(corpus.get_all_fans({'tags': 'complete'})) == 1
        assert len(corpus.get_all_fans({'tags': ['complete', 'affine']})) == 2
        assert len(corpus.get_all_fans({'dim': 1, 'tags': 'affine'})) == 0

        assert corpus.delete_fan('affine_plane')
        assert not corpus.delete_fan('affine_plane')
        assert corpus.get_fan('affine_plane') is None

        # Test 3: Validation errors
        print("✓ Test 3: Validation")
        with pytest.raises(ValueError, match="already exists"):
            corpus.add_fan({'name': 'projective_line', 'dim': 1, 'rays': [], 'cones': []})
        with pytest.raises(ValueError, match="name"):
            corpus.add_fan({'dim': 1, 'rays': [], 'cones': []})
        with pytest.raises(ValueError, match="tags"):
            corpus.add_fan({'name': 'bad', 'dim': 1, 'rays': [], 'cones': [], 'tags': 'x'})
        with pytest.raises(IndexOutOfRange):
            corpus.add_fan({'name': 'bad', 'dim': 1, 'rays': [[1]], 'cones': [[0, 1]]})
        assert corpus.names() == ['projective_line']

        # Test 4: Reloading sees the same records
        print("✓ Test 4: Reload")
        again = JSONFanCorpus(data_file=str(Path(test_dir, 'fans.json')))
        assert again.get_all_fans() == corpus.get_all_fans()

    finally:
        shutil.rmtree(test_dir)
        print(f"Cleaned up: {test_dir}")


def test_bundled_corpus():
    """Every bundled record is a valid fan."""
    corpus = JSONFanCorpus(str(CORPUS_FILE))
    names = corpus.names()
    print(f"✓ Test 1: {len(names)} bundled fans")
    for expected in ('affine_plane', 'projective_plane', 'two_opposite_quadrants',
                     'octant_example', 'pinched_octants', 'rank4_blowup_example'):
        assert expected in names
    for name in names:
        fan = load_corpus_fan(corpus, name)
        assert fan.name == name
    with pytest.raises(KeyError):
        load_corpus_fan(corpus, 'no_such_fan')


def test_fan_file():
    """Fan file parsing and rendering."""
    print("✓ Test 1: Parse and dump")
    text = '{\n  "dim": 2,\n  "rays": [[1, 0], [0, 1]],\n  "cones": [[0, 1]],\n  "name": "quadrant"\n}\n'
    raw = parse_fan_file(text)
    assert raw.dim == 2
    assert raw.name == 'quadrant'
    assert dump_fan_file(raw) == text
    fan = fan_from_dict(raw.to_dict())
    assert parse_fan_file(dump_fan_file(fan)).to_dict() == fan.to_dict()

    print("✓ Test 2: Errors carry line numbers")
    with pytest.raises(ParseError) as error:
        parse_fan_file('{\n  "dim": 2\n  "rays": []\n}')
    assert error.value.line == 3
    with pytest.raises(ParseError) as error:
        parse_fan_file('{\n  "dim": -1,\n  "rays": [],\n  "cones": []\n}')
    assert error.value.line == 2
    with pytest.raises(ParseError) as error:
        parse_fan_file('{\n  "dim": 2,\n  "rays": [[1, 0], [1]],\n  "cones": []\n}')
    assert error.value.line == 3
    assert 'ray 1' in error.value.reason
    with pytest.raises(ParseError) as error:
        parse_fan_file('{"dim": 2, "rays": []}')
    assert error.value.line == 1
    with pytest.raises(ParseError):
        parse_fan_file('[1, 2]')
    with pytest.raises(ParseError):
        parse_fan_file('{"dim": 1, "rays": [[true]], "cones": []}')

    print("✓ Test 3: Cone indices")
    with pytest.raises(IndexOutOfRange) as error:
        parse_fan_file('{"dim": 1, "rays": [[1], [-1]], "cones": [[0], [2]]}')
    assert (error.value.cone_position, error.value.index, error.value.ray_count) == (1, 2, 2)


def test_models():
    """Dictionary forms of the models."""
    print("✓ Test 1: FanData")
    with pytest.raises(ValueError, match="rays"):
        FanData.from_dict({'dim': 2, 'cones': []})
    with pytest.raises(ValueError):
        FanData(-1, [], [])
    with pytest.raises(ValueError):
        FanData(2, [[1, 0, 0]], [])

    print("✓ Test 2: Groups and cones")
    group = AbelianGroup(2, (2, 4))
    assert AbelianGroup.from_dict(group.to_dict()) == group
    cone = RationalCone(2, generators=[[2, 0], [0, 3]])
    assert cone.generators == [(0, 1), (1, 0)]
    assert RationalCone.from_dict(cone.to_dict()).generators == cone.generators
    with pytest.raises(ValueError):
        RationalCone(2)
    with pytest.raises(ValueError):
        RationalCone(2, generators=[[1, 0, 0]])


def test_config():
    """Settings file and environment overrides."""
    test_dir = tempfile.mkdtemp()
    saved = {name: os.environ.pop(name, None) for name in ENV_VARS}

    try:
        print("✓ Test 1: Defaults")
        config = load_config(Path(test_dir, 'missing.json'))
        for key, value in DEFAULT_CONFIG.items():
            assert config[key] == value
        assert config['debug'] is False

        print("✓ Test 2: Settings file")
        settings = Path(test_dir, 'settings.json')
        settings.write_text(json.dumps({'json_indent': 4, 'file_logging': False}), encoding='utf-8')
        config = load_config(settings)
        assert config['json_indent'] == 4
        assert config['file_logging'] is False
        assert config['corpus_file'] == DEFAULT_CONFIG['corpus_file']

        broken = Path(test_dir, 'broken.json')
        broken.write_text('{not json', encoding='utf-8')
        assert load_config(broken)['json_indent'] == DEFAULT_CONFIG['json_indent']

        print("✓ Test 3: Environment")
        os.environ['TOROMATIC_CONFIG'] = str(settings)
        os.environ['TOROMATIC_LOG_LEVEL'] = 'debug'
        os.environ['TOROMATIC_CORPUS'] = '/tmp/other.json'
        os.environ['TOROMATIC_DEBUG'] = 'True'
        config = load_config()
        assert config['json_indent'] == 4
        assert config['log_level'] == 'DEBUG'
        assert config['corpus_file'] == '/tmp/other.json'
        assert config['debug'] is True

        print("✓ Test 4: Paths")
        assert resolve_path('data/fans.json') == PROJECT_ROOT / 'data' / 'fans.json'
        assert resolve_path('/tmp/x.json') == Path('/tmp/x.json')

    finally:
        for name, value in saved.items():
            os.environ.pop(name, None)
            if value is not None:
                os.environ[name] = value
        shutil.rmtree(test_dir)


def test_fill_corpus():
    """Random corpus generation, with and without replacement."""
    test_dir = tempfile.mkdtemp()

    try:
        corpus = JSONFanCorpus(str(Path(test_dir, 'random.json')))

        print("✓ Test 1: Fresh corpus")
        assert fill_corpus(corpus, 3, 2, seed=4) == (3, 0)
        assert corpus.names() == ['random_4_1', 'random_4_2', 'random_4_3']
        first = [corpus.get_fan(name) for name in corpus.names()]
        for name in corpus.names():
            assert load_corpus_fan(corpus, name).n <= 2

        print("✓ Test 2: Existing names are errors")
        assert fill_corpus(corpus, 3, 2, seed=4) == (0, 3)
        assert len(corpus.names()) == 3

        print("✓ Test 3: Replacement")
        assert fill_corpus(corpus, 4, 2, seed=4, replace=True) == (4, 0)
        assert sorted(corpus.names()) == ['random_4_1', 'random_4_2', 'random_4_3', 'random_4_4']
        assert [corpus.get_fan(f"random_4_{i}") for i in (1, 2, 3)] == first

    finally:
        shutil.rmtree(test_dir)


if __name__ == '__main__':
    test_storage()
    test_fill_corpus()
    test_bundled_corpus()
    test_fan_file()
    test_models()
    test_config()
    print("\n✅ All tests passed!")
