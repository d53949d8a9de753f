#!/usr/bin/env python3
"""Test script for the toromatic command line."""

import io
import json
import shutil
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from src.cli import (
    EXIT_BUDGET,
    EXIT_HYPOTHESES,
    EXIT_INVALID,
    EXIT_OK,
    GOLDEN,
    build_parser,
    load_corpus_fan,
    main,
    run,
    run_all,
    run_selftest,
    sweep_options,
)
from src.storage import JSONFanCorpus, parse_fan_file

CORPUS_FILE = Path(__file__).resolve().parent.parent / 'data' / 'fans.json'

PROJECTIVE_PLANE_FILE = '{"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "cones": [[0, 1], [1, 2], [0, 2]]}'
NON_PRIMITIVE_FILE = '{"dim": 2, "rays": [[2, 0], [0, 1]], "cones": [[0, 1]]}'


def _call(argv):
    """Run main and capture (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_golden():
    """Every golden check through run()."""
    corpus = JSONFanCorpus(str(CORPUS_FILE))
    for name, command, options, code, expected in GOLDEN:
        result = run(command, load_corpus_fan(corpus, name), options)
        assert result.exit_code == code, (name, command, result.error)
        output = result.output.split('\n')
        for line in expected:
            assert line in output, (name, command, line)
    print(f"✓ Test 1: {len(GOLDEN)} golden checks")

    text, code = run_selftest(corpus)
    assert code == 0, text
    assert text.endswith('checks passed')
    print("✓ Test 2: Selftest")

    swept, commands = sweep_options(load_corpus_fan(corpus, 'projective_line'), {})
    assert swept['cone'] == [[-1]]
    assert str(swept['kq']) == 'Z/2'
    assert 'blowup' not in commands
    assert 'orbit' in commands and 'check-limits' in commands
    for name in corpus.names():
        fan = load_corpus_fan(corpus, name)
        swept, commands = sweep_options(fan, {'max_nodes': 20000})
        results = run_all(fan, swept, commands)
        assert {'orbit', 'subdivide', 'higher-tor', 'check-limits'} <= set(results), name
        assert all(r.exit_code in (EXIT_OK, EXIT_HYPOTHESES, EXIT_BUDGET) for r in results.values()), name
    assert '✓ rank4_blowup_example: 13 commands' in text.split('\n')
    assert '✓ projective_line: 12 commands' in text.split('\n')
    print("✓ Test 3: Selftest runs cone commands on every fan")


def test_run():
    """Dispatch and error mapping."""
    corpus = JSONFanCorpus(str(CORPUS_FILE))
    fan = load_corpus_fan(corpus, 'projective_plane')

    print("✓ Test 1: Unknown command and missing options")
    assert run('frobnicate', fan).exit_code == EXIT_INVALID
    result = run('blowup', fan)
    assert result.exit_code == EXIT_INVALID
    assert '--cone' in result.error
    assert run('higher-tor', fan).exit_code == EXIT_INVALID
    assert run('orbit', fan, {'cone': [[5, 5]]}).exit_code == EXIT_INVALID

    print("✓ Test 2: Budget and hypotheses")
    assert run('check-limits', fan, {'max_nodes': 1}).exit_code == EXIT_BUDGET
    pinched = load_corpus_fan(corpus, 'pinched_octants')
    result = run('e1', pinched)
    assert result.exit_code == EXIT_HYPOTHESES
    assert result.error.startswith('hypotheses not met')

    print("✓ Test 3: Cone commands are skipped without a cone")
    results = run_all(fan)
    assert 'blowup' not in results
    assert 'higher-tor' not in results
    assert all(r.exit_code == EXIT_OK for r in results.values())

    print("✓ Test 4: Subdivision output is a fan file")
    result = run('subdivide', fan, {'cone': [[1, 0], [0, 1]]})
    assert result.exit_code == EXIT_OK
    refined = parse_fan_file(result.output)
    assert len(refined.rays) == 4
    assert len(refined.cones) == 4


def test_main():
    """Command line with a temporary configuration."""
    test_dir = tempfile.mkdtemp()

    try:
        config = Path(test_dir, 'settings.json')
        config.write_text(json.dumps({'corpus_file': str(CORPUS_FILE), 'file_logging': False}),
                          encoding='utf-8')
        fan_file = Path(test_dir, 'projective_plane.json')
        fan_file.write_text(PROJECTIVE_PLANE_FILE, encoding='utf-8')
        bad_file = Path(test_dir, 'bad.json')
        bad_file.write_text(NON_PRIMITIVE_FILE, encoding='utf-8')
        base = ['--config', str(config)]

        print("✓ Test 1: Fan files")
        code, out, _ = _call(['validate', str(fan_file)] + base)
        assert code == EXIT_OK
        assert 'complete: YES' in out.split('\n')
        code, out, _ = _call(['homology', str(fan_file), '--coefficients', 'Z/2'] + base)
        assert code == EXIT_OK
        assert 'H_1 = Z/2' in out.split('\n')

        print("✓ Test 2: Invalid input")
        code, _, err = _call(['validate', str(bad_file)] + base)
        assert code == EXIT_INVALID
        assert err.startswith('Erreur:')
        assert _call(['validate', str(Path(test_dir, 'missing.json'))] + base)[0] == EXIT_INVALID
        assert _call(['validate'] + base)[0] == EXIT_INVALID
        assert _call(['validate', '--example', 'no_such_fan'] + base)[0] == EXIT_INVALID
        assert _call(['blowup', str(fan_file)] + base)[0] == EXIT_INVALID
        assert _call(['blowup', str(fan_file), '--cone', '[[1,0]'] + base)[0] == EXIT_INVALID
        assert _call(['higher-tor', str(fan_file), '--kq', 'Q'] + base)[0] == EXIT_INVALID

        print("✓ Test 3: Hypotheses and budget")
        assert _call(['tor', '--example', 'pinched_octants'] + base)[0] == EXIT_HYPOTHESES
        assert _call(['check-limits', str(fan_file), '--max-nodes', '1'] + base)[0] == EXIT_BUDGET
        assert _call(['check-limits', str(fan_file), '--max-nodes', '0'] + base)[0] == EXIT_BUDGET

        print("✓ Test 4: JSON output")
        code, out, _ = _call(['tor', '--example', 'two_opposite_quadrants', '--json'] + base)
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['entries'] == {'1': 'Z', '2': '0'}
        code, out, _ = _call(['blowup', '--example', 'rank4_blowup_example',
                              '--cone', '[[1,0,0,0],[0,1,0,0]]', '--json'] + base)
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['deltas']['1'] == 'Z'
        assert data['invariant'] is False

        print("✓ Test 5: Selftest")
        code, out, _ = _call(['selftest'] + base)
        assert code == EXIT_OK

        print("✓ Test 6: Argument errors")
        with pytest.raises(SystemExit):
            build_parser().parse_args(['frobnicate'])

    finally:
        shutil.rmtree(test_dir)


if __name__ == '__main__':
    test_golden()
    test_run()
    test_main()
    print("\n✅ All tests passed!")
