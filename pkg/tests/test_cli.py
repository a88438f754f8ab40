import json

import pytest

from coxabacus.cli import main

GOLDEN = "[-11,-9,-1,8,16,18]"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_convert_window_to_core(capsys):
    code, out, _ = run(
        capsys, "convert", "--family", "CC", "--rank", "3",
        "--from", "window", "--to", "core", GOLDEN,
    )
    assert code == 0
    assert out.strip() == "(10,9,6,5,5,3,2,2,2,1)"


def test_convert_every_target(capsys):
    expected = {
        "window": "[-11,-9,-1,8,16,18]",
        "levels": "(1,2,-2,2,-2,-1)",
        "root": "(1,2,-2)",
        "core": "(10,9,6,5,5,3,2,2,2,1)",
        "bounded": "(5,5,4,2,1)",
        "word": "s0 s1 s0 s3 s2 s1 s0 s2 s3 s2 s1 s0 s2 s3 s2 s1 s0",
    }
    for target, text in expected.items():
        code, out, _ = run(
            capsys, "convert", "--family", "C~/C", "--rank", "3",
            "--from", "window", "--to", target, GOLDEN,
        )
        assert code == 0
        assert out.strip() == text


def test_convert_round_trips_through_every_source(capsys):
    reps = {
        "window": GOLDEN,
        "levels": "(1,2,-2,2,-2,-1)",
        "root": "(1,2,-2)",
        "core": "(10,9,6,5,5,3,2,2,2,1)",
        "bounded": "(5,5,4,2,1)",
        "word": "s0 s1 s0 s3 s2 s1 s0 s2 s3 s2 s1 s0 s2 s3 s2 s1 s0",
    }
    for source, text in reps.items():
        code, out, _ = run(
            capsys, "convert", "--family", "CC", "--rank", "3",
            "--from", source, "--to", "window", text,
        )
        assert code == 0
        assert out.strip() == GOLDEN


def test_convert_star_notation(capsys):
    code, out, _ = run(
        capsys, "convert", "--family", "BD", "--rank", "3",
        "--from", "bounded", "--to", "bounded", "(3*,2)",
    )
    assert code == 0
    assert out.strip() == "(3*,2)"


def test_enumerate_json_lines(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--family", "CC", "--rank", "2", "--max-len", "3",
    )
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert len(records) == 5  # layers 1,1,1,2
    assert records[0]["length"] == 0
    assert records[0]["window"] == [1, 2, 3, 4]
    lengths = [r["length"] for r in records]
    assert lengths == sorted(lengths)
    for r in records:
        assert set(r) == {
            "family", "rank", "length", "window", "levels",
            "root", "core", "bounded", "word",
        }


def test_render_text_abacus(capsys):
    code, out, _ = run(
        capsys, "render", "--family", "CC", "--rank", "3",
        "--from", "window", "--render", "abacus", "--format", "text", GOLDEN,
    )
    assert code == 0
    assert "(8)" in out


def test_render_svg_core(capsys):
    code, out, _ = run(
        capsys, "render", "--family", "CC", "--rank", "3",
        "--from", "window", "--render", "core", "--format", "svg", GOLDEN,
    )
    assert code == 0
    assert out.startswith("<svg")


def test_poset_dot(capsys):
    code, out, _ = run(
        capsys, "poset", "--family", "CC", "--rank", "2", "--max-len", "4",
    )
    assert code == 0
    assert out.startswith("digraph bruhat {")
    assert out.rstrip().endswith("}")
    # 7 elements in a chain-like low order: one edge per covering pair
    assert out.count("->") >= 6


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as err:
        main(["convert", "--family", "CC", "--rank", "3", "--from", "window"])
    assert err.value.code == 1


def test_unknown_family_exits_one(capsys):
    with pytest.raises(SystemExit) as err:
        main([
            "convert", "--family", "XX", "--rank", "3",
            "--from", "window", "--to", "core", GOLDEN,
        ])
    assert err.value.code == 1


def test_domain_error_exits_two(capsys):
    code, out, err = run(
        capsys, "convert", "--family", "CC", "--rank", "3",
        "--from", "window", "--to", "core", "[2,1,3,4,5,6]",
    )
    assert code == 2
    assert "error" in err


def test_rank_too_small_exits_two(capsys):
    code, _, err = run(
        capsys, "enumerate", "--family", "DD", "--rank", "3", "--max-len", "2",
    )
    assert code == 2
    assert "rank" in err
