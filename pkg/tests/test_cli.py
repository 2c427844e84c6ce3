from __future__ import annotations

from matlift.catalog import named, save_graph, graph
from matlift.cli import main
from matlift.matroid import dumps_matroid


def test_classify_by_name_and_file(tmp_path, capsys):
    assert main(["classify", "M*(K5)"]) == 0
    out = capsys.readouterr().out
    assert "rank: 6" in out and "cographic: yes" in out and "graphic: no" in out
    path = tmp_path / "f7.mat"
    path.write_text(dumps_matroid(named("F7")))
    assert main(["classify", str(path)]) == 0
    assert "Eulerian: yes" in capsys.readouterr().out


def test_graph_files_are_read_as_cycle_matroids(tmp_path, capsys):
    path = tmp_path / "k5.graph"
    path.write_text(save_graph(graph("K5")))
    assert main(["classify", str(path)]) == 0
    assert "graphic: yes" in capsys.readouterr().out


def test_split_minor_quotients(capsys):
    assert main(["split", "F7", "--set", "a,b"]) == 0
    assert main(["minor", "M*(K5)", "--target", "M(Q1)"]) == 0
    assert main(["minor", "M*(K33)", "--target", "M(Q2)"]) == 1
    assert main(["quotients", "F7", "--graphic-only", "--dedupe"]) == 0
    assert "M(Q3)" in capsys.readouterr().out


def test_usage_and_parse_errors(tmp_path, capsys):
    assert main(["classify", "no-such-thing"]) == 2
    bad = tmp_path / "bad.mat"
    bad.write_text("M 2 3\na b c\n101\n")
    assert main(["classify", str(bad)]) == 2
    assert main(["split", "F7", "--set", "zz"]) == 2
    try:
        main(["frobnicate"])
    except SystemExit as exc:
        assert exc.code == 2


def test_verify_exit_codes(capsys):
    assert main(["verify", "lemma:eulerian"]) == 0
    assert "lemma:eulerian\tpass\t2" in capsys.readouterr().out
    assert main(["verify", "lemma:minor-embeddings"]) == 1
