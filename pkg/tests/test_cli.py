import subprocess
import sys

import pytest

import degenpart as dp
from degenpart.cli import main
from degenpart.hardpair import VectorFunction
from degenpart.instancefile import (
    emit_instance,
    parse_certificates,
    parse_coloring,
    parse_partition,
)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def c4_instance():
    H = dp.cycle(4)
    return emit_instance(H, VectorFunction.constant(H.vertices, (1, 1)))


def c5_instance():
    H = dp.cycle(5)
    return emit_instance(H, VectorFunction.constant(H.vertices, (1, 1)))


class TestCommands:
    def test_partition_found(self, tmp_path, capsys):
        path = write(tmp_path, "c4.hg", c4_instance())
        assert main(["partition", path]) == 0
        P, p = parse_partition(capsys.readouterr().out)
        assert p == 2
        H = dp.cycle(4)
        assert dp.verify_partition(H, VectorFunction.constant(H.vertices, (1, 1)), P)

    def test_partition_certificate_exit_2(self, tmp_path, capsys):
        path = write(tmp_path, "c5.hg", c5_instance())
        assert main(["partition", path]) == 2
        (cert,) = parse_certificates(capsys.readouterr().out)
        H = dp.cycle(5)
        assert dp.verify_certificate(H, VectorFunction.constant(H.vertices, (1, 1)), cert)

    def test_is_hard(self, tmp_path, capsys):
        assert main(["is-hard", write(tmp_path, "c5.hg", c5_instance())]) == 2
        parse_certificates(capsys.readouterr().out)
        assert main(["is-hard", write(tmp_path, "c4.hg", c4_instance())]) == 0
        assert capsys.readouterr().out == "not-hard\n"

    def test_col(self, tmp_path, capsys):
        path = write(tmp_path, "k4.hg", emit_instance(dp.complete_uniform(4, 2)))
        assert main(["col", path]) == 0
        assert capsys.readouterr().out == "col 4\n"

    def test_blocks(self, tmp_path, capsys):
        text = "hg 0\nv a\nv b\nv c\ne e1 a b\ne e2 b c\n"
        assert main(["blocks", write(tmp_path, "p.hg", text)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "blocks 2"
        assert out[-1] == "cut b"

    def test_degenerate(self, tmp_path, capsys):
        H = dp.path(3)
        text = emit_instance(H, VectorFunction.constant(H.vertices, (2,)))
        assert main(["degenerate", write(tmp_path, "p.hg", text)]) == 0
        assert capsys.readouterr().out.startswith("degenerate ")
        H = dp.cycle(3)
        text = emit_instance(H, VectorFunction.constant(H.vertices, (2,)))
        assert main(["degenerate", write(tmp_path, "c.hg", text)]) == 2
        assert capsys.readouterr().out == "core v1 v2 v3\n"

    def test_refine_degrees(self, tmp_path, capsys):
        H = dp.cycle(4)
        f = VectorFunction.constant(H.vertices, (1, 1))
        assert main(["refine-degrees", write(tmp_path, "c4.hg", c4_instance())]) == 0
        P, _ = parse_partition(capsys.readouterr().out)
        assert dp.verify_partition(H, f, P)

    def test_list_color(self, tmp_path, capsys):
        H = dp.cycle(4)
        text = emit_instance(H, lists={v: {"1", "2"} for v in H.vertices})
        assert main(["list-color", write(tmp_path, "c4l.hg", text)]) == 0
        col = parse_coloring(capsys.readouterr().out)
        assert dp.is_proper(H, col)
        H = dp.cycle(5)
        text = emit_instance(H, lists={v: {"1", "2"} for v in H.vertices})
        assert main(["list-color", write(tmp_path, "c5l.hg", text)]) == 2
        parse_certificates(capsys.readouterr().out)

    def test_alpha(self, tmp_path, capsys):
        path = write(tmp_path, "k5.hg", emit_instance(dp.complete_uniform(5, 2)))
        assert main(["alpha", path, "--s", "2"]) == 0
        assert capsys.readouterr().out == "alpha 3\n"
        assert main(["alpha", path, "--s", "1", "--lick-white"]) == 0
        assert capsys.readouterr().out == "alpha 3\n"

    def test_gen_round_trips(self, capsys):
        assert main(["gen", "cycle", "--n", "6"]) == 0
        text = capsys.readouterr().out
        assert emit_instance(dp.cycle(6)) == text
        assert main(["gen", "hard", "--seed", "3", "--p", "2"]) == 0
        capsys.readouterr()
        assert main(["gen", "random", "--n", "5", "--m", "6", "--seed", "1"]) == 0
        capsys.readouterr()

    def test_gen_hard_is_hard(self, tmp_path, capsys):
        assert main(["gen", "hard", "--seed", "7", "--p", "3"]) == 0
        text = capsys.readouterr().out
        assert main(["is-hard", write(tmp_path, "h.hg", text)]) == 2

    def test_stdin(self, tmp_path, monkeypatch, capsys):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(c4_instance()))
        assert main(["partition", "-"]) == 0
        parse_partition(capsys.readouterr().out)


class TestErrors:
    def test_parse_error_exit_1(self, tmp_path, capsys):
        assert main(["partition", write(tmp_path, "bad.hg", "v a 1\n")]) == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_file_exit_1(self, capsys):
        assert main(["partition", "/nonexistent/x.hg"]) == 1

    def test_missing_f_values(self, tmp_path, capsys):
        text = emit_instance(dp.cycle(3))
        assert main(["partition", write(tmp_path, "c.hg", text)]) == 1

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1


class TestChecks:
    def test_oracle_check_agrees(self, capsys):
        assert main(["oracle-check", "--count", "40", "--max-n", "5", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert "checked 40" in out
        assert "disagreements: 0" in out

    def test_census_output(self, capsys):
        assert main(["census", "--count", "40", "--max-n", "4", "--seed", "2"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[-1] == "disagreements: 0"
        assert all(line.startswith("n ") for line in out[:-1])


class TestDeterminism:
    def _run(self, argv, stdin_text):
        return subprocess.run(
            [sys.executable, "-m", "degenpart.cli"] + argv,
            input=stdin_text.encode(),
            capture_output=True,
        )

    def test_byte_identical_over_runs(self):
        for argv, text in [
            (["partition", "-"], c4_instance()),
            (["partition", "-"], c5_instance()),
            (["is-hard", "-"], c5_instance()),
            (["blocks", "-"], "hg 0\nv a\nv b\nv c\ne e1 a b\ne e2 b c\n"),
        ]:
            a = self._run(argv, text)
            b = self._run(argv, text)
            assert a.returncode == b.returncode
            assert a.stdout == b.stdout

    def test_gen_seeded_reproducible(self):
        a = self._run(["gen", "random", "--n", "6", "--m", "7", "--seed", "9"], "")
        b = self._run(["gen", "random", "--n", "6", "--m", "7", "--seed", "9"], "")
        assert a.stdout == b.stdout and a.returncode == 0
