import json

import pytest

from unitwreath.cli import main


@pytest.fixture()
def d8xc2_path(corpus_dir):
    return str(corpus_dir / "o16" / "D8xC2.pc2")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_pass(self, capsys, d8xc2_path):
        code, out, _ = run(capsys, "check", d8xc2_path)
        assert code == 0
        assert "pass" in out

    def test_abelian_exits_1(self, capsys, tmp_path):
        path = tmp_path / "C2xC2.pc2"
        path.write_text("group C2xC2\ngens a b\n")
        code, out, _ = run(capsys, "check", str(path), "--json")
        assert code == 1
        assert json.loads(out)["failure_reason"] == "abelian"

    def test_missing_file_exits_3(self, capsys):
        code, _, err = run(capsys, "check", "no/such/file.pc2")
        assert code == 3
        assert "error" in err

    def test_malformed_file_exits_3(self, capsys, tmp_path):
        path = tmp_path / "bad.pc2"
        path.write_text("group X\ngens a\npow a = q\n")
        code, _, err = run(capsys, "check", str(path))
        assert code == 3


class TestVerify:
    def test_verify_with_oracle(self, capsys, d8xc2_path):
        code, out, _ = run(capsys, "verify", d8xc2_path, "--oracle", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "pass"
        assert data["section"]["checks"]["oracle-isomorphism"] is True

    def test_hypothesis_failure_exits_1(self, capsys, corpus_dir):
        code, out, _ = run(capsys, "verify", str(corpus_dir / "o8" / "D8.pc2"))
        assert code == 1

    def test_witness_override(self, capsys, d8xc2_path):
        code, out, _ = run(
            capsys, "verify", d8xc2_path, "--oracle",
            "--witness", "a=a,b=b,z=c*z", "--json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["witness"]["z"] == "c·z"
        assert data["verdict"] == "pass"

    def test_bad_witness_exits_3(self, capsys, d8xc2_path):
        code, _, err = run(
            capsys, "verify", d8xc2_path, "--witness", "a=c,b=c,z=z"
        )
        assert code == 3

    def test_directory_sweep(self, capsys, corpus_dir):
        code, out, _ = run(
            capsys, "verify", str(corpus_dir / "o16"), "--oracle", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "pass"
        assert len(data["pipelines"]) == 4


class TestScan:
    def test_json_totals(self, capsys, corpus_dir):
        code, out, _ = run(capsys, "scan", str(corpus_dir / "o16"), "--json")
        assert code == 0
        (block,) = json.loads(out)["orders"]
        assert (block["order"], block["total"], block["passing"]) == (16, 14, 4)

    def test_json_is_byte_identical_across_runs(self, capsys, corpus_dir):
        _, first, _ = run(capsys, "scan", str(corpus_dir / "o16"), "--json")
        _, second, _ = run(capsys, "scan", str(corpus_dir / "o16"), "--json")
        assert first == second

    def test_corrupted_file_exits_3(self, capsys, tmp_path):
        (tmp_path / "bad.pc2").write_text("group X\ngens a\npow a = q\n")
        code, out, _ = run(capsys, "scan", str(tmp_path), "--json")
        assert code == 3


class TestModel:
    def test_model_dump(self, capsys):
        code, out, _ = run(capsys, "model", "1", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["order"] == 8
        assert len(data["table"]) == 8

    def test_exit_code_matches_verdict(self, capsys, d8xc2_path):
        code, out, _ = run(capsys, "verify", d8xc2_path, "--oracle", "--json")
        assert (code == 0) == (json.loads(out)["verdict"] == "pass")
