import json
import unittest
from pathlib import Path

from click.testing import CliRunner

from minmaxtree.data import const
from minmaxtree.main import cli

SAMPLE_TEXT = "3 6 7 1 5 2 10 4 9 8"
CONFIG = Path(__file__).parents[1] / "scripts" / "verify" / "configs" / "verify.yaml"


class CliTest(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, args, **kwargs):
        return self.runner.invoke(cli, args, catch_exceptions=False, **kwargs)

    def test_tree(self):
        result = self.invoke(["tree", "2 1 3"])
        assert result.exit_code == 0
        assert result.output == "2:1 [Min]\n  1:2 [Leaf]\n  3:3 [Leaf]\n"

    def test_tree_formats(self):
        dot = self.invoke(["tree", SAMPLE_TEXT, "--format", "dot"]).output
        assert dot.count("->") == 9
        data = json.loads(self.invoke(["tree", SAMPLE_TEXT, "--format", "json"]).output)
        assert data["root"] == 4
        min12 = self.invoke(["tree", "2 1 3", "--variant", "min12"]).output
        assert min12.splitlines()[0] == "1:2 [Max]"

    def test_psi(self):
        result = self.invoke(["psi", SAMPLE_TEXT, "7"])
        assert result.output == "3 6 7 1 5 2 4 8 10 9\n"
        result = self.invoke(["psi", "--stdin", "1"], input="1 2 3\n# skip\n2 1 3\n")
        assert result.output == "3 1 2\n2 1 3\n"

    def test_psi_usage(self):
        assert self.invoke(["psi", SAMPLE_TEXT]).exit_code == 2
        assert self.invoke(["psi", SAMPLE_TEXT, "x"]).exit_code == 2
        assert self.invoke(["psi", SAMPLE_TEXT, "11"]).exit_code == 2

    def test_orbit(self):
        result = self.invoke(["orbit", "2 1 3"])
        assert result.output == "2 1 3\n2 3 1\n"
        result = self.invoke(["orbit", SAMPLE_TEXT, "--gens", "7", "--format", "json"])
        data = json.loads(result.output)
        assert data["members"] == [
            [3, 6, 7, 1, 5, 2, 4, 8, 10, 9],
            [3, 6, 7, 1, 5, 2, 10, 4, 9, 8],
        ]
        assert self.invoke(["orbit", "2 1 3", "--gens", "1,x"]).exit_code == 2

    def test_fixed(self):
        assert self.invoke(["fixed", SAMPLE_TEXT]).output == "3 5 10\n"
        result = self.invoke(["fixed", "--stdin"], input="1\n1 2\n")
        assert result.output == "1\n2\n"
        assert self.invoke(["fixed"]).exit_code == 2

    def test_parse_errors(self):
        for text in ["1 1 2", "", "a b"]:
            with self.subTest(text=text):
                result = self.invoke(["tree", text])
                assert result.exit_code == 2

    def test_census(self):
        result = self.invoke(["census", "3", "--format", "csv"])
        assert result.output == "i,leaf,d0,d1,d2\n1,2,2,4,0\n2,0,0,4,2\n3,6,6,0,0\n"
        data = json.loads(self.invoke(["census", "4", "--format", "json"]).output)
        assert data["leaf_counts"] == [8, 8, 0, 24]
        assert self.invoke(["census", "14"]).exit_code == 2
        assert self.invoke(["census", "2"]).exit_code == 2

    def test_census_workers_env(self):
        single = self.invoke(["census", "6", "--format", "json"]).output
        result = self.invoke(
            ["census", "6", "--format", "json"], env={const.workers_env: "3"}
        )
        assert result.output == single

    def test_sample(self):
        args = ["sample", "8", "500", "--seed", "42", "--format", "json"]
        first = self.invoke(args).output
        assert first == self.invoke(args).output
        data = json.loads(first)
        assert data["probabilities"][-1] == 1.0
        assert data["probabilities"][-2] == 0.0
        assert self.runner.invoke(cli, ["sample", "8", "500"]).exit_code == 2

    def test_verify(self):
        result = self.invoke(["verify", "4"])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1].endswith("0 failed")
        data = json.loads(self.invoke(["verify", "3", "--format", "json"]).output)
        assert all(r["passed"] for r in data["results"])
        assert self.invoke(["verify", "11"]).exit_code == 2

    def test_verify_failure_exit(self):
        with self.runner.isolated_filesystem():
            config = Path("failing.yaml")
            config.write_text("checks:\n  - _target_: test_utils.FailingCheck\n")
            result = self.invoke(["verify", "3", "--config", str(config)])
        assert result.exit_code == 3
        assert "FAIL always-fails n=3" in result.output

    def test_verify_overrides(self):
        config = str(CONFIG)
        result = self.invoke(["verify", "3", "--config", config, "checks.11.max_n=4"])
        assert result.exit_code == 0
        result = self.invoke(["verify", "3", "--config", config, "checks.99.max_n=4"])
        assert result.exit_code == 2

    def test_verify_overrides_need_config(self):
        assert self.invoke(["verify", "3", "checks.0.max_n=3"]).exit_code == 2

    def test_andre(self):
        assert self.invoke(["andre", "6"]).output == "61\n"

    def test_output_file(self):
        with self.runner.isolated_filesystem():
            result = self.invoke(["tree", "2 1 3", "--format", "dot", "--output", "t.dot"])
            assert result.output == ""
            assert Path("t.dot").read_text().startswith('digraph "minmax" {')
