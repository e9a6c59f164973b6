import io
import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from cli import build_parser, execute
from constructions import RepairFailedError
from contracts import ExitCode

_ENV = {"FLOWERDOM_THREADS": "1"}


def _run(*argv: str) -> tuple[ExitCode, str]:
    stdout = io.StringIO()
    code = execute(build_parser().parse_args(list(argv)), stdout=stdout, environ=_ENV)
    return code, stdout.getvalue()


class GenCommandTests(unittest.TestCase):
    def test_edgelist_has_one_line_per_edge(self) -> None:
        code, output = _run("gen", "--n", "3", "--m", "3", "--format", "edgelist")

        self.assertEqual(ExitCode.OK, code)
        self.assertEqual(9, len(output.splitlines()))

    def test_dot_lists_every_vertex(self) -> None:
        code, output = _run("gen", "--n", "4", "--m", "4", "--format", "dot")

        self.assertEqual(ExitCode.OK, code)
        self.assertEqual(12, output.count("[shape="))

    def test_output_is_deterministic(self) -> None:
        self.assertEqual(
            _run("gen", "--n", "5", "--m", "6", "--format", "json"),
            _run("gen", "--n", "5", "--m", "6", "--format", "json"),
        )

    def test_bad_parameters_are_usage_errors(self) -> None:
        code, output = _run("gen", "--n", "2", "--m", "4")

        self.assertEqual(ExitCode.USAGE, code)
        self.assertEqual("", output)


class FormulaCommandTests(unittest.TestCase):
    def test_values(self) -> None:
        self.assertEqual((ExitCode.OK, "4\n"), _run("formula", "--n", "4", "--m", "4", "--k", "1"))
        self.assertEqual((ExitCode.OK, "2\n"), _run("formula", "--n", "4", "--m", "4", "--k", "2"))
        self.assertEqual((ExitCode.OK, "4\n"), _run("formula", "--n", "3", "--m", "6", "--k", "2"))

    def test_json_output(self) -> None:
        _, output = _run("formula", "--n", "4", "--m", "4", "--k", "2", "--json")
        payload = json.loads(output)

        self.assertEqual(2, payload["value"])
        self.assertEqual(6, payload["modulus"])
        self.assertEqual(4, payload["residue"])

    def test_unsupported_distance(self) -> None:
        self.assertEqual(ExitCode.USAGE, _run("formula", "--n", "4", "--m", "4", "--k", "3")[0])


class ConstructCommandTests(unittest.TestCase):
    def test_prints_verified_set(self) -> None:
        code, output = _run("construct", "--n", "4", "--m", "4", "--k", "1")
        payload = json.loads(output)

        self.assertEqual(ExitCode.OK, code)
        self.assertEqual(4, payload["formula"])
        self.assertEqual(4, len(payload["members"]))
        self.assertEqual(2, len(payload["pairs"]))
        self.assertIn("literal", payload)

    def test_repair_failure_exit_code(self) -> None:
        with patch("cli.commands.build_construction", side_effect=RepairFailedError("no set")):
            code, output = _run("construct", "--n", "4", "--m", "4", "--k", "1")

        self.assertEqual(ExitCode.REPAIR_FAILED, code)
        self.assertEqual("", output)


class VerifyCommandTests(unittest.TestCase):
    def _verify(self, document: str, *flags: str) -> tuple[ExitCode, str]:
        with tempfile.TemporaryDirectory() as temp_dir:
            path = Path(temp_dir) / "set.json"
            path.write_text(document, encoding="utf-8")
            return _run("verify", *flags, str(path))

    def test_construction_file_is_valid(self) -> None:
        _, construction = _run("construct", "--n", "5", "--m", "7", "--k", "2")

        code, output = self._verify(construction, "--n", "5", "--m", "7", "--k", "2")

        self.assertEqual(ExitCode.OK, code)
        self.assertTrue(json.loads(output)["valid"])

    def test_odd_member_count(self) -> None:
        document = json.dumps({"members": ["u1", "u2", "u3"], "pairs": [["u1", "u2"]]})

        code, output = self._verify(document, "--n", "4", "--m", "4")

        self.assertEqual(ExitCode.FAILURE, code)
        self.assertEqual("parity", json.loads(output)["failure"])

    def test_pair_that_is_not_an_edge(self) -> None:
        document = json.dumps({"members": ["u1", "u3"], "pairs": [["u1", "u3"]]})

        code, output = self._verify(document, "--n", "4", "--m", "4")
        payload = json.loads(output)

        self.assertEqual(ExitCode.FAILURE, code)
        self.assertEqual("pair-not-edge", payload["failure"])
        self.assertEqual("u1-u3", payload["witness"])

    def test_malformed_json(self) -> None:
        self.assertEqual(ExitCode.USAGE, self._verify("{not json", "--n", "4", "--m", "4")[0])

    def test_missing_file(self) -> None:
        code, _ = _run("verify", "--n", "4", "--m", "4", "/nonexistent/set.json")

        self.assertEqual(ExitCode.IO_ERROR, code)


class SolveCommandTests(unittest.TestCase):
    def test_optima(self) -> None:
        for n, m, k, expected in (("3", "3", "1", 2), ("3", "4", "1", 4), ("4", "4", "2", 2)):
            code, output = _run("solve", "--n", n, "--m", m, "--k", k)
            payload = json.loads(output)
            self.assertEqual(ExitCode.OK, code)
            self.assertEqual(expected, payload["optimum"])
            self.assertTrue(payload["proven"])
            self.assertEqual(expected, len(payload["witness"]["members"]))

    def test_report_adds_petal_counts_and_plain_optimum(self) -> None:
        _, output = _run("solve", "--n", "3", "--m", "5", "--k", "1", "--report")
        payload = json.loads(output)

        self.assertEqual([1, 1, 1], payload["report"]["counts"])
        self.assertEqual([1, 2, 3], payload["report"]["violations"])
        self.assertLessEqual(payload["plain"]["optimum"], payload["optimum"])

    def test_vertex_cap_is_a_usage_error(self) -> None:
        code, _ = _run("solve", "--n", "3", "--m", "3", "--max-vertices", "5")

        self.assertEqual(ExitCode.USAGE, code)

    def test_same_answer_with_two_workers(self) -> None:
        _, single = _run("solve", "--n", "4", "--m", "4", "--k", "1", "--threads", "1")
        _, parallel = _run("solve", "--n", "4", "--m", "4", "--k", "1", "--threads", "2")

        self.assertEqual(json.loads(single)["witness"], json.loads(parallel)["witness"])
        self.assertEqual(json.loads(single)["optimum"], json.loads(parallel)["optimum"])

    def test_invalid_environment_is_a_usage_error(self) -> None:
        stdout = io.StringIO()
        code = execute(
            build_parser().parse_args(["solve", "--n", "3", "--m", "3"]),
            stdout=stdout,
            environ={"FLOWERDOM_TIME_LIMIT": "soon"},
        )

        self.assertEqual(ExitCode.USAGE, code)


if __name__ == "__main__":
    unittest.main()
