import contextlib
import io
import unittest
from unittest.mock import patch

import main as app_main


def _run(argv: list[str]) -> tuple[int, str]:
    stdout = io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(io.StringIO()):
        code = app_main.main(argv)
    return code, stdout.getvalue()


class MainEntrypointTests(unittest.TestCase):
    def test_formula_prints_value(self) -> None:
        self.assertEqual((0, "4\n"), _run(["formula", "--n", "4", "--m", "4", "--k", "1"]))

    def test_domain_error_maps_to_usage_exit(self) -> None:
        code, stdout = _run(["gen", "--n", "2", "--m", "4"])

        self.assertEqual(2, code)
        self.assertEqual("", stdout)

    def test_missing_arguments_exit_with_usage_code(self) -> None:
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as error:
                app_main.main(["formula"])

        self.assertEqual(2, error.exception.code)

    def test_unexpected_error_is_logged_and_maps_to_failure(self) -> None:
        with patch.object(app_main, "execute", side_effect=RuntimeError("boom")):
            code, _ = _run(["formula", "--n", "4", "--m", "4"])

        self.assertEqual(1, code)

    def test_logging_goes_to_stderr(self) -> None:
        stderr = io.StringIO()
        with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(stderr):
            app_main.main(["--verbose", "construct", "--n", "9", "--m", "6", "--k", "1"])

        self.assertIn("[DEBUG]", stderr.getvalue())
        self.assertIn("rejected", stderr.getvalue())


if __name__ == "__main__":
    unittest.main()
