import unittest

from domination import PairedSet
from flower import Hub, Petal, flower
from solver import SolverError, lower_bound_report, min_paired_domination, petal_counts
from solver.results import SolveResult


class LowerBoundReportTests(unittest.TestCase):
    def test_clamped_bound_on_short_petals(self) -> None:
        g = flower(3, 3)
        report = lower_bound_report(g, min_paired_domination(g, 1), 1)

        self.assertEqual(0, report.bound)
        self.assertEqual((0, 0, 0), tuple(row.count for row in report.rows))
        self.assertTrue(report.holds)

        g = flower(4, 4)
        report = lower_bound_report(g, min_paired_domination(g, 2), 2)
        self.assertEqual(0, report.bound)
        self.assertEqual((), report.violations)

    def test_long_petals_carry_two_members_each(self) -> None:
        g = flower(3, 8)
        result = min_paired_domination(g, 1)
        report = lower_bound_report(g, result, 1)

        self.assertEqual(10, result.optimum)
        self.assertEqual(2, report.bound)
        for row in report.rows:
            self.assertGreaterEqual(row.count, 2)

    def test_minimum_set_below_the_petal_bound(self) -> None:
        g = flower(3, 5)
        result = min_paired_domination(g, 1)
        report = lower_bound_report(g, result, 1)

        self.assertEqual(6, result.optimum)
        self.assertEqual(
            ["u1", "u2", "u3", "v1.1", "v2.1", "v3.1"],
            [vertex.name for vertex in result.witness.sorted_members()],
        )
        self.assertEqual(2, report.bound)
        self.assertEqual((1, 2, 3), report.violations)
        self.assertEqual(
            {"k": 1, "bound": 2, "counts": [1, 1, 1], "violations": [1, 2, 3]},
            report.to_payload(),
        )

    def test_petal_counts_on_any_paired_set(self) -> None:
        g = flower(4, 6)
        paired_set = PairedSet.from_pairs(
            [(Hub(1), Hub(2)), (Petal(1, 2), Petal(1, 3)), (Petal(3, 1), Petal(3, 2))]
        )

        self.assertEqual((2, 0, 2, 0), petal_counts(g, paired_set))
        self.assertEqual((2, 4), lower_bound_report(g, paired_set, 1).violations)

    def test_unproven_result_is_rejected(self) -> None:
        unproven = SolveResult(
            optimum=None, witness=None, nodes_explored=0, proven=False, millis=0, lower_bound=2
        )
        with self.assertRaises(SolverError):
            lower_bound_report(flower(3, 3), unproven, 1)


if __name__ == "__main__":
    unittest.main()
