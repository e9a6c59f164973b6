import unittest

from constructions import build_paired_set, formula
from domination import PairedSet, is_k_paired_dominating
from flower import flower
from solver import (
    InstanceTooLargeError,
    SolveBudget,
    BudgetError,
    min_paired_domination,
)


def _names(paired_set: PairedSet) -> list[str]:
    return [vertex.name for vertex in paired_set.sorted_members()]


class MinPairedDominationTests(unittest.TestCase):
    def test_anchor_optima(self) -> None:
        for n, m, k, expected in (
            (3, 3, 1, 2),
            (3, 4, 1, 4),
            (4, 4, 1, 4),
            (3, 3, 2, 2),
            (4, 4, 2, 2),
        ):
            result = min_paired_domination(flower(n, m), k)
            self.assertTrue(result.proven, (n, m, k))
            self.assertEqual(expected, result.optimum, (n, m, k))
            self.assertEqual(formula(n, m, k), result.optimum, (n, m, k))

    def test_witness_is_least_member_set(self) -> None:
        self.assertEqual(["u1", "u2"], _names(min_paired_domination(flower(3, 3), 1).witness))
        self.assertEqual(["u1", "u2"], _names(min_paired_domination(flower(4, 4), 2).witness))
        self.assertEqual(
            ["u1", "u2", "u3", "v1.1"],
            _names(min_paired_domination(flower(3, 4), 1).witness),
        )

    def test_witness_verifies_at_optimum_size(self) -> None:
        for n, m, k in ((3, 5, 1), (5, 3, 1), (4, 5, 2), (3, 6, 2)):
            g = flower(n, m)
            result = min_paired_domination(g, k)
            self.assertTrue(is_k_paired_dominating(g, result.witness, k).valid)
            self.assertEqual(result.optimum, len(result.witness))
            self.assertEqual(0, result.optimum % 2)
            self.assertGreater(result.nodes_explored, 0)

    def test_removing_any_pair_breaks_domination(self) -> None:
        for n, m, k in ((3, 5, 1), (4, 4, 1), (6, 3, 2)):
            g = flower(n, m)
            witness = min_paired_domination(g, k).witness
            for dropped in witness.pairing:
                rest = [pair for pair in witness.pairing if pair != dropped]
                reduced = PairedSet.from_pairs(rest)
                self.assertFalse(is_k_paired_dominating(g, reduced, k).valid, (n, m, k, dropped))

    def test_payload_shape(self) -> None:
        payload = min_paired_domination(flower(3, 3), 1).to_payload()

        self.assertEqual(2, payload["optimum"])
        self.assertTrue(payload["proven"])
        self.assertEqual(["u1", "u2"], payload["witness"]["members"])
        self.assertEqual([["u1", "u2"]], payload["witness"]["pairs"])
        self.assertIn("nodes", payload)
        self.assertIn("millis", payload)

    def test_instance_above_vertex_cap_is_rejected(self) -> None:
        with self.assertRaises(InstanceTooLargeError):
            min_paired_domination(flower(3, 3), 1, SolveBudget(max_vertices=5))

    def test_invalid_budget_and_distance_are_rejected(self) -> None:
        with self.assertRaises(BudgetError):
            SolveBudget(time_limit=0)
        with self.assertRaises(BudgetError):
            SolveBudget(max_set_size=-2)
        with self.assertRaises(ValueError):
            min_paired_domination(flower(3, 3), 0)
        with self.assertRaises(ValueError):
            min_paired_domination(flower(3, 3), 1, threads=0)

    def test_set_size_cap_reports_unproven(self) -> None:
        result = min_paired_domination(flower(3, 4), 1, SolveBudget(max_set_size=2))

        self.assertFalse(result.proven)
        self.assertIsNone(result.optimum)
        self.assertIsNone(result.witness)
        self.assertEqual(4, result.lower_bound)
        self.assertEqual("unknown", result.to_payload()["optimum"])

    def test_exhausted_time_keeps_incumbent_as_upper_bound(self) -> None:
        g = flower(4, 4)
        incumbent = build_paired_set(4, 4).paired_set

        result = min_paired_domination(g, 1, SolveBudget(time_limit=1e-9), incumbent=incumbent)

        self.assertFalse(result.proven)
        self.assertEqual(len(incumbent), result.optimum)
        self.assertEqual(incumbent, result.witness)
        self.assertEqual(2, result.lower_bound)

    def test_exhausted_time_without_incumbent_is_unknown(self) -> None:
        result = min_paired_domination(flower(4, 4), 1, SolveBudget(time_limit=1e-9))

        self.assertFalse(result.proven)
        self.assertIsNone(result.optimum)
        self.assertIsNone(result.to_payload()["witness"])

    def test_invalid_incumbent_is_ignored(self) -> None:
        bogus = PairedSet.from_pairs([(flower(4, 4).hub(1), flower(4, 4).hub(2))])

        result = min_paired_domination(
            flower(4, 4), 1, SolveBudget(time_limit=1e-9), incumbent=bogus
        )

        self.assertIsNone(result.witness)

    def test_result_independent_of_worker_count(self) -> None:
        for n, m, k in ((4, 4, 1), (5, 4, 1), (6, 3, 2)):
            g = flower(n, m)
            single = min_paired_domination(g, k)
            parallel = min_paired_domination(g, k, threads=2)
            self.assertTrue(parallel.proven)
            self.assertEqual(single.optimum, parallel.optimum, (n, m, k))
            self.assertEqual(single.witness, parallel.witness, (n, m, k))


if __name__ == "__main__":
    unittest.main()
