import unittest

from constructions import build_construction, formula
from domination import is_k_paired_dominating
from flower import flower

GRID = range(3, 41)


class ConstructionGridTests(unittest.TestCase):
    def _check_distance(self, k: int) -> None:
        for n in GRID:
            for m in GRID:
                result = build_construction(n, m, k)
                diagnostic = is_k_paired_dominating(flower(n, m), result.paired_set, k)
                self.assertTrue(diagnostic.valid, (n, m, k, diagnostic.to_payload()))
                self.assertEqual(formula(n, m, k), len(result.paired_set), (n, m, k))
                self.assertEqual(result.formula_value, len(result.paired_set))

    def test_distance_one_grid(self) -> None:
        self._check_distance(1)

    def test_distance_two_grid(self) -> None:
        self._check_distance(2)


if __name__ == "__main__":
    unittest.main()
