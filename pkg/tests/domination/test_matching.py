import random
import unittest

from domination import exhaustive_matching_size, has_perfect_matching, max_matching
from flower import Hub, Petal, flower


def _grown_subset(rng: random.Random, g, size: int) -> set:
    """Random connected-leaning subset: grow from a seed through random neighbors."""
    start = rng.randrange(len(g))
    chosen = {start}
    frontier = list(g.neighbor_indices(start))
    while len(chosen) < size and frontier:
        candidate = frontier.pop(rng.randrange(len(frontier)))
        if candidate in chosen:
            continue
        chosen.add(candidate)
        frontier.extend(g.neighbor_indices(candidate))
    return {g.vertex(index) for index in chosen}


class MaxMatchingTests(unittest.TestCase):
    def test_adjacent_hubs(self) -> None:
        self.assertEqual([(Hub(1), Hub(2))], max_matching(flower(3, 3), {Hub(1), Hub(2)}))

    def test_hub_cycle_of_four(self) -> None:
        g = flower(4, 4)
        matching = max_matching(g, {Hub(1), Hub(2), Hub(3), Hub(4)})
        self.assertEqual(2, len(matching))
        self.assertEqual(4, len({vertex for pair in matching for vertex in pair}))

    def test_empty_set(self) -> None:
        self.assertEqual([], max_matching(flower(3, 3), set()))

    def test_odd_cycle_leaves_one_vertex(self) -> None:
        g = flower(5, 3)
        hubs = {Hub(i) for i in range(1, 6)}
        self.assertEqual(2, len(max_matching(g, hubs)))


class PerfectMatchingTests(unittest.TestCase):
    def test_non_adjacent_hubs(self) -> None:
        self.assertFalse(has_perfect_matching(flower(4, 4), {Hub(1), Hub(3)}))

    def test_odd_cardinality(self) -> None:
        g = flower(4, 4)
        self.assertFalse(has_perfect_matching(g, {Hub(1), Hub(2), Hub(3)}))
        self.assertFalse(has_perfect_matching(g, {Petal(1, 1)}))

    def test_hubs_of_four_petals(self) -> None:
        self.assertTrue(has_perfect_matching(flower(4, 4), {Hub(i) for i in range(1, 5)}))

    def test_empty_set_is_vacuous(self) -> None:
        self.assertTrue(has_perfect_matching(flower(3, 3), set()))

    def test_needs_blossom_to_reach_pendant(self) -> None:
        # Triangle u1 u2 u3 with v3.1 hanging off u1 and u3.
        g = flower(3, 3)
        members = {Hub(1), Hub(2), Hub(3), Petal(3, 1)}
        self.assertTrue(has_perfect_matching(g, members))


class MatchingOracleTests(unittest.TestCase):
    def test_blossom_agrees_with_bitmask_matcher(self) -> None:
        rng = random.Random(1729)
        small = [(n, m) for n in range(3, 9) for m in range(3, 9) if n * (m - 1) <= 16]
        for trial in range(600):
            if trial % 2:
                n, m = rng.choice(small)
                g = flower(n, m)
                subset = set(rng.sample(g.vertices, rng.randint(0, len(g))))
            else:
                g = flower(rng.randint(3, 10), rng.randint(3, 10))
                subset = _grown_subset(rng, g, rng.randint(1, 16))
            with self.subTest(trial=trial):
                self.assertLessEqual(len(subset), 16)
                self.assertEqual(exhaustive_matching_size(g, subset), len(max_matching(g, subset)))

    def test_bitmask_matcher_limit(self) -> None:
        g = flower(5, 5)
        with self.assertRaises(ValueError):
            exhaustive_matching_size(g, set(g.vertices))


if __name__ == "__main__":
    unittest.main()
