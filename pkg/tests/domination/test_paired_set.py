import json
import unittest

from domination import PairedSet, PairedSetFormatError
from flower import Hub, Petal, flower


class PairedSetCodecTests(unittest.TestCase):
    def test_canonical_ordering(self) -> None:
        d = PairedSet.from_pairs([(Petal(3, 1), Hub(3)), (Hub(2), Hub(1))])
        self.assertEqual(
            {"members": ["u1", "u2", "u3", "v3.1"], "pairs": [["u1", "u2"], ["u3", "v3.1"]]},
            d.to_payload(),
        )

    def test_members_sort_by_name(self) -> None:
        d = PairedSet.from_pairs([(Hub(10), Hub(9)), (Hub(1), Hub(2))])
        self.assertEqual(["u1", "u10", "u2", "u9"], d.to_payload()["members"])

    def test_json_parse(self) -> None:
        text = '{"members": ["u2", "u1"], "pairs": [["u2", "u1"]]}'
        d = PairedSet.from_json(text)
        self.assertEqual(frozenset({Hub(1), Hub(2)}), d.members)
        self.assertEqual(((Hub(1), Hub(2)),), d.pairing)
        self.assertEqual(json.loads(d.to_json()), d.to_payload())

    def test_json_keeps_member_list_separate_from_pairs(self) -> None:
        d = PairedSet.from_json('{"members": ["u1", "u2", "u3"], "pairs": [["u1", "u2"]]}')
        self.assertEqual(3, len(d))
        self.assertEqual(1, len(d.pairing))

    def test_malformed_documents(self) -> None:
        bad = (
            "not json",
            "[]",
            '{"pairs": []}',
            '{"members": [], "pairs": {}}',
            '{"members": ["x9"], "pairs": []}',
            '{"members": ["u1"], "pairs": [["u1"]]}',
            '{"members": [1], "pairs": []}',
        )
        for text in bad:
            with self.subTest(text=text):
                with self.assertRaises(PairedSetFormatError):
                    PairedSet.from_json(text)

    def test_format_error_is_value_error(self) -> None:
        with self.assertRaises(ValueError):
            PairedSet.from_json("{}")

    def test_rotation(self) -> None:
        g = flower(4, 4)
        d = PairedSet.from_pairs([(Hub(4), Petal(4, 1))])
        rotated = d.rotated(g, 1)
        self.assertEqual(frozenset({Hub(1), Petal(1, 1)}), rotated.members)
        self.assertEqual(((Hub(1), Petal(1, 1)),), rotated.pairing)


if __name__ == "__main__":
    unittest.main()
