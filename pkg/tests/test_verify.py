from wonderkit.verify import load_golden, structural_diff


def test_structural_diff():
    assert structural_diff({"a": [1, 2]}, {"a": [1, 2]}) == []
    assert structural_diff({"a": [1, 2]}, {"a": [1, 3]}) == ["$.a[1]: 3 != 2"]
    assert structural_diff({"a": 1}, {"b": 1}) == ["$.a: missing", "$.b: unexpected"]
    assert structural_diff([1], [1, 2]) == ["$: length 2 != 1"]


def test_structural_diff_ignores_key_order():
    assert structural_diff({"x": 1, "y": {"p": 1, "q": 2}}, {"y": {"q": 2, "p": 1}, "x": 1}) == []


def test_golden_fixtures_load():
    assert load_golden("i_sequence.json")["A"]["A8"] == 2250
    assert len(load_golden("g2_table.json")["rows"]) == 8
    assert len(load_golden("a3_exponents.json")["monomials"]) == 5
    assert load_golden("maximal_census.json")["A5"] == 6
