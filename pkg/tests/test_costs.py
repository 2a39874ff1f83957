import numpy as np
import pytest

from editclust import ConfigurationError, GAP, make_matrix_cost_model, make_unit_cost_model


def test_unit_model_binary():
    c = make_unit_cost_model(["0", "1"])
    assert c.sub(0, 0) == 0
    assert c.sub(0, 1) == 1
    assert c.del_cost == 1


def test_unit_model_identity_and_offdiagonal():
    c = make_unit_cost_model("abcdefg")
    for x in range(c.size):
        assert c.sub(x, x) == 0
    a, cc = c.token_id("a"), c.token_id("c")
    assert c.sub(a, cc) == 1


def test_empty_alphabet_rejected():
    with pytest.raises(ConfigurationError):
        make_unit_cost_model([])


def test_duplicate_tokens_rejected():
    with pytest.raises(ConfigurationError):
        make_unit_cost_model(["a", "a"])


def test_unit_matrix_matches_unit_model():
    m = make_matrix_cost_model("abc", np.ones((3, 3)) - np.eye(3), 1.0)
    u = make_unit_cost_model("abc")
    assert np.array_equal(m.sub_matrix, u.sub_matrix)
    assert m.del_cost == u.del_cost


def test_grouped_matrix_lookup():
    # {a, b} and {c, d} are two groups; crossing a group costs 2
    alphabet = "abcd"
    group = {"a": 0, "b": 0, "c": 1, "d": 1}
    sub = [[0 if x == y else (1 if group[x] == group[y] else 2) for y in alphabet] for x in alphabet]
    c = make_matrix_cost_model(alphabet, sub, 1.5)
    assert c.sub(0, 1) == 1
    assert c.sub(0, 2) == 2
    assert c.sub(3, 1) == 2
    assert c.elem(2, GAP) == 1.5


@pytest.mark.parametrize("matrix,del_cost", [
    ([[1, 1], [1, 0]], 1.0),      # d(a,a) != 0
    ([[0, -1], [1, 0]], 1.0),
    ([[0, 1], [1, 0]], -1.0),
    ([[0, 1, 1], [1, 0, 1]], 1.0),
    ([[0, float("nan")], [1, 0]], 1.0),
])
def test_invalid_matrices_rejected(matrix, del_cost):
    with pytest.raises(ConfigurationError):
        make_matrix_cost_model("ab", matrix, del_cost)


def test_lookup_is_pure_and_matrix_frozen():
    c = make_unit_cost_model("xyz")
    first = [[c.sub(i, j) for j in range(3)] for i in range(3)]
    second = [[c.sub(i, j) for j in range(3)] for i in range(3)]
    assert first == second
    with pytest.raises(ValueError):
        c.sub_matrix[0, 1] = 5.0


def test_encode_decode():
    c = make_unit_cost_model(["lo", "hi"])
    assert c.encode(["hi", "lo"]) == (1, 0)
    assert c.decode((1, GAP, 0)) == ["hi", "-", "lo"]
