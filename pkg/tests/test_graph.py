import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxquandle import INF, GraphSyntaxError, ValidationError, catalog, odd_components, parse_graph
from coxquandle.graph import CoxeterMatrix, from_bonds, load_graph

from oracles import odd_component_count


def test_parse_a2():
    M = parse_graph('{"generators":["s","t"],"m":[[1,3],[3,1]]}')
    assert M.labels == ("s", "t")
    assert M.m == ((1, 3), (3, 1))


def test_zero_encodes_infinite_bond():
    M = parse_graph('{"generators":["s","t"],"m":[[1,0],[0,1]]}')
    assert M.bond(0, 1) == INF
    assert M.to_json()["m"] == [[1, 0], [0, 1]]


def test_asymmetric_matrix_rejected():
    with pytest.raises(ValidationError):
        parse_graph('{"generators":["s","t"],"m":[[1,3],[4,1]]}')


@pytest.mark.parametrize("text", [
    '{"generators":["s","t"],"m":[[1,1],[1,1]]}',
    '{"generators":["s","t"],"m":[[2,3],[3,1]]}',
    '{"generators":["s","s"],"m":[[1,3],[3,1]]}',
    '{"generators":["s","t"],"m":[[1,3]]}',
    '{"generators":["s","t"],"m":[[1,2.5],[2.5,1]]}',
])
def test_invalid_matrices(text):
    with pytest.raises(ValidationError):
        parse_graph(text)


@pytest.mark.parametrize("text", ["not json", "[1, 2]", '{"generators": ["s"]}'])
def test_syntax_errors(text):
    with pytest.raises(GraphSyntaxError):
        parse_graph(text)


def test_alias_and_catalog_agree():
    assert parse_graph("coxeter B3") == catalog("B3")
    assert load_graph("B3") == catalog("B3")
    assert load_graph(json.dumps(catalog("B3").to_json())) == catalog("B3")


def test_load_from_file(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(catalog("H3").to_json()))
    assert load_graph(str(p)) == catalog("H3")


def test_json_roundtrip_for_catalog():
    for name in ["A4", "B3", "D5", "E6", "F4", "G2", "H4", "I2(7)", "tilde-A1", "tilde-A3", "A2xB2"]:
        M = catalog(name)
        assert parse_graph(json.dumps(M.to_json())) == M


def test_catalog_shapes():
    assert catalog("B3").m[1][2] == 4
    assert catalog("F4").m[1][2] == 4
    assert catalog("H3").m[0][1] == 5
    assert catalog("G2").m[0][1] == 6
    assert catalog("tilde-A1").m[0][1] == INF
    tA2 = catalog("tilde-A2")
    assert tA2.m[0][1] == tA2.m[1][2] == tA2.m[0][2] == 3
    D4 = catalog("D4")
    assert sorted(b for b in D4.m[1] if b != 1) == [3, 3, 3]
    assert catalog("A1xA1").m == ((1, 2), (2, 1))
    with pytest.raises(ValidationError):
        catalog("Q7")


@pytest.mark.parametrize("name,count", [
    ("A2", 1), ("B2", 2), ("A1xA1", 2), ("A5", 1), ("B4", 2), ("D5", 1), ("E8", 1),
    ("F4", 2), ("G2", 2), ("H3", 1), ("H4", 1), ("I2(5)", 1), ("I2(6)", 2),
    ("tilde-A1", 2), ("tilde-A2", 1), ("A2xB2", 3),
])
def test_odd_component_counts(name, count):
    odd = odd_components(catalog(name))
    assert odd.count == count
    assert odd_component_count(catalog(name).to_json()["m"]) == count


def test_a2_generators_share_class_zero():
    assert odd_components(catalog("A2")).class_of == (0, 0)


def test_representatives_are_smallest_members():
    odd = odd_components(catalog("F4"))
    assert odd.representatives == (0, 2)
    assert odd.members(0) == (0, 1) and odd.members(1) == (2, 3)


bond = st.sampled_from([2, 3, 4, 5, 6, 0])


@st.composite
def matrices(draw):
    n = draw(st.integers(1, 6))
    rows = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = draw(bond)
    return from_bonds([f"g{k}" for k in range(n)], rows)


@settings(max_examples=200, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_odd_components_relabel_equivariant(M, rnd):
    perm = list(range(M.n))
    rnd.shuffle(perm)
    R = M.relabel(perm)
    a, b = odd_components(M), odd_components(R)
    assert a.count == b.count == odd_component_count(M.to_json()["m"])
    # same partition of labels
    part = lambda odd, mat: {frozenset(mat.labels[i] for i in odd.members(k)) for k in range(odd.count)}
    assert part(a, M) == part(b, R)
    assert list(b.representatives) == sorted(b.representatives)
    assert all(b.class_of[r] == k for k, r in enumerate(b.representatives))


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_json_roundtrip(M):
    assert parse_graph(json.dumps(M.to_json())) == M


def test_direct_construction_validates():
    with pytest.raises(ValidationError):
        CoxeterMatrix(("a",), ((2,),))
