import pytest

from posetao import constructions as c
from posetao import extremal as ex
from posetao.poset import Poset, comparability_graph, height, width
from posetao.solver import ao_brute, ao_exact, independence_number
from posetao.structure import is_v_free


def test_lambda_extremal_examples():
    r = c.lambda_extremal(2)
    assert r.obj.n == 3 and ao_brute(comparability_graph(r.poset)) == 2
    r = c.lambda_extremal(4)
    assert r.obj.n == 8 and is_v_free(r.poset)
    assert c.lambda_extremal(1).poset == Poset.chain(1)


@pytest.mark.parametrize("a", range(1, 9))
def test_lambda_extremal_claims_hold(a):
    assert c.lambda_extremal(a).verify() == {}


@pytest.mark.parametrize("a,h,size,hgt", [(4, 2, 6, 2), (4, 1, 4, 1), (2, 1, 2, 1), (6, 2, 9, 2), (8, 3, 14, 3)])
def test_lambda_h_examples(a, h, size, hgt):
    r = c.lambda_h_extremal(a, h)
    assert r.obj.n == size and height(r.poset) == hgt
    assert r.verify() == {}


def test_lambda_h_out_of_range():
    with pytest.raises(c.OutOfSpecifiedRange):
        c.lambda_h_extremal(8, 2)


def test_lambda_h_odd_extension_meets_upper_bound():
    for a in (3, 5, 7, 9):
        h = (a - 1) // 2
        r = c.lambda_h_extremal(a, h, extended=True)
        assert r.conjectural
        assert r.obj.n == ex.lambda_h_upper(a, h)
        assert r.verify() == {}


@pytest.mark.parametrize("a", range(1, 9))
def test_x_extremal_claims_hold(a):
    r = c.x_extremal(a)
    assert r.obj.n == ex.x_closed(a)
    assert r.verify() == {}
    assert r.conjectural == (a % 2 == 1 and a > 1)


def test_x_extremal_examples():
    r = c.x_extremal(2)
    assert r.obj.n == 3 and r.central == 0
    assert c.x_extremal(8).obj.n == 31


def test_boolean_lattice_examples():
    assert c.boolean_lattice(1) == Poset.chain(2)
    B3 = c.boolean_lattice(3)
    assert B3.n == 8 and height(B3) == 4 and width(B3) == 3
    assert c.boolean_lattice(0).n == 1


def test_boolean_witness_examples():
    assert c.boolean_witness(3).size == 4
    assert c.boolean_witness(2).size == 2
    assert c.boolean_witness(1).chains == ((0, 1),)
    for m in range(1, 7):
        assert c.boolean_witness(m).is_valid(c.boolean_lattice(m))


def test_boolean_formula_against_solver():
    # the closed formula matches at m = 1, 3, 4; at m = 2 a maximal chain gives 3
    values = {m: ao_exact(comparability_graph(c.boolean_lattice(m))).value for m in range(1, 5)}
    assert values == {1: 2, 2: 3, 3: 4, 4: 6}
    assert [c.boolean_ao(m) for m in range(1, 5)] == [2, 2, 4, 6]


def test_multipartite_examples():
    assert c.multipartite_parts(9) == [3, 3, 3]
    assert c.multipartite_parts(5) == [2, 2, 1]
    assert c.multipartite(1).n == 1
    for n in range(1, 17):
        parts = c.multipartite_parts(n)
        assert sum(parts) == n
        r = c.report_for("multipartite", [n])
        assert r.verify() == {}, (n, parts)


def test_graph_examples():
    assert c.grid_cliques(1).n == 1
    assert len(c.grid_cliques(2).edges()) == 2
    G = c.grid_cliques(3)
    assert ao_exact(G).value == 9 and independence_number(G) == 3
    assert ao_brute(c.planar_c5_join(1)) == 3
    assert ao_exact(c.planar_c5_join(2)).value == 6
    assert c.planar_c5_join(0).n == 0


@pytest.mark.parametrize("kind,params", [
    ("lambda", [5]), ("lambda-h", [6, 3]), ("x", [4]), ("boolean", [0]), ("boolean", [2]),
    ("boolean", [3]), ("multipartite", [7]), ("grid", [3]), ("planar-c5", [2]),
])
def test_report_for_self_checks(kind, params):
    assert c.report_for(kind, params).verify() == {}


def test_report_for_rejects_bad_input():
    with pytest.raises(ValueError):
        c.report_for("lambda", [1, 2])
    with pytest.raises(ValueError):
        c.report_for("torus", [3])
