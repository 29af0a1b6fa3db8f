"""Root data, Weyl enumeration, and lattice-mode behavior."""

import pytest
from hypothesis import given, settings, strategies as st

from weylkit.rootdata import RootDatum, RootDatumError

RANK2 = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]


@pytest.fixture(scope="module")
def data():
    return {key: RootDatum(*key) for key in RANK2 + [("A", 3)]}


def test_positive_root_counts(data):
    expected = {("A", 1): 1, ("A", 2): 3, ("B", 2): 4, ("G", 2): 6, ("A", 3): 6}
    for key, n in expected.items():
        assert len(data[key].positive_roots) == n


def test_weyl_group_sizes_and_longest(data):
    expected = {("A", 1): (2, 1), ("A", 2): (6, 3), ("B", 2): (8, 4),
                ("G", 2): (12, 6), ("A", 3): (24, 6)}
    for key, (size, longest) in expected.items():
        rd = data[key]
        ws = rd.weyl_elements()
        assert len(ws) == size
        assert max(len(w.word) for w in ws) == longest


def test_cartan_matrices(data):
    assert data[("A", 2)].cartan == ((2, -1), (-1, 2))
    assert data[("B", 2)].cartan == ((2, -2), (-1, 2))
    assert data[("G", 2)].cartan == ((2, -1), (-3, 2))


def test_simple_reflection_negates_coroot(data):
    rd = data[("A", 1)]
    s = rd.simple_reflection(0)
    assert rd.weyl_act(s, rd.coroot(0)) == tuple(-x for x in rd.coroot(0))


def test_longest_element_negates_rho_cv(data):
    rd = data[("A", 2)]
    rho_cv = tuple(a + b for a, b in zip(rd.coroot(0), rd.coroot(1)))
    w0 = rd.longest_element()
    assert rd.weyl_act(w0, rho_cv) == tuple(-x for x in rho_cv)


def test_two_rho_is_sum_of_positive_roots(data):
    for rd in data.values():
        total = [0] * rd.rank
        for a in rd.positive_roots:
            total = [x + y for x, y in zip(total, a)]
        for i in range(rd.rank):
            # pair the sum against each simple coroot
            assert sum(total[j] * rd.cartan[j][i] for j in range(rd.rank)) == 2


def test_length_equals_inversion_count(data):
    for key in RANK2:
        rd = data[key]
        for w in rd.weyl_elements():
            assert len(w.word) == len(rd.inversions(w))


def test_braid_orders(data):
    for key in RANK2 + [("A", 3)]:
        rd = data[key]
        orders = {0: 2, 1: 3, 2: 4, 3: 6}
        for i in range(rd.rank):
            for j in range(i + 1, rd.rank):
                m = orders[rd.cartan[i][j] * rd.cartan[j][i]]
                prod = rd.weyl_mul(rd.simple_reflection(i), rd.simple_reflection(j))
                cur = rd.identity_element()
                for k in range(1, m + 1):
                    cur = rd.weyl_mul(cur, prod)
                    if cur == rd.identity_element():
                        assert k == m
                        break
                else:
                    pytest.fail(f"order of s{i}s{j} exceeds {m}")


@settings(deadline=None, max_examples=200, derandomize=True)
@given(
    key=st.sampled_from(RANK2),
    vec=st.lists(st.integers(-5, 5), min_size=1, max_size=2),
    idx=st.integers(0, 1),
)
def test_reflection_involutive(key, vec, idx):
    rd = RootDatum(*key)
    lam = tuple(vec[:rd.rank]) if len(vec) >= rd.rank else tuple(vec) + (0,) * (rd.rank - len(vec))
    i = idx % rd.rank
    s = rd.simple_reflection(i)
    assert rd.weyl_act(s, rd.weyl_act(s, lam)) == lam


def test_lattice_mode_membership():
    rd = RootDatum("A", 1, lattice_mode="simply_connected")
    # the fundamental coweight is not in the coroot lattice
    with pytest.raises(RootDatumError):
        rd.from_weight_coords((1,))
    assert rd.from_weight_coords((2,)) == (1,)
    rd_adj = RootDatum("A", 1, lattice_mode="adjoint")
    assert rd_adj.from_weight_coords((1,)) == (1,)


def test_window_sizes():
    rd = RootDatum("A", 1)
    assert len(rd.lattice_points(2)) == 5
    assert len(RootDatum("A", 2).lattice_points(1)) == 9


def test_rank_guard():
    with pytest.raises(RootDatumError):
        RootDatum("A", 5).weyl_elements()


def test_json_document(data):
    doc = data[("A", 2)].to_json()
    assert doc["type"] == "A" and doc["rank"] == 2
    assert [1, 1] in doc["positive_roots"]
    assert doc["cartan_matrix"] == [[2, -1], [-1, 2]]
