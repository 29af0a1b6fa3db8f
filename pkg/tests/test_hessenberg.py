"""Fixed components: Borel and Hessenberg root sets, dimensions, pavings."""

import pytest

from weylkit import hessenberg
from weylkit.rootdata import RootDatum

RANK2 = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]


@pytest.fixture(scope="module")
def a1():
    return RootDatum("A", 1)


@pytest.fixture(scope="module")
def a2():
    return RootDatum("A", 2)


@pytest.fixture(scope="module")
def gl3():
    return RootDatum("A", 2, lattice_mode="adjoint")


def test_borel_at_zero_is_positive_system(a2):
    assert set(hessenberg.borel_roots(a2, (0, 0))) == set(a2.positive_roots)


def test_borel_examples(a1, a2):
    assert hessenberg.borel_roots(a1, (1,)) == ((-1,),)
    assert set(hessenberg.borel_roots(a2, (1, 0))) == {(0, 1), (-1, 0), (-1, -1)}


def test_hessenberg_roots_examples(a1, a2):
    assert hessenberg.hessenberg_roots(a1, (1,)) == ((-1,),)
    # lambda = 0: all roots
    assert set(hessenberg.hessenberg_roots(a2, (0, 0))) == set(a2.all_roots())


def test_dim_examples(a2, gl3):
    assert hessenberg.hessenberg_dim(a2, (0, 0)) == len(a2.positive_roots)
    lam = hessenberg.gl_coweight(gl3, (-1, 0, 1))
    assert lam == (1, 1)
    assert hessenberg.hessenberg_dim(gl3, lam) == 2


def test_gl3_blowup_surface(gl3):
    lam = hessenberg.gl_coweight(gl3, (-1, 0, 1))
    datum = hessenberg.hessenberg_datum(gl3, lam)
    assert datum.dim == 2
    assert datum.betti() == (1, 4, 1)
    assert not datum.isolated
    # exactly one root is cut out of the full root system
    missing = set(gl3.all_roots()) - set(datum.hess_roots)
    assert missing == {(1, 1)}
    assert sorted(datum.cells) == [0, 1, 1, 1, 1, 2]


def test_isolated_examples(a1, a2):
    assert hessenberg.is_isolated(a1, (1,))
    assert not hessenberg.is_isolated(a2, (0, 0))
    datum = hessenberg.hessenberg_datum(a1, (1,))
    assert datum.dim == 0 and datum.betti() == (2,)


def test_flag_variety_poincare(a2):
    assert hessenberg.poincare_polynomial(a2, (0, 0)) == [1, 2, 2, 1]
    cells = hessenberg.cell_dimensions(a2, (0, 0))
    for w, c in cells.items():
        assert c == len(w.word)


def test_gl_coweight_requires_type_a(gl3):
    with pytest.raises(ValueError):
        hessenberg.gl_coweight(gl3, (1, 2))
    b2 = RootDatum("B", 2, lattice_mode="adjoint")
    with pytest.raises(ValueError):
        hessenberg.gl_coweight(b2, (0, 0, 0))


def test_fixed_point_count_is_W_and_palindromic():
    for t, r in RANK2:
        rd = RootDatum(t, r)
        nw = len(rd.weyl_elements())
        for lam in rd.lattice_points(2):
            cells = hessenberg.cell_dimensions(rd, lam)
            assert len(cells) == nw
            p = hessenberg.poincare_polynomial(rd, lam)
            assert sum(p) == nw
            assert p == p[::-1]  # smooth projective: Poincare duality
            assert max(cells.values()) == hessenberg.hessenberg_dim(rd, lam)


def test_borel_submodule_closure():
    for t, r in RANK2:
        rd = RootDatum(t, r)
        roots = set(rd.all_roots())
        for lam in rd.lattice_points(2):
            b = set(hessenberg.borel_roots(rd, lam))
            h = set(hessenberg.hessenberg_roots(rd, lam))
            assert b <= h
            for a in h:
                for beta in b:
                    s = tuple(x + y for x, y in zip(a, beta))
                    if s in roots:
                        assert s in h, (t, r, lam, a, beta)


def test_datum_json_shape(a2):
    doc = hessenberg.hessenberg_datum(a2, (0, 0)).to_json()
    assert doc["dim"] == 3 and doc["isolated"] is False
    assert doc["betti"] == [1, 2, 2, 1]
