from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from crnet.arrangement import enumerate_sign_cells
from crnet.cones import sign_vector_feasible
from crnet.linalg import dot, sign

from conftest import F, nonzero_vectors


def _signs(cells):
    return {c.signs for c in cells}


def brute_force_signs(dirs, d):
    """Every realizable nonzero sign vector, one LP per candidate."""
    out = set()
    for sig in product((-1, 0, 1), repeat=len(dirs)):
        if sign_vector_feasible(dirs, sig) is not None:
            out.add(sig)
    return out


def test_single_direction_in_one_dimension():
    cells = enumerate_sign_cells([F(1)])
    assert _signs(cells) == {(-1,), (1,)}
    assert {c.witness for c in cells} == {F(-1), F(1)}


def test_two_axes():
    cells = enumerate_sign_cells([F(1, 0), F(0, 1)])
    assert len(cells) == 8
    assert (0, 0) not in _signs(cells)


def test_parallel_directions_share_signs():
    cells = enumerate_sign_cells([F(1, 0), F(2, 0)])
    # three distinct sign vectors: both negative, both zero, both positive
    assert _signs(cells) == {(-1, -1), (0, 0), (1, 1)}


def test_antiparallel_directions():
    cells = enumerate_sign_cells([F(1, 1), F(-2, -2), F(0, 1)])
    for c in cells:
        assert c.signs[0] == -c.signs[1]
        assert c.check([F(1, 1), F(-2, -2), F(0, 1)])


def test_zero_cell_when_not_spanning():
    assert (0,) in _signs(enumerate_sign_cells([F(1, 0, 0)]))


def test_errors():
    with pytest.raises(ValueError):
        enumerate_sign_cells([])
    with pytest.raises(ValueError):
        enumerate_sign_cells([F(0, 0)])
    with pytest.raises(ValueError):
        enumerate_sign_cells([F(1, 0), F(1)])


def test_empty_set_with_dimension():
    assert _signs(enumerate_sign_cells([], dim=2)) == {()}


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.lists(nonzero_vectors(d, -2, 2), min_size=1, max_size=4)))
def test_matches_lp_brute_force(dirs):
    d = len(dirs[0])
    cells = enumerate_sign_cells(dirs)
    sigs = [c.signs for c in cells]
    assert len(sigs) == len(set(sigs))
    for c in cells:
        assert any(c.witness)
        assert c.check(dirs)
    assert set(sigs) == brute_force_signs(dirs, d)


def _angular_signs(dirs):
    """2D cells from the critical normals and the bisectors between them."""
    normals = []
    for u in dirs:
        normals += [F(-u[1], u[0]), F(u[1], -u[0])]
    probes = list(normals)
    for a in normals:
        for b in normals:
            s = (a[0] + b[0], a[1] + b[1])
            if any(s):
                probes.append(F(*s))
    # every open sector between two consecutive normals contains such a sum,
    # except when the sector is a half plane, which the axis probes cover
    probes += [F(1, 0), F(0, 1), F(-1, 0), F(0, -1)]
    for a in normals:
        probes.append(F(-a[1], a[0]))
    return {tuple(sign(dot(w, u)) for u in dirs) for w in probes}


@settings(max_examples=150, deadline=None)
@given(st.lists(nonzero_vectors(2), min_size=1, max_size=5))
def test_matches_angular_sweep(dirs):
    assert _signs(enumerate_sign_cells(dirs)) == _angular_signs(dirs)
