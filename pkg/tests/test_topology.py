import warnings

import pytest

from sdowling import groups, topology
from sdowling.dowling import build_dowling, build_subposet
from sdowling.errors import EmptyPosetWarning, SizeLimitExceeded
from sdowling.poset import RankedPoset
from sdowling.topology import (
    SimplicialComplex,
    certify_wedge,
    homology,
    order_complex,
    smith_invariants,
)

Z2 = groups.cyclic_group(2)
Z4 = groups.cyclic_group(4)


def test_order_complex_of_a_chain_is_a_simplex():
    p = RankedPoset(list("abcd"), [(0, 1), (1, 2), (2, 3)], [0, 1, 2, 3],
                    bottom=0, top=3)
    cx = order_complex(p, strip_bounds=True)
    assert cx.face_counts() == [2, 1]
    assert cx.euler_characteristic() == 1
    full = order_complex(p, strip_bounds=False)
    assert full.face_counts() == [4, 6, 4, 1]


def test_order_complex_empty_warns():
    p = RankedPoset(["a", "b"], [(0, 1)], [0, 1], bottom=0, top=1)
    with pytest.warns(EmptyPosetWarning):
        cx = order_complex(p)
    assert cx.faces == []


def test_order_complex_face_cap():
    action = groups.trivial_action(Z2, 2)
    poset = build_dowling(3, action)
    with pytest.raises(SizeLimitExceeded):
        order_complex(poset, max_faces=5)


def test_smith_invariants_known_matrices():
    # diag(2, 6) stays put
    assert smith_invariants({(0, 0): 2, (1, 1): 6}, 2, 2) == [2, 6]
    # a unimodular 2x2
    assert smith_invariants({(0, 0): 1, (0, 1): 1, (1, 0): 0, (1, 1): 1}, 2, 2) == [1, 1]
    # [[2,0],[0,3]] has SNF diag(1,6)
    assert smith_invariants({(0, 0): 2, (1, 1): 3}, 2, 2) == [1, 6]
    assert smith_invariants({}, 3, 3) == []


def test_homology_circle_and_sphere():
    # triangle boundary = S^1
    circle = SimplicialComplex(
        vertices=[0, 1, 2],
        faces=[[(0,), (1,), (2,)], [(0, 1), (0, 2), (1, 2)]],
    )
    prof = homology(circle)
    assert prof.reduced_betti == [0, 1]
    assert prof.torsion == [[], []]
    # boundary of a tetrahedron = S^2
    verts = [(i,) for i in range(4)]
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    tris = [(i, j, k) for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)]
    sphere = SimplicialComplex(vertices=list(range(4)), faces=[verts, edges, tris])
    prof = homology(sphere)
    assert prof.reduced_betti == [0, 0, 1]


def test_homology_projective_plane_torsion():
    # minimal 6-vertex triangulation of RP^2
    tris = [
        (0, 1, 2), (0, 2, 3), (0, 1, 5), (0, 4, 5), (0, 3, 4),
        (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
    ]
    verts = sorted({(v,) for t in tris for v in t})
    edges = sorted({(t[i], t[j]) for t in tris for i in range(3) for j in range(i + 1, 3)})
    cx = SimplicialComplex(vertices=list(range(6)), faces=[verts, edges, list(tris)])
    assert cx.euler_characteristic() == 1
    prof = homology(cx)
    assert prof.reduced_betti == [0, 0, 0]
    assert prof.torsion[1] == [2]


def test_counterexample_homology_profiles():
    swap2 = groups.action_from_permutations(Z2, [[0, 1], [1, 0]])
    swap4 = groups.action_from_permutations(Z4, [[0, 1], [1, 0], [0, 1], [1, 0]])
    h2 = homology(order_complex(build_subposet(2, swap2, [])))
    assert h2.reduced_betti == [1, 0]
    h4 = homology(order_complex(build_subposet(2, swap4, [])))
    assert h4.reduced_betti == [1, 2]


def test_certify_wedge_verdicts():
    action = groups.trivial_action(Z2, 2)
    poset = build_dowling(2, action)
    good = certify_wedge(poset, 1, 3)
    assert good.passed
    assert good.to_json()["verdict"] == "homology-consistent"
    bad = certify_wedge(poset, 1, 4)
    assert not bad.passed
    assert bad.to_json()["verdict"] == "mismatch"
    swap4 = groups.action_from_permutations(Z4, [[0, 1], [1, 0], [0, 1], [1, 0]])
    cert = certify_wedge(build_subposet(2, swap4, []), 0, 1)
    assert not cert.passed


def test_certify_wedge_empty_proper_part():
    trivial = groups.trivial_action(groups.trivial_group(), 0)
    poset = build_dowling(1, trivial)
    from sdowling.dowling import adjoin_top

    phat = adjoin_top(poset)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        cert = certify_wedge(phat, 0, 0)
    assert cert.profile.empty
    assert cert.passed
