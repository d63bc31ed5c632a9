import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mapsym.errors import InputError, PreconditionError
from mapsym.flagsys import (
    EDGE_GENERATORS,
    FACE_GENERATORS,
    VERTEX_GENERATORS,
    FlagSystem,
    canonical_form,
    compose,
    dual,
    elements,
    euler_characteristic,
    find_isomorphism,
    identity,
    inverse,
    orbits_under,
    petrie_dual,
    require_valid,
    validate,
)
from mapsym.generators import antiprism, cube, octahedron, tetrahedron, torus_grid


def disjoint_union(a, b):
    n = a.n_flags
    return FlagSystem(*(tuple(a.s(j)) + tuple(x + n for x in b.s(j)) for j in (0, 1, 2)))


def test_tetrahedron_is_valid():
    fs = tetrahedron()
    assert fs.n_flags == 24
    assert validate(fs).violations == ()
    assert validate(fs, strict=True).ok


def test_identity_s1_reports_fixed_points():
    fs = tetrahedron()
    bad = FlagSystem(fs.s0, identity(24), fs.s2)
    assert "s1 has fixed points" in validate(bad).violations


def test_disjoint_union_not_transitive():
    fs = tetrahedron()
    report = validate(disjoint_union(fs, fs))
    assert report.violations == ("not transitive",)


def test_other_violations():
    fs = tetrahedron()
    s0 = list(fs.s0)
    s0[0], s0[1], s0[2] = s0[1], s0[2], s0[0]  # a 3-cycle image is no longer an involution
    assert "s0 is not an involution" in validate(FlagSystem(s0, fs.s1, fs.s2)).violations
    swapped = FlagSystem(fs.s0, fs.s2, fs.s1)
    assert "s0 and s2 do not commute" in validate(swapped).violations
    same = FlagSystem(fs.s0, fs.s1, fs.s0)
    assert "s0s2 has fixed points" in validate(same).violations


def test_flag_count_must_be_multiple_of_four():
    fs = FlagSystem((1, 0), (1, 0), (1, 0))
    assert "flag count is not divisible by 4" in validate(fs).violations


def test_malformed_lengths_are_input_errors():
    with pytest.raises(InputError):
        FlagSystem((1, 0), (1, 0), (0,))
    with pytest.raises(InputError):
        FlagSystem((0, 0), (1, 0), (1, 0))
    with pytest.raises(InputError):
        FlagSystem((), (), ())


def test_tetrahedron_orbits():
    fs = tetrahedron()
    assert orbits_under(fs, EDGE_GENERATORS).sizes == (4,) * 6
    assert orbits_under(fs, VERTEX_GENERATORS).sizes == (6,) * 4
    assert orbits_under(fs, FACE_GENERATORS).sizes == (6,) * 4


def test_empty_generator_set_gives_singletons():
    part = orbits_under(tetrahedron(), ())
    assert part.orbit_count == 24
    assert part.orbit_of == tuple(range(24))


def test_orbit_partition_invariants():
    part = orbits_under(cube(), VERTEX_GENERATORS)
    flat = sorted(x for m in part for x in m)
    assert flat == list(range(48))
    for oid, members in enumerate(part.orbit_members):
        assert all(part.orbit_of[x] == oid for x in members)
    # ids ordered by smallest member
    assert [m[0] for m in part.orbit_members] == sorted(m[0] for m in part.orbit_members)


def test_element_counts():
    assert elements(cube()).counts == (8, 12, 6)
    assert elements(antiprism(4)).counts == (8, 16, 10)
    el = elements(tetrahedron())
    assert all(el.degree(v) == 3 for v in range(4))
    assert all(el.face_size(f) == 3 for f in range(4))


def test_elements_rejects_invalid():
    fs = tetrahedron()
    with pytest.raises(PreconditionError):
        elements(disjoint_union(fs, fs))


def test_dual_of_cube_is_octahedron():
    d = dual(cube())
    el = elements(d)
    assert el.counts == (6, 12, 8)
    assert {el.degree(v) for v in range(6)} == {4}
    assert {el.face_size(f) for f in range(8)} == {3}
    assert find_isomorphism(d, octahedron()) is not None


def test_tetrahedron_self_dual():
    assert find_isomorphism(dual(tetrahedron()), tetrahedron()) is not None
    assert find_isomorphism(cube(), octahedron()) is None


def test_dual_is_involution():
    fs = antiprism(5)
    assert dual(dual(fs)) == fs


def test_petrie_dual_is_involution_and_valid():
    for fs in (cube(), antiprism(4), torus_grid(3, 4)):
        p = petrie_dual(fs)
        assert validate(p).ok
        assert petrie_dual(p) == fs
        # Petrie polygons of the cube are hexagons
    assert set(orbits_under(petrie_dual(cube()), FACE_GENERATORS).sizes) == {12}


def test_euler_characteristic():
    assert euler_characteristic(cube()) == 2
    assert euler_characteristic(antiprism(4)) == 2
    assert euler_characteristic(torus_grid(3, 3)) == 0
    assert elements(torus_grid(3, 3)).counts == (9, 18, 9)


def test_compose_and_inverse():
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert compose(p, q) == (2, 1, 0)  # p first, then q
    assert compose(p, inverse(p)) == identity(3)


def test_json_round_trip():
    fs = cube()
    text = fs.to_json()
    assert list(json.loads(text)) == sorted(json.loads(text))
    assert FlagSystem.from_json(text) == fs


@pytest.mark.parametrize("payload, fragment", [
    ("not json", "invalid JSON"),
    ("[1, 2]", "must be an object"),
    ('{"flags": 2, "s0": [1, 0], "s1": [1, 0]}', "missing"),
    ('{"flags": 2, "s0": [1, 0], "s1": [1, 0], "s2": [1, 0], "x": 1}', "unknown"),
    ('{"flags": 3, "s0": [1, 0], "s1": [1, 0], "s2": [1, 0]}', "length"),
    ('{"flags": 2, "s0": [1, "0"], "s1": [1, 0], "s2": [1, 0]}', "list of integers"),
    ('{"flags": 0, "s0": [], "s1": [], "s2": []}', "positive"),
])
def test_json_rejections(payload, fragment):
    with pytest.raises(InputError, match=fragment):
        FlagSystem.from_json(payload)


def test_require_valid_strict():
    fs = FlagSystem(*_digon_sphere())
    require_valid(fs)
    with pytest.raises(PreconditionError, match="degree less than 3"):
        require_valid(fs, strict=True)


def _digon_sphere():
    # two triangles glued along their boundary: valid map, degree-2 vertices
    from mapsym.generators import from_face_cycles

    fs = from_face_cycles([(0, 1, 2), (0, 2, 1)])
    return fs.s0, fs.s1, fs.s2


MAPS = [tetrahedron(), cube(), antiprism(4), torus_grid(3, 4)]


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_relabelling_preserves_everything(data):
    fs = data.draw(st.sampled_from(MAPS))
    perm = data.draw(st.permutations(range(fs.n_flags)))
    g = fs.relabel(perm)
    assert validate(g).ok
    assert canonical_form(g) == canonical_form(fs)
    iso = find_isomorphism(fs, g)
    assert iso is not None
    for j in (0, 1, 2):
        assert all(iso[fs.s(j)[x]] == g.s(j)[iso[x]] for x in range(fs.n_flags))
    assert elements(g).counts == elements(fs).counts
    assert FlagSystem.from_json(g.to_json()) == g


def test_relabel_maps_flags():
    fs = cube()
    perm = list(reversed(range(48)))
    g = fs.relabel(perm)
    for j in (0, 1, 2):
        for x in range(48):
            assert g.s(j)[perm[x]] == perm[fs.s(j)[x]]


def test_canonical_form_separates():
    assert canonical_form(cube()) != canonical_form(octahedron())
