"""Automorphisms, flag orbits and the quotient pregraphs built from them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mapsym.errors import InputError
from mapsym.flagsys import (
    EDGE_GENERATORS,
    FACE_GENERATORS,
    VERTEX_GENERATORS,
    FlagSystem,
    OrbitPartition,
    Permutation,
    extend_isomorphism,
    orbits_under,
    partition_from_permutations,
    require_valid,
)
from mapsym.pregraph import Pregraph, components, delete_colour

VERTEX = "vertex"
FACE = "face"


@dataclass(frozen=True)
class AutomorphismGroup:
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, perm):
        return tuple(perm) in set(self.elements)


@dataclass(frozen=True)
class CharacteristicSystem:
    cycle_length: int
    first_colour: int
    second_colour: int

    def as_tuple(self):
        return (self.cycle_length, self.first_colour, self.second_colour)

    def __str__(self):
        return f"({self.cycle_length},k{self.first_colour},k{self.second_colour})"


def _local_profile(fs: FlagSystem):
    # Automorphisms preserve the degree and face size at every flag.
    v = orbits_under(fs, VERTEX_GENERATORS)
    f = orbits_under(fs, FACE_GENERATORS)
    vs = [len(m) for m in v.orbit_members]
    fsz = [len(m) for m in f.orbit_members]
    return [(vs[v.orbit_of[i]], fsz[f.orbit_of[i]]) for i in range(fs.n_flags)]


@lru_cache(maxsize=64)
def automorphisms(fs: FlagSystem) -> AutomorphismGroup:
    """All flag permutations commuting with s0, s1, s2.

    Anchors at flag 0 and tries every image, propagating along the
    involutions; the result is sorted by the image of flag 0.
    """
    require_valid(fs)
    profile = _local_profile(fs)
    found = []
    for t in range(fs.n_flags):
        if profile[t] != profile[0]:
            continue
        perm = extend_isomorphism(fs, fs, 0, t)
        if perm is not None:
            found.append(perm)
    return AutomorphismGroup(tuple(found))


def flag_orbits(fs: FlagSystem) -> OrbitPartition:
    group = automorphisms(fs)
    return partition_from_permutations(fs.n_flags, group.elements)


def orbit_count(fs: FlagSystem) -> int:
    return flag_orbits(fs).orbit_count


def quotient(fs: FlagSystem, partition: OrbitPartition, colours=(0, 1, 2),
             flags=None) -> Pregraph:
    """Pregraph of the flag graph with respect to ``partition``.

    Restricted to ``flags`` when given.  An adjacency that stays inside one
    class is recorded as a semi-edge.
    """
    if flags is None:
        flags = range(fs.n_flags)
    flags = list(flags)
    of = partition.orbit_of
    verts = {of[x] for x in flags}
    edges, semi = set(), set()
    for x in flags:
        a = of[x]
        for c in colours:
            b = of[fs.s(c)[x]]
            if a == b:
                semi.add((a, c))
            else:
                edges.add((min(a, b), max(a, b), c))
    return Pregraph(verts, edges, semi)


def symmetry_type_graph(fs: FlagSystem) -> Pregraph:
    return quotient(fs, flag_orbits(fs))


def colour_deleted(fs: FlagSystem, removed_colour: int) -> Pregraph:
    """``T0`` for colour 0, ``T2`` for colour 2."""
    if removed_colour not in (0, 1, 2):
        raise InputError(f"colour must be 0, 1 or 2, got {removed_colour!r}")
    return delete_colour(symmetry_type_graph(fs), removed_colour)


def _containing_component(p: Pregraph, vertex) -> Pregraph:
    for comp in components(p):
        if vertex in comp.vertices:
            return comp
    raise AssertionError("vertex not in pregraph")


def _cycle_type_graph(fs, generators, removed, element):
    require_valid(fs)
    cells = orbits_under(fs, generators)
    if not 0 <= element < cells.orbit_count:
        raise InputError(f"no element with id {element}")
    cycle = cells.orbit_members[element]
    orbits = flag_orbits(fs)
    q = quotient(fs, orbits, colours=generators, flags=cycle)
    comp = _containing_component(colour_deleted(fs, removed), orbits.orbit_of[cycle[0]])
    return q, comp


def vertex_type_graph(fs: FlagSystem, vertex: int):
    """Quotient of the cycle around ``vertex`` and the ``T0`` component holding it."""
    return _cycle_type_graph(fs, VERTEX_GENERATORS, 0, vertex)


def face_type_graph(fs: FlagSystem, face: int):
    """Quotient of the cycle around ``face`` and the ``T2`` component holding it."""
    return _cycle_type_graph(fs, FACE_GENERATORS, 2, face)


def edge_orbit_sizes(fs: FlagSystem) -> tuple[int, ...]:
    return orbits_under(fs, EDGE_GENERATORS).sizes


def characteristic_system(fs: FlagSystem, kind: str, element: int) -> CharacteristicSystem:
    """``(2m, 1, 2)`` for a vertex of degree m, ``(2m, 0, 1)`` for a face of size m."""
    require_valid(fs)
    if kind == VERTEX:
        gens = VERTEX_GENERATORS
    elif kind == FACE:
        gens = FACE_GENERATORS
    else:
        raise InputError(f"kind must be 'vertex' or 'face', got {kind!r}")
    cells = orbits_under(fs, gens)
    if not 0 <= element < cells.orbit_count:
        raise InputError(f"no {kind} with id {element}")
    return CharacteristicSystem(len(cells.orbit_members[element]), *gens)


@dataclass(frozen=True)
class ElementType:
    """One vertex (or face) of the map with its type graph data."""

    element: int
    type_id: str | None
    measure: int  # degree of a vertex, size of a face
    characteristic: CharacteristicSystem
    component: tuple[int, ...]  # flag-orbit ids of the containing T0/T2 component


@dataclass(frozen=True)
class ElementTypeAssignment:
    vertices: tuple[ElementType, ...]
    faces: tuple[ElementType, ...]


def element_types(fs: FlagSystem) -> ElementTypeAssignment:
    """Type graph id, degree/size and characteristic system of every vertex and face.

    The type id is ``None`` when the component matches none of the eight
    shapes (only possible for maps with more than four flag orbits).
    """
    from mapsym.catalog import shape_id_or_none

    require_valid(fs)
    orbits = flag_orbits(fs)
    out = []
    for kind, gens, removed in ((VERTEX, VERTEX_GENERATORS, 0), (FACE, FACE_GENERATORS, 2)):
        cells = orbits_under(fs, gens)
        comps = components(colour_deleted(fs, removed))
        comp_of = {}
        for comp in comps:
            for v in comp.vertices:
                comp_of[v] = comp
        ids = {comp.vertices: shape_id_or_none(comp) for comp in comps}
        records = []
        for e, members in enumerate(cells.orbit_members):
            comp = comp_of[orbits.orbit_of[members[0]]]
            records.append(ElementType(
                element=e,
                type_id=ids[comp.vertices],
                measure=len(members) // 2,
                characteristic=CharacteristicSystem(len(members), *gens),
                component=comp.vertices,
            ))
        out.append(tuple(records))
    return ElementTypeAssignment(*out)
