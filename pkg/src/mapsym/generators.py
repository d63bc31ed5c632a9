"""Concrete maps: polyhedra from face cycles, families, operations, small census."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable

from mapsym.errors import ConstructionError, InputError, UnsupportedSizeError
from mapsym.flagsys import (
    EDGE_GENERATORS,
    FACE_GENERATORS,
    VERTEX_GENERATORS,
    FlagSystem,
    canonical_form,
    dual,
    orbits_under,
    petrie_dual,
    require_valid,
    validate,
)

MAX_CENSUS_FLAGS = 16


@dataclass(frozen=True)
class PolyhedronSpec:
    """A map given by the boundary cycle of every face."""

    faces: tuple[tuple[Hashable, ...], ...]

    def __init__(self, faces):
        object.__setattr__(self, "faces", tuple(tuple(f) for f in faces))

    @property
    def vertices(self) -> tuple:
        seen = {}
        for face in self.faces:
            for v in face:
                seen.setdefault(v, None)
        return tuple(seen)

    @property
    def edges(self) -> frozenset:
        return frozenset(frozenset((f[i], f[(i + 1) % len(f)]))
                         for f in self.faces for i in range(len(f)))


def from_face_cycles(spec) -> FlagSystem:
    """Flag system of the map whose faces have the given boundary cycles.

    A flag is a (vertex, edge, face) corner: face ``F``, boundary position
    ``i`` (the edge from ``F[i]`` to ``F[i+1]``) and which end of that edge.
    Every edge must lie on exactly two face sides.
    """
    if not isinstance(spec, PolyhedronSpec):
        spec = PolyhedronSpec(spec)
    faces = spec.faces
    if not faces:
        raise ConstructionError("no faces given")
    occurrences = {}
    base = []
    n = 0
    for fi, face in enumerate(faces):
        if len(face) < 3:
            raise ConstructionError(f"face {fi} has fewer than 3 sides")
        base.append(n)
        for i, u in enumerate(face):
            w = face[(i + 1) % len(face)]
            if u == w:
                raise ConstructionError(f"face {fi} repeats vertex {u!r} consecutively")
            occurrences.setdefault(frozenset((u, w)), []).append((fi, i))
        n += 2 * len(face)
    for key, occ in occurrences.items():
        if len(occ) != 2:
            u, w = sorted(key, key=repr)
            raise ConstructionError(
                f"edge {u!r}-{w!r} lies on {len(occ)} face sides, expected 2")

    def flag(fi, i, end):
        return base[fi] + 2 * (i % len(faces[fi])) + end

    def vertex_at(fi, i, end):
        face = faces[fi]
        return face[(i + end) % len(face)]

    s0, s1, s2 = [0] * n, [0] * n, [0] * n
    for fi, face in enumerate(faces):
        for i in range(len(face)):
            for end in (0, 1):
                x = flag(fi, i, end)
                s0[x] = flag(fi, i, 1 - end)
                s1[x] = flag(fi, i - 1, 1) if end == 0 else flag(fi, i + 1, 0)
                key = frozenset((face[i], face[(i + 1) % len(face)]))
                a, b = occurrences[key]
                gj, j = b if a == (fi, i) else a
                v = vertex_at(fi, i, end)
                s2[x] = flag(gj, j, 0) if vertex_at(gj, j, 0) == v else flag(gj, j, 1)
    fs = FlagSystem(s0, s1, s2)
    report = validate(fs)
    if not report.ok:
        raise ConstructionError("face cycles do not form a map: " + "; ".join(report.violations))
    n_vertices = orbits_under(fs, VERTEX_GENERATORS).orbit_count
    if n_vertices != len(spec.vertices):
        raise ConstructionError("the faces around some vertex do not close up into one disc")
    return fs


def tetrahedron() -> FlagSystem:
    return from_face_cycles([(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)])


def cube() -> FlagSystem:
    return from_face_cycles([(0, 1, 3, 2), (4, 6, 7, 5), (0, 4, 5, 1),
                             (2, 3, 7, 6), (0, 2, 6, 4), (1, 5, 7, 3)])


def octahedron() -> FlagSystem:
    # 0/1 = +-x, 2/3 = +-y, 4/5 = +-z
    return from_face_cycles([(0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4),
                             (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5)])


def icosahedron() -> FlagSystem:
    top, bottom = 0, 11
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(top, up[i], up[j]), (up[i], lo[i], up[j]),
                  (up[j], lo[i], lo[j]), (bottom, lo[j], lo[i])]
    return from_face_cycles(faces)


def dodecahedron() -> FlagSystem:
    return dual(icosahedron())


PLATONIC = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
}


def platonic(name: str) -> FlagSystem:
    try:
        return PLATONIC[name]()
    except KeyError:
        raise InputError(f"unknown solid {name!r}; choose from {', '.join(PLATONIC)}") from None


def _check_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}, got {value!r}")


def prism(n: int) -> FlagSystem:
    _check_int("n", n, 3)
    top = list(range(n))
    bot = [n + i for i in range(n)]
    faces = [tuple(top), tuple(reversed(bot))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((top[j], top[i], bot[i], bot[j]))
    return from_face_cycles(faces)


def antiprism(n: int) -> FlagSystem:
    _check_int("n", n, 3)
    top = list(range(n))
    bot = [n + i for i in range(n)]
    faces = [tuple(top), tuple(reversed(bot))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((top[j], top[i], bot[i]))
        faces.append((top[j], bot[i], bot[j]))
    return from_face_cycles(faces)


def torus_grid(rows: int, cols: int) -> FlagSystem:
    """The rows x cols square grid on the torus (rows, cols >= 3)."""
    _check_int("rows", rows, 3)
    _check_int("cols", cols, 3)

    def v(i, j):
        return (i % rows) * cols + (j % cols)

    faces = [(v(i, j), v(i, j + 1), v(i + 1, j + 1), v(i + 1, j))
             for i in range(rows) for j in range(cols)]
    return from_face_cycles(faces)


def _cycle_labels(fs, start, step, length, label):
    out = []
    x = start
    for _ in range(length):
        out.append(label[x])
        x = fs.s(step[1])[fs.s(step[0])[x]]
    return tuple(out)


def medial(fs: FlagSystem) -> FlagSystem:
    """Vertices at the edges of ``fs``; one face per vertex and per face of ``fs``."""
    require_valid(fs, strict=True)
    edge_of = orbits_under(fs, EDGE_GENERATORS).orbit_of
    faces = []
    for gens in (FACE_GENERATORS, VERTEX_GENERATORS):
        for members in orbits_under(fs, gens):
            faces.append(_cycle_labels(fs, members[0], gens, len(members) // 2, edge_of))
    return from_face_cycles(faces)


def truncation(fs: FlagSystem) -> FlagSystem:
    """Cut every vertex off: new vertices are the (vertex, edge) incidences."""
    require_valid(fs, strict=True)
    dart_of = orbits_under(fs, (2,)).orbit_of
    faces = []
    for members in orbits_under(fs, FACE_GENERATORS):
        x = members[0]
        cycle = []
        for i in range(len(members)):
            cycle.append(dart_of[x])
            x = fs.s(i % 2)[x]  # alternate s0, s1 along the face
        faces.append(tuple(cycle))
    for members in orbits_under(fs, VERTEX_GENERATORS):
        faces.append(_cycle_labels(fs, members[0], VERTEX_GENERATORS,
                                   len(members) // 2, dart_of))
    return from_face_cycles(faces)


def _standard_edge_involutions(n):
    s0, s2 = [0] * n, [0] * n
    for b in range(0, n, 4):
        s0[b], s0[b + 1], s0[b + 2], s0[b + 3] = b + 1, b, b + 3, b + 2
        s2[b], s2[b + 1], s2[b + 2], s2[b + 3] = b + 3, b + 2, b + 1, b
    return tuple(s0), tuple(s2)


def enumerate_flag_systems(n_flags: int) -> list[FlagSystem]:
    """Every valid flag system on ``n_flags`` flags, one per isomorphism class.

    Any valid system can be relabelled so that ``s0`` and ``s2`` act in the
    standard way on consecutive blocks of four flags, so only ``s1`` is
    searched.  Blocks untouched by the partial ``s1`` are interchangeable,
    which prunes the search.  Results are canonical forms in sorted order.
    """
    _check_int("n_flags", n_flags, 4)
    if n_flags % 4:
        raise InputError("n_flags must be divisible by 4")
    if n_flags > MAX_CENSUS_FLAGS:
        raise UnsupportedSizeError(f"census is limited to {MAX_CENSUS_FLAGS} flags")
    n = n_flags
    s0, s2 = _standard_edge_involutions(n)
    s1 = [-1] * n
    found = set()

    def touched(block):
        return any(s1[x] != -1 for x in range(4 * block, 4 * block + 4))

    def rec():
        try:
            f = s1.index(-1)
        except ValueError:
            fs = FlagSystem(s0, tuple(s1), s2)
            if validate(fs).ok:
                found.add(canonical_form(fs))
            return
        fresh_used = False
        for g in range(f + 1, n):
            if s1[g] != -1:
                continue
            block = g // 4
            if block != f // 4 and not touched(block):
                if fresh_used or g % 4:
                    continue
                fresh_used = True
            s1[f], s1[g] = g, f
            rec()
            s1[f] = s1[g] = -1

    rec()
    return [FlagSystem(*code) for code in sorted(found)]


def census_summary(n_flags: int) -> Counter:
    """How many census maps have each flag-orbit count."""
    from mapsym.symmetry import orbit_count

    return Counter(orbit_count(fs) for fs in enumerate_flag_systems(n_flags))


def generated_maps(max_torus: int = 6) -> dict[str, FlagSystem]:
    """The named test corpus.

    Solids, prisms and antiprisms 3..8 and torus grids, with the medial and
    truncation of each; the dual of everything so far; double medials of the
    three smallest solids; and every dual/Petrie image of the antiprisms and
    double medials.
    Duplicates (e.g. antiprism(3) and the octahedron) are kept under both names.
    """
    base = {name: make() for name, make in PLATONIC.items()}
    for n in range(3, 9):
        base[f"prism({n})"] = prism(n)
        base[f"antiprism({n})"] = antiprism(n)
    for r in range(3, max_torus + 1):
        for c in range(r, max_torus + 1):
            base[f"torus_grid({r},{c})"] = torus_grid(r, c)
    out = dict(base)
    for name, fs in base.items():
        out[f"medial({name})"] = medial(fs)
        out[f"truncation({name})"] = truncation(fs)
    for name, fs in list(out.items()):
        out[f"dual({name})"] = dual(fs)
    seeds = {name: fs for name, fs in out.items() if name.startswith("antiprism")}
    for name in ("tetrahedron", "cube", "octahedron"):
        seeds[f"medial(medial({name}))"] = medial(out[f"medial({name})"])
    for name, fs in seeds.items():
        # the six images under the group generated by duality and Petrie duality
        out[name] = fs
        out[f"petrie({name})"] = petrie_dual(fs)
        out[f"dual(petrie({name}))"] = dual(petrie_dual(fs))
        out[f"petrie(dual({name}))"] = petrie_dual(dual(fs))
        out[f"dual(petrie(dual({name})))"] = dual(petrie_dual(dual(fs)))
        out[f"dual({name})"] = dual(fs)
    return out
