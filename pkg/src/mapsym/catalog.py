"""The eight two-colour type shapes, the 22 four-orbit symmetry type graphs,
and the degree / face-size tables that go with them.

Colour convention for the two-colour shapes: every vertex type graph uses
colours 1 and 2, every face type graph colours 1 and 0.  Colour 1 is shared
and plays the same role in both families, so ``f_x`` is ``v_x`` with colour 2
renamed to 0 and duality maps ``v_x`` onto ``f_x`` letter for letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from mapsym.errors import (
    CatalogConsistencyError,
    InputError,
    NotATypeGraphError,
    WrongOrbitCountError,
)
from mapsym.flagsys import FlagSystem
from mapsym.pregraph import (
    Pregraph,
    canonical_code,
    components,
    delete_colour,
    from_involutions,
    is_connected,
    petrie_dual,
)

TWO_COLOUR_IDS = ("1a", "2a", "2b", "2c", "3a", "4a", "4b", "4c")

# (vertex count, edges (u, v, role), semi-edges (v, role)); role x is colour 1.
_GENERIC_SHAPES = {
    "1a": (1, [], [(0, "x"), (0, "y")]),
    "2a": (2, [(0, 1, "y")], [(0, "x"), (1, "x")]),
    "2b": (2, [(0, 1, "x")], [(0, "y"), (1, "y")]),
    "2c": (2, [(0, 1, "x"), (0, 1, "y")], []),
    "3a": (3, [(0, 1, "y"), (1, 2, "x")], [(0, "x"), (2, "y")]),
    "4a": (4, [(0, 1, "x"), (1, 2, "y"), (2, 3, "x"), (0, 3, "y")], []),
    "4b": (4, [(0, 1, "x"), (1, 2, "y"), (2, 3, "x")], [(0, "y"), (3, "y")]),
    "4c": (4, [(0, 1, "y"), (1, 2, "x"), (2, 3, "y")], [(0, "x"), (3, "x")]),
}

# degree (or size) = multiplier * n with n >= minimum
_TABLE_ROWS = {
    "1a": (1, 3),
    "2a": (2, 2),
    "2b": (2, 2),
    "2c": (1, 3),
    "3a": (3, 1),
    "4a": (2, 2),
    "4b": (4, 1),
    "4c": (4, 1),
}

FAMILY_COLOURS = {"v": (1, 2), "f": (0, 1)}
_ROLE_COLOURS = {"v": {"x": 1, "y": 2}, "f": {"x": 1, "y": 0}}


def two_colour_shape(shape: str, family: str) -> Pregraph:
    """``two_colour_shape("2a", "v")`` is the pregraph ``v_2a``."""
    if shape not in _GENERIC_SHAPES:
        raise InputError(f"unknown shape {shape!r}")
    if family not in _ROLE_COLOURS:
        raise InputError("family must be 'v' or 'f'")
    roles = _ROLE_COLOURS[family]
    n, edges, semi = _GENERIC_SHAPES[shape]
    return Pregraph(n, [(u, v, roles[r]) for u, v, r in edges],
                    [(v, roles[r]) for v, r in semi])


def vertex_shape(shape: str) -> Pregraph:
    return two_colour_shape(shape, "v")


def face_shape(shape: str) -> Pregraph:
    return two_colour_shape(shape, "f")


@dataclass(frozen=True)
class TwoColourTypeEntry:
    """A row of the vertex table (family ``v``) or the face table (family ``f``)."""

    id: str
    family: str
    multiplier: int
    minimum: int

    @property
    def name(self) -> str:
        return f"{self.family}_{self.id}"

    @property
    def colours(self) -> tuple[int, int]:
        return FAMILY_COLOURS[self.family]

    @property
    def shape(self) -> Pregraph:
        return two_colour_shape(self.id, self.family)

    @property
    def pattern_period(self) -> int:
        """Flags per repetition of the orbit pattern along the cycle."""
        return 2 * self.multiplier

    def measure(self, n: int) -> int:
        return self.multiplier * n

    def char_length(self, n: int) -> int:
        return 2 * self.multiplier * n

    def admits(self, measure: int) -> bool:
        return measure % self.multiplier == 0 and measure // self.multiplier >= self.minimum

    def measure_formula(self) -> str:
        s = "" if self.multiplier == 1 else str(self.multiplier)
        return f"{s}n, n >= {self.minimum}"

    def characteristic_formula(self) -> str:
        a, b = self.colours
        return f"({2 * self.multiplier}n,k{a},k{b})"


def _entry(family, shape):
    if shape.startswith(("v_", "f_")):
        if shape[0] != family:
            raise InputError(f"{shape!r} is not in the {family}_ family")
        shape = shape[2:]
    if shape not in _TABLE_ROWS:
        raise InputError(f"unknown type id {shape!r}")
    s, m = _TABLE_ROWS[shape]
    return TwoColourTypeEntry(shape, family, s, m)


def table_lookup_vertex(shape: str) -> TwoColourTypeEntry:
    return _entry("v", shape)


def table_lookup_face(shape: str) -> TwoColourTypeEntry:
    return _entry("f", shape)


def table_lookup(type_id: str) -> TwoColourTypeEntry:
    """Look up a full id such as ``"v_3a"`` or ``"f_4b"``."""
    if type_id[:2] == "v_":
        return table_lookup_vertex(type_id)
    if type_id[:2] == "f_":
        return table_lookup_face(type_id)
    raise InputError(f"type id must start with 'v_' or 'f_', got {type_id!r}")


_SHAPE_BY_CODE = {
    canonical_code(two_colour_shape(s, fam)): f"{fam}_{s}"
    for fam in ("v", "f") for s in TWO_COLOUR_IDS
}


def shape_id_or_none(q: Pregraph):
    if q.n_vertices > 4:
        return None
    return _SHAPE_BY_CODE.get(canonical_code(q))


def shape_id(q: Pregraph) -> str:
    sid = shape_id_or_none(q)
    if sid is None:
        raise NotATypeGraphError(f"not one of the eight type shapes: {q!r}")
    return sid


def classify_vertex_shape(q: Pregraph) -> str:
    sid = shape_id(q)
    if not sid.startswith("v_"):
        raise NotATypeGraphError(f"{sid} is a face shape, not a vertex shape")
    return sid


def classify_face_shape(q: Pregraph) -> str:
    sid = shape_id(q)
    if not sid.startswith("f_"):
        raise NotATypeGraphError(f"{sid} is a vertex shape, not a face shape")
    return sid


def fingerprint(p: Pregraph, removed: int) -> tuple[str, ...]:
    """Sorted type ids of the components left after deleting colour ``removed``."""
    return tuple(sorted(shape_id(c) for c in components(delete_colour(p, removed))))


FOUR_ORBIT_NAMES = (
    "4_A", "4_Ad", "4_Ap", "4_B", "4_Bd", "4_Bp", "4_C", "4_Cd", "4_Cp",
    "4_D", "4_Dd", "4_Dp", "4_E", "4_Ed", "4_Ep", "4_F",
    "4_G", "4_Gd", "4_Gp", "4_H", "4_Hd", "4_Hp",
)

# (edges (u, v, colour), semi-edges (v, colour)) on vertices 0..3.
_TRANSCRIBED = {
    "4_A": ([(0, 1, 1), (2, 3, 1), (1, 2, 2)], [(0, 0), (1, 0), (2, 0), (3, 0), (0, 2), (3, 2)]),
    "4_Ad": ([(2, 3, 0), (0, 2, 1), (1, 3, 1)], [(0, 0), (1, 0), (0, 2), (1, 2), (2, 2), (3, 2)]),
    "4_Ap": ([(1, 2, 0), (0, 1, 1), (2, 3, 1), (1, 2, 2)], [(0, 0), (3, 0), (0, 2), (3, 2)]),
    "4_B": ([(2, 3, 1), (0, 2, 2), (1, 3, 2)], [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1)]),
    "4_Bd": ([(0, 1, 0), (2, 3, 0), (1, 2, 1)], [(0, 1), (3, 1), (0, 2), (1, 2), (2, 2), (3, 2)]),
    "4_Bp": ([(0, 2, 0), (1, 3, 0), (2, 3, 1), (0, 2, 2), (1, 3, 2)], [(0, 1), (1, 1)]),
    "4_C": ([(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2)], [(0, 0), (1, 0), (2, 0), (3, 0)]),
    "4_Cd": ([(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1)], [(0, 2), (1, 2), (2, 2), (3, 2)]),
    "4_Cp": ([(0, 2, 0), (1, 3, 0), (0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2)], []),
    "4_D": ([(0, 1, 0), (2, 3, 0), (1, 2, 1), (2, 3, 2)], [(0, 1), (3, 1), (0, 2), (1, 2)]),
    "4_Dd": ([(2, 3, 0), (1, 2, 1), (0, 1, 2), (2, 3, 2)], [(0, 0), (1, 0), (0, 1), (3, 1)]),
    "4_Dp": ([(2, 3, 0), (1, 2, 1), (0, 1, 2)], [(0, 0), (1, 0), (0, 1), (3, 1), (2, 2), (3, 2)]),
    "4_E": ([(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (2, 3, 2)], [(0, 2), (1, 2)]),
    "4_Ed": ([(2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 1, 2), (2, 3, 2)], [(0, 0), (1, 0)]),
    "4_Ep": ([(0, 1, 0), (0, 2, 1), (1, 3, 1), (2, 3, 2)], [(2, 0), (3, 0), (0, 2), (1, 2)]),
    "4_F": ([(0, 1, 0), (2, 3, 0), (0, 2, 2), (1, 3, 2)], [(0, 1), (1, 1), (2, 1), (3, 1)]),
    "4_G": ([(0, 1, 0), (2, 3, 0), (0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2)], []),
    "4_Gd": ([(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 2, 2), (1, 3, 2)], []),
    "4_Gp": ([(0, 3, 0), (1, 2, 0), (0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2)], []),
    "4_H": ([(0, 1, 0), (2, 3, 0), (2, 3, 1), (0, 2, 2), (1, 3, 2)], [(0, 1), (1, 1)]),
    "4_Hd": ([(0, 1, 0), (2, 3, 0), (1, 2, 1), (0, 3, 2), (1, 2, 2)], [(0, 1), (3, 1)]),
    "4_Hp": ([(0, 3, 0), (1, 2, 0), (2, 3, 1), (0, 2, 2), (1, 3, 2)], [(0, 1), (1, 1)]),
}

# Component type ids of T0 (vertex table) and T2 (face table), row by row.
TABLE_T0 = {
    "4_A": ("v_4b",),
    "4_Ad": ("v_2b", "v_2b"),
    "4_Ap": ("v_4b",),
    "4_B": ("v_4c",),
    "4_Bd": ("v_2b", "v_1a", "v_1a"),
    "4_Bp": ("v_4c",),
    "4_C": ("v_4a",),
    "4_Cd": ("v_2b", "v_2b"),
    "4_Cp": ("v_4a",),
    "4_D": ("v_3a", "v_1a"),
    "4_Dd": ("v_4c",),
    "4_Dp": ("v_3a", "v_1a"),
    "4_E": ("v_4b",),
    "4_Ed": ("v_4a",),
    "4_Ep": ("v_4b",),
    "4_F": ("v_2a", "v_2a"),
    "4_G": ("v_4a",),
    "4_Gd": ("v_2c", "v_2c"),
    "4_Gp": ("v_4a",),
    "4_H": ("v_4c",),
    "4_Hd": ("v_2c", "v_2a"),
    "4_Hp": ("v_4c",),
}

TABLE_T2 = {
    "4_A": ("f_2b", "f_2b"),
    "4_Ad": ("f_4b",),
    "4_Ap": ("f_4b",),
    "4_B": ("f_2b", "f_1a", "f_1a"),
    "4_Bd": ("f_4c",),
    "4_Bp": ("f_4c",),
    "4_C": ("f_2b", "f_2b"),
    "4_Cd": ("f_4a",),
    "4_Cp": ("f_4a",),
    "4_D": ("f_4c",),
    "4_Dd": ("f_3a", "f_1a"),
    "4_Dp": ("f_3a", "f_1a"),
    "4_E": ("f_4a",),
    "4_Ed": ("f_4b",),
    "4_Ep": ("f_4b",),
    "4_F": ("f_2a", "f_2a"),
    "4_G": ("f_2c", "f_2c"),
    "4_Gd": ("f_4a",),
    "4_Gp": ("f_4a",),
    "4_H": ("f_2c", "f_2a"),
    "4_Hd": ("f_4c",),
    "4_Hp": ("f_4c",),
}

# Pairs the tables cannot tell apart; the name follows the Petrie image of the base entry.
SHARED_FINGERPRINTS = (("4_Ap", "4_Ep"), ("4_Bp", "4_Hp"), ("4_Cp", "4_Gp"))


@dataclass(frozen=True)
class TypeGraphEntry:
    name: str
    pregraph: Pregraph
    t0_fingerprint: tuple[str, ...]
    t2_fingerprint: tuple[str, ...]
    code: bytes = field(repr=False, compare=False)

    @property
    def t0_rows(self) -> tuple[TwoColourTypeEntry, ...]:
        return tuple(table_lookup(t) for t in TABLE_T0[self.name])

    @property
    def t2_rows(self) -> tuple[TwoColourTypeEntry, ...]:
        return tuple(table_lookup(t) for t in TABLE_T2[self.name])

    @property
    def shares_fingerprint_with(self):
        for a, b in SHARED_FINGERPRINTS:
            if self.name == a:
                return b
            if self.name == b:
                return a
        return None


def _build_catalog():
    out = {}
    for name in FOUR_ORBIT_NAMES:
        edges, semi = _TRANSCRIBED[name]
        p = Pregraph(4, edges, semi)
        out[name] = TypeGraphEntry(name, p, tuple(sorted(TABLE_T0[name])),
                                   tuple(sorted(TABLE_T2[name])), canonical_code(p))
    return out


CATALOG = _build_catalog()
_NAME_BY_CODE = {e.code: e.name for e in CATALOG.values()}


def classify_pregraph(p: Pregraph):
    """Catalog name of a 4-vertex symmetry type graph, or ``None``."""
    if p.n_vertices != 4:
        return None
    return _NAME_BY_CODE.get(canonical_code(p))


def dual_name(name: str) -> str:
    return classify_pregraph(CATALOG[name].pregraph.swap_colours(0, 2))


def petrie_name(name: str) -> str:
    return classify_pregraph(petrie_dual(CATALOG[name].pregraph))


def _base(name):
    return name[:3]


def self_check() -> list[str]:
    """Recompute everything the catalog asserts; returns the list of problems."""
    problems = []
    if len(_NAME_BY_CODE) != len(CATALOG):
        problems.append("catalog pregraphs are not pairwise non-isomorphic")
    for name, entry in CATALOG.items():
        p = entry.pregraph
        if not is_connected(p) or any(
                p.neighbour(v, c) is None for v in p.vertices for c in (0, 1, 2)):
            problems.append(f"{name}: not a connected 3-coloured pregraph")
            continue
        if not _has_edge_shapes(p):
            problems.append(f"{name}: 0-2 components are not 4-cycle quotients")
        for removed, table in ((0, entry.t0_fingerprint), (2, entry.t2_fingerprint)):
            try:
                got = fingerprint(p, removed)
            except NotATypeGraphError as exc:
                problems.append(f"{name}: {exc}")
                continue
            if got != table:
                problems.append(f"{name}: colour-{removed} deletion gives {got}, table says {table}")
        d, pt = dual_name(name), petrie_name(name)
        base = _base(name)
        suffix = name[3:]
        expected_d = {"": base + "d", "d": base, "p": name}[suffix] if base != "4_F" else name
        expected_p = {"": base + "p", "d": name, "p": base}[suffix] if base != "4_F" else name
        if d != expected_d:
            problems.append(f"{name}: dual is {d}, expected {expected_d}")
        if pt != expected_p:
            problems.append(f"{name}: Petrie dual is {pt}, expected {expected_p}")
    return problems


def _check_on_import():
    problems = self_check()
    if problems:
        raise CatalogConsistencyError("; ".join(problems))


# Edge-orbit shapes: quotients of the alternating 0-2 square by a free action.
EDGE_SHAPES = (
    Pregraph(1, [], [(0, 0), (0, 2)]),
    Pregraph(2, [(0, 1, 0)], [(0, 2), (1, 2)]),
    Pregraph(2, [(0, 1, 2)], [(0, 0), (1, 0)]),
    Pregraph(2, [(0, 1, 0), (0, 1, 2)], []),
    Pregraph(4, [(0, 1, 0), (1, 2, 2), (2, 3, 0), (0, 3, 2)], []),
)
_EDGE_SHAPE_CODES = frozenset(canonical_code(s) for s in EDGE_SHAPES)


def _has_edge_shapes(p: Pregraph) -> bool:
    for comp in components(delete_colour(p, 1)):
        if comp.n_vertices > 4 or canonical_code(comp) not in _EDGE_SHAPE_CODES:
            return False
    return True


_check_on_import()


def classify_4orbit(fs: FlagSystem) -> str:
    from mapsym.symmetry import flag_orbits, quotient

    orbits = flag_orbits(fs)
    if orbits.orbit_count != 4:
        raise WrongOrbitCountError(orbits.orbit_count)
    name = classify_pregraph(quotient(fs, orbits))
    if name is None:
        raise CatalogConsistencyError("4-orbit map whose symmetry type graph is not in the catalog")
    return name


def _involutions(k):
    out = []

    def rec(p, i):
        if i == k:
            out.append(tuple(p))
            return
        if p[i] != -1:
            rec(p, i + 1)
            return
        p[i] = i
        rec(p, i + 1)
        for j in range(i + 1, k):
            if p[j] == -1:
                p[i], p[j] = j, i
                rec(p, i + 1)
                p[j] = -1
        p[i] = -1

    rec([-1] * k, 0)
    return out


def enumerate_candidates(k: int) -> list[Pregraph]:
    """Connected 3-coloured pregraphs on ``k`` vertices admissible as symmetry type graphs.

    One incidence per colour at every vertex, and every component of the
    0-2 subgraph is one of :data:`EDGE_SHAPES`.  One representative per
    isomorphism class, ordered by canonical code.
    """
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= 6:
        raise InputError("k must be an integer between 1 and 6")
    invs = _involutions(k)
    # s0 only matters up to conjugacy: pair off the first vertices.
    reps = []
    for t in range(k // 2 + 1):
        p = list(range(k))
        for i in range(t):
            p[2 * i], p[2 * i + 1] = 2 * i + 1, 2 * i
        reps.append(tuple(p))
    found = {}
    for a in reps:
        for c in invs:
            if not _has_edge_shapes(from_involutions({0: a, 2: c})):
                continue
            for b in invs:
                p = from_involutions({0: a, 1: b, 2: c})
                if not is_connected(p):
                    continue
                found.setdefault(canonical_code(p), p)
    return [found[code] for code in sorted(found)]


@dataclass(frozen=True)
class CandidateMatch:
    matched: dict
    unmatched: tuple


def match_candidates(k: int = 4) -> CandidateMatch:
    """Pair enumerated candidates with catalog names; leftovers are reported, not accepted."""
    matched, unmatched = {}, []
    for p in enumerate_candidates(k):
        name = classify_pregraph(p)
        if name is None:
            unmatched.append(p)
        else:
            matched[name] = p
    return CandidateMatch(matched, tuple(unmatched))


@dataclass(frozen=True)
class TableReport:
    name: str
    t0_components: tuple[str, ...]
    t2_components: tuple[str, ...]
    vertex_records: tuple
    face_records: tuple
    problems: tuple[str, ...]
    note: str | None = None

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_against_tables(fs: FlagSystem) -> TableReport:
    """Check a 4-orbit map against the vertex/face tables and its catalog row.

    Any listed problem means a bug in this package, not a property of the map.
    """
    from mapsym.symmetry import (
        colour_deleted,
        element_types,
        face_type_graph,
        vertex_type_graph,
    )

    name = classify_4orbit(fs)
    entry = CATALOG[name]
    problems = []
    t0 = fingerprint(colour_deleted(fs, 0), 0)
    t2 = fingerprint(colour_deleted(fs, 2), 2)
    if t0 != entry.t0_fingerprint:
        problems.append(f"T0 components {t0} differ from table row {entry.t0_fingerprint}")
    if t2 != entry.t2_fingerprint:
        problems.append(f"T2 components {t2} differ from table row {entry.t2_fingerprint}")
    if len(t0) > 3 or len(t2) > 3:
        problems.append("more than three components after colour deletion")
    types = element_types(fs)
    for kind, records, allowed, type_graph in (
            ("vertex", types.vertices, entry.t0_fingerprint, vertex_type_graph),
            ("face", types.faces, entry.t2_fingerprint, face_type_graph)):
        by_component = {}
        for rec in records:
            label = f"{kind} {rec.element}"
            if rec.type_id not in allowed:
                problems.append(f"{label}: type {rec.type_id} not in row {allowed}")
                continue
            row = table_lookup(rec.type_id)
            if not row.admits(rec.measure):
                problems.append(f"{label}: {rec.type_id} does not allow {rec.measure}")
            if rec.characteristic.cycle_length != 2 * rec.measure:
                problems.append(f"{label}: characteristic length is not twice {rec.measure}")
            if (rec.characteristic.first_colour, rec.characteristic.second_colour) != row.colours:
                problems.append(f"{label}: characteristic colours differ from {row.colours}")
            q, comp = type_graph(fs, rec.element)
            if canonical_code(q) != canonical_code(comp):
                problems.append(f"{label}: cycle quotient is not its whole component")
            by_component.setdefault(rec.component, set()).add(
                (rec.measure, rec.characteristic))
        for comp, values in by_component.items():
            if len(values) > 1:
                problems.append(f"{kind}s in component {comp} disagree: {sorted(values, key=str)}")
    note = None
    other = entry.shares_fingerprint_with
    if other is not None:
        note = (f"{name} and {other} have identical table rows; "
                f"{name} is the Petrie dual of {petrie_name(name)}")
    return TableReport(name, t0, t2, types.vertices, types.faces, tuple(problems), note)


def all_entries():
    return [CATALOG[n] for n in FOUR_ORBIT_NAMES]
