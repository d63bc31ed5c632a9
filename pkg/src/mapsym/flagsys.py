"""Flag systems: finite maps given by three involutions on a set of flags.

Flags are the integers ``0 .. n-1``.  A map is the triple ``(s0, s1, s2)``
where ``s_j[i]`` is the flag ``j``-adjacent to flag ``i``.  Vertices, edges
and faces are not stored; they are the orbits of ``<s1, s2>``, ``<s0, s2>``
and ``<s0, s1>`` respectively.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from mapsym.errors import InputError, PreconditionError

Permutation = tuple[int, ...]

COLOURS = (0, 1, 2)
VERTEX_GENERATORS = (1, 2)
EDGE_GENERATORS = (0, 2)
FACE_GENERATORS = (0, 1)


def is_permutation(images: Sequence[int]) -> bool:
    n = len(images)
    return sorted(images) == list(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q`` (right action, as in ``flag . p . q``)."""
    return tuple(q[x] for x in p)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity(n: int) -> Permutation:
    return tuple(range(n))


@dataclass(frozen=True)
class FlagSystem:
    """Three permutations of ``range(n)``; see :func:`validate` for the map axioms."""

    s0: Permutation
    s1: Permutation
    s2: Permutation

    def __post_init__(self):
        perms = []
        for name in ("s0", "s1", "s2"):
            value = getattr(self, name)
            try:
                value = tuple(int(x) for x in value)
            except (TypeError, ValueError) as exc:
                raise InputError(f"{name} is not a sequence of integers") from exc
            object.__setattr__(self, name, value)
            perms.append(value)
        n = len(perms[0])
        if n == 0:
            raise InputError("a flag system needs at least one flag")
        for name, p in zip(("s0", "s1", "s2"), perms):
            if len(p) != n:
                raise InputError(f"{name} has length {len(p)}, expected {n}")
            if not is_permutation(p):
                raise InputError(f"{name} is not a permutation of 0..{n - 1}")

    @property
    def n_flags(self) -> int:
        return len(self.s0)

    def s(self, j: int) -> Permutation:
        if j == 0:
            return self.s0
        if j == 1:
            return self.s1
        if j == 2:
            return self.s2
        raise InputError(f"colour must be 0, 1 or 2, got {j!r}")

    def walk(self, flag: int, word: Iterable[int]) -> int:
        """Iterated adjacency: ``walk(f, [0, 2])`` is the flag ``f^{0,2}``."""
        for j in word:
            flag = self.s(j)[flag]
        return flag

    def relabel(self, mapping: Sequence[int]) -> "FlagSystem":
        """Rename flag ``i`` to ``mapping[i]``."""
        inv = inverse(tuple(mapping))
        return FlagSystem(*(tuple(mapping[p[inv[i]]] for i in range(len(p)))
                            for p in (self.s0, self.s1, self.s2)))

    def to_dict(self) -> dict:
        return {"flags": self.n_flags, "s0": list(self.s0),
                "s1": list(self.s1), "s2": list(self.s2)}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> "FlagSystem":
        if not isinstance(data, dict):
            raise InputError("flag system JSON must be an object")
        expected = {"flags", "s0", "s1", "s2"}
        unknown = set(data) - expected
        if unknown:
            raise InputError(f"unknown field(s): {', '.join(sorted(unknown))}")
        missing = expected - set(data)
        if missing:
            raise InputError(f"missing field(s): {', '.join(sorted(missing))}")
        n = data["flags"]
        if isinstance(n, bool) or not isinstance(n, int) or n <= 0:
            raise InputError("'flags' must be a positive integer")
        perms = []
        for name in ("s0", "s1", "s2"):
            seq = data[name]
            if not isinstance(seq, list) or any(
                    isinstance(x, bool) or not isinstance(x, int) for x in seq):
                raise InputError(f"{name} must be a list of integers")
            if len(seq) != n:
                raise InputError(f"{name} has length {len(seq)}, expected {n}")
            perms.append(seq)
        return cls(*perms)

    @classmethod
    def from_json(cls, text: str) -> "FlagSystem":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of the flags; orbit ids are ordered by their smallest flag."""

    orbit_of: tuple[int, ...]
    orbit_members: tuple[tuple[int, ...], ...]

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_members)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.orbit_members)

    def __len__(self):
        return len(self.orbit_members)

    def __iter__(self):
        return iter(self.orbit_members)


def partition_from_permutations(n: int, perms: Iterable[Sequence[int]]) -> OrbitPartition:
    """Orbits of the group generated by ``perms`` acting on ``range(n)``.

    Breadth-first closure with an explicit visited set.
    """
    perms = [tuple(p) for p in perms]
    orbit_of = [-1] * n
    members = []
    for start in range(n):
        if orbit_of[start] != -1:
            continue
        oid = len(members)
        orbit_of[start] = oid
        found = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for p in perms:
                y = p[x]
                if orbit_of[y] == -1:
                    orbit_of[y] = oid
                    found.append(y)
                    queue.append(y)
        members.append(tuple(sorted(found)))
    return OrbitPartition(tuple(orbit_of), tuple(members))


def orbits_under(fs: FlagSystem, generators: Iterable[int]) -> OrbitPartition:
    """Orbits of the subgroup generated by the chosen ``s_j``.

    An empty generator set gives the partition into singletons.
    """
    gens = sorted(set(generators))
    for j in gens:
        if j not in COLOURS:
            raise InputError(f"generator must be one of 0, 1, 2, got {j!r}")
    return partition_from_permutations(fs.n_flags, [fs.s(j) for j in gens])


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(fs: FlagSystem, strict: bool = False) -> ValidationReport:
    """Check the map axioms and list every violated one.

    With ``strict`` the underlying graph must also be simple, with every
    vertex of degree at least 3 and every face of size at least 3.
    """
    n = fs.n_flags
    out = []
    for j in COLOURS:
        p = fs.s(j)
        if any(p[p[i]] != i for i in range(n)):
            out.append(f"s{j} is not an involution")
        if any(p[i] == i for i in range(n)):
            out.append(f"s{j} has fixed points")
    s0, s2 = fs.s0, fs.s2
    if any(s0[s2[i]] != s2[s0[i]] for i in range(n)):
        out.append("s0 and s2 do not commute")
    if any(s0[s2[i]] == i for i in range(n)):
        out.append("s0s2 has fixed points")
    if n % 4:
        out.append("flag count is not divisible by 4")
    if orbits_under(fs, COLOURS).orbit_count != 1:
        out.append("not transitive")
    if strict and not out:
        out.extend(_simplicity_violations(fs))
    return ValidationReport(tuple(out))


def _simplicity_violations(fs: FlagSystem) -> list[str]:
    out = []
    vertices = orbits_under(fs, VERTEX_GENERATORS)
    edges = orbits_under(fs, EDGE_GENERATORS)
    faces = orbits_under(fs, FACE_GENERATORS)
    pairs = set()
    loop = parallel = False
    for members in edges:
        flag = members[0]
        ends = frozenset((vertices.orbit_of[flag], vertices.orbit_of[fs.s0[flag]]))
        if len(ends) == 1:
            loop = True
        elif ends in pairs:
            parallel = True
        pairs.add(ends)
    if loop:
        out.append("an edge joins a vertex to itself")
    if parallel:
        out.append("two edges join the same pair of vertices")
    if any(len(m) < 6 for m in vertices):
        out.append("a vertex has degree less than 3")
    if any(len(m) < 6 for m in faces):
        out.append("a face has size less than 3")
    return out


def require_valid(fs: FlagSystem, strict: bool = False) -> None:
    report = validate(fs, strict=strict)
    if not report.ok:
        raise PreconditionError("invalid flag system: " + "; ".join(report.violations))


@dataclass(frozen=True)
class MapElements:
    vertices: OrbitPartition
    edges: OrbitPartition
    faces: OrbitPartition

    def degree(self, vertex: int) -> int:
        return len(self.vertices.orbit_members[vertex]) // 2

    def face_size(self, face: int) -> int:
        return len(self.faces.orbit_members[face]) // 2

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.vertices.orbit_count, self.edges.orbit_count,
                self.faces.orbit_count)


def elements(fs: FlagSystem) -> MapElements:
    require_valid(fs)
    return MapElements(orbits_under(fs, VERTEX_GENERATORS),
                       orbits_under(fs, EDGE_GENERATORS),
                       orbits_under(fs, FACE_GENERATORS))


def dual(fs: FlagSystem) -> FlagSystem:
    return FlagSystem(fs.s2, fs.s1, fs.s0)


def petrie_dual(fs: FlagSystem) -> FlagSystem:
    """Replace ``s0`` by ``s0 s2``; the faces become the Petrie polygons."""
    return FlagSystem(compose(fs.s0, fs.s2), fs.s1, fs.s2)


def euler_characteristic(fs: FlagSystem) -> int:
    v, e, f = elements(fs).counts
    return v - e + f


def extend_isomorphism(a: FlagSystem, b: FlagSystem, source: int, target: int):
    """Extend ``source -> target`` to a colour-preserving bijection a -> b.

    Returns the images as a tuple, or ``None`` when the propagation hits a
    contradiction.  Requires ``a`` to be transitive, so one anchor decides
    the whole map.
    """
    n = a.n_flags
    if b.n_flags != n:
        return None
    image = [-1] * n
    used = [False] * n
    image[source] = target
    used[target] = True
    queue = deque([source])
    pa = (a.s0, a.s1, a.s2)
    pb = (b.s0, b.s1, b.s2)
    while queue:
        x = queue.popleft()
        y = image[x]
        for j in COLOURS:
            xn = pa[j][x]
            yn = pb[j][y]
            known = image[xn]
            if known == -1:
                if used[yn]:
                    return None
                image[xn] = yn
                used[yn] = True
                queue.append(xn)
            elif known != yn:
                return None
    if -1 in image:
        return None
    return tuple(image)


def find_isomorphism(a: FlagSystem, b: FlagSystem):
    """A flag bijection carrying ``a`` onto ``b`` (commuting with every s_j), or None."""
    if a.n_flags != b.n_flags:
        return None
    for t in range(b.n_flags):
        iso = extend_isomorphism(a, b, 0, t)
        if iso is not None:
            return iso
    return None


def canonical_form(fs: FlagSystem) -> tuple:
    """Relabelling-invariant code for a transitive flag system.

    Each start flag fixes a labelling by colour-ordered breadth-first search;
    the code is the smallest resulting triple of permutations.
    """
    n = fs.n_flags
    perms = (fs.s0, fs.s1, fs.s2)
    best = None
    for start in range(n):
        label = [-1] * n
        label[start] = 0
        order = [start]
        head = 0
        while head < len(order):
            x = order[head]
            head += 1
            for p in perms:
                y = p[x]
                if label[y] == -1:
                    label[y] = len(order)
                    order.append(y)
        if len(order) != n:
            raise PreconditionError("canonical form needs a transitive flag system")
        code = tuple(tuple(label[p[x]] for x in order) for p in perms)
        if best is None or code < best:
            best = code
    return best
