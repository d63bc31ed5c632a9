"""Edge-coloured pregraphs: graphs whose edges may be semi-edges.

Every vertex carries at most one incidence per colour, so a pregraph is the
same data as one partial involution per colour: ``neighbour(v, c)`` is the
other end of the ``c``-edge at ``v``, ``v`` itself for a semi-edge, or
``None`` when ``v`` has no ``c`` incidence.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass

from mapsym.errors import InputError, UnsupportedSizeError

MAX_ISO_VERTICES = 12

DOT_COLOURS = {0: "red", 1: "green", 2: "blue"}


@dataclass(frozen=True)
class Pregraph:
    vertices: tuple[int, ...]
    edges: frozenset  # of (u, v, colour), u < v
    semi_edges: frozenset  # of (v, colour)

    def __init__(self, vertices, edges=(), semi_edges=()):
        if isinstance(vertices, int):
            vertices = range(vertices)
        verts = tuple(sorted(set(vertices)))
        norm_edges = set()
        for u, v, c in edges:
            if u == v:
                raise InputError(f"loop at {u} of colour {c}: use a semi-edge")
            norm_edges.add((min(u, v), max(u, v), c))
        norm_semi = {(v, c) for v, c in semi_edges}
        vset = set(verts)
        seen = set()
        for u, v, c in sorted(norm_edges):
            for x in (u, v):
                if x not in vset:
                    raise InputError(f"edge endpoint {x} is not a vertex")
                if (x, c) in seen:
                    raise InputError(f"vertex {x} has two incidences of colour {c}")
                seen.add((x, c))
        for v, c in sorted(norm_semi):
            if v not in vset:
                raise InputError(f"semi-edge at {v} is not at a vertex")
            if (v, c) in seen:
                raise InputError(f"vertex {v} has two incidences of colour {c}")
            seen.add((v, c))
        for _, _, c in norm_edges:
            if c not in (0, 1, 2):
                raise InputError(f"colour must be 0, 1 or 2, got {c!r}")
        for _, c in norm_semi:
            if c not in (0, 1, 2):
                raise InputError(f"colour must be 0, 1 or 2, got {c!r}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(norm_edges))
        object.__setattr__(self, "semi_edges", frozenset(norm_semi))
        object.__setattr__(self, "_adj", _adjacency(norm_edges, norm_semi))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def colours(self) -> frozenset:
        return frozenset(c for *_, c in self.edges) | frozenset(c for _, c in self.semi_edges)

    def neighbour(self, v, colour):
        return self._adj.get((v, colour))

    def signature(self, v) -> tuple:
        """Per colour: 0 absent, 1 semi-edge, 2 proper edge."""
        sig = []
        for c in (0, 1, 2):
            w = self.neighbour(v, c)
            sig.append(0 if w is None else 1 if w == v else 2)
        return tuple(sig)

    def relabel(self, mapping) -> "Pregraph":
        return Pregraph([mapping[v] for v in self.vertices],
                        [(mapping[u], mapping[v], c) for u, v, c in self.edges],
                        [(mapping[v], c) for v, c in self.semi_edges])

    def normalized(self) -> "Pregraph":
        """Same pregraph with vertices renamed ``0 .. n-1`` in label order."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    def swap_colours(self, a: int, b: int) -> "Pregraph":
        sw = {a: b, b: a}
        return Pregraph(self.vertices,
                        [(u, v, sw.get(c, c)) for u, v, c in self.edges],
                        [(v, sw.get(c, c)) for v, c in self.semi_edges])

    def recolour(self, mapping) -> "Pregraph":
        """Rename colours by ``mapping`` (colours missing from it are kept)."""
        return Pregraph(self.vertices,
                        [(u, v, mapping.get(c, c)) for u, v, c in self.edges],
                        [(v, mapping.get(c, c)) for v, c in self.semi_edges])

    def to_dict(self) -> dict:
        p = self.normalized()
        return {"vertices": p.n_vertices,
                "edges": [list(e) for e in sorted(p.edges)],
                "semi_edges": [list(s) for s in sorted(p.semi_edges)]}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> "Pregraph":
        if not isinstance(data, dict) or set(data) != {"vertices", "edges", "semi_edges"}:
            raise InputError("pregraph JSON needs exactly 'vertices', 'edges', 'semi_edges'")
        n = data["vertices"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InputError("'vertices' must be a non-negative integer")
        try:
            edges = [tuple(e) for e in data["edges"]]
            semi = [tuple(s) for s in data["semi_edges"]]
        except TypeError as exc:
            raise InputError("edges and semi_edges must be lists of lists") from exc
        if any(len(e) != 3 for e in edges) or any(len(s) != 2 for s in semi):
            raise InputError("edges are [u, v, colour], semi-edges are [v, colour]")
        return cls(n, edges, semi)

    @classmethod
    def from_json(cls, text: str) -> "Pregraph":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc

    def __repr__(self):
        return (f"Pregraph(vertices={list(self.vertices)}, edges={sorted(self.edges)}, "
                f"semi_edges={sorted(self.semi_edges)})")


def _adjacency(edges, semi):
    adj = {}
    for u, v, c in edges:
        adj[(u, c)] = v
        adj[(v, c)] = u
    for v, c in semi:
        adj[(v, c)] = v
    return adj


def from_involutions(perms: dict) -> Pregraph:
    """Build a pregraph on ``range(n)`` from ``{colour: involution}``.

    Fixed points become semi-edges.
    """
    n = len(next(iter(perms.values()))) if perms else 0
    edges, semi = [], []
    for c, p in perms.items():
        for v in range(n):
            w = p[v]
            if w == v:
                semi.append((v, c))
            elif v < w:
                edges.append((v, w, c))
    return Pregraph(n, edges, semi)


def delete_colour(p: Pregraph, colour: int) -> Pregraph:
    if colour not in (0, 1, 2):
        raise InputError(f"colour must be 0, 1 or 2, got {colour!r}")
    return Pregraph(p.vertices,
                    [e for e in p.edges if e[2] != colour],
                    [s for s in p.semi_edges if s[1] != colour])


def induced(p: Pregraph, vertices) -> Pregraph:
    vs = set(vertices)
    return Pregraph(vs,
                    [e for e in p.edges if e[0] in vs and e[1] in vs],
                    [s for s in p.semi_edges if s[0] in vs])


def components(p: Pregraph) -> list[Pregraph]:
    """Connected components (semi-edges do not connect), ordered by least vertex."""
    seen = set()
    out = []
    for start in p.vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for c in (0, 1, 2):
                y = p.neighbour(x, c)
                if y is not None and y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        out.append(induced(p, comp))
    return out


def is_connected(p: Pregraph) -> bool:
    return len(components(p)) <= 1


def _check_size(p: Pregraph):
    if p.n_vertices > MAX_ISO_VERTICES:
        raise UnsupportedSizeError(
            f"pregraph has {p.n_vertices} vertices; the limit is {MAX_ISO_VERTICES}")


def _bfs_labelling(p: Pregraph, start):
    order = [start]
    label = {start: 0}
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for c in (0, 1, 2):
            y = p.neighbour(x, c)
            if y is not None and y not in label:
                label[y] = len(order)
                order.append(y)
    return label


def _serialize(p: Pregraph, label) -> tuple:
    edges = sorted((min(label[u], label[v]), max(label[u], label[v]), c)
                   for u, v, c in p.edges)
    semi = sorted((label[v], c) for v, c in p.semi_edges)
    return (len(label), tuple(edges), tuple(semi))


def _component_code(comp: Pregraph) -> tuple:
    # One incidence per colour per vertex: a start vertex pins the labelling.
    return min(_serialize(comp, _bfs_labelling(comp, s)) for s in comp.vertices)


def canonical_code(p: Pregraph) -> bytes:
    """Bytes that are equal exactly for colour-preserving isomorphic pregraphs."""
    _check_size(p)
    codes = sorted(_component_code(c) for c in components(p))
    return repr(codes).encode("ascii")


def brute_force_code(p: Pregraph) -> bytes:
    """Minimum serialization over all vertex orderings (slow; for cross-checks)."""
    _check_size(p)
    best = None
    for perm in itertools.permutations(range(p.n_vertices)):
        code = _serialize(p, dict(zip(p.vertices, perm)))
        if best is None or code < best:
            best = code
    return repr(best).encode("ascii")


def isomorphic(a: Pregraph, b: Pregraph):
    """A colour-preserving vertex bijection ``a -> b`` as a dict, or ``None``."""
    _check_size(a)
    _check_size(b)
    if a.n_vertices != b.n_vertices or len(a.edges) != len(b.edges) \
            or len(a.semi_edges) != len(b.semi_edges):
        return None
    sig_b = {}
    for v in b.vertices:
        sig_b.setdefault(b.signature(v), []).append(v)
    order = sorted(a.vertices, key=lambda v: len(sig_b.get(a.signature(v), ())))
    mapping, used = {}, set()

    def consistent(x, y):
        for c in (0, 1, 2):
            xn, yn = a.neighbour(x, c), b.neighbour(y, c)
            if (xn is None) != (yn is None):
                return False
            if xn is None:
                continue
            if (xn == x) != (yn == y):
                return False
            if xn in mapping and mapping[xn] != yn:
                return False
        return True

    def search(i):
        if i == len(order):
            return True
        x = order[i]
        for y in sig_b.get(a.signature(x), ()):
            if y in used or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if search(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if search(0) else None


def follow(p: Pregraph, v, word):
    """Walk from ``v`` along the colours in ``word``; semi-edges stay put."""
    for c in word:
        v = p.neighbour(v, c)
        if v is None:
            raise InputError(f"no incidence of colour {c}")
    return v


def petrie_dual(p: Pregraph) -> Pregraph:
    """Symmetry type graph of the Petrie dual: the 0-step becomes ``0`` then ``2``."""
    edges, semi = [], []
    for v in p.vertices:
        w = follow(p, v, (0, 2))
        if w == v:
            semi.append((v, 0))
        elif v < w:
            edges.append((v, w, 0))
    return Pregraph(p.vertices,
                    [e for e in p.edges if e[2] != 0] + edges,
                    [s for s in p.semi_edges if s[1] != 0] + semi)


def to_dot(p: Pregraph, name: str = "pregraph") -> str:
    """Graphviz source; a semi-edge at ``v`` of colour ``c`` ends at point node ``se_v_c``."""
    q = p.normalized()
    lines = [f'graph "{name}" {{']
    for v in q.vertices:
        lines.append(f"  {v};")
    for u, v, c in sorted(q.edges):
        lines.append(f'  {u} -- {v} [color="{DOT_COLOURS[c]}", label="{c}"];')
    for v, c in sorted(q.semi_edges):
        aux = f"se_{v}_{c}"
        lines.append(f'  {aux} [shape=point];')
        lines.append(f'  {v} -- {aux} [color="{DOT_COLOURS[c]}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
