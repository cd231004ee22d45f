"""Central hyperplane arrangements in K^4 and their intersection lattice.

An arrangement is an ordered list of pairwise non-proportional normal vectors
that jointly span K^4 (projectively: hyperplanes of P^3 with empty common
intersection).  The rank-2 flats are the lines of the induced projective
arrangement, the rank-3 flats its vertices; both carry weights counting the
hyperplanes containing them.  Restrictions to a hyperplane and parabolic
subarrangements at a vertex are returned as rank-3 arrangements in K^3.
"""

from __future__ import annotations

from collections import Counter

from .linalg import (
    canonicalize_vector,
    cross3,
    dot,
    kernel_basis,
    pair_dot,
    pair_mul,
    pair_vector_canonical,
    pairs_to_quads,
    plucker,
    rank as matrix_rank,
    rref,
    to_int_pairs,
)
from .scalars import Field, infer_field, lift


class DuplicateHyperplane(ValueError):
    """Two of the supplied normals are proportional."""


class NotEssential(ValueError):
    """The normals do not span the ambient space."""


class MixedField(ValueError):
    """Irrational coordinates supplied for a rational arrangement."""


class LineFlat:
    """A rank-2 flat: the intersection of at least two hyperplanes."""

    __slots__ = ("members", "mask", "weight", "basis")

    def __init__(self, members, mask, basis):
        self.members = members          # sorted tuple of hyperplane indices
        self.mask = mask                # same set as a bitmask
        self.weight = len(members)
        self.basis = basis              # two kernel vectors spanning the flat

    def __repr__(self):
        return f"LineFlat(members={self.members})"


class VertexFlat:
    """A rank-3 flat: a projective point lying on at least three hyperplanes."""

    __slots__ = ("members", "mask", "weight", "point")

    def __init__(self, members, mask, point):
        self.members = members
        self.mask = mask
        self.weight = len(members)
        self.point = point              # canonical spanning vector of the flat

    def __repr__(self):
        return f"VertexFlat(point={self.point}, weight={self.weight})"


def _canonical_normals(normals, field, ambient):
    canon = []
    seen = {}
    for idx, vec in enumerate(normals):
        vec = tuple(vec)
        if len(vec) != ambient:
            raise ValueError(f"normal {idx} has {len(vec)} coordinates, expected {ambient}")
        try:
            lifted = [lift(x, field) for x in vec]
        except ValueError as exc:
            raise MixedField(str(exc)) from None
        if not any(lifted):
            raise ValueError(f"normal {idx} is the zero vector")
        cv = canonicalize_vector(lifted, field)
        if cv in seen:
            raise DuplicateHyperplane(
                f"normals {seen[cv]} and {idx} define the same hyperplane"
            )
        seen[cv] = idx
        canon.append(cv)
    return tuple(canon)


class Arrangement:
    """An essential central arrangement of n >= 1 hyperplanes in K^4."""

    dim = 4

    def __init__(self, normals, field: Field | None = None):
        normals = list(normals)
        if not normals:
            raise ValueError("an arrangement needs at least one hyperplane")
        if field is None:
            field = infer_field(x for vec in normals for x in vec)
        self.field = field
        self.normals = _canonical_normals(normals, field, self.dim)
        r = matrix_rank(self.normals)
        if r != self.dim:
            raise NotEssential(f"normals span a subspace of rank {r}, need {self.dim}")
        self._lines = None
        self._vertices = None
        self._pair_line = None
        self._cache = {}

    @property
    def n(self) -> int:
        return len(self.normals)

    def __repr__(self):
        return f"Arrangement(n={self.n}, field={self.field.value})"

    # -- intersection lattice -------------------------------------------------

    def lines(self):
        """All rank-2 flats, sorted by member index sets."""
        if self._lines is None:
            self._compute_lines()
        return self._lines

    def _compute_lines(self):
        groups = {}
        for i in range(self.n):
            vi = self.normals[i]
            for j in range(i + 1, self.n):
                key = plucker(vi, self.normals[j], self.field)
                grp = groups.get(key)
                if grp is None:
                    groups[key] = grp = set()
                grp.add(i)
                grp.add(j)
        lines = []
        pair_line = {}
        for grp in groups.values():
            members = tuple(sorted(grp))
            mask = 0
            for i in members:
                mask |= 1 << i
            basis = tuple(
                kernel_basis([self.normals[members[0]], self.normals[members[1]]])
            )
            lines.append(LineFlat(members, mask, basis))
        lines.sort(key=lambda flat: flat.members)
        for idx, flat in enumerate(lines):
            for a in range(flat.weight):
                for b in range(a + 1, flat.weight):
                    pair_line[(flat.members[a], flat.members[b])] = idx
        self._lines = tuple(lines)
        self._pair_line = pair_line

    def line_of_pair(self, i: int, j: int) -> LineFlat:
        """The unique line flat containing hyperplanes i and j."""
        if i == j:
            raise ValueError("need two distinct hyperplanes")
        if i > j:
            i, j = j, i
        lines = self.lines()
        return lines[self._pair_line[(i, j)]]

    def vertices(self):
        """All rank-3 flats, sorted by member index sets."""
        if self._vertices is None:
            self._compute_vertices()
        return self._vertices

    def _compute_vertices(self):
        if self.field is Field.QUADRATIC_TAU:
            verts = self._vertices_by_pairs()
        else:
            points = {}
            for flat in self.lines():
                b1, b2 = flat.basis
                for k in range(self.n):
                    if flat.mask >> k & 1:
                        continue
                    vk = self.normals[k]
                    d1 = dot(vk, b1)
                    d2 = dot(vk, b2)
                    # the unique point of the line killed by hyperplane k
                    p = tuple(d2 * x - d1 * y for x, y in zip(b1, b2))
                    points[canonicalize_vector(p, self.field)] = None
            verts = []
            for p in points:
                mask = 0
                members = []
                for i, vi in enumerate(self.normals):
                    if not dot(vi, p):
                        mask |= 1 << i
                        members.append(i)
                verts.append(VertexFlat(tuple(members), mask, p))
        for v in verts:
            if not 3 <= v.weight <= self.n - 1:
                raise AssertionError(
                    f"vertex {v.point} lies on {v.weight} hyperplanes"
                )
        verts.sort(key=lambda v: v.members)
        self._vertices = tuple(verts)

    def _vertices_by_pairs(self):
        # integer-pair arithmetic; positive rescalings keep all signs intact
        pnormals = [to_int_pairs(v) for v in self.normals]
        keys = {}
        for flat in self.lines():
            pb1 = to_int_pairs(flat.basis[0])
            pb2 = to_int_pairs(flat.basis[1])
            for k in range(self.n):
                if flat.mask >> k & 1:
                    continue
                vk = pnormals[k]
                d1 = pair_dot(vk, pb1)
                d2 = pair_dot(vk, pb2)
                p = []
                for x, y in zip(pb1, pb2):
                    m1 = pair_mul(d2, x)
                    m2 = pair_mul(d1, y)
                    p.append((m1[0] - m2[0], m1[1] - m2[1]))
                keys[pair_vector_canonical(p)] = None
        verts = []
        for key in keys:
            mask = 0
            members = []
            for i, vi in enumerate(pnormals):
                da, db = pair_dot(vi, key)
                if not da and not db:
                    mask |= 1 << i
                    members.append(i)
            point = canonicalize_vector(pairs_to_quads(key), self.field)
            verts.append(VertexFlat(tuple(members), mask, point))
        return verts

    def h_vector(self) -> dict[int, int]:
        """Counts of lines by weight, as a weight -> count map."""
        counts = Counter(flat.weight for flat in self.lines())
        return dict(sorted(counts.items()))

    def t_vector(self) -> dict[int, int]:
        """Counts of vertices by weight, as a weight -> count map."""
        counts = Counter(v.weight for v in self.vertices())
        return dict(sorted(counts.items()))

    def multiplicity(self) -> int:
        """Largest vertex weight."""
        return max(v.weight for v in self.vertices())

    # -- derived rank-3 arrangements -------------------------------------------

    def restriction(self, h: int) -> "Rank3Arrangement":
        """The lines inside hyperplane h, as an arrangement in K^3."""
        if not 0 <= h < self.n:
            raise IndexError(f"hyperplane index {h} out of range")
        basis = kernel_basis([self.normals[h]])
        sub = []
        for flat in self.lines():
            if not flat.mask >> h & 1:
                continue
            k = next(i for i in flat.members if i != h)
            vk = self.normals[k]
            sub.append(tuple(dot(vk, b) for b in basis))
        return Rank3Arrangement(sub, self.field)

    def parabolic(self, vertex: VertexFlat) -> "Rank3Arrangement":
        """The hyperplanes through a vertex, modulo the spanned line."""
        _, pivots = rref([vertex.point])
        free = [c for c in range(self.dim) if c not in pivots]
        sub = [
            tuple(self.normals[i][f] for f in free)
            for i in vertex.members
        ]
        return Rank3Arrangement(sub, self.field)

    # -- reducibility -----------------------------------------------------------

    def reducible_partition(self):
        """Two-block partition witnessing a product structure, or None.

        Computes the finest decomposition of K^4 into summands each containing
        a subset of the normals: starting from a greedy basis, every dependent
        normal ties together the basis normals appearing in its expansion.
        The blocks are the classes of that relation; the arrangement is
        reducible exactly when there are at least two.
        """
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        echelon = []  # (reduced row, pivot column, expression over basis indices)
        for idx, vec in enumerate(self.normals):
            row = [lift(x, self.field) for x in vec]
            combo = {}
            for erow, pc, expr in echelon:
                f = row[pc]
                if f:
                    row = [x - f * y for x, y in zip(row, erow)]
                    for b, c in expr.items():
                        combo[b] = combo.get(b, 0) + f * c
            pivot = next((c for c in range(self.dim) if row[c]), None)
            if pivot is None:
                support = [b for b, c in combo.items() if c]
                for b in support:
                    union(idx, b)
            else:
                pv = row[pivot]
                erow = [x / pv for x in row]
                expr = {idx: 1 / pv}
                for b, c in combo.items():
                    if c:
                        expr[b] = -c / pv
                echelon.append((erow, pivot, expr))
        blocks = {}
        for i in range(self.n):
            blocks.setdefault(find(i), []).append(i)
        parts = sorted(blocks.values(), key=lambda blk: blk[0])
        if len(parts) == 1:
            return None
        first = tuple(parts[0])
        rest = tuple(sorted(i for blk in parts[1:] for i in blk))
        return (first, rest)

    def is_reducible(self) -> bool:
        return self.reducible_partition() is not None

    # chamber machinery reads corner flats generically (vertices here,
    # points for rank-3 arrangements)
    def corner_flats(self):
        return self.vertices()


def _pair_cross3(u, v):
    out = []
    for a, b in ((1, 2), (2, 0), (0, 1)):
        m1 = pair_mul(u[a], v[b])
        m2 = pair_mul(u[b], v[a])
        out.append((m1[0] - m2[0], m1[1] - m2[1]))
    return tuple(out)


class PointFlat:
    """A rank-2 flat of a rank-3 arrangement: a projective point of P^2."""

    __slots__ = ("members", "mask", "weight", "point")

    def __init__(self, members, mask, point):
        self.members = members
        self.mask = mask
        self.weight = len(members)
        self.point = point

    def __repr__(self):
        return f"PointFlat(point={self.point}, weight={self.weight})"


class Rank3Arrangement:
    """An essential central arrangement in K^3 (restrictions, parabolics)."""

    dim = 3

    def __init__(self, normals, field: Field | None = None):
        normals = list(normals)
        if not normals:
            raise ValueError("an arrangement needs at least one hyperplane")
        if field is None:
            field = infer_field(x for vec in normals for x in vec)
        self.field = field
        self.normals = _canonical_normals(normals, field, self.dim)
        r = matrix_rank(self.normals)
        if r != self.dim:
            raise NotEssential(f"normals span a subspace of rank {r}, need {self.dim}")
        self._points = None
        self._cache = {}

    @property
    def n(self) -> int:
        return len(self.normals)

    def __repr__(self):
        return f"Rank3Arrangement(n={self.n}, field={self.field.value})"

    def points(self):
        """All rank-2 flats (projective points), sorted by member sets."""
        if self._points is None:
            quadratic = self.field is Field.QUADRATIC_TAU
            if quadratic:
                work = [to_int_pairs(v) for v in self.normals]
            else:
                work = self.normals
            groups = {}
            for i in range(self.n):
                vi = work[i]
                for j in range(i + 1, self.n):
                    vj = work[j]
                    if quadratic:
                        key = pair_vector_canonical(_pair_cross3(vi, vj))
                    else:
                        key = canonicalize_vector(cross3(vi, vj), self.field)
                    grp = groups.get(key)
                    if grp is None:
                        groups[key] = grp = set()
                    grp.add(i)
                    grp.add(j)
            pts = []
            for key, grp in groups.items():
                members = tuple(sorted(grp))
                mask = 0
                for i in members:
                    mask |= 1 << i
                point = (
                    canonicalize_vector(pairs_to_quads(key), self.field)
                    if quadratic
                    else key
                )
                pts.append(PointFlat(members, mask, point))
            pts.sort(key=lambda p: p.members)
            self._points = tuple(pts)
        return self._points

    def point_weights(self) -> dict[int, int]:
        counts = Counter(p.weight for p in self.points())
        return dict(sorted(counts.items()))

    def char_poly(self) -> tuple[int, int, int, int]:
        """Coefficients (descending) of the cubic characteristic polynomial."""
        second = sum(p.weight - 1 for p in self.points())
        constant = -(1 - self.n + second)
        return (1, -self.n, second, constant)

    def projective_chamber_count(self) -> int:
        """Number of chambers of the induced decomposition of P^2."""
        c3, c2, c1, c0 = self.char_poly()
        value = -c3 + c2 - c1 + c0  # the polynomial at -1
        count = -value
        if count <= 0 or count % 2:
            raise AssertionError("chamber count must be a positive even integer")
        return count // 2

    def corner_flats(self):
        return self.points()
