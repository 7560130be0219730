"""Simplicial families of directions and the reliable-cover decision.

A simplicial family is a set of directions that are the outward normals of a
simplex: m vectors spanning an (m-1)-dimensional subspace with an
all-positive linear dependency.  Equivalently, a positive circuit of the
direction configuration.

A polytope is a d-reliable cover — covering of every d-shadow implies
covering of the body — exactly when its facet normals contain no simplicial
family of size d+2 or larger.  The decision is exact: families are
enumerated exhaustively over all subset sizes up to rank+1, with every
returned family carrying its verifiable positive dependency.

All checks are invariant under positive rescaling of individual directions,
which is why unnormalised integer direction vectors can stand in for unit
normals throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .kernels import circuits, int_rank
from .linalg import Vector, integerize, matrix, nullspace, vector
from .polytope import Polytope, hull_from_vertices, translate_of


@dataclass(frozen=True)
class DirectionSet:
    """Nonzero directions, content-reduced, no two positively proportional.

    Antipodal pairs are allowed.  Original orientations are kept — positive
    dependencies are orientation sensitive.
    """

    dim: int
    directions: tuple[Vector, ...]

    def __post_init__(self) -> None:
        seen = {}
        for idx, u in enumerate(self.directions):
            if len(u) != self.dim:
                raise ValueError("direction dimension mismatch")
            if not any(u):
                raise ValueError("zero vector is not a direction")
            key = tuple(integerize(u))
            if key in seen:
                raise ValueError(
                    f"directions {seen[key]} and {idx} are positively proportional"
                )
            seen[key] = idx

    def integer_directions(self) -> list[tuple[int, ...]]:
        return [integerize(u) for u in self.directions]

    def rank(self) -> int:
        return int_rank(self.integer_directions())


def direction_set(dim: int, dirs: Iterable[Sequence[object]]) -> DirectionSet:
    return DirectionSet(dim, tuple(vector(u) for u in dirs))


def facet_direction_set(p: Polytope) -> DirectionSet:
    """The outward facet normals of a polytope, in facet order.

    For a lower-dimensional polytope these are the relative facet normals
    inside the affine hull, which is where regular boundary points live.
    """
    if not p.facets:
        raise ValueError("polytope has no facets")
    return DirectionSet(p.dim, tuple(f.normal for f in p.facets))


@dataclass(frozen=True)
class SimplicialFamily:
    """Members indices into a direction set plus the positive dependency."""

    members: tuple[int, ...]
    coefficients: tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def family_valid(a: DirectionSet, fam: SimplicialFamily) -> bool:
    """Exact check: positive coefficients, zero sum, rank = size - 1."""
    if len(fam.members) != len(fam.coefficients) or len(fam.members) < 2:
        return False
    if any(c <= 0 for c in fam.coefficients):
        return False
    total = [Fraction(0)] * a.dim
    for i, c in zip(fam.members, fam.coefficients):
        u = a.directions[i]
        total = [t + c * x for t, x in zip(total, u)]
    if any(total):
        return False
    rows = [integerize(a.directions[i]) for i in fam.members]
    return int_rank(rows) == len(fam.members) - 1


def is_simplicial(dirs: Sequence[Sequence[object]]) -> SimplicialFamily | None:
    """Whether the given vectors form one simplicial family.

    Requires rank = size - 1 and a one-dimensional dependency space whose
    generator can be signed all-positive; the coefficients are returned in
    reduced integer form.
    """
    vecs = [vector(u) for u in dirs]
    m = len(vecs)
    if m < 2 or any(not any(u) for u in vecs):
        return None
    cols = matrix(vecs)
    if int_rank([integerize(u) for u in vecs]) != m - 1:
        return None
    # dependency space of the vectors = nullspace of the transposed matrix
    dep = nullspace(tuple(zip(*cols)))
    if len(dep) != 1:
        return None
    c = dep[0]
    if all(x > 0 for x in c):
        coeffs = c
    elif all(x < 0 for x in c):
        coeffs = tuple(-x for x in c)
    else:
        return None
    return SimplicialFamily(tuple(range(m)), vector(integerize(coeffs)))


def enumerate_simplicial(a: DirectionSet, min_size: int) -> list[SimplicialFamily]:
    """All simplicial families of at least `min_size` directions.

    A simplicial family of size m spans m-1 dimensions, so m never exceeds
    rank+1; the search is exhaustive below that bound.  Families come back
    sorted by size, then lexicographically by member indices.
    """
    if min_size < 2:
        raise ValueError("simplicial families have at least 2 members")
    max_size = a.rank() + 1
    found = circuits(a.integer_directions(), min_size, max_size, positive_only=True)
    fams = [
        SimplicialFamily(members, vector(coeffs)) for members, coeffs in found
    ]
    fams.sort(key=lambda f: (f.size, f.members))
    return fams


@dataclass(frozen=True)
class ReliabilityVerdict:
    reliable: bool
    d: int
    certificate: SimplicialFamily | None
    directions: DirectionSet


def search_space(num_directions: int, rank: int, min_size: int) -> int:
    """Number of subsets the exhaustive family search ranges over."""
    return sum(
        comb(num_directions, m) for m in range(min_size, rank + 2)
    )


def is_reliable(body: Polytope | DirectionSet, d: int) -> ReliabilityVerdict:
    """Decide whether the body is a d-reliable cover.

    Reliable exactly when no simplicial family of size >= d+2 exists among
    the facet normals (for a polytope, the normals are taken inside the
    affine hull).  When unreliable, the certificate is the smallest family,
    ties broken lexicographically on member indices.
    """
    a = body if isinstance(body, DirectionSet) else facet_direction_set(body)
    n = a.dim
    if not 1 <= d <= n - 1:
        raise ValueError("reliability needs 1 <= d <= ambient dimension - 1")
    dirs = a.integer_directions()
    max_size = int_rank(dirs) + 1
    # one existence scan over all sizes; only an unreliable verdict needs the
    # follow-up per-size scans to pin down the smallest certificate
    hit = circuits(dirs, d + 2, max_size, positive_only=True, limit=1)
    if not hit:
        return ReliabilityVerdict(True, d, None, a)
    found_size = len(hit[0][0])
    for size in range(d + 2, found_size):
        smaller = circuits(dirs, size, size, positive_only=True, limit=1)
        if smaller:
            hit = smaller
            break
    members, coeffs = hit[0]
    fam = SimplicialFamily(members, vector(coeffs))
    return ReliabilityVerdict(False, d, fam, a)


def parallelotope_check(p: Polytope) -> bool:
    """Whether P is a parallelotope (affine image of a box).

    Checked structurally: exactly 2n facets pairing into n antipodal normal
    pairs with independent directions, and opposite facets being translates
    of each other.  This is deliberately independent of the simplicial-family
    machinery so the two can serve as oracles for one another.
    """
    if not p.is_full_dimensional:
        raise ValueError("parallelotope check needs a full-dimensional polytope")
    n = p.dim
    if len(p.facets) != 2 * n:
        return False
    normals = {tuple(integerize(f.normal)): i for i, f in enumerate(p.facets)}
    if len(normals) != 2 * n:
        return False
    paired = set()
    pair_reps: list[tuple[int, ...]] = []
    for key, idx in normals.items():
        if idx in paired:
            continue
        anti = tuple(-x for x in key)
        if anti not in normals:
            return False
        paired.add(idx)
        paired.add(normals[anti])
        pair_reps.append(max(key, anti))
    if len(pair_reps) != n or int_rank(pair_reps) != n:
        return False
    for key in pair_reps:
        i = normals[key]
        j = normals[tuple(-x for x in key)]
        face_i = hull_from_vertices([p.vertices[v] for v in p.facets[i].incident])
        face_j = hull_from_vertices([p.vertices[v] for v in p.facets[j].incident])
        if translate_of(face_i, face_j) is None:
            return False
    return True
