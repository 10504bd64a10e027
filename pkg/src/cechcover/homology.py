"""Mod-2 boundary matrices, Betti numbers, and per-vertex overlap indices.

Betti numbers come from the rank decomposition
    beta_k = |S_k| - rank(boundary_k) - rank(boundary_{k+1}),
with rank(boundary_0) defined as 0.  Working over GF(2) drops orientation
signs; disk complexes in the plane are torsion-free, so the mod-2 Betti
numbers equal the integral ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import LevelNotBuiltError, Simplex, SimplicialComplex


@dataclass(frozen=True)
class BoundaryMatrix:
    """GF(2) incidence between (k-1)-simplices (rows) and k-simplices (cols).

    Both index orders are the lexicographic level orders of the complex;
    entry (f, s) is 1 iff f is a face of s, so every column of the
    dimension-k matrix carries exactly k+1 ones.
    """

    k: int
    rows: tuple[Simplex, ...]
    cols: tuple[Simplex, ...]
    matrix: np.ndarray  # uint8, shape (len(rows), len(cols))


def boundary_matrix(cx: SimplicialComplex, k: int) -> BoundaryMatrix:
    """Boundary operator from dimension k to k-1 as a dense 0/1 matrix."""
    if k < 1:
        raise ValueError(f"boundary matrices are defined for k >= 1, got {k}")
    rows = cx.level(k - 1)
    cols = cx.level(k)
    row_index = {s: i for i, s in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for j, simplex in enumerate(cols):
        for drop in range(len(simplex)):
            face = simplex[:drop] + simplex[drop + 1:]
            m[row_index[face], j] = 1
    return BoundaryMatrix(k=k, rows=rows, cols=cols, matrix=m)


def gf2_rank(m: np.ndarray) -> int:
    """Rank over GF(2) by Gaussian elimination with XOR row updates."""
    a = np.array(m, dtype=np.uint8, copy=True)
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = rank + int(np.argmax(a[rank:, col]))
        if a[pivot, col] == 0:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        below = np.nonzero(a[rank + 1:, col])[0]
        if below.size:
            a[rank + 1 + below] ^= a[rank]
        rank += 1
    return rank


@dataclass(frozen=True)
class HomologyReport:
    """Betti numbers, boundary ranks, level sizes, and vertex indices.

    betti[k] is computed for k = 0..up_to.  ranks[k] is rank(boundary_k)
    for k = 0..up_to+1 (ranks[0] is 0 by convention).  A vertex whose index
    equals the construction cap with the top level still populated is only
    known to be >= that value; `vertex_index_capped` marks those.
    """

    betti: tuple[int, ...]
    level_sizes: tuple[int, ...]
    ranks: tuple[int, ...]
    vertex_indices: tuple[int, ...]
    vertex_index_capped: tuple[bool, ...]

    def __post_init__(self):
        for k, b in enumerate(self.betti):
            expected = self._size(k) - self.ranks[k] - self.ranks[k + 1]
            if b != expected or b < 0:
                raise ValueError(f"inconsistent betti[{k}] = {b}")

    def _size(self, k: int) -> int:
        return self.level_sizes[k] if k < len(self.level_sizes) else 0


def betti_numbers(cx: SimplicialComplex, up_to: int) -> HomologyReport:
    """Betti numbers beta_0..beta_up_to plus vertex indices for cx.

    Requires rank(boundary_{up_to+1}), so the complex must either be built
    past up_to or be complete (higher levels known empty); asking beyond
    what was built raises LevelNotBuiltError rather than returning a
    silently truncated answer.
    """
    if up_to < 0:
        raise ValueError(f"up_to must be >= 0, got {up_to}")
    if cx.dmax is not None and up_to > cx.dmax - 1:
        raise LevelNotBuiltError(
            f"beta_{up_to} needs level {up_to + 1}, beyond the dmax={cx.dmax} cap"
        )

    ranks = [0]
    for k in range(1, up_to + 2):
        if len(cx.level(k)) == 0:
            ranks.append(0)
        else:
            ranks.append(gf2_rank(boundary_matrix(cx, k).matrix))

    sizes = cx.level_sizes()
    betti = tuple(
        (sizes[k] if k < len(sizes) else 0) - ranks[k] - ranks[k + 1]
        for k in range(up_to + 1)
    )
    faces = _face_sets(cx)
    indices = tuple(
        _vertex_index_with_faces(cx, v, faces) for v in range(cx.n_vertices)
    )
    capped = tuple(
        cx.dmax is not None and not cx.complete and idx == cx.dmax
        for idx in indices
    )
    return HomologyReport(
        betti=betti,
        level_sizes=sizes,
        ranks=tuple(ranks),
        vertex_indices=indices,
        vertex_index_capped=capped,
    )


def _face_sets(cx: SimplicialComplex) -> list[set[Simplex]]:
    """faces[i] = every (i-1)-simplex that is a face of some i-simplex."""
    faces: list[set[Simplex]] = [set()]
    for level in cx.levels[1:]:
        covered: set[Simplex] = set()
        for simplex in level:
            for drop in range(len(simplex)):
                covered.add(simplex[:drop] + simplex[drop + 1:])
        faces.append(covered)
    return faces


def _vertex_index_with_faces(
    cx: SimplicialComplex, v: int, faces: list[set[Simplex]]
) -> int:
    index = 0
    for i in range(1, len(cx.levels)):
        # A simplex containing v lies inside any of its cofaces, so the
        # coface automatically contains v too; plain face-coverage suffices.
        lower = (s for s in cx.levels[i - 1] if v in s)
        if not all(s in faces[i] for s in lower):
            break
        index = i
    return index


def vertex_index(cx: SimplicialComplex, v: int) -> int:
    """Largest k such that, for every i <= k, each (i-1)-simplex containing v
    is a face of at least one i-simplex containing v.

    An isolated vertex has index 0.  The value is capped at the built
    dimension; when the cap binds (top level nonempty at dmax) the true
    index may be larger.
    """
    if not 0 <= v < cx.n_vertices:
        raise ValueError(f"unknown vertex {v}")
    return _vertex_index_with_faces(cx, v, _face_sets(cx))
