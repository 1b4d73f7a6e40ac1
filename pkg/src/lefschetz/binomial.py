"""Normal form of matrices whose rows each have exactly two nonzero entries.

Row ``i`` of such a matrix has its diagonal entry and one more entry in column
``j_i != i``.  The map ``i -> j_i`` is a functional graph: every vertex has
out-degree one, so its cycles are vertex-disjoint and every other vertex
drains into exactly one of them.  Ordering the acyclic vertices so that each
comes before its successor, followed by the cycles, and rescaling variables
puts the matrix in block form

    [ B  *  ...  * ]
    [    A_1       ]
    [        ...   ]
    [           A_r]

with ``B`` unit upper triangular and each cycle block ``A_k`` equal to the
identity, ``-1`` right above the diagonal, and a single scalar ``a`` in the
bottom-left corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .constructions import MatrixIdealSpec, change_of_variables, matrix_ideal, principal_minors
from .field import as_element
from .polynomial import Polynomial


class RowShapeViolation(ValueError):
    """A row does not consist of a nonzero diagonal entry plus one off-diagonal entry."""


class SingularMinor(ValueError):
    """Some principal minor vanishes."""


@dataclass(frozen=True)
class CycleBlock:
    """One cycle of the successor graph, in new coordinates."""

    positions: tuple  # new variable positions (0-based), in cycle order
    rows: tuple  # the corresponding original row indices (0-based)
    corner: object  # the scalar a in the bottom-left corner

    @property
    def size(self) -> int:
        return len(self.positions)

    def thm12_parameters(self, d: Sequence[int]) -> tuple[tuple, object]:
        """``(d, a)`` such that the block ideal is ``thm12_ideal(d, a)`` in the
        block's own variables; ``d`` is indexed by original rows."""
        ds = [d[r] for r in self.rows]
        return (ds[-1],) + tuple(ds[:-1]), -self.corner


@dataclass(frozen=True)
class BinomialDecomposition:
    permutation: tuple  # new position k holds original variable permutation[k]
    scalings: tuple  # x_{permutation[k]} -> scalings[k] * x_k
    blocks: tuple  # CycleBlock, sorted by smallest original row index
    acyclic_size: int
    acyclic_part: tuple  # the n0 x n0 unit upper triangular block B
    matrix: tuple  # the full transformed, row-normalised matrix
    successor: tuple  # j_i for every original row i

    @property
    def n(self) -> int:
        return len(self.permutation)

    def transform(self) -> list[list[Fraction]]:
        """Matrix ``T`` for :func:`change_of_variables` realising the coordinate change."""
        n = self.n
        T = [[Fraction(0)] * n for _ in range(n)]
        for k, (old, lam) in enumerate(zip(self.permutation, self.scalings)):
            T[old][k] = lam
        return T

    def permuted_d(self, d: Sequence[int]) -> tuple:
        return tuple(d[old] for old in self.permutation)

    def block_ideal(self, d: Sequence[int]) -> list[Polynomial]:
        """The ideal ``I_{A', d'}`` of the block-form matrix."""
        return matrix_ideal(MatrixIdealSpec(self.matrix, self.permuted_d(d)))

    def transformed_ideal(self, A: Sequence[Sequence], d: Sequence[int]) -> list[Polynomial]:
        """``I_{A,d}`` after the permutation and scaling of variables."""
        return change_of_variables(matrix_ideal(MatrixIdealSpec(tuple(map(tuple, A)), tuple(d))), self.transform())

    def extension_binomials(self, d: Sequence[int]) -> list[Polynomial]:
        """Generators for the acyclic rows: binomials monic in their own variable."""
        return self.block_ideal(d)[: self.acyclic_size]


def _successors(A) -> list[int]:
    succ = []
    for i, row in enumerate(A):
        nz = [j for j, x in enumerate(row) if x]
        if len(nz) != 2 or not row[i]:
            raise RowShapeViolation(
                f"row {i + 1} must have a nonzero diagonal entry and exactly one other nonzero entry"
            )
        succ.append(nz[0] if nz[1] == i else nz[1])
    return succ


def decompose_binomial_matrix(A: Sequence[Sequence]) -> BinomialDecomposition:
    A = [[as_element(x) for x in row] for row in A]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("A must be square")
    succ = _successors(A)
    if not all(principal_minors(A)):
        raise SingularMinor("A has a vanishing principal minor")

    # cycles of the functional graph i -> succ[i]
    on_cycle: dict[int, int] = {}
    cycles: list[list[int]] = []
    state = [0] * n  # 0 unseen, 1 on current path, 2 done
    for start in range(n):
        path = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = succ[v]
        if state[v] == 1:
            cyc = path[path.index(v):]
            low = cyc.index(min(cyc))
            cyc = cyc[low:] + cyc[:low]
            for u in cyc:
                on_cycle[u] = len(cycles)
            cycles.append(cyc)
        for u in path:
            state[u] = 2
    cycles.sort(key=min)

    # distance of acyclic vertices to their cycle; farther vertices go first
    depth = {v: 0 for v in on_cycle}
    for v in range(n):
        chain = []
        while v not in depth:
            chain.append(v)
            v = succ[v]
        base = depth[v]
        for u in reversed(chain):
            base += 1
            depth[u] = base

    acyclic = [v for v in range(n) if v not in on_cycle]
    acyclic.sort(key=lambda v: (-depth[v], v))

    perm = list(acyclic)
    scal = [Fraction(1)] * len(acyclic)
    blocks_raw = []
    for cyc in cycles:
        start = len(perm)
        lam = [Fraction(1)]
        for t in range(len(cyc) - 1):
            i, j = cyc[t], cyc[t + 1]
            b = A[i][j] / A[i][i]
            lam.append(-lam[t] / b)
        perm += cyc
        scal += lam
        blocks_raw.append((tuple(range(start, start + len(cyc))), tuple(cyc)))

    M = []
    for k, old in enumerate(perm):
        diag = A[old][old] * scal[k]
        M.append(tuple(A[old][perm[l]] * scal[l] / diag for l in range(n)))

    blocks = []
    for positions, rows in blocks_raw:
        corner = M[positions[-1]][positions[0]]
        blocks.append(CycleBlock(positions, rows, corner))
    n0 = len(acyclic)
    B = tuple(tuple(M[i][:n0]) for i in range(n0))
    return BinomialDecomposition(
        permutation=tuple(perm),
        scalings=tuple(scal),
        blocks=tuple(blocks),
        acyclic_size=n0,
        acyclic_part=B,
        matrix=tuple(M),
        successor=tuple(succ),
    )
