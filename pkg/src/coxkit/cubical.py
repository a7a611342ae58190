"""The cubical model of a simplicial complex inside [-1, 1]^m.

For a complex K on [m], the model is the union, over faces I of K, of the
faces of the cube [-1, 1]^m whose free coordinates are exactly I and whose
remaining coordinates are pinned to +-1.  Each face I with k vertices
contributes 2^(m-k) k-dimensional cells.  The 1-skeleton is always the full
cube graph (every singleton is a face), so the model is connected and words
in the associated Coxeter group trace edge paths on it: the letter g_i walks
along the axis-i edge at the current corner.

This gives exact, independently computable invariants against which the
group-theoretic layer is verified: cellular homology, the Euler
characteristic, an edge-path fundamental-group presentation, and first
homology classes of word loops.
"""

from collections import deque
from dataclasses import dataclass, field

from .commutators import enumerate_generators, generator_count
from .intlinalg import (HomologyGroup, IntMatrix, LeftReduction,
                        chain_homology, direct_sum, smith_normal_form)
from .simplicial import _bits, _popcount, reduced_homology
from .words import GroupSpec, abelianization

MAX_CUBE_VERTICES = 12


class CubeComplex:
    """Cubical cell structure of the model of a complex K in [-1, 1]^m.

    A k-cell is a pair (free, signs): ``free`` is the bitmask of a k-vertex
    face of K and ``signs`` assigns +-1 (bit set = +1) to the coordinates
    outside ``free``.  Cells are listed per dimension, ordered by (free,
    signs), and the boundary of a cell with free set {i_1 < ... < i_k} is
    the alternating sum over t of (cell with i_t pinned to +1) minus (cell
    with i_t pinned to -1), with sign (-1)^(t-1).
    """

    def __init__(self, K):
        if K.m > MAX_CUBE_VERTICES:
            raise ValueError(f"m = {K.m} too large for the cubical model "
                             f"(cap {MAX_CUBE_VERTICES})")
        self.K = K
        self.m = K.m
        # a face with k vertices spans k-dimensional cube faces, so the cell
        # dimensions run up to (simplicial dimension + 1)
        self.dim = K.dim() + 1
        self._cells = None
        self._boundaries = None
        self._homology = None
        self._loops = None

    @classmethod
    def build(cls, K):
        return cls(K)

    @property
    def cells(self):
        if self._cells is None:
            full = (1 << self.m) - 1
            cells = []
            for k in range(self.dim + 1):
                level = []
                for free in self.K.faces_of_size(k):
                    rest = full & ~free
                    sub = rest
                    signs_list = []
                    while True:
                        signs_list.append(sub)
                        if sub == 0:
                            break
                        sub = (sub - 1) & rest
                    for signs in sorted(signs_list):
                        level.append((free, signs))
                cells.append(level)
            self._cells = cells
        return self._cells

    @property
    def boundaries(self):
        if self._boundaries is None:
            cells = self.cells
            index = [{cell: i for i, cell in enumerate(level)}
                     for level in cells]
            boundaries = [IntMatrix.zero(0, len(cells[0]))]
            for k in range(1, self.dim + 1):
                entries = {}
                for col, (free, signs) in enumerate(cells[k]):
                    sign = 1
                    for i in _bits(free):
                        smaller = free & ~(1 << i)
                        plus = signs | (1 << i)
                        entries[index[k - 1][smaller, plus], col] = sign
                        entries[index[k - 1][smaller, signs], col] = -sign
                        sign = -sign
                boundaries.append(
                    IntMatrix(len(cells[k - 1]), len(cells[k]), entries))
            self._boundaries = boundaries
        return self._boundaries

    def cell_counts(self):
        """Cells per dimension: each face with k vertices carries a cube
        face for every sign pattern on the other m - k coordinates."""
        counts = [0] * (self.dim + 1)
        for f in self.K.faces:
            k = _popcount(f)
            counts[k] += 1 << (self.m - k)
        return counts

    def euler_characteristic(self):
        chi = 0
        for k, count in enumerate(self.cell_counts()):
            chi += count if k % 2 == 0 else -count
        return chi

    def homology(self):
        """Exact integral cellular homology, one group per degree 0..dim."""
        if self._homology is None:
            self._homology = chain_homology(self.boundaries)
        return self._homology

    def loop_system(self):
        if self._loops is None:
            self._loops = _LoopSystem(self)
        return self._loops


def build(K):
    """The cubical model of ``K`` (vertex count capped at 12)."""
    return CubeComplex(K)


def euler_characteristic(R):
    return R.euler_characteristic()


def homology(R):
    return R.homology()


# ---------------------------------------------------------------------------
# Degree-by-degree comparison against the full-subcomplex decomposition
# ---------------------------------------------------------------------------

@dataclass
class SplittingRow:
    degree: int
    left: HomologyGroup
    right: HomologyGroup
    contributions: list = field(default_factory=list)

    @property
    def equal(self):
        return (self.left.betti == self.right.betti and
                self.left.elementary_divisors()
                == self.right.elementary_divisors())


@dataclass
class SplittingReport:
    passed: bool
    rows: list

    def __bool__(self):
        return self.passed


def homology_splitting_check(K, max_m=10):
    """Compare the cubical model's homology with the direct sum, over all
    vertex subsets J, of the reduced homology of K restricted to J shifted
    up by one degree.  The two sides are computed by entirely independent
    code paths and must agree (Betti numbers and torsion) in every degree.
    """
    if K.m > max_m:
        raise ValueError(f"m = {K.m} too large for the splitting check")
    left = CubeComplex(K).homology()
    per_degree = [[] for _ in range(K.m + 1)]
    for mask in range(1 << K.m):
        J = [i + 1 for i in _bits(mask)]
        sub = K.full_subcomplex(J)
        reduced = reduced_homology(sub)
        for idx, group in enumerate(reduced):
            degree = idx       # reduced degree idx-1 contributes to idx
            if degree <= K.m and not group.is_trivial():
                per_degree[degree].append((tuple(J), group))
    rows = []
    for k in range(K.m + 1):
        left_k = left[k] if k < len(left) else HomologyGroup(0)
        right_k = direct_sum([g for (_, g) in per_degree[k]])
        rows.append(SplittingRow(k, left_k, right_k, per_degree[k]))
    return SplittingReport(all(r.equal for r in rows), rows)


# ---------------------------------------------------------------------------
# Edge loops, fundamental group data and first-homology coordinates
# ---------------------------------------------------------------------------

class _LoopSystem:
    """Spanning-tree and first-homology bookkeeping for the 1-skeleton.

    The 1-skeleton is the full cube graph on sign vectors.  A spanning tree
    is grown breadth-first from the all-plus corner, trying axes in
    increasing order.  An edge is (axis, signs-of-the-other-coordinates)
    and is oriented from its -1 endpoint to its +1 endpoint.  Cycle-space
    coordinates of a loop are its signed traversal counts on non-tree
    edges; first-homology coordinates follow by reducing modulo the image
    of the 2-cell boundaries via a Smith left transform.
    """

    def __init__(self, R):
        self.R = R
        m = R.m
        base = (1 << m) - 1
        self.basepoint = base
        parent = {base: None}
        order = deque([base])
        tree = set()
        while order:
            v = order.popleft()
            for axis in range(m):
                w = v ^ (1 << axis)
                if w not in parent:
                    parent[w] = v
                    tree.add((axis, v & ~(1 << axis)))
                    order.append(w)
        self.tree_edges = tree
        edge_cells = R.cells[1] if len(R.cells) > 1 else []
        self.nontree = []
        self.nontree_index = {}
        for free, signs in edge_cells:
            axis = free.bit_length() - 1
            if (axis, signs) not in tree:
                self.nontree_index[axis, signs] = len(self.nontree)
                self.nontree.append((axis, signs))
        self.rank_cycles = len(self.nontree)    # = E - V + 1
        # relator matrix: 2-cell boundaries restricted to non-tree rows
        two_cells = R.cells[2] if len(R.cells) > 2 else []
        entries = {}
        if two_cells:
            d2 = R.boundaries[2]
            edge_list = R.cells[1]
            for (r, c), v in d2.items():
                key = (edge_list[r][0].bit_length() - 1, edge_list[r][1])
                idx = self.nontree_index.get(key)
                if idx is not None:
                    entries[idx, c] = v
        self.relators = IntMatrix(self.rank_cycles, len(two_cells), entries)
        self.reduction = LeftReduction(self.relators)
        if any(d > 1 for d in self.reduction.factors):
            raise AssertionError(
                "unexpected torsion in degree-1 homology of a cubical model")
        self.betti1 = self.rank_cycles - self.reduction.rank

    def class_of_cycle(self, vec):
        """First-homology coordinates of a cycle given by its sparse
        non-tree-edge traversal counts."""
        torsion, free = self.reduction.cokernel_class(vec)
        if any(torsion):
            raise ValueError("vector is not a cycle class representative")
        return free


@dataclass
class Pi1Presentation:
    """Raw edge-path presentation of the fundamental group: one generator
    per non-tree edge of the 1-skeleton, one relator per 2-cell."""

    generators: list                 # non-tree edges (axis, signs)
    relators: list                   # tuples of signed 1-based generator ids
    abelianized_rank: int

    @property
    def generator_count(self):
        return len(self.generators)

    @property
    def relator_count(self):
        return len(self.relators)


def fundamental_group_presentation(R):
    """Presentation read off the 2-skeleton: spanning-tree edges collapse,
    each square contributes the word of its boundary path."""
    loops = R.loop_system()
    relators = []
    if len(R.cells) > 2:
        for free, signs in R.cells[2]:
            lo = free & -free
            hi = free & ~lo
            i = lo.bit_length() - 1
            j = hi.bit_length() - 1
            # walk the square from its (-,-) corner:
            #   +i at j=-1, +j at i=+1, -i at j=+1, -j at i=-1
            path = [(i, signs, 1), (j, signs | lo, 1),
                    (i, signs | hi, -1), (j, signs, -1)]
            word = []
            for axis, rest, direction in path:
                idx = loops.nontree_index.get((axis, rest))
                if idx is not None:
                    word.append(direction * (idx + 1))
            relators.append(tuple(word))
    return Pi1Presentation(list(loops.nontree), relators, loops.betti1)


def word_to_loop(R, w, spec):
    """The closed edge path traced by ``w`` from the all-plus corner.

    Requires every generator order to be 2 and the exponent sum of ``w``
    to vanish mod 2 in each coordinate (otherwise the path does not
    close).  Letters traverse the axis edge at the current corner; the
    result is a list of ((axis, signs), direction) steps with direction
    +1 when walking from the -1 endpoint to the +1 endpoint.
    """
    if spec.m != R.m:
        raise ValueError("word group and cubical model have different ranks")
    if not spec.is_coxeter():
        raise ValueError("edge paths need every generator of order 2")
    if any(abelianization(w, spec)):
        raise ValueError("word does not close up: nonzero exponent sum")
    pos = (1 << R.m) - 1
    steps = []
    for v, e in w:
        spec.check_vertex(v)
        if e % 2 == 0:
            continue
        bit = 1 << (v - 1)
        direction = -1 if pos & bit else 1
        steps.append((((v - 1), pos & ~bit), direction))
        pos ^= bit
    return steps


def loop_class(R, steps):
    """First-homology coordinates of a closed edge path."""
    loops = R.loop_system()
    vec = {}
    for edge, direction in steps:
        idx = loops.nontree_index.get(edge)
        if idx is not None:
            vec[idx] = vec.get(idx, 0) + direction
    return loops.class_of_cycle(vec)


def word_class(R, w, spec):
    return loop_class(R, word_to_loop(R, w, spec))


def basis_certificate(K):
    """Whether the commutator generators' loop classes form a basis of the
    first homology of the cubical model.

    Expands every generator to a word, traces it to a loop, collects the
    homology coordinates into an integer matrix, and demands Smith rank
    equal to the generator count with every invariant factor 1, plus
    agreement between the count and the first Betti number.
    """
    if K.m > 10:
        raise ValueError(f"m = {K.m} too large for the basis certificate "
                         "(cap 10)")
    R = CubeComplex(K)
    loops = R.loop_system()
    spec = GroupSpec.coxeter(K.one_skeleton())
    gens = enumerate_generators(K)
    if len(gens) != loops.betti1:
        return False
    entries = {}
    for r, gen in enumerate(gens):
        w = gen.word(spec)
        for c, v in enumerate(word_class(R, w, spec)):
            if v:
                entries[r, c] = v
    mat = IntMatrix(len(gens), loops.betti1, entries)
    factors = smith_normal_form(mat)
    return factors == [1] * len(gens)


def wedge_of_circles_signature(K):
    """(homology vanishes above degree 1, no torsion anywhere,
    betti_1 == generator count == 1 - Euler characteristic)."""
    R = CubeComplex(K)
    hom = R.homology()
    count = generator_count(K)
    higher_trivial = all(h.is_trivial() for h in hom[2:])
    torsion_free = all(not h.torsion for h in hom)
    b1 = hom[1].betti if len(hom) > 1 else 0
    return (higher_trivial and torsion_free and b1 == count
            and count == 1 - R.euler_characteristic())
