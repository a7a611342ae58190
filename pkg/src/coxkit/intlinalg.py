"""Exact integer linear algebra: Smith normal form and homology of chain complexes.

Everything here is arbitrary-precision integer arithmetic; no floating point
is used anywhere.  Matrices are stored sparsely (dict of rows) because the
boundary matrices produced elsewhere in this package are large but very
sparse, and Smith reduction with unit pivots barely fills them in.
"""

from dataclasses import dataclass


class IntMatrix:
    """An exact integer matrix.

    Entries are arbitrary-precision Python ints.  Internally only nonzero
    entries are stored, but the matrix behaves like a dense ``rows x cols``
    array of integers.

    >>> M = IntMatrix.from_dense([[2, 0], [0, 3]])
    >>> M.entry(1, 1)
    3
    >>> smith_normal_form(M)
    [1, 6]
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, entries=()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        data = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for (r, c), v in items:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) outside {rows}x{cols} matrix")
            if not isinstance(v, int):
                raise ValueError(f"entry ({r},{c}) is {type(v).__name__}, "
                                 "not an exact integer")
            if v:
                data[r, c] = v
        self._data = data

    @classmethod
    def from_dense(cls, dense_rows):
        rows = len(dense_rows)
        cols = len(dense_rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(dense_rows):
            if len(row) != cols:
                raise ValueError("ragged rows in dense matrix")
            for c, v in enumerate(row):
                if v:
                    entries[r, c] = v
        return cls(rows, cols, entries)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def entry(self, r, c):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError((r, c))
        return self._data.get((r, c), 0)

    def to_dense(self):
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._data.items():
            dense[r][c] = v
        return dense

    def items(self):
        """Iterate over ``((row, col), value)`` for the nonzero entries."""
        return self._data.items()

    def nnz(self):
        return len(self._data)

    def is_zero(self):
        return not self._data

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         {(c, r): v for (r, c), v in self._data.items()})

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        rows_self = {}
        for (r, c), v in self._data.items():
            rows_self.setdefault(r, []).append((c, v))
        rows_other = {}
        for (r, c), v in other._data.items():
            rows_other.setdefault(r, []).append((c, v))
        out = {}
        for r, items in rows_self.items():
            acc = {}
            for k, v in items:
                for c, w in rows_other.get(k, ()):
                    acc[c] = acc.get(c, 0) + v * w
            for c, v in acc.items():
                if v:
                    out[r, c] = v
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == \
            (other.rows, other.cols, other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._data.items())))

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


def _factorint(n):
    """Prime factorisation of ``n >= 1`` by trial division (values here are tiny)."""
    factors = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: free rank plus invariant factors.

    ``torsion`` is the tuple of invariant factors, each >= 2 and each
    dividing the next, so e.g. Z^2 + Z/2 + Z/6 is
    ``HomologyGroup(betti=2, torsion=(2, 6))``.
    """

    betti: int
    torsion: tuple = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("betti number must be non-negative")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficient {t} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion coefficients {a}, {b} not in "
                                 "divisibility order")

    def is_trivial(self):
        return self.betti == 0 and not self.torsion

    def elementary_divisors(self):
        """Sorted multiset of prime-power cyclic summand orders."""
        divisors = []
        for t in self.torsion:
            for p, e in _factorint(t).items():
                divisors.append(p ** e)
        return sorted(divisors)

    def direct_sum(self, other):
        return direct_sum([self, other])

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def direct_sum(groups):
    """Direct sum of finitely generated abelian groups, re-normalised.

    The invariant factors of a direct sum are not the concatenation of the
    summands' factors (Z/2 + Z/3 = Z/6), so we split everything into
    prime-power elementary divisors and reassemble the divisibility chain.
    """
    betti = 0
    by_prime = {}
    for g in groups:
        betti += g.betti
        for t in g.torsion:
            for p, e in _factorint(t).items():
                by_prime.setdefault(p, []).append(e)
    chains = []
    for p, exps in by_prime.items():
        exps.sort(reverse=True)
        chains.append([p ** e for e in exps])
    depth = max((len(c) for c in chains), default=0)
    factors = []
    for k in range(depth):
        d = 1
        for chain in chains:
            if k < len(chain):
                d *= chain[k]
        factors.append(d)
    return HomologyGroup(betti, tuple(reversed(factors)))


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

class _Reduction:
    """Working state for Smith reduction of a sparse matrix.

    Rows and columns keep their original labels throughout; pivoting removes
    a label from the active sets instead of permuting.  When ``track_left``
    (``track_right``) is set, every row (column) operation is mirrored on an
    accumulated unimodular transform.
    """

    def __init__(self, mat, track_left=False, track_right=False):
        self.nrows = mat.rows
        self.ncols = mat.cols
        self.row = {}
        self.colrows = {}
        for (r, c), v in mat.items():
            self.row.setdefault(r, {})[c] = v
            self.colrows.setdefault(c, set()).add(r)
        self.active_rows = set(range(self.nrows))
        self.active_cols = set(range(self.ncols))
        self.left = ({r: {r: 1} for r in range(self.nrows)}
                     if track_left else None)
        self.right = ({c: {c: 1} for c in range(self.ncols)}
                      if track_right else None)
        self.pivots = []            # (row, col, divisor) in elimination order
        # queue of likely unit pivots, validated lazily on pop
        self.unit_queue = [(r, c) for (r, c), v in mat.items()
                           if v == 1 or v == -1]

    def get(self, r, c):
        return self.row.get(r, {}).get(c, 0)

    def _set(self, r, c, v):
        rowmap = self.row.setdefault(r, {})
        if v:
            if c not in rowmap:
                self.colrows.setdefault(c, set()).add(r)
                if v == 1 or v == -1:
                    self.unit_queue.append((r, c))
            elif v == 1 or v == -1:
                self.unit_queue.append((r, c))
            rowmap[c] = v
        elif c in rowmap:
            del rowmap[c]
            self.colrows[c].discard(r)

    def add_row(self, src, dst, mult):
        """row[dst] += mult * row[src].

        Active rows never hold entries in inactive (already pivoted)
        columns, so this cannot disturb finished pivots.
        """
        for c, v in list(self.row.get(src, {}).items()):
            self._set(dst, c, self.get(dst, c) + mult * v)
        if self.left is not None:
            lsrc = self.left[src]
            ldst = self.left[dst]
            for k, v in lsrc.items():
                w = ldst.get(k, 0) + mult * v
                if w:
                    ldst[k] = w
                else:
                    del ldst[k]

    def add_col(self, src, dst, mult):
        """col[dst] += mult * col[src]."""
        for r in list(self.colrows.get(src, ())):
            self._set(r, dst, self.get(r, dst) + mult * self.row[r][src])
        if self.right is not None:
            rsrc = self.right[src]
            rdst = self.right[dst]
            for k, v in rsrc.items():
                w = rdst.get(k, 0) + mult * v
                if w:
                    rdst[k] = w
                else:
                    del rdst[k]

    def negate_row(self, r):
        for c in self.row.get(r, {}):
            self.row[r][c] = -self.row[r][c]
        if self.left is not None:
            for k in self.left[r]:
                self.left[r][k] = -self.left[r][k]

    def active_entries(self):
        for r in self.active_rows:
            for c, v in self.row.get(r, {}).items():
                if c in self.active_cols:
                    yield r, c, v

    def pick_pivot(self):
        """Choose a pivot among active entries.

        Prefers entries equal to +-1 (no coefficient growth, cheap
        elimination), breaking ties by an approximate Markowitz fill count;
        falls back to the smallest-magnitude entry otherwise.
        """
        best = None
        seen = 0
        while self.unit_queue and seen < 24:
            r, c = self.unit_queue.pop()
            if r not in self.active_rows or c not in self.active_cols:
                continue
            v = self.get(r, c)
            if v != 1 and v != -1:
                continue
            seen += 1
            fill = (len(self.row[r]) - 1) * (len(self.colrows[c]) - 1)
            if best is None or fill < best[0]:
                if best is not None:
                    self.unit_queue.append(best[1:])
                best = (fill, r, c)
            else:
                self.unit_queue.append((r, c))
            if fill == 0:
                break
        if best is not None:
            return best[1], best[2]
        self.unit_queue.clear()
        best_val = None
        for r, c, v in self.active_entries():
            a = -v if v < 0 else v
            if best_val is None or a < best_val:
                best_val = a
                best = (r, c)
                if a == 1:
                    break
        return best

    def clear_pivot(self, r, c):
        """Euclidean elimination making (r, c) the only active entry in its
        row and column; returns the final pivot position."""
        while True:
            pivot = self.get(r, c)
            # clear the column by row operations
            changed = True
            while changed:
                changed = False
                for r2 in list(self.colrows.get(c, ())):
                    if r2 == r or r2 not in self.active_rows:
                        continue
                    v = self.get(r2, c)
                    q = v // pivot
                    if q:
                        self.add_row(r, r2, -q)
                    if self.get(r2, c):
                        # remainder smaller than |pivot|: make it the pivot
                        r = r2
                        pivot = self.get(r, c)
                        changed = True
                        break
            # clear the row by column operations
            col_dirty = False
            for c2 in list(self.row.get(r, {})):
                if c2 == c or c2 not in self.active_cols:
                    continue
                v = self.get(r, c2)
                q = v // pivot
                if q:
                    self.add_col(c, c2, -q)
                if self.get(r, c2):
                    c = c2
                    col_dirty = True
                    break
            if not col_dirty:
                return r, c

    def _find_nondivisible(self, d):
        for r in self.active_rows:
            for c, v in self.row.get(r, {}).items():
                if c in self.active_cols and v % d:
                    return r
        return None

    def run(self):
        """Full reduction; afterwards ``pivots`` holds the invariant factors
        in divisibility order."""
        while True:
            found = self.pick_pivot()
            if found is None:
                break
            r, c = self.clear_pivot(*found)
            if self.get(r, c) < 0:
                self.negate_row(r)
            d = self.get(r, c)
            if d != 1:
                # enforce d | (every remaining entry): fold an offending row
                # into the pivot row and re-clear, shrinking the pivot
                while True:
                    bad = self._find_nondivisible(d)
                    if bad is None:
                        break
                    self.add_row(bad, r, 1)
                    r, c = self.clear_pivot(r, c)
                    if self.get(r, c) < 0:
                        self.negate_row(r)
                    d = self.get(r, c)
            self.pivots.append((r, c, d))
            self.active_rows.discard(r)
            self.active_cols.discard(c)


def smith_normal_form(mat):
    """Invariant factors d1 | d2 | ... | dr of an integer matrix.

    The length of the result is the rank of ``mat`` over the rationals; the
    zero (and empty) matrix gives ``[]``.

    >>> smith_normal_form(IntMatrix.from_dense([[2, 0], [0, 3]]))
    [1, 6]
    >>> smith_normal_form(IntMatrix.from_dense([[0]]))
    []
    """
    red = _Reduction(mat)
    red.run()
    return [d for (_, _, d) in red.pivots]


def rank(mat):
    """Rank of an integer matrix over the rationals."""
    return len(smith_normal_form(mat))


class LeftReduction:
    """Smith reduction of ``mat`` that remembers the left transform.

    After construction, ``U mat V = D`` for unimodular U, V with
    ``D = diag(factors)`` in the row order: pivot rows first (in factor
    order), then the remaining rows sorted by original index.  Only U is
    materialised; it is exactly what is needed to read off coordinates in
    the cokernel ``Z^rows / colspan(mat)``:

    for ``y = U z`` the class of ``z`` has component ``y[k] mod factors[k]``
    for ``k < rank`` and free component ``y[k]`` for ``k >= rank``.
    """

    def __init__(self, mat):
        red = _Reduction(mat, track_left=True)
        red.run()
        self.factors = [d for (_, _, d) in red.pivots]
        self.rank = len(self.factors)
        order = [r for (r, _, _) in red.pivots]
        seen = set(order)
        order.extend(r for r in range(mat.rows) if r not in seen)
        self.rows = mat.rows
        self._u_rows = [red.left[r] for r in order]

    def apply(self, vec):
        """U @ vec for a sparse vector given as {index: value}."""
        out = []
        for urow in self._u_rows:
            s = 0
            if len(vec) < len(urow):
                for k, v in vec.items():
                    w = urow.get(k)
                    if w:
                        s += w * v
            else:
                for k, w in urow.items():
                    v = vec.get(k)
                    if v:
                        s += w * v
            out.append(s)
        return out

    def cokernel_class(self, vec):
        """Coordinates of ``vec`` in the cokernel: torsion components
        reduced mod their factor, then the free components."""
        y = self.apply(vec)
        tors = tuple(y[k] % self.factors[k] for k in range(self.rank))
        return tors, tuple(y[self.rank:])

    def as_matrix(self):
        entries = {}
        for i, urow in enumerate(self._u_rows):
            for k, v in urow.items():
                entries[i, k] = v
        return IntMatrix(self.rows, self.rows, entries)


def smith_normal_form_with_transforms(mat):
    """(factors, U, V) with ``U @ mat @ V`` diagonal.

    U and V follow the same row/column order convention as
    :class:`LeftReduction`.  Intended for verification; the plain
    :func:`smith_normal_form` is faster when transforms are not needed.
    """
    red = _Reduction(mat, track_left=True, track_right=True)
    red.run()
    factors = [d for (_, _, d) in red.pivots]
    row_order = [r for (r, _, _) in red.pivots]
    seen = set(row_order)
    row_order.extend(r for r in range(mat.rows) if r not in seen)
    col_order = [c for (_, c, _) in red.pivots]
    seen = set(col_order)
    col_order.extend(c for c in range(mat.cols) if c not in seen)
    u_entries = {}
    for i, r in enumerate(row_order):
        for k, v in red.left[r].items():
            u_entries[i, k] = v
    v_entries = {}
    for j, c in enumerate(col_order):
        for k, v in red.right[c].items():
            v_entries[k, j] = v
    return (factors,
            IntMatrix(mat.rows, mat.rows, u_entries),
            IntMatrix(mat.cols, mat.cols, v_entries))


# ---------------------------------------------------------------------------
# Chain-complex homology
# ---------------------------------------------------------------------------

class ChainComplexError(ValueError):
    """The supplied boundary maps do not form a chain complex."""


def chain_homology(boundaries):
    """Homology groups of a finite chain complex of free abelian groups.

    ``boundaries[k]`` is the boundary map from degree-k chains to
    degree-(k-1) chains, so it must have ``boundaries[k-1].cols`` rows
    (degree -1 is the zero module: ``boundaries[0]`` has 0 rows).  The
    boundary above the top degree is taken to be zero.

    Raises :class:`ChainComplexError` if consecutive maps fail to compose
    to zero or dimensions are inconsistent; either signals a bug in the
    caller's complex builder.
    """
    n = len(boundaries)
    for k in range(1, n):
        if boundaries[k].rows != boundaries[k - 1].cols:
            raise ChainComplexError(
                f"boundary {k} has {boundaries[k].rows} rows but degree "
                f"{k - 1} has dimension {boundaries[k - 1].cols}")
        if not (boundaries[k - 1] @ boundaries[k]).is_zero():
            raise ChainComplexError(f"boundary maps {k - 1} and {k} do not "
                                    "compose to zero")
    factors = [smith_normal_form(b) for b in boundaries]
    factors.append([])  # zero map above the top degree
    groups = []
    for k in range(n):
        dim_k = boundaries[k].cols
        betti = dim_k - len(factors[k]) - len(factors[k + 1])
        torsion = tuple(d for d in factors[k + 1] if d > 1)
        groups.append(HomologyGroup(betti, torsion))
    return groups
