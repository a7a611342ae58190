"""The minimal generating set of the commutator subgroup of a right-angled
Coxeter group, read off from the combinatorics of the defining complex.

For a complex K on [m], the commutator subgroup of the associated Coxeter
group is generated by nested iterated commutators

    (g_{k_1}, (g_{k_2}, ... (g_{k_{l-2}}, (g_j, g_i)) ... ))

indexed as follows: for every vertex subset S with |S| >= 2, write
j = max S; every connected component of the restriction K_S that does not
contain j contributes one generator, with i the smallest vertex of that
component and k_1 < ... < k_{l-2} the remaining elements of S.  The total
count is the sum over all subsets J of (number of components of K_J minus
one), i.e. the total rank of the degree-0 reduced homology of all full
subcomplexes, and the set is minimal: the images in the abelianised
commutator subgroup form a basis (see :func:`coxkit.cubical
.basis_certificate` for the machine check).
"""

from collections import deque
from dataclasses import dataclass
from math import comb

from .simplicial import _bits, _popcount, is_chordal, is_flag
from .words import CommutatorExpr, GroupSpec, evaluate


class NotFlagError(ValueError):
    """Raised when an operation requiring a flag complex receives a complex
    with a minimal non-face of three or more vertices (the witness)."""

    def __init__(self, witness):
        super().__init__(f"complex is not flag: minimal non-face "
                         f"{list(witness)} has {len(witness)} vertices")
        self.witness = witness


@dataclass(frozen=True)
class CommutatorGenerator:
    """One nested iterated commutator (g_{k_1}, (..., (g_j, g_i)...)).

    ``ks`` is strictly increasing, below ``j``, and avoids ``i``; ``i < j``.
    ``i`` is the smallest vertex of a component not containing ``j`` of the
    restriction of the complex to ``support``.
    """

    ks: tuple
    j: int
    i: int

    def __post_init__(self):
        if not self.i < self.j:
            raise ValueError("need i < j")
        if any(not a < b for a, b in zip(self.ks, self.ks[1:])):
            raise ValueError("ks must be strictly increasing")
        if self.ks and not self.ks[-1] < self.j:
            raise ValueError("ks must stay below j")
        if self.i in self.ks:
            raise ValueError("i may not appear among the ks")

    @property
    def support(self):
        return tuple(sorted(self.ks + (self.j, self.i)))

    @property
    def length(self):
        return len(self.ks) + 2

    def nested(self):
        """Nested-array form, innermost pair last: (g2,(g4,g1)) -> [2,[4,1]]."""
        expr = [self.j, self.i]
        for k in reversed(self.ks):
            expr = [k, expr]
        return expr

    def expr(self):
        return CommutatorExpr.from_nested(self.nested())

    def word(self, spec):
        """The generator expanded to a normalised word of ``spec``."""
        return evaluate(self.expr(), spec)

    def __str__(self):
        s = f"(g{self.j},g{self.i})"
        for k in reversed(self.ks):
            s = f"(g{k},{s})"
        return s


def _components_masks(K, sub_mask):
    """Connected components of the 1-skeleton restricted to ``sub_mask``,
    as bitmasks in increasing order of smallest vertex."""
    adj = K.one_skeleton().adj
    comps = []
    todo = sub_mask
    while todo:
        start = todo & -todo
        comp = start
        queue = deque([start.bit_length() - 1])
        while queue:
            v = queue.popleft()
            fresh = adj[v] & sub_mask & ~comp
            comp |= fresh
            queue.extend(_bits(fresh))
        comps.append(comp)
        todo &= ~comp
    return comps


def enumerate_generators(K):
    """The commutator-subgroup generators of ``K``, ordered by
    (support size, support mask, i).

    ``K`` need not be flag: only the 1-skeleton matters.

    >>> from coxkit.simplicial import SimplicialComplex
    >>> gens = enumerate_generators(SimplicialComplex.points(3))
    >>> [str(g) for g in gens]
    ['(g2,g1)', '(g3,g1)', '(g3,g2)', '(g2,(g3,g1))', '(g1,(g3,g2))']
    """
    m = K.m
    out = []
    for mask in range(1 << m):
        if _popcount(mask) < 2:
            continue
        j_bit = 1 << (mask.bit_length() - 1)
        j = mask.bit_length()
        j_comp = None
        others = []
        for comp in _components_masks(K, mask):
            if comp & j_bit:
                j_comp = comp
            else:
                others.append(comp)
        assert j_comp is not None
        for comp in others:
            i = (comp & -comp).bit_length()
            ks = tuple(b + 1 for b in _bits(mask & ~(1 << (i - 1)) & ~j_bit))
            out.append((_popcount(mask), mask, i,
                        CommutatorGenerator(ks, j, i)))
    out.sort(key=lambda t: t[:3])
    return [g for (_, _, _, g) in out]


def generator_count(K):
    """Total number of generators, computed without enumerating them:
    the sum over all vertex subsets J of (components of K_J) - 1."""
    m = K.m
    total = 0
    for mask in range(1, 1 << m):
        total += len(_components_masks(K, mask)) - 1
    return total


def per_length_counts(K):
    """How many generators involve l distinct vertices, for each l,
    from the enumeration itself (cross-check against
    :func:`generator_count`)."""
    counts = {}
    for gen in enumerate_generators(K):
        counts[gen.length] = counts.get(gen.length, 0) + 1
    return counts


def free_product_counts(m):
    """Per-length counts for m disjoint points in closed form:
    (l - 1) * C(m, l) generators of length l."""
    return {ell: (ell - 1) * comb(m, ell) for ell in range(2, m + 1)
            if (ell - 1) * comb(m, ell)}


def coxeter_spec(K):
    """The right-angled Coxeter group presented by the 1-skeleton of K."""
    return GroupSpec.coxeter(K.one_skeleton())


def generator_words(K):
    """Every generator expanded to its normalised Coxeter-group word, in
    enumeration order.  Each word is nonempty and has zero abelianisation."""
    spec = coxeter_spec(K)
    return [gen.word(spec) for gen in enumerate_generators(K)]


def commutator_subgroup_is_free(K):
    """Whether the commutator subgroup is a free group: true exactly when
    the 1-skeleton is chordal.  The criterion assumes a flag complex, so
    non-flag input raises :class:`NotFlagError` with a witness."""
    flag, witness = is_flag(K)
    if not flag:
        raise NotFlagError(witness)
    return bool(is_chordal(K.one_skeleton()))
