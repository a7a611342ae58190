"""Words and normal forms in graph products of cyclic groups.

A group here is generated by g_1, ..., g_m where g_i has order o_i (an
integer >= 2, or None for infinite order) and g_i, g_j commute whenever
{i, j} is an edge of a given graph.  All orders 2 gives a right-angled
Coxeter group, all orders infinite a right-angled Artin group.

Words are tuples of (vertex, exponent) letters, vertices 1-based.  The
normal form of an element is its shortest, lexicographically least word:
first the word is fully reduced (adjacent same-vertex letters merge mod
the vertex order, also across blocks of letters commuting with that
vertex, letters with vanishing exponent disappear), then the reduced
letters are rearranged by legal commuting swaps into the least order.
Reduced words for a fixed element differ only by such swaps, so two words
represent the same group element exactly when their normal forms are
equal.

Beware that the least order is not reachable by naively swapping adjacent
out-of-order commuting letters: with commuting pairs {1,2} and {2,3} only,
the words (3)(1)(2) and (2)(3)(1) spell the same element and neither has
an adjacent swappable pair.  The least representative is instead found
greedily, repeatedly emitting the smallest letter that can be moved to
the front through letters it commutes with.

For the all-orders-2 case, :func:`geometric_representation` provides an
independent exact-integer check of the word problem through the standard
faithful reflection representation.
"""

from .intlinalg import IntMatrix


class GroupSpec:
    """A graph product of cyclic groups: commuting graph plus vertex orders.

    ``orders[i]`` is the order of g_{i+1}: an int >= 2 or None for infinite.
    """

    __slots__ = ("m", "graph", "orders")

    def __init__(self, graph, orders):
        orders = tuple(orders)
        if len(orders) != graph.m:
            raise ValueError("need one order per vertex")
        for o in orders:
            if o is not None and (not isinstance(o, int) or o < 2):
                raise ValueError(f"vertex order {o!r} must be >= 2 or None")
        self.m = graph.m
        self.graph = graph
        self.orders = orders

    @classmethod
    def coxeter(cls, graph):
        """All generators involutive (right-angled Coxeter group)."""
        return cls(graph, (2,) * graph.m)

    @classmethod
    def artin(cls, graph):
        """All generators of infinite order (right-angled Artin group)."""
        return cls(graph, (None,) * graph.m)

    def commutes(self, i, j):
        return self.graph.has_edge(i, j)

    def check_vertex(self, v):
        if not isinstance(v, int) or not 1 <= v <= self.m:
            raise ValueError(f"vertex {v!r} out of range 1..{self.m}")

    def is_coxeter(self):
        return all(o == 2 for o in self.orders)

    def __repr__(self):
        return f"GroupSpec(m={self.m}, orders={self.orders})"


def generator(v, exponent=1):
    """The one-letter word g_v^exponent."""
    return ((v, exponent),)


def _push(out, v, e, spec):
    """Append g_v^e to the reduced word ``out`` (a list), re-reducing."""
    o = spec.orders[v - 1]
    if o is not None:
        e %= o
    if e == 0:
        return
    # merge scan: walk left over letters commuting with v; a letter at the
    # same vertex inside that window must absorb the new exponent
    k = len(out) - 1
    while k >= 0:
        u, f = out[k]
        if u == v:
            g = f + e
            if o is not None:
                g %= o
            if g:
                out[k] = (u, g)
            else:
                del out[k]
                # the letters that sat to the right of the vanished one may
                # now interact across the gap; re-insert them
                tail = out[k:]
                del out[k:]
                for tv, te in tail:
                    _push(out, tv, te, spec)
            return
        if not spec.commutes(u, v):
            break
        k -= 1
    out.append((v, e))


def _least_order(reduced, spec):
    """Lexicographically least shuffle of a reduced word.

    Greedy: a letter is available when everything before it commutes with
    it; emit the available letter with the smallest vertex and repeat.
    Two available letters never share a vertex (the earlier would block
    the later), so the choice is unambiguous.
    """
    adj = spec.graph.adj
    remaining = list(reduced)
    out = []
    while remaining:
        seen = 0
        best = None
        for idx, (v, _) in enumerate(remaining):
            if not seen & ~adj[v - 1] and (best is None
                                           or v < remaining[best][0]):
                best = idx
            seen |= 1 << (v - 1)
        out.append(remaining.pop(best))
    return tuple(out)


def normal_form(word, spec):
    """The canonical representative of the group element spelt by ``word``.

    >>> from coxkit.simplicial import Graph
    >>> rc = GroupSpec.coxeter(Graph(2, []))
    >>> normal_form(((1, 1), (1, 1)), rc)
    ()
    """
    out = []
    for v, e in word:
        spec.check_vertex(v)
        if not isinstance(e, int):
            raise ValueError(f"exponent {e!r} is not an integer")
        _push(out, v, e, spec)
    return _least_order(out, spec)


def multiply(u, v, spec):
    """Normal form of the product u v."""
    out = []
    for w in (u, v):
        for vert, e in w:
            spec.check_vertex(vert)
            _push(out, vert, e, spec)
    return _least_order(out, spec)


def inverse(u, spec):
    """Normal form of u^-1 (letters reversed, exponents negated)."""
    return normal_form(tuple((v, -e) for v, e in reversed(u)), spec)


def is_identity(u, spec):
    return normal_form(u, spec) == ()


def abelianization(w, spec):
    """Image of ``w`` in the direct product of the cyclic vertex groups.

    A word lies in the commutator subgroup exactly when this is the zero
    vector.  Entry i is taken mod o_i for finite orders.
    """
    vec = [0] * spec.m
    for v, e in w:
        spec.check_vertex(v)
        vec[v - 1] += e
    for i, o in enumerate(spec.orders):
        if o is not None:
            vec[i] %= o
    return tuple(vec)


def commutator(u, v, spec):
    """Normal form of the group commutator (u, v) = u^-1 v^-1 u v."""
    uw = normal_form(u, spec)
    vw = normal_form(v, spec)
    word = inverse(uw, spec) + inverse(vw, spec) + uw + vw
    return normal_form(word, spec)


# ---------------------------------------------------------------------------
# Nested commutator expressions
# ---------------------------------------------------------------------------

class CommutatorExpr:
    """A commutator expression tree in nested form.

    Leaves are generators; an internal node is the commutator of its
    children, and at most one child of each node may itself be internal
    (no commutator of two commutators).
    """

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        for side in (left, right):
            if not isinstance(side, (int, CommutatorExpr)):
                raise ValueError("children must be vertices or expressions")
        if isinstance(left, CommutatorExpr) and \
                isinstance(right, CommutatorExpr):
            raise ValueError("nested form forbids a commutator of two "
                             "commutators")
        self.left = left
        self.right = right

    @classmethod
    def from_nested(cls, nested):
        """Build from the nested-array serialisation, e.g. [2, [4, 1]]
        for (g_2, (g_4, g_1))."""
        if isinstance(nested, int):
            return nested
        if not isinstance(nested, (list, tuple)) or len(nested) != 2:
            raise ValueError(f"bad commutator serialisation {nested!r}")
        return cls(cls.from_nested(nested[0]), cls.from_nested(nested[1]))

    def to_nested(self):
        def conv(side):
            return side if isinstance(side, int) else side.to_nested()
        return [conv(self.left), conv(self.right)]

    def __repr__(self):
        def show(side):
            return f"g{side}" if isinstance(side, int) else repr(side)
        return f"({show(self.left)}, {show(self.right)})"


def evaluate(expr, spec):
    """Normal form of a commutator expression (a leaf is just g_v)."""
    if isinstance(expr, int):
        spec.check_vertex(expr)
        return normal_form(generator(expr), spec)
    return commutator(evaluate(expr.left, spec),
                      evaluate(expr.right, spec), spec)


# ---------------------------------------------------------------------------
# Identity oracles for the rewriting engine
# ---------------------------------------------------------------------------

def verify_hall(a, b, c, spec):
    """Check both Hall expansion identities on the given words:

        (a, bc) = (a, c) (a, b) ((a, b), c)
        (ab, c) = (a, c) ((a, c), b) (b, c)

    These hold in every group, so a False return means the rewriting
    engine is broken.
    """
    ac = commutator(a, c, spec)
    ab = commutator(a, b, spec)
    bc_word = multiply(b, c, spec)
    lhs1 = commutator(a, bc_word, spec)
    rhs1 = multiply(multiply(ac, ab, spec), commutator(ab, c, spec), spec)
    ab_word = multiply(a, b, spec)
    lhs2 = commutator(ab_word, c, spec)
    rhs2 = multiply(multiply(ac, commutator(ac, b, spec), spec),
                    commutator(b, c, spec), spec)
    return lhs1 == rhs1 and lhs2 == rhs2


def verify_swap(p, q, x, spec):
    """Check the generator-swap identity on g_p, g_q and the word ``x``:

        (g_q, (g_p, x)) = (g_q, x) (x, (g_p, g_q)) (g_q, g_p) (x, g_p)
                          (g_p, (g_q, x)) (x, g_q) (g_p, g_q) (g_p, x)

    Also a universal group identity; used as an oracle.
    """
    spec.check_vertex(p)
    spec.check_vertex(q)
    gp = generator(p)
    gq = generator(q)
    lhs = commutator(gq, commutator(gp, x, spec), spec)
    factors = [
        commutator(gq, x, spec),
        commutator(x, commutator(gp, gq, spec), spec),
        commutator(gq, gp, spec),
        commutator(x, gp, spec),
        commutator(gp, commutator(gq, x, spec), spec),
        commutator(x, gq, spec),
        commutator(gp, gq, spec),
        commutator(gp, x, spec),
    ]
    rhs = ()
    for f in factors:
        rhs = multiply(rhs, f, spec)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Geometric (reflection) representation for the all-orders-2 case
# ---------------------------------------------------------------------------

def _require_coxeter(spec):
    if not spec.is_coxeter():
        raise ValueError("the reflection representation needs every "
                         "generator to have order 2")


def _apply_reflection(rows, i0, noncommuting_rows):
    """Left-multiply the row-list matrix by the reflection of generator
    i0 (0-based): only row i0 changes."""
    m = len(rows)
    old = rows[i0]
    new = [-x for x in old]
    for k in noncommuting_rows:
        rk = rows[k]
        for j in range(m):
            new[j] += 2 * rk[j]
    rows[i0] = new


def geometric_representation(w, spec):
    """The image of ``w`` under the standard reflection representation.

    Generator g_i acts on a basis a_1, ..., a_m by
    ``g_i(a_j) = a_j - B(i, j) a_i`` with B(i, i) = 2, B(i, j) = 0 for
    commuting pairs and B(i, j) = -2 otherwise, which keeps all matrix
    entries integral.  The representation is faithful, so the resulting
    matrix is the identity exactly when ``w`` is the identity element;
    this is the package's independent word-problem oracle.
    """
    _require_coxeter(spec)
    m = spec.m
    noncomm = []
    for i in range(m):
        noncomm.append([k for k in range(m)
                        if k != i and not spec.graph.adj[i] >> k & 1])
    rows = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    # ((v1,e1), ..., (vL,eL)) acts as the product of the letter matrices,
    # accumulated right to left so each letter is a cheap row update
    for v, e in reversed(w):
        spec.check_vertex(v)
        if e % 2:
            _apply_reflection(rows, v - 1, noncomm[v - 1])
    return IntMatrix.from_dense(rows)


def is_identity_matrix(mat):
    return mat.rows == mat.cols and \
        mat == IntMatrix.identity(mat.rows)


def random_word(spec, length, rng):
    """A uniform random word: each letter an independent (vertex, exponent)
    with exponent +-1 (infinite order) or in 1..o-1 (finite order)."""
    letters = []
    for _ in range(length):
        v = rng.randint(1, spec.m)
        o = spec.orders[v - 1]
        e = rng.choice((1, -1)) if o is None else rng.randint(1, o - 1)
        letters.append((v, e))
    return tuple(letters)
