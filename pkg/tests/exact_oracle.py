"""Exact-arithmetic oracles used to pin expected values independently.

Matrices over the Gaussian rationals are stored as tuples of tuples of
``(Fraction, Fraction)`` pairs (real, imaginary).  The span-closure
dimension is computed by exact Gaussian elimination, so the expected
generated-algebra dimensions frozen into the tests do not depend on any
floating-point rank decision.  The cycle-representation builder here is a
separate, direct transcription of the defining formulas, used to
cross-check the package's construction entry by entry.
"""

from fractions import Fraction

ZERO = (Fraction(0), Fraction(0))
ONE = (Fraction(1), Fraction(0))
IMAG = (Fraction(0), Fraction(1))
HALF = (Fraction(1, 2), Fraction(0))


def gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gdiv(a, b):
    denom = b[0] * b[0] + b[1] * b[1]
    conj = (b[0] / denom, -b[1] / denom)
    return gmul(a, conj)


def mat_zero(k):
    return [[ZERO for _ in range(k)] for _ in range(k)]


def mat_mul(a, b):
    k = len(a)
    out = mat_zero(k)
    for i in range(k):
        for j in range(k):
            acc = ZERO
            for m in range(k):
                if a[i][m] != ZERO and b[m][j] != ZERO:
                    acc = gadd(acc, gmul(a[i][m], b[m][j]))
            out[i][j] = acc
    return out


def to_complex(m):
    return [[complex(e[0], e[1]) for e in row] for row in m]


def cycle_rep_exact(walk, lam):
    """Exact matrices of the cycle representation, from the formulas.

    ``walk`` is the cycle as a list of ``(edge_name, source_vertex)`` pairs
    in walking order.  Position j (1-based) carries the basis vector sitting
    at the source of the j-th walked edge; the j-th walked edge contributes
    1/2 at (j mod k, j-1) in 0-based indexing, with the wrap entry scaled
    by ``lam``.  Returns (vertex_images, edge_images) keyed by name.
    """
    k = len(walk)
    vmats = {}
    emats = {}
    for j, (ename, src) in enumerate(walk, start=1):
        vm = vmats.setdefault(src, mat_zero(k))
        vm[j - 1][j - 1] = ONE
        em = emats.setdefault(ename, mat_zero(k))
        weight = gmul(HALF, lam) if j == k else HALF
        em[j % k][j - 1] = gadd(em[j % k][j - 1], weight)
    return vmats, emats


def _reduce(vec, echelon):
    vec = list(vec)
    for pivot, bvec in echelon:
        if vec[pivot] != ZERO:
            f = gdiv(vec[pivot], bvec[pivot])
            for i in range(len(vec)):
                vec[i] = gsub(vec[i], gmul(f, bvec[i]))
    return vec


def _insert(vec, echelon):
    """Add a vector to the echelon basis; return True if independent."""
    vec = _reduce(vec, echelon)
    for pivot, entry in enumerate(vec):
        if entry != ZERO:
            echelon.append((pivot, vec))
            return True
    return False


def span_closure_dim_exact(gens):
    """Dimension of the algebra generated by exact matrices.

    Iterates products until the linear span is multiplicatively closed,
    with all rank decisions exact.
    """
    echelon = []
    members = []
    frontier = []
    for m in gens:
        vec = [e for row in m for e in row]
        if _insert(vec, echelon):
            members.append(m)
            frontier.append(m)
    while frontier:
        fresh = []
        for f in frontier:
            for m in members:
                for prod in (mat_mul(f, m), mat_mul(m, f)):
                    vec = [e for row in prod for e in row]
                    if _insert(vec, echelon):
                        fresh.append(prod)
        members.extend(fresh)
        frontier = fresh
    return len(echelon)
