"""Exact rational linear algebra and finite jet models of the local ring.

Subspaces are stored in reduced row echelon form, which is a canonical
form: two subspaces are equal iff their stored matrices are equal.  All
entries are ``fractions.Fraction``; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import BivariatePolynomial


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [[Fraction(c) for c in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        lead = m[rank][col]
        if lead != 1:
            m[rank] = [c / lead for c in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], pivots


def kernel_basis(rows, ncols):
    """Canonical basis of the right kernel of the given row list."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(vec)
    # the construction above is echelonized but not reduced; canonicalize
    canon, _ = rref(basis)
    return canon


class Subspace:
    """A linear subspace of Q^n in canonical reduced row echelon form."""

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, n, rows, pivots=None):
        if pivots is None:
            rows, pivots = rref(rows)
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def spanned_by(cls, n, vectors):
        return cls(n, list(vectors))

    @classmethod
    def full(cls, n):
        eye = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        return cls(n, eye, list(range(n)))

    @classmethod
    def kernel_of(cls, rows, n):
        basis = kernel_basis(rows, n)
        _, pivots = rref([list(r) for r in basis])
        return cls(n, basis, pivots)

    @property
    def dim(self):
        return len(self.rows)

    def reduce_vector(self, vec):
        """Residue of vec modulo this subspace (zero iff vec belongs to it)."""
        v = [Fraction(c) for c in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains_vector(self, vec):
        return all(c == 0 for c in self.reduce_vector(vec))

    def contains(self, other):
        if other.n != self.n:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(r) for r in other.rows)

    def sum(self, other):
        if other.n != self.n:
            raise ValueError("ambient dimension mismatch")
        return Subspace(self.n, list(self.rows) + list(other.rows))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return "<Subspace dim %d of Q^%d>" % (self.dim, self.n)


class JetSpace:
    """Truncated local ring O/m^N with its canonical monomial basis.

    The basis consists of the monomials x^i y^j with i + j < N, in graded
    lexicographic order, so the dimension is N(N+1)/2.
    """

    __slots__ = ("N", "monomials", "index")
    _cache = {}

    def __new__(cls, N):
        if N < 1:
            raise ValueError("truncation order must be positive")
        if N in cls._cache:
            return cls._cache[N]
        self = object.__new__(cls)
        self.N = N
        monos = [(d - j, j) for d in range(N) for j in range(d + 1)]
        self.monomials = tuple(monos)
        self.index = {m: k for k, m in enumerate(monos)}
        cls._cache[N] = self
        return self

    @property
    def dim(self):
        return len(self.monomials)

    def vector_of(self, poly):
        """Coefficient vector of the jet of poly (terms of degree >= N drop)."""
        vec = [Fraction(0)] * self.dim
        for e, c in poly.terms:
            k = self.index.get(e)
            if k is not None:
                vec[k] = c
        return vec

    def poly_of(self, vec):
        return BivariatePolynomial(
            {m: c for m, c in zip(self.monomials, vec) if c != 0}
        )

    def __eq__(self, other):
        return isinstance(other, JetSpace) and self.N == other.N

    def __hash__(self):
        return hash(("JetSpace", self.N))

    def __repr__(self):
        return "JetSpace(%d)" % self.N


def jet_truncate(poly, N):
    """Jet of a polynomial in JetSpace(N), as a coefficient vector."""
    return JetSpace(N).vector_of(poly)


class JetSubspace:
    """A subspace of a jet space, in canonical form.

    Subspaces over different truncation orders are deliberately unrelated:
    callers must re-truncate before comparing.
    """

    __slots__ = ("space", "subspace")

    def __init__(self, space, subspace):
        if subspace.n != space.dim:
            raise ValueError("subspace does not match the jet space dimension")
        self.space = space
        self.subspace = subspace

    @classmethod
    def spanned_by_polys(cls, space, polys):
        return cls(space, Subspace.spanned_by(space.dim, [space.vector_of(p) for p in polys]))

    @classmethod
    def full(cls, space):
        return cls(space, Subspace.full(space.dim))

    @property
    def dimension(self):
        return self.subspace.dim

    def basis_polynomials(self):
        return [self.space.poly_of(r) for r in self.subspace.rows]

    def contains(self, other):
        if other.space != self.space:
            raise ValueError("jet subspaces live in different truncations")
        return self.subspace.contains(other.subspace)

    def contains_poly(self, poly):
        return self.subspace.contains_vector(self.space.vector_of(poly))

    def __eq__(self, other):
        if not isinstance(other, JetSubspace):
            return NotImplemented
        return self.space == other.space and self.subspace == other.subspace

    def __hash__(self):
        return hash((self.space, self.subspace))

    def __repr__(self):
        return "<JetSubspace dim %d in JetSpace(%d)>" % (self.dimension, self.space.N)


def subspace_from_conditions(space, conditions):
    """Exact kernel of the stacked rational linear functionals.

    Each condition is a rational row over the monomial basis of ``space``;
    the result is canonical and independent of the condition order.
    """
    rows = []
    for cond in conditions:
        cond = list(cond)
        if len(cond) != space.dim:
            raise ValueError(
                "functional has length %d, ambient basis has %d"
                % (len(cond), space.dim)
            )
        rows.append(cond)
    return JetSubspace(space, Subspace.kernel_of(rows, space.dim))


def quotient_dim(V, W):
    """dim V/W for jet subspaces with W contained in V (checked exactly)."""
    if V.space != W.space:
        raise ValueError("jet subspaces live in different truncations")
    if not V.contains(W):
        raise ValueError("quotient undefined: W is not a subspace of V")
    return V.dimension - W.dimension


def subspace_sum(subspaces):
    """Exact linear span of a union of jet subspaces over one ambient."""
    subspaces = list(subspaces)
    if not subspaces:
        raise ValueError("empty sum has no ambient")
    space = subspaces[0].space
    total = subspaces[0].subspace
    for other in subspaces[1:]:
        if other.space != space:
            raise ValueError("jet subspaces live in different truncations")
        total = total.sum(other.subspace)
    return JetSubspace(space, total)
