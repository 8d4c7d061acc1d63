"""Exact bivariate polynomial algebra over the rationals.

Everything here is exact: coefficients are ``fractions.Fraction`` and no
operation ever produces a float.  Terms are kept in a canonical graded
lexicographic order (total degree first, then y-exponent), so structural
equality of polynomials is plain equality of the term tuples.

The text grammar accepted by :func:`parse_polynomial`::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := 'x' | 'y' | rational | '(' expr ')'
    rational := uint ('/' uint)?

Whitespace is insignificant.  The leading '-' is a small extension of the
documented grammar; everything the grammar accepts parses identically.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GermInvariantError, LimitExceededError, ParseError

_MAX_EXPONENT = 4096


def _term_key(exps):
    i, j = exps
    return (i + j, j)


class BivariatePolynomial:
    """Immutable polynomial in two variables with Fraction coefficients.

    ``terms`` maps exponent pairs (i, j) to nonzero coefficients; the pair
    (i, j) stands for x^i * y^j.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms):
        clean = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in polynomial term")
            c = Fraction(c)
            if c != 0:
                clean[(int(i), int(j))] = c
        self._terms = tuple(sorted(clean.items(), key=lambda t: _term_key(t[0])))
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): Fraction(c)})

    @classmethod
    def variable(cls, name):
        if name == "x":
            return cls({(1, 0): Fraction(1)})
        if name == "y":
            return cls({(0, 1): Fraction(1)})
        raise ValueError("variable must be 'x' or 'y'")

    # -- inspection ------------------------------------------------------------

    @property
    def terms(self):
        """Canonically ordered tuple of ((i, j), coefficient) pairs."""
        return self._terms

    def terms_dict(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, i, j):
        for exps, c in self._terms:
            if exps == (i, j):
                return c
        return Fraction(0)

    def constant_term(self):
        return self.coefficient(0, 0)

    def total_degree(self):
        """Largest total degree, or -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(i + j for (i, j), _ in self._terms)

    def order_at_origin(self):
        """Smallest total degree of a term (the multiplicity at the origin)."""
        if not self._terms:
            raise ValueError("order of the zero polynomial is undefined")
        return min(i + j for (i, j), _ in self._terms)

    def lowest_form(self):
        """Sum of the terms of minimal total degree (the tangent cone)."""
        m = self.order_at_origin()
        return BivariatePolynomial(
            {e: c for e, c in self._terms if e[0] + e[1] == m}
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self._terms)
        for e, c in other._terms:
            out[e] = out.get(e, Fraction(0)) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({e: -c for e, c in self._terms})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out = {}
        for (i1, j1), c1 in self._terms:
            for (i2, j2), c2 in other._terms:
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative exponent")
        if n > _MAX_EXPONENT:
            raise LimitExceededError("exponent %d exceeds limit %d" % (n, _MAX_EXPONENT))
        result = BivariatePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def substitute(self, px, py):
        """Substitute polynomials for x and y (exact composition)."""
        xpow = {0: BivariatePolynomial.constant(1)}
        ypow = {0: BivariatePolynomial.constant(1)}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        out = BivariatePolynomial.zero()
        for (i, j), c in self._terms:
            out = out + power(xpow, px, i) * power(ypow, py, j) * c
        return out

    def evaluate(self, qx, qy):
        qx, qy = Fraction(qx), Fraction(qy)
        total = Fraction(0)
        for (i, j), c in self._terms:
            total += c * qx**i * qy**j
        return total

    def derivative(self, var):
        out = {}
        for (i, j), c in self._terms:
            if var == "x" and i > 0:
                out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + c * i
            elif var == "y" and j > 0:
                out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + c * j
        return BivariatePolynomial(out)

    def truncate(self, degree_bound):
        """Drop all terms of total degree >= degree_bound."""
        return BivariatePolynomial(
            {e: c for e, c in self._terms if e[0] + e[1] < degree_bound}
        )

    def shift_divide(self, i0, j0):
        """Exact division by the monomial x^i0 * y^j0."""
        out = {}
        for (i, j), c in self._terms:
            if i < i0 or j < j0:
                raise ValueError("polynomial not divisible by x^%d*y^%d" % (i0, j0))
            out[(i - i0, j - j0)] = c
        return BivariatePolynomial(out)

    def min_exponent(self, var):
        """Smallest exponent of the given variable among the terms."""
        if not self._terms:
            raise ValueError("zero polynomial")
        idx = 0 if var == "x" else 1
        return min(e[idx] for e, _ in self._terms)

    def y_coefficients(self):
        """The polynomial as a map y-degree -> univariate coefficient in x."""
        out = {}
        for (i, j), c in self._terms:
            row = out.setdefault(j, {})
            row[i] = c
        return {
            j: _uni_from_dict(row) for j, row in out.items()
        }

    def render(self, names=("x", "y")):
        """Canonical text form; parses back to an equal polynomial."""
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in self._terms:
            mono = []
            if i:
                mono.append(names[0] if i == 1 else "%s^%d" % (names[0], i))
            if j:
                mono.append(names[1] if j == 1 else "%s^%d" % (names[1], j))
            mag = abs(c)
            if not mono:
                body = _render_fraction(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = "*".join([_render_fraction(mag)] + mono)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = body if sign == "+" else "-" + body
        for sign, body in pieces[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "BivariatePolynomial(%s)" % self.render()


def _render_fraction(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _as_poly(v):
    if isinstance(v, BivariatePolynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return BivariatePolynomial.constant(v)
    raise TypeError("cannot coerce %r to a polynomial" % (v,))


# -- parser -----------------------------------------------------------------

class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        t = self.text
        n = len(t)
        p = self.pos
        while p < n and t[p].isspace():
            p += 1
        self.pos = p
        if p >= n:
            return ("eof", None, p)
        ch = t[p]
        if ch.isdigit():
            q = p
            while q < n and t[q].isdigit():
                q += 1
            return ("int", int(t[p:q]), p)
        if ch.isalpha():
            q = p
            while q < n and t[q].isalpha():
                q += 1
            return ("name", t[p:q], p)
        if ch in "+-*^()/":
            return (ch, ch, p)
        raise ParseError("unexpected character %r" % ch, p)

    def take(self):
        kind, value, pos = self.peek()
        if kind == "int":
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        elif kind == "name":
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
        elif kind != "eof":
            self.pos += 1
        return kind, value, pos


def parse_polynomial(text, names=("x", "y")):
    """Parse the documented grammar into an expanded canonical polynomial."""
    toks = _Tokenizer(text)

    def parse_expr():
        kind, _, _ = toks.peek()
        negate = False
        if kind == "-":
            toks.take()
            negate = True
        value = parse_term()
        if negate:
            value = -value
        while True:
            kind, _, _ = toks.peek()
            if kind == "+":
                toks.take()
                value = value + parse_term()
            elif kind == "-":
                toks.take()
                value = value - parse_term()
            else:
                return value

    def parse_term():
        value = parse_factor()
        while True:
            kind, _, _ = toks.peek()
            if kind == "*":
                toks.take()
                value = value * parse_factor()
            else:
                return value

    def parse_factor():
        value = parse_base()
        kind, _, _ = toks.peek()
        if kind == "^":
            toks.take()
            kind, n, pos = toks.take()
            if kind == "-":
                raise ParseError("negative exponent", pos)
            if kind != "int":
                raise ParseError("expected integer exponent", pos)
            value = value**n
        return value

    def parse_base():
        kind, value, pos = toks.take()
        if kind == "name":
            if value == names[0]:
                return BivariatePolynomial.variable("x")
            if value == names[1]:
                return BivariatePolynomial.variable("y")
            raise ParseError("unknown variable %r" % value, pos)
        if kind == "int":
            num = value
            kind2, _, _ = toks.peek()
            if kind2 == "/":
                toks.take()
                kind3, den, pos3 = toks.take()
                if kind3 != "int":
                    raise ParseError("expected integer denominator", pos3)
                if den == 0:
                    raise ParseError("zero denominator", pos3)
                return BivariatePolynomial.constant(Fraction(num, den))
            return BivariatePolynomial.constant(num)
        if kind == "(":
            value = parse_expr()
            kind2, _, pos2 = toks.take()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            return value
        raise ParseError("expected 'x', 'y', a number or '('", pos)

    value = parse_expr()
    kind, _, pos = toks.peek()
    if kind != "eof":
        raise ParseError("unexpected trailing input", pos)
    return value


# -- univariate helpers (lists of Fractions, index = degree) -----------------

def _uni_from_dict(d):
    if not d:
        return []
    out = [Fraction(0)] * (max(d) + 1)
    for i, c in d.items():
        out[i] = c
    return _uni_trim(out)


def _uni_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def uni_degree(p):
    return len(p) - 1


def uni_add(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _uni_trim(out)


def uni_neg(p):
    return [-c for c in p]


def uni_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _uni_trim(out)


def uni_divmod(p, q):
    if not q:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = len(q) - 1
    lead = q[-1]
    while len(rem) >= len(q):
        c = rem[-1] / lead
        k = len(rem) - 1 - dq
        quo[k] = c
        for i in range(len(q)):
            rem[k + i] -= c * q[i]
        _uni_trim(rem)
        if not rem:
            break
    return _uni_trim(quo), rem


def uni_divexact(p, q):
    quo, rem = uni_divmod(p, q)
    if rem:
        raise ValueError("inexact univariate division")
    return quo


def uni_gcd(p, q):
    a, b = list(p), list(q)
    while b:
        a, b = b, uni_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def uni_derivative(p):
    return _uni_trim([p[i] * i for i in range(1, len(p))])


def uni_eval(p, v):
    total = Fraction(0)
    for c in reversed(p):
        total = total * v + c
    return total


def uni_rational_roots(p):
    """All rational roots with multiplicities, as a sorted list of pairs.

    Returns (roots, residual) where residual is the cofactor with no
    rational roots.
    """
    p = _uni_trim(list(p))
    if not p:
        raise ValueError("zero polynomial has every root")
    roots = []
    # strip root 0
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    if k:
        roots.append((Fraction(0), k))
        p = p[k:]
    # integerize
    from math import gcd, lcm

    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    ip = [int(c * den) for c in p]
    g = 0
    for c in ip:
        g = gcd(g, c)
    if g:
        ip = [c // g for c in ip]
    if len(ip) > 1:
        a0, an = abs(ip[0]), abs(ip[-1])
        candidates = set()
        for num in _divisors(a0):
            for dnm in _divisors(an):
                candidates.add(Fraction(num, dnm))
                candidates.add(Fraction(-num, dnm))
        for cand in sorted(candidates):
            mult = 0
            while len(p) > 1 and uni_eval(p, cand) == 0:
                p = uni_divexact(p, [-cand, Fraction(1)])
                mult += 1
            if mult:
                roots.append((cand, mult))
    roots.sort(key=lambda t: t[0])
    return roots, p


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def uni_render(p, name="s"):
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            body = _render_fraction(abs(c))
        else:
            var = name if i == 1 else "%s^%d" % (name, i)
            body = var if abs(c) == 1 else "%s*%s" % (_render_fraction(abs(c)), var)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    text = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        text += " %s %s" % (sign, body)
    return text


# -- resultants and germ validation ------------------------------------------

def _bareiss_determinant(matrix, mul, divexact, zero, one):
    """Fraction-free Bareiss determinant over an integral domain."""
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for i in range(k + 1, n):
                if m[i][k] != zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _dom_sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j]))
                m[i][j] = divexact(num, prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return _dom_neg(det) if sign < 0 else det


def _dom_sub(a, b):
    if isinstance(a, list):
        return uni_add(a, uni_neg(b))
    return a - b


def _dom_neg(a):
    if isinstance(a, list):
        return uni_neg(a)
    return -a


def resultant_y(f, g):
    """Resultant of f and g with respect to y, a univariate polynomial in x."""
    fc, gc = f.y_coefficients(), g.y_coefficients()
    n, m = max(fc), max(gc)
    if n == 0 or m == 0:
        raise ValueError("resultant_y needs positive y-degrees")
    size = n + m
    zero = []
    rows = []
    frow = [fc.get(j, []) for j in range(n, -1, -1)]
    grow = [gc.get(j, []) for j in range(m, -1, -1)]
    for k in range(m):
        rows.append([zero] * k + frow + [zero] * (size - n - 1 - k))
    for k in range(n):
        rows.append([zero] * k + grow + [zero] * (size - m - 1 - k))
    return _bareiss_determinant(rows, uni_mul, uni_divexact, [], [Fraction(1)])


def _content_and_primitive(f):
    """Split f into (content in x, primitive part) with respect to y."""
    coeffs = f.y_coefficients()
    content = []
    for j in sorted(coeffs):
        content = uni_gcd(content, coeffs[j])
    prim_terms = {}
    for j, cf in coeffs.items():
        quo = uni_divexact(cf, content)
        for i, c in enumerate(quo):
            if c != 0:
                prim_terms[(i, j)] = c
    return content, BivariatePolynomial(prim_terms)


def is_square_free(f):
    if f.is_zero():
        return False
    content, prim = _content_and_primitive(f)
    if uni_degree(content) > 0:
        if uni_degree(uni_gcd(content, uni_derivative(content))) > 0:
            return False
    dy = max(e[1] for e, _ in prim.terms) if not prim.is_zero() else 0
    if dy == 0:
        return True
    if dy == 1:
        return True
    res = resultant_y(prim, prim.derivative("y"))
    return bool(res)


def are_coprime(f, g):
    if f.is_zero() or g.is_zero():
        return False
    cf, pf = _content_and_primitive(f)
    cg, pg = _content_and_primitive(g)
    if uni_degree(uni_gcd(cf, cg)) > 0:
        return False
    dyf = max((e[1] for e, _ in pf.terms), default=0)
    dyg = max((e[1] for e, _ in pg.terms), default=0)
    if dyf == 0 or dyg == 0:
        return True
    return bool(resultant_y(pf, pg))


class PlaneCurveGerm:
    """A plane curve germ at the origin given by an ordered list of branches.

    Each branch is expected to be an analytically irreducible germ; what can
    be checked algebraically up front (vanishing at the origin, square-free,
    pairwise coprime) is checked here, while analytic irreducibility is
    certified during resolution.
    """

    __slots__ = ("branches",)

    def __init__(self, branches):
        branches = tuple(
            parse_polynomial(b) if isinstance(b, str) else b for b in branches
        )
        if not branches:
            raise GermInvariantError("a germ needs at least one branch")
        for idx, b in enumerate(branches):
            if b.is_zero():
                raise GermInvariantError("branch %d is zero" % idx)
            if b.constant_term() != 0:
                raise GermInvariantError("branch %d does not vanish at the origin" % idx)
            if not is_square_free(b):
                raise GermInvariantError("branch %d is not square-free" % idx)
        for i in range(len(branches)):
            for j in range(i + 1, len(branches)):
                if not are_coprime(branches[i], branches[j]):
                    raise GermInvariantError(
                        "branches %d and %d share a common factor" % (i, j)
                    )
        self.branches = branches

    @property
    def r(self):
        return len(self.branches)

    def product(self):
        out = BivariatePolynomial.constant(1)
        for b in self.branches:
            out = out * b
        return out

    def __eq__(self, other):
        return isinstance(other, PlaneCurveGerm) and self.branches == other.branches

    def __hash__(self):
        return hash(self.branches)

    def __repr__(self):
        return "PlaneCurveGerm([%s])" % ", ".join(b.render() for b in self.branches)
