"""Twisted (skew) polynomial arithmetic over a finite field.

A ring S = F[x; theta] multiplies by the rule x*a = theta(a)*x for a in F,
where theta is a Frobenius map of F.  Polynomials are immutable coefficient
tuples in ascending degree with no trailing zeros; the zero polynomial has an
empty tuple and degree -inf.

Both Euclidean divisions exist: right division f = q*g + r and left division
f = g*q + r, each with deg r < deg g.  On top of them sit the greatest common
right divisor (with Bezout cofactors), the least common left multiple, and
the idempotent projection of a polynomial to the subring fixed by a power of
the twist (`pseudobound`).

Evaluation is right evaluation: the remainder of f under right division by
x - gamma equals sum_i f_i N_i(gamma), where N_i(gamma) =
gamma*theta(gamma)*...*theta^(i-1)(gamma) is the i-th twisted norm.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, FieldElement, FrobeniusMap

NEG_INF = float("-inf")


class SkewPolyRing:
    """S = F[x; theta] for a field F and a Frobenius twist theta."""

    def __init__(self, field: Field, twist: FrobeniusMap, var: str = "x"):
        if not (twist.field is field or twist.field == field):
            raise ValueError("twist must be an automorphism of the coefficient field")
        self.field = field
        self.twist = twist
        self.var = var

    def __eq__(self, other):
        return (isinstance(other, SkewPolyRing) and self.field == other.field
                and self.twist.exponent == other.twist.exponent)

    def __hash__(self):
        return hash((self.field, self.twist.exponent))

    def __repr__(self):
        return f"{self.field!r}[{self.var}; x->x^{self.field.p}^{self.twist.exponent}]"

    def _make(self, coeffs) -> "SkewPolynomial":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return SkewPolynomial(self, tuple(coeffs))

    def __call__(self, coeffs) -> "SkewPolynomial":
        if isinstance(coeffs, SkewPolynomial):
            if coeffs.ring == self:
                return coeffs
            raise ValueError("polynomial belongs to a different ring")
        if isinstance(coeffs, str):
            return self.parse(coeffs)
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if not (c.field is self.field or c.field == self.field):
                    raise ValueError("coefficient from a different field")
                vals.append(c.val)
            elif isinstance(c, int):
                vals.append(c % self.field.p)
            elif isinstance(c, str):
                vals.append(self.field.parse(c).val)
            else:
                raise TypeError(f"cannot use {c!r} as a coefficient")
        return self._make(vals)

    @property
    def zero(self) -> "SkewPolynomial":
        return SkewPolynomial(self, ())

    @property
    def one(self) -> "SkewPolynomial":
        return SkewPolynomial(self, (1,))

    @property
    def gen(self) -> "SkewPolynomial":
        return SkewPolynomial(self, (0, 1))

    def linear(self, gamma) -> "SkewPolynomial":
        """The monic linear polynomial x - gamma."""
        g = gamma.val if isinstance(gamma, FieldElement) else gamma % self.field.p
        return self._make((self.field.neg(g), 1))

    def x_pow_minus_one(self, n: int) -> "SkewPolynomial":
        return self._make((self.field.neg(1),) + (0,) * (n - 1) + (1,))

    def parse(self, text: str) -> "SkewPolynomial":
        coeffs: dict[int, int] = {}
        for term in text.replace("-", "+-").split("+"):
            term = term.strip()
            if not term:
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:].strip()
            if "*" in term:
                cpart, xpart = term.split("*", 1)
            elif term.startswith(self.var):
                cpart, xpart = "1", term
            else:
                cpart, xpart = term, ""
            xpart = xpart.strip()
            if not xpart:
                d = 0
            elif xpart == self.var:
                d = 1
            else:
                d = int(xpart[len(self.var) + 1:])
            c = self.field.parse(cpart.strip()).val
            if neg:
                c = self.field.neg(c)
            coeffs[d] = self.field.add(coeffs.get(d, 0), c)
        if not coeffs:
            return self.zero
        out = [0] * (max(coeffs) + 1)
        for d, c in coeffs.items():
            out[d] = c
        return self._make(out)


class SkewPolynomial:
    """Immutable element of a SkewPolyRing (coefficients ascending)."""

    __slots__ = ("ring", "_c")

    def __init__(self, ring: SkewPolyRing, coeffs: tuple):
        self.ring = ring
        self._c = coeffs

    # -- structure ----------------------------------------------------------

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i: int) -> FieldElement:
        v = self._c[i] if 0 <= i < len(self._c) else 0
        return FieldElement(self.ring.field, v)

    @property
    def lead(self) -> FieldElement:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.ring.field, self._c[-1])

    @property
    def coeff_vals(self) -> tuple:
        """Raw packed coefficients, ascending."""
        return self._c

    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(self.ring.field, v) for v in self._c]

    def __eq__(self, other):
        if isinstance(other, SkewPolynomial):
            return self.ring == other.ring and self._c == other._c
        if other == 0:
            return not self._c
        if other == 1:
            return self._c == (1,)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self._c))

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other) -> "SkewPolynomial":
        if not isinstance(other, SkewPolynomial):
            raise TypeError(f"expected a skew polynomial, got {other!r}")
        if other.ring != self.ring:
            raise ValueError("twist mismatch: polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.ring.field
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = F.add(out[i], v)
        return self.ring._make(out)

    def __sub__(self, other):
        other = self._check(other)
        F = self.ring.field
        n = max(len(self._c), len(other._c))
        out = [F.sub(self._c[i] if i < len(self._c) else 0,
                     other._c[i] if i < len(other._c) else 0) for i in range(n)]
        return self.ring._make(out)

    def __neg__(self):
        F = self.ring.field
        return self.ring._make([F.neg(v) for v in self._c])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = self.ring([other])
        other = self._check(other)
        F = self.ring.field
        e = self.ring.twist.exponent
        a, b = self._c, other._c
        if not a or not b:
            return self.ring.zero
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            tb = b if i == 0 else [F.frobenius(bj, e * i) for bj in b]
            for j, bj in enumerate(tb):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return self.ring._make(out)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self.ring([other]) * self
        return NotImplemented

    def scale_left(self, c: FieldElement) -> "SkewPolynomial":
        F = self.ring.field
        v = c.val if isinstance(c, FieldElement) else c % F.p
        return self.ring._make([F.mul(v, x) for x in self._c])

    def shift(self, k: int) -> "SkewPolynomial":
        """Multiply by x^k on the left: x^k * f."""
        F = self.ring.field
        e = self.ring.twist.exponent
        return self.ring._make((0,) * k + tuple(F.frobenius(v, e * k) for v in self._c))

    def monic(self) -> "SkewPolynomial":
        if not self._c:
            return self
        if self._c[-1] == 1:
            return self
        F = self.ring.field
        inv = F.inv(self._c[-1])
        return self.ring._make([F.mul(inv, v) for v in self._c])

    def right_divmod(self, g: "SkewPolynomial"):
        """q, r with self = q*g + r and deg r < deg g."""
        g = self._check(g)
        if not g:
            raise ZeroDivisionError("right division by the zero polynomial")
        F = self.ring.field
        e = self.ring.twist.exponent
        dg = len(g._c) - 1
        glead_inv = F.inv(g._c[-1])
        r = list(self._c)
        q = [0] * max(0, len(r) - dg)
        while len(r) - 1 >= dg:
            d = len(r) - 1 - dg
            c = F.mul(r[-1], F.frobenius(glead_inv, e * d))
            q[d] = c
            for j, gj in enumerate(g._c):
                if gj:
                    r[d + j] = F.sub(r[d + j], F.mul(c, F.frobenius(gj, e * d)))
            while r and r[-1] == 0:
                r.pop()
        return self.ring._make(q), self.ring._make(r)

    def left_divmod(self, g: "SkewPolynomial"):
        """q, r with self = g*q + r and deg r < deg g (uses the inverse twist)."""
        g = self._check(g)
        if not g:
            raise ZeroDivisionError("left division by the zero polynomial")
        F = self.ring.field
        e = self.ring.twist.exponent
        m = F.degree
        dg = len(g._c) - 1
        glead_inv = F.inv(g._c[-1])
        r = list(self._c)
        q = [0] * max(0, len(r) - dg)
        while len(r) - 1 >= dg:
            d = len(r) - 1 - dg
            c = F.frobenius(F.mul(glead_inv, r[-1]), (-e * dg) % m)
            q[d] = c
            for j, gj in enumerate(g._c):
                if gj:
                    r[j + d] = F.sub(r[j + d], F.mul(gj, F.frobenius(c, e * j)))
            while r and r[-1] == 0:
                r.pop()
        return self.ring._make(q), self.ring._make(r)

    def __floordiv__(self, g):
        return self.right_divmod(g)[0]

    def __mod__(self, g):
        return self.right_divmod(g)[1]

    def right_divides(self, f: "SkewPolynomial") -> bool:
        return not f.right_divmod(self)[1]

    def right_eval(self, gamma: FieldElement) -> FieldElement:
        """sum_i f_i N_i(gamma): zero iff x - gamma right-divides f."""
        F = self.ring.field
        e = self.ring.twist.exponent
        g = gamma.val if isinstance(gamma, FieldElement) else gamma % F.p
        acc = 0
        norm_i = 1
        for i, fi in enumerate(self._c):
            if i > 0:
                norm_i = F.mul(norm_i, F.frobenius(g, e * (i - 1)))
            if fi:
                acc = F.add(acc, F.mul(fi, norm_i))
        return FieldElement(F, acc)

    def map_coeffs(self, rho: FrobeniusMap) -> "SkewPolynomial":
        F = self.ring.field
        return self.ring._make([F.frobenius(v, rho.exponent) for v in self._c])

    def __repr__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# twisted norms and evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormTable:
    """N_0..N_n of a base element with respect to a twist."""

    base: FieldElement
    twist: FrobeniusMap
    values: tuple

    def __getitem__(self, i: int) -> FieldElement:
        return self.values[i]

    def __len__(self):
        return len(self.values)


def norm(gamma: FieldElement, theta: FrobeniusMap, i: int) -> FieldElement:
    """N_i(gamma) = gamma * theta(gamma) * ... * theta^(i-1)(gamma)."""
    if i < 0:
        raise ValueError("norm index must be non-negative")
    F = theta.field
    acc = 1
    for j in range(i):
        acc = F.mul(acc, theta.apply(gamma.val, j))
    return FieldElement(F, acc)


def norm_table(gamma: FieldElement, theta: FrobeniusMap, n: int) -> NormTable:
    F = theta.field
    vals = [FieldElement(F, 1)]
    acc = 1
    for j in range(n):
        acc = F.mul(acc, theta.apply(gamma.val, j))
        vals.append(FieldElement(F, acc))
    return NormTable(gamma, theta, tuple(vals))


def right_eval(f: SkewPolynomial, gamma: FieldElement) -> FieldElement:
    return f.right_eval(gamma)


def galois_twist(f: SkewPolynomial, rho: FrobeniusMap) -> SkewPolynomial:
    """Apply rho to every coefficient (a ring automorphism of S)."""
    if not (rho.field is f.ring.field or rho.field == f.ring.field):
        raise ValueError("twist acts on a different field")
    return f.map_coeffs(rho)


# ---------------------------------------------------------------------------
# gcrd / lclm via the extended right Euclidean algorithm
# ---------------------------------------------------------------------------

def gcrd_bezout(f: SkewPolynomial, g: SkewPolynomial):
    """(d, u, v) with u*f + v*g = d, d monic, d the gcrd of f and g."""
    if not f and not g:
        raise ValueError("gcrd of two zero polynomials is undefined")
    ring = f.ring
    r0, r1 = f, g
    u0, u1 = ring.one, ring.zero
    v0, v1 = ring.zero, ring.one
    while r1:
        q, r = r0.right_divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = FieldElement(ring.field, ring.field.inv(r0._c[-1]))
    return r0.scale_left(c), u0.scale_left(c), v0.scale_left(c)


def gcrd(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    return gcrd_bezout(f, g)[0]


def lclm(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """Monic least common left multiple; deg = deg f + deg g - deg gcrd."""
    if not f or not g:
        raise ValueError("lclm with a zero polynomial is undefined")
    ring = f.ring
    f._check(g)
    r0, r1 = f, g
    u0, u1 = ring.one, ring.zero
    while r1:
        q, r = r0.right_divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
    return (u1 * f).monic()


def lclm_all(polys) -> SkewPolynomial:
    polys = list(polys)
    if not polys:
        raise ValueError("lclm of an empty family")
    out = polys[0].monic()
    for h in polys[1:]:
        out = lclm(out, h)
    return out


def lclm_linear(ring: SkewPolyRing, roots) -> SkewPolynomial:
    """lclm of the linear factors x - gamma over the given right roots."""
    roots = list(roots)
    if not roots:
        raise ValueError("no roots given")
    return lclm_all([ring.linear(gamma) for gamma in roots])


def pseudobound(f: SkewPolynomial, pi: FrobeniusMap, s: int | None = None) -> SkewPolynomial:
    """Monic generator of the largest pi-stable left ideal inside S*f.

    Computed as the lclm of the pi-orbit f, f^pi, ..., f^(pi^(s-1)); the
    result has all coefficients fixed by pi and the operation is idempotent.
    """
    if not f:
        raise ValueError("pseudobound of the zero polynomial is undefined")
    if s is None:
        s = pi.order
    out = f.monic()
    cur = f
    for _ in range(s - 1):
        cur = cur.map_coeffs(pi)
        out = lclm(out, cur)
    return out


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def format_poly(f: SkewPolynomial, power: bool = True) -> str:
    if not f:
        return "0"
    F = f.ring.field
    var = f.ring.var
    terms = []
    for i in range(len(f._c) - 1, -1, -1):
        c = f._c[i]
        if c == 0:
            continue
        cs = F.format(c, power=power)
        if i == 0:
            terms.append(cs)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            terms.append(xs if cs == "1" else f"{cs}*{xs}")
    return " + ".join(terms)
