"""Arithmetic in finite fields GF(p^m) presented by an explicit monic modulus.

An element is a polynomial c_0 + c_1*g + ... + c_{m-1}*g^{m-1} in the residue
class of the generator g, and is packed into a single integer in mixed radix
base p (so for p = 2 the integer's bits are exactly the coordinates).  All
Field methods that do arithmetic accept and return these packed integers;
the FieldElement wrapper adds operator overloading on top and is the type
used in public signatures elsewhere in the package.

Multiplication, inversion and powering go through discrete-log tables
whenever the field is small enough (order <= dlog_limit, default 2^20) and
the generator is primitive; otherwise plain polynomial arithmetic modulo the
modulus is used.  Frobenius maps x -> x^(p^e) are applied through cached
GF(p)-linear matrices when no log table exists, so towers like GF(2^24) or
GF(3^16) stay usable.

The modulus is verified irreducible at construction (gcd test against
x^(p^d) - x for the maximal proper divisors d of m).
"""

from __future__ import annotations

import math

DEFAULT_DLOG_LIMIT = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over GF(p), used only for modulus validation
# ---------------------------------------------------------------------------

def _pmod(p, a, f):
    a = [x % p for x in a]
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1]
        if c:
            off = len(a) - 1 - df
            for j in range(df + 1):
                a[off + j] = (a[off + j] - c * f[j]) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _pmulmod(p, a, b, f):
    if not a or not b:
        return []
    conv = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                conv[i + j] = (conv[i + j] + x * y) % p
    return _pmod(p, conv, f)


def _ppowmod(p, a, e, f):
    r = [1]
    a = _pmod(p, a, f)
    while e:
        if e & 1:
            r = _pmulmod(p, r, a, f)
        a = _pmulmod(p, a, a, f)
        e >>= 1
    return r


def _pgcd(p, a, b):
    a, b = [x % p for x in a], [x % p for x in b]
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [(x * inv) % p for x in b]
        a, b = b, _pmod(p, a, bm)
    return a


def is_irreducible(p: int, modulus) -> bool:
    """Test a monic polynomial over GF(p) for irreducibility."""
    f = [c % p for c in modulus]
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    if _ppowmod(p, x, p ** m, f) != _pmod(p, x, f):
        return False
    for ell in set(_prime_factors(m)):
        xd = _ppowmod(p, x, p ** (m // ell), f)
        diff = [((xd[i] if i < len(xd) else 0) - (x[i] if i < len(x) else 0)) % p
                for i in range(max(len(xd), 2))]
        while diff and diff[-1] == 0:
            diff.pop()
        if not diff or len(_pgcd(p, f, diff)) > 1:
            return False
    return True


class Field:
    """Handle for GF(p^m) = GF(p)[g] / (modulus), with packed-int elements."""

    def __init__(self, p, modulus, *, name="g", dlog_limit=DEFAULT_DLOG_LIMIT,
                 check=True):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        self.p = p
        self.modulus = tuple(c % p for c in modulus)
        if not self.modulus or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.degree = len(self.modulus) - 1
        if self.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if check and not is_irreducible(p, self.modulus):
            raise ValueError(f"modulus {list(self.modulus)} is reducible over GF({p})")
        self.order = p ** self.degree
        self.name = name
        # x^(m+i) mod f for i in 0..m-2, as packed ints (reduction helpers)
        self._reductions = self._build_reductions()
        self._frob_cols: dict[int, list[int]] = {}
        self.exp = None
        self.log = None
        if self.order <= dlog_limit:
            self._build_dlog()

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Field) and other.p == self.p
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})" if self.degree > 1 else f"GF({self.p})"

    # -- packing ------------------------------------------------------------

    def encode(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + (c % self.p)
        return v

    def decode(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _build_reductions(self):
        p, m = self.p, self.degree
        red = []
        cur = [(-c) % p for c in self.modulus[:-1]]
        for _ in range(m - 1):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(m):
                    cur[j] = (cur[j] - top * self.modulus[j]) % p
        return red

    def _build_dlog(self):
        # tables only if the residue class of x is primitive
        g = self.p if self.degree > 1 else (-self.modulus[0]) % self.p
        q = self.order
        exp = [0] * (q - 1)
        log = [-1] * q
        v = 1
        for i in range(q - 1):
            if log[v] >= 0:       # period shorter than q-1: not primitive
                return
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, g)
        if v != 1:
            return
        self.exp = exp
        self.log = log

    @property
    def has_dlog(self) -> bool:
        return self.exp is not None

    # -- integer-level arithmetic -------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, mult = 0, 1
        for _ in range(self.degree):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, mult = 0, 1
        for _ in range(self.degree):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra - rb) % p) * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.sub(0, a)

    def _mul_raw(self, a: int, b: int) -> int:
        p, m = self.p, self.degree
        if p == 2:
            mod_int = self.encode(self.modulus[:-1]) | (1 << m)
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> m) & 1:
                    a ^= mod_int
            return r
        da, db = self.decode(a), self.decode(b)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        res = conv[:m]
        for i in range(m, 2 * m - 1):
            c = conv[i]
            if c:
                red = self._reductions[i - m]
                for j in range(m):
                    res[j] = (res[j] + c * red[j]) % p
        return self.encode(res)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.exp is not None:
            return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.exp is not None:
            return self.exp[(-self.log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero field element")
            return 0 if e else 1
        e %= self.order - 1
        if self.exp is not None:
            return self.exp[(self.log[a] * e) % (self.order - 1)]
        r, b = 1, a
        while e:
            if e & 1:
                r = self._mul_raw(r, b)
            b = self._mul_raw(b, b)
            e >>= 1
        return r

    def _frob_columns(self, e: int) -> list[int]:
        # images of the power basis under x -> x^(p^e), packed
        cols = self._frob_cols.get(e)
        if cols is None:
            gen = self.p if self.degree > 1 else (-self.modulus[0]) % self.p
            gp = self.pow(gen, self.p ** e) if self.exp is not None else \
                self._pow_raw(gen, self.p ** e)
            cols = [1]
            for _ in range(self.degree - 1):
                cols.append(self._mul_raw(cols[-1], gp))
            self._frob_cols[e] = cols
        return cols

    def _pow_raw(self, a, e):
        r, b = 1, a
        while e:
            if e & 1:
                r = self._mul_raw(r, b)
            b = self._mul_raw(b, b)
            e >>= 1
        return r

    def frobenius(self, a: int, e: int) -> int:
        """Apply x -> x^(p^e)."""
        e %= self.degree
        if e == 0 or a == 0:
            return a
        if self.exp is not None:
            return self.exp[(self.log[a] * (self.p ** e)) % (self.order - 1)]
        cols = self._frob_columns(e)
        if self.p == 2:
            out = 0
            i = 0
            while a:
                if a & 1:
                    out ^= cols[i]
                a >>= 1
                i += 1
            return out
        out = 0
        for i, c in enumerate(self.decode(a)):
            if c:
                term = cols[i]
                for _ in range(c):
                    out = self.add(out, term)
        return out

    def dlog(self, a: int):
        """Discrete log base the canonical generator, or None if unavailable."""
        if a == 0 or self.exp is None:
            return None
        return self.log[a]

    # -- element construction and text form -----------------------------------

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        g = self.p if self.degree > 1 else (-self.modulus[0]) % self.p
        return FieldElement(self, g)

    def from_int(self, v: int) -> "FieldElement":
        if not 0 <= v < self.order:
            raise ValueError(f"packed value {v} out of range for {self!r}")
        return FieldElement(self, v)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError("too many coordinates")
        return FieldElement(self, self.encode(coeffs))

    def from_power(self, n: int) -> "FieldElement":
        """The element gen^n."""
        g = self.p if self.degree > 1 else (-self.modulus[0]) % self.p
        return FieldElement(self, self.pow(g, n))

    def elements(self):
        for v in range(self.order):
            yield FieldElement(self, v)

    def parse(self, text) -> "FieldElement":
        """Parse '0', '1', 'a^N' (with this field's generator name) or a coordinate list."""
        if isinstance(text, int):
            return self.from_coeffs([text])
        if isinstance(text, (list, tuple)):
            return self.from_coeffs(text)
        s = text.strip()
        if s == "0":
            return self.zero
        if s == "1":
            return self.one
        if s == self.name:
            return self.gen
        if s.startswith(self.name + "^"):
            return self.from_power(int(s[len(self.name) + 1:]))
        if s.startswith("[") and s.endswith("]"):
            return self.from_coeffs(int(t) for t in s[1:-1].split(",") if t.strip())
        raise ValueError(f"cannot parse field element {text!r} for {self!r}")

    def format(self, a: int, power: bool = True) -> str:
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        if power and self.exp is not None:
            return f"{self.name}^{self.log[a]}"
        return "[" + ",".join(str(c) for c in self.decode(a)) + "]"


class FieldElement:
    """A single field element; thin wrapper over (field, packed int)."""

    __slots__ = ("field", "val")

    def __init__(self, field: Field, val: int):
        self.field = field
        self.val = val

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other.val
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.val))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.val, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(v, self.val))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.val, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.val))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.val))

    def __bool__(self):
        return self.val != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.decode(self.val))

    def dlog(self):
        return self.field.dlog(self.val)

    def __repr__(self):
        return self.field.format(self.val)


class FrobeniusMap:
    """The automorphism x -> x^(p^e) of a field GF(p^m), e taken mod m."""

    __slots__ = ("field", "exponent")

    def __init__(self, field: Field, exponent: int):
        self.field = field
        self.exponent = exponent % field.degree

    @property
    def order(self) -> int:
        return self.field.degree // math.gcd(self.exponent, self.field.degree)

    @property
    def fixed_degree(self) -> int:
        """Degree over GF(p) of the fixed subfield."""
        return math.gcd(self.exponent, self.field.degree)

    @property
    def fixed_order(self) -> int:
        return self.field.p ** self.fixed_degree

    @property
    def is_identity(self) -> bool:
        return self.exponent == 0

    def apply(self, a: int, times: int = 1) -> int:
        return self.field.frobenius(a, self.exponent * times)

    def __call__(self, x: FieldElement, times: int = 1) -> FieldElement:
        if not (x.field is self.field or x.field == self.field):
            raise ValueError("field mismatch: element does not belong to this map's field")
        return FieldElement(self.field, self.apply(x.val, times))

    def __pow__(self, k: int) -> "FrobeniusMap":
        return FrobeniusMap(self.field, self.exponent * k)

    def __mul__(self, other: "FrobeniusMap") -> "FrobeniusMap":
        if self.field != other.field:
            raise ValueError("field mismatch in composition")
        return FrobeniusMap(self.field, self.exponent + other.exponent)

    def inverse(self) -> "FrobeniusMap":
        return FrobeniusMap(self.field, -self.exponent)

    def __eq__(self, other):
        return (isinstance(other, FrobeniusMap) and self.field == other.field
                and self.exponent == other.exponent)

    def __hash__(self):
        return hash((self.field, self.exponent))

    def __repr__(self):
        return f"Frob(x -> x^{self.field.p}^{self.exponent} on {self.field!r})"
