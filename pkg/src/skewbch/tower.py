"""Field towers K = GF(q) <= L = GF(q^mu) <= M = GF(q^n), n = mu*s.

A Tower bundles the two extension fields together with the automorphism
sigma = x -> x^(q^h) of L, its degree-s extension theta = x -> x^(q^k) of M,
the embedding eps: L -> M (given by the image of L's generator), and the
induced pi = theta^mu generating the Galois group of M over L.

Validity conditions (checked at construction):

  * gcd(h, mu) = 1, so sigma has order mu and fixed field K,
  * gcd(k, n) = 1, so theta has order n and fixed field K,
  * k = h (mod mu), so theta restricts to sigma on the embedded copy of L.

When no explicit k is supplied, one is derived as k = a*mu + h where a is
the product of the primes dividing s that do not divide h; this always
satisfies both conditions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field

from .conway import conway_polynomial
from .fields import Field, FieldElement, FrobeniusMap, _prime_factors
from .linalg import gfp_rank, gfp_combination_kernel


def subfield_basis(field: Field, frob: FrobeniusMap) -> list[int]:
    """GF(p)-basis (packed ints) of the fixed subfield of a Frobenius map."""
    basis = []
    v = 1
    gen = field.gen.val
    for _ in range(field.degree):
        basis.append(v)
        v = field.mul(v, gen)
    rows = [field.decode(field.sub(frob.apply(b), b)) for b in basis]
    kernel = gfp_combination_kernel(field.p, rows)
    return [field.encode(c) for c in kernel]


def is_normal(alpha: FieldElement, frob: FrobeniusMap) -> bool:
    """True iff the orbit of alpha under frob is a basis of M over the fixed field."""
    field = frob.field
    if not (alpha.field is field or alpha.field == field):
        raise ValueError("field mismatch: alpha is not an element of the map's field")
    if alpha.val == 0:
        return False
    n = frob.order
    kbasis = subfield_basis(field, frob)
    orbit = []
    cur = alpha.val
    for _ in range(n):
        orbit.append(cur)
        cur = frob.apply(cur)
    vecs = [field.decode(field.mul(kap, o)) for o in orbit for kap in kbasis]
    return gfp_rank(field.p, vecs) == field.degree


def normal_element_search(frob: FrobeniusMap, seed: int = 0,
                          candidates=()) -> FieldElement:
    """First element of a seeded scan that generates a normal basis.

    Elements from `candidates` are tried first (in order), then uniformly
    random nonzero elements drawn from random.Random(seed).  Existence is
    guaranteed, so the scan terminates.
    """
    field = frob.field
    for cand in candidates:
        el = cand if isinstance(cand, FieldElement) else field.parse(cand)
        if is_normal(el, frob):
            return el
    rng = random.Random(seed)
    while True:
        el = FieldElement(field, rng.randrange(1, field.order))
        if is_normal(el, frob):
            return el


def find_embedding(L: Field, M: Field, sigma: FrobeniusMap, theta: FrobeniusMap,
                   override=None) -> FieldElement:
    """Image in M of L's generator under an embedding compatible with the twists.

    A valid image r is a root in M of L's modulus with theta(r) equal to the
    image of sigma(gen_L).  With no override, the compatible root with the
    lexicographically least coordinate vector is returned; an override value
    is validated against the same conditions.
    """
    if M.degree % L.degree != 0:
        raise ValueError("degree of L does not divide degree of M")
    sigma_gen = sigma.apply(L.gen.val)          # sigma(b) as an element of L

    def embeds(r: int) -> bool:
        # r is a candidate image of gen_L; check it kills L's modulus and
        # that theta agrees with the transported sigma on it
        acc = 0
        for c in reversed(L.modulus):
            acc = M.add(M.mul(acc, r), c)
        if acc != 0:
            return False
        img_sigma_gen = 0
        rp = 1
        for c in L.decode(sigma_gen):
            if c:
                term = rp
                for _ in range(c - 1):
                    term = M.add(term, rp)
                img_sigma_gen = M.add(img_sigma_gen, term)
            rp = M.mul(rp, r)
        return theta.apply(r) == img_sigma_gen

    if override is not None:
        el = override if isinstance(override, FieldElement) else M.parse(override)
        if not embeds(el.val):
            raise ValueError("embedding override is not a compatible root of L's modulus")
        return el

    # enumerate the subfield of M of L's size and pick compatible roots
    sub_frob = FrobeniusMap(M, L.degree)
    basis = subfield_basis(M, sub_frob)
    if len(basis) != L.degree:
        raise ValueError("no subfield of the right size in M")
    found = []
    for mask in range(1, M.p ** len(basis)):
        v, m = 0, mask
        for b in basis:
            m, c = divmod(m, M.p)
            for _ in range(c):
                v = M.add(v, b)
        if embeds(v):
            found.append(v)
    if not found:
        raise ValueError("no compatible root of L's modulus in M")
    # the generator itself wins when compatible (degenerate tower L = M),
    # otherwise the lexicographically least coordinate vector
    found.sort(key=lambda r: (r != M.gen.val, M.decode(r)))
    return FieldElement(M, found[0])


@dataclass(frozen=True)
class Tower:
    """A validated tower with its twisting automorphisms and embedding."""

    q: int
    mu: int
    s: int
    h: int
    k: int
    L: Field
    M: Field
    sigma: FrobeniusMap
    theta: FrobeniusMap
    eps_image: FieldElement
    _eps_table: object = dc_field(repr=False, compare=False, default=None)

    @property
    def n(self) -> int:
        return self.mu * self.s

    @property
    def p(self) -> int:
        return self.L.p

    @property
    def pi(self) -> FrobeniusMap:
        return self.theta ** self.mu

    def _tables(self):
        tab = self._eps_table
        if tab is None:
            fwd = {}
            r = self.eps_image.val
            for v in range(self.L.order):
                img, rp = 0, 1
                for c in self.L.decode(v):
                    for _ in range(c):
                        img = self.M.add(img, rp)
                    rp = self.M.mul(rp, r)
                fwd[v] = img
            inv = {img: v for v, img in fwd.items()}
            object.__setattr__(self, "_eps_table", (fwd, inv))
            tab = (fwd, inv)
        return tab

    def embed(self, x: FieldElement) -> FieldElement:
        if not (x.field is self.L or x.field == self.L):
            raise ValueError("field mismatch: expected an element of L")
        return FieldElement(self.M, self._tables()[0][x.val])

    def embed_val(self, v: int) -> int:
        return self._tables()[0][v]

    def project_val(self, v: int):
        """Packed L-value of a member of eps(L), or None if v lies outside."""
        return self._tables()[1].get(v)

    def project(self, x: FieldElement) -> FieldElement:
        v = self.project_val(x.val)
        if v is None:
            raise ValueError("element does not lie in the embedded copy of L")
        return FieldElement(self.L, v)

    def __repr__(self):
        return (f"Tower(GF({self.q}) <= GF({self.q}^{self.mu}) <= "
                f"GF({self.q}^{self.n}), h={self.h}, k={self.k})")


def default_extension_exponent(h: int, mu: int, s: int) -> int:
    """k = a*mu + h with a the product of primes dividing s but not h."""
    a = 1
    for prime in set(_prime_factors(s)):
        if h % prime != 0:
            a *= prime
    if s == 1:
        a = 0
    return a * mu + h


def extend_automorphism(q: int, mu: int, h: int, s: int, *, k=None,
                        L_modulus=None, M_modulus=None, eps=None,
                        p=None, dlog_limit=None, names=("b", "a")) -> Tower:
    """Build the tower for sigma = x -> x^(q^h) on GF(q^mu) and a degree-s extension.

    The extension exponent k defaults to the product-of-primes recipe; a
    supplied k is validated by gcd(k, mu*s) = 1 and k = h (mod mu).  Moduli
    default to the package's compatible table.
    """
    if s < 1 or mu < 1:
        raise ValueError("mu and s must be positive")
    if math.gcd(h, mu) != 1:
        raise ValueError(f"gcd(h, mu) must be 1, got gcd({h}, {mu})")
    if p is None:
        p = _prime_factors(q)[0] if q > 1 else 0
    d = round(math.log(q, p)) if q > 1 else 1
    if p ** d != q:
        raise ValueError(f"q = {q} is not a prime power")
    n = mu * s
    if k is None:
        k = default_extension_exponent(h, mu, s)
    if math.gcd(k, n) != 1:
        raise ValueError(f"extension exponent k = {k} is not coprime to n = {n}")
    if k % mu != h % mu:
        raise ValueError(f"extension exponent k = {k} is not congruent to h = {h} mod mu")

    kw = {} if dlog_limit is None else {"dlog_limit": dlog_limit}
    L = Field(p, L_modulus if L_modulus is not None else conway_polynomial(p, d * mu),
              name=names[0], **kw)
    M = Field(p, M_modulus if M_modulus is not None else conway_polynomial(p, d * n),
              name=names[1], **kw)
    if L.degree != d * mu or M.degree != d * n:
        raise ValueError("modulus degrees do not match the tower parameters")

    sigma = FrobeniusMap(L, d * h)
    theta = FrobeniusMap(M, d * k)
    if sigma.order != mu or theta.order != n:
        raise ValueError("twist orders do not match the tower parameters")
    if sigma.fixed_order != q or theta.fixed_order != q:
        raise ValueError("fixed subfields of the twists differ from GF(q)")

    eps_image = find_embedding(L, M, sigma, theta, override=eps)
    return Tower(q=q, mu=mu, s=s, h=h, k=k, L=L, M=M, sigma=sigma,
                 theta=theta, eps_image=eps_image)
