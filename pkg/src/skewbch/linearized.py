"""Additive (linearized) operator view of twisted polynomials.

A twisted polynomial sum f_i x^i over M[x; theta] acts on M as the additive
operator sum f_i theta^i.  That operator is linear over the fixed field K of
theta, its kernel (the root space) is a K-subspace of M, and gamma is a root
of the operator exactly when gamma^(-1) theta(gamma) is a right root of the
polynomial.  Operators are stored as their coefficient sequences; expanding
them as classical polynomials of degree p^(k deg) is never necessary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, FieldElement, FrobeniusMap
from .linalg import gfp_combination_kernel, gfp_rank
from .skewpoly import SkewPolyRing, SkewPolynomial, pseudobound
from .tower import Tower, subfield_basis


@dataclass(frozen=True)
class LinearizedPoly:
    """Operator sum coeffs[i] * twist^i acting on the field of the twist."""

    field: Field
    twist: FrobeniusMap
    coeffs: tuple

    @property
    def op_degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, gamma: FieldElement) -> FieldElement:
        return op_eval(self, gamma)


def linearize(f: SkewPolynomial) -> LinearizedPoly:
    """Coefficient-preserving view of a twisted polynomial as an operator."""
    return LinearizedPoly(f.ring.field, f.ring.twist, tuple(f.coeff_vals))


def delinearize(F: LinearizedPoly, ring: SkewPolyRing) -> SkewPolynomial:
    if ring.field != F.field or ring.twist.exponent != F.twist.exponent:
        raise ValueError("ring does not match the operator's field and twist")
    return ring._make(list(F.coeffs))


def op_eval(F: LinearizedPoly, gamma: FieldElement) -> FieldElement:
    """sum_i F_i twist^i(gamma); additive and K-linear in gamma."""
    fld = F.field
    g = gamma.val if isinstance(gamma, FieldElement) else gamma % fld.p
    acc = 0
    e = F.twist.exponent
    for i, c in enumerate(F.coeffs):
        if c:
            acc = fld.add(acc, fld.mul(c, fld.frobenius(g, e * i)))
    return FieldElement(fld, acc)


def root_space(F: LinearizedPoly) -> list[FieldElement]:
    """K-basis of the kernel of the operator, K the fixed field of the twist.

    Returned in a deterministic reduced-echelon order.  The GF(p)-dimension
    of the kernel is always a multiple of [K : GF(p)].
    """
    fld = F.field
    p, m = fld.p, fld.degree
    basis = []
    v = 1
    gen = fld.gen.val
    for _ in range(m):
        basis.append(v)
        v = fld.mul(v, gen)
    images = [fld.decode(op_eval(F, FieldElement(fld, b)).val) for b in basis]
    kernel = [fld.encode(c) for c in gfp_combination_kernel(p, images)]

    kbasis = subfield_basis(fld, F.twist)
    dk = len(kbasis)
    assert len(kernel) % dk == 0, "kernel dimension not divisible by [K : GF(p)]"
    picked: list[int] = []
    span: list[list[int]] = []
    for cand in kernel:
        vecs = span + [fld.decode(fld.mul(kap, cand)) for kap in kbasis]
        if gfp_rank(p, vecs) > len(span):
            picked.append(cand)
            span = vecs
    assert len(picked) * dk == len(kernel)
    return [FieldElement(fld, x) for x in picked]


def minimal_linearized(tower: Tower, gamma: FieldElement) -> LinearizedPoly:
    """The least operator with root gamma, from the orbit closure of x - beta.

    With beta = gamma^(-1) theta(gamma), the closure of x - beta under
    pi = theta^mu right-divides x^n - 1 and its operator annihilates gamma
    together with the orbit elements theta^i(gamma) over the closure's
    defining set.
    """
    if not gamma:
        raise ValueError("gamma must be nonzero")
    M = tower.M
    theta = tower.theta
    beta = FieldElement(M, M.mul(M.inv(gamma.val), theta.apply(gamma.val)))
    ring = SkewPolyRing(M, theta, var="x")
    closed = pseudobound(ring.linear(beta), tower.pi, tower.s)
    F = linearize(closed)
    assert op_eval(F, gamma).val == 0, "closure operator fails to annihilate gamma"
    # the theta-orbit of gamma across the closure's root indices stays in the kernel
    for i in range(tower.n):
        root = FieldElement(M, theta.apply(beta.val, i))
        if closed.right_eval(root).val == 0:
            assert op_eval(F, FieldElement(M, theta.apply(gamma.val, i))).val == 0
    return F
