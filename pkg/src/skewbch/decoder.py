"""Nearest-neighbor decoding of skew BCH codes.

The BCH code over L with defining progression {0, t, ..., (delta-2)t} embeds
in the MDS code over M generated by the same progression.  A received word
is lifted to M, its coordinates are permuted by i -> i*t (mod n), and the
permuted word lives in a twisted Reed-Solomon code with generator

    g' = lclm( y - rho^i(beta') : 0 <= i <= delta-2 )  in  M[y; rho],

where rho = theta^t and beta' = alpha^(-1) * rho(alpha).  That code is
decoded in the classical syndrome / locator / evaluator style:

  * syndromes        s_i = sum_j w_j * rho^(i+j)(alpha),
  * syndrome matrix  H[i][j] = rho^(-j)(s_(i+j)), (tau+1) x tau,
  * error count      nu = rank(H), locator lambda from the left kernel of
                     the leading (nu+1) x nu block,
  * positions        the k with right evaluation of lambda at rho^k(beta')
                     zero (in M[y; rho]),
  * values           the linear system rho^(i+k_j)(alpha) * e_j = s_i.

The error is carried back through the permutation (x-position = t * y-position
mod n) and through the embedding; decoding succeeds only if the corrected
word is re-verified as a codeword.  Up to floor((delta-1)/2) errors are
always corrected; beyond that every exit is a typed failure or a genuine
codeword, never a silent corruption.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .codes import SkewCyclicCode
from .fields import FieldElement
from .linalg import mat_rank, mat_rcef, mat_solve
from .skewpoly import SkewPolyRing, SkewPolynomial, gcrd, lclm_linear
from .tower import Tower

OK = "ok"
TOO_MANY_ERRORS = "too_many_errors"
NOT_IN_L = "not_in_L"
INCONSISTENT = "inconsistent"


class DecodeFailure(Exception):
    """Typed decoding failure with the pipeline stage that raised it."""

    def __init__(self, stage: str, status: str, detail: str = ""):
        super().__init__(f"{stage}: {status}" + (f" ({detail})" if detail else ""))
        self.stage = stage
        self.status = status
        self.detail = detail


def permute(v: list, t: int, n: int) -> list:
    """Coordinate permutation w[i] = v[i*t mod n]; requires gcd(t, n) = 1."""
    if math.gcd(t, n) != 1:
        raise ValueError(f"t = {t} is not coprime to n = {n}")
    return [v[(i * t) % n] for i in range(n)]


def unpermute(w: list, t: int, n: int) -> list:
    if math.gcd(t, n) != 1:
        raise ValueError(f"t = {t} is not coprime to n = {n}")
    u = pow(t, -1, n)
    return [w[(i * u) % n] for i in range(n)]


@dataclass(frozen=True)
class RsContext:
    """Everything needed to run the twisted-RS decoder of a BCH code."""

    n: int
    t: int
    u: int
    delta: int
    tau: int
    rho: object                      # FrobeniusMap theta^t
    alpha: FieldElement
    beta_prime: FieldElement
    ring_y: SkewPolyRing
    g_prime: SkewPolynomial
    orbit: tuple                     # rho^k(alpha), packed, k = 0..n-1


def phi_map(f: SkewPolynomial, ctx: RsContext) -> SkewPolynomial:
    """The algebra isomorphism x^i -> y^(i*u) on residues of degree < n."""
    out = [0] * ctx.n
    for i, c in enumerate(f.coeff_vals):
        out[(i * ctx.u) % ctx.n] = c
    return ctx.ring_y._make(out)


def phi_inv(g: SkewPolynomial, ctx: RsContext, ring_x: SkewPolyRing) -> SkewPolynomial:
    out = [0] * ctx.n
    for j, c in enumerate(g.coeff_vals):
        out[(j * ctx.t) % ctx.n] = c
    return ring_x._make(out)


def rs_generator(tower: Tower, alpha: FieldElement, delta: int, t: int,
                 g_big: SkewPolynomial | None = None) -> RsContext:
    """Build the permuted-code context; cross-checks g' against phi(g_big)."""
    n = tower.n
    u = pow(t, -1, n)
    M = tower.M
    rho = tower.theta ** t
    ring_y = SkewPolyRing(M, rho, var="y")
    beta_prime = FieldElement(M, M.mul(M.inv(alpha.val), rho.apply(alpha.val)))
    roots = [FieldElement(M, rho.apply(beta_prime.val, i)) for i in range(delta - 1)]
    g_prime = lclm_linear(ring_y, roots)
    assert len(g_prime) - 1 == delta - 1, "twisted RS generator has unexpected degree"
    orbit = tuple(rho.apply(alpha.val, k) for k in range(n))
    ctx = RsContext(n=n, t=t, u=u, delta=delta, tau=(delta - 1) // 2, rho=rho,
                    alpha=alpha, beta_prime=beta_prime, ring_y=ring_y,
                    g_prime=g_prime, orbit=orbit)
    if g_big is not None:
        image = phi_map(g_big, ctx)
        assert gcrd(image, ring_y.x_pow_minus_one(n)) == g_prime, \
            "g' differs from gcrd(phi(g), y^n - 1)"
    return ctx


def syndromes(w: list[int], ctx: RsContext) -> list[int]:
    """s_i = sum_j w_j rho^(i+j)(alpha), i = 0..delta-2 (packed M-values in/out)."""
    M = ctx.rho.field
    n = ctx.n
    out = []
    for i in range(ctx.delta - 1):
        acc = 0
        for j in range(n):
            if w[j]:
                acc = M.add(acc, M.mul(w[j], ctx.orbit[(i + j) % n]))
        out.append(acc)
    return out


def syndrome_matrix(synd: list[int], ctx: RsContext) -> list[list[int]]:
    """H[i][j] = rho^(-j)(s_(i+j)) for i in [0, tau], j in [0, tau)."""
    tau = ctx.tau
    rho = ctx.rho
    return [[rho.field.frobenius(synd[i + j], (-rho.exponent * j) % rho.field.degree)
             for j in range(tau)] for i in range(tau + 1)]


def locator(H: list[list[int]], ctx: RsContext):
    """(nu, lambda, echelon): rank, monic left-kernel locator, column echelon form."""
    M = ctx.rho.field
    echelon, nu = mat_rcef(M, H)
    if nu == 0:
        return 0, ctx.ring_y.one, echelon
    lead = [row[:nu] for row in H[:nu]]
    rhs = [M.neg(x) for x in H[nu][:nu]]
    # solve lam * lead = -H[nu] for the degree-nu monic kernel vector
    lead_t = [[lead[r][c] for r in range(nu)] for c in range(nu)]
    sol = mat_solve(M, lead_t, rhs)
    if sol is None:
        raise DecodeFailure("locator", TOO_MANY_ERRORS,
                            "leading syndrome block is singular")
    lam = ctx.ring_y._make(list(sol) + [1])
    return nu, lam, echelon


def error_positions(lam: SkewPolynomial, ctx: RsContext) -> list[int]:
    """All k with rho^k(beta') a right root of the locator; must match deg(lam)."""
    M = ctx.rho.field
    nu = len(lam) - 1
    hits = [k for k in range(ctx.n)
            if lam.right_eval(FieldElement(M, ctx.rho.apply(ctx.beta_prime.val, k))).val == 0]
    if len(hits) != nu:
        raise DecodeFailure("error_positions", TOO_MANY_ERRORS,
                            f"locator of degree {nu} has {len(hits)} roots")
    return hits


def error_values(positions: list[int], synd: list[int], ctx: RsContext) -> list[int]:
    """Solve sum_j rho^(i+k_j)(alpha) e_j = s_i for the error values."""
    M = ctx.rho.field
    nu = len(positions)
    if nu == 0:
        return []
    A = [[ctx.orbit[(i + k) % ctx.n] for k in positions] for i in range(nu)]
    sol = mat_solve(M, A, synd[:nu])
    if sol is None:
        raise DecodeFailure("error_values", INCONSISTENT, "singular value system")
    if any(v == 0 for v in sol):
        raise DecodeFailure("error_values", INCONSISTENT, "vanishing error value")
    return sol


@dataclass
class DecodeReport:
    """Full trace of one decoding run; status 'ok' means v - e re-verified in C."""

    status: str
    received: list = None
    permuted: list = None
    syndromes: list = None
    syndrome_matrix: list = None
    echelon: list = None
    rank: int = None
    locator: SkewPolynomial = None
    positions_y: list = None
    positions_x: list = None
    error_values: list = None
    error: list = None               # over L, x-domain
    codeword: list = None            # over L
    message: SkewPolynomial = None
    failure_stage: str = None
    detail: str = ""


class Decoder:
    """Reusable decoder for one BCH-mode code (context built once)."""

    def __init__(self, code: SkewCyclicCode):
        if code.bch_t is None:
            raise ValueError("decoding requires a BCH-mode code (known t)")
        self.code = code
        self.tower = code.tower
        self.ctx = rs_generator(code.tower, code.alpha, code.delta, code.bch_t,
                                g_big=code.g_big)

    def decode(self, v) -> DecodeReport:
        code, ctx, tower = self.code, self.ctx, self.tower
        L, M = tower.L, tower.M
        word = code.word_poly(v)
        v_vals = list(word.coeff_vals) + [0] * (code.n - len(word.coeff_vals))
        v_elems = [FieldElement(L, x) for x in v_vals]
        rep = DecodeReport(status=OK, received=v_elems)
        try:
            lifted = [tower.embed_val(x) for x in v_vals]
            w = permute(lifted, ctx.t, ctx.n)
            rep.permuted = [FieldElement(M, x) for x in w]
            synd = syndromes(w, ctx)
            rep.syndromes = [FieldElement(M, x) for x in synd]
            if any(synd):
                H = syndrome_matrix(synd, ctx)
                rep.syndrome_matrix = [[FieldElement(M, x) for x in row] for row in H]
                nu, lam, ech = locator(H, ctx)
                rep.echelon = [[FieldElement(M, x) for x in row] for row in ech]
                rep.rank = nu
                rep.locator = lam
                pos_y = error_positions(lam, ctx)
                vals = error_values(pos_y, synd, ctx)
                # every syndrome must be explained, not only the first nu
                for i in range(ctx.delta - 1):
                    acc = 0
                    for k, e in zip(pos_y, vals):
                        acc = M.add(acc, M.mul(e, ctx.orbit[(i + k) % ctx.n]))
                    if acc != synd[i]:
                        raise DecodeFailure("verify_syndromes", TOO_MANY_ERRORS,
                                            "error does not explain all syndromes")
            else:
                nu, pos_y, vals = 0, [], []
                rep.rank = 0
                rep.locator = ctx.ring_y.one
            rep.positions_y = pos_y
            rep.positions_x = [(k * ctx.t) % ctx.n for k in pos_y]
            rep.error_values = [FieldElement(M, x) for x in vals]
            e_y = [0] * ctx.n
            for k, e in zip(pos_y, vals):
                e_y[k] = e
            e_x = unpermute(e_y, ctx.t, ctx.n)
            e_L = []
            for x in e_x:
                back = tower.project_val(x)
                if back is None:
                    raise DecodeFailure("pullback", NOT_IN_L,
                                        "error value outside the embedded subfield")
                e_L.append(back)
            c_vals = [L.sub(a, b) for a, b in zip(v_vals, e_L)]
            quot, remainder = code.ring_L._make(c_vals).right_divmod(code.g_bar_L)
            if remainder:
                raise DecodeFailure("verify_codeword", INCONSISTENT,
                                    "corrected word is not a codeword")
            rep.error = [FieldElement(L, x) for x in e_L]
            rep.codeword = [FieldElement(L, x) for x in c_vals]
            rep.message = quot
        except DecodeFailure as fail:
            rep.status = fail.status
            rep.failure_stage = fail.stage
            rep.detail = fail.detail
        return rep


def decode_bch(code: SkewCyclicCode, v) -> DecodeReport:
    """One-shot decode; build a Decoder once when decoding many words."""
    return Decoder(code).decode(v)
