"""Skew cyclic codes with designed Hamming distance.

A code of length n over L is the coordinate image of a left ideal generated
by a right divisor of x^n - 1 in L[x; sigma].  Generators are produced from
index sets: the progression set

    T(b, delta, r, t1, t2) = { b + i*t1 + l*t2 : 0 <= i <= delta-2, 0 <= l <= r }

yields designed distance delta + r once closed under i -> i + mu (mod n);
the closure makes the least common left multiple of the linear factors
x - theta^i(beta) descend from M[x; theta] to L[x; sigma].  Here
beta = alpha^(-1) * theta(alpha) for a normal element alpha, so the n factors
x - theta^i(beta) jointly decompose x^n - 1.

Two independent distance oracles are provided: exhaustive message
enumeration (`min_distance_bruteforce`, numpy-vectorized) and a support
search against a parity-check matrix (`min_distance_by_supports`).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .fields import Field, FieldElement, FrobeniusMap
from .linalg import mat_rank
from .skewpoly import SkewPolyRing, SkewPolynomial, lclm_linear, pseudobound
from .tower import Tower, is_normal

DEFAULT_CAP = 1 << 24


@dataclass(frozen=True)
class HTParams:
    """Progression parameters (b, delta, r, t1, t2) for length n."""

    b: int
    delta: int
    r: int
    t1: int
    t2: int
    n: int

    def validate(self) -> "HTParams":
        n = self.n
        if not 0 <= self.b < n:
            raise ValueError(f"offset b = {self.b} out of range for n = {n}")
        if self.delta < 2:
            raise ValueError("delta must be at least 2")
        if self.delta + self.r > n - 1:
            raise ValueError(f"delta + r = {self.delta + self.r} exceeds n - 1 = {n - 1}")
        if self.t1 < 1 or math.gcd(n, self.t1) != 1:
            raise ValueError(f"t1 = {self.t1} must be coprime to n = {n}")
        # t2 is irrelevant when r = 0 (the l-range is trivial)
        if self.r > 0:
            if self.t2 < 1:
                raise ValueError("t2 must be positive when r > 0")
            if math.gcd(n, self.t2) >= self.delta:
                raise ValueError(
                    f"gcd(n, t2) = {math.gcd(n, self.t2)} must be below delta = {self.delta}")
        if self.r < 0:
            raise ValueError("r must be non-negative")
        return self

    @property
    def designed_distance(self) -> int:
        return self.delta + self.r

    def indices(self) -> set[int]:
        return {(self.b + i * self.t1 + l * self.t2) % self.n
                for i in range(self.delta - 1) for l in range(self.r + 1)}


@dataclass(frozen=True)
class DefiningSet:
    """A sorted subset of Z_n together with the coset geometry (mu, s)."""

    indices: tuple
    n: int
    mu: int
    s: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, i):
        return i % self.n in self.indices

    @property
    def is_closed(self) -> bool:
        s = set(self.indices)
        return all((i + self.mu) % self.n in s for i in s)

    def closure(self) -> "DefiningSet":
        out = {(i + j * self.mu) % self.n for i in self.indices for j in range(self.s)}
        return DefiningSet(tuple(out), self.n, self.mu, self.s)

    @property
    def coset_count(self) -> int:
        closed = self.closure()
        return len(closed) // self.s


def ht_set(params: HTParams, mu: int, s: int) -> DefiningSet:
    """The progression index set of the given parameters, reduced mod n."""
    params.validate()
    return DefiningSet(tuple(params.indices()), params.n, mu, s)


def coset_closure(ds: DefiningSet) -> DefiningSet:
    return ds.closure()


def defining_set_of(g: SkewPolynomial, beta: FieldElement, theta: FrobeniusMap,
                    n: int, mu: int = 1, s: int = 1) -> DefiningSet:
    """All i in Z_n for which theta^i(beta) is a right root of g."""
    hits = [i for i in range(n)
            if g.right_eval(FieldElement(theta.field, theta.apply(beta.val, i))).val == 0]
    return DefiningSet(tuple(hits), n, mu, s)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SkewCyclicCode:
    tower: Tower
    alpha: FieldElement
    beta: FieldElement
    params: HTParams
    T: DefiningSet
    T_closed: DefiningSet
    g_big: SkewPolynomial            # generator of the M-side code, in M[x; theta]
    g_bar: SkewPolynomial            # closure generator over M, coefficients in eps(L)
    g_bar_L: SkewPolynomial          # the same generator pulled back to L[x; sigma]
    n: int
    dim: int
    designed_distance: int
    bch_t: int | None = None

    @property
    def delta(self) -> int:
        return self.params.delta

    @property
    def ring_L(self) -> SkewPolyRing:
        return self.g_bar_L.ring

    @property
    def ring_M(self) -> SkewPolyRing:
        return self.g_bar.ring

    def encode(self, message) -> list[FieldElement]:
        """Codeword m * g_bar as a length-n coefficient vector over L."""
        R = self.ring_L
        m = message if isinstance(message, SkewPolynomial) else R(message)
        if m.ring != R:
            raise ValueError("message must live in L[x; sigma]")
        if m.degree >= self.dim:
            raise ValueError(f"message degree {m.degree} exceeds dimension {self.dim} - 1")
        word = m * self.g_bar_L
        c = list(word.coeff_vals) + [0] * (self.n - len(word.coeff_vals))
        return [FieldElement(self.tower.L, v) for v in c]

    def word_poly(self, v) -> SkewPolynomial:
        vals = []
        for x in v:
            if isinstance(x, FieldElement):
                if not (x.field is self.tower.L or x.field == self.tower.L):
                    raise ValueError("word entries must lie in L")
                vals.append(x.val)
            else:
                vals.append(self.tower.L.parse(x).val)
        if len(vals) != self.n:
            raise ValueError(f"word length {len(vals)} differs from n = {self.n}")
        return self.ring_L._make(vals)

    def is_codeword(self, v) -> bool:
        return self.g_bar_L.right_divides(self.word_poly(v))

    def parity_check_matrix(self) -> list[list[FieldElement]]:
        """n x (delta-1) matrix over M whose right kernel cuts out the M-side code.

        Row i, column j holds theta^i(theta^(t*j)(alpha)); a length-n word w
        over M satisfies w * H = 0 exactly when it lies in the code of g_big.
        """
        if self.bch_t is None:
            raise ValueError("parity-check matrix requires a BCH-mode code (known t)")
        M, theta, t = self.tower.M, self.tower.theta, self.bch_t
        a = self.alpha.val
        return [[FieldElement(M, theta.apply(a, i + t * j))
                 for j in range(self.delta - 1)] for i in range(self.n)]


def build_code(tower: Tower, alpha, params: HTParams, *, bch_t=None) -> SkewCyclicCode:
    """Construct the skew cyclic code with designed distance delta + r.

    Requires alpha normal for tower.theta and the coset closure of the
    progression set to be a proper subset of Z_n.
    """
    params.validate()
    if params.n != tower.n:
        raise ValueError("parameter length differs from tower length")
    M, L = tower.M, tower.L
    theta = tower.theta
    alpha = alpha if isinstance(alpha, FieldElement) else M.parse(alpha)
    if not is_normal(alpha, theta):
        raise ValueError("alpha does not generate a normal basis")
    beta = FieldElement(M, M.mul(M.inv(alpha.val), theta.apply(alpha.val)))

    T = ht_set(params, tower.mu, tower.s)
    T_closed = T.closure()
    n = tower.n
    if len(T_closed) == n:
        raise ValueError("closure of the defining set is all of Z_n; the code is zero")

    S = SkewPolyRing(M, theta, var="x")
    roots_T = [FieldElement(M, theta.apply(beta.val, i)) for i in T]
    roots_closed = [FieldElement(M, theta.apply(beta.val, i)) for i in T_closed]
    g_big = lclm_linear(S, roots_T)
    g_bar = lclm_linear(S, roots_closed)

    assert g_bar == pseudobound(g_big, tower.pi, tower.s), \
        "closure generator disagrees with the pi-orbit lclm"
    assert len(g_bar) - 1 == len(T_closed), "closure generator has unexpected degree"
    assert not S.x_pow_minus_one(n).right_divmod(g_bar)[1], \
        "closure generator does not divide x^n - 1"

    coeffs_L = []
    for v in g_bar.coeff_vals:
        w = tower.project_val(v)
        if w is None:
            raise ArithmeticError("closure generator has a coefficient outside eps(L)")
        coeffs_L.append(w)
    R = SkewPolyRing(L, tower.sigma, var="x")
    g_bar_L = R._make(coeffs_L)

    return SkewCyclicCode(
        tower=tower, alpha=alpha, beta=beta, params=params, T=T, T_closed=T_closed,
        g_big=g_big, g_bar=g_bar, g_bar_L=g_bar_L, n=n, dim=n - len(T_closed),
        designed_distance=params.designed_distance, bch_t=bch_t,
    )


def build_bch(tower: Tower, alpha, delta: int, t: int) -> SkewCyclicCode:
    """Skew BCH code of designed distance delta from the set {0, t, ..., (delta-2)t}."""
    params = HTParams(b=0, delta=delta, r=0, t1=t, t2=1, n=tower.n)
    return build_code(tower, alpha, params, bch_t=t)


# ---------------------------------------------------------------------------
# distance bounds and oracles
# ---------------------------------------------------------------------------

def ht_bound(ds: DefiningSet):
    """Best designed distance delta + r exhibited inside the defining set.

    Exhaustively searches admissible (b, delta, r, t1, t2) with the whole
    progression contained in ds, returning (bound, witness).  Ties between
    maximizing witnesses break toward small (b, r, t1, t2).
    """
    n = ds.n
    members = set(ds.indices)
    if not members:
        return 1, None
    best_val = 0
    best_key = None
    best_witness = None
    for t1 in range(1, n):
        if math.gcd(t1, n) != 1:
            continue
        # run[c] = number of consecutive c, c+t1, c+2*t1, ... inside the set
        run = [0] * n
        for c in range(n):
            k = 0
            cur = c
            while k < n and cur in members:
                k += 1
                cur = (cur + t1) % n
            run[c] = k
        for b in range(n):
            if b not in members:
                continue
            for t2 in range(1, n):
                g2 = math.gcd(n, t2)
                dmin = n + 1
                for r in range(n):
                    dmin = min(dmin, run[(b + r * t2) % n] + 1)
                    delta = min(dmin, n - 1 - r)
                    if delta < 2 or (r > 0 and g2 >= delta):
                        if delta < 2:
                            break
                        continue
                    val = delta + r
                    key = (b, r, t1, t2)
                    if val > best_val or (val == best_val and key < best_key):
                        best_val = val
                        best_key = key
                        best_witness = HTParams(b=b, delta=delta, r=r,
                                                t1=t1, t2=t2, n=n)
    return best_val, best_witness


def _mul_table(F: Field) -> np.ndarray:
    q = F.order
    if F.has_dlog:
        log = np.array(F.log, dtype=np.int64)
        exp = np.array(F.exp, dtype=np.int64)
        a = np.arange(q, dtype=np.int64)
        tab = exp[(log[a, None] + log[None, a]) % (q - 1)]
        tab[0, :] = 0
        tab[:, 0] = 0
        return tab.astype(np.uint32)
    tab = np.zeros((q, q), dtype=np.uint32)
    for i in range(1, q):
        for j in range(1, q):
            tab[i, j] = F.mul(i, j)
    return tab


def _add_table(F: Field) -> np.ndarray | None:
    if F.p == 2:
        return None   # packed addition is XOR
    q = F.order
    tab = np.zeros((q, q), dtype=np.uint32)
    for i in range(q):
        for j in range(i, q):
            v = F.add(i, j)
            tab[i, j] = v
            tab[j, i] = v
    return tab


def _generator_rows(code: SkewCyclicCode) -> np.ndarray:
    rows = []
    for i in range(code.dim):
        shifted = code.g_bar_L.shift(i)
        c = list(shifted.coeff_vals) + [0] * (code.n - len(shifted.coeff_vals))
        rows.append(c)
    return np.array(rows, dtype=np.uint32)


def _scan_range(G, mul, add, q, start, stop):
    """Minimum nonzero-codeword weight over message prefixes in [start, stop)."""
    k, n = G.shape
    last = mul[:, G[k - 1]]               # (q, n): all multiples of the last row
    best = n + 1
    for prefix in range(start, stop):
        idx = prefix
        partial = np.zeros(n, dtype=np.uint32)
        for i in range(k - 1):
            idx, sym = divmod(idx, q)
            if sym:
                row = mul[sym, G[i]]
                partial = partial ^ row if add is None else add[partial, row]
        block = np.bitwise_xor(partial[None, :], last) if add is None \
            else add[partial[None, :], last]
        weights = np.count_nonzero(block, axis=1)
        if prefix == 0:
            weights[0] = n + 1            # skip the zero message
        w = int(weights.min())
        if w < best:
            best = w
    return best


def _mindist_job(payload):
    p, modulus, G, q, start, stop, p_add = payload
    F = Field(p, modulus, check=False)
    G = np.asarray(G, dtype=np.uint32)
    mul = _mul_table(F)
    add = _add_table(F) if p_add else None
    return _scan_range(G, mul, add, q, start, stop)


def min_distance_bruteforce(code: SkewCyclicCode, cap: int = DEFAULT_CAP,
                            jobs: int = 1) -> int:
    """Exact minimum Hamming weight by enumerating all nonzero messages."""
    L = code.tower.L
    q = L.order
    total = q ** code.dim
    if total > cap:
        raise ValueError(f"|L|^dim = {total} exceeds cap {cap}")
    G = _generator_rows(code)
    prefixes = q ** (code.dim - 1)
    if jobs <= 1 or prefixes < 4 * jobs:
        mul = _mul_table(L)
        add = _add_table(L)
        return _scan_range(G, mul, add, q, 0, prefixes)
    chunk = (prefixes + jobs - 1) // jobs
    payloads = [(L.p, L.modulus, G.tolist(), q, lo, min(lo + chunk, prefixes), L.p != 2)
                for lo in range(0, prefixes, chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return min(pool.map(_mindist_job, payloads))


def min_distance_by_supports(field: Field, parity_rows, max_weight=None) -> int:
    """Exact minimum distance from a parity-check matrix by support search.

    The distance is the least w for which some w rows of the matrix are
    linearly dependent; suitable for short codes where message enumeration
    is out of reach.
    """
    rows = [[c.val if isinstance(c, FieldElement) else c for c in row]
            for row in parity_rows]
    n = len(rows)
    limit = max_weight if max_weight is not None else n
    for w in range(1, limit + 1):
        for support in combinations(range(n), w):
            sub = [rows[i] for i in support]
            if mat_rank(field, sub) < w:
                return w
    raise ValueError(f"no dependent support of weight <= {limit} found")
