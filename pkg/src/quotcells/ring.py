"""Exact graded-commutative arithmetic in the model ring

    H*(C^n; Q) (x) Q[w_1..w_n] (x) Q[t_0..t_{r-1}]

for a smooth projective genus-g curve C.

H*(C) is realized on the basis {1, a_1..a_g, b_1..b_g, pt} with degrees
0, 1, 1, 2 and the symplectic product table a_k * b_k = pt = -(b_k * a_k);
every other product of positive-degree classes vanishes.  Tensor factors
multiply with the Koszul sign (-1)^{sum_{i<j} |y_i||x_j|}; the variables
w_i and t_a are even and central.

Elements are sparse maps monomial -> Fraction.  All arithmetic is exact;
no floating point anywhere.  Elements are immutable values: every
operation returns a fresh element, so they are safe to share between
concurrent tasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

# Letter codes for the H*(C) basis: UNIT, POINT, alpha_k = 2k, beta_k = 2k+1.
UNIT = 0
POINT = 1


def alpha(k: int) -> int:
    return 2 * k


def beta(k: int) -> int:
    return 2 * k + 1


def letter_degree(code: int) -> int:
    if code == UNIT:
        return 0
    if code == POINT:
        return 2
    return 1


def letter_name(code: int) -> str:
    if code == UNIT:
        return "one"
    if code == POINT:
        return "pt"
    k, odd = divmod(code, 2)
    return ("b%d" if odd else "a%d") % k


def _letter_product(a: int, b: int):
    """Product of two basis letters: (sign, code), or None when zero."""
    if a == UNIT:
        return (1, b)
    if b == UNIT:
        return (1, a)
    if a == POINT or b == POINT:
        return None
    if a ^ 1 == b:  # the symplectic pair a_k, b_k
        return (1, POINT) if a < b else (-1, POINT)
    return None


def _trim(t):
    """Drop trailing zeros so t-monomials hash canonically."""
    n = len(t)
    while n and t[n - 1] == 0:
        n -= 1
    return t[:n]


UNBOUNDED = None  # rank sentinel: t-variables indexed on demand


@dataclass(frozen=True)
class RingContext:
    """Global parameters: genus, number of factors, equivariant rank, degrees.

    rank 0 disables the t-variables, a positive rank r allows t_0..t_{r-1}
    and restricts weight entries to [0, r-1]; rank UNBOUNDED (None) allows
    arbitrarily many t-variables and unrestricted weight entries.
    degrees[a] is the degree of the line bundle L_a (all-zero default).
    """

    genus: int = 0
    factors: int = 1
    rank: int | None = 0
    degrees: tuple = ()

    def __post_init__(self):
        if self.genus < 0 or self.factors < 0:
            raise ValueError("genus and factors must be non-negative")
        if self.rank is not UNBOUNDED and self.rank < 0:
            raise ValueError("rank must be >= 0 or UNBOUNDED")
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if self.rank == 0 and self.degrees:
            raise ValueError("rank-0 context carries no line-bundle degrees")
        if self.rank not in (0, UNBOUNDED) and len(self.degrees) not in (0, self.rank):
            raise ValueError("degrees must have length rank (or be empty)")
        object.__setattr__(self, "_cell_cache", {})
        object.__setattr__(self, "_memo", {})

    # -- scalars and generators -------------------------------------------

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self.scalar(1)

    def scalar(self, q) -> "RingElement":
        q = Fraction(q)
        if q == 0:
            return self.zero()
        mono = ((UNIT,) * self.factors, (0,) * self.factors, ())
        return RingElement(self, {mono: q})

    def monomial(self, letters=None, omega=None, t=(), coeff=1) -> "RingElement":
        n = self.factors
        letters = tuple(letters) if letters is not None else (UNIT,) * n
        omega = tuple(omega) if omega is not None else (0,) * n
        if len(letters) != n or len(omega) != n:
            raise ValueError("letters and omega must have length %d" % n)
        for code in letters:
            self._check_letter(code)
        if any(e < 0 for e in omega) or any(e < 0 for e in t):
            raise ValueError("exponents must be non-negative")
        t = _trim(tuple(t))
        self._check_t_length(len(t))
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        return RingElement(self, {(letters, omega, t): coeff})

    def omega(self, i: int, power: int = 1) -> "RingElement":
        """The class w_i (1-based factor index)."""
        self._check_factor(i)
        exps = [0] * self.factors
        exps[i - 1] = power
        return self.monomial(omega=exps)

    def t_var(self, a: int) -> "RingElement":
        """The equivariant parameter t_a (0-based)."""
        if a < 0:
            raise ValueError("t index must be >= 0")
        self._check_t_length(a + 1)
        return self.monomial(t=(0,) * a + (1,))

    def letter_at(self, i: int, code: int) -> "RingElement":
        """The pullback p_i^*(class) of a single curve class."""
        self._check_factor(i)
        self._check_letter(code)
        letters = [UNIT] * self.factors
        letters[i - 1] = code
        return self.monomial(letters=letters)

    def pt(self, i: int) -> "RingElement":
        return self.letter_at(i, POINT)

    def curve_basis(self):
        """Letter codes of the H*(C) basis, in degree order."""
        g = self.genus
        return [UNIT] + [alpha(k) for k in range(1, g + 1)] + \
            [beta(k) for k in range(1, g + 1)] + [POINT]

    def bundle_degree(self, a: int) -> int:
        return self.degrees[a] if a < len(self.degrees) else 0

    # -- validation --------------------------------------------------------

    def _check_factor(self, i: int):
        if not 1 <= i <= self.factors:
            raise ValueError("factor index %d out of range [1, %d]" % (i, self.factors))

    def _check_letter(self, code: int):
        if code in (UNIT, POINT):
            return
        k = code // 2
        if not 1 <= k <= self.genus:
            raise ValueError("letter %s out of range for genus %d" % (letter_name(code), self.genus))

    def _check_t_length(self, length: int):
        if length == 0:
            return
        if self.rank == 0:
            raise ValueError("t-variables are not available in a rank-0 context")
        if self.rank is not UNBOUNDED and length > self.rank:
            raise ValueError("t index %d out of range for rank %d" % (length - 1, self.rank))


def monomial_degree(mono) -> int:
    letters, omega, t = mono
    return sum(letter_degree(c) for c in letters) + 2 * sum(omega) + 2 * sum(t)


def _letter_key(code):
    return (-letter_degree(code), code)


def monomial_sort_key(mono):
    """Canonical total order: degree, then t, omega (graded lex, high first),
    then letters factor-by-factor (high degree first)."""
    letters, omega, t = mono
    return (
        monomial_degree(mono),
        (-sum(t), tuple(-e for e in t)),
        (-sum(omega), tuple(-e for e in omega)),
        tuple(_letter_key(c) for c in letters),
    )


def _koszul_sign(lx, ly) -> int:
    # (-1)^{sum_{i<j} |y_i||x_j|}; only odd letters contribute.
    total = 0
    suffix = 0
    odd_x = [letter_degree(c) == 1 for c in lx]
    for i in range(len(lx) - 1, -1, -1):
        if letter_degree(ly[i]) == 1:
            total += suffix
        if odd_x[i]:
            suffix += 1
    return -1 if total % 2 else 1


class RingElement:
    """Sparse exact-rational combination of tensor-omega-t monomials."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: RingContext, coeffs: dict):
        self.ctx = ctx
        self.coeffs = coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, frozenset(self.coeffs.items())))

    def _require_same_ctx(self, other):
        if self.ctx != other.ctx:
            raise ValueError("elements built against different contexts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.scalar(other)
        self._require_same_ctx(other)
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return RingElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ctx, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return self.ctx.zero()
            return RingElement(self.ctx, {m: c * q for m, c in self.coeffs.items()})
        self._require_same_ctx(other)
        out = {}
        for (lx, ox, tx), cx in self.coeffs.items():
            for (ly, oy, ty), cy in other.coeffs.items():
                sign = 1
                letters = []
                for a, b in zip(lx, ly):
                    p = _letter_product(a, b)
                    if p is None:
                        break
                    sign *= p[0]
                    letters.append(p[1])
                else:
                    sign *= _koszul_sign(lx, ly)
                    if tx and ty:
                        ta, tb = (tx, ty) if len(tx) >= len(ty) else (ty, tx)
                        t = tuple(a + b for a, b in zip(ta, tb)) + ta[len(tb):]
                    else:
                        t = tx or ty
                    mono = (tuple(letters),
                            tuple(a + b for a, b in zip(ox, oy)), t)
                    s = out.get(mono, 0) + sign * cx * cy
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        return RingElement(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        from .grammar import format_element
        return "<%s>" % format_element(self)


def element_from_terms(ctx: RingContext, terms) -> RingElement:
    """Build an element from (monomial, coefficient) pairs, merging duplicates."""
    out = {}
    for mono, c in terms:
        s = out.get(mono, 0) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return RingElement(ctx, out)


def cohomological_degree(x: RingElement):
    """Degree of a homogeneous element; "inhomogeneous" otherwise, None for 0."""
    degs = {monomial_degree(m) for m in x.coeffs}
    if not degs:
        return None
    if len(degs) > 1:
        return "inhomogeneous"
    return degs.pop()


def graded_piece(x: RingElement, degree: int) -> RingElement:
    return RingElement(x.ctx, {m: c for m, c in x.coeffs.items()
                               if monomial_degree(m) == degree})


def is_homogeneous(x: RingElement) -> bool:
    return cohomological_degree(x) != "inhomogeneous"


# -- symmetric-group actions ------------------------------------------------

def _perm_sign_on_letters(sigma, letters) -> int:
    odd = [i for i, c in enumerate(letters) if letter_degree(c) == 1]
    inv = 0
    for a in range(len(odd)):
        for b in range(a + 1, len(odd)):
            if sigma[odd[a]] > sigma[odd[b]]:
                inv += 1
    return -1 if inv % 2 else 1


def permute_factors(sigma, x: RingElement) -> RingElement:
    """Left action of the symmetric group on the curve factors.

    sigma is a tuple with sigma[i] = image of (0-based) position i.  The
    letter in factor i moves to factor sigma[i]; transposing two odd
    letters costs a sign; omega and t exponents are untouched.
    """
    n = x.ctx.factors
    if len(sigma) != n or set(sigma) != set(range(n)):
        raise ValueError("not a permutation of %d factors" % n)
    out = {}
    for (letters, omega, t), c in x.coeffs.items():
        nl = [UNIT] * n
        for i, code in enumerate(letters):
            nl[sigma[i]] = code
        mono = (tuple(nl), omega, t)
        s = out.get(mono, 0) + c * _perm_sign_on_letters(sigma, letters)
        if s:
            out[mono] = s
        else:
            del out[mono]
    return RingElement(x.ctx, out)


def permute_factors_omega(sigma, x: RingElement) -> RingElement:
    """Simultaneous permutation of curve factors and omega variables.

    This is the ring automorphism sending p_i^*(a) w_i^l to
    p_{sigma(i)}^*(a) w_{sigma(i)}^l; its invariants realize the image of
    the quot-scheme cohomology inside the complete-flag model.
    """
    n = x.ctx.factors
    if len(sigma) != n or set(sigma) != set(range(n)):
        raise ValueError("not a permutation of %d factors" % n)
    out = {}
    for (letters, omega, t), c in x.coeffs.items():
        nl = [UNIT] * n
        no = [0] * n
        for i in range(n):
            nl[sigma[i]] = letters[i]
            no[sigma[i]] = omega[i]
        mono = (tuple(nl), tuple(no), t)
        s = out.get(mono, 0) + c * _perm_sign_on_letters(sigma, letters)
        if s:
            out[mono] = s
        else:
            del out[mono]
    return RingElement(x.ctx, out)


def project_invariant(perms, x: RingElement) -> RingElement:
    """Average of the factor-permutation action over a finite group."""
    perms = list(perms)
    acc = x.ctx.zero()
    for sigma in perms:
        acc = acc + permute_factors(sigma, x)
    return acc * Fraction(1, len(perms))


# -- diagonal and point classes ---------------------------------------------

def diagonal(ctx: RingContext, i: int, j: int) -> RingElement:
    """Kunneth representative of the diagonal class in factors i < j:

        pt_i + pt_j - sum_k (a_k^(i) b_k^(j) - b_k^(i) a_k^(j)).

    The sign convention is pinned by diagonal^2 = (2-2g) pt_i pt_j.
    """
    ctx._check_factor(i)
    ctx._check_factor(j)
    if not i < j:
        raise ValueError("need i < j")
    acc = ctx.pt(i) + ctx.pt(j)
    for k in range(1, ctx.genus + 1):
        letters = [UNIT] * ctx.factors
        letters[i - 1], letters[j - 1] = alpha(k), beta(k)
        acc = acc - ctx.monomial(letters=letters)
        letters = list(letters)
        letters[i - 1], letters[j - 1] = beta(k), alpha(k)
        acc = acc + ctx.monomial(letters=letters)
    return acc


def small_diagonal(ctx: RingContext, subset) -> RingElement:
    """Class of the small diagonal over a subset of factors.

    Computed as the product of pairwise diagonals along the sorted chain;
    any spanning tree of pairwise diagonals gives the same class.
    """
    members = sorted(set(subset))
    for i in members:
        ctx._check_factor(i)
    if len(members) <= 1:
        return ctx.one()
    acc = ctx.one()
    for a, b in zip(members, members[1:]):
        acc = acc * diagonal(ctx, a, b)
    return acc


def point_class(ctx: RingContext, subset) -> RingElement:
    """Product of point classes over a subset of factors."""
    acc = ctx.one()
    for i in sorted(set(subset)):
        acc = acc * ctx.pt(i)
    return acc


def embed(x: RingElement, target: RingContext) -> RingElement:
    """Extend an element to a context with more factors (unit letters,
    zero omega exponents in the new trailing factors)."""
    src = x.ctx
    if (src.genus, src.rank, src.degrees) != (target.genus, target.rank, target.degrees):
        raise ValueError("contexts differ in genus, rank or degrees")
    if src.factors > target.factors:
        raise ValueError("target context has fewer factors")
    pad = target.factors - src.factors
    out = {}
    for (letters, omega, t), c in x.coeffs.items():
        out[(letters + (UNIT,) * pad, omega + (0,) * pad, t)] = c
    return RingElement(target, out)


def specialize_t_zero(x: RingElement) -> RingElement:
    """Set every equivariant parameter t_a to zero."""
    return RingElement(x.ctx, {m: c for m, c in x.coeffs.items() if not m[2]})


def omega_degree(x: RingElement):
    """Largest total omega-exponent over the support (None for 0)."""
    if not x.coeffs:
        return None
    return max(sum(m[1]) for m in x.coeffs)


def omega_top_part(x: RingElement) -> RingElement:
    d = omega_degree(x)
    if d is None:
        return x
    return RingElement(x.ctx, {m: c for m, c in x.coeffs.items() if sum(m[1]) == d})


def letter_monomials(ctx: RingContext, degree: int):
    """All letter tuples (no omega, no t) of the given total degree."""
    basis = ctx.curve_basis()
    for letters in itertools.product(basis, repeat=ctx.factors):
        if sum(letter_degree(c) for c in letters) == degree:
            yield letters


def monomials_of_degree(ctx: RingContext, degree: int):
    """All t-free monomials (letters, omega) of the given total degree."""
    n = ctx.factors
    basis = ctx.curve_basis()
    for letters in itertools.product(basis, repeat=n):
        rest = degree - sum(letter_degree(c) for c in letters)
        if rest < 0 or rest % 2:
            continue
        for omega in _compositions(rest // 2, n):
            yield (letters, omega, ())


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
