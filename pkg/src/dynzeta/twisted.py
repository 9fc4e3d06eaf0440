"""The ring of additive polynomials under composition, in operator form.

An element is stored by its coefficient vector (c_0, ..., c_m) and stands
for the additive map x -> sum c_i x^(p^i).  Writing F for the p-power
operator, multiplication is composition and obeys F c = c^p F, so the
coefficient of F^(i+j) in a product picks up a p^i-power twist on the
right factor.  The degree of a nonzero element as a polynomial map is
p^m; only the exponent m is stored, and p^m is materialized lazily as a
big integer where needed.

Coefficients live in a finite FieldCtx or in F_p(u); the latter supports
exactly the arithmetic, Frobenius and zero-testing that the transcendental
linear-coefficient analysis needs.
"""

from dataclasses import dataclass

from .errors import (HypothesisViolated, InseparableSigma, Mismatch,
                     ScaleExceeded, SpecError, ZeroElement)
from .field import Poly, check_poly_scale
from .intarith import multiplicative_order, v_p
from .sentinels import INFINITY, TRANSCENDENTAL

_DIRECT_CHECK_COEFF_CAP = 4096


@dataclass(frozen=True)
class TwistedPoly:
    ctx: object
    coeffs: tuple  # FieldElem entries, index i belongs to F^i, trimmed

    @classmethod
    def from_elems(cls, ctx, elems):
        elems = list(elems)
        while elems and elems[-1].is_zero():
            elems.pop()
        return cls(ctx, tuple(elems))

    @classmethod
    def from_ints(cls, ctx, ints):
        return cls.from_elems(ctx, [ctx.elem(c) for c in ints])

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls.from_ints(ctx, [1])

    @classmethod
    def frobenius_gen(cls, ctx):
        return cls.from_ints(ctx, [0, 1])

    def is_zero(self):
        return not self.coeffs

    @property
    def top_index(self):
        """m such that the map degree is p^m; -1 for the zero element."""
        return len(self.coeffs) - 1

    def map_degree(self) -> int:
        if self.is_zero():
            raise ZeroElement("zero additive map has no degree")
        return self.ctx.p ** self.top_index

    def constant_coeff(self):
        return self.coeffs[0] if self.coeffs else self.ctx.zero()

    def __repr__(self):
        return f"TwistedPoly({len(self.coeffs)} coeffs over {self.ctx!r})"


def tw_add(a: TwistedPoly, b: TwistedPoly) -> TwistedPoly:
    _check(a, b)
    xs, ys = a.coeffs, b.coeffs
    if len(xs) < len(ys):
        xs, ys = ys, xs
    out = list(xs)
    for i, c in enumerate(ys):
        out[i] = out[i] + c
    return TwistedPoly.from_elems(a.ctx, out)


def tw_neg(a: TwistedPoly) -> TwistedPoly:
    return TwistedPoly.from_elems(a.ctx, [-c for c in a.coeffs])


def tw_sub(a: TwistedPoly, b: TwistedPoly) -> TwistedPoly:
    return tw_add(a, tw_neg(b))


def tw_mul(a: TwistedPoly, b: TwistedPoly) -> TwistedPoly:
    """Composition product with the twist rule F c = c^p F."""
    _check(a, b)
    if a.is_zero() or b.is_zero():
        return TwistedPoly.zero(a.ctx)
    out = [a.ctx.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
    twisted = list(b.coeffs)
    for i, ca in enumerate(a.coeffs):
        if i > 0:
            twisted = [c.frobenius() for c in twisted]
        if ca.is_zero():
            continue
        for j, cb in enumerate(twisted):
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return TwistedPoly.from_elems(a.ctx, out)


def tw_pow(a: TwistedPoly, n: int) -> TwistedPoly:
    if n < 0:
        raise SpecError("negative twisted powers are not defined")
    result = TwistedPoly.one(a.ctx)
    acc = a
    while n:
        if n & 1:
            result = tw_mul(result, acc)
        acc = tw_mul(acc, acc)
        n >>= 1
    return result


def tw_sub_scalar(a: TwistedPoly, omega) -> TwistedPoly:
    """Subtract the linear map x -> omega*x, i.e. omega from c_0."""
    omega = a.ctx.elem(omega)
    coeffs = list(a.coeffs) if a.coeffs else [a.ctx.zero()]
    coeffs[0] = coeffs[0] - omega
    return TwistedPoly.from_elems(a.ctx, coeffs)


def v_phi(a: TwistedPoly):
    """Index of the least nonzero coefficient; INFINITY for the zero map."""
    for i, c in enumerate(a.coeffs):
        if not c.is_zero():
            return i
    return INFINITY


def kernel_size_ga(sigma: TwistedPoly) -> int:
    """Number of closure roots of the additive map: deg / p^(v_phi)."""
    if sigma.is_zero():
        raise ZeroElement("kernel of the zero map is everything")
    return sigma.ctx.p ** (sigma.top_index - v_phi(sigma))


def lte_ga(x: TwistedPoly, n: int):
    """v_phi(x^n - 1) from v_phi(x - 1), for x congruent to 1 mod F.

    Returns v_phi(x - 1) * p^(v_p(n)); cross-checked against the direct
    expansion whenever the coefficient count stays small.  The degenerate
    x = 1 returns INFINITY.
    """
    ctx = x.ctx
    one = TwistedPoly.one(ctx)
    base = v_phi(tw_sub(x, one))
    if base is INFINITY:
        return INFINITY
    if base < 1:
        raise HypothesisViolated("x - 1 is not divisible by the p-power operator")
    value = base * ctx.p ** v_p(n, ctx.p)
    if (x.top_index + 1) * n <= _DIRECT_CHECK_COEFF_CAP and ctx.flavor == "finite":
        direct = v_phi(tw_sub(tw_pow(x, n), one))
        if direct != value:
            raise Mismatch(f"twisted exponent lift: formula {value} != direct {direct}")
    return value


def constant_order(sigma: TwistedPoly):
    """Multiplicative order of the linear coefficient, or TRANSCENDENTAL."""
    c0 = sigma.constant_coeff()
    if c0.is_zero():
        raise InseparableSigma("separability requires a nonzero linear coefficient")
    ctx = sigma.ctx
    if ctx.flavor == "ratfunc":
        if not c0.is_constant():
            return TRANSCENDENTAL
        return multiplicative_order(c0.constant_value(), ctx.p)
    if ctx.is_prime_field:
        return multiplicative_order(c0.rep, ctx.p)
    order = ctx.order - 1
    # order of c0 in the cyclic group F_q^*
    from .intarith import factorize
    result = order
    for q in factorize(order):
        while result % q == 0 and (c0 ** (result // q)).is_one():
            result //= q
    return result


def realize_additive(sigma: TwistedPoly) -> Poly:
    """The additive polynomial sum c_i x^(p^i) as a dense Poly."""
    ctx = sigma.ctx
    if ctx.flavor != "finite":
        raise SpecError("realization needs finite coefficients")
    if sigma.is_zero():
        return Poly.zero(ctx)
    degree = ctx.p ** sigma.top_index
    check_poly_scale(degree)
    coeffs = [ctx.zero()] * (degree + 1)
    for i, c in enumerate(sigma.coeffs):
        coeffs[ctx.p ** i] = c
    return Poly.from_elems(ctx, coeffs)


def v_phi_pow_minus(sigma: TwistedPoly, n: int, omega):
    """v_phi(sigma^n - omega) without forming sigma^n when avoidable.

    The linear coefficient of sigma^n is c_0^n; when it differs from omega
    the valuation is zero.  Equality can only happen for algebraic linear
    coefficients, in which case the full twisted power is formed.
    """
    omega = sigma.ctx.elem(omega)
    c0n = sigma.constant_coeff() ** n
    if c0n != omega:
        return 0
    if (sigma.top_index + 1) * n > _DIRECT_CHECK_COEFF_CAP * 8:
        raise ScaleExceeded("twisted power too large for direct valuation")
    return v_phi(tw_sub_scalar(tw_pow(sigma, n), omega))


def _check(a, b):
    if a.ctx != b.ctx:
        raise SpecError("mixed-context twisted arithmetic")
