"""Truncated Taylor-series (jet) arithmetic at a complex base point.

A jet of order K stores the Taylor coefficients c_0..c_K of an analytic
function around ``base_point``; the n-th derivative is n! * c_n.  Composing
jets through products, powers, exponentials and hypergeometric series gives
an exact-in-structure oracle for high-order derivatives, where finite
differences would lose roughly half the significant digits per order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Optional

from .core import (
    ConvergenceClass,
    DEFAULT_CONTROL,
    EvalControl,
    HypSpec,
    _term_ratio_parts,
    classify_convergence,
    csum,
    termination_order,
    validate_spec,
)
from .errors import (
    BasePointAtBranchPoint,
    DivisionByZeroJet,
    DomainError,
    NoConvergence,
    OrderTooLow,
    PoleCoefficient,
)


@dataclass(frozen=True)
class Jet:
    base_point: complex
    coeffs: tuple[complex, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a jet needs at least the order-0 coefficient")


def jet_variable(z0: complex, order: int) -> Jet:
    """The identity function f(z) = z as a jet at z0."""
    if order < 0:
        raise ValueError("order must be >= 0")
    c = [complex(z0)] + [0j] * order
    if order >= 1:
        c[1] = 1 + 0j
    return Jet(complex(z0), tuple(c))


def jet_constant(value: complex, z0: complex, order: int) -> Jet:
    return Jet(complex(z0), (complex(value),) + (0j,) * order)


def _check_compatible(a: Jet, b: Jet) -> None:
    if a.base_point != b.base_point or a.order != b.order:
        raise ValueError("jets must share base point and order")


def jet_add(a: Jet, b: Jet) -> Jet:
    _check_compatible(a, b)
    return Jet(a.base_point, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def jet_scale(a: Jet, s: complex) -> Jet:
    return Jet(a.base_point, tuple(s * x for x in a.coeffs))


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Cauchy product truncated at the common order."""
    _check_compatible(a, b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for i in range(len(ac)):
        out.append(csum([ac[j] * bc[i - j] for j in range(i + 1)]))
    return Jet(a.base_point, tuple(out))


def jet_div(a: Jet, b: Jet) -> Jet:
    """Division by recursive deconvolution; requires b.coeffs[0] != 0."""
    _check_compatible(a, b)
    if b.coeffs[0] == 0:
        raise DivisionByZeroJet("leading coefficient of divisor is zero")
    ac, bc = a.coeffs, b.coeffs
    q: list[complex] = []
    for i in range(len(ac)):
        acc = ac[i] - csum([bc[j] * q[i - j] for j in range(1, i + 1)])
        q.append(acc / bc[0])
    return Jet(a.base_point, tuple(q))


def jet_exp(a: Jet, sign: int = 1) -> Jet:
    """exp(sign * f) via the recurrence g' = sign * f' * g."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ac = a.coeffs
    g = [cmath.exp(sign * ac[0])]
    for i in range(1, len(ac)):
        acc = csum([j * ac[j] * g[i - j] for j in range(1, i + 1)])
        g.append(sign * acc / i)
    return Jet(a.base_point, tuple(g))


def jet_pow(a: Jet, alpha: complex) -> Jet:
    """f**alpha on the principal branch via alpha * f' * g = f * g'."""
    ac = a.coeffs
    if ac[0] == 0:
        raise BasePointAtBranchPoint("jet_pow base point at branch point")
    alpha = complex(alpha)
    g = [cmath.exp(alpha * cmath.log(ac[0]))]
    for i in range(1, len(ac)):
        acc = csum([((alpha + 1) * j - i) * ac[j] * g[i - j] for j in range(1, i + 1)])
        g.append(acc / (i * ac[0]))
    return Jet(a.base_point, tuple(g))


def jet_ipow(a: Jet, m: int) -> Jet:
    """Integer power by repeated multiplication (no branch cut)."""
    unit = jet_constant(1, a.base_point, a.order)
    if m == 0:
        return unit
    out = unit
    for _ in range(abs(m)):
        out = jet_mul(out, a)
    if m < 0:
        out = jet_div(unit, out)
    return out


# Taylor coefficients of a series at z0 can cancel heavily (peak term far
# above the sum, e.g. lower parameters with negative real part at |z0| near
# the disk boundary).  When the measured peak-to-sum ratio of any jet
# coefficient exceeds this, the accumulation is redone in 40-digit decimal
# arithmetic so the returned doubles stay accurate to ~1 ulp.
_KAPPA_LIMIT = 1e4
_DEC_PREC = 40


def jet_pfq(spec: HypSpec, arg: Jet, ctrl: Optional[EvalControl] = None) -> Jet:
    """pFq(a; b; w) with w an analytic argument given as a jet.

    Terminating series are summed exactly; otherwise the stop rule of the
    scalar evaluator is applied to the magnitude-dominant coefficient of the
    accumulating jet.  Ill-conditioned accumulations escalate to extended
    precision internally.
    """
    ctrl = ctrl or DEFAULT_CONTROL
    validate_spec(spec)
    m = termination_order(spec)
    if m is None:
        cls = classify_convergence(spec, arg.coeffs[0])
        if cls not in (ConvergenceClass.ENTIRE, ConvergenceClass.INSIDE_UNIT_DISK):
            raise DomainError(
                f"jet base value {arg.coeffs[0]} not strictly inside the convergence domain"
            )

    width = arg.order + 1
    buckets: list[list[complex]] = [[] for _ in range(width)]
    abs_sums = [0.0] * width
    running = [0j] * width
    pw = jet_constant(1, arg.base_point, arg.order)
    c = 1 + 0j
    small = 0
    k = 0
    while True:
        tmax = 0.0
        for i in range(width):
            t = c * pw.coeffs[i]
            buckets[i].append(t)
            running[i] += t
            at = abs(t)
            abs_sums[i] += at
            if at > tmax:
                tmax = at
        if m is not None:
            if k == m:
                break
        else:
            smax = max(abs(x) for x in running)
            if tmax < ctrl.rel_tol * smax:
                small += 1
                if small >= ctrl.consecutive_small:
                    break
            else:
                small = 0
            if k + 1 >= ctrl.max_terms:
                raise NoConvergence(f"no convergence within {ctrl.max_terms} terms")
        num, den = _term_ratio_parts(spec, k)
        if den == 0:
            raise PoleCoefficient(f"vanishing lower Pochhammer factor at k={k + 1}")
        c *= num / den
        pw = jet_mul(pw, arg)
        k += 1

    vals = [csum(b) for b in buckets]
    for i in range(width):
        if abs_sums[i] > 0 and abs_sums[i] > _KAPPA_LIMIT * abs(vals[i]):
            # the truncation tail is bounded relative to the dominant
            # coefficient, so the rerun also has to cut much deeper for the
            # cancelled coefficients to come out accurate
            with localcontext() as cx:
                cx.prec = _DEC_PREC
                rel_tol = min(ctrl.rel_tol, 1e-25)
                vals = d_pair_to_complexes(d_pfq(spec, d_pair_from_jet(arg), ctrl, rel_tol))
            break
    return Jet(arg.base_point, tuple(vals))


# ---------------------------------------------------------------------------
# extended-precision jets
#
# A jet is carried as a pair of Decimal coefficient lists (real, imaginary).
# All recurrences below are rational in the coefficients; the only
# transcendental scalars (the leading values of exp and of a non-integer
# power) enter as a uniform factor per jet, so their double-precision
# rounding scales the result without being amplified by cancellation.
# Callers are expected to hold a decimal localcontext with enough precision.

DPair = tuple[list[Decimal], list[Decimal]]


def d_pair_from_jet(j: Jet) -> DPair:
    return [Decimal(x.real) for x in j.coeffs], [Decimal(x.imag) for x in j.coeffs]


def d_pair_to_complexes(p: DPair) -> list[complex]:
    return [complex(float(r), float(i)) for r, i in zip(p[0], p[1])]


def d_variable(z0: complex, order: int) -> DPair:
    zero = Decimal(0)
    re = [Decimal(z0.real)] + [zero] * order
    im = [Decimal(z0.imag)] + [zero] * order
    if order >= 1:
        re[1] = Decimal(1)
    return re, im


def d_constant(value: complex, order: int) -> DPair:
    zero = Decimal(0)
    re = [Decimal(value.real)] + [zero] * order
    im = [Decimal(value.imag)] + [zero] * order
    return re, im


def d_scale(p: DPair, s: complex) -> DPair:
    srd, sid = Decimal(s.real), Decimal(s.imag)
    re = [srd * r - sid * i for r, i in zip(p[0], p[1])]
    im = [srd * i + sid * r for r, i in zip(p[0], p[1])]
    return re, im


def d_add_scalar(p: DPair, s: complex) -> DPair:
    re = list(p[0])
    im = list(p[1])
    re[0] += Decimal(s.real)
    im[0] += Decimal(s.imag)
    return re, im


def d_conv(a: DPair, b: DPair) -> DPair:
    ar, ai = a
    br, bi = b
    n = len(ar)
    zero = Decimal(0)
    re = []
    im = []
    for i in range(n):
        accr = zero
        acci = zero
        for j in range(i + 1):
            accr += ar[j] * br[i - j] - ai[j] * bi[i - j]
            acci += ar[j] * bi[i - j] + ai[j] * br[i - j]
        re.append(accr)
        im.append(acci)
    return re, im


def _dc_div(nr, ni, dr, di):
    dd = dr * dr + di * di
    return (nr * dr + ni * di) / dd, (ni * dr - nr * di) / dd


def d_div(a: DPair, b: DPair) -> DPair:
    ar, ai = a
    br, bi = b
    if br[0] == 0 and bi[0] == 0:
        raise DivisionByZeroJet("leading coefficient of divisor is zero")
    qr: list[Decimal] = []
    qi: list[Decimal] = []
    zero = Decimal(0)
    for i in range(len(ar)):
        accr = ar[i]
        acci = ai[i]
        for j in range(1, i + 1):
            accr -= br[j] * qr[i - j] - bi[j] * qi[i - j]
            acci -= br[j] * qi[i - j] + bi[j] * qr[i - j]
        r, im_ = _dc_div(accr, acci, br[0], bi[0])
        qr.append(r)
        qi.append(im_)
    return qr, qi


def d_pow_int(p: DPair, m: int) -> DPair:
    order = len(p[0]) - 1
    out = d_constant(1, order)
    for _ in range(abs(m)):
        out = d_conv(out, p)
    if m < 0:
        out = d_div(d_constant(1, order), out)
    return out


def d_pow(p: DPair, alpha: complex) -> DPair:
    """f**alpha; the leading scalar c0**alpha is taken in double precision."""
    ar, ai = p
    if ar[0] == 0 and ai[0] == 0:
        raise BasePointAtBranchPoint("jet_pow base point at branch point")
    c0r, c0i = ar[0], ai[0]
    alr, ali = Decimal(alpha.real), Decimal(alpha.imag)
    gr = [Decimal(1)]
    gi = [Decimal(0)]
    for i in range(1, len(ar)):
        di = Decimal(i)
        accr = Decimal(0)
        acci = Decimal(0)
        for k in range(1, i + 1):
            # weight = (alpha + 1) * k - i
            kd = Decimal(k)
            wr = (alr + 1) * kd - di
            wi = ali * kd
            tr = wr * ar[k] - wi * ai[k]
            ti = wr * ai[k] + wi * ar[k]
            accr += tr * gr[i - k] - ti * gi[i - k]
            acci += tr * gi[i - k] + ti * gr[i - k]
        r, im_ = _dc_div(accr, acci, di * c0r, di * c0i)
        gr.append(r)
        gi.append(im_)
    lead = complex(float(c0r), float(c0i)) ** complex(alpha)
    return d_scale((gr, gi), lead)


def d_exp(p: DPair, sign: int = 1) -> DPair:
    """exp(sign*f); the leading scalar exp(sign*c0) is double precision."""
    ar, ai = p
    gr = [Decimal(1)]
    gi = [Decimal(0)]
    sd = Decimal(sign)
    for i in range(1, len(ar)):
        accr = Decimal(0)
        acci = Decimal(0)
        for k in range(1, i + 1):
            kd = Decimal(k)
            accr += kd * (ar[k] * gr[i - k] - ai[k] * gi[i - k])
            acci += kd * (ar[k] * gi[i - k] + ai[k] * gr[i - k])
        di = Decimal(i)
        gr.append(sd * accr / di)
        gi.append(sd * acci / di)
    lead = cmath.exp(sign * complex(float(ar[0]), float(ai[0])))
    return d_scale((gr, gi), lead)


def d_pfq(spec: HypSpec, arg: DPair, ctrl: EvalControl, rel_tol: float) -> DPair:
    """pFq series over decimal jets with a magnitude stop rule."""
    validate_spec(spec)
    m = termination_order(spec)
    ar, ai = arg
    width = len(ar)
    zero = Decimal(0)
    upr = [(Decimal(a.value.real), Decimal(a.value.imag)) for a in spec.upper]
    lor = [(Decimal(b.value.real), Decimal(b.value.imag)) for b in spec.lower]
    pwr = [Decimal(1)] + [zero] * (width - 1)
    pwi = [zero] * width
    sr = [zero] * width
    si = [zero] * width
    cr, ci = Decimal(1), zero
    small = 0
    k = 0
    while True:
        tmax = 0.0
        smax = 0.0
        for i in range(width):
            tr = cr * pwr[i] - ci * pwi[i]
            ti = cr * pwi[i] + ci * pwr[i]
            sr[i] += tr
            si[i] += ti
            tmax = max(tmax, abs(float(tr)) + abs(float(ti)))
            smax = max(smax, abs(float(sr[i])) + abs(float(si[i])))
        if m is not None:
            if k == m:
                break
        else:
            if tmax < rel_tol * smax:
                small += 1
                if small >= ctrl.consecutive_small:
                    break
            else:
                small = 0
            if k + 1 >= ctrl.max_terms:
                raise NoConvergence(f"no convergence within {ctrl.max_terms} terms")
        kd = Decimal(k)
        nr, ni = cr, ci
        for xr, xi in upr:
            fr, fi = xr + kd, xi
            nr, ni = nr * fr - ni * fi, nr * fi + ni * fr
        dr, di = Decimal(k + 1), zero
        for xr, xi in lor:
            fr, fi = xr + kd, xi
            dr, di = dr * fr - di * fi, dr * fi + di * fr
        if dr == 0 and di == 0:
            raise PoleCoefficient(f"vanishing lower Pochhammer factor at k={k + 1}")
        cr, ci = _dc_div(nr, ni, dr, di)
        pwr, pwi = d_conv((pwr, pwi), arg)
        k += 1
    return sr, si


def derivative(a: Jet, n: int) -> complex:
    """n-th derivative of the represented function: n! * coeffs[n]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > a.order:
        raise OrderTooLow(f"jet of order {a.order} cannot give derivative {n}")
    return math.factorial(n) * a.coeffs[n]
