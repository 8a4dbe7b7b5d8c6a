"""Symbolic expression model for prefactored hypergeometric terms.

An Expr is a sum of terms; each term is a scalar coefficient times factors
drawn from z^alpha, (1-z)^alpha, e^{+-z} and a single pFq whose argument is
z, -z or z/(z-1).  This covers every side of the differentiation identities
handled by this package.  Expressions evaluate numerically at a point or as
Taylor jets, which is how n-th derivatives are obtained.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from decimal import localcontext
from enum import Enum
from typing import Optional, Union

from .core import (
    DEFAULT_CONTROL,
    EvalControl,
    HypSpec,
    ParamLike,
    Parameter,
    csum,
    evaluate,
    param,
)
from .errors import BranchPointEvaluation
from .jets import (
    _DEC_PREC,
    _KAPPA_LIMIT,
    DPair,
    Jet,
    d_add_scalar,
    d_constant,
    d_conv,
    d_div,
    d_exp,
    d_pair_to_complexes,
    d_pfq,
    d_pow,
    d_pow_int,
    d_scale,
    d_variable,
    derivative,
    jet_add,
    jet_constant,
    jet_div,
    jet_exp,
    jet_ipow,
    jet_mul,
    jet_pfq,
    jet_pow,
    jet_scale,
    jet_variable,
)


class ArgMap(Enum):
    """Inner argument of a pFq factor as a function of z."""

    IDENTITY = "identity"
    NEGATE = "negate"
    PFAFF = "pfaff"  # w = z/(z-1); requires z != 1


def map_point(m: ArgMap, z: complex) -> complex:
    if m is ArgMap.IDENTITY:
        return z
    if m is ArgMap.NEGATE:
        return -z
    if z == 1:
        raise BranchPointEvaluation("Pfaff argument z/(z-1) undefined at z=1")
    return z / (z - 1)


def map_jet(m: ArgMap, var: Jet) -> Jet:
    if m is ArgMap.IDENTITY:
        return var
    if m is ArgMap.NEGATE:
        return jet_scale(var, -1)
    if var.coeffs[0] == 1:
        raise BranchPointEvaluation("Pfaff argument z/(z-1) undefined at z=1")
    den = jet_add(var, jet_constant(-1, var.base_point, var.order))
    return jet_div(var, den)


@dataclass(frozen=True)
class PowZ:
    alpha: Parameter


@dataclass(frozen=True)
class PowOneMinusZ:
    alpha: Parameter


@dataclass(frozen=True)
class ExpZ:
    sign: int


@dataclass(frozen=True)
class Hyp:
    spec: HypSpec
    map: ArgMap = ArgMap.IDENTITY


Factor = Union[PowZ, PowOneMinusZ, ExpZ, Hyp]


@dataclass(frozen=True)
class Term:
    coeff: complex
    factors: tuple[Factor, ...]


@dataclass(frozen=True)
class Expr:
    terms: tuple[Term, ...]


def powz(alpha: ParamLike) -> PowZ:
    return PowZ(param(alpha))


def pow1mz(alpha: ParamLike) -> PowOneMinusZ:
    return PowOneMinusZ(param(alpha))


def expz(sign: int) -> ExpZ:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return ExpZ(sign)


def hyp(spec: HypSpec, m: ArgMap = ArgMap.IDENTITY) -> Hyp:
    return Hyp(spec, m)


def term(coeff: complex, *factors: Factor) -> Term:
    return Term(complex(coeff), tuple(factors))


def expr(*terms: Term) -> Expr:
    return Expr(tuple(terms))


def _cpow(base: complex, alpha: Parameter) -> complex:
    if alpha.exact is not None:
        k = alpha.exact
        if base == 0:
            if k > 0:
                return 0j
            if k == 0:
                return 1 + 0j
            raise BranchPointEvaluation("z**k with k < 0 at z = 0")
        return base**k
    if base == 0:
        raise BranchPointEvaluation("non-integer power at its branch point")
    return cmath.exp(alpha.value * cmath.log(base))


def _factor_value(f: Factor, z: complex, ctrl: EvalControl) -> complex:
    if isinstance(f, PowZ):
        return _cpow(z, f.alpha)
    if isinstance(f, PowOneMinusZ):
        return _cpow(1 - z, f.alpha)
    if isinstance(f, ExpZ):
        return cmath.exp(f.sign * z)
    return evaluate(f.spec, map_point(f.map, z), ctrl).value


def eval_expr(e: Expr, z: complex, ctrl: Optional[EvalControl] = None) -> complex:
    """Numeric value of the expression at z; empty expression gives 0."""
    ctrl = ctrl or DEFAULT_CONTROL
    zc = complex(z)
    vals = []
    for t in e.terms:
        if t.coeff == 0:
            continue
        v = t.coeff
        for f in t.factors:
            v *= _factor_value(f, zc, ctrl)
        vals.append(v)
    return csum(vals)


def _jet_cpow(base: Jet, alpha: Parameter) -> Jet:
    if alpha.exact is not None:
        return jet_ipow(base, alpha.exact)
    return jet_pow(base, alpha.value)


def _factor_jet(f: Factor, var: Jet, ctrl: EvalControl) -> Jet:
    if isinstance(f, PowZ):
        return _jet_cpow(var, f.alpha)
    if isinstance(f, PowOneMinusZ):
        one_minus = jet_add(jet_constant(1, var.base_point, var.order), jet_scale(var, -1))
        return _jet_cpow(one_minus, f.alpha)
    if isinstance(f, ExpZ):
        return jet_exp(var, f.sign)
    return jet_pfq(f.spec, map_jet(f.map, var), ctrl)


# For the extended-precision rerun of a poorly conditioned term the series
# truncation error is amplified by the same cancellation, so the stop rule
# runs much deeper than the double-precision default.
_DEC_REL_TOL = 1e-30


def _d_factor(f: Factor, var: DPair, z0: complex, order: int, ctrl: EvalControl) -> DPair:
    if isinstance(f, PowZ):
        if f.alpha.exact is not None:
            return d_pow_int(var, f.alpha.exact)
        return d_pow(var, f.alpha.value)
    if isinstance(f, PowOneMinusZ):
        one_minus = d_add_scalar(d_scale(var, -1), 1)
        if f.alpha.exact is not None:
            return d_pow_int(one_minus, f.alpha.exact)
        return d_pow(one_minus, f.alpha.value)
    if isinstance(f, ExpZ):
        return d_exp(var, f.sign)
    if f.map is ArgMap.IDENTITY:
        arg = var
    elif f.map is ArgMap.NEGATE:
        arg = d_scale(var, -1)
    else:
        if z0 == 1:
            raise BranchPointEvaluation("Pfaff argument z/(z-1) undefined at z=1")
        arg = d_div(var, d_add_scalar(var, -1))
    return d_pfq(f.spec, arg, ctrl, _DEC_REL_TOL)


def _term_jet_decimal(t: Term, z0: complex, order: int, ctrl: EvalControl) -> Jet:
    with localcontext() as cx:
        cx.prec = _DEC_PREC
        var = d_variable(z0, order)
        acc = d_constant(t.coeff, order)
        for f in t.factors:
            acc = d_conv(acc, _d_factor(f, var, z0, order, ctrl))
        return Jet(z0, tuple(d_pair_to_complexes(acc)))


def _term_jet(t: Term, var: Jet, ctrl: EvalControl) -> Jet:
    """Product jet for one term, with a cancellation guard.

    Alongside the product a nonnegative magnitude convolution is carried;
    if its bound dwarfs a coefficient of the result, the Leibniz sums
    cancelled heavily and the term is recomputed in extended precision.
    """
    order = var.order
    j = jet_constant(t.coeff, var.base_point, order)
    mags = [abs(t.coeff)] + [0.0] * order
    for f in t.factors:
        fj = _factor_jet(f, var, ctrl)
        j = jet_mul(j, fj)
        fm = [abs(x) for x in fj.coeffs]
        mags = [
            sum(mags[k] * fm[i - k] for k in range(i + 1)) for i in range(order + 1)
        ]
    for i in range(order + 1):
        if mags[i] > 1e-250 and mags[i] > _KAPPA_LIMIT * abs(j.coeffs[i]):
            return _term_jet_decimal(t, var.base_point, order, ctrl)
    return j


def eval_expr_jet(e: Expr, z0: complex, order: int, ctrl: Optional[EvalControl] = None) -> Jet:
    """Taylor jet of the expression around z0, truncated at ``order``."""
    ctrl = ctrl or DEFAULT_CONTROL
    var = jet_variable(complex(z0), order)
    acc = jet_constant(0, var.base_point, order)
    for t in e.terms:
        if t.coeff == 0:
            continue
        acc = jet_add(acc, _term_jet(t, var, ctrl))
    return acc


def nth_derivative(e: Expr, n: int, z0: complex, ctrl: Optional[EvalControl] = None) -> complex:
    """d^n/dz^n of the expression at z0, computed through jet arithmetic."""
    return derivative(eval_expr_jet(e, z0, n, ctrl), n)


def _fmt_complex(x: complex) -> str:
    if x.imag == 0:
        return repr(x.real)
    return repr(x).strip("()")


def format_expr(e: Expr) -> str:
    """Plain-text serialization, one term per line.

    Grammar (space-separated tokens)::

        line   := coeff factor*
        factor := 'powz' param | 'pow1mz' param | 'exp' ('+'|'-')
                | 'pfq' p q param*p ';' param*q map
        map    := 'identity' | 'negate' | 'pfaff'

    Exact-integer parameters print as bare integers, numeric ones as floats
    (or re+imj for complex values).
    """
    lines = []
    for t in e.terms:
        toks = [_fmt_complex(t.coeff)]
        for f in t.factors:
            if isinstance(f, PowZ):
                toks += ["powz", str(f.alpha)]
            elif isinstance(f, PowOneMinusZ):
                toks += ["pow1mz", str(f.alpha)]
            elif isinstance(f, ExpZ):
                toks += ["exp", "+" if f.sign > 0 else "-"]
            else:
                toks += ["pfq", str(f.spec.p), str(f.spec.q)]
                toks += [str(x) for x in f.spec.upper]
                toks.append(";")
                toks += [str(x) for x in f.spec.lower]
                toks.append(f.map.value)
        lines.append(" ".join(toks))
    return "\n".join(lines)
