"""Catalog of differentiation identities with a random-draw verifier.

Each displayed case line of the identity family (Th1-1..Th1-5 for general
pFq, Co1-1..Co1-5 for 1F1 with an e^{-z} prefactor, Co2-1..Co2-10 for 2F1
with power prefactors) is one catalog entry: an applicability predicate plus
literal LHS/RHS expression builders.  ``verify_entry`` draws admissible
random parameters and checks the RHS against the jet-oracle n-th derivative
of the LHS.

The Kummer-type rewrites (exponential, Euler, Pfaff) are provided both as
expression transforms and as the composition machinery that rebuilds each
corollary RHS mechanically from its theorem-line source.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .core import (
    DEFAULT_CONTROL,
    EvalControl,
    HypSpec,
    Parameter,
    param,
    pochhammer,
    pochhammer_vec,
    validate_spec,
)
from .errors import NotApplicable, SingularCoefficient
from .expressions import (
    ArgMap,
    ExpZ,
    Expr,
    Factor,
    Hyp,
    PowOneMinusZ,
    PowZ,
    Term,
    eval_expr,
    expr,
    expz,
    hyp,
    nth_derivative,
    pow1mz,
    powz,
    term,
)
from .identities import (
    _shift_vec,
    theorem_exceptional_term,
    theorem_general_term,
)

Z_POINTS = (0.2, 1 / 3, 0.7)
# z/(z-1) leaves the unit disk for z > 1/2, so Pfaff-argument entries are
# verified on the first two sample points only.
Z_POINTS_PFAFF = (0.2, 1 / 3)

_ONE = param(1)


@dataclass(frozen=True)
class IdentityEntry:
    """One displayed identity line: predicate plus LHS/RHS builders."""

    id: str
    params_schema: tuple[str, ...]
    applicable: Callable[[dict], bool]
    lhs: Callable[[dict], Expr]
    rhs: Callable[[dict], Expr]
    draw: Callable[[random.Random], dict]
    z_points: tuple[float, ...] = Z_POINTS


@dataclass(frozen=True)
class VerifyReport:
    id: str
    trials: int
    max_rel_err: float
    failures: tuple
    seed: int
    tol: float

    @property
    def passed(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# random parameter draws

_BAND = 1e-3  # half-width of the excluded band around integers


def _off_integers(x: complex) -> bool:
    xc = complex(x)
    return abs(xc - round(xc.real)) > _BAND


def _cplx(rng: random.Random) -> complex:
    return complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))


def _draw_complexes(rng: random.Random, count: int, derived=None) -> list[Parameter]:
    """Draw ``count`` complex parameters, all integer-banded, and keep any
    ``derived`` combinations off the integers as well."""
    while True:
        xs = [_cplx(rng) for _ in range(count)]
        checks = list(xs)
        if derived is not None:
            checks += derived(xs)
        if all(_off_integers(v) for v in checks):
            return [param(x) for x in xs]


def _draw_real_nonint(rng: random.Random) -> Parameter:
    while True:
        x = rng.uniform(-2.0, 2.0)
        if abs(x - round(x)) > _BAND:
            return param(x)


def _draw_n(rng: random.Random) -> int:
    return rng.randint(1, 5)


# ---------------------------------------------------------------------------
# theorem-line RHS builders over explicit parameter vectors
#
# These take raw upper/lower vectors so the corollary composition can reuse
# them at substituted parameters.  Terms whose prefactor vanishes exactly are
# dropped (degenerate cases where the line loses a term); a vanishing
# Pochhammer denominator raises SingularCoefficient.

Vec = tuple[Parameter, ...]


def _terms_th11(upper: Vec, lower: Vec, r: Parameter, n: int, branch: str) -> tuple[Term, ...]:
    out = []
    if branch in ("general", "negative"):
        t = theorem_general_term(upper, lower, r, n)
        if t is not None:
            out.append(t)
    if branch in ("exceptional", "negative"):
        t = theorem_exceptional_term(upper, lower, r.exact, n)  # type: ignore[arg-type]
        if t is not None:
            out.append(t)
    return tuple(out)


def _terms_th12(upper: Vec, lower: Vec, n: int) -> tuple[Term, ...]:
    den = pochhammer_vec(lower, n)
    if den == 0:
        raise SingularCoefficient("(b)_n vanishes")
    coeff = pochhammer_vec(upper, n) / den
    if coeff == 0:
        return ()
    hs = HypSpec(_shift_vec(upper, n), _shift_vec(lower, n))
    validate_spec(hs)
    return (term(coeff, hyp(hs)),)


def _terms_th13(a1: Parameter, rest_upper: Vec, lower: Vec, n: int) -> tuple[Term, ...]:
    coeff = pochhammer(a1, n)
    if coeff == 0:
        return ()
    hs = HypSpec((a1 + n,) + rest_upper, lower)
    validate_spec(hs)
    return (term(coeff, powz(a1 - 1), hyp(hs)),)


def _terms_th14_regular(upper: Vec, lower: Vec, n: int) -> tuple[Term, ...]:
    # validate before the zero-coefficient drop: at exact b1 <= n the line is
    # singular (a pole of the series), not zero
    b1, rest = lower[0], lower[1:]
    c0 = b1 - n
    hs = HypSpec(upper, (c0,) + rest)
    validate_spec(hs)
    coeff = pochhammer(c0, n)
    if coeff == 0:
        return ()
    return (term(coeff, powz(c0 - 1), hyp(hs)),)


def _terms_th14_exceptional(upper: Vec, lower: Vec, n: int) -> tuple[Term, ...]:
    # as above: at exact b1 >= n+2 the lower parameter n-b1+2 is a
    # nonpositive integer and the line is singular
    b1 = lower[0]
    s = n - b1.exact + 1  # type: ignore[operator]
    hs = HypSpec(_shift_vec(upper, s), (param(s + 1),) + _shift_vec(lower[1:], s))
    validate_spec(hs)
    den = pochhammer_vec(lower, s)
    if den == 0:
        raise SingularCoefficient("(b)_{n-b1+1} vanishes")
    coeff = pochhammer(s + 1, b1.exact - 1) * pochhammer_vec(upper, s) / den  # type: ignore[operator]
    if coeff == 0:
        return ()
    return (term(coeff, hyp(hs)),)


def _terms_th15_main(rest_upper: Vec, lower: Vec, r_int: int, n: int) -> tuple[Term, ...]:
    s = n - r_int
    den = pochhammer_vec(lower, s)
    if den == 0:
        raise SingularCoefficient("(b)_{n-r} vanishes")
    coeff = math.factorial(n) * pochhammer_vec(rest_upper, s) / den
    if coeff == 0:
        return ()
    hs = HypSpec((param(n + 1),) + _shift_vec(rest_upper, s), _shift_vec(lower, s))
    validate_spec(hs)
    return (term(coeff, hyp(hs)),)


def _terms_th15_negative(rest_upper: Vec, lower: Vec, r_int: int, n: int) -> tuple[Term, ...]:
    out = list(_terms_th15_main(rest_upper, lower, r_int, n))
    g = theorem_general_term((_ONE,) + rest_upper, lower, param(r_int), n)
    if g is not None:
        out.append(g)
    return tuple(out)


# ---------------------------------------------------------------------------
# Kummer-type rewrites on expressions


def _rewrite_hyps(e: Expr, match, rewrite) -> Expr:
    hit = False
    new_terms = []
    for t in e.terms:
        fs: list[Factor] = []
        for f in t.factors:
            if isinstance(f, Hyp) and match(f):
                fs.extend(rewrite(f))
                hit = True
            else:
                fs.append(f)
        new_terms.append(Term(t.coeff, tuple(fs)))
    if not hit:
        raise NotApplicable("no hypergeometric factor matches the transform")
    return Expr(tuple(new_terms))


def kummer1(e: Expr) -> Expr:
    """1F1(a;c;z) -> e^z 1F1(c-a;c;-z) (and the mirrored form at -z)."""

    def match(f: Hyp) -> bool:
        return f.spec.p == 1 and f.spec.q == 1 and f.map in (ArgMap.IDENTITY, ArgMap.NEGATE)

    def rewrite(f: Hyp):
        (a,), (c,) = f.spec.upper, f.spec.lower
        flipped = HypSpec((c - a,), (c,))
        if f.map is ArgMap.IDENTITY:
            return [expz(1), Hyp(flipped, ArgMap.NEGATE)]
        return [expz(-1), Hyp(flipped, ArgMap.IDENTITY)]

    return _rewrite_hyps(e, match, rewrite)


def kummer2(e: Expr) -> Expr:
    """Euler: 2F1(a,b;c;z) -> (1-z)^{c-a-b} 2F1(c-a,c-b;c;z)."""

    def match(f: Hyp) -> bool:
        return f.spec.p == 2 and f.spec.q == 1 and f.map is ArgMap.IDENTITY

    def rewrite(f: Hyp):
        (a, b), (c,) = f.spec.upper, f.spec.lower
        return [pow1mz(c - a - b), Hyp(HypSpec((c - a, c - b), (c,)), ArgMap.IDENTITY)]

    return _rewrite_hyps(e, match, rewrite)


def kummer3(e: Expr) -> Expr:
    """Pfaff: 2F1(a,b;c;z) -> (1-z)^{-a} 2F1(a,c-b;c;z/(z-1)).

    Applied to a Pfaff-argument factor it maps back (the transform is an
    involution of the argument).
    """

    def match(f: Hyp) -> bool:
        return f.spec.p == 2 and f.spec.q == 1 and f.map in (ArgMap.IDENTITY, ArgMap.PFAFF)

    def rewrite(f: Hyp):
        (a, b), (c,) = f.spec.upper, f.spec.lower
        flipped = HypSpec((a, c - b), (c,))
        if f.map is ArgMap.IDENTITY:
            return [pow1mz(-a), Hyp(flipped, ArgMap.PFAFF)]
        return [pow1mz(a), Hyp(flipped, ArgMap.IDENTITY)]

    return _rewrite_hyps(e, match, rewrite)


# ---------------------------------------------------------------------------
# mechanical composition: corollary RHS from the theorem-line RHS
#
# Substituting z -> -z (exponential transform) multiplies each term by
# (-1)^{n - r + alpha} where alpha is the term's z-power; the Pfaff
# substitution z -> z/(z-1) contributes (-1)^{n + r - alpha}, turns z^alpha
# into z^alpha (1-z)^{-alpha}, and adds a global (1-z)^{-n-1}.  The exponents
# are integers in every case line (up to float noise), so the phase is taken
# as an exact parity.


def _phase(x: complex) -> complex:
    xc = complex(x)
    k = round(xc.real)
    if abs(xc - k) < 1e-9:
        return complex(1.0 if k % 2 == 0 else -1.0)
    return cmath.exp(1j * math.pi * xc)


def _powz_exponent(t: Term) -> complex:
    return sum((f.alpha.value for f in t.factors if isinstance(f, PowZ)), 0j)


def _transform_k1(e: Expr, r: Parameter, n: int) -> Expr:
    out = []
    for t in e.terms:
        coeff = t.coeff * _phase(n - r.value + _powz_exponent(t))
        fs: list[Factor] = []
        for f in t.factors:
            if isinstance(f, Hyp):
                flip = ArgMap.NEGATE if f.map is ArgMap.IDENTITY else ArgMap.IDENTITY
                fs.append(Hyp(f.spec, flip))
            elif isinstance(f, ExpZ):
                fs.append(ExpZ(-f.sign))
            else:
                fs.append(f)
        out.append(Term(coeff, tuple(fs)))
    return Expr(tuple(out))


def _transform_k3(e: Expr, r: Parameter, n: int) -> Expr:
    out = []
    for t in e.terms:
        coeff = t.coeff * _phase(n + r.value - _powz_exponent(t))
        fs: list[Factor] = []
        for f in t.factors:
            if isinstance(f, PowZ):
                fs.append(f)
                fs.append(PowOneMinusZ(-f.alpha))
            elif isinstance(f, Hyp):
                if f.map is not ArgMap.IDENTITY:
                    raise NotApplicable("Pfaff substitution needs an identity-argument factor")
                fs.append(Hyp(f.spec, ArgMap.PFAFF))
            else:
                fs.append(f)
        fs.append(pow1mz(-(n + 1)))
        out.append(Term(coeff, tuple(fs)))
    return Expr(tuple(out))


def _co1_vectors(p: dict) -> tuple[Vec, Vec]:
    return (p["c"] - p["a"],), (p["c"],)


def _co2_k2_vectors(p: dict) -> tuple[Vec, Vec]:
    return (p["c"] - p["a"], p["c"] - p["b"]), (p["c"],)


def _co2_k3_vectors(p: dict) -> tuple[Vec, Vec]:
    return (p["a"], p["c"] - p["b"]), (p["c"],)


def _composition_builders() -> dict[str, tuple[str, Callable[[dict], Expr]]]:
    def th11(vectors, branch, r_of):
        def build(p):
            up, lo = vectors(p)
            return Expr(_terms_th11(up, lo, r_of(p), p["n"], branch))

        return build

    def r_key(p):
        return p["r"]

    def r_zero(p):
        return param(0)

    def r_c1(p):
        return p["c"] - 1

    comps: dict[str, tuple[str, Callable[[dict], Expr]]] = {}

    for branch in ("general", "exceptional", "negative"):
        comps[f"Co1-1-{branch}"] = ("k1", th11(_co1_vectors, branch, r_key))
        comps[f"Co2-1-{branch}"] = ("k2", th11(_co2_k2_vectors, branch, r_key))
        comps[f"Co2-2-{branch}"] = ("k3", th11(_co2_k3_vectors, branch, r_key))

    comps["Co1-2"] = ("k1", lambda p: Expr(_terms_th12(*_co1_vectors(p), p["n"])))
    comps["Co1-3"] = (
        "k1",
        lambda p: Expr(_terms_th13(p["c"] - p["a"], (), (p["c"],), p["n"])),
    )
    comps["Co1-4-regular"] = ("k1", lambda p: Expr(_terms_th14_regular(*_co1_vectors(p), p["n"])))
    comps["Co1-4-exceptional"] = (
        "k1",
        lambda p: Expr(_terms_th14_exceptional(*_co1_vectors(p), p["n"])),
    )
    comps["Co1-5-exceptional"] = (
        "k1",
        lambda p: Expr(_terms_th15_main((), (p["c"],), p["r"].exact, p["n"])),
    )
    comps["Co1-5-negative"] = (
        "k1",
        lambda p: Expr(_terms_th15_negative((), (p["c"],), p["r"].exact, p["n"])),
    )

    comps["Co2-3"] = (
        "k2",
        lambda p: Expr(_terms_th13(p["c"] - p["a"], (p["c"] - p["b"],), (p["c"],), p["n"])),
    )
    comps["Co2-4"] = ("k2", lambda p: Expr(_terms_th12(*_co2_k2_vectors(p), p["n"])))
    comps["Co2-5"] = ("k3", lambda p: Expr(_terms_th12(*_co2_k3_vectors(p), p["n"])))
    comps["Co2-6-regular"] = ("k2", lambda p: Expr(_terms_th14_regular(*_co2_k2_vectors(p), p["n"])))
    comps["Co2-6-exceptional"] = (
        "k2",
        lambda p: Expr(_terms_th14_exceptional(*_co2_k2_vectors(p), p["n"])),
    )
    comps["Co2-7-regular"] = ("k3", lambda p: Expr(_terms_th14_regular(*_co2_k3_vectors(p), p["n"])))
    comps["Co2-7-exceptional"] = (
        "k3",
        lambda p: Expr(_terms_th14_exceptional(*_co2_k3_vectors(p), p["n"])),
    )
    comps["Co2-8-exceptional"] = (
        "k2",
        lambda p: Expr(_terms_th15_main((p["c"] - p["a"],), (p["c"],), p["r"].exact, p["n"])),
    )
    comps["Co2-8-negative"] = (
        "k2",
        lambda p: Expr(_terms_th15_negative((p["c"] - p["a"],), (p["c"],), p["r"].exact, p["n"])),
    )
    comps["Co2-9-exceptional"] = (
        "k3",
        lambda p: Expr(_terms_th15_main((p["a"],), (p["c"],), p["r"].exact, p["n"])),
    )
    comps["Co2-9-negative"] = (
        "k3",
        lambda p: Expr(_terms_th15_negative((p["a"],), (p["c"],), p["r"].exact, p["n"])),
    )
    comps["Co2-10-exceptional"] = (
        "k3",
        lambda p: Expr(_terms_th15_main((p["c"] - p["a"],), (p["c"],), p["r"].exact, p["n"])),
    )
    comps["Co2-10-negative"] = (
        "k3",
        lambda p: Expr(_terms_th15_negative((p["c"] - p["a"],), (p["c"],), p["r"].exact, p["n"])),
    )

    # the Kummer-2/3 substitutions carry r along unchanged; Kummer-1 needs it
    # for the phase, with r = 0 for lines that have no z-power and r = c-1
    # where the power is pinned to the lower parameter
    r_for: dict[str, Callable[[dict], Parameter]] = {}
    for cid in comps:
        if "Co1-1" in cid or "Co1-5" in cid or "Co2-2" in cid or "Co2-9" in cid:
            r_for[cid] = r_key
        elif "Co1-4" in cid or "Co2-7" in cid:
            r_for[cid] = r_c1
        elif cid == "Co1-3":
            r_for[cid] = lambda p: (p["c"] - p["a"]) + (p["n"] - 1)
        elif "Co2-10" in cid:
            r_for[cid] = r_key
        else:
            r_for[cid] = r_zero

    out: dict[str, tuple[str, Callable[[dict], Expr]]] = {}
    for cid, (kind, build) in comps.items():
        def make(kind=kind, build=build, rf=r_for[cid]):
            def compose(p):
                base = build(p)
                if kind == "k1":
                    return _transform_k1(base, rf(p), p["n"])
                if kind == "k3":
                    return _transform_k3(base, rf(p), p["n"])
                return base

            return compose

        out[cid] = (kind, make())
    return out


_COMPOSITIONS = _composition_builders()


def corollary_sources() -> dict[str, str]:
    """Map corollary entry id -> transform kind ('k1'|'k2'|'k3')."""
    return {cid: kind for cid, (kind, _) in _COMPOSITIONS.items()}


def theorem_composition(entry_id: str, params: dict) -> Expr:
    """Corollary RHS rebuilt mechanically from its theorem-line source."""
    kind_build = _COMPOSITIONS.get(entry_id)
    if kind_build is None:
        raise KeyError(f"no composition recorded for {entry_id}")
    return kind_build[1](params)


# ---------------------------------------------------------------------------
# entry construction


def _spec21(p: dict) -> HypSpec:
    return HypSpec((p["a1"], p["a2"]), (p["b1"],))


def _spec15(p: dict) -> HypSpec:
    return HypSpec((_ONE, p["a2"]), (p["b1"],))


def _spec11(p: dict) -> HypSpec:
    return HypSpec((p["a"],), (p["c"],))


def _spec2f1(p: dict) -> HypSpec:
    return HypSpec((p["a"], p["b"]), (p["c"],))


def _not_small_exact(x: Parameter, n: int) -> bool:
    # case condition "not an exact integer below n+1"
    return x.exact is None or x.exact > n


def _entries() -> tuple[IdentityEntry, ...]:
    es: list[IdentityEntry] = []

    # ---- theorem lines (pFq exercised as 2F1 / 3F2 shapes) ----

    def draw_th1(rng, rkind):
        n = _draw_n(rng)
        a1, a2, b1 = _draw_complexes(rng, 3)
        p = {"n": n, "a1": a1, "a2": a2, "b1": b1}
        if rkind == "general":
            p["r"] = _draw_real_nonint(rng)
        elif rkind == "exceptional":
            p["r"] = param(rng.randint(0, n))
        else:
            p["r"] = param(rng.randint(-3, -1))
        return p

    def lhs_th11(p):
        return expr(term(1, powz(p["r"]), hyp(_spec21(p))))

    for branch in ("general", "exceptional", "negative"):
        if branch == "general":
            appl = lambda p: p["r"].exact is None or p["r"].exact >= p["n"]
        elif branch == "exceptional":
            appl = lambda p: p["r"].exact is not None and 0 <= p["r"].exact <= p["n"]
        else:
            appl = lambda p: p["r"].exact is not None and p["r"].exact < 0
        es.append(
            IdentityEntry(
                id=f"Th1-1-{branch}",
                params_schema=("a1", "a2", "b1", "r", "n"),
                applicable=appl,
                lhs=lhs_th11,
                rhs=lambda p, branch=branch: Expr(
                    _terms_th11((p["a1"], p["a2"]), (p["b1"],), p["r"], p["n"], branch)
                ),
                draw=lambda rng, branch=branch: draw_th1(rng, branch),
            )
        )

    es.append(
        IdentityEntry(
            id="Th1-2",
            params_schema=("a1", "a2", "b1", "n"),
            applicable=lambda p: True,
            lhs=lambda p: expr(term(1, hyp(_spec21(p)))),
            rhs=lambda p: Expr(_terms_th12((p["a1"], p["a2"]), (p["b1"],), p["n"])),
            draw=lambda rng: draw_th1(rng, "none"),
        )
    )

    es.append(
        IdentityEntry(
            id="Th1-3",
            params_schema=("a1", "a2", "b1", "n"),
            applicable=lambda p: True,
            lhs=lambda p: expr(
                term(1, powz(p["a1"] + (p["n"] - 1)), hyp(_spec21(p)))
            ),
            rhs=lambda p: Expr(_terms_th13(p["a1"], (p["a2"],), (p["b1"],), p["n"])),
            draw=lambda rng: draw_th1(rng, "none"),
        )
    )

    def draw_th14(rng, exceptional):
        n = _draw_n(rng)
        a1, a2 = _draw_complexes(rng, 2)
        if exceptional:
            c = param(rng.randint(1, n + 1))
        else:
            (c,) = _draw_complexes(rng, 1)
        return {"n": n, "a1": a1, "a2": a2, "c": c}

    def lhs_th14(p):
        return expr(
            term(1, powz(p["c"] - 1), hyp(HypSpec((p["a1"], p["a2"]), (p["c"],))))
        )

    es.append(
        IdentityEntry(
            id="Th1-4-regular",
            params_schema=("a1", "a2", "c", "n"),
            applicable=lambda p: _not_small_exact(p["c"], p["n"]),
            lhs=lhs_th14,
            rhs=lambda p: Expr(
                _terms_th14_regular((p["a1"], p["a2"]), (p["c"],), p["n"])
            ),
            draw=lambda rng: draw_th14(rng, False),
        )
    )
    es.append(
        IdentityEntry(
            id="Th1-4-exceptional",
            params_schema=("a1", "a2", "c", "n"),
            applicable=lambda p: p["c"].exact is not None and 1 <= p["c"].exact <= p["n"] + 1,
            lhs=lhs_th14,
            rhs=lambda p: Expr(
                _terms_th14_exceptional((p["a1"], p["a2"]), (p["c"],), p["n"])
            ),
            draw=lambda rng: draw_th14(rng, True),
        )
    )

    def draw_th15(rng, negative):
        n = _draw_n(rng)
        a2, b1 = _draw_complexes(rng, 2)
        r = param(rng.randint(-3, -1) if negative else rng.randint(0, n))
        return {"n": n, "a2": a2, "b1": b1, "r": r}

    def lhs_th15(p):
        return expr(term(1, powz(p["r"]), hyp(_spec15(p))))

    es.append(
        IdentityEntry(
            id="Th1-5-exceptional",
            params_schema=("a2", "b1", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and 0 <= p["r"].exact <= p["n"],
            lhs=lhs_th15,
            rhs=lambda p: Expr(
                _terms_th15_main((p["a2"],), (p["b1"],), p["r"].exact, p["n"])
            ),
            draw=lambda rng: draw_th15(rng, False),
        )
    )
    es.append(
        IdentityEntry(
            id="Th1-5-negative",
            params_schema=("a2", "b1", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and p["r"].exact < 0,
            lhs=lhs_th15,
            rhs=lambda p: Expr(
                _terms_th15_negative((p["a2"],), (p["b1"],), p["r"].exact, p["n"])
            ),
            draw=lambda rng: draw_th15(rng, True),
        )
    )

    # ---- corollary lines for e^{-z} 1F1(a;c;z) ----

    def draw_co1(rng, rkind):
        n = _draw_n(rng)
        a, c = _draw_complexes(rng, 2, derived=lambda xs: [xs[1] - xs[0]])
        p = {"n": n, "a": a, "c": c}
        if rkind == "general":
            p["r"] = _draw_real_nonint(rng)
        elif rkind == "exceptional":
            p["r"] = param(rng.randint(0, n))
        elif rkind == "exceptional-1":
            p["r"] = param(rng.randint(1, n))
        elif rkind == "negative":
            p["r"] = param(rng.randint(-3, -1))
        return p

    def lhs_co11(p):
        return expr(term(1, powz(p["r"]), expz(-1), hyp(_spec11(p))))

    def rhs_co11_general_term(p) -> Optional[Term]:
        r, n, a, c = p["r"], p["n"], p["a"], p["c"]
        low0 = r + (1 - n)
        coeff = pochhammer(low0, n)
        if coeff == 0:
            return None
        hs = HypSpec((r + 1, c - a), (low0, c))
        validate_spec(hs)
        return term(coeff, powz(r - n), hyp(hs, ArgMap.NEGATE))

    def rhs_co11_exceptional_term(p) -> Optional[Term]:
        r, n, a, c = p["r"].exact, p["n"], p["a"], p["c"]
        s = n - r
        den = pochhammer(c, s)
        if den == 0:
            raise SingularCoefficient("(c)_{n-r} vanishes")
        coeff = (-1) ** (s % 2) * pochhammer(s + 1, r) * pochhammer(c - a, s) / den
        if coeff == 0:
            return None
        hs = HypSpec((param(n + 1), (c - a) + s), (param(s + 1), c + s))
        validate_spec(hs)
        return term(coeff, hyp(hs, ArgMap.NEGATE))

    def rhs_co11(p, branch):
        terms = []
        if branch in ("general", "negative"):
            t = rhs_co11_general_term(p)
            if t is not None:
                terms.append(t)
        if branch in ("exceptional", "negative"):
            t = rhs_co11_exceptional_term(p)
            if t is not None:
                terms.append(t)
        return Expr(tuple(terms))

    for branch in ("general", "exceptional", "negative"):
        if branch == "general":
            appl = lambda p: p["r"].exact is None or p["r"].exact >= p["n"]
        elif branch == "exceptional":
            appl = lambda p: p["r"].exact is not None and 0 <= p["r"].exact <= p["n"]
        else:
            appl = lambda p: p["r"].exact is not None and p["r"].exact < 0
        es.append(
            IdentityEntry(
                id=f"Co1-1-{branch}",
                params_schema=("a", "c", "r", "n"),
                applicable=appl,
                lhs=lhs_co11,
                rhs=lambda p, branch=branch: rhs_co11(p, branch),
                draw=lambda rng, branch=branch: draw_co1(rng, branch),
            )
        )

    es.append(
        IdentityEntry(
            id="Co1-2",
            params_schema=("a", "c", "n"),
            applicable=lambda p: True,
            lhs=lambda p: expr(term(1, expz(-1), hyp(_spec11(p)))),
            rhs=lambda p: expr(
                term(
                    (-1) ** (p["n"] % 2)
                    * pochhammer(p["c"] - p["a"], p["n"])
                    / pochhammer(p["c"], p["n"]),
                    expz(-1),
                    hyp(HypSpec((p["a"],), (p["c"] + p["n"],))),
                )
            ),
            draw=lambda rng: draw_co1(rng, "none"),
        )
    )

    es.append(
        IdentityEntry(
            id="Co1-3",
            params_schema=("a", "c", "n"),
            applicable=lambda p: True,
            lhs=lambda p: expr(
                term(
                    1,
                    powz((p["c"] - p["a"]) + (p["n"] - 1)),
                    expz(-1),
                    hyp(_spec11(p)),
                )
            ),
            rhs=lambda p: expr(
                term(
                    pochhammer(p["c"] - p["a"], p["n"]),
                    powz((p["c"] - p["a"]) - 1),
                    expz(-1),
                    hyp(HypSpec((p["a"] - p["n"],), (p["c"],))),
                )
            ),
            draw=lambda rng: draw_co1(rng, "none"),
        )
    )

    def draw_co14(rng, exceptional):
        n = _draw_n(rng)
        if exceptional:
            while True:
                (a,) = _draw_complexes(rng, 1)
                c = param(rng.randint(1, n + 1))
                if _off_integers(c.value - a.value):
                    break
        else:
            a, c = _draw_complexes(rng, 2, derived=lambda xs: [xs[1] - xs[0]])
        return {"n": n, "a": a, "c": c}

    def lhs_co14(p):
        return expr(term(1, powz(p["c"] - 1), expz(-1), hyp(_spec11(p))))

    es.append(
        IdentityEntry(
            id="Co1-4-regular",
            params_schema=("a", "c", "n"),
            applicable=lambda p: _not_small_exact(p["c"], p["n"]),
            lhs=lhs_co14,
            rhs=lambda p: expr(
                term(
                    pochhammer(p["c"] - p["n"], p["n"]),
                    powz(p["c"] - (p["n"] + 1)),
                    expz(-1),
                    hyp(HypSpec((p["a"] - p["n"],), (p["c"] - p["n"],))),
                )
            ),
            draw=lambda rng: draw_co14(rng, False),
        )
    )

    def rhs_co14_exceptional(p):
        n, a, c = p["n"], p["a"], p["c"].exact
        s = n - c + 1
        den = pochhammer(p["c"], s)
        if den == 0:
            raise SingularCoefficient("(c)_{n-c+1} vanishes")
        coeff = (
            (-1) ** ((1 - c - n) % 2)
            * pochhammer(s + 1, c - 1)
            * pochhammer(p["c"] - a, s)
            / den
        )
        return expr(
            term(coeff, expz(-1), hyp(HypSpec((a + (1 - c),), (param(s + 1),))))
        )

    es.append(
        IdentityEntry(
            id="Co1-4-exceptional",
            params_schema=("a", "c", "n"),
            applicable=lambda p: p["c"].exact is not None and 1 <= p["c"].exact <= p["n"] + 1,
            lhs=lhs_co14,
            rhs=rhs_co14_exceptional,
            draw=lambda rng: draw_co14(rng, True),
        )
    )

    def lhs_co15(p):
        return expr(
            term(
                1,
                powz(p["r"]),
                expz(-1),
                hyp(HypSpec((p["c"] - 1,), (p["c"],))),
            )
        )

    def rhs_co15_main_term(p) -> Term:
        r, n, c = p["r"].exact, p["n"], p["c"]
        s = n - r
        den = pochhammer(c, s)
        if den == 0:
            raise SingularCoefficient("(c)_{n-r} vanishes")
        coeff = (-1) ** (s % 2) * math.factorial(n) / den
        return term(
            coeff,
            expz(-1),
            hyp(HypSpec((c - (r + 1),), (c + s,))),
        )

    es.append(
        IdentityEntry(
            id="Co1-5-exceptional",
            params_schema=("c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and 1 <= p["r"].exact <= p["n"],
            lhs=lhs_co15,
            rhs=lambda p: expr(rhs_co15_main_term(p)),
            draw=lambda rng: {**draw_co1(rng, "exceptional-1")},
        )
    )

    def rhs_co15_negative(p):
        r, n, c = p["r"], p["n"], p["c"]
        terms = [rhs_co15_main_term(p)]
        low0 = r + (1 - p["n"])
        coeff = pochhammer(low0, n)
        if coeff != 0:
            hs = HypSpec((r + 1, _ONE), (low0, c))
            validate_spec(hs)
            terms.append(term(coeff, powz(r - n), hyp(hs, ArgMap.NEGATE)))
        return Expr(tuple(terms))

    es.append(
        IdentityEntry(
            id="Co1-5-negative",
            params_schema=("c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and p["r"].exact < 0,
            lhs=lhs_co15,
            rhs=rhs_co15_negative,
            draw=lambda rng: {**draw_co1(rng, "negative")},
        )
    )

    # ---- corollary lines for prefactored 2F1 ----

    def draw_co2(rng, rkind):
        n = _draw_n(rng)
        a, b, c = _draw_complexes(
            rng, 3, derived=lambda xs: [xs[2] - xs[0], xs[2] - xs[1]]
        )
        p = {"n": n, "a": a, "b": b, "c": c}
        if rkind == "general":
            p["r"] = _draw_real_nonint(rng)
        elif rkind == "exceptional":
            p["r"] = param(rng.randint(0, n))
        elif rkind == "exceptional-1":
            p["r"] = param(rng.randint(1, n))
        elif rkind == "negative":
            p["r"] = param(rng.randint(-3, -1))
        return p

    def lhs_co21(p):
        return expr(
            term(
                1,
                powz(p["r"]),
                pow1mz((p["a"] + p["b"]) - p["c"]),
                hyp(_spec2f1(p)),
            )
        )

    def rhs_co21(p, branch):
        up = (p["c"] - p["a"], p["c"] - p["b"])
        lo = (p["c"],)
        return Expr(_terms_th11(up, lo, p["r"], p["n"], branch))

    def lhs_co22(p):
        return expr(
            term(
                1,
                powz(p["r"]),
                pow1mz((p["a"] - p["r"]) + (p["n"] - 1)),
                hyp(_spec2f1(p)),
            )
        )

    def rhs_co22_general_term(p) -> Optional[Term]:
        r, n, a, b, c = p["r"], p["n"], p["a"], p["b"], p["c"]
        low0 = r + (1 - n)
        coeff = pochhammer(low0, n)
        if coeff == 0:
            return None
        hs = HypSpec((r + 1, a, c - b), (low0, c))
        validate_spec(hs)
        return term(coeff, powz(r - n), pow1mz(-(r + 1)), hyp(hs, ArgMap.PFAFF))

    def rhs_co22_exceptional_term(p) -> Optional[Term]:
        r, n, a, b, c = p["r"].exact, p["n"], p["a"], p["b"], p["c"]
        s = n - r
        den = pochhammer(c, s)
        if den == 0:
            raise SingularCoefficient("(c)_{n-r} vanishes")
        coeff = (
            (-1) ** (s % 2)
            * pochhammer(s + 1, r)
            * pochhammer(a, s)
            * pochhammer(c - b, s)
            / den
        )
        if coeff == 0:
            return None
        hs = HypSpec((param(n + 1), a + s, (c - b) + s), (param(s + 1), c + s))
        validate_spec(hs)
        return term(coeff, pow1mz(-(n + 1)), hyp(hs, ArgMap.PFAFF))

    def rhs_co22(p, branch):
        terms = []
        if branch in ("general", "negative"):
            t = rhs_co22_general_term(p)
            if t is not None:
                terms.append(t)
        if branch in ("exceptional", "negative"):
            t = rhs_co22_exceptional_term(p)
            if t is not None:
                terms.append(t)
        return Expr(tuple(terms))

    for branch in ("general", "exceptional", "negative"):
        if branch == "general":
            appl = lambda p: p["r"].exact is None or p["r"].exact >= p["n"]
        elif branch == "exceptional":
            appl = lambda p: p["r"].exact is not None and 0 <= p["r"].exact <= p["n"]
        else:
            appl = lambda p: p["r"].exact is not None and p["r"].exact < 0
        es.append(
            IdentityEntry(
                id=f"Co2-1-{branch}",
                params_schema=("a", "b", "c", "r", "n"),
                applicable=appl,
                lhs=lhs_co21,
                rhs=lambda p, branch=branch: rhs_co21(p, branch),
                draw=lambda rng, branch=branch: draw_co2(rng, branch),
            )
        )
        es.append(
            IdentityEntry(
                id=f"Co2-2-{branch}",
                params_schema=("a", "b", "c", "r", "n"),
                applicable=appl,
                lhs=lhs_co22,
                rhs=lambda p, branch=branch: rhs_co22(p, branch),
                draw=lambda rng, branch=branch: draw_co2(rng, branch),
                z_points=Z_POINTS_PFAFF,
            )
        )

    es.append(
        IdentityEntry(
            id="Co2-3",
            params_schema=("a", "b", "c", "n"),
            applicable=lambda p: True,
            lhs=lambda p: expr(
                term(
                    1,
                    powz((p["c"] - p["a"]) + (p["n"] - 1)),
                    pow1mz((p["a"] + p["b"]) - p["c"]),
                    hyp(_spec2f1(p)),
                )
            ),
            rhs=lambda p: expr(
                term(
                    pochhammer(p["c"] - p["a"], p["n"]),
                    powz((p["c"] - p["a"]) - 1),
                    pow1mz(((p["a"] + p["b"]) - p["c"]) - p["n"]),
                    hyp(HypSpec((p["a"] - p["n"], p["b"]), (p["c"],))),
                )
            ),
            draw=lambda rng: draw_co2(rng, "none"),
        )
    )

    es.append(
        IdentityEntry(
            id="Co2-4",
            params_schema=("a", "b", "c", "n"),
            applicable=lambda p: True,
            lhs=lambda p: expr(
                term(1, pow1mz((p["a"] + p["b"]) - p["c"]), hyp(_spec2f1(p)))
            ),
            rhs=lambda p: expr(
                term(
                    pochhammer(p["c"] - p["a"], p["n"])
                    * pochhammer(p["c"] - p["b"], p["n"])
                    / pochhammer(p["c"], p["n"]),
                    pow1mz(((p["a"] + p["b"]) - p["c"]) - p["n"]),
                    hyp(HypSpec((p["a"], p["b"]), (p["c"] + p["n"],))),
                )
            ),
            draw=lambda rng: draw_co2(rng, "none"),
        )
    )

    es.append(
        IdentityEntry(
            id="Co2-5",
            params_schema=("a", "b", "c", "n"),
            applicable=lambda p: True,
            lhs=lambda p: expr(
                term(1, pow1mz(p["a"] + (p["n"] - 1)), hyp(_spec2f1(p)))
            ),
            rhs=lambda p: expr(
                term(
                    (-1) ** (p["n"] % 2)
                    * pochhammer(p["a"], p["n"])
                    * pochhammer(p["c"] - p["b"], p["n"])
                    / pochhammer(p["c"], p["n"]),
                    pow1mz(p["a"] - 1),
                    hyp(HypSpec((p["a"] + p["n"], p["b"]), (p["c"] + p["n"],))),
                )
            ),
            draw=lambda rng: draw_co2(rng, "none"),
        )
    )

    def draw_co2_c_exact(rng):
        n = _draw_n(rng)
        while True:
            a, b = [_cplx(rng) for _ in range(2)]
            c = param(rng.randint(1, n + 1))
            checks = [a, b, c.value - a, c.value - b]
            if all(_off_integers(v) for v in checks):
                return {"n": n, "a": param(a), "b": param(b), "c": c}

    def lhs_co26(p):
        return expr(
            term(
                1,
                powz(p["c"] - 1),
                pow1mz((p["a"] + p["b"]) - p["c"]),
                hyp(_spec2f1(p)),
            )
        )

    es.append(
        IdentityEntry(
            id="Co2-6-regular",
            params_schema=("a", "b", "c", "n"),
            applicable=lambda p: _not_small_exact(p["c"], p["n"]),
            lhs=lhs_co26,
            rhs=lambda p: expr(
                term(
                    pochhammer(p["c"] - p["n"], p["n"]),
                    powz(p["c"] - (p["n"] + 1)),
                    pow1mz(((p["a"] + p["b"]) - p["c"]) - p["n"]),
                    hyp(
                        HypSpec(
                            (p["a"] - p["n"], p["b"] - p["n"]),
                            (p["c"] - p["n"],),
                        )
                    ),
                )
            ),
            draw=lambda rng: draw_co2(rng, "none"),
        )
    )

    def rhs_co26_exceptional(p):
        n, a, b, c = p["n"], p["a"], p["b"], p["c"].exact
        s = n - c + 1
        den = pochhammer(p["c"], n - 2 * c + 2)
        if den == 0:
            raise SingularCoefficient("(c)_{n-2c+2} vanishes")
        coeff = pochhammer(p["c"] - a, s) * pochhammer(p["c"] - b, s) / den
        return expr(
            term(
                coeff,
                pow1mz(((a + b) - p["c"]) - n),
                hyp(HypSpec((a + (1 - c), b + (1 - c)), (param(s + 1),))),
            )
        )

    es.append(
        IdentityEntry(
            id="Co2-6-exceptional",
            params_schema=("a", "b", "c", "n"),
            applicable=lambda p: p["c"].exact is not None and 1 <= p["c"].exact <= p["n"] + 1,
            lhs=lhs_co26,
            rhs=rhs_co26_exceptional,
            draw=draw_co2_c_exact,
        )
    )

    def lhs_co27(p):
        return expr(
            term(
                1,
                powz(p["c"] - 1),
                pow1mz((p["a"] - p["c"]) + p["n"]),
                hyp(_spec2f1(p)),
            )
        )

    es.append(
        IdentityEntry(
            id="Co2-7-regular",
            params_schema=("a", "b", "c", "n"),
            applicable=lambda p: _not_small_exact(p["c"], p["n"]),
            lhs=lhs_co27,
            rhs=lambda p: expr(
                term(
                    pochhammer(p["c"] - p["n"], p["n"]),
                    powz(p["c"] - (p["n"] + 1)),
                    pow1mz(p["a"] - p["c"]),
                    hyp(HypSpec((p["a"], p["b"] - p["n"]), (p["c"] - p["n"],))),
                )
            ),
            draw=lambda rng: draw_co2(rng, "none"),
        )
    )

    def rhs_co27_exceptional(p):
        n, a, b, c = p["n"], p["a"], p["b"], p["c"].exact
        s = n - c + 1
        den = pochhammer(n + 1, 1 - c) * pochhammer(p["c"], s)
        if den == 0:
            raise SingularCoefficient("(n+1)_{1-c} (c)_{n-c+1} vanishes")
        coeff = (
            (-1) ** (s % 2) * pochhammer(a, s) * pochhammer(p["c"] - b, s) / den
        )
        return expr(
            term(
                coeff,
                pow1mz(a - p["c"]),
                hyp(HypSpec((a + (n + 1 - c), b + (1 - c)), (param(s + 1),))),
            )
        )

    es.append(
        IdentityEntry(
            id="Co2-7-exceptional",
            params_schema=("a", "b", "c", "n"),
            applicable=lambda p: p["c"].exact is not None and 1 <= p["c"].exact <= p["n"] + 1,
            lhs=lhs_co27,
            rhs=rhs_co27_exceptional,
            draw=draw_co2_c_exact,
        )
    )

    # Co2-8..Co2-10: 2F1 with one parameter pinned (b = c-1 or a1 = 1)

    def draw_co2_pinned(rng, rkind):
        n = _draw_n(rng)
        a, c = _draw_complexes(rng, 2, derived=lambda xs: [xs[1] - xs[0]])
        r = param(rng.randint(-3, -1) if rkind == "negative" else rng.randint(1, n))
        return {"n": n, "a": a, "c": c, "r": r}

    def lhs_co28(p):
        return expr(
            term(
                1,
                powz(p["r"]),
                pow1mz(p["a"] - 1),
                hyp(HypSpec((p["a"], p["c"] - 1), (p["c"],))),
            )
        )

    def rhs_co28_main(p) -> Term:
        r, n, a, c = p["r"].exact, p["n"], p["a"], p["c"]
        s = n - r
        den = pochhammer(c, s)
        if den == 0:
            raise SingularCoefficient("(c)_{n-r} vanishes")
        coeff = math.factorial(n) * pochhammer(c - a, s) / den
        return term(
            coeff,
            pow1mz(a - (n + 1)),
            hyp(HypSpec((a, c - (r + 1)), (c + s,))),
        )

    def rhs_co28_negative(p):
        terms = [rhs_co28_main(p)]
        r, n = p["r"], p["n"]
        low0 = r + (1 - n)
        coeff = pochhammer(low0, n)
        if coeff != 0:
            hs = HypSpec((r + 1, _ONE, p["c"] - p["a"]), (low0, p["c"]))
            validate_spec(hs)
            terms.append(term(coeff, powz(r - n), hyp(hs)))
        return Expr(tuple(terms))

    es.append(
        IdentityEntry(
            id="Co2-8-exceptional",
            params_schema=("a", "c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and 1 <= p["r"].exact <= p["n"],
            lhs=lhs_co28,
            rhs=lambda p: expr(rhs_co28_main(p)),
            draw=lambda rng: draw_co2_pinned(rng, "exceptional"),
        )
    )
    es.append(
        IdentityEntry(
            id="Co2-8-negative",
            params_schema=("a", "c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and p["r"].exact < 0,
            lhs=lhs_co28,
            rhs=rhs_co28_negative,
            draw=lambda rng: draw_co2_pinned(rng, "negative"),
        )
    )

    def lhs_co29(p):
        return expr(
            term(
                1,
                powz(p["r"]),
                pow1mz((p["a"] - p["r"]) + (p["n"] - 1)),
                hyp(HypSpec((p["a"], p["c"] - 1), (p["c"],))),
            )
        )

    def rhs_co29_main(p) -> Term:
        r, n, a, c = p["r"].exact, p["n"], p["a"], p["c"]
        s = n - r
        den = pochhammer(c, s)
        if den == 0:
            raise SingularCoefficient("(c)_{n-r} vanishes")
        coeff = (-1) ** (s % 2) * math.factorial(n) * pochhammer(a, s) / den
        return term(
            coeff,
            pow1mz(a - (r + 1)),
            hyp(HypSpec((a + s, c - (r + 1)), (c + s,))),
        )

    def rhs_co29_negative(p):
        terms = [rhs_co29_main(p)]
        r, n = p["r"], p["n"]
        low0 = r + (1 - n)
        coeff = pochhammer(low0, n)
        if coeff != 0:
            hs = HypSpec((r + 1, _ONE, p["a"]), (low0, p["c"]))
            validate_spec(hs)
            terms.append(
                term(
                    coeff,
                    powz(r - n),
                    pow1mz(-(r + 1)),
                    hyp(hs, ArgMap.PFAFF),
                )
            )
        return Expr(tuple(terms))

    es.append(
        IdentityEntry(
            id="Co2-9-exceptional",
            params_schema=("a", "c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and 1 <= p["r"].exact <= p["n"],
            lhs=lhs_co29,
            rhs=lambda p: expr(rhs_co29_main(p)),
            draw=lambda rng: draw_co2_pinned(rng, "exceptional"),
        )
    )
    es.append(
        IdentityEntry(
            id="Co2-9-negative",
            params_schema=("a", "c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and p["r"].exact < 0,
            lhs=lhs_co29,
            rhs=rhs_co29_negative,
            draw=lambda rng: draw_co2_pinned(rng, "negative"),
            z_points=Z_POINTS_PFAFF,
        )
    )

    def lhs_co210(p):
        return expr(
            term(
                1,
                powz(p["r"]),
                pow1mz(param(p["n"]) - p["r"]),
                hyp(HypSpec((_ONE, p["a"]), (p["c"],))),
            )
        )

    def rhs_co210_main(p) -> Term:
        r, n, a, c = p["r"].exact, p["n"], p["a"], p["c"]
        s = n - r
        den = pochhammer(c, s)
        if den == 0:
            raise SingularCoefficient("(c)_{n-r} vanishes")
        coeff = (-1) ** (s % 2) * math.factorial(n) * pochhammer(c - a, s) / den
        return term(coeff, hyp(HypSpec((param(n + 1), a), (c + s,))))

    def rhs_co210_negative(p):
        terms = [rhs_co210_main(p)]
        r, n = p["r"], p["n"]
        low0 = r + (1 - n)
        coeff = pochhammer(low0, n)
        if coeff != 0:
            hs = HypSpec((r + 1, _ONE, p["c"] - p["a"]), (low0, p["c"]))
            validate_spec(hs)
            terms.append(
                term(
                    coeff,
                    powz(r - n),
                    pow1mz(-(r + 1)),
                    hyp(hs, ArgMap.PFAFF),
                )
            )
        return Expr(tuple(terms))

    es.append(
        IdentityEntry(
            id="Co2-10-exceptional",
            params_schema=("a", "c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and 1 <= p["r"].exact <= p["n"],
            lhs=lhs_co210,
            rhs=lambda p: expr(rhs_co210_main(p)),
            draw=lambda rng: draw_co2_pinned(rng, "exceptional"),
        )
    )
    es.append(
        IdentityEntry(
            id="Co2-10-negative",
            params_schema=("a", "c", "r", "n"),
            applicable=lambda p: p["r"].exact is not None and p["r"].exact < 0,
            lhs=lhs_co210,
            rhs=rhs_co210_negative,
            draw=lambda rng: draw_co2_pinned(rng, "negative"),
            z_points=Z_POINTS_PFAFF,
        )
    )

    return tuple(es)


_ENTRIES = _entries()
_BY_ID = {e.id: e for e in _ENTRIES}


def catalog_entries() -> tuple[IdentityEntry, ...]:
    return _ENTRIES


def entry(entry_id: str) -> IdentityEntry:
    return _BY_ID[entry_id]


# ---------------------------------------------------------------------------
# verification driver


def rel_err(x: complex, y: complex) -> float:
    scale = max(abs(x), abs(y))
    if scale == 0:
        return 0.0
    return abs(x - y) / scale


def verify_entry(
    e: IdentityEntry,
    trials: int = 50,
    seed: int = 0,
    tol: float = 1e-8,
    ctrl: Optional[EvalControl] = None,
) -> VerifyReport:
    """Compare the RHS against the jet-oracle derivative on seeded draws."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ctrl = ctrl or DEFAULT_CONTROL
    rng = random.Random(f"{seed}:{e.id}")
    max_err = 0.0
    failures = []
    for _ in range(trials):
        p = e.draw(rng)
        lhs_e = e.lhs(p)
        rhs_e = e.rhs(p)
        for z0 in e.z_points:
            lv = nth_derivative(lhs_e, p["n"], z0, ctrl)
            rv = eval_expr(rhs_e, z0, ctrl)
            err = rel_err(lv, rv)
            if err > max_err:
                max_err = err
            if err > tol:
                failures.append((p, z0, lv, rv))
    return VerifyReport(e.id, trials, max_err, tuple(failures), seed, tol)


def format_report(r: VerifyReport) -> str:
    status = "PASS" if r.passed else f"FAIL ({len(r.failures)} cases)"
    return f"{r.id}: trials={r.trials} max_rel_err={r.max_rel_err:.3e} {status}"


def reports_to_csv(reports: Sequence[VerifyReport]) -> str:
    lines = ["id,trials,seed,tol,max_rel_err,failures,passed"]
    for r in reports:
        lines.append(
            f"{r.id},{r.trials},{r.seed},{r.tol:g},{r.max_rel_err:.6e},"
            f"{len(r.failures)},{int(r.passed)}"
        )
    return "\n".join(lines) + "\n"
