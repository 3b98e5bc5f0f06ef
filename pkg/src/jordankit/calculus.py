"""Executable difference-quotient calculus: difference quotients,
dual-number differentials, the chart vector-field bracket, and a checker
that certifies closed-form derivative laws against dual evaluation.

Map handles are ring-generic by construction: their evaluators receive
the evaluation ring and inputs over it, and any captured constants are
structurally embedded, so lifting inputs commutes with evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import dual_combine, dual_split
from .errors import DomainViolation, JordankitError, NotAUnit
from .rings import DualRing


@dataclass(frozen=True)
class MapHandle:
    name: str
    arity: int
    evaluator: Callable

    def __call__(self, ring, *args):
        if len(args) != self.arity:
            raise TypeError(f"{self.name} takes {self.arity} argument(s)")
        return self.evaluator(ring, *args)


def _lift(m, ring):
    return m.embed(ring) if m.ring != ring else m


# -- built-in handles -------------------------------------------------------

def alg_inversion():
    return MapHandle("alg_inversion", 1, lambda ring, x: x.inverse())


def squaring():
    return MapHandle("squaring", 1, lambda ring, x: x @ x)


def identity_map():
    return MapHandle("identity", 1, lambda ring, x: x)


def constant_map(c):
    return MapHandle("constant", 1, lambda ring, x: _lift(c, ring))


def linear_map(a, name="linear"):
    return MapHandle(name, 1, lambda ring, x: _lift(a, ring) @ x)


def jordan_inversion(jctx):
    from .jordan import jordan_inverse

    def ev(ring, x):
        return jordan_inverse(jctx.at_ring(ring), x)

    return MapHandle("jordan_inversion", 1, ev)


def quasi_inverse_in_first(jctx, y):
    from .jordan import quasi_inverse

    def ev(ring, x):
        return quasi_inverse(jctx.at_ring(ring), x, _lift(y, ring))

    return MapHandle("quasi_inverse_x", 1, ev)


def quasi_inverse_in_second(jctx, x):
    from .jordan import quasi_inverse

    def ev(ring, y):
        return quasi_inverse(jctx.at_ring(ring), _lift(x, ring), y)

    return MapHandle("quasi_inverse_y", 1, ev)


def group_action(g):
    from .graded import act

    def ev(ring, x):
        return act(g.embed(ring) if g.ring != ring else g, x)

    return MapHandle("group_action", 1, ev)


def compose(f, g):
    """f after g."""
    if g.arity != 1 or f.arity != 1:
        raise TypeError("composition needs unary handles")
    return MapHandle(f"{f.name}.{g.name}", 1,
                     lambda ring, x: f(ring, g(ring, x)))


def bergman_inverse_apply(jctx, a, v):
    """x -> B(x, a)^-1 v, the operator-family quotient map."""
    from .jordan import bergman_operator

    def ev(ring, x):
        ctx = jctx.at_ring(ring)
        b = bergman_operator(ctx, x, _lift(a, ring))
        return ctx.space.from_coords(
            b.solve_flat(ctx.space.coords(_lift(v, ring))))

    return MapHandle("bergman_inverse_apply", 1, ev)


# -- differentiation --------------------------------------------------------

def diff_quotient(f, x, h, t):
    """(f(x + t h) - f(x)) / t for a unit t."""
    ring = x.ring
    if not ring.is_unit(t):
        raise NotAUnit("difference quotient needs a unit step")
    try:
        num = f(ring, x + h.scale(t)) - f(ring, x)
    except JordankitError as e:
        raise DomainViolation(str(e)) from e
    return num.scale(ring.invert(t))


def dual_derivative(f, x, v):
    """eps-part of f(x + eps v) over the dual extension of x's ring."""
    ring = x.ring
    lifted = dual_combine(x, v)
    try:
        out = f(DualRing(ring), lifted)
    except JordankitError as e:
        raise DomainViolation(str(e)) from e
    _, eps = dual_split(out)
    return eps


def tangent_map(f, x, v):
    """(f(x), df(x)v) in one dual evaluation."""
    ring = x.ring
    try:
        out = f(DualRing(ring), dual_combine(x, v))
    except JordankitError as e:
        raise DomainViolation(str(e)) from e
    return dual_split(out)


def lie_bracket_fields(xfield, yfield, x):
    """[X, Y](x) = dY(x)X(x) - dX(x)Y(x) for chart vector fields."""
    ring = x.ring
    xv = xfield(ring, x)
    yv = yfield(ring, x)
    return dual_derivative(yfield, x, xv) - dual_derivative(xfield, x, yv)


def field_bracket(xfield, yfield):
    """The bracket as a field, so brackets can be nested."""
    return MapHandle(f"[{xfield.name},{yfield.name}]", 1,
                     lambda ring, p: lie_bracket_fields(xfield, yfield, p))


@dataclass
class CheckReport:
    name: str
    samples: int
    passed: int
    failed: int
    skipped: int
    exact: bool
    max_deviation: float
    first_failure: object = None

    @property
    def ok(self):
        return self.failed == 0

    def to_json(self):
        out = {"check": self.name, "samples": self.samples,
               "passed": self.passed, "failed": self.failed,
               "skipped": self.skipped, "exact": self.exact,
               "max_deviation": self.max_deviation}
        if self.first_failure is not None:
            out["first_counterexample"] = self.first_failure
        return out


def derivative_check(f, expected, sampler, samples=100, tol=1e-9):
    """Compare dual_derivative(f, x, v) against a closed form expected(x, v)
    on sampled pairs; exact agreement on exact rings, max deviation on
    floats. Samples where x leaves the lifted domain are skipped."""
    passed = failed = skipped = 0
    max_dev = 0.0
    first = None
    exact = True
    for i in range(samples):
        pair = sampler(i)
        if pair is None:
            skipped += 1
            continue
        x, v = pair
        try:
            got = dual_derivative(f, x, v)
            want = expected(x, v)
        except DomainViolation:
            skipped += 1
            continue
        if x.ring.is_exact():
            good = got == want
        else:
            exact = False
            dev = (got - want).max_abs()
            max_dev = max(max_dev, dev)
            good = dev <= tol
        if good:
            passed += 1
        else:
            failed += 1
            if first is None:
                first = {"sample": i}
    return CheckReport(f.name, samples, passed, failed, skipped, exact,
                       max_dev, first)
