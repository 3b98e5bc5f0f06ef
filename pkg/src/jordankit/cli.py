"""Command-line surface: seeded verification suites and one-shot
computations with JSON input and output.

Exit codes: 0 full pass / success, 1 suite failure or domain error,
2 usage error (unknown suite, unsupported ring, malformed request).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import calculus, suites
from .errors import JordankitError
from .graded import act
from .jordan import (bergman_operator, loos_bergman, loos_quasi_inverse,
                     quasi_inverse)
from .projline import (act_frac, chart_coords, classify_point,
                       mu_dilation, phi_involution)
from .rings import ring_from_json, scalar_from_json, scalar_to_json
from .serialize import (group_from_json, involution_from_json,
                        jordan_context_from_json, matrix_from_json,
                        matrix_to_json, point_from_json, point_to_json,
                        symspace_context_from_json)
from .symspace import exp_tanh, lts_bracket, sym_mul


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _parse_ring(text):
    return ring_from_json(text)


def cmd_list_suites(args, out):
    names = sorted(suites.SUITES)
    _emit({"suites": names}, out)
    return 0


def cmd_verify(args, out):
    try:
        ring = _parse_ring(args.ring)
    except ValueError as e:
        _emit({"error": "UnknownRing", "detail": str(e)}, out)
        return 2
    if args.suite not in suites.SUITES:
        _emit({"error": "UnknownSuite", "suite": args.suite}, out)
        return 2
    if args.trials < 1:
        _emit({"error": "BadTrialCount", "trials": args.trials}, out)
        return 2
    cfg = suites.SuiteConfig(suite=args.suite, ring=ring, n=args.n,
                             trials=args.trials, seed=args.seed,
                             tol=args.tol, order=args.order,
                             convention=args.convention)
    try:
        report = suites.run_suite(cfg)
    except ValueError as e:
        _emit({"error": "UnsupportedRing", "detail": str(e)}, out)
        return 2
    _emit(report.to_json(), out)
    status = "PASS" if report.ok else "FAIL"
    print(f"[{status}] suite {args.suite}: {report.passed} passed, "
          f"{report.failed} failed, {report.skipped} skipped "
          f"({report.wall_time:.2f}s)", file=sys.stderr)
    return 0 if report.ok else 1


def _jordan_args(req):
    ctx = jordan_context_from_json(req)
    x = matrix_from_json(ctx.ring, req["x"])
    y = matrix_from_json(ctx.ring, req["y"])
    return ctx, x, y


def _element_out(ctx, m):
    if ctx.n == 1:
        return scalar_to_json(ctx.ring, m[0, 0])
    return matrix_to_json(m)


def compute(req, convention="ad"):
    """Dispatch one compute request; returns the response dict."""
    op = req.get("op")
    convention = req.get("convention", convention)
    if convention not in ("ad", "loos"):
        raise ValueError(f"unknown convention {convention!r}")

    if op == "quasi_inverse":
        ctx, x, y = _jordan_args(req)
        fn = quasi_inverse if convention == "ad" else loos_quasi_inverse
        out = fn(ctx, x, y)
        return {"op": op, "convention": convention,
                "result": _element_out(ctx, out)}

    if op == "bergman":
        ctx, x, y = _jordan_args(req)
        fn = bergman_operator if convention == "ad" else loos_bergman
        return {"op": op, "convention": convention,
                "result": matrix_to_json(fn(ctx, x, y).mat)}

    if op == "act":
        ring = ring_from_json(req.get("ring", "rational"))
        n = req.get("n", 1)
        g = group_from_json(ring, n, req["g"])
        x = matrix_from_json(ring, req["x"])
        out = act(g, x)
        return {"op": op, "result": matrix_to_json(out) if n > 1
                else scalar_to_json(ring, out[0, 0])}

    if op == "act_frac":
        e = point_from_json(req["E"])
        g = group_from_json(e.ring, e.n, req["g"])
        return {"op": op, "result": point_to_json(act_frac(g, e))}

    if op == "sym_mul":
        space = symspace_context_from_json(req["context"])
        if hasattr(space, "polarity"):
            x = point_from_json(req["x"], space.ring, space.jctx.n)
            y = point_from_json(req["y"], space.ring, space.jctx.n)
            return {"op": op, "result": point_to_json(sym_mul(space, x, y))}
        x = matrix_from_json(space.ring, req["x"])
        y = matrix_from_json(space.ring, req["y"])
        return {"op": op, "result": matrix_to_json(sym_mul(space, x, y))}

    if op == "lts":
        space = symspace_context_from_json(req["context"])
        u = matrix_from_json(space.ring, req["u"])
        v = matrix_from_json(space.ring, req["v"])
        w = matrix_from_json(space.ring, req["w"])
        return {"op": op, "result": matrix_to_json(lts_bracket(space, u, v, w))}

    if op == "exp":
        if "context" in req:
            space = symspace_context_from_json(req["context"])
        else:
            ring = ring_from_json(req.get("ring", "float64"))
            n = req.get("n", 1)
            space = suites.proj_space_swap(ring, n, flavor="hermitian")
        v = matrix_from_json(space.ring, req["v"])
        e = exp_tanh(space, v, req.get("order", 24))
        return {"op": op, "result": point_to_json(e),
                "chart": matrix_to_json(chart_coords(e))}

    if op in ("cayley", "cayley_identity"):
        ring = ring_from_json(req.get("ring", "rational"))
        n = req.get("n", 1)
        res = suites.check_cayley_identities(ring, n)
        return {"op": "cayley", "holds": res.ok}

    if op == "phi":
        e = point_from_json(req["E"])
        iota = involution_from_json(e.ring, req.get("involution"))
        out = phi_involution(req.get("j", 1), iota, e)
        return {"op": op, "result": point_to_json(out)}

    if op == "classify":
        e = point_from_json(req["E"])
        iota = involution_from_json(e.ring, req.get("involution"))
        return {"op": op, "result": classify_point(iota, e)}

    if op == "mu":
        x = point_from_json(req["x"])
        a = point_from_json(req["a"], x.ring, x.n)
        y = point_from_json(req["y"], x.ring, x.n)
        r = scalar_from_json(x.ring, req["r"])
        return {"op": op, "result": point_to_json(mu_dilation(r, x, a, y))}

    if op in ("derivative", "derivative_check"):
        return _compute_derivative(req)

    raise ValueError(f"unknown op {op!r}")


def _compute_derivative(req):
    name = req["map"]
    ctx = jordan_context_from_json(req.get("context", req))
    ring, n = ctx.ring, ctx.n
    from . import randgen

    if name == "jordan_inverse":
        from .jordan import rep_operators
        f = calculus.jordan_inversion(ctx)

        def expected(x, v):
            _, qx = rep_operators(ctx, x)
            return -ctx.space.from_coords(qx.solve_flat(ctx.space.coords(v)))

        def sampler(i):
            rng = randgen.trial_rng(req.get("seed", 1), i)
            x = randgen.rand_filtered(
                rng, lambda r: randgen.rand_in_context(r, ctx),
                lambda m: rep_operators(ctx, m)[1].is_invertible())
            if x is None:
                return None
            return x, randgen.rand_in_context(rng, ctx)

    elif name == "alg_inverse":
        from .algebra import alg_invert
        f = calculus.alg_inversion()

        def expected(x, v):
            xi = alg_invert(x)
            return -(xi @ v @ xi)

        def sampler(i):
            rng = randgen.trial_rng(req.get("seed", 1), i)
            x = randgen.rand_invertible(rng, ring, n)
            if x is None:
                return None
            return x, randgen.rand_matrix(rng, ring, n)

    elif name == "squaring":
        f = calculus.squaring()

        def expected(x, v):
            return x @ v + v @ x

        def sampler(i):
            rng = randgen.trial_rng(req.get("seed", 1), i)
            return (randgen.rand_matrix(rng, ring, n),
                    randgen.rand_matrix(rng, ring, n))

    elif name == "act":
        from .graded import denominators, in_chart
        from .algebra import op_solve
        g = group_from_json(ring, n, req["g"])
        f = calculus.group_action(g)

        def expected(x, v):
            return op_solve(denominators(g, x)[0], v)

        def sampler(i):
            rng = randgen.trial_rng(req.get("seed", 1), i)
            x = randgen.rand_filtered(
                rng, lambda r: randgen.rand_matrix(r, ring, n),
                lambda m: in_chart(g, m))
            if x is None:
                return None
            return x, randgen.rand_matrix(rng, ring, n)

    else:
        raise ValueError(f"unknown derivative map {name!r}")

    report = calculus.derivative_check(f, expected, sampler,
                                       samples=req.get("samples", 100),
                                       tol=req.get("tol", 1e-9))
    return {"op": "derivative", "map": name, "report": report.to_json()}


def cmd_compute(args, out):
    if args.infile:
        with open(args.infile, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        req = json.loads(text)
    except json.JSONDecodeError as e:
        _emit({"error": "MalformedRequest", "detail": str(e)}, out)
        return 2
    try:
        resp = compute(req, convention=args.convention)
    except JordankitError as e:
        _emit({"error": type(e).__name__, "detail": str(e)}, out)
        return 1
    except (ValueError, KeyError, TypeError) as e:
        _emit({"error": "MalformedRequest", "detail": str(e)}, out)
        return 2
    _emit(resp, out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="jordankit",
        description="Verified computations on Jordan pairs, projective "
                    "lines over matrix algebras, and their symmetric spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--ring", default="rational",
                   help="rational | float64 | fp:P")
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--order", type=int, default=24)
    v.add_argument("--convention", choices=("ad", "loos"), default="ad")
    v.add_argument("--out", dest="outfile")

    c = sub.add_parser("compute", help="one-shot computation from JSON")
    c.add_argument("--in", dest="infile")
    c.add_argument("--out", dest="outfile")
    c.add_argument("--convention", choices=("ad", "loos"), default="ad")

    sub.add_parser("list-suites", help="list the available suites")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    outfile = getattr(args, "outfile", None)
    if outfile:
        out = open(outfile, "w", encoding="utf-8")
    else:
        out = sys.stdout
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "compute":
            return cmd_compute(args, out)
        return cmd_list_suites(args, out)
    finally:
        if outfile:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
