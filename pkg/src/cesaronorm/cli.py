"""Command-line surface: coefficient dumps, single-point norms, certificate
brackets, Dirichlet evaluations, the C(alpha) constants, grid sweeps, and a
self-verification suite."""

import argparse
import json
import math
import sys

import numpy as np

from . import bounds, cesaro, dirichlet, hadamard, specfun, sweep
from .errors import ConvergenceError, DomainError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_alpha(token):
    """Alpha flag values: the exact tokens 0, 1, 1/2 map to the exact branch
    behavior; anything else is parsed as a decimal in [0, 1]."""
    token = token.strip()
    exact = {"0": 0.0, "1": 1.0, "1/2": 0.5}
    if token in exact:
        return exact[token]
    try:
        value = float(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse alpha {token!r}")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1], got {value}")
    return value


def parse_poly(text):
    """Polynomial grammar: comma-separated coefficients "re[:im],...". """
    coeffs = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            re_s, im_s = part.split(":", 1)
            coeffs.append(complex(float(re_s), float(im_s)))
        else:
            coeffs.append(complex(float(part)))
    return dirichlet.Polynomial(coeffs)


def _emit(text, out_path):
    if out_path and out_path != "-":
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _f(value):
    return format(value, ".17g")


def cmd_coeffs(args):
    kernel = cesaro.coefficients(args.n, args.alpha)
    if args.format == "json":
        text = (
            json.dumps(
                {
                    "n": kernel.n,
                    "alpha": kernel.alpha,
                    "coeffs": list(kernel.coeffs),
                },
            )
            + "\n"
        )
    else:
        lines = ["# schema=1", "k,c_k"]
        lines += [f"{k},{_f(c)}" for k, c in enumerate(kernel.coeffs)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_norm(args):
    kernel = cesaro.coefficients(args.n, args.alpha)
    op = hadamard.from_kernel(kernel)
    code = EXIT_OK
    try:
        res = hadamard.operator_norm(op, tol=args.tol, max_iter=args.max_iter)
    except ConvergenceError as exc:
        res = exc.result
        code = EXIT_FAIL
        print(f"warning: {exc}", file=sys.stderr)
    payload = {
        "n": args.n,
        "alpha": args.alpha,
        "norm": res.norm,
        "norm_sq": res.norm_sq,
        "iterations": res.iterations,
        "residual": res.residual,
        "coeff_lower_bound": hadamard.coeff_lower_bound(op),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return code


def cmd_bounds(args):
    kernel = cesaro.coefficients(args.n, args.alpha)
    br = bounds.norm_bracket(kernel)
    s, _ = bounds.diff_energy(kernel)
    lines = [
        "# schema=1",
        "n,alpha,S,upper,best_lower,best_m,closed_upper,closed_lower_at_proof_m",
        ",".join(
            (
                str(br.n),
                _f(br.alpha),
                _f(s),
                _f(br.upper),
                _f(br.lower),
                str(br.lower_m),
                _f(br.closed_upper),
                _f(br.closed_lower),
            )
        ),
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_dirichlet(args):
    f = parse_poly(args.poly)
    zeta = complex(math.cos(args.zeta_arg), math.sin(args.zeta_arg))
    payload = {"seminorm": dirichlet.local_dirichlet_seminorm(f, zeta)}
    if args.kernel:
        n_s, alpha_s = args.kernel.split(",", 1)
        kernel = cesaro.coefficients(int(n_s), parse_alpha(alpha_s))
        payload["rayleigh_quotient"] = dirichlet.rayleigh_quotient(kernel, f)
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_constants(args):
    value_series, tail = specfun.c_alpha_series(args.alpha, args.terms)
    payload = {
        "alpha": args.alpha,
        "gamma_form": specfun.c_alpha_gamma(args.alpha),
        "series_form": value_series,
        "series_tail_bound": tail,
        "quadrature_form": specfun.c_alpha_from_quadrature(args.alpha, args.tol),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args):
    alphas = tuple(parse_alpha(t) for t in args.alphas.split(","))
    if args.n_list:
        n_values = tuple(int(t) for t in args.n_list.split(","))
    else:
        lo, hi = (int(t) for t in args.n_exponents.split(":", 1))
        n_values = tuple(2**e for e in range(lo, hi + 1))
    config = sweep.SweepConfig(alphas=alphas, n_values=n_values, tol=args.tol)
    records = sweep.run_sweep(config)
    text = sweep.to_json(records) if args.format == "json" else sweep.to_csv(records)
    _emit(text, args.out)
    return EXIT_OK


def _check(name, ok, detail, results):
    results.append((name, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}")


def _verify_paper(results):
    for n in (1, 2, 5, 10, 100, 1000):
        for alpha, exact in ((0.0, n + 1.0), (1.0, n / (n + 1.0))):
            op = hadamard.from_kernel(cesaro.coefficients(n, alpha))
            res = hadamard.operator_norm(op, tol=1e-12, max_iter=100000)
            err = abs(res.norm_sq - exact) / exact
            _check(
                f"exact-norm n={n} alpha={alpha:g}",
                err <= 1e-9,
                f"rel err {err:.2e}",
                results,
            )
    for n in (2, 5, 10, 50):
        f0 = dirichlet.Polynomial([1.0] + [0.0] * (n - 1) + [-(n + 1.0), float(n)])
        q0 = dirichlet.rayleigh_quotient(cesaro.coefficients(n, 0.0), f0)
        f1 = dirichlet.Polynomial(
            [float(n), -(n + 1.0)] + [0.0] * (n - 1) + [1.0]
        )
        q1 = dirichlet.rayleigh_quotient(cesaro.coefficients(n, 1.0), f1)
        ok = abs(q0 - (n + 1.0)) <= 1e-12 * (n + 1.0) and abs(
            q1 - n / (n + 1.0)
        ) <= 1e-12
        _check(f"maximizer n={n}", ok, f"q0={q0:.12g} q1={q1:.12g}", results)
    worst = 0.0
    for n in range(2, 65):
        for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
            op = hadamard.from_kernel(cesaro.coefficients(n, alpha))
            for k in range(1, op.dimension + 1):
                scale = max(1.0, abs(op.c[k - 1]))
                worst = max(worst, hadamard.eigen_check(op, k) / scale)
    _check("eigen-family residual", worst <= 1e-14, f"max {worst:.2e}", results)
    gautschi_ok = True
    for x in (0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e4):
        for alpha in (0.1, 0.25, 0.5, 0.75, 0.9):
            lo, hi = specfun.gautschi_bounds(x, alpha)
            ratio = math.exp(
                specfun.log_gamma(x + alpha) - specfun.log_gamma(x + 1.0)
            )
            gautschi_ok &= lo < ratio < hi
    _check("gautschi bracket", gautschi_ok, "", results)
    for alpha in (0.05, 0.1, 0.25, 0.4, 0.45):
        cg = specfun.c_alpha_gamma(alpha)
        cs, tail = specfun.c_alpha_series(alpha, 10**6)
        cq = specfun.c_alpha_from_quadrature(alpha, 1e-7)
        tol = max(1e-6, tail)
        ok = abs(cg - cs) <= tol and abs(cg - cq) <= tol and abs(cs - cq) <= tol
        _check(
            f"c-alpha three-way alpha={alpha}",
            ok,
            f"gamma={cg:.9g} series={cs:.9g} quad={cq:.9g}",
            results,
        )


def _verify_properties(results):
    rng = np.random.default_rng(7)
    max_rel = 0.0
    for n in (2, 5, 16, 64):
        for alpha in (0.0, 0.3, 0.5, 1.0):
            kernel = cesaro.coefficients(n, alpha)
            kg = cesaro.coefficients_gamma(n, alpha)
            rel = np.max(
                np.abs(kernel.coeffs - kg.coeffs) / np.abs(kg.coeffs)
            )
            max_rel = max(max_rel, float(rel))
            op = hadamard.from_kernel(kernel)
            mat = hadamard.dense(op)
            for _ in range(20):
                x = rng.standard_normal(op.dimension) + 1j * rng.standard_normal(
                    op.dimension
                )
                err = np.linalg.norm(hadamard.matvec(op, x) - mat @ x)
                err_t = np.linalg.norm(hadamard.matvec_adjoint(op, x) - mat.T @ x)
                scale = np.linalg.norm(x)
                if max(err, err_t) > 1e-13 * scale:
                    _check("matrix-free vs dense", False, f"err {err:.2e}", results)
                    return
    _check("matrix-free vs dense", True, "", results)
    _check(
        "recurrence vs gamma coefficients",
        max_rel <= 1e-11,
        f"max rel {max_rel:.2e}",
        results,
    )
    worst = 0.0
    for n in (3, 8, 20):
        for alpha in (0.0, 0.4, 1.0):
            kernel = cesaro.coefficients(n, alpha)
            op = hadamard.from_kernel(kernel)
            dim = op.dimension
            for _ in range(100):
                a = rng.standard_normal(dim + 1) + 1j * rng.standard_normal(dim + 1)
                f = dirichlet.Polynomial(a)
                lhs = dirichlet.tail_transform(
                    dirichlet.Polynomial(cesaro.apply(kernel, f.coeffs))
                )
                lhs = np.pad(lhs, (0, dim - len(lhs)))
                rhs = hadamard.matvec(op, dirichlet.tail_transform(f))
                worst = max(
                    worst,
                    float(
                        np.linalg.norm(lhs - rhs) / max(np.linalg.norm(rhs), 1e-30)
                    ),
                )
    _check("intertwining identity", worst <= 1e-12, f"max rel {worst:.2e}", results)


def _verify_asymptotics(results, deep):
    max_exp = 20 if deep else 14
    alphas = (0.0, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 1.0)
    config = sweep.SweepConfig(
        alphas=alphas, n_values=tuple(2**e for e in range(8, max_exp + 1))
    )
    records = sweep.run_sweep(config)
    sandwich_ok = all(
        r.best_lower <= r.norm_sq + 1e-9 * max(1.0, r.norm_sq)
        and r.norm_sq <= r.upper + 1e-9 * max(1.0, r.norm_sq)
        for r in records
    )
    _check("sandwich on sweep grid", sandwich_ok, f"{len(records)} records", results)
    c1_ok = all(r.norm >= r.n / (r.n + r.alpha) - 1e-9 for r in records)
    _check("c1 eigenvalue bound on sweep grid", c1_ok, "", results)
    for report in sweep.trend_check(records):
        _check(
            f"trend alpha={report.alpha:g} ({report.regime})",
            report.passed,
            f"final gap {report.final_gap:.3e}; {report.detail}",
            results,
        )


def cmd_verify(args):
    results = []
    if args.suite in ("paper", "all"):
        _verify_paper(results)
    if args.suite in ("properties", "all"):
        _verify_properties(results)
    if args.suite in ("asymptotics", "all"):
        _verify_asymptotics(results, args.deep)
    failed = [name for name, ok, _ in results if not ok]
    print(f"{len(results)} checks, {len(failed)} failed")
    if failed:
        print("failed:", ", ".join(failed))
        return EXIT_FAIL
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cesaronorm",
        description="Operator norms of generalized Cesaro means on local "
        "Dirichlet spaces, with certified bounds and asymptotic checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="dump kernel coefficients c_0..c_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=parse_alpha, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("norm", help="operator norm at one (n, alpha)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=parse_alpha, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=20000)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("bounds", help="certificate bracket at one (n, alpha)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=parse_alpha, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("dirichlet", help="local Dirichlet seminorm of a polynomial")
    p.add_argument("--poly", required=True, help='coefficients "re[:im],..."')
    p.add_argument(
        "--zeta-arg", type=float, default=0.0, help="angle theta; zeta = e^(i theta)"
    )
    p.add_argument("--kernel", help='"n,alpha": also report the Rayleigh quotient')
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_dirichlet)

    p = sub.add_parser("constants", help="three evaluations of C(alpha)")
    p.add_argument("--alpha", type=parse_alpha, required=True)
    p.add_argument("--terms", type=int, default=10**6)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("sweep", help="norms and certificates over an (n, alpha) grid")
    p.add_argument("--alphas", required=True, help="comma-separated alpha list")
    p.add_argument(
        "--n-exponents", default="3:14", help="lo:hi -> n = 2^lo .. 2^hi"
    )
    p.add_argument("--n-list", help="explicit comma-separated n values")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="self-verification suites")
    p.add_argument(
        "--suite",
        choices=("paper", "properties", "asymptotics", "all"),
        default="all",
    )
    p.add_argument("--deep", action="store_true", help="extend asymptotics to 2^20")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
