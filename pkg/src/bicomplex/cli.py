"""Command-line front end: JSON in, JSON/CSV/DOT out.

Exit codes: 0 success, 1 domain errors (structured error name in the JSON
output), 2 malformed input or arguments.
"""

from __future__ import annotations

import argparse
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from . import examples as ex
from .errors import BicomplexError, DoesNotSplit
from .jordan import bicomplex_jordan, enumerate_pairings
from .lattice import bicomplex_lattice, to_dot
from .matrices import determinant, inverse, mat_mul
from .operators import (
    check_compact_spectral_properties,
    norm_limit_demo,
    power_sigmas,
    riesz_residuals,
    riesz_witness,
)
from .scalars import (
    HyperbolicValue,
    ball_contains,
    hyperbolic_norm,
    invert,
    nth_root,
)
from .serialize import (
    FormatError,
    component_to_json,
    hyperbolic_from_json,
    hyperbolic_to_json,
    lattice_to_json,
    matrix_from_json,
    matrix_to_json,
    scalar_from_json,
    scalar_to_json,
    vector_from_json,
    vector_to_json,
)
from .spectral import enumerate_diagonalizations, selfadjoint_diagonalize

DEFAULT_TOLERANCES = {
    "float_eq": 1e-12,
    "det_zero": 1e-10,
    "self_adjoint": 1e-10,
    "jacobi": 1e-13,
    "separation": 1e-8,
    "orthogonality": 1e-10,
}


@dataclass
class RunConfig:
    backend: Optional[str] = None
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    fmt: str = "json"
    seed: int = 0

    def tol(self, name: str) -> float:
        return self.tolerances[name]


def _add_common(sub, fmt_choices=("json",)):
    sub.add_argument("input", nargs="?", default="-", help="input JSON path, or - for stdin")
    sub.add_argument("--backend", choices=["exact", "float"], default=None,
                     help="override the backend inferred from the input encoding")
    sub.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                     help=f"override a named tolerance; known: {', '.join(sorted(DEFAULT_TOLERANCES))}")
    sub.add_argument("--format", choices=list(fmt_choices), default=fmt_choices[0])
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized demos")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicomplex",
        description="Bicomplex linear algebra in the idempotent representation.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("scalar", help="scalar arithmetic on bicomplex numbers")
    p.add_argument("--op", required=True,
                   choices=["add", "sub", "mul", "invert", "conjugate", "norm",
                            "nth-root", "ball-contains"])
    p.add_argument("--n", type=int, default=2, help="root order for nth-root")
    p.add_argument("--branch1", type=int, default=0)
    p.add_argument("--branch2", type=int, default=0)
    _add_common(p)

    for name, help_txt in [
        ("matmul", "componentwise matrix product"),
        ("det", "bicomplex determinant"),
        ("inverse", "componentwise matrix inverse"),
    ]:
        p = subs.add_parser(name, help=help_txt)
        _add_common(p)

    p = subs.add_parser("jordan", help="exact bicomplex Jordan form")
    p.add_argument("--enumerate-pairings", action="store_true",
                   help="emit all block-permuted variants")
    p.add_argument("--max-variants", type=int, default=100)
    _add_common(p)

    p = subs.add_parser("lattice", help="invariant-subspace lattice diagram")
    _add_common(p, fmt_choices=("json", "dot"))

    p = subs.add_parser("spectral", help="self-adjoint diagonalization")
    p.add_argument("--pairing", default="identity",
                   help="'identity' or a comma-separated permutation like 1,0")
    p.add_argument("--all-pairings", action="store_true")
    _add_common(p)

    p = subs.add_parser("operator", help="compact-operator demos")
    opsubs = p.add_subparsers(dest="opcommand", required=True)
    t = opsubs.add_parser("tower", help="sigma-sequence truncation tower report")
    _add_common(t, fmt_choices=("json", "csv"))
    a = opsubs.add_parser("approx", help="best rank-r approximation error table")
    _add_common(a, fmt_choices=("json", "csv"))
    r = opsubs.add_parser("riesz", help="Riesz-lemma witness vector")
    _add_common(r)

    p = subs.add_parser("examples", help="reproduce the worked examples end to end")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.add_argument("--random-z", action="store_true",
                   help="example 1 with a random noncomplex z (uses --seed)")
    _add_common(p)

    return parser


def _config_from(args) -> RunConfig:
    cfg = RunConfig(backend=args.backend, fmt=args.format, seed=args.seed)
    for item in args.tol:
        name, _, value = item.partition("=")
        if name not in DEFAULT_TOLERANCES:
            raise FormatError(f"unknown tolerance name {name!r}")
        try:
            v = float(value)
        except ValueError:
            raise FormatError(f"bad tolerance value in {item!r}") from None
        if v <= 0:
            raise FormatError(f"tolerance must be positive: {item!r}")
        cfg.tolerances[name] = v
    return cfg


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read input: {exc}") from exc


def _need(payload, key):
    if not isinstance(payload, dict) or key not in payload:
        raise FormatError(f"input is missing the {key!r} key")
    return payload[key]


def _emit(obj, out=None):
    out = out or sys.stdout
    json.dump(obj, out, sort_keys=True, indent=2, default=_json_default)
    out.write("\n")


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, complex):
        return {"re": o.real, "im": o.imag}
    raise TypeError(f"not JSON-serializable: {o!r}")


# -- subcommand handlers -------------------------------------------------------

def _run_scalar(args, cfg: RunConfig):
    payload = _read_json(args.input)
    a = scalar_from_json(_need(payload, "a"), cfg.backend)
    if args.op in ("add", "sub", "mul", "ball-contains"):
        if "b" not in payload:
            raise FormatError(f"op {args.op} needs both 'a' and 'b'")
    if args.op == "add":
        return scalar_to_json(a + scalar_from_json(payload["b"], cfg.backend))
    if args.op == "sub":
        return scalar_to_json(a - scalar_from_json(payload["b"], cfg.backend))
    if args.op == "mul":
        return scalar_to_json(a * scalar_from_json(payload["b"], cfg.backend))
    if args.op == "invert":
        return scalar_to_json(invert(a))
    if args.op == "conjugate":
        return scalar_to_json(a.conjugate())
    if args.op == "norm":
        return hyperbolic_to_json(hyperbolic_norm(a))
    if args.op == "nth-root":
        root = nth_root(a, args.n, args.branch1, args.branch2)
        return scalar_to_json(root)
    if args.op == "ball-contains":
        radius = hyperbolic_from_json(_need(payload, "radius"))
        point = scalar_from_json(_need(payload, "b"), cfg.backend)
        return {"contains": ball_contains(a, radius, point)}
    raise FormatError(f"unknown op {args.op}")


def _run_matmul(args, cfg: RunConfig):
    payload = _read_json(args.input)
    a = matrix_from_json(_need(payload, "a"), cfg.backend)
    b = matrix_from_json(_need(payload, "b"), cfg.backend)
    return matrix_to_json(mat_mul(a, b))


def _run_det(args, cfg: RunConfig):
    a = matrix_from_json(_read_json(args.input), cfg.backend)
    return scalar_to_json(determinant(a))


def _run_inverse(args, cfg: RunConfig):
    a = matrix_from_json(_read_json(args.input), cfg.backend)
    return matrix_to_json(inverse(a, cfg.tol("det_zero")))


def _jordan_payload(data):
    def blocks(comp):
        return [
            {"eigenvalue": component_to_json(lam), "sizes": list(sizes)}
            for lam, sizes in comp.blocks.items()
        ]

    return {
        "p": matrix_to_json(data.p),
        "j": matrix_to_json(data.j),
        "blocks": {"component1": blocks(data.comp1), "component2": blocks(data.comp2)},
        "eigenvalues": {
            "component1": [component_to_json(v) for v in data.comp1.eigenvalues],
            "component2": [component_to_json(v) for v in data.comp2.eigenvalues],
        },
        "superdiagonal_alphabet": data.superdiagonal_alphabet(),
    }


def _run_jordan(args, cfg: RunConfig):
    a = matrix_from_json(_read_json(args.input), cfg.backend)
    data = bicomplex_jordan(a)
    out = _jordan_payload(data)
    if args.enumerate_pairings:
        out["variants"] = [
            _jordan_payload(v) for v in enumerate_pairings(data, args.max_variants)
        ]
    return out


def _run_lattice(args, cfg: RunConfig):
    a = matrix_from_json(_read_json(args.input), cfg.backend)
    lat = bicomplex_lattice(a)
    if cfg.fmt == "dot":
        return to_dot(lat)
    return lattice_to_json(lat)


def _spectral_payload(data):
    return {
        "p": matrix_to_json(data.p),
        "d": matrix_to_json(data.d),
        "pairing": list(data.pairing),
        "residuals": {
            "unitarity": list(data.residuals["unitarity"]),
            "reconstruction": list(data.residuals["reconstruction"]),
            "sweeps": list(data.residuals["sweeps"]),
        },
    }


def _run_spectral(args, cfg: RunConfig):
    a = matrix_from_json(_read_json(args.input), cfg.backend)
    if args.all_pairings:
        datas = enumerate_diagonalizations(
            a,
            tol=cfg.tol("jacobi"),
            separation_tol=cfg.tol("separation"),
            self_adjoint_tol=cfg.tol("self_adjoint"),
        )
        return {"count": len(datas), "diagonalizations": [_spectral_payload(d) for d in datas]}
    pairing = args.pairing
    if pairing != "identity":
        pairing = tuple(int(x) for x in pairing.split(","))
    data = selfadjoint_diagonalize(
        a, pairing, tol=cfg.tol("jacobi"), self_adjoint_tol=cfg.tol("self_adjoint")
    )
    return _spectral_payload(data)


def _parse_sigmas(obj, need: int):
    kind = obj.get("kind", "power")
    if kind == "power":
        return power_sigmas(need, int(obj.get("p1", 1)), int(obj.get("p2", 2)))
    if kind == "list":
        values = obj.get("values", [])
        if len(values) < need:
            raise FormatError(f"sigma list shorter than max dim {need}")
        return [
            HyperbolicValue(Fraction(str(a)), Fraction(str(b))) for a, b in values
        ]
    raise FormatError(f"unknown sigma kind {kind!r}")


def _run_operator(args, cfg: RunConfig):
    payload = _read_json(args.input)
    if args.opcommand == "tower":
        dims = [int(d) for d in payload.get("dims", [8, 16, 32])]
        sigmas = _parse_sigmas(payload.get("sigma", {}), max(dims))
        eps = [
            (Fraction(str(a)), Fraction(str(b)))
            for a, b in payload.get("eps", [["1/10", "1/10"]])
        ]
        report = check_compact_spectral_properties(sigmas, dims, eps)
        if cfg.fmt == "csv":
            return _tower_csv(report)
        return report.to_dict()
    if args.opcommand == "approx":
        t = matrix_from_json(_need(payload, "matrix"), cfg.backend)
        ranks = [int(r) for r in payload.get("ranks", [0, 1, 2])]
        report = norm_limit_demo(t, ranks)
        if cfg.fmt == "csv":
            return _approx_csv(report)
        return report.to_dict()
    if args.opcommand == "riesz":
        basis = [vector_from_json(v, cfg.backend) for v in _need(payload, "basis")]
        r = float(_need(payload, "r"))
        y = riesz_witness(basis, r)
        norms, dists = riesz_residuals(basis, y)
        return {
            "witness": vector_to_json(y),
            "norms": list(norms),
            "distances": list(dists),
            "r": r,
        }
    raise FormatError(f"unknown operator subcommand {args.opcommand!r}")


def _tower_csv(report) -> str:
    buf = io.StringIO()
    buf.write("dim,eps1,eps2,outside_ball,beyond_both,invertible_members,all_certified\n")
    for trunc in report.truncations:
        for row in trunc["eps_counts"]:
            buf.write(
                f"{trunc['dim']},{row['eps'][0]},{row['eps'][1]},{row['outside_ball']},"
                f"{row['beyond_both']},{trunc['invertible_members']},"
                f"{trunc['all_certified_eigenvalues']}\n"
            )
    return buf.getvalue()


def _approx_csv(report) -> str:
    buf = io.StringIO()
    buf.write("rank,error1,error2,next_sigma1,next_sigma2\n")
    for rank, err, nxt in zip(report.ranks, report.errors, report.expected):
        buf.write(f"{rank},{err[0]!r},{err[1]!r},{nxt[0]!r},{nxt[1]!r}\n")
    return buf.getvalue()


def _run_examples(args, cfg: RunConfig):
    if args.which == 1:
        z = None
        if args.random_z:
            z = ex.random_noncomplex_scalar(random.Random(cfg.seed))
        return ex.example_one_report(z, det_tol=cfg.tol("det_zero"))
    return ex.example_two_report()


HANDLERS = {
    "scalar": _run_scalar,
    "matmul": _run_matmul,
    "det": _run_det,
    "inverse": _run_inverse,
    "jordan": _run_jordan,
    "lattice": _run_lattice,
    "spectral": _run_spectral,
    "operator": _run_operator,
    "examples": _run_examples,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from(args)
        result = HANDLERS[args.command](args, cfg)
    except FormatError as exc:
        print(json.dumps({"error": "FormatError", "detail": str(exc)}))
        return 2
    except BicomplexError as exc:
        payload = {"error": exc.name, "detail": str(exc)}
        if isinstance(exc, DoesNotSplit):
            payload["remainder"] = [component_to_json(c) for c in exc.remainder]
        print(json.dumps(payload, sort_keys=True))
        return 1
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        _emit(result)
    if args.command == "examples" and not result.get("passed", False):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
