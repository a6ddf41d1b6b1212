"""Command-line front end.

Exit status: 0 when every check passes (flagged checks included), 1 when a
check fails or a computation is undefined, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .cyclotomic import format_psi, specialize, verify_ramification
from .exact import CycloNum, format_basis, is_prime, reduce_mod_h
from .grouplaws import UndefinedComposition
from .relativity import Velocity, add_velocity, beta_real, boost_matrix, rapidity
from .suites import SCOPES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _prime_list(text: str) -> list[int]:
    try:
        primes = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    bad = [p for p in primes if not is_prime(p)]
    if bad or not primes:
        raise argparse.ArgumentTypeError(f"not prime: {bad or text!r}")
    return primes


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer-lorentz",
        description="Exact verification of the Lorentz/SOS group laws and their Kummer maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("scope", nargs="?", default="all", choices=SCOPES)
    p.add_argument("--primes", type=_prime_list, default=None, help="comma-separated primes (default 2,3,5,7,11,13)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("addvel", help="relativistic velocity addition")
    p.add_argument("u", type=float)
    p.add_argument("v", type=float)
    p.add_argument("c_pos", nargs="?", type=float, default=None, metavar="c")
    p.add_argument("--c", type=float, default=None, help="speed of light (default 1)")

    p = sub.add_parser("boost", help="boost matrix L_c(u)")
    p.add_argument("u", type=float)
    p.add_argument("--c", type=float, default=1.0)

    p = sub.add_parser("kummer", help="psi_p and phi_p over Z[zeta_p] and their fibers mod h")
    p.add_argument("p_pos", nargs="?", type=_prime, default=None, metavar="p")
    p.add_argument("--p", type=_prime, default=None)
    return parser


def cmd_verify(args, out) -> int:
    report = run_suite(args.scope, args.primes)
    out.write((report.to_json() if args.format == "json" else report.to_text()) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def _fmt(x: float) -> str:
    return repr(float(x)) if math.isfinite(x) else str(x)


def cmd_addvel(args, out, parser) -> int:
    if args.c is not None and args.c_pos is not None and args.c != args.c_pos:
        parser.error("c given twice with different values")
    c = args.c if args.c is not None else (args.c_pos if args.c_pos is not None else 1.0)
    try:
        u, v = Velocity(args.u, c), Velocity(args.v, c)
        w = add_velocity(u, v)
    except (ValueError, UndefinedComposition) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    out.write(f"u ⊕ v = {_fmt(w.value)}  (c = {_fmt(c)})\n")
    if u.interior and v.interior and w.interior:
        ru, rv, rw = rapidity(u), rapidity(v), rapidity(w)
        out.write(f"rapidity: {_fmt(ru)} + {_fmt(rv)} = {_fmt(rw)}\n")
        out.write(f"beta: {_fmt(beta_real(u))} · {_fmt(beta_real(v))} = {_fmt(beta_real(w))}\n")
    else:
        out.write("rapidity: infinite (light-speed argument)\n")
    return EXIT_OK


def cmd_boost(args, out) -> int:
    try:
        b = boost_matrix(Velocity(args.u, args.c))
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    m = b.matrix
    out.write(f"L_c(u) for u = {_fmt(args.u)}, c = {_fmt(args.c)}:\n")
    out.write(f"  [[{_fmt(m[0, 0])}, {_fmt(m[0, 1])}],\n   [{_fmt(m[1, 0])}, {_fmt(m[1, 1])}]]\n")
    out.write(f"gamma = {_fmt(m[0, 0])}, det = {_fmt(b.det())}, rapidity = {_fmt(rapidity(b.u))}\n")
    return EXIT_OK


def cmd_kummer(args, out, parser) -> int:
    if args.p is not None and args.p_pos is not None and args.p != args.p_pos:
        parser.error("p given twice with different values")
    p = args.p if args.p is not None else args.p_pos
    if p is None:
        parser.error("a prime p is required")
    h = CycloNum.h(p)
    sp = specialize(p)
    ram = verify_ramification(p)
    w = sp.w
    lines = [f"p = {p}, ζ = ζ_{p}, h = ζ - 1"]
    lines.append(f"h^{p - 1} = {format_basis((h ** (p - 1)).coeffs, 'ζ')} = {p}·w")
    lines.append(f"w = {w} = {format_basis(w.to_h_basis(), 'h')}")
    lines.append(f"w mod h = {reduce_mod_h(w).value} ≡ -1, unit: {w.is_unit()}")
    if p == 3:
        lines.append(f"h^2 = {format_basis((h * h).coeffs, 'ζ')}")
    lines.append(f"ψ_{p}(u) = {format_psi(p, sp.psi_coeffs)}")
    lines.append("coefficients of ψ_p (ζ-basis) and residues mod h:")
    for i in range(p, 0, -1):
        c = sp.psi_coeffs[i]
        lines.append(f"  u^{i}: {c}  ->  {reduce_mod_h(c).value if c.is_integral() else 'non-integral'}")
    lines.append(f"ψ_{p} special fiber u^{p} - u: {sp.verdicts['psi_fiber_is_artin_schreier']}")
    lines.append(f"  fiber {sp.psi_mod_h}")
    if p == 2:
        lines.append("φ_2: not applicable (the denominator of φ_p vanishes mod h for p = 2)")
    else:
        lines.append(f"φ_{p}: N mod h = 2·({sp.phi_mod_h}), D mod h = {sp.phi_den_mod_h}")
        lines.append(f"  fiber {sp.phi_mod_h}")
        for name in (
            "phi_num_integral",
            "phi_num_fiber",
            "phi_den_fiber_is_2",
            "phi_fiber_is_artin_schreier",
        ):
            lines.append(f"  {name}: {sp.verdicts[name]}")
    ok = sp.ok and ram.passed
    lines.append("all verdicts pass" if ok else "SOME VERDICTS FAILED")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "addvel":
            return cmd_addvel(args, out, parser)
        if args.command == "boost":
            return cmd_boost(args, out)
        return cmd_kummer(args, out, parser)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
