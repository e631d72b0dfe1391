"""Command-line driver.

Every subcommand prints one JSON report on stdout::

    {"command": ..., "inputs_digest": ..., "outputs": {...}, "checks": [...]}

Exit status is 0 on success, 1 on a domain error (the report carries the
error class name) and 2 on bad usage or an unreadable matrix file.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import matfile, worked_example
from .code import codes_equal, encode, is_codeword, is_observable_code, make_code, syndrome_former
from .errors import ConvRingError, SizeOutOfRange, StageMismatch
from .first_order import FirstOrderRep, check_minimality, code_of, for_code
from .matfile import MatrixFileError
from .poly import (
    Poly,
    PolyMatrix,
    full_size_minors,
    is_surjective_polymatrix,
    kernel_witness,
    minors,
    minors_gcd,
    poly_gcd,
    poly_rank,
    vector_degree,
)
from .ring import (
    RMatrix,
    annihilator,
    determinantal_rank,
    make_ring,
    minors_ideal,
    same_ring,
)
from .state_space import (
    StateSpaceSystem,
    controllability_ideal,
    controllability_matrix,
    extract_iso,
    is_observable_system,
    is_reachable,
    iso_to_for,
    observability_matrix,
    simulate,
    system_to_code,
)


class UsageError(Exception):
    pass


class Context:
    """Collects inputs, outputs, checks and files written for one command."""

    def __init__(self, command: str, out_dir: Path | None):
        self.command = command
        self.out_dir = out_dir
        self.inputs: list[Any] = []
        self.outputs: dict[str, Any] = {}
        self.checks: list[dict[str, Any]] = []

    def arg(self, value: Any) -> Any:
        self.inputs.append(value)
        return value

    def matrix(self, path: str, kind: str | None = None):
        A = matfile.load(path)
        if kind == "const" and not isinstance(A, RMatrix):
            raise UsageError(f"{path}: expected a constant matrix")
        if kind == "poly" and isinstance(A, RMatrix):
            A = PolyMatrix.from_const(A)
        self.inputs.append(matfile.to_document(A))
        return A

    def check(self, name: str, passed: bool, mode: str = "exact") -> None:
        self.checks.append({"name": name, "mode": mode, "passed": bool(passed)})

    def emit(self, name: str, A) -> Any:
        """Record a matrix output and, with --out-dir, write it as NAME.mat."""
        doc = matfile.to_document(A)
        self.outputs[name] = doc
        if self.out_dir is not None:
            self.out_dir.mkdir(parents=True, exist_ok=True)
            matfile.save(self.out_dir / f"{name}.mat", A)
        return doc

    def digest(self) -> str:
        blob = json.dumps([self.command, self.inputs], sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()

    def report(self, **extra) -> dict[str, Any]:
        out = {"command": self.command, "inputs_digest": self.digest(),
               "outputs": self.outputs, "checks": self.checks}
        out.update(extra)
        return out


def _system(ctx: Context, A: str, B: str | None, C: str | None, D: str | None) -> StateSpaceSystem:
    mA = ctx.matrix(A, "const")
    ring, d = mA.ring, mA.nrows
    mB = ctx.matrix(B, "const") if B else RMatrix.zeros(ring, d, 0)
    mC = ctx.matrix(C, "const") if C else RMatrix.zeros(ring, 0, d)
    mD = ctx.matrix(D, "const") if D else RMatrix.zeros(ring, mC.nrows, mB.ncols)
    return StateSpaceSystem(mA, mB, mC, mD)


def _triple(ctx: Context, K: str, L: str, M: str) -> FirstOrderRep:
    return FirstOrderRep.from_matrices(*(ctx.matrix(p, "const") for p in (K, L, M)))


def _minimality(ctx: Context, rep: FirstOrderRep) -> bool:
    report = check_minimality(rep)
    ctx.outputs["minimality"] = {"k_injective": report.k_injective,
                                 "km_surjective": report.km_surjective,
                                 "pencil_surjective": report.pencil_surjective}
    ctx.check("K injective", report.k_injective)
    ctx.check("(K | M) surjective", report.km_surjective)
    ctx.check("(zK + L | M) surjective", report.pencil_surjective)
    return report.minimal


# --- subcommands -----------------------------------------------------------

def cmd_ring(ctx: Context, args) -> None:
    ring = make_ring(ctx.arg(args.modulus))
    ctx.outputs.update(modulus=ring.modulus, primes=list(ring.primes),
                       idempotents=list(ring.idempotents), is_field=ring.is_field)
    m = ring.modulus
    ctx.check("idempotents sum to 1", sum(ring.idempotents) % m == 1 % m)
    ctx.check("e_i e_j = 0 for i != j and e_i^2 = e_i",
              all((a * b - (a if i == j else 0)) % m == 0
                  for i, a in enumerate(ring.idempotents) for j, b in enumerate(ring.idempotents)))


def cmd_validate(ctx: Context, args) -> None:
    code = make_code_from(ctx, args.G)
    ctx.outputs.update(n=code.n, k=code.k, delta=code.delta,
                       column_degrees=[list(c) for c in code.component_column_degrees],
                       observable=is_observable_code(code))
    for j, G in enumerate(code.component_encoders):
        ctx.emit(f"G_{code.ring.primes[j]}", G)
    ctx.check("reduced column degrees sum to the top minor degree",
              all(max(f.degree for f in full_size_minors(G)) == code.delta
                  for G in code.component_encoders))


def make_code_from(ctx: Context, path: str):
    G = ctx.matrix(path, "poly")
    return make_code(G.ring, G)


def cmd_minors(ctx: Context, args) -> None:
    A = ctx.matrix(args.A)
    i = ctx.arg(args.i)
    if isinstance(A, RMatrix):
        ideal = minors_ideal(A, i)
        ctx.outputs.update(ideal=str(ideal), annihilator=str(annihilator(ideal)))
        return
    r = min(A.shape)
    if not 1 <= i <= r:
        raise SizeOutOfRange(f"minor size {i} not in 1..{r}")
    ms = minors(A, i)
    ctx.outputs["minors"] = [list(f.coeffs) for f in ms]
    ctx.outputs["component_gcds"] = {
        str(p): list(_gcd_of([f.project(j) for f in ms]).coeffs) for j, p in enumerate(A.ring.primes)}


def _gcd_of(polys: list[Poly]) -> Poly:
    g = Poly.zero(polys[0].ring)
    for f in polys:
        g = poly_gcd(g, f)
    return g


def cmd_rank(ctx: Context, args) -> None:
    A = ctx.matrix(args.A)
    if isinstance(A, RMatrix):
        ctx.outputs.update(determinantal_rank=determinantal_rank(A),
                           component_ranks=list(A.component_ranks))
        ctx.check("determinantal rank = min component rank",
                  determinantal_rank(A, check=False) == min(A.component_ranks, default=0))
    else:
        ranks = [poly_rank(A.project(j)) for j in range(A.ring.t)]
        ctx.outputs.update(component_ranks=ranks, rank=min(ranks))


def cmd_for(ctx: Context, args) -> None:
    code = make_code_from(ctx, args.G)
    rep = for_code(code)
    for name in "KLM":
        ctx.emit(name, getattr(rep, name))
    ctx.outputs.update(n=rep.n, k=rep.k, delta=rep.delta)
    _minimality(ctx, rep)
    ctx.check("Ker(zK + L | M) = Im G", codes_equal(code_of(rep), code), mode="code")


def cmd_iso(ctx: Context, args) -> None:
    rep = _triple(ctx, args.K, args.L, args.M)
    extraction = extract_iso(rep)
    sys_ = extraction.system
    for name, X in zip("ABCD", sys_.matrices()):
        ctx.emit(name, X)
    ctx.emit("W", extraction.W)
    ctx.outputs["permutation"] = list(sys_.permutation)
    ctx.check("system reachable", is_reachable(sys_))
    ctx.check("code of the system = Ker(zK + L | M)",
              codes_equal(system_to_code(sys_), code_of(rep)), mode="code")


def cmd_canon(ctx: Context, args) -> None:
    sys_ = _system(ctx, args.A, args.B, args.C, args.D)
    rep = iso_to_for(sys_)
    for name in "KLM":
        ctx.emit(name, getattr(rep, name))
    _minimality(ctx, rep)


def cmd_reach(ctx: Context, args) -> None:
    sys_ = _system(ctx, args.A, args.B, None, None)
    Phi = controllability_matrix(sys_)
    ctx.emit("Phi", Phi)
    ctx.outputs["reachable"] = is_reachable(sys_)
    ctx.outputs[f"U_{sys_.delta}(Phi)"] = str(controllability_ideal(sys_))
    ctx.outputs["component_ranks"] = list(Phi.component_ranks)
    ctx.check("reachable iff every component rank equals delta",
              ctx.outputs["reachable"] == all(r == sys_.delta for r in Phi.component_ranks))


def cmd_observe_sys(ctx: Context, args) -> None:
    mA, mC = ctx.matrix(args.A, "const"), ctx.matrix(args.C, "const")
    ring = same_ring(mA.ring, mC.ring)
    sys_ = StateSpaceSystem(mA, RMatrix.zeros(ring, mA.nrows, 0), mC, RMatrix.zeros(ring, mC.nrows, 0))
    Omega = observability_matrix(sys_)
    ctx.emit("Omega", Omega)
    ctx.outputs["observable"] = is_observable_system(sys_)
    ctx.outputs["component_ranks"] = list(Omega.component_ranks)


def cmd_observe_code(ctx: Context, args) -> None:
    code = make_code_from(ctx, args.G)
    ctx.outputs["observable"] = is_observable_code(code)
    ctx.outputs["component_minor_gcds"] = {
        str(p): list(minors_gcd(G).coeffs) for p, G in zip(code.ring.primes, code.component_encoders)}


def cmd_syndrome(ctx: Context, args) -> None:
    code = make_code_from(ctx, args.G)
    H = syndrome_former(code)
    ctx.emit("H", H)
    ctx.check("H G = 0", (H @ code.encoder).is_zero())
    ctx.check("H surjective over every residue field",
              all(is_surjective_polymatrix(H.project(j)) for j in range(code.ring.t)))


def cmd_kernel(ctx: Context, args) -> None:
    rep = _triple(ctx, args.K, args.L, args.M)
    _minimality(ctx, rep)
    code = code_of(rep)
    ctx.emit("G", code.encoder)
    ctx.outputs.update(n=code.n, k=code.k, delta=code.delta)
    F2 = PolyMatrix.from_const(rep.M)
    ctx.check("encoder columns lie in Ker(zK + L | M)",
              all(kernel_witness(rep.pencil, F2, c, max(vector_degree(c), 0) + rep.delta) is not None
                  for c in code.encoder.columns()))


def cmd_encode(ctx: Context, args) -> None:
    code = make_code_from(ctx, args.G)
    u = ctx.matrix(args.u, "poly")
    same_ring(code.ring, u.ring)
    if u.shape != (code.k, 1):
        raise UsageError(f"message must be a {code.k} x 1 matrix, got {u.shape[0]} x {u.shape[1]}")
    v = encode(code, u.column(0))
    ctx.emit("v", PolyMatrix.from_columns(code.ring, [v], code.n))
    ctx.check("v is a codeword", is_codeword(code, v))


def cmd_simulate(ctx: Context, args) -> None:
    sys_ = _system(ctx, args.A, args.B, args.C, args.D)
    U = ctx.matrix(args.inputs, "const")
    same_ring(sys_.ring, U.ring)
    if U.nrows and U.ncols != sys_.k:
        raise UsageError(f"inputs must have {sys_.k} columns, got {U.ncols}")
    traj = simulate(sys_, U.tolist())
    ctx.outputs.update(states=[list(x) for x in traj.states], outputs=[list(y) for y in traj.outputs],
                       returned=traj.returned)
    v = traj.original_codeword()
    ctx.emit("v", PolyMatrix.from_columns(sys_.ring, [v], sys_.n))
    if traj.returned and is_reachable(sys_):
        ctx.check("returned trajectory is a codeword", is_codeword(system_to_code(sys_), v), mode="code")


def cmd_equal(ctx: Context, args) -> None:
    a, b = make_code_from(ctx, args.G1), make_code_from(ctx, args.G2)
    ctx.outputs["equal"] = codes_equal(a, b)


def cmd_paper_example(ctx: Context, args) -> None:
    component = ctx.arg(args.component)
    if component is not None and not 1 <= component <= 2:
        raise UsageError("--component must be 1 (F_2) or 2 (F_3)")
    corrupt = ctx.arg(args.corrupt_b)
    try:
        result = worked_example.run(None if component is None else component - 1, corrupt_b=corrupt)
    except StageMismatch as exc:
        ctx.checks.extend(exc.stages)  # type: ignore[attr-defined]
        raise
    ctx.checks.extend(result["stages"])
    ctx.outputs["stages_passed"] = sum(s["passed"] for s in result["stages"])
    ctx.outputs["field"] = result["field"]


COMMANDS: dict[str, tuple[Callable, Callable[[argparse.ArgumentParser], None], str]] = {}


def _register(name: str, fn: Callable, help_: str, *positional: str) -> None:
    def configure(p: argparse.ArgumentParser) -> None:
        for arg in positional:
            p.add_argument(arg)
    COMMANDS[name] = (fn, configure, help_)


_register("validate", cmd_validate, "validate an encoder file", "G")
_register("rank", cmd_rank, "determinantal rank of a matrix", "A")
_register("for", cmd_for, "minimal first-order representation of a code", "G")
_register("iso", cmd_iso, "extract (A, B, C, D) from a minimal triple", "K", "L", "M")
_register("canon", cmd_canon, "canonical triple of a system", "A", "B", "C", "D")
_register("reach", cmd_reach, "reachability of (A, B)", "A", "B")
_register("observe-sys", cmd_observe_sys, "observability of (A, C)", "A", "C")
_register("observe-code", cmd_observe_code, "observability of a code", "G")
_register("syndrome", cmd_syndrome, "syndrome former of an observable code", "G")
_register("kernel", cmd_kernel, "encoder of Ker(zK + L | M)", "K", "L", "M")
_register("encode", cmd_encode, "encode a k x 1 message", "G", "u")
_register("simulate", cmd_simulate, "run a system on a T x k input sequence", "A", "B", "C", "D", "inputs")
_register("equal", cmd_equal, "compare two codes", "G1", "G2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="convring", description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", type=Path, help="write output matrices here as NAME.mat")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", help="CRT data of Z/m")
    p.add_argument("modulus", type=int)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("minors", help="ideal (or list) of i x i minors")
    p.add_argument("A")
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_minors)

    for name, (fn, configure, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        configure(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("paper-example", help="run the worked Z/6 example end to end")
    p.add_argument("--component", type=int, help="restrict to one residue field (1 = F_2, 2 = F_3)")
    p.add_argument("--corrupt-b", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_paper_example)
    return parser


def _print(report: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=1) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    ctx = Context(args.command, args.out_dir)
    try:
        args.func(ctx, args)
    except ConvRingError as exc:
        name = type(exc).__name__
        _print(ctx.report(error={"type": name, "message": str(exc)}))
        print(f"error: {name}: {exc}", file=sys.stderr)
        return 1
    except (UsageError, MatrixFileError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    _print(ctx.report())
    return 0


if __name__ == "__main__":
    sys.exit(main())
