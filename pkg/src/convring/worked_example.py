"""End-to-end run of the worked (3, 2) example over Z/6 = F_2 x F_3.

Two component encoders, their first-order triples and state-space systems
are embedded as reference data.  Each stage compares a computed object with
its reference and records which comparison was used: ``exact`` (bit-exact
equality), ``set`` (equality as sets), ``equivalence`` (a verified (T, S)
witness) or ``code`` (equality of generated codes).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .code import codes_equal, is_observable_code, make_code
from .errors import StageMismatch
from .first_order import FirstOrderRep, build_for_field, check_minimality, for_code, representations_equivalent
from .poly import Poly, PolyMatrix, full_size_minors, minors_gcd
from .ring import RMatrix, det, make_ring
from .state_space import (
    StateSpaceSystem,
    controllability_ideal,
    controllability_matrix,
    for_to_iso,
    glue_systems,
    is_observable_system,
    is_reachable,
    iso_to_for,
    project_system,
    system_to_code,
)

Z6, F2, F3 = make_ring(6), make_ring(2), make_ring(3)

ENCODER = [[[3, 1], [5]], [[1, 0, 3], [2, -2]], [[-1, 4, -1], [-3, 3]]]
ENCODER_MINORS = [[1, 2, 1], [2, 4, 2], [5, 5, 1, 1]]

COMPONENTS = {
    # F_2
    0: dict(
        G=[[[-1, 1], [1]], [[1, 0, 1], [0]], [[1, 0, 1], [1, 1]]],
        K=[[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 1]],
        L=[[0, 1, 0], [1, 0, 1], [1, 0, 0], [1, 0, 1]],
        M=[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        A=[[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        B=[[0, 0], [1, 0], [1, 1]],
        C=[[1, 1, 1]],
        D=[[0, 0]],
        Phi=[[0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 1, 0], [1, 1, 1, 1, 1, 1]],
        gcd=[1, 0, 1],
    ),
    # F_3
    1: dict(
        G=[[[0, 1], [-1]], [[1], [-1, 1]], [[-1, 1, -1], [0]]],
        K=[[-1, 0, 0], [-1, 0, 0], [0, 0, -1], [-1, 1, 0]],
        L=[[0, 1, 0], [0, 0, 1], [-1, 0, 1], [1, 0, 0]],
        M=[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        A=[[0, 1, 0], [-1, 1, 0], [-1, 0, 1]],
        B=[[0, 0], [0, -1], [1, 0]],
        C=[[0, 1, -1]],
        D=[[0, 0]],
        Phi=[[0, 0, 0, 2, 0, 2], [0, 2, 0, 2, 0, 0], [1, 0, 1, 0, 1, 1]],
        gcd=[1, 2, 1],
    ),
}

GLUED = dict(
    A=[[0, 1, 0], [5, 4, 0], [2, 0, 1]],
    B=[[0, 0], [3, 2], [1, 3]],
    C=[[3, 1, 5]],
    D=[[0, 0]],
    K=[[-1, 0, 0], [0, -1, 0], [0, 0, -1], [0, 0, 0]],
    L=[[0, 1, 0], [5, 4, 0], [2, 0, 1], [3, 1, 5]],
    M=[[0, 0, 0], [0, 3, 2], [0, 1, 3], [-1, 0, 0]],
)
# two 3 x 3 minors of the controllability matrix over Z/6 and their values
PHI_MINORS = (((2, 3, 5), 2), ((2, 4, 5), 3))


def encoder() -> PolyMatrix:
    return PolyMatrix.from_coeffs(Z6, ENCODER)


def component_encoder(j: int) -> PolyMatrix:
    return PolyMatrix.from_coeffs(Z6.component(j), COMPONENTS[j]["G"])


def component_for(j: int) -> FirstOrderRep:
    F, c = Z6.component(j), COMPONENTS[j]
    return FirstOrderRep.from_matrices(*(RMatrix.from_rows(F, c[x]) for x in "KLM"))


def component_system(j: int) -> StateSpaceSystem:
    F, c = Z6.component(j), COMPONENTS[j]
    return StateSpaceSystem(*(RMatrix.from_rows(F, c[x]) for x in "ABCD"))


def glued_system(corrupt_b: bool = False) -> StateSpaceSystem:
    mats = {x: RMatrix.from_rows(Z6, GLUED[x]) for x in "ABCD"}
    if corrupt_b:
        rows = mats["B"].tolist()
        rows[1][0] = (rows[1][0] + 1) % 6
        mats["B"] = RMatrix.from_rows(Z6, rows)
    return StateSpaceSystem(mats["A"], mats["B"], mats["C"], mats["D"])


def glued_for() -> FirstOrderRep:
    return FirstOrderRep.from_matrices(*(RMatrix.from_rows(Z6, GLUED[x]) for x in "KLM"))


@dataclass
class Stage:
    name: str
    mode: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "mode": self.mode, "passed": self.passed, "detail": self.detail}


class _Runner:
    def __init__(self):
        self.stages: list[Stage] = []

    def stage(self, name: str, mode: str, check: Callable[[], tuple[bool, dict]]) -> None:
        ok, detail = check()
        self.stages.append(Stage(name, mode, bool(ok), detail))
        if not ok:
            err = StageMismatch(name, "computed value disagrees with the reference")
            err.stages = [s.as_dict() for s in self.stages]  # type: ignore[attr-defined]
            raise err


def _component_chain(run: _Runner, j: int) -> None:
    F = Z6.component(j)
    label = f"F_{F.modulus}"

    def restriction():
        got = encoder().project(j)
        return got == component_encoder(j), {"encoder": got.to_coeffs()}

    def first_order():
        built = build_for_field(make_code(F, component_encoder(j)).component_encoders[0])
        ref = component_for(j)
        wit = representations_equivalent(built, ref)
        ok = (wit is not None and check_minimality(built).minimal and check_minimality(ref).minimal)
        detail = {"K": built.K.tolist(), "L": built.L.tolist(), "M": built.M.tolist()}
        if wit is not None:
            detail.update(T=wit[0].tolist(), S=wit[1].tolist())
        return ok, detail

    def iso():
        code = make_code(F, component_encoder(j))
        extracted = for_to_iso(component_for(j))
        ok = (codes_equal(code, system_to_code(extracted))
              and codes_equal(code, system_to_code(component_system(j))))
        return ok, {name: X.tolist() for name, X in zip("ABCD", extracted.matrices())} | {
            "permutation": list(extracted.permutation)}

    def reach():
        sys = component_system(j)
        Phi = controllability_matrix(sys)
        ok = Phi.tolist() == RMatrix.from_rows(F, COMPONENTS[j]["Phi"]).tolist() and is_reachable(sys)
        return ok, {"Phi": Phi.tolist(), "rank": min(Phi.component_ranks)}

    run.stage(f"restriction {label}", "exact", restriction)
    run.stage(f"first-order {label}", "equivalence", first_order)
    run.stage(f"state-space {label}", "code", iso)
    run.stage(f"reachability {label}", "exact", reach)


def run(component: int | None = None, *, corrupt_b: bool = False) -> dict:
    """Run every stage and return the report; raises StageMismatch at the first failure.

    ``component`` (0-based) restricts the run to one residue field's chain.
    """
    runner = _Runner()
    if component is not None:
        Z6._check_index(component)
        _component_chain(runner, component)
        F = Z6.component(component)

        def recovery():
            code = make_code(F, component_encoder(component))
            return codes_equal(system_to_code(component_system(component)), code), {}

        def observability():
            code = make_code(F, component_encoder(component))
            got = {"code": is_observable_code(code),
                   "system": is_observable_system(component_system(component)),
                   "gcd": list(minors_gcd(component_encoder(component)).coeffs)}
            # both codes fail observability, so neither reachable system can be observable
            want = {"code": False, "system": False, "gcd": COMPONENTS[component]["gcd"]}
            return got == want, got

        runner.stage(f"encoder recovery F_{F.modulus}", "code", recovery)
        runner.stage(f"observability F_{F.modulus}", "exact", observability)
        return {"field": F.modulus, "stages": [s.as_dict() for s in runner.stages]}

    def minors():
        got = sorted(f.coeffs for f in full_size_minors(encoder()))
        want = sorted(Poly.of(Z6, cs).coeffs for cs in ENCODER_MINORS)
        return got == want, {"minors": [list(c) for c in got]}

    def validation():
        code = make_code(Z6, encoder())
        return (code.n, code.k, code.delta) == (3, 2, 3), {"n": code.n, "k": code.k, "delta": code.delta}

    runner.stage("encoder minors", "set", minors)
    runner.stage("encoder validation", "exact", validation)
    for j in range(Z6.t):
        _component_chain(runner, j)

    def glued():
        sys = glue_systems([component_system(j) for j in range(Z6.t)], Z6)
        ref = glued_system(corrupt_b)
        ok = sys.matrices() == ref.matrices()
        ok = ok and all(project_system(ref, j).matrices() == component_system(j).matrices()
                        for j in range(Z6.t))
        return ok, {name: X.tolist() for name, X in zip("ABCD", sys.matrices())}

    def reach():
        sys = glued_system(corrupt_b)
        Phi = controllability_matrix(sys)
        minors = [det(Phi.submatrix(range(3), cols)) for cols, _ in PHI_MINORS]
        ideal = controllability_ideal(sys)
        ok = (ideal.is_unit_ideal and is_reachable(sys)
              and minors == [v for _, v in PHI_MINORS])
        return ok, {"U_3(Phi)": str(ideal), "minors": minors}

    def canonical():
        rep = iso_to_for(glued_system(corrupt_b))
        ref = glued_for()
        return (rep.K, rep.L, rep.M) == (ref.K, ref.L, ref.M), {
            "K": rep.K.tolist(), "L": rep.L.tolist(), "M": rep.M.tolist()}

    def extraction():
        sys = for_to_iso(glued_for())
        ok = sys.matrices() == glued_system(corrupt_b).matrices() and sys.permutation == (0, 1, 2)
        from_code = for_to_iso(for_code(make_code(Z6, encoder())))
        ok = ok and is_reachable(from_code)
        return ok, {"permutation": list(sys.permutation)}

    def recovery():
        code = make_code(Z6, encoder())
        recovered = system_to_code(glued_system(corrupt_b))
        ok = codes_equal(recovered, code) and all(
            codes_equal(recovered.project(j), make_code(Z6.component(j), component_encoder(j)))
            for j in range(Z6.t))
        return ok, {"encoder": recovered.encoder.to_coeffs()}

    def observability():
        code = make_code(Z6, encoder())
        g = minors_gcd(encoder().project(0))
        got = {"code": is_observable_code(code),
               "system F_2": is_observable_system(component_system(0)),
               "system": is_observable_system(glued_system(corrupt_b)),
               "gcd U_2(G_1)": list(g.coeffs)}
        want = {"code": False, "system F_2": False, "system": False,
                "gcd U_2(G_1)": COMPONENTS[0]["gcd"]}
        return got == want, got

    runner.stage("glued system", "exact", glued)
    runner.stage("reachability", "exact", reach)
    runner.stage("canonical first-order", "exact", canonical)
    runner.stage("extraction", "exact", extraction)
    runner.stage("encoder recovery", "code", recovery)
    runner.stage("observability", "exact", observability)
    return {"field": None, "stages": [s.as_dict() for s in runner.stages]}
