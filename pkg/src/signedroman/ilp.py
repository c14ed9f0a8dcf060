"""Solver-neutral ILP models for SRDP/STRDP, text emission, and checks.

Two formulations are built for each problem kind, differing in what the
binary pair (x_i, y_i) means for the vertex value f(i):

* ``rr``:  x_i = [f(i) >= 1], y_i = [f(i) = 2];  objective sum(2x + y) - n
* ``bvv``: x_i = [f(i) = 1],  y_i = [f(i) = 2];  objective sum(2x + 3y) - n

Constraint families are numbered 9/10/11/14 (rr) and 17/18/19/22 (bvv);
every model has exactly n constraints of each of three families.  The
per-vertex constant terms are folded into right-hand sides, and the
objective constant -n is kept on the model and added back when objective
values are reported, because the LP/MPS text formats cannot carry it.

Models can be emitted as LP or fixed-form MPS text and parsed back; both
emissions are deterministic (byte-identical for equal models).  The
module also hosts the relaxation mapping between the two formulations and
enumeration helpers used to verify model optima without an external
solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .domination import VALUES, ProblemKind
from .graphs import Graph

FEAS_TOL = 1e-9

FORMULATIONS = ("rr", "bvv")


class VarKind(Enum):
    BINARY = "binary"
    UNIT_CONTINUOUS = "continuous-[0,1]"


@dataclass(frozen=True)
class Variable:
    name: str
    kind: VarKind


@dataclass(frozen=True)
class Constraint:
    """Linear constraint: sum of coeff * var  (sense)  rhs.

    ``coeffs`` pairs (variable index, integer coefficient), sorted by
    index, zero coefficients omitted.  ``sense`` is ``>=`` or ``<=``.
    """

    name: str
    coeffs: tuple[tuple[int, int], ...]
    sense: str
    rhs: int


@dataclass(frozen=True)
class IlpModel:
    """Variables x_0..x_{n-1}, y_0..y_{n-1}; variable index of y_i is n+i."""

    n: int
    formulation: str
    kind: ProblemKind
    variables: tuple[Variable, ...]
    objective: tuple[int, ...]
    objective_constant: int
    constraints: tuple[Constraint, ...]

    def variable_names(self) -> list[str]:
        return [v.name for v in self.variables]


def _make_variables(n: int) -> tuple[Variable, ...]:
    names = [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)]
    return tuple(Variable(name, VarKind.BINARY) for name in names)


def _sum_family(g: Graph, kind: ProblemKind, i: int) -> list[int]:
    members = list(g.adjacency[i])
    if kind.uses_closed_neighborhood:
        members.append(i)
    return sorted(members)


def build_rr(g: Graph, kind: ProblemKind) -> IlpModel:
    """The x>=y formulation: minimize sum(2x_i + y_i) - n subject to

    * family 9:  x_i - y_i >= 0                      (excludes (0,1))
    * family 10: x_i + sum_{j in N(i)} y_j >= 1      (guard condition)
    * family 11 (STRDP) / 14 (SRDP): sum over the neighborhood of
      (2x_j + y_j) >= 1 + |neighborhood|
    """
    n = g.n
    constraints = []
    for i in range(n):
        constraints.append(Constraint(f"c9{i}", ((i, 1), (n + i, -1)), ">=", 0))
    for i in range(n):
        coeffs = [(i, 1)] + [(n + j, 1) for j in sorted(g.adjacency[i])]
        constraints.append(Constraint(f"c10{i}", tuple(sorted(coeffs)), ">=", 1))
    family = 14 if kind.uses_closed_neighborhood else 11
    for i in range(n):
        members = _sum_family(g, kind, i)
        coeffs = [(j, 2) for j in members] + [(n + j, 1) for j in members]
        constraints.append(
            Constraint(f"c{family}{i}", tuple(sorted(coeffs)), ">=", 1 + len(members))
        )
    objective = tuple([2] * n + [1] * n)
    return IlpModel(n, "rr", kind, _make_variables(n), objective, -n, tuple(constraints))


def build_bvv(g: Graph, kind: ProblemKind) -> IlpModel:
    """The x+y<=1 formulation: minimize sum(2x_i + 3y_i) - n subject to

    * family 17: x_i + y_i <= 1                            (excludes (1,1))
    * family 18: x_i + y_i + sum_{j in N(i)} y_j >= 1      (guard condition)
    * family 19 (STRDP) / 22 (SRDP): sum over the neighborhood of
      (2x_j + 3y_j) >= 1 + |neighborhood|
    """
    n = g.n
    constraints = []
    for i in range(n):
        constraints.append(Constraint(f"c17{i}", ((i, 1), (n + i, 1)), "<=", 1))
    for i in range(n):
        coeffs = [(i, 1), (n + i, 1)] + [(n + j, 1) for j in sorted(g.adjacency[i])]
        constraints.append(Constraint(f"c18{i}", tuple(sorted(coeffs)), ">=", 1))
    family = 22 if kind.uses_closed_neighborhood else 19
    for i in range(n):
        members = _sum_family(g, kind, i)
        coeffs = [(j, 2) for j in members] + [(n + j, 3) for j in members]
        constraints.append(
            Constraint(f"c{family}{i}", tuple(sorted(coeffs)), ">=", 1 + len(members))
        )
    objective = tuple([2] * n + [3] * n)
    return IlpModel(n, "bvv", kind, _make_variables(n), objective, -n, tuple(constraints))


def build_model(g: Graph, kind: ProblemKind, formulation: str) -> IlpModel:
    if formulation == "rr":
        return build_rr(g, kind)
    if formulation == "bvv":
        return build_bvv(g, kind)
    raise ValueError(f"unknown formulation {formulation!r}")


_RR_ENCODE = {-1: (0, 0), 1: (1, 0), 2: (1, 1)}
_BVV_ENCODE = {-1: (0, 0), 1: (1, 0), 2: (0, 1)}


def encode_assignment(z, formulation: str) -> tuple[list[int], list[int]]:
    """Map an assignment to the formulation's binary (x, y) vectors."""
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}")
    table = _RR_ENCODE if formulation == "rr" else _BVV_ENCODE
    x, y = [], []
    for v in z:
        if v not in VALUES:
            raise ValueError(f"assignment value {v!r} not in {VALUES}")
        xi, yi = table[v]
        x.append(xi)
        y.append(yi)
    return x, y


def decode_point(x, y, formulation: str) -> list[int]:
    """Inverse of :func:`encode_assignment`; rejects the formulation's
    excluded pair ((0,1) for rr, (1,1) for bvv) and non-binary inputs."""
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}")
    if len(x) != len(y):
        raise ValueError("x and y lengths differ")
    table = _RR_ENCODE if formulation == "rr" else _BVV_ENCODE
    inverse = {pair: value for value, pair in table.items()}
    z = []
    for i, (xi, yi) in enumerate(zip(x, y)):
        xi, yi = _as_bit(xi, f"x{i}"), _as_bit(yi, f"y{i}")
        try:
            z.append(inverse[(xi, yi)])
        except KeyError:
            raise ValueError(
                f"pair (x{i}, y{i}) = ({xi}, {yi}) is excluded by the "
                f"{formulation} formulation"
            ) from None
    return z


def _as_bit(value, name: str) -> int:
    if abs(value - round(value)) > FEAS_TOL or round(value) not in (0, 1):
        raise ValueError(f"{name} = {value!r} is not binary")
    return int(round(value))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    violations: tuple[tuple[str, float], ...]
    objective: float


def check_point(model: IlpModel, x, y, integral: bool) -> CheckResult:
    """Evaluate a point against every constraint plus the [0,1] variable
    bounds (and integrality when requested); tolerance 1e-9 throughout.

    The reported objective includes the model's folded constant, so for
    encodings of assignments it equals the assignment weight.
    """
    n = model.n
    if len(x) != n or len(y) != n:
        raise ValueError(f"point dimension ({len(x)}, {len(y)}) != ({n}, {n})")
    values = list(x) + list(y)
    names = model.variable_names()
    violations: list[tuple[str, float]] = []
    for name, v in zip(names, values):
        if v < -FEAS_TOL:
            violations.append((f"{name} >= 0", float(-v)))
        if v > 1 + FEAS_TOL:
            violations.append((f"{name} <= 1", float(v - 1)))
        if integral:
            gap = abs(v - round(v))
            if gap > FEAS_TOL:
                violations.append((f"{name} integral", float(gap)))
    for con in model.constraints:
        lhs = sum(coeff * values[idx] for idx, coeff in con.coeffs)
        if con.sense == ">=":
            gap = con.rhs - lhs
        else:
            gap = lhs - con.rhs
        if gap > FEAS_TOL:
            violations.append((con.name, float(gap)))
    objective = sum(c * v for c, v in zip(model.objective, values))
    objective += model.objective_constant
    return CheckResult(not violations, tuple(violations), float(objective))


# ---------------------------------------------------------------------------
# LP relaxation mapping between the two formulations


@dataclass(frozen=True)
class RelaxedPoint:
    """Continuous point of a formulation's LP relaxation."""

    x: tuple[float, ...]
    y: tuple[float, ...]
    formulation: str

    def __post_init__(self):
        if self.formulation not in FORMULATIONS:
            raise ValueError(f"unknown formulation {self.formulation!r}")
        if len(self.x) != len(self.y):
            raise ValueError("x and y lengths differ")
        for v in (*self.x, *self.y):
            if v < -FEAS_TOL or v > 1 + FEAS_TOL:
                raise ValueError(f"coordinate {v!r} outside [0, 1]")


def _require_relaxed_feasible(point: RelaxedPoint, model: IlpModel, direction: str):
    if model.formulation != point.formulation:
        raise ValueError(
            f"point is tagged {point.formulation!r} but the model is "
            f"{model.formulation!r}"
        )
    report = check_point(model, point.x, point.y, integral=False)
    if not report.ok:
        name, amount = report.violations[0]
        raise ValueError(
            f"{direction}: input infeasible for the relaxed {model.formulation} "
            f"model ({name} violated by {amount:.3g})"
        )


def map_bvv_to_rr(point: RelaxedPoint, bvv_model: IlpModel) -> RelaxedPoint:
    """Substitution x'' = x' + y', y'' = y'; preserves the objective value
    and maps relaxed-bvv-feasible points onto relaxed-rr-feasible ones."""
    if point.formulation != "bvv":
        raise ValueError("map_bvv_to_rr expects a bvv-tagged point")
    _require_relaxed_feasible(point, bvv_model, "map_bvv_to_rr")
    x2 = tuple(xi + yi for xi, yi in zip(point.x, point.y))
    return RelaxedPoint(x2, point.y, "rr")


def map_rr_to_bvv(point: RelaxedPoint, rr_model: IlpModel) -> RelaxedPoint:
    """Reverse substitution x' = x'' - y'', y' = y''."""
    if point.formulation != "rr":
        raise ValueError("map_rr_to_bvv expects an rr-tagged point")
    _require_relaxed_feasible(point, rr_model, "map_rr_to_bvv")
    x2 = tuple(xi - yi for xi, yi in zip(point.x, point.y))
    return RelaxedPoint(x2, point.y, "bvv")


def relaxed_objective(model: IlpModel, point: RelaxedPoint) -> float:
    values = list(point.x) + list(point.y)
    return sum(c * v for c, v in zip(model.objective, values)) + model.objective_constant


# ---------------------------------------------------------------------------
# Enumeration helpers (self-verification without an external solver)


def _constraint_arrays(model: IlpModel):
    rows = len(model.constraints)
    a = np.zeros((rows, 2 * model.n), dtype=np.int16)
    rhs = np.zeros(rows, dtype=np.int16)
    ge = np.zeros(rows, dtype=bool)
    for r, con in enumerate(model.constraints):
        for idx, coeff in con.coeffs:
            a[r, idx] = coeff
        rhs[r] = con.rhs
        ge[r] = con.sense == ">="
    return a, rhs, ge


def _feasible_mask(points: np.ndarray, a, rhs, ge) -> np.ndarray:
    lhs = points @ a.T
    ok_ge = (lhs >= rhs) | ~ge
    ok_le = (lhs <= rhs) | ge
    return (ok_ge & ok_le).all(axis=1)


def enumerate_encoded_optimum(model: IlpModel) -> int | None:
    """Minimum model objective over the encodings of all 3^n assignments.

    Feasible binary points and encoded assignments coincide (the exclusion
    family removes exactly the non-encodable pairs), so this equals the
    model optimum.  Returns None when no encoding is feasible.
    """
    n = model.n
    a, rhs, ge = _constraint_arrays(model)
    obj = np.array(model.objective, dtype=np.int32)
    best: int | None = None
    total = 3**n
    chunk = 3**9
    value_table = np.array([-1, 1, 2], dtype=np.int16)
    powers = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        codes = np.arange(start, stop, dtype=np.int64)
        z = value_table[(codes[:, None] // powers[None, :]) % 3]
        if model.formulation == "rr":
            x = (z >= 1).astype(np.int16)
        else:
            x = (z == 1).astype(np.int16)
        y = (z == 2).astype(np.int16)
        points = np.concatenate([x, y], axis=1)
        mask = _feasible_mask(points, a, rhs, ge)
        if not mask.any():
            continue
        objective = points.astype(np.int32) @ obj
        w = int(objective[mask].min())
        if best is None or w < best:
            best = w
    return None if best is None else best + model.objective_constant


def enumerate_binary_optimum(model: IlpModel, max_n: int = 8) -> int | None:
    """Minimum model objective over all 2^(2n) binary points."""
    n = model.n
    if n > max_n:
        raise ValueError(f"binary enumeration capped at n={max_n}, got {n}")
    a, rhs, ge = _constraint_arrays(model)
    obj = np.array(model.objective, dtype=np.int32)
    codes = np.arange(4**n, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(2 * n)) & 1).astype(np.int16)
    mask = _feasible_mask(bits, a, rhs, ge)
    if not mask.any():
        return None
    objective = bits.astype(np.int32) @ obj
    return int(objective[mask].min()) + model.objective_constant


# ---------------------------------------------------------------------------
# LP text format


def _format_terms(coeffs: list[tuple[int, str]]) -> list[str]:
    """Render (coefficient, name) terms as LP tokens, '+'/'-' separated."""
    tokens: list[str] = []
    for k, (coeff, name) in enumerate(coeffs):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = name if mag == 1 else f"{mag} {name}"
        if k == 0:
            tokens.append(body if coeff > 0 else f"- {body}")
        else:
            tokens.append(f"{sign} {body}")
    return tokens


def _wrap(tokens: list[str], first_prefix: str, cont_prefix: str = "   ") -> list[str]:
    lines = []
    current = first_prefix
    for tok in tokens:
        candidate = f"{current} {tok}" if current.strip() else current + tok
        if len(candidate) > 240 and current.strip() != first_prefix.strip():
            lines.append(current)
            current = f"{cont_prefix}{tok}"
        else:
            current = candidate
    lines.append(current)
    return lines


def emit_lp(model: IlpModel) -> str:
    """Industry-standard LP text with Minimize / Subject To / Bounds /
    Binary / End sections; metadata the format cannot express (problem
    kind, formulation, folded objective constant) rides in comments."""
    names = model.variable_names()
    out: list[str] = []
    out.append(f"\\ problem: {model.kind.value}")
    out.append(f"\\ formulation: {model.formulation}")
    out.append(f"\\ objective-constant: {model.objective_constant}")
    out.append("Minimize")
    obj_terms = [
        (coeff, names[i]) for i, coeff in enumerate(model.objective) if coeff != 0
    ]
    out.extend(_wrap(_format_terms(obj_terms), " obj:"))
    out.append("Subject To")
    for con in model.constraints:
        if con.coeffs:
            tokens = _format_terms([(coeff, names[idx]) for idx, coeff in con.coeffs])
        else:
            # LP syntax needs at least one term; a zero coefficient keeps
            # the row empty in substance (parsers drop zero coefficients)
            tokens = [f"0 {names[0]}"]
        tokens.append(con.sense)
        tokens.append(str(con.rhs))
        out.extend(_wrap(tokens, f" {con.name}:"))
    out.append("Bounds")
    for name in names:
        out.append(f" 0 <= {name} <= 1")
    binaries = [v.name for v in model.variables if v.kind is VarKind.BINARY]
    if binaries:
        out.append("Binary")
        out.extend(_wrap(binaries, " "))
    out.append("End")
    return "\n".join(out) + "\n"


def _parse_metadata(text: str, comment_char: str) -> dict[str, str]:
    meta = {}
    for raw in text.split("\n"):
        line = raw.strip()
        if not line.startswith(comment_char):
            continue
        body = line.lstrip(comment_char).strip()
        if ":" in body:
            key, _, value = body.partition(":")
            meta[key.strip()] = value.strip()
    return meta


def _model_from_parts(
    meta: dict[str, str],
    var_names: list[str],
    binary_names: set[str],
    constraints: list[Constraint],
    objective_sparse: dict[int, int],
) -> IlpModel:
    for key in ("problem", "formulation", "objective-constant"):
        if key not in meta:
            raise ValueError(f"missing metadata comment {key!r}")
    if len(var_names) % 2 != 0:
        raise ValueError(f"expected an even variable count, got {len(var_names)}")
    n = len(var_names) // 2
    expected = [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)]
    if var_names != expected:
        raise ValueError("variables are not x0..x{n-1}, y0..y{n-1} in order")
    variables = tuple(
        Variable(name, VarKind.BINARY if name in binary_names else VarKind.UNIT_CONTINUOUS)
        for name in var_names
    )
    objective = tuple(objective_sparse.get(i, 0) for i in range(2 * n))
    return IlpModel(
        n=n,
        formulation=meta["formulation"],
        kind=ProblemKind(meta["problem"]),
        variables=variables,
        objective=objective,
        objective_constant=int(meta["objective-constant"]),
        constraints=tuple(constraints),
    )


def _parse_linear_tokens(tokens: list[str], name_to_index: dict[str, int]):
    """Parse tokens like ['2', 'x0', '+', 'y1', '-', '3', 'y0'] into a
    sparse {index: coeff} map; zero coefficients are dropped."""
    coeffs: dict[int, int] = {}
    sign = 1
    pending: int | None = None
    for tok in tokens:
        if tok == "+":
            sign, pending = 1, None
        elif tok == "-":
            sign, pending = -1, None
        elif tok in name_to_index:
            coeff = sign * (1 if pending is None else pending)
            idx = name_to_index[tok]
            coeffs[idx] = coeffs.get(idx, 0) + coeff
            sign, pending = 1, None
        else:
            pending = int(tok)
    return {idx: c for idx, c in coeffs.items() if c != 0}


def parse_lp(text: str) -> IlpModel:
    """Parse LP text produced by :func:`emit_lp` back into a model.

    The parser covers the emitted dialect: named objective and
    constraints, integer coefficients, Bounds and Binary sections, and
    the metadata header comments (which are required).
    """
    meta = _parse_metadata(text, "\\")
    section = None
    obj_tokens: list[str] = []
    constraint_chunks: list[tuple[str, list[str]]] = []
    bound_names: list[str] = []
    binary_names: set[str] = set()
    for raw in text.split("\n"):
        line = raw.split("\\")[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        lowered = stripped.lower()
        if lowered in ("minimize", "subject to", "bounds", "binary", "end"):
            section = lowered
            continue
        if section == "minimize":
            obj_tokens.extend(stripped.split())
        elif section == "subject to":
            tokens = stripped.split()
            if tokens and tokens[0].endswith(":"):
                constraint_chunks.append((tokens[0][:-1], tokens[1:]))
            elif constraint_chunks:
                constraint_chunks[-1][1].extend(tokens)
            else:
                raise ValueError(f"constraint tokens before any label: {stripped!r}")
        elif section == "bounds":
            tokens = stripped.split()
            if len(tokens) != 5 or tokens[1] != "<=" or tokens[3] != "<=":
                raise ValueError(f"unsupported bound line {stripped!r}")
            bound_names.append(tokens[2])
        elif section == "binary":
            binary_names.update(stripped.split())
        elif section is None:
            raise ValueError(f"content before any section: {stripped!r}")
    name_to_index = {name: i for i, name in enumerate(bound_names)}
    if obj_tokens and obj_tokens[0].endswith(":"):
        obj_tokens = obj_tokens[1:]
    objective_sparse = _parse_linear_tokens(obj_tokens, name_to_index)
    constraints = []
    for name, tokens in constraint_chunks:
        sense_pos = next(
            (k for k, tok in enumerate(tokens) if tok in (">=", "<=")), None
        )
        if sense_pos is None or sense_pos != len(tokens) - 2:
            raise ValueError(f"constraint {name!r} has no trailing sense/rhs")
        sparse = _parse_linear_tokens(tokens[:sense_pos], name_to_index)
        constraints.append(
            Constraint(
                name,
                tuple(sorted(sparse.items())),
                tokens[sense_pos],
                int(tokens[sense_pos + 1]),
            )
        )
    return _model_from_parts(meta, bound_names, binary_names, constraints, objective_sparse)


# ---------------------------------------------------------------------------
# MPS text format (fixed form)


def _mps_pairs_lines(entries: list[tuple[str, str, int]]) -> list[str]:
    """Classic two-entries-per-line COLUMNS/RHS layout at the fixed-form
    field positions (5-12, 15-22, 25-36, 40-47, 50-61)."""
    lines = []
    for k in range(0, len(entries), 2):
        col, row, val = entries[k]
        line = f"    {col:<8}  {row:<8}  {val:>12}"
        if k + 1 < len(entries):
            col2, row2, val2 = entries[k + 1]
            if col2 != col:
                lines.append(line)
                lines.append(f"    {col2:<8}  {row2:<8}  {val2:>12}")
                continue
            line += f"   {row2:<8}  {val2:>12}"
        lines.append(line)
    return lines


def emit_mps(model: IlpModel) -> str:
    """Fixed-form MPS with INTORG/INTEND markers for binary variables.

    Zero right-hand sides are omitted (the format's default) and every
    variable carries an explicit UP bound of 1.
    """
    names = model.variable_names()
    out: list[str] = []
    out.append(f"* problem: {model.kind.value}")
    out.append(f"* formulation: {model.formulation}")
    out.append(f"* objective-constant: {model.objective_constant}")
    out.append(f"NAME          {model.formulation}_{model.kind.value}_{model.n}")
    out.append("ROWS")
    out.append(" N  obj")
    for con in model.constraints:
        sense = "G" if con.sense == ">=" else "L"
        out.append(f" {sense}  {con.name}")
    out.append("COLUMNS")
    per_var: dict[int, list[tuple[str, int]]] = {i: [] for i in range(2 * model.n)}
    for i, coeff in enumerate(model.objective):
        if coeff != 0:
            per_var[i].append(("obj", coeff))
    for con in model.constraints:
        for idx, coeff in con.coeffs:
            per_var[idx].append((con.name, coeff))
    integral_indices = {
        i for i, v in enumerate(model.variables) if v.kind is VarKind.BINARY
    }
    marker_open = "    MARKER                 'MARKER'                 'INTORG'"
    marker_close = "    MARKER                 'MARKER'                 'INTEND'"
    in_integer = False
    for i in range(2 * model.n):
        wants_integer = i in integral_indices
        if wants_integer and not in_integer:
            out.append(marker_open)
            in_integer = True
        if not wants_integer and in_integer:
            out.append(marker_close)
            in_integer = False
        entries = [(names[i], row, val) for row, val in per_var[i]]
        out.extend(_mps_pairs_lines(entries))
    if in_integer:
        out.append(marker_close)
    out.append("RHS")
    rhs_entries = [
        ("RHS", con.name, con.rhs) for con in model.constraints if con.rhs != 0
    ]
    out.extend(_mps_pairs_lines(rhs_entries))
    out.append("BOUNDS")
    for name in names:
        out.append(f" UP BND       {name:<8}  {1:>12}")
    out.append("ENDATA")
    return "\n".join(out) + "\n"


def parse_mps(text: str) -> IlpModel:
    """Parse MPS text produced by :func:`emit_mps` back into a model."""
    meta = _parse_metadata(text, "*")
    section = None
    row_order: list[str] = []
    row_sense: dict[str, str] = {}
    col_order: list[str] = []
    col_entries: dict[str, list[tuple[str, int]]] = {}
    binary_names: set[str] = set()
    rhs_map: dict[str, int] = {}
    in_integer = False
    for raw in text.split("\n"):
        if not raw.strip() or raw.lstrip().startswith("*"):
            continue
        head = raw.split()[0]
        if head in ("NAME", "ROWS", "COLUMNS", "RHS", "BOUNDS", "RANGES", "ENDATA") and not raw.startswith(" "):
            section = head
            continue
        tokens = raw.split()
        if section == "ROWS":
            sense, name = tokens
            if sense == "N":
                continue
            if sense not in ("G", "L"):
                raise ValueError(f"unsupported row sense {sense!r}")
            row_order.append(name)
            row_sense[name] = ">=" if sense == "G" else "<="
        elif section == "COLUMNS":
            if len(tokens) >= 3 and tokens[1] == "'MARKER'":
                in_integer = tokens[2] == "'INTORG'"
                continue
            col = tokens[0]
            if col not in col_entries:
                col_entries[col] = []
                col_order.append(col)
                if in_integer:
                    binary_names.add(col)
            for k in range(1, len(tokens), 2):
                col_entries[col].append((tokens[k], int(tokens[k + 1])))
        elif section == "RHS":
            for k in range(1, len(tokens), 2):
                rhs_map[tokens[k]] = int(tokens[k + 1])
        elif section == "BOUNDS":
            if tokens[0] != "UP" or int(tokens[3]) != 1:
                raise ValueError(f"unsupported bound line {raw.strip()!r}")
    name_to_index = {name: i for i, name in enumerate(col_order)}
    objective_sparse: dict[int, int] = {}
    per_row: dict[str, dict[int, int]] = {name: {} for name in row_order}
    for col, entries in col_entries.items():
        idx = name_to_index[col]
        for row, val in entries:
            if row == "obj":
                objective_sparse[idx] = val
            else:
                per_row[row][idx] = val
    constraints = [
        Constraint(
            name,
            tuple(sorted((i, c) for i, c in per_row[name].items() if c != 0)),
            row_sense[name],
            rhs_map.get(name, 0),
        )
        for name in row_order
    ]
    return _model_from_parts(meta, col_order, binary_names, constraints, objective_sparse)
