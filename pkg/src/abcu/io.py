"""Document serialization: the JSON schema plus CNF and graph readers.

One JSON document format covers all four model kinds behind a ``kind``
tag.  Probabilities travel as strings (either a fraction ``"num/den"``
or a decimal like ``"0.6"``, both parsed exactly) or as the JSON
integers 0 and 1.  Non-integral JSON numbers are rejected: binary
floats cannot represent the decimal the author wrote.  See
``docs/schema.md`` for the full schema and one example per kind.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    Committee,
    InputError,
    Instance,
    committee as make_committee,
    parse_probability,
)
from .reductions import CnfFormula, Graph
from .uncertainty import (
    CandidateProbModel,
    JointModel,
    LotteryModel,
    Model,
    ThreeValuedModel,
    cp_model,
    joint_model,
    lottery_model,
    tva_model,
)

FORMAT = "abcu/1"

KIND_TAGS = {
    JointModel: "joint",
    LotteryModel: "lottery",
    CandidateProbModel: "candidate-probability",
    ThreeValuedModel: "three-valued",
}


@dataclass(frozen=True)
class Document:
    """A parsed input: instance, model, optional committee and query size."""

    instance: Instance
    model: Model
    committee: Committee | None = None
    size: int | None = None


def _fail(path: str, message: str):
    raise InputError(f"{path}: {message}")


def _require(data, key: str, path: str):
    if not isinstance(data, dict):
        _fail(path, f"expected an object, got {type(data).__name__}")
    if key not in data:
        _fail(path, f"missing required key {key!r}")
    return data[key]


def _int(value, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(path, f"expected an integer, got {value!r}")
    return value


def _fraction(value, path: str) -> Fraction:
    if isinstance(value, float):
        _fail(path, f"non-integral number {value!r} is inexact; quote it as a string like \"0.6\"")
    try:
        return parse_probability(value)
    except InputError as exc:
        _fail(path, str(exc))


def _int_list(value, path: str) -> list[int]:
    if not isinstance(value, list):
        _fail(path, f"expected a list, got {value!r}")
    return [_int(x, f"{path}[{j}]") for j, x in enumerate(value)]


def _parse_model(data, inst: Instance) -> Model:
    kind = _require(data, "kind", "model")
    if kind == "joint":
        entries = _require(data, "entries", "model")
        if not isinstance(entries, list):
            _fail("model.entries", "expected a list")
        built = []
        for r, entry in enumerate(entries):
            path = f"model.entries[{r}]"
            lam = _fraction(_require(entry, "prob", path), f"{path}.prob")
            prof = _require(entry, "profile", path)
            if not isinstance(prof, list):
                _fail(f"{path}.profile", "expected a list of approval sets")
            built.append((lam, [_int_list(s, f"{path}.profile[{i}]") for i, s in enumerate(prof)]))
        return joint_model(inst, built)
    if kind == "lottery":
        voters = _require(data, "voters", "model")
        if not isinstance(voters, list):
            _fail("model.voters", "expected a list")
        built = []
        for i, voter in enumerate(voters):
            path = f"model.voters[{i}]"
            if not isinstance(voter, list):
                _fail(path, "expected a list of weighted approval sets")
            built.append([
                (
                    _fraction(_require(entry, "prob", f"{path}[{r}]"), f"{path}[{r}].prob"),
                    _int_list(_require(entry, "set", f"{path}[{r}]"), f"{path}[{r}].set"),
                )
                for r, entry in enumerate(voter)
            ])
        return lottery_model(inst, built)
    if kind in ("candidate-probability", "three-valued"):
        rows = _require(data, "rows", "model")
        if not isinstance(rows, list):
            _fail("model.rows", "expected a list of rows")
        built = []
        for i, row in enumerate(rows):
            if not isinstance(row, list):
                _fail(f"model.rows[{i}]", "expected a list of probabilities")
            built.append([_fraction(p, f"model.rows[{i}][{c}]") for c, p in enumerate(row)])
        maker = cp_model if kind == "candidate-probability" else tva_model
        return maker(inst, built)
    _fail("model.kind", f"unknown kind {kind!r}")


def parse_document(text: str) -> Document:
    """Parse and validate a document; raises :class:`InputError` with a
    path-precise message on any schema or model violation."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("document must be a JSON object")
    fmt = _require(data, "format", "document")
    if fmt != FORMAT:
        _fail("format", f"unsupported format {fmt!r}, expected {FORMAT!r}")
    inst_data = _require(data, "instance", "document")
    inst = Instance(
        _int(_require(inst_data, "voters", "instance"), "instance.voters"),
        _int(_require(inst_data, "candidates", "instance"), "instance.candidates"),
        _int(_require(inst_data, "committee_size", "instance"), "instance.committee_size"),
    )
    model = _parse_model(_require(data, "model", "document"), inst)
    com = None
    if data.get("committee") is not None:
        com = make_committee(_int_list(data["committee"], "committee"), inst)
    size = None
    if data.get("size") is not None:
        size = _int(data["size"], "size")
    return Document(inst, model, com, size)


def _frac_str(f: Fraction) -> str:
    return str(f)


def _model_payload(model: Model) -> dict:
    if isinstance(model, JointModel):
        return {
            "kind": "joint",
            "entries": [
                {"prob": _frac_str(lam), "profile": [list(s) for s in prof]}
                for lam, prof in model.entries
            ],
        }
    if isinstance(model, LotteryModel):
        return {
            "kind": "lottery",
            "voters": [
                [{"prob": _frac_str(lam), "set": list(s)} for lam, s in voter]
                for voter in model.lotteries
            ],
        }
    if isinstance(model, CandidateProbModel):
        return {"kind": "candidate-probability",
                "rows": [[_frac_str(p) for p in row] for row in model.probs]}
    return {"kind": "three-valued",
            "rows": [[_frac_str(p) for p in row] for row in model.entries]}


def emit_document(doc: Document) -> str:
    """Canonical JSON for a document; ``parse_document`` round-trips it."""
    data: dict = {
        "format": FORMAT,
        "instance": {
            "voters": doc.instance.n,
            "candidates": doc.instance.m,
            "committee_size": doc.instance.k,
        },
        "model": _model_payload(doc.model),
    }
    if doc.committee is not None:
        data["committee"] = list(doc.committee)
    if doc.size is not None:
        data["size"] = doc.size
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def document_for(model: Model, committee: Committee | None = None,
                 size: int | None = None) -> Document:
    return Document(model.instance, model, committee, size)


# ---------------------------------------------------------------------------
# CNF and graph inputs


def parse_dimacs(text: str) -> CnfFormula:
    """Read a DIMACS CNF file; every clause must have exactly 3 literals."""
    num_vars = None
    num_clauses = None
    literals: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"bad problem line {line!r}, expected 'p cnf <vars> <clauses>'")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise InputError(f"bad problem line {line!r}") from None
            continue
        for token in line.split():
            try:
                literals.append(int(token))
            except ValueError:
                raise InputError(f"bad literal {token!r}") from None
    if num_vars is None or num_clauses is None:
        raise InputError("missing 'p cnf' problem line")
    clauses: list[tuple[int, int, int]] = []
    current: list[int] = []
    for lit in literals:
        if lit == 0:
            if len(current) != 3:
                raise InputError(f"clause {len(clauses)}: expected exactly 3 literals, got {len(current)}")
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise InputError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise InputError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def parse_edge_list(text: str) -> Graph:
    """Read a graph: first data line is the vertex count, then one
    ``u v`` pair per line (0-based).  ``#`` starts a comment."""
    rows: list[list[int]] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise InputError(f"bad graph line {line!r}") from None
    if not rows or len(rows[0]) != 1:
        raise InputError("first data line must be the vertex count")
    num_vertices = rows[0][0]
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise InputError(f"bad edge line {row!r}, expected two vertex ids")
        u, v = row
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        edges.append((min(u, v), max(u, v)))
    return Graph(num_vertices, tuple(sorted(edges)))
