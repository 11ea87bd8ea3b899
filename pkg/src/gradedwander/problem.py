"""Problem files: a YAML (or JSON) document describing a graded module.

Example::

    variables: [x, y]
    weights: [1, 1]          # optional, defaults to all ones
    object: ideal            # ideal | submodule | quotient
    generators: ["x^2", "x*y", "y^2"]

``submodule`` and ``quotient`` take ``rank`` and optional ``shifts``.  For a
submodule, optional ``relations`` present ``(<G> + <R>) / <R>``.  For a
quotient, ``generators`` lists the submodule ``N`` being divided out of the
free module, so the modeled module is ``F / N``.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import yaml

from .expr import ParseError, format_vector, parse_vector
from .gradedmod import (NOT_HOMOGENEOUS, FreeModuleSpec, ModuleVector,
                        PresentedModule, vector_degree)
from .polycore import Grading, homogeneous_components

OBJECTS = ("ideal", "submodule", "quotient")


class ProblemError(ValueError):
    """Invalid problem input; carries a location such as ``generators[2], line 4, column 7``."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class ProblemFile:
    variables: tuple
    weights: tuple
    object: str
    generators: tuple
    relations: tuple = ()
    rank: int = 1
    shifts: tuple = (0,)
    _lines: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def grading(self) -> Grading:
        return Grading(self.weights)

    @property
    def spec(self) -> FreeModuleSpec:
        return FreeModuleSpec(self.grading, self.shifts)

    def _parse_list(self, key: str, exprs) -> list:
        spec = self.spec
        out = []
        for i, text in enumerate(exprs):
            line = self._lines.get((key, i))
            where = f"{key}[{i}]" + (f", line {line}" if line else "")
            try:
                comps = parse_vector(text, self.variables, self.rank)
            except ParseError as e:
                raise ProblemError(f"{e.message} (column {e.column})", where) from None
            v = ModuleVector(spec, comps)
            if vector_degree(v) == NOT_HOMOGENEOUS:
                raise ProblemError(_inhomogeneity(v, self.variables), where)
            out.append(v)
        return out

    def module(self) -> PresentedModule:
        gens = self._parse_list("generators", self.generators)
        rels = self._parse_list("relations", self.relations)
        if self.object == "quotient":
            return PresentedModule.quotient(self.spec, gens)
        return PresentedModule(self.spec, gens, rels)

    def canonical(self) -> dict:
        """Problem with every expression in canonical printed form."""
        def canon(vs):
            return [format_vector(v.components, self.variables) for v in vs]
        return {
            "variables": list(self.variables),
            "weights": list(self.weights),
            "object": self.object,
            "rank": self.rank,
            "shifts": list(self.shifts),
            "generators": canon(self._parse_list("generators", self.generators)),
            "relations": canon(self._parse_list("relations", self.relations)),
        }

    def digest(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _inhomogeneity(v: ModuleVector, variables) -> str:
    spec = v.spec
    first = {}
    for j, p in enumerate(v.components):
        for d, part in homogeneous_components(p, spec.grading).items():
            first.setdefault(d + spec.shifts[j], (j, part))
    degs = sorted(first)
    j, part = first[degs[-1]]
    return (f"expression is not homogeneous (degrees {degs}); offending part "
            f"'{format_vector([part], variables)}' in component {j + 1} has degree {degs[-1]}")


def _line_map(text: str) -> dict:
    lines = {}
    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return lines
    if not isinstance(root, yaml.MappingNode):
        return lines
    for knode, vnode in root.value:
        if isinstance(vnode, yaml.SequenceNode):
            for i, item in enumerate(vnode.value):
                lines[(knode.value, i)] = item.start_mark.line + 1
    return lines


def load_problem(text: str) -> ProblemFile:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ProblemError(f"cannot read problem file: {e}") from None
    if not isinstance(data, dict):
        raise ProblemError("problem file must be a mapping")
    return problem_from_dict(data, _line_map(text))


def problem_from_dict(data: dict, lines: dict | None = None) -> ProblemFile:
    unknown = set(data) - {"variables", "weights", "object", "generators", "relations", "rank", "shifts"}
    if unknown:
        raise ProblemError(f"unknown keys {sorted(unknown)}")
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise ProblemError("'variables' must be a non-empty list of names", "variables")
    if len(set(variables)) != len(variables):
        raise ProblemError("variable names must be unique", "variables")
    weights = data.get("weights", [1] * len(variables))
    if (not isinstance(weights, list) or len(weights) != len(variables)
            or not all(isinstance(w, int) and not isinstance(w, bool) and w > 0 for w in weights)):
        raise ProblemError("'weights' must list one positive integer per variable", "weights")
    obj = data.get("object", "ideal")
    if obj not in OBJECTS:
        raise ProblemError(f"'object' must be one of {list(OBJECTS)}", "object")
    rank = data.get("rank", 1)
    if obj == "ideal" and rank != 1:
        raise ProblemError("an ideal has rank 1", "rank")
    if not isinstance(rank, int) or rank < 1:
        raise ProblemError("'rank' must be a positive integer", "rank")
    shifts = data.get("shifts", [0] * rank)
    if (not isinstance(shifts, list) or len(shifts) != rank
            or not all(isinstance(s, int) and s >= 0 for s in shifts)):
        raise ProblemError("'shifts' must list one non-negative integer per basis vector", "shifts")
    gens = data.get("generators", [])
    rels = data.get("relations", [])
    if obj == "quotient" and rels:
        raise ProblemError("a quotient lists the submodule to divide out under 'generators'", "relations")
    for key, vals in (("generators", gens), ("relations", rels)):
        if not isinstance(vals, list):
            raise ProblemError(f"'{key}' must be a list of expressions", key)
    return ProblemFile(tuple(variables), tuple(weights), obj,
                       tuple(str(g) for g in gens), tuple(str(r) for r in rels),
                       rank, tuple(shifts), lines or {})
