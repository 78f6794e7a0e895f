"""Job descriptors (JSON input) and job results (JSON/text output)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any

import jsonschema

from . import reps
from .errors import UnsupportedCharacterValue, ValidationError
from .gf2ring import DEFAULT_CAP
from .superchar import CharacterVector, decompose
from .swc import FieldCase, RepInput, character_invariants, is_spinorial, ring_for, total_swc, w1, w2, w4_q1

SCHEMA_VERSION = 1

_REP_KINDS = {
    "character_vector": {
        "required": ["values"],
        "properties": {
            "values": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
            "delta": {"enum": [0, 1]},
        },
    },
    "principal_series": {
        "required": ["exponents"],
        "properties": {"exponents": {"type": "array", "items": {"type": "integer"}, "minItems": 1}},
    },
    "cuspidal": {"required": ["theta_minus_one"], "properties": {"theta_minus_one": {"enum": [1, -1]}}},
    "steinberg": {"required": [], "properties": {}},
    "det_twist": {"required": ["j"], "properties": {"j": {"type": "integer"}}},
    "direct_sum": {
        "required": ["parts"],
        "properties": {"parts": {"type": "array", "items": {"$ref": "#/$defs/rep"}, "minItems": 1}},
    },
}


def _rep_variant(kind: str, spec: dict) -> dict:
    return {
        "type": "object",
        "additionalProperties": False,
        "required": ["kind", *spec["required"]],
        "properties": {"kind": {"const": kind}, **spec["properties"]},
    }


DESCRIPTOR_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "group", "n", "rep"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "group": {"enum": ["gl_fq", "gl_r", "gl_c"]},
        "n": {"type": "integer", "minimum": 1},
        "q": {"type": "integer", "minimum": 3},
        "rep": {"$ref": "#/$defs/rep"},
        "max_degree": {"type": "integer", "minimum": 0},
        "allow_virtual": {"type": "boolean"},
    },
    "$defs": {"rep": {"oneOf": [_rep_variant(k, v) for k, v in _REP_KINDS.items()]}},
}


@dataclass(frozen=True)
class JobDescriptor:
    group: str
    n: int
    rep: dict
    q: int | None = None
    max_degree: int = DEFAULT_CAP
    allow_virtual: bool = False
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def from_dict(cls, data: dict) -> JobDescriptor:
        try:
            jsonschema.validate(data, DESCRIPTOR_SCHEMA)
        except jsonschema.ValidationError as exc:
            raise ValidationError(f"descriptor: {exc.message}") from None
        desc = cls(
            group=data["group"],
            n=data["n"],
            rep=data["rep"],
            q=data.get("q"),
            max_degree=data.get("max_degree", DEFAULT_CAP),
            allow_virtual=data.get("allow_virtual", False),
            schema_version=data["schema_version"],
        )
        if desc.group == "gl_fq":
            if desc.q is None:
                raise ValidationError("descriptor: gl_fq needs q")
            reps.validate_q(desc.q)
        elif desc.q is not None:
            raise ValidationError(f"descriptor: q is meaningless for {desc.group}")
        return desc

    @classmethod
    def from_json(cls, text: str) -> JobDescriptor:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"descriptor is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out = {"schema_version": self.schema_version, "group": self.group, "n": self.n}
        if self.q is not None:
            out["q"] = self.q
        out["rep"] = self.rep
        out["max_degree"] = self.max_degree
        out["allow_virtual"] = self.allow_virtual
        return out

    @property
    def field_case(self) -> FieldCase:
        if self.group == "gl_r":
            return FieldCase.REAL
        if self.group == "gl_c":
            return FieldCase.COMPLEX
        return FieldCase.FQ1 if self.q % 4 == 1 else FieldCase.FQ3

    def family(self, rep: dict | None = None):
        """Translate the ``rep`` tagged union into a representation family."""
        rep = self.rep if rep is None else rep
        kind = rep["kind"]
        n, q = self.n, self.q
        if kind == "direct_sum":
            return reps.DirectSum(tuple(self.family(p) for p in rep["parts"]))
        if kind == "character_vector":
            values = rep["values"]
            if len(values) != n + 1:
                raise ValidationError(f"descriptor: need {n + 1} character values, got {len(values)}")
            case = self.field_case
            return reps.Literal(
                RepInput(n, case, CharacterVector(n, tuple(values)), rep.get("delta", 0) if case.finite else 0, q)
            )
        if self.group != "gl_fq":
            raise ValidationError(f"descriptor: {kind} is only available for gl_fq")
        if kind == "principal_series":
            return reps.PrincipalSeries(n, q, tuple(rep["exponents"]))
        if kind == "cuspidal":
            return reps.Cuspidal(n, q, rep["theta_minus_one"])
        if kind == "steinberg":
            return reps.Steinberg(n, q)
        if kind == "det_twist":
            return reps.DetTwist(n, q, rep["j"])
        raise ValidationError(f"descriptor: unknown rep kind {kind!r}")

    def rep_input(self, delta: int | None = None, allow_virtual: bool | None = None, partial: bool = False) -> RepInput:
        virtual = self.allow_virtual if allow_virtual is None else allow_virtual
        inp = reps.to_rep_input(self.family(), allow_virtual=virtual, partial=partial)
        if delta is not None and inp.field_case.finite:
            inp = replace(inp, delta=delta)
        return inp


def load_descriptor(path) -> JobDescriptor:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read descriptor: {exc}") from None
    return JobDescriptor.from_json(text)


def descriptor_for(inp: RepInput, max_degree: int = DEFAULT_CAP) -> dict:
    """Serialise a literal input as a descriptor (used for counterexamples)."""
    group = {FieldCase.REAL: "gl_r", FieldCase.COMPLEX: "gl_c"}.get(inp.field_case, "gl_fq")
    rep = {"kind": "character_vector", "values": list(inp.chars.values)}
    if inp.field_case.finite:
        rep["delta"] = inp.delta
    out = {"schema_version": SCHEMA_VERSION, "group": group, "n": inp.n}
    if inp.q is not None:
        out["q"] = inp.q
    out["rep"] = rep
    out["max_degree"] = max_degree
    out["allow_virtual"] = inp.allow_virtual
    return out


@dataclass
class JobResult:
    ring: list[dict]
    total_class: str | None
    components: dict[str, str]
    multiplicities: list[int] | None
    m_pi: int
    n_pi: int | None
    w1: str
    w2: str
    spinorial: bool
    w4: str | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "ring": self.ring,
            "total_class": self.total_class,
            "components": self.components,
            "multiplicities": self.multiplicities,
            "m_pi": self.m_pi,
            "n_pi": self.n_pi,
            "w1": self.w1,
            "w2": self.w2,
        }
        if self.w4 is not None:
            out["w4"] = self.w4
        out["spinorial"] = self.spinorial
        out["warnings"] = self.warnings
        return out

    @classmethod
    def from_dict(cls, data: dict) -> JobResult:
        return cls(
            ring=data["ring"],
            total_class=data["total_class"],
            components=data["components"],
            multiplicities=data["multiplicities"],
            m_pi=data["m_pi"],
            n_pi=data["n_pi"],
            w1=data["w1"],
            w2=data["w2"],
            spinorial=data["spinorial"],
            w4=data.get("w4"),
            warnings=data["warnings"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = ["ring: " + " ".join(f"{g['name']}({g['degree']})" for g in self.ring)]
        if self.total_class is not None:
            lines.append(f"w = {self.total_class}")
            for d, comp in self.components.items():
                lines.append(f"w{d} = {comp}")
            lines.append("multiplicities: " + " ".join(str(c) for c in self.multiplicities))
        lines.append(f"m_pi = {self.m_pi}")
        if self.n_pi is not None:
            lines.append(f"n_pi = {self.n_pi}")
        lines.append(f"closed form w1 = {self.w1}")
        lines.append(f"closed form w2 = {self.w2}")
        if self.w4 is not None:
            lines.append(f"closed form w4 = {self.w4}")
        lines.append(f"spinorial: {'yes' if self.spinorial else 'no'}")
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines) + "\n"


def run_job(
    desc: JobDescriptor,
    max_degree: int | None = None,
    delta: int | None = None,
    allow_virtual: bool | None = None,
) -> JobResult:
    cap = desc.max_degree if max_degree is None else max_degree
    warnings = []
    try:
        inp = desc.rep_input(delta, allow_virtual)
    except UnsupportedCharacterValue as exc:
        inp = desc.rep_input(delta, allow_virtual, partial=True)
        if inp.field_case is FieldCase.FQ1 and cap >= 4:
            raise UnsupportedCharacterValue(f"{exc}; w4 needs chi(h_2)") from None
        warnings.append(f"total class unavailable: {exc}")
    if delta is not None and not inp.field_case.finite:
        warnings.append("delta ignored outside GL_n(F_q)")

    form_cap = max(cap, 4)
    sig = ring_for(inp, cap)
    invariants = character_invariants(inp.chars)
    ring = [{"name": g.name, "degree": g.degree, "nilpotent": g.nilpotent} for g in sig.generators]

    if inp.chars.complete:
        report = total_swc(inp, cap)
        total = str(report.total)
        components = {str(d): str(c) for d, c in report.components}
        multiplicities = list(report.multiplicities.c)
        spinorial = report.spinorial
        if report.multiplicities.virtual:
            warnings.append("virtual character: negative multiplicities")
    else:
        total, components, multiplicities = None, {}, None
        spinorial = is_spinorial(inp)

    w4 = None
    if inp.field_case is FieldCase.FQ1 and inp.chars.complete:
        w4 = str(w4_q1(inp, form_cap))
    return JobResult(
        ring=ring,
        total_class=total,
        components=components,
        multiplicities=multiplicities,
        m_pi=invariants.m_pi,
        n_pi=invariants.n_pi,
        w1=str(w1(inp, form_cap)),
        w2=str(w2(inp, form_cap)),
        spinorial=spinorial,
        w4=w4,
        warnings=warnings,
    )


def run_decompose(desc: JobDescriptor, allow_virtual: bool | None = None) -> list[int]:
    inp = desc.rep_input(allow_virtual=allow_virtual)
    return list(decompose(inp.chars, allow_virtual=inp.allow_virtual).c)
