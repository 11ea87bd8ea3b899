"""Serializable command reports."""
from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction


def jsonable(obj):
    """Convert results to plain JSON types; Fractions become strings, dict keys strings."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Report:
    command: str
    options: dict
    input_hash: str
    results: dict
    certification: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def payload(self) -> dict:
        """Everything except timing; this is what :meth:`payload_hash` covers."""
        d = jsonable(asdict(self))
        d.pop("timing")
        return d

    def payload_hash(self) -> str:
        blob = json.dumps(self.payload(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_json(self) -> str:
        return json.dumps(jsonable(asdict(self)), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"input: {self.input_hash[:16]}"]
        for key, value in jsonable(self.results).items():
            lines.append(f"{key}: {_inline(value)}")
        for key, value in jsonable(self.certification).items():
            lines.append(f"{key}: {_inline(value)}")
        return "\n".join(lines) + "\n"


def _inline(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(", ", ": "))
