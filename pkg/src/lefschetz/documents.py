"""Session settings and JSON ideal documents.

A document is one JSON object::

    {"config": {"n": 3, "field": "q", "seed": 0, "trials": 3},
     "kind": "thm12",
     "payload": {"d": [1, 1, 1], "a": "2"}}

Payload keys by kind:

* ``explicit``: ``generators`` (polynomial strings)
* ``thm12``: ``d`` and ``a`` (a coefficient string)
* ``thm32J``: ``d``
* ``matrix``: ``A`` (row-major coefficient strings) and optional ``d``
* ``monomialCI``: ``exponents``
* ``general-products``: ``count``, ``factors`` (``squares`` or
  ``distinct-pairs``), optional ``seed`` and ``bound``

``config.n`` may be omitted whenever the payload determines it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .constructions import (
    MatrixIdealSpec,
    general_products_ideal,
    matrix_ideal,
    monomial_ci,
    paper_monomial_J,
    thm12_ideal,
)
from .field import Field
from .lefschetz import DEFAULT_TRIALS
from .parser import ParseError, parse_coefficient, parse_polynomial
from .polynomial import Polynomial

KINDS = ("explicit", "thm12", "thm32J", "matrix", "monomialCI", "general-products")


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class SessionConfig:
    n: int
    field: str = "q"
    order: str = "lex"
    seed: int = 0
    trials: int = DEFAULT_TRIALS

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DocumentError(f"n must be at least 1, got {self.n}")
        try:
            Field.parse(self.field)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        if self.order != "lex":
            raise DocumentError(f"only the lex order is supported, got {self.order!r}")
        if self.trials < 1:
            raise DocumentError("trials must be at least 1")

    @property
    def coefficient_field(self) -> Field:
        return Field.parse(self.field)


def _int_list(value, name: str) -> list[int]:
    if isinstance(value, str):
        value = [v for v in value.split(",") if v.strip()]
    try:
        out = [int(v) for v in value]
    except (TypeError, ValueError):
        raise DocumentError(f"{name} must be a list of integers") from None
    if not out or any(v < 1 for v in out):
        raise DocumentError(f"{name} must be a non-empty list of positive integers")
    return out


def parse_matrix(rows, field: Field = Field()) -> list[list]:
    """Matrix from nested lists of coefficient strings/numbers, or from text like ``"1,-1; 2,1"``."""
    if isinstance(rows, str):
        rows = [r.split(",") for r in rows.split(";") if r.strip()]
    try:
        A = [[parse_coefficient(str(x).strip(), field) for x in row] for row in rows]
    except ParseError as exc:
        raise DocumentError(f"bad matrix entry: {exc}") from None
    if not A or any(len(row) != len(A) for row in A):
        raise DocumentError("the matrix must be square and non-empty")
    return A


def _payload_n(kind: str, payload: dict) -> int | None:
    if kind in ("thm12", "thm32J") and "d" in payload:
        return len(_int_list(payload["d"], "d"))
    if kind == "matrix" and "A" in payload:
        return len(payload["A"]) if not isinstance(payload["A"], str) else len(parse_matrix(payload["A"]))
    if kind == "monomialCI" and "exponents" in payload:
        return len(_int_list(payload["exponents"], "exponents"))
    return None


@dataclass(frozen=True)
class IdealDocument:
    config: SessionConfig
    kind: str
    payload: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DocumentError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")

    @classmethod
    def from_dict(cls, data: dict) -> IdealDocument:
        if not isinstance(data, dict):
            raise DocumentError("a document must be a JSON object")
        kind = data.get("kind")
        payload = data.get("payload", {})
        if not isinstance(payload, dict):
            raise DocumentError("payload must be an object")
        conf = dict(data.get("config", {}))
        if kind not in KINDS:
            raise DocumentError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
        implied = _payload_n(kind, payload)
        if "n" not in conf:
            if implied is None:
                raise DocumentError("config.n is required for this kind")
            conf["n"] = implied
        elif implied is not None and implied != conf["n"]:
            raise DocumentError(f"config.n = {conf['n']} but the payload has {implied} variables")
        unknown = set(conf) - {"n", "field", "order", "seed", "trials"}
        if unknown:
            raise DocumentError(f"unknown config keys: {', '.join(sorted(unknown))}")
        try:
            config = SessionConfig(**conf)
        except TypeError as exc:
            raise DocumentError(str(exc)) from None
        return cls(config, kind, payload)

    @classmethod
    def from_json(cls, text: str) -> IdealDocument:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str | Path) -> IdealDocument:
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def to_dict(self) -> dict:
        return {"config": asdict(self.config), "kind": self.kind, "payload": self.payload}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def _require(self, *keys: str) -> None:
        missing = [k for k in keys if k not in self.payload]
        if missing:
            raise DocumentError(f"{self.kind} payload needs {', '.join(missing)}")

    def generators(self) -> list[Polynomial]:
        """Build the ideal's generators."""
        p, n, fld = self.payload, self.config.n, self.config.coefficient_field
        try:
            if self.kind == "explicit":
                self._require("generators")
                gens = [parse_polynomial(g, n, fld) for g in p["generators"]]
                if not gens:
                    raise DocumentError("explicit payload has no generators")
                return gens
            if self.kind == "thm12":
                self._require("d", "a")
                return thm12_ideal(_int_list(p["d"], "d"), parse_coefficient(str(p["a"]), fld))
            if self.kind == "thm32J":
                self._require("d")
                return paper_monomial_J(_int_list(p["d"], "d")).polynomials()
            if self.kind == "matrix":
                self._require("A")
                A = parse_matrix(p["A"], fld)
                d = _int_list(p["d"], "d") if p.get("d") else None
                return matrix_ideal(MatrixIdealSpec(tuple(map(tuple, A)), tuple(d or ())))
            if self.kind == "monomialCI":
                self._require("exponents")
                return monomial_ci(_int_list(p["exponents"], "exponents"))
            self._require("count")
            return general_products_ideal(
                n,
                int(p["count"]),
                p.get("factors", "squares"),
                seed=int(p.get("seed", self.config.seed)),
                bound=int(p.get("bound", 10)),
            )
        except ParseError as exc:
            raise DocumentError(f"cannot parse: {exc}") from None
        except DocumentError:
            raise
        except (ValueError, TypeError) as exc:
            raise DocumentError(str(exc)) from None
