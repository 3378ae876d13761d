from __future__ import annotations
import os
from fractions import Fraction
from typing import Any, Mapping, Tuple

from pydantic import BaseModel, ValidationError, field_validator

from .errors import ConfigError
from .registry import DEFAULT_REGISTRY

FORMATS = ("table", "json", "html")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"{text!r} is not a rational number") from None


class RunConfig(BaseModel):
    command: str = ""
    inputs: Tuple[str, ...] = ()
    pd_cutoff: int = 40
    h4_cutoff: int = 8
    horizon: int = 10
    closure_cutoff: int = 200           # classes kept by an orbit closure
    lambdas: Tuple[str, ...] = ("0", "1", "2")
    n_max: int = 2
    search_bound: int = 3               # coefficient bound for eta witnesses
    l_max: int = 12
    registry_path: str = DEFAULT_REGISTRY
    output_format: str = "table"
    field: int = 0                      # 0 for Q, else the prime p of GF(p)
    m: int = 2
    p: str = "2"
    q: str = "3"

    @field_validator("pd_cutoff", "h4_cutoff", "horizon", "closure_cutoff", "search_bound", "l_max", "m")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be positive")
        return v

    @field_validator("n_max")
    @classmethod
    def _non_negative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("must be non-negative")
        return v

    @field_validator("lambdas")
    @classmethod
    def _nonempty(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        if not v:
            raise ValueError("needs at least one value")
        for x in v:
            _fraction(x)
        return v

    @field_validator("p", "q")
    @classmethod
    def _scalar(cls, v: str) -> str:
        _fraction(v)
        return v

    @field_validator("output_format")
    @classmethod
    def _format(cls, v: str) -> str:
        if v not in FORMATS:
            raise ValueError(f"must be one of {', '.join(FORMATS)}")
        return v

    def scalars(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in self.lambdas)


def _split(value: Any) -> Tuple[str, ...]:
    if value is None:
        return ()
    if isinstance(value, str):
        return tuple(x for x in value.replace(",", " ").split() if x)
    return tuple(str(x) for x in value)


def config_from_cli(params: Mapping[str, Any], command: str = "") -> RunConfig:
    """RunConfig from click parameters; unset options keep their defaults and QA_REGISTRY wins for the registry."""
    registry_path = os.getenv("QA_REGISTRY", params.get("registry") or DEFAULT_REGISTRY)
    values = {
        "command": command,
        "inputs": tuple(str(x) for x in (params.get("algebra"), params.get("input")) if x),
        "pd_cutoff": params.get("cutoff"),
        "h4_cutoff": params.get("h4_cutoff"),
        "horizon": params.get("horizon"),
        "closure_cutoff": params.get("closure_cutoff"),
        "lambdas": _split(params.get("lambdas")) or None,
        "n_max": params.get("nmax"),
        "search_bound": params.get("bound"),
        "field": params.get("field"),
        "m": params.get("m"),
        "p": params.get("p"),
        "q": params.get("q"),
        "output_format": params.get("output_format"),
        "registry_path": registry_path,
    }
    try:
        return RunConfig(**{k: v for k, v in values.items() if v is not None})
    except ValidationError as e:
        err = e.errors()[0]
        raise ConfigError(f"{'.'.join(str(x) for x in err['loc'])}: {err['msg']}") from None
