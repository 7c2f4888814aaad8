"""Scenario configuration: the JSON document accepted by the CLI and service.

Transmittances may be given linearly (T1, T2) or in dB (T1_db, T2_db) with
T = 10^(dB/10), mirroring the mixed usage in channel specifications.
"""

from __future__ import annotations

import math
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class NoCompensationSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")
    type: Literal["none"] = "none"


class InterferenceSpec(BaseModel):
    """Receiver-side phase shift plus variable beam splitter on (B1, B2)."""

    model_config = ConfigDict(extra="forbid")
    type: Literal["interference"] = "interference"
    phi: float | Literal["auto"] = "auto"
    t_r: float | Literal["auto"] = "auto"
    target_pair: Literal[1, 2] = 1
    # Fig-1-style variable phase: when set, "auto" searches [0, 2pi) numerically
    # instead of resolving to pi.
    optimize_phi: bool = False

    @model_validator(mode="after")
    def _ranges(self) -> "InterferenceSpec":
        if isinstance(self.t_r, float) and not 0.0 <= self.t_r <= 1.0:
            raise ValueError("t_r must lie in [0, 1]")
        return self


class FeedforwardSpec(BaseModel):
    """Generalized measurement of (A2, B2) plus feed-forward onto (A1, B1)."""

    model_config = ConfigDict(extra="forbid")
    type: Literal["feedforward"] = "feedforward"
    t_a: float | Literal["auto"] = "auto"
    t_b: float | Literal["auto"] = "auto"

    @model_validator(mode="after")
    def _ranges(self) -> "FeedforwardSpec":
        for name in ("t_a", "t_b"):
            val = getattr(self, name)
            if isinstance(val, float) and not 0.0 <= val <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        return self


Compensation = Annotated[
    Union[NoCompensationSpec, InterferenceSpec, FeedforwardSpec],
    Field(discriminator="type"),
]


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


class ScenarioConfig(BaseModel):
    """One cross-talk distribution experiment: source, coupling, channels, compensation."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    v: float | None = Field(default=None, ge=1.0)
    ln0: float | None = Field(default=None, ge=0.0)
    t_c: float = Field(ge=0.0, le=1.0)
    T1: float | None = Field(default=None, gt=0.0, le=1.0)
    T1_db: float | None = Field(default=None, le=0.0)
    T2: float | None = Field(default=None, gt=0.0, le=1.0)
    T2_db: float | None = Field(default=None, le=0.0)
    eps: float = Field(default=0.0, ge=0.0)
    crosstalk_variant: Literal["two_mode", "three_mode"] = "two_mode"
    compensation: Compensation = Field(default_factory=NoCompensationSpec)

    @model_validator(mode="after")
    def _consistency(self) -> "ScenarioConfig":
        if (self.v is None) == (self.ln0 is None):
            raise ValueError("exactly one of v / ln0 must be set")
        if (self.T1 is None) == (self.T1_db is None):
            raise ValueError("exactly one of T1 / T1_db must be set")
        if (self.T2 is None) == (self.T2_db is None):
            raise ValueError("exactly one of T2 / T2_db must be set")
        if self.crosstalk_variant == "three_mode" and self.compensation.type != "none":
            raise ValueError(
                "three_mode coupling is defined only for uncompensated scenarios"
            )
        return self

    def variance(self) -> float:
        if self.v is not None:
            return self.v
        return math.cosh(self.ln0 * math.log(2.0))

    def transmittance(self, mode: Literal[1, 2]) -> float:
        lin, db = (self.T1, self.T1_db) if mode == 1 else (self.T2, self.T2_db)
        return lin if lin is not None else db_to_linear(db)

    def effective_coupling(self) -> float:
        """Beam-splitter coupling entering the formulas (t_c^2 for three-mode)."""
        if self.crosstalk_variant == "three_mode":
            return self.t_c * self.t_c
        return self.t_c
