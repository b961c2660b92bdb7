# Copyright (C) 2025 Cognizant Digital Business, Evolutionary AI.
# All Rights Reserved.
# Issued under the Academic Public License.
#
# You can be released from the terms, and requirements of the Academic Public
# License by purchasing a commercial license.
# Purchase of a commercial license is mandatory for any use of the
# extlab Software in commercial settings.
#
# END COPYRIGHT
from typing import List
from typing import Optional

import numpy as np

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator


class EpsGrid(BaseModel):
    """
    A geometric grid of ε values from start down to stop.
    """
    model_config = ConfigDict(extra="forbid")

    start: float = 0.1
    stop: float = 1e-4
    count: int = Field(default=7, ge=1)

    @model_validator(mode="after")
    def check_range(self) -> "EpsGrid":
        """
        Keeps every ε inside [1e-5, 0.5] and the grid strictly decreasing
        """
        for name, value in (("start", self.start), ("stop", self.stop)):
            if not 1e-5 <= value <= 0.5:
                raise ValueError(f"eps.{name}={value} must lie in [1e-5, 0.5]")
        if self.count > 1 and not self.start > self.stop:
            raise ValueError(f"eps.start={self.start} must be larger than eps.stop={self.stop}")
        return self

    def values(self) -> List[float]:
        """
        :return: The grid, descending
        """
        if self.count == 1:
            return [self.start]
        return [float(value) for value in np.geomspace(self.start, self.stop, self.count)]

    def window(self) -> str:
        """
        :return: The grid as a start:stop:count string
        """
        return f"{self.start:g}:{self.stop:g}:{self.count}"


class OutputPaths(BaseModel):
    """
    Where reports go.  None means not written.  The JSON path is "json" in
    config files and json_path in code, clear of BaseModel.json.
    """
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    csv: Optional[str] = None
    json_path: Optional[str] = Field(default=None, alias="json")


class Tolerances(BaseModel):
    """
    Harness tolerances that may be overridden from config.
    """
    model_config = ConfigDict(extra="forbid")

    rank_tol: float = Field(default=1e-10, gt=0.0)
    t_rank_tol: float = Field(default=1e-7, gt=0.0)
    slope_band: float = Field(default=0.1, gt=0.0)
    noise_floor: float = Field(default=1e-11, gt=0.0)
    extrapolation_tol: float = Field(default=1e-5, gt=0.0)
    consistency_tol: float = Field(default=1e-6, gt=0.0)


class SweepConfig(BaseModel):
    """
    Validated configuration of an extlab run.
    """
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    model: str = "halfline"
    extension: str = "friedrichs"
    eps: EpsGrid = Field(default_factory=EpsGrid)
    probes: int = Field(default=5, ge=1)
    seed: int = 1234
    output: OutputPaths = Field(default_factory=OutputPaths)
    tolerances: Tolerances = Field(default_factory=Tolerances)
    alphas: List[float] = Field(default_factory=lambda: [-2.0, -1.0, 0.0, 1.0, 3.0])
    workers: int = Field(default=1, ge=1)

    def run_id(self) -> str:
        """
        :return: A deterministic run id derived from the seed and the grid
        """
        return f"{self.model}-{self.extension}-{self.seed}-{self.eps.window()}"
