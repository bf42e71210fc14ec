# quotfib/census/models.py
"""
Census Models
=============
Pydantic models for stratified finite-field counts and stratum dimension tables.
"""

from typing import Dict, List, Optional, Sequence
import logging

from pydantic import BaseModel, Field, field_validator, model_validator

from ..modules.submodules import ModuleType

logger = logging.getLogger(__name__)


def type_sort_key(label: str) -> tuple:
    """Order partition labels with the open stratum first: (3) before (2,1)."""
    return tuple(-part for part in ModuleType.from_label(label).partition)


class CensusReport(BaseModel):
    """Counts of dim-n t-invariant subspaces of (F_q[t]/<t^n>)^r, stratified by module type."""
    n: int = Field(..., ge=0, description="Truncation order and subspace dimension")
    r: int = Field(..., ge=1, description="Rank of the free module")
    q: int = Field(..., ge=2, description="Prime field order")
    total: int = Field(default=0, ge=0, description="Number of invariant subspaces")
    by_type: Dict[str, int] = Field(default_factory=dict, description="Partition label -> count")
    candidates: int = Field(default=0, ge=0, description="Echelon candidates scanned")
    shards: int = Field(default=1, ge=1, description="Number of shards merged into this report")
    elapsed_ms: float = Field(default=0.0, ge=0, description="Wall-clock time")

    model_config = {
        "extra": "forbid",
    }

    @field_validator('by_type')
    @classmethod
    def validate_by_type(cls, v):
        """Keys are partition labels; keep them in canonical order."""
        for label, count in v.items():
            ModuleType.from_label(label)
            if count < 0:
                raise ValueError(f"Negative count for type {label}")
        return {label: v[label] for label in sorted(v, key=type_sort_key)}

    @model_validator(mode='after')
    def validate_counts(self):
        """Strata add up to the total and every type fits (n, r)."""
        if sum(self.by_type.values()) != self.total:
            raise ValueError(f"Stratum counts sum to {sum(self.by_type.values())}, total is {self.total}")
        for label in self.by_type:
            module_type = ModuleType.from_label(label)
            if module_type.length != self.n or module_type.parts > self.r:
                raise ValueError(f"Type {label} does not occur for n={self.n}, r={self.r}")
        return self

    def count(self, module_type: ModuleType) -> int:
        return self.by_type.get(str(module_type), 0)

    @classmethod
    def merge(cls, reports: Sequence["CensusReport"], elapsed_ms: Optional[float] = None) -> "CensusReport":
        """Fold shard reports into one; independent of order."""
        if not reports:
            raise ValueError("Nothing to merge")
        first = reports[0]
        by_type: Dict[str, int] = {}
        for report in reports:
            if (report.n, report.r, report.q) != (first.n, first.r, first.q):
                raise ValueError("Cannot merge census reports for different (n, r, q)")
            for label, count in report.by_type.items():
                by_type[label] = by_type.get(label, 0) + count
        return cls(
            n=first.n, r=first.r, q=first.q,
            total=sum(report.total for report in reports),
            by_type=by_type,
            candidates=sum(report.candidates for report in reports),
            shards=sum(report.shards for report in reports),
            elapsed_ms=elapsed_ms if elapsed_ms is not None else max(report.elapsed_ms for report in reports),
        )

    def same_counts(self, other: "CensusReport") -> bool:
        """Equality ignoring timing and sharding."""
        keys = ("n", "r", "q", "total", "by_type", "candidates")
        return self.model_dump(include=set(keys)) == other.model_dump(include=set(keys))

    def to_report(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "q": self.q,
            "total": self.total,
            "by_type": dict(self.by_type),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


class StratumEntry(BaseModel):
    """One stratum of the module-type stratification."""
    module_type: ModuleType = Field(..., description="Module type of the stratum")
    dimension: Optional[int] = Field(None, ge=0, description="Stratum dimension; None when unknown")
    description: str = Field(..., description="Geometric description")

    model_config = {
        "frozen": True,
    }


class StratumDimensionTable(BaseModel):
    """Stratum dimensions of the module-type stratification for given (r, n)."""
    r: int = Field(..., ge=2)
    n: int = Field(..., ge=1)
    entries: List[StratumEntry] = Field(default_factory=list)

    def dimension_of(self, module_type: ModuleType) -> Optional[int]:
        for entry in self.entries:
            if entry.module_type == module_type:
                return entry.dimension
        raise KeyError(str(module_type))

    def to_report(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "entries": [
                {"type": str(entry.module_type), "dimension": entry.dimension, "description": entry.description}
                for entry in self.entries
            ],
        }


class QuadricDecomposition(BaseModel):
    """F_q-point counts of the quadric cone xz + y^2 = 0 by chart."""
    q: int = Field(..., ge=2)
    chart_x: int = Field(..., ge=0, description="Points with x != 0")
    chart_z: int = Field(..., ge=0, description="Points with z != 0")
    overlap: int = Field(..., ge=0, description="Points with x and z nonzero")
    singular: int = Field(..., ge=0, description="Points with x = z = 0")
    total: int = Field(..., ge=0, description="All points of the cone")

    @property
    def consistent(self) -> bool:
        return self.chart_x + self.chart_z - self.overlap + self.singular == self.total
