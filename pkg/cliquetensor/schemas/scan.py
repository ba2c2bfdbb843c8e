from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

Verdict = Literal["unique-conjectured", "conjectured-among-ties", "conjecture-beaten", "conjectured-not-free"]


class ScanParams(BaseModel):
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    r: int = Field(..., ge=1)
    t: int = Field(..., ge=2)
    tol: float
    shift: float
    max_iters: int
    tie_tol: float
    prune: bool

    model_config = ConfigDict(frozen=True)


class PopulationInfo(BaseModel):
    source: Literal["enumeration", "graph6"]
    descriptor: str
    scanned: int = 0
    skipped: int = 0

    model_config = ConfigDict(frozen=True)


class ConjecturedSummary(BaseModel):
    """K_{k-1} ∨ T_r(n-k+1) as seen by the scan."""
    graph6: str
    rho: float
    clique_count: int
    edges: int
    free: bool

    model_config = ConfigDict(frozen=True)


class ScanRecord(BaseModel):
    """Outcome of one exhaustive maximizer scan."""
    params: ScanParams
    population: PopulationInfo
    free_count: int
    best_rho: Optional[float] = None
    best_graph6: Optional[str] = None
    maximizer_count: int = 0
    maximizers: List[str] = Field(default_factory=list)
    conjectured: ConjecturedSummary
    verdict: Verdict
    max_edges: int = Field(0, description="max e(G) over free graphs")
    max_edges_by_conjectured: bool = False
    max_cliques: int = Field(0, description="max c_t(G) over free graphs")
    max_cliques_by_conjectured: bool = False
    maximizers_meet_clique_bound: bool = Field(
        True, description="every maximizer satisfies rho >= (t/n) c_t"
    )

    model_config = ConfigDict(frozen=True)


class ThresholdRow(BaseModel):
    n: int
    verdict: Verdict
    best_rho: Optional[float]
    conjectured_rho: float
    free_count: int
    maximizer_count: int

    model_config = ConfigDict(frozen=True)


class ThresholdTable(BaseModel):
    """Verdict per n; ``threshold`` is the first n from which every tested larger n is unique-conjectured."""
    k: int
    r: int
    t: int
    rows: List[ThresholdRow]
    threshold: Optional[int] = None

    model_config = ConfigDict(frozen=True)
