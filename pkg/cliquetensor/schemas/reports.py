from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class CliqueReport(BaseModel):
    graph6: str
    n: int
    t: int
    count: int
    vertex_counts: List[int]
    clique_regular: bool
    clique_connected: bool
    cliques: Optional[List[List[int]]] = None

    model_config = ConfigDict(frozen=True)


class FreenessReport(BaseModel):
    graph6: str
    k: int
    r: int
    free: bool
    witness: Optional[List[List[int]]] = None

    model_config = ConfigDict(frozen=True)


class LowerBoundReport(BaseModel):
    """ρ_t of K_{k-1} ∨ T_r(n-k+1) against (t/n)·c_t and the leading term C(r-1,t-1)(n/r)^{t-1}."""
    n: int
    k: int
    r: int
    t: int
    rho: float
    clique_count: int
    bound: float
    leading_term: float
    clique_regular: bool
    equality: bool
    passed: bool

    model_config = ConfigDict(frozen=True)


class BalancingReport(BaseModel):
    k: int
    t: int
    parts_before: List[int]
    parts_after: List[int]
    i: int
    j: int
    rho_before: float
    rho_after: float
    margin: float
    increased: bool

    model_config = ConfigDict(frozen=True)


class BalancingGridReport(BaseModel):
    cases: int
    min_margin: Optional[float]
    failures: List[BalancingReport] = Field(default_factory=list)
    passed: bool

    model_config = ConfigDict(frozen=True)


class MonotonicityReport(BaseModel):
    graph6: str
    edge: List[int]
    t: int
    applicable: bool
    reason: Optional[str] = None
    rho_before: Optional[float] = None
    rho_after: Optional[float] = None
    strict: Optional[bool] = None

    model_config = ConfigDict(frozen=True)


class MonotonicityBatchReport(BaseModel):
    n: int
    t: int
    seed: int
    requested: int
    checked: int
    attempts: int
    min_increase: Optional[float]
    failures: List[MonotonicityReport] = Field(default_factory=list)
    passed: bool

    model_config = ConfigDict(frozen=True)


class ConnectivityMismatch(BaseModel):
    graph6: str
    t: int
    weakly_irreducible: bool
    clique_connected: bool

    model_config = ConfigDict(frozen=True)


class ConnectivityEquivalenceReport(BaseModel):
    max_n: int
    graphs: int
    checks: int
    mismatches: List[ConnectivityMismatch] = Field(default_factory=list)
    passed: bool

    model_config = ConfigDict(frozen=True)


class ChvatalHansonCase(BaseModel):
    m: int
    delta: int
    vertices: int
    formula: int
    exhaustive: int
    agree: bool

    model_config = ConfigDict(frozen=True)


class ChvatalHansonReport(BaseModel):
    max_m: int
    max_delta: int
    bound_holds: bool
    cases: List[ChvatalHansonCase]
    passed: bool

    model_config = ConfigDict(frozen=True)


class AugmentationReport(BaseModel):
    """Connect a vertex to the densest t-clique component without creating kK_{r+1}."""
    graph6: str
    k: int
    r: int
    t: int
    applicable: bool
    reason: Optional[str] = None
    vertex: Optional[int] = None
    added_edges: List[List[int]] = Field(default_factory=list)
    still_free: Optional[bool] = None
    rho_before: Optional[float] = None
    rho_after: Optional[float] = None
    increased: Optional[bool] = None

    model_config = ConfigDict(frozen=True)


class MaximizerConnectivityReport(BaseModel):
    t: int
    maximizers: int
    disconnected: List[str] = Field(default_factory=list)
    passed: bool

    model_config = ConfigDict(frozen=True)
