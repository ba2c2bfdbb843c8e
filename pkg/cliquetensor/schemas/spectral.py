from typing import List

from pydantic import BaseModel, ConfigDict, Field


class ComponentSpectrum(BaseModel):
    """Power-iteration outcome on one t-clique component."""
    vertices: List[int]
    rho: float = Field(..., ge=0)
    vector: List[float]
    iterations: int
    lambda_min: float
    lambda_max: float
    gap: float
    converged: bool

    model_config = ConfigDict(frozen=True)


class SpectralResult(BaseModel):
    """ρ_t(G) with its Perron vectors and iteration diagnostics."""
    n: int
    t: int
    rho: float = Field(..., ge=0)
    clique_count: int
    components: List[ComponentSpectrum]
    uncovered: List[int]
    winning_component: int = Field(..., description="index into components, -1 when there is no t-clique")
    residual: float
    converged: bool
    tol: float
    shift: float

    model_config = ConfigDict(frozen=True)

    def perron_vector(self) -> List[float]:
        """Full-length vector: the winning component's entries, zero elsewhere."""
        full = [0.0] * self.n
        if self.winning_component < 0:
            return full
        component = self.components[self.winning_component]
        for v, value in zip(component.vertices, component.vector):
            full[v] = value
        return full
