"""Python bindings for the Poincare-Maxwell group PM(2+1) library."""

from ._core import (  # noqa: F401
    GENERATORS,
    CasimirTriple,
    ChartPoint,
    ChartSingularError,
    DomainError,
    IntegrationError,
    LieAlgebra,
    ParticleParams,
    PhaseState,
    algebra_check,
    bracket_table_check,
    chart_embed,
    chart_project,
    classify,
    coad_apply,
    coadjoint_matrix,
    equivalence_check,
    eval_casimirs,
    exp_ad_closed,
    exp_matrix_generic,
    hamiltonian,
    integrate_lorentz,
    kernel_residual,
    measure_cyclotron,
    moment_map,
    orbit_flow,
    orbit_hamiltonian,
    poisson_matrix,
    symplectic_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
