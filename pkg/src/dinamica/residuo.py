"""
Resíduo das equações de movimento ao longo de uma solução em série
"""

import logging
from typing import Any, Dict, Optional, Sequence

import numpy as np

from src.algebra.serie_poisson import SeriePoisson
from src.normalizacao.resultado import SerieTrajetoria, SolucaoToro

logger = logging.getLogger(__name__)


def _derivada_temporal(trajetoria: SerieTrajetoria, t: np.ndarray, eps: float, j0: Sequence[float],
                       omega: np.ndarray, omega0: Optional[Sequence[float]]) -> np.ndarray:
    """d/dt = Σ_l ω_l ∂/∂φ_l, mais ω_dof para a parte secular"""
    n = trajetoria.serie.n_dof
    derivada = np.zeros_like(t) + (omega[trajetoria.dof] if trajetoria.parte_secular else 0.0)
    for l in range(n):
        serie_l = trajetoria.serie.derivada_q(l)
        if serie_l.eh_zero():
            continue
        parcial = SerieTrajetoria(trajetoria.coordenada, trajetoria.dof, serie_l)
        derivada = derivada + omega[l] * parcial.avaliar(t, eps, j0, omega, omega0)
    return derivada


def residuo_equacoes_movimento(solucao: SolucaoToro, H: SeriePoisson, eps: float, j0: Sequence[float],
                               omega: Sequence[float], omega0: Sequence[float], amostras: int = 400) -> float:
    """
    max |q̇ - ∂H/∂J| e |J̇ + ∂H/∂q| sobre um período

    Args:
        solucao: Solução em série (q(φ), J(φ))
        H: Hamiltoniano completo em ação-ângulo (J na posição de J₀)
        eps: Valor de ε
        j0: Ação J₀
        omega: Frequência ω do toro
        omega0: Frequência não perturbada
        amostras: Pontos por período

    Returns:
        Norma máxima do resíduo
    """
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    periodo = 2.0 * np.pi / float(np.min(np.abs(omega)))
    t = np.linspace(0.0, periodo, amostras)
    q, J = solucao.avaliar(t, eps, j0, omega, omega0)

    ligacoes: Dict[str, Any] = {'eps': eps, 'omega0': list(np.atleast_1d(omega0))}
    maior = 0.0
    for dof in range(solucao.n_dof):
        dH_dJ = H.derivada_j0(dof).compilar(ligacoes)(q, J)
        dH_dq = H.derivada_q(dof).compilar(ligacoes)(q, J)
        q_ponto = _derivada_temporal(solucao.q(dof), t, eps, j0, omega, omega0)
        J_ponto = _derivada_temporal(solucao.J(dof), t, eps, j0, omega, omega0)
        maior = max(maior, float(np.max(np.abs(q_ponto - dH_dJ))), float(np.max(np.abs(J_ponto + dH_dq))))
    logger.debug(f"Resíduo das equações de movimento (ε={eps}): {maior:.3e}")
    return maior
