"""
Solução no toro invariante: p̃ = 0, q̃ = ω t levados às variáveis originais
"""

import logging

from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import SeriePoisson
from src.normalizacao.motor_lie import transformar_angulo, transformar_momento
from src.normalizacao.resultado import ResultadoFormaNormal, SerieTrajetoria, SolucaoToro

logger = logging.getLogger(__name__)


def solucao_toro(resultado: ResultadoFormaNormal) -> SolucaoToro:
    """
    Trajetórias q_j(φ) = φ_j + Δ_j(φ) e J_j(φ) = J₀_j + p_j(φ) até a ordem R

    Args:
        resultado: Resultado de Birkhoff ou Kolmogorov

    Returns:
        SolucaoToro com a relação de frequência do método
    """
    n = resultado.n_dof
    corte = resultado.ordem
    angulos, acoes = [], []
    for dof in range(n):
        delta = transformar_angulo(resultado.geradores, dof, corte, n).anular_momentos()
        momento = transformar_momento(resultado.geradores, dof, corte, n).anular_momentos()
        acao = SeriePoisson.termo(n, 1, mono=MonomioParametros.j0(n, dof)) + momento
        angulos.append(SerieTrajetoria('q', dof, delta, parte_secular=True, relacao=resultado.relacao))
        acoes.append(SerieTrajetoria('J', dof, acao, parte_secular=False, relacao=resultado.relacao))
    logger.info(f"Solução no toro ({resultado.metodo}, ordem {corte}) calculada")
    return SolucaoToro(resultado.metodo, corte, angulos, acoes, resultado.relacao)
