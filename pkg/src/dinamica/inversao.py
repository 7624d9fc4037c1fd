"""
Inversão do mapa de frequência dω = f(J₀): amplitude do toro a partir da frequência
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import brentq, root_scalar

from src.algebra.erros import ErroConvergencia, ErroDimensao
from src.normalizacao.resultado import RelacaoFrequencia

logger = logging.getLogger(__name__)

METODOS_INVERSAO = ('serie', 'newton')


@dataclass
class MapaFrequencia:
    """
    f(J₀) = Σ ε^i d_i(J₀) = ω - ω₀ para ε e ω₀ numéricos (um grau de liberdade).

    Na forma implícita ω = ω₀ + dω é substituído nos d_i antes de resolver.
    """

    relacao: RelacaoFrequencia
    eps: float
    omega0: float

    def __post_init__(self):
        if self.relacao.n_dof != 1:
            raise ErroDimensao("Inversão do mapa de frequência só é suportada com n_dof = 1")

    @property
    def ordem(self) -> int:
        return self.relacao.ordem

    def coeficientes(self, domega: float = 0.0) -> Dict[int, float]:
        """
        Coeficientes c_e de f(J₀) = Σ c_e J₀^(e/2)

        Args:
            domega: Desvio usado para ligar ω = ω₀ + dω na forma implícita

        Returns:
            {expoente2: coeficiente}
        """
        ligacoes = {'eps': self.eps, 'omega0': [self.omega0], 'omega': [self.omega0 + domega]}
        coeficientes: Dict[int, float] = {}
        for (eps, mono, p_exp, _, onda), coef in self.relacao.serie_desvio(0).termos.items():
            if any(p_exp) or any(onda):
                raise ValueError("Correção de frequência com dependência em p ou q")
            sem_j0 = type(mono)((0,), mono.omega_exp, mono.omega0_exp, mono.contra)
            valor = coef.para_float() * sem_j0.avaliar(ligacoes) * self.eps ** eps
            expoente2 = mono.j0_exp2[0]
            coeficientes[expoente2] = coeficientes.get(expoente2, 0.0) + valor
        return {e: c for e, c in coeficientes.items() if c != 0.0}

    def avaliar(self, j0: float, domega: float = 0.0) -> float:
        """f(J₀) com ω = ω₀ + domega nos coeficientes"""
        return float(sum(c * j0 ** (e / 2.0) for e, c in self.coeficientes(domega).items()))

    def derivada(self, j0: float, domega: float = 0.0) -> float:
        return float(sum(c * (e / 2.0) * j0 ** (e / 2.0 - 1.0)
                         for e, c in self.coeficientes(domega).items() if e))


def _j_max(coeficientes: Dict[int, float], domega: float) -> float:
    """Limite do intervalo: (2|dω| / |c_lider|)^(2/e) com o termo de menor grau"""
    expoente2 = min(e for e in coeficientes if e > 0)
    return (2.0 * abs(domega) / abs(coeficientes[expoente2])) ** (2.0 / expoente2)


def _inverter_serie(coeficientes: Dict[int, float], domega: float, grau: int) -> Optional[float]:
    """Reversão da série de potências truncada em dω^grau; None se inaplicável"""
    if any(e % 2 for e in coeficientes) or coeficientes.get(2, 0.0) == 0.0:
        return None
    grau_f = max(e // 2 for e in coeficientes)
    f = Polynomial([coeficientes.get(2 * i, 0.0) for i in range(grau_f + 1)])
    c1 = coeficientes[2]
    identidade = Polynomial([0.0, 1.0])
    g = Polynomial([0.0, 1.0 / c1])
    for _ in range(grau):
        g = (g - (f(g) - f.coef[0] - identidade) / c1).cutdeg(grau)
    return float(g(domega))


def _inverter_newton(mapa: MapaFrequencia, domega: float, tolerancia: float, max_iteracoes: int,
                     j_max: Optional[float]) -> float:
    coeficientes = mapa.coeficientes(domega)
    limite = j_max if j_max is not None else _j_max(coeficientes, domega)

    def funcao(j: float) -> float:
        return mapa.avaliar(max(j, 0.0), domega) - domega

    def derivada(j: float) -> float:
        return mapa.derivada(max(j, 1e-300), domega)

    chute = domega / coeficientes[2] if coeficientes.get(2) else 0.5 * limite
    try:
        solucao = root_scalar(funcao, x0=chute, fprime=derivada, method='newton', xtol=tolerancia,
                              maxiter=max_iteracoes)
        if solucao.converged and 0.0 <= solucao.root <= limite and abs(funcao(solucao.root)) < 1e3 * tolerancia:
            return float(solucao.root)
    except (ZeroDivisionError, OverflowError, RuntimeError):
        pass
    logger.warning(f"Newton não convergiu para dω={domega}; usando bisseção em [0, {limite:.6g}]")

    a, b = 0.0, limite
    for _ in range(60):
        if funcao(a) * funcao(b) <= 0.0:
            return float(brentq(funcao, a, b, xtol=tolerancia, maxiter=max_iteracoes))
        b *= 2.0
    raise ErroConvergencia(f"f(J₀) = {domega} sem raiz no intervalo", intervalo=(a, b), iteracoes=max_iteracoes)


def inverter_mapa_frequencia(mapa: MapaFrequencia, domega: float, metodo: str = 'serie',
                             tolerancia: float = 1e-12, max_iteracoes: int = 100,
                             j_max: Optional[float] = None) -> float:
    """
    Resolve f(J₀) = dω

    Args:
        mapa: Mapa de frequência
        domega: Desvio ω - ω₀
        metodo: 'serie' (reversão da série truncada em dω^R)
            ou 'newton' (raiz numérica com bisseção de segurança)
        tolerancia: Tolerância absoluta em J₀ (Newton)
        max_iteracoes: Limite de iterações (Newton)
        j_max: Limite superior do intervalo de busca

    Returns:
        J₀ >= 0
    """
    if metodo not in METODOS_INVERSAO:
        raise ValueError(f"Método de inversão inválido: {metodo}")
    if domega == 0.0:
        return 0.0
    coeficientes = mapa.coeficientes(domega)
    if not coeficientes or all(e == 0 for e in coeficientes):
        raise ErroConvergencia("Mapa de frequência sem dependência em J₀")

    if metodo == 'serie':
        j0 = _inverter_serie(coeficientes, domega, mapa.ordem)
        if j0 is not None and np.isfinite(j0) and j0 >= 0.0:
            logger.info(f"J₀ = {j0:.10g} por reversão da série (dω = {domega})")
            return j0
        logger.warning("Reversão da série inaplicável; usando Newton")

    j0 = _inverter_newton(mapa, domega, tolerancia, max_iteracoes, j_max)
    logger.info(f"J₀ = {j0:.10g} por Newton (dω = {domega})")
    return j0
