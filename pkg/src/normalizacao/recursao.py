"""
Montagem fechada dos blocos h_{k,i}^(r) de um passo de Kolmogorov por somas duplas.

Usada apenas para conferir a construção sequencial por duas transformadas de Lie.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from src.algebra.serie_poisson import SeriePoisson
from src.normalizacao.motor_lie import FuncaoGeradora, derivada_lie
from src.normalizacao.resultado import EtapaKolmogorov

logger = logging.getLogger(__name__)


def bloco(serie: SeriePoisson, k: int, i: int) -> SeriePoisson:
    """h_{k,i}: ordem ε^k, grau i em p, sem graduação"""
    if k < 0:
        return SeriePoisson.zero(serie.n_dof)
    return serie.parte_ordem_eps(k).parte_grau_p(i).sem_eps()


def _iterar_lie(f: SeriePoisson, gerador: FuncaoGeradora, vezes: int) -> SeriePoisson:
    for _ in range(vezes):
        if f.eh_zero():
            break
        f = derivada_lie(f, gerador, graduar=False)
    return f


def _termo(etapa: EtapaKolmogorov, j: int, s: int, k: int, i: int) -> SeriePoisson:
    """1/(j! s!) L^j_{χ₂} L^s_{χ₁} h_{k-jr-sr, i+s}"""
    r = etapa.passo
    base = bloco(etapa.entrada, k - j * r - s * r, i + s)
    if base.eh_zero():
        return base
    valor = _iterar_lie(_iterar_lie(base, etapa.chi1, s), etapa.chi2, j)
    return valor.escalar(Fraction(1, factorial(j) * factorial(s)))


def _soma_dupla(etapa: EtapaKolmogorov, k: int, i: int, j_max: int) -> SeriePoisson:
    r = etapa.passo
    total = SeriePoisson.zero(etapa.entrada.n_dof)
    for j in range(j_max + 1):
        for s in range((k - j * r - 1) // r + 1):
            total = total + _termo(etapa, j, s, k, i)
    return total


def bloco_fechado(etapa: EtapaKolmogorov, k: int, i: int) -> SeriePoisson:
    """
    h_{k,i}^(r) pelas fórmulas fechadas em função de h^(r-1), χ₁^(r), χ₂^(r) e C_r

    Args:
        etapa: Passo r já calculado (entrada com a_r substituído)
        k: Ordem em ε (k >= 1)
        i: Grau em p

    Returns:
        Bloco sem graduação
    """
    if k < 1 or i < 0:
        raise ValueError(f"Bloco inválido: k={k}, i={i}")
    r = etapa.passo
    f = (k - 1) // r
    anterior = bloco(etapa.entrada, k, i)

    if i == 0:
        if k < r:
            return anterior
        if k == r:
            return etapa.constante
        if k < 2 * r:
            return anterior
        if k == 2 * r:
            return anterior + derivada_lie(bloco(etapa.entrada, r, 1), etapa.chi1, graduar=False)
        if k % r != 0:
            extra = _iterar_lie(bloco(etapa.entrada, k - (f - 1) * r, 0), etapa.chi2, f - 1)
            return _soma_dupla(etapa, k, 0, f - 2) + extra.escalar(Fraction(1, factorial(f - 1)))
        return _soma_dupla(etapa, k, 0, f - 1)

    if i == 1:
        if k <= r:
            return SeriePoisson.zero(etapa.entrada.n_dof)
        if k % r != 0:
            return _soma_dupla(etapa, k, 1, f)
        m = k // r
        extra = _iterar_lie(bloco(etapa.entrada, r, 1), etapa.chi2, m - 1)
        return _soma_dupla(etapa, k, 1, m - 2) + extra.escalar(Fraction(m - 1, factorial(m)))

    if k <= r:
        return anterior
    return _soma_dupla(etapa, k, i, f)


def verificar_recursao(etapa: EtapaKolmogorov, k_max: int, i_max: int) -> Dict[Tuple[int, int], bool]:
    """
    Compara os blocos fechados com a saída das duas transformadas sequenciais

    Returns:
        {(k, i): True se iguais}
    """
    comparacao: Dict[Tuple[int, int], bool] = {}
    divergentes: List[Tuple[int, int]] = []
    for k in range(1, k_max + 1):
        for i in range(i_max + 1):
            igual = bloco_fechado(etapa, k, i) == bloco(etapa.saida, k, i)
            comparacao[(k, i)] = igual
            if not igual:
                divergentes.append((k, i))
    if divergentes:
        logger.warning(f"Passo {etapa.passo}: blocos divergentes {divergentes}")
    return comparacao
