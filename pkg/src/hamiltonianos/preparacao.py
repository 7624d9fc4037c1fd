"""
Preparação do Hamiltoniano: variáveis de ação-ângulo, translação J = J₀ + p
e expansão das potências semi-inteiras
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Tuple

from src.algebra.escalar import Escalar
from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import COS, SEN, SeriePoisson
from src.hamiltonianos.modelos import ModeloOscilador

logger = logging.getLogger(__name__)

RAIZ_2_EXATA = Escalar.exato(0, 1)


@dataclass
class HamiltonianoPreparado:
    """ω₀·p + Σ ε^i h_i(q, p; J₀) pronto para a normalização"""

    serie: SeriePoisson
    ordem_expansao: int
    n_dof: int
    omega0: Optional[Tuple[float, ...]]
    nome_modelo: str = ""
    hash_modelo: str = ""
    manter_constantes: bool = False

    @property
    def eh_simbolico(self) -> bool:
        return self.omega0 is None


def termo_nao_perturbado(n_dof: int, omega0: Optional[Tuple[float, ...]], variavel: str = 'J') -> SeriePoisson:
    """
    ω₀·J (com J na posição de J₀ do monômio) ou ω₀·p

    Args:
        n_dof: Graus de liberdade
        omega0: Frequências numéricas ou None para ω₀ simbólico
        variavel: 'J' ou 'p'
    """
    serie = SeriePoisson.zero(n_dof)
    for j in range(n_dof):
        if omega0 is None:
            coef, mono = Escalar.exato(1), MonomioParametros((0,) * n_dof, omega0_exp=1)
        else:
            coef, mono = Escalar.numerico(omega0[j]), MonomioParametros.unidade(n_dof)
        if variavel == 'J':
            mono = mono * MonomioParametros.j0(n_dof, j)
            serie = serie + SeriePoisson.termo(n_dof, coef, mono=mono)
        else:
            p = [0] * n_dof
            p[j] = 1
            serie = serie + SeriePoisson.termo(n_dof, coef, mono=mono, p=p)
    return serie


def para_acao_angulo(modelo: ModeloOscilador, incluir_nao_perturbado: bool = True) -> SeriePoisson:
    """
    Substitui x_j = √(2J_j) sin q_j, p_j = √(2J_j) cos q_j na perturbação

    A ação J ocupa a posição de J₀ no monômio de parâmetros.

    Args:
        modelo: Modelo de oscilador
        incluir_nao_perturbado: Se True inclui ω₀·J

    Returns:
        Série em (q, J) com potências possivelmente semi-inteiras de J
    """
    n = modelo.n_dof
    xs, ps = [], []
    for j in range(n):
        onda = [0] * n
        onda[j] = 1
        mono = MonomioParametros.j0(n, j, expoente2=1)
        xs.append(SeriePoisson.termo(n, RAIZ_2_EXATA, mono=mono, trig=SEN, onda=onda))
        ps.append(SeriePoisson.termo(n, RAIZ_2_EXATA, mono=mono, trig=COS, onda=onda))

    resultado = termo_nao_perturbado(n, modelo.omega0) if incluir_nao_perturbado else SeriePoisson.zero(n)
    for termo in modelo.termos:
        parcela = SeriePoisson.termo(n, termo.coeficiente, eps=termo.eps)
        for j in range(n):
            if termo.expoentes_x[j]:
                parcela = parcela * xs[j].potencia(termo.expoentes_x[j])
            if termo.expoentes_p[j]:
                parcela = parcela * ps[j].potencia(termo.expoentes_p[j])
        resultado = resultado + parcela
    logger.debug(f"Modelo {modelo.nome} em ação-ângulo: {len(resultado)} termos")
    return resultado


def binomial_generalizado(expoente2: int, m: int) -> Fraction:
    """binom(expoente2/2, m) exato em ℚ"""
    alfa = Fraction(expoente2, 2)
    produto = Fraction(1)
    for i in range(m):
        produto *= alfa - i
    return produto / factorial(m)


def _expansao_potencia(expoente2: int, ordem_max: int) -> List[Tuple[int, Fraction]]:
    """Pares (m, binom) de (J₀ + p)^(expoente2/2) = Σ binom · J₀^(expoente2/2 - m) · p^m"""
    if expoente2 >= 0 and expoente2 % 2 == 0:
        grau = expoente2 // 2
    else:
        grau = ordem_max
    return [(m, binomial_generalizado(expoente2, m)) for m in range(grau + 1)]


def transladar_e_expandir(h: SeriePoisson, ordem_max: int, manter_constantes: bool = False) -> SeriePoisson:
    """
    Substitui J = J₀ + p e expande em p

    Potências inteiras são expandidas exatamente; potências semi-inteiras até p^ordem_max.
    O termo ω₀·J₀ é sempre descartado; as demais constantes (sem p e sem q) apenas
    quando manter_constantes é False.

    Args:
        h: Série em (q, J) com J na posição de J₀
        ordem_max: Grau máximo em p das expansões semi-inteiras
        manter_constantes: Mantém constantes perturbativas

    Returns:
        Série em (q, p) com parâmetro J₀
    """
    if ordem_max < 1:
        raise ValueError(f"Ordem de expansão deve ser >= 1: {ordem_max}")

    n = h.n_dof
    termos = []
    for (eps, mono, p_exp, trig, onda), coef in h.termos.items():
        expansoes = [_expansao_potencia(mono.j0_exp2[j], ordem_max) for j in range(n)]
        for combinacao in itertools.product(*expansoes):
            fator = Fraction(1)
            novos_j0 = []
            novos_p = []
            for j, (m, binom) in enumerate(combinacao):
                fator *= binom
                novos_j0.append(mono.j0_exp2[j] - 2 * m)
                novos_p.append(p_exp[j] + m)
            if fator == 0:
                continue
            if not any(novos_p) and not any(onda):
                if eps == 0 or not manter_constantes:
                    continue
            novo_mono = MonomioParametros(tuple(novos_j0), mono.omega_exp, mono.omega0_exp, mono.contra)
            termos.append(((eps, novo_mono, tuple(novos_p), trig, onda), coef * fator))
    return SeriePoisson(n, termos, h.corte_eps, h.corte_p)


def ordem_expansao_necessaria(grau_impar: int, ordem_normalizacao: int) -> int:
    """
    Grau em p suficiente para uma normalização de ordem n

    Termos de grau n+1 em p só afetam h_{n+1,1}, de ordem ε^(n+1).
    """
    if grau_impar < 3 or grau_impar % 2 == 0:
        raise ValueError(f"Grau deve ser ímpar e >= 3: {grau_impar}")
    if ordem_normalizacao < 1:
        raise ValueError(f"Ordem de normalização deve ser >= 1: {ordem_normalizacao}")
    return ordem_normalizacao


def preparar_hamiltoniano(modelo: ModeloOscilador, ordem: int, modo: str = 'exato',
                          manter_constantes: bool = False,
                          ordem_expansao: Optional[int] = None) -> HamiltonianoPreparado:
    """
    Constrói o Hamiltoniano preparado de um modelo

    Args:
        modelo: Modelo de oscilador
        ordem: Ordem de normalização pretendida
        modo: 'exato' ou 'numerico'
        manter_constantes: Mantém constantes perturbativas
        ordem_expansao: Sobrescreve o grau de expansão em p (padrão: a própria ordem)

    Returns:
        HamiltonianoPreparado
    """
    if modo not in ('exato', 'numerico'):
        raise ValueError(f"Modo inválido: {modo}")
    if ordem < 1:
        raise ValueError(f"Ordem deve ser >= 1: {ordem}")

    ordem_p = ordem_expansao if ordem_expansao is not None else ordem
    acao_angulo = para_acao_angulo(modelo)
    serie = transladar_e_expandir(acao_angulo, ordem_p, manter_constantes)
    if modo == 'numerico':
        serie = serie.para_numerico()

    logger.info(f"Hamiltoniano '{modelo.nome}' preparado: {len(serie)} termos, expansão até p^{ordem_p}")
    return HamiltonianoPreparado(
        serie=serie,
        ordem_expansao=ordem_p,
        n_dof=modelo.n_dof,
        omega0=modelo.omega0,
        nome_modelo=modelo.nome,
        hash_modelo=modelo.hash(),
        manter_constantes=manter_constantes,
    )
