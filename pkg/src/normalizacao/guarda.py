"""
Guarda de pequenos divisores k·ω
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.algebra.erros import ErroDimensao, ErroOndaExcedida, ErroPequenoDivisor
from src.algebra.escalar import Escalar
from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import SeriePoisson

logger = logging.getLogger(__name__)

SIMBOLOS = ('omega', 'omega0')


class GuardaDivisores:
    """
    Divide coeficientes por k·ω, simbolicamente (1 DOF) ou numericamente.

    Em modo simbólico o divisor k·ω vira k · ω^-1 no monômio; `simbolo` escolhe
    se a frequência é ω (Kolmogorov, Lindstedt K) ou ω₀ (Birkhoff, Lindstedt B).
    """

    def __init__(self, n_dof: int, omega: Optional[Sequence[float]] = None, simbolo: str = 'omega',
                 divisor_minimo_relativo: float = 1e-12, onda_maxima: Optional[int] = None):
        if simbolo not in SIMBOLOS:
            raise ValueError(f"Símbolo de frequência inválido: {simbolo}")
        if omega is None and n_dof != 1:
            raise ErroDimensao("Frequência simbólica só é suportada com n_dof = 1")
        self.n_dof = n_dof
        self.simbolo = simbolo
        self.omega: Optional[Tuple[float, ...]] = None
        if omega is not None:
            self.omega = tuple(float(w) for w in np.atleast_1d(omega))
            if len(self.omega) != n_dof:
                raise ErroDimensao(f"Vetor de frequências com {len(self.omega)} componentes para n_dof={n_dof}")
        self.divisor_minimo_relativo = divisor_minimo_relativo
        self.onda_maxima = onda_maxima
        self.logger = logging.getLogger(__name__)

    @property
    def eh_simbolico(self) -> bool:
        return self.omega is None

    @property
    def divisor_minimo(self) -> float:
        if self.omega is None:
            return 0.0
        return self.divisor_minimo_relativo * float(np.linalg.norm(self.omega))

    def definir_onda_maxima_padrao(self, serie: SeriePoisson, ordem: int) -> None:
        """Limite padrão 2 · (maior onda da entrada) · ordem, se nenhum foi configurado"""
        if self.onda_maxima is None:
            self.onda_maxima = max(1, 2 * max(serie.onda_maxima(), 1) * ordem)
            self.logger.debug(f"Limite de onda da guarda: |k| <= {self.onda_maxima}")

    def verificar_onda(self, onda: Sequence[int]) -> None:
        if self.onda_maxima is not None and sum(abs(k) for k in onda) > self.onda_maxima:
            raise ErroOndaExcedida(onda, self.onda_maxima)

    def dividir(self, coef: Escalar, mono: MonomioParametros,
                onda: Sequence[int]) -> Tuple[Escalar, MonomioParametros]:
        """
        Calcula coef·mono / (k·ω)

        Args:
            coef: Coeficiente escalar
            mono: Monômio de parâmetros
            onda: Vetor k (não nulo)

        Returns:
            Novo par (coeficiente, monômio)
        """
        self.verificar_onda(onda)
        if self.omega is None:
            k = onda[0]
            if k == 0:
                raise ErroPequenoDivisor(onda, 0.0, 0.0)
            if self.simbolo == 'omega':
                novo = MonomioParametros(mono.j0_exp2, mono.omega_exp - 1, mono.omega0_exp, mono.contra)
            else:
                novo = MonomioParametros(mono.j0_exp2, mono.omega_exp, mono.omega0_exp - 1, mono.contra)
            return coef / k, novo
        divisor = float(np.dot(onda, self.omega))
        if abs(divisor) < self.divisor_minimo or divisor == 0.0:
            raise ErroPequenoDivisor(onda, divisor, self.divisor_minimo)
        return coef * Escalar.numerico(1.0 / divisor), mono

    def termo_linear(self) -> SeriePoisson:
        """ω·p como série"""
        n = self.n_dof
        serie = SeriePoisson.zero(n)
        for j in range(n):
            p = [0] * n
            p[j] = 1
            if self.omega is None:
                mono = MonomioParametros((0,) * n, omega_exp=int(self.simbolo == 'omega'),
                                         omega0_exp=int(self.simbolo == 'omega0'))
                serie = serie + SeriePoisson.termo(n, 1, mono=mono, p=p)
            else:
                serie = serie + SeriePoisson.termo(n, Escalar.numerico(self.omega[j]), p=p)
        return serie

    def produto_omega(self, vetor: List[SeriePoisson]) -> SeriePoisson:
        """Σ_i ω_i · v_i"""
        resultado = SeriePoisson.zero(self.n_dof)
        for j, componente in enumerate(vetor):
            if componente.eh_zero():
                continue
            if self.omega is None:
                mono = MonomioParametros((0,) * self.n_dof, omega_exp=int(self.simbolo == 'omega'),
                                         omega0_exp=int(self.simbolo == 'omega0'))
                resultado = resultado + componente.multiplicar_monomio(mono)
            else:
                resultado = resultado + componente.escalar(Escalar.numerico(self.omega[j]))
        return resultado

    def ligacoes(self) -> dict:
        """Valores numéricos da frequência para avaliação, se houver"""
        if self.omega is None:
            return {}
        return {self.simbolo: list(self.omega)}
