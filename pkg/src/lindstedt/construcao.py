"""
Séries de Lindstedt em variáveis de ação-ângulo.

Esquema B: φ = ω t com ω = ω₀ - Σ ε^i a_i e divisores em ω₀.
Esquema K: ω fixado, ω₀ = ω + Σ ε^i a_i e divisores em ω.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.algebra.escalar import Escalar
from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import COS, SEN, Chave, SeriePoisson
from src.normalizacao.guarda import GuardaDivisores
from src.normalizacao.motor_lie import verificar_nula
from src.normalizacao.resultado import RelacaoFrequencia, SerieTrajetoria, SolucaoToro

logger = logging.getLogger(__name__)

ESQUEMAS = ('B', 'K')


def integrar_trig(f: SeriePoisson, guarda: GuardaDivisores) -> SeriePoisson:
    """
    Primitiva termo a termo de ω·∇ g = f com g(0) = 0

    c cos(k·φ) -> c/(k·ω) sin(k·φ); c sin(k·φ) -> -c/(k·ω) cos(k·φ) + c/(k·ω).

    Args:
        f: Série em φ sem termo constante
        guarda: Guarda com a frequência base (ω ou ω₀)

    Returns:
        Série g que se anula em φ = 0
    """
    verificar_nula(f.media_angular(), "Integração de série com termo secular")
    n = f.n_dof
    zero = (0,) * n
    termos: List[Tuple[Chave, Escalar]] = []
    for (eps, mono, p_exp, trig, onda), coef in f.termos.items():
        if not any(onda):
            continue
        novo_coef, novo_mono = guarda.dividir(coef, mono, onda)
        if trig == COS:
            termos.append(((eps, novo_mono, p_exp, SEN, onda), novo_coef))
        else:
            termos.append(((eps, novo_mono, p_exp, COS, onda), -novo_coef))
            termos.append(((eps, novo_mono, p_exp, COS, zero), novo_coef))
    return SeriePoisson(n, termos, f.corte_eps, f.corte_p)


def extrair_secular(rhs: SeriePoisson) -> Tuple[SeriePoisson, SeriePoisson]:
    """
    Contra-termo que anula a parte constante do lado direito de q̇

    Returns:
        (a_r sem graduação, lado direito de média nula)
    """
    return (-rhs.media_angular()).sem_eps(), rhs.parte_oscilante()


class ExpansorTaylor:
    """Derivadas ∂_q^m ∂_J^n de um campo, calculadas sob demanda e guardadas"""

    def __init__(self, campo: SeriePoisson):
        self.n_dof = campo.n_dof
        self._cache: Dict[Tuple[int, ...], SeriePoisson] = {(0,) * (2 * self.n_dof): campo}

    def derivada(self, alfa: Tuple[int, ...]) -> SeriePoisson:
        if alfa in self._cache:
            return self._cache[alfa]
        indice = next(i for i, a in enumerate(alfa) if a)
        pai = list(alfa)
        pai[indice] -= 1
        base = self.derivada(tuple(pai))
        if indice < self.n_dof:
            resultado = base.derivada_q(indice)
        else:
            resultado = base.derivada_j0(indice - self.n_dof)
        self._cache[alfa] = resultado
        return resultado

    def expandir(self, correcoes: Sequence[SeriePoisson], ordem: int) -> SeriePoisson:
        """
        Parte de ordem ε^ordem de campo(φ + Q, J₀ + P)

        Args:
            correcoes: (Q_1..Q_n, P_1..P_n) com ordens 1..ordem-1
            ordem: Ordem r desejada

        Returns:
            Bloco de ordem r, graduado
        """
        dimensao = 2 * self.n_dof
        # seleciona ordens sem reduzir o corte em ε dos produtos
        correcoes = [c.filtrar(lambda k: k[0] <= ordem) for c in correcoes]
        potencias: Dict[Tuple[int, int], SeriePoisson] = {}
        total = SeriePoisson.zero(self.n_dof, ordem)
        for grau in range(ordem):
            for alfa in itertools.product(range(grau + 1), repeat=dimensao):
                if sum(alfa) != grau:
                    continue
                derivada = self.derivada(alfa).filtrar(lambda c, g=grau: c[0] <= ordem - g)
                if derivada.eh_zero():
                    continue
                produto = derivada
                fatorial = 1
                for indice, a in enumerate(alfa):
                    if not a:
                        continue
                    if (indice, a) not in potencias:
                        potencias[(indice, a)] = correcoes[indice].potencia(a)
                    produto = produto * potencias[(indice, a)]
                    fatorial *= factorial(a)
                total = total + produto.escalar(Fraction(1, fatorial))
        return total.parte_ordem_eps(ordem)


@dataclass
class EstadoLindstedt:
    """Soluções por ordem (q_i, J_i) e contra-termos a_i de uma construção de Lindstedt"""

    esquema: str
    n_dof: int
    guarda: GuardaDivisores
    angulos: List[List[SeriePoisson]] = field(default_factory=list)
    acoes: List[List[SeriePoisson]] = field(default_factory=list)
    contra_termos: List[List[SeriePoisson]] = field(default_factory=list)

    @property
    def ordem(self) -> int:
        return len(self.contra_termos)

    def correcao_angulo(self, dof: int) -> SeriePoisson:
        """Σ ε^i q_i"""
        total = SeriePoisson.zero(self.n_dof)
        for ordem, lista in enumerate(self.angulos, start=1):
            total = total + lista[dof].deslocar_eps(ordem)
        return total

    def correcao_acao(self, dof: int) -> SeriePoisson:
        """Σ ε^i J_i"""
        total = SeriePoisson.zero(self.n_dof)
        for ordem, lista in enumerate(self.acoes, start=1):
            total = total + lista[dof].deslocar_eps(ordem)
        return total

    @property
    def relacao(self) -> RelacaoFrequencia:
        forma = 'explicita' if self.esquema == 'B' else 'implicita'
        return RelacaoFrequencia(self.n_dof, [[-a for a in lista] for lista in self.contra_termos], forma=forma)

    def solucao(self) -> SolucaoToro:
        relacao = self.relacao
        angulos, acoes = [], []
        for dof in range(self.n_dof):
            acao = SeriePoisson.termo(self.n_dof, 1, mono=MonomioParametros.j0(self.n_dof, dof))
            angulos.append(SerieTrajetoria('q', dof, self.correcao_angulo(dof), parte_secular=True, relacao=relacao))
            acoes.append(SerieTrajetoria('J', dof, acao + self.correcao_acao(dof), relacao=relacao))
        return SolucaoToro(f"lindstedt-{self.esquema.lower()}", self.ordem, angulos, acoes, relacao)


def _termo_arrasto(contra_termos: List[List[SeriePoisson]], solucoes: List[List[SeriePoisson]],
                   r: int, dof: int) -> SeriePoisson:
    """Σ_{s<r} (a_s·∇) x_{r-s} do esquema B"""
    n = len(contra_termos[0]) if contra_termos else 1
    total = SeriePoisson.zero(n)
    for s in range(1, r):
        alvo = solucoes[r - s - 1][dof]
        for j, a in enumerate(contra_termos[s - 1]):
            if a.eh_zero():
                continue
            derivada = alvo.derivada_q(j)
            if not derivada.eh_zero():
                total = total + a * derivada
    return total


def executar_lindstedt(H: SeriePoisson, esquema: str, ordem: int,
                       guarda: Optional[GuardaDivisores] = None,
                       omega: Optional[Sequence[float]] = None,
                       omega0: Optional[Sequence[float]] = None,
                       progresso: bool = False) -> EstadoLindstedt:
    """
    Constrói as séries de Lindstedt até a ordem R

    Args:
        H: Hamiltoniano em ação-ângulo (J na posição de J₀); a parte de ordem ε^0 é ignorada
        esquema: 'B' (análogo a Birkhoff) ou 'K' (análogo a Kolmogorov)
        ordem: Ordem R >= 1
        guarda: Guarda de divisores (padrão: ω₀ no esquema B, ω no esquema K)
        omega: Frequência numérica do toro (esquema K)
        omega0: Frequência numérica não perturbada (esquema B)
        progresso: Exibe barra de progresso por ordem

    Returns:
        EstadoLindstedt
    """
    esquema = esquema.upper()
    if esquema not in ESQUEMAS:
        raise ValueError(f"Esquema de Lindstedt inválido: {esquema}")
    if ordem < 1:
        raise ValueError(f"Ordem deve ser >= 1: {ordem}")
    n = H.n_dof
    if guarda is None:
        if esquema == 'B':
            guarda = GuardaDivisores(n, omega0, simbolo='omega0')
        else:
            guarda = GuardaDivisores(n, omega, simbolo='omega')

    perturbacao = H.filtrar(lambda c: c[0] >= 1).com_cortes(ordem)
    guarda.definir_onda_maxima_padrao(perturbacao, ordem)
    campos_q = [ExpansorTaylor(perturbacao.derivada_j0(j)) for j in range(n)]
    campos_J = [ExpansorTaylor(-perturbacao.derivada_q(j)) for j in range(n)]

    estado = EstadoLindstedt(esquema, n, guarda)
    ordens = tqdm(range(1, ordem + 1), desc=f"Lindstedt {esquema}", unit="ordem", disable=not progresso)
    for r in ordens:
        correcoes = [estado.correcao_angulo(j) for j in range(n)] + [estado.correcao_acao(j) for j in range(n)]
        contra_r, q_r, J_r = [], [], []
        for dof in range(n):
            rhs_q = campos_q[dof].expandir(correcoes, r).sem_eps()
            rhs_J = campos_J[dof].expandir(correcoes, r).sem_eps()
            if esquema == 'B':
                rhs_q = rhs_q + _termo_arrasto(estado.contra_termos, estado.angulos, r, dof)
                rhs_J = rhs_J + _termo_arrasto(estado.contra_termos, estado.acoes, r, dof)
            a, rhs_q = extrair_secular(rhs_q)
            verificar_nula(rhs_J.media_angular(), f"Lindstedt {esquema} ordem {r}: J̇ com média não nula")
            contra_r.append(a)
            q_r.append(integrar_trig(rhs_q, guarda))
            J_r.append(integrar_trig(rhs_J.parte_oscilante(), guarda))
        estado.contra_termos.append(contra_r)
        estado.angulos.append(q_r)
        estado.acoes.append(J_r)
        logger.info(f"Lindstedt {esquema}: ordem {r} concluída")
        logger.debug(f"Lindstedt {esquema} ordem {r}: a_{r} = {[a.formatar() for a in contra_r]}")
    return estado
