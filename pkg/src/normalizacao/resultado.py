"""
Tipos de resultado da normalização: relação de frequência, trajetórias e forma normal
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from src.algebra.erros import ErroConvergencia, ErroDimensao
from src.algebra.serializacao import serie_para_dict
from src.algebra.serie_poisson import SeriePoisson
from src.normalizacao.motor_lie import FuncaoGeradora

logger = logging.getLogger(__name__)

FORMAS = ('explicita', 'implicita')


@dataclass
class RelacaoFrequencia:
    """
    ω = ω₀ + Σ ε^i d_i(J₀).

    Na forma implícita (Kolmogorov, Lindstedt K) os d_i = -a_i dependem do próprio ω;
    na explícita (Birkhoff, Lindstedt B) dependem de ω₀.
    """

    n_dof: int
    desvios: List[List[SeriePoisson]]
    forma: str = 'explicita'

    def __post_init__(self):
        if self.forma not in FORMAS:
            raise ValueError(f"Forma de relação de frequência inválida: {self.forma}")
        for ordem, lista in enumerate(self.desvios, start=1):
            if len(lista) != self.n_dof:
                raise ErroDimensao(f"Correção de ordem {ordem} com {len(lista)} componentes para n_dof={self.n_dof}")

    @property
    def ordem(self) -> int:
        return len(self.desvios)

    @property
    def contra_termos(self) -> List[List[SeriePoisson]]:
        """a_i = -d_i"""
        return [[-d for d in lista] for lista in self.desvios]

    @property
    def depende_de_omega(self) -> bool:
        return any(chave[1].omega_exp != 0 for lista in self.desvios for d in lista for chave in d.termos)

    def serie_desvio(self, dof: int = 0) -> SeriePoisson:
        """Σ ε^i d_i como série graduada"""
        total = SeriePoisson.zero(self.n_dof)
        for ordem, lista in enumerate(self.desvios, start=1):
            total = total + lista[dof].deslocar_eps(ordem)
        return total

    def desvio(self, j0: Sequence[float], eps: float, omega: Optional[Sequence[float]] = None,
               omega0: Optional[Sequence[float]] = None) -> np.ndarray:
        """Valor numérico de Σ ε^i d_i por grau de liberdade"""
        ligacoes: Dict[str, Any] = {'eps': eps, 'j0': list(np.atleast_1d(j0))}
        if omega is not None:
            ligacoes['omega'] = list(np.atleast_1d(omega))
        if omega0 is not None:
            ligacoes['omega0'] = list(np.atleast_1d(omega0))
        return np.array([float(self.serie_desvio(j).avaliar(ligacoes)) for j in range(self.n_dof)])

    def resolver_omega(self, j0: Sequence[float], eps: float, omega0: Sequence[float]) -> np.ndarray:
        """
        Frequência ω do toro de ação J₀

        Na forma implícita com ω simbólico resolve ω - ω₀ - Σ ε^i d_i(J₀, ω) = 0 por brentq.
        """
        omega0 = np.atleast_1d(np.asarray(omega0, dtype=float))
        if not self.depende_de_omega:
            return omega0 + self.desvio(j0, eps, omega0=omega0)
        if self.n_dof != 1:
            raise ErroDimensao("Relação implícita em ω só é resolvida com n_dof = 1")

        def residuo(w: float) -> float:
            return w - omega0[0] - self.desvio(j0, eps, omega=[w], omega0=omega0)[0]

        chute = omega0[0] + self.desvio(j0, eps, omega=omega0, omega0=omega0)[0]
        passo = abs(chute - omega0[0]) + 1e-3 * max(abs(omega0[0]), 1.0)
        a, b = chute - passo, chute + passo
        for _ in range(50):
            if a > 0 and residuo(a) * residuo(b) <= 0:
                return np.array([brentq(residuo, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps)])
            passo *= 2.0
            a, b = max(chute - passo, 0.5 * a if a > 0 else 1e-12), chute + passo
        raise ErroConvergencia("Relação implícita de frequência sem raiz no intervalo", intervalo=(a, b))

    def formatar(self) -> str:
        linhas = []
        for dof in range(self.n_dof):
            sufixo = "" if self.n_dof == 1 else f"_{dof + 1}"
            desvio = self.serie_desvio(dof)
            if desvio.eh_zero():
                linhas.append(f"ω{sufixo} = ω0{sufixo}")
            else:
                linhas.append(f"ω{sufixo} = ω0{sufixo} + {desvio.formatar()}".replace("+ -", "- "))
        return "\n".join(linhas)

    def para_dict(self) -> Dict[str, Any]:
        return {
            'forma': self.forma,
            'texto': self.formatar(),
            'desvios': [[serie_para_dict(d) for d in lista] for lista in self.desvios],
        }


@dataclass
class SerieTrajetoria:
    """
    Coordenada q_j, J_j ou p_j ao longo do toro como série nos ângulos φ = ω t.

    Para ângulos a série guarda apenas q - φ; `parte_secular` indica que φ_dof
    deve ser somado na avaliação.
    """

    coordenada: str
    dof: int
    serie: SeriePoisson
    parte_secular: bool = False
    relacao: Optional[RelacaoFrequencia] = None

    def em_t0(self) -> SeriePoisson:
        """Valor em t = 0 (φ = 0) como série nos parâmetros"""
        return self.serie.anular_angulos()

    def ordem(self, ordem_eps: int) -> SeriePoisson:
        return self.serie.parte_ordem_eps(ordem_eps)

    def avaliar(self, t: Any, eps: float, j0: Sequence[float], omega: Sequence[float],
                omega0: Optional[Sequence[float]] = None) -> np.ndarray:
        """
        Avalia a trajetória numa grade de tempos

        Args:
            t: Instantes (escalar ou array)
            eps: Valor de ε
            j0: Ação J₀ por grau de liberdade
            omega: Frequência ω do toro (φ = ω t)
            omega0: Frequência ω₀, se aparecer nos coeficientes

        Returns:
            Array com os valores da coordenada
        """
        t = np.atleast_1d(np.asarray(t, dtype=float))
        omega = np.atleast_1d(np.asarray(omega, dtype=float))
        angulos = np.outer(omega, t)
        ligacoes: Dict[str, Any] = {'eps': eps, 'j0': list(np.atleast_1d(j0)), 'omega': list(omega), 'q': angulos}
        if omega0 is not None:
            ligacoes['omega0'] = list(np.atleast_1d(omega0))
        valores = np.broadcast_to(np.asarray(self.serie.avaliar(ligacoes), dtype=float), t.shape).copy()
        if self.parte_secular:
            valores = valores + angulos[self.dof]
        return valores

    def formatar(self) -> str:
        sufixo = "" if self.serie.n_dof == 1 else f"_{self.dof + 1}"
        nome = f"{self.coordenada}{sufixo}(φ)"
        corpo = self.serie.formatar()
        if self.parte_secular:
            texto = f"{nome} = φ{sufixo}" if self.serie.eh_zero() else f"{nome} = φ{sufixo} + {corpo}"
        else:
            texto = f"{nome} = {corpo}"
        return texto.replace("+ -", "- ")

    def para_dict(self) -> Dict[str, Any]:
        return {
            'coordenada': self.coordenada,
            'dof': self.dof,
            'parte_secular': self.parte_secular,
            'serie': serie_para_dict(self.serie),
            'relacao_frequencia': self.relacao.formatar() if self.relacao else "",
        }


@dataclass
class SolucaoToro:
    """Pares (q_j, J_j) de uma construção, com a relação de frequência associada"""

    metodo: str
    ordem: int
    angulos: List[SerieTrajetoria]
    acoes: List[SerieTrajetoria]
    relacao: RelacaoFrequencia

    @property
    def n_dof(self) -> int:
        return len(self.angulos)

    def q(self, dof: int = 0) -> SerieTrajetoria:
        return self.angulos[dof]

    def J(self, dof: int = 0) -> SerieTrajetoria:
        return self.acoes[dof]

    def avaliar(self, t: Any, eps: float, j0: Sequence[float], omega: Sequence[float],
                omega0: Optional[Sequence[float]] = None):
        """(q, J) como arrays n_dof × T"""
        q = np.vstack([s.avaliar(t, eps, j0, omega, omega0) for s in self.angulos])
        J = np.vstack([s.avaliar(t, eps, j0, omega, omega0) for s in self.acoes])
        return q, J

    def formatar(self) -> str:
        partes = [s.formatar() for s in self.angulos] + [s.formatar() for s in self.acoes]
        partes.append(self.relacao.formatar())
        return "\n".join(partes)


@dataclass
class EtapaKolmogorov:
    """Registro de um passo r do algoritmo de Kolmogorov"""

    passo: int
    entrada: SeriePoisson
    intermediaria: SeriePoisson
    saida: SeriePoisson
    contra_termos: List[SeriePoisson]
    chi1: FuncaoGeradora
    chi2: FuncaoGeradora
    constante: SeriePoisson


def gerador_para_dict(gerador: FuncaoGeradora) -> Dict[str, Any]:
    return {
        'tipo': gerador.tipo,
        'passo': gerador.passo,
        'grau_eps': gerador.grau_eps,
        'serie': serie_para_dict(gerador.serie),
        'K': [serie_para_dict(k) for k in gerador.K],
        'S': [serie_para_dict(s) for s in gerador.S],
    }


@dataclass
class ResultadoFormaNormal:
    """Forma normal Z^(R), razão de geradores, correções de frequência e constantes C_k"""

    metodo: str
    ordem: int
    n_dof: int
    forma_normal: SeriePoisson
    resto: SeriePoisson
    geradores: List[FuncaoGeradora]
    correcoes: List[List[SeriePoisson]]
    constantes: List[SeriePoisson]
    relacao: RelacaoFrequencia
    corte_eps: int
    ligacoes: Dict[str, Any] = field(default_factory=dict)
    nome_modelo: str = ""
    hash_modelo: str = ""
    etapas: List[EtapaKolmogorov] = field(default_factory=list)

    @property
    def modo(self) -> str:
        return 'exato' if self.forma_normal.eh_exata else 'numerico'

    def geradores_do_passo(self, passo: int) -> List[FuncaoGeradora]:
        return [g for g in self.geradores if g.passo == passo]

    def para_dict(self) -> Dict[str, Any]:
        return {
            'manifesto': {
                'metodo': self.metodo,
                'ordem': self.ordem,
                'hash_modelo': self.hash_modelo,
                'modo': self.modo,
                'ligacoes': self.ligacoes,
            },
            'forma_normal': serie_para_dict(self.forma_normal),
            'resto': serie_para_dict(self.resto),
            'geradores': [gerador_para_dict(g) for g in self.geradores],
            'correcoes': [[serie_para_dict(c) for c in lista] for lista in self.correcoes],
            'constantes': [serie_para_dict(c) for c in self.constantes],
            'relacao_frequencia': self.relacao.formatar(),
        }

    def resumo(self) -> Dict[str, str]:
        """Pares chave-valor para o resumo textual"""
        nome_correcao = 'a' if self.metodo == 'kolmogorov' else 'omega'
        linhas = {'metodo': self.metodo, 'modelo': self.nome_modelo, 'ordem': str(self.ordem), 'modo': self.modo}
        for ordem, lista in enumerate(self.correcoes, start=1):
            for dof, serie in enumerate(lista):
                sufixo = "" if self.n_dof == 1 else f"_{dof + 1}"
                linhas[f"{nome_correcao}{ordem}{sufixo}"] = serie.formatar()
        for ordem, constante in enumerate(self.constantes, start=1):
            linhas[f"C{ordem}"] = constante.formatar()
        linhas['relacao_frequencia'] = self.relacao.formatar()
        return linhas
