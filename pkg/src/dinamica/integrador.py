"""
Integração numérica de referência das equações de Hamilton
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np
from scipy.integrate import solve_ivp

from src.algebra.erros import ErroIntegracao
from src.algebra.serie_poisson import SeriePoisson
from src.hamiltonianos.modelos import ModeloOscilador

logger = logging.getLogger(__name__)

TOLERANCIA_MINIMA = 100 * np.finfo(float).eps


@dataclass
class TrajetoriaNumerica:
    """Amostras (q, J) de uma órbita; x e p cartesianos quando a integração foi cartesiana"""

    t: np.ndarray
    q: np.ndarray
    J: np.ndarray
    x: Optional[np.ndarray] = None
    p: Optional[np.ndarray] = None

    @property
    def n_dof(self) -> int:
        return self.q.shape[0]

    def energia(self, modelo: ModeloOscilador, eps: float, omega0: Optional[Sequence[float]] = None) -> np.ndarray:
        """Hamiltoniano cartesiano ao longo da órbita"""
        if self.x is None or self.p is None:
            x = np.sqrt(2.0 * self.J) * np.sin(self.q)
            p = np.sqrt(2.0 * self.J) * np.cos(self.q)
        else:
            x, p = self.x, self.p
        return np.array([modelo.hamiltoniano_cartesiano(x[:, i], p[:, i], eps, omega0) for i in range(len(self.t))])


def _grade(t_max: float, amostras: int, t_eval: Optional[Sequence[float]]) -> np.ndarray:
    if t_eval is not None:
        return np.asarray(t_eval, dtype=float)
    if t_max <= 0 or amostras < 2:
        raise ValueError(f"Janela de integração inválida: t_max={t_max}, amostras={amostras}")
    return np.linspace(0.0, t_max, amostras)


def _resolver(campo, y0: np.ndarray, t: np.ndarray, metodo: str, rtol: float, atol: float):
    solucao = solve_ivp(campo, (float(t[0]), float(t[-1])), y0, method=metodo, t_eval=t, rtol=rtol, atol=atol)
    if not solucao.success:
        raise ErroIntegracao(f"Falha na integração ({metodo}): {solucao.message}")
    logger.debug(f"Integração {metodo}: {solucao.nfev} avaliações do campo")
    return solucao


def integrar_hamilton(sistema: Union[ModeloOscilador, SeriePoisson], eps: float, j0: Sequence[float],
                      q0: Optional[Sequence[float]] = None, t_max: float = 100.0, amostras: int = 2000,
                      t_eval: Optional[Sequence[float]] = None, omega0: Optional[Sequence[float]] = None,
                      rtol: float = 1e-12, atol: float = 1e-14, metodo: str = 'RK45') -> TrajetoriaNumerica:
    """
    Integra as equações de movimento exatas a partir de (q0, J₀)

    Args:
        sistema: Modelo cartesiano ou Hamiltoniano em ação-ângulo (J na posição de J₀)
        eps: Valor de ε
        j0: Ação inicial por grau de liberdade
        q0: Ângulo inicial (padrão 0)
        t_max: Fim da janela
        amostras: Número de amostras uniformes
        t_eval: Instantes explícitos (sobrepõe t_max/amostras)
        omega0: Frequências não perturbadas numéricas
        rtol: Tolerância relativa
        atol: Tolerância absoluta
        metodo: Método do solve_ivp

    Returns:
        TrajetoriaNumerica
    """
    if rtol < TOLERANCIA_MINIMA:
        raise ValueError(f"Tolerância relativa {rtol} abaixo de 100·eps da máquina")
    t = _grade(t_max, amostras, t_eval)
    j0 = np.atleast_1d(np.asarray(j0, dtype=float))
    n = len(j0)
    q0 = np.zeros(n) if q0 is None else np.atleast_1d(np.asarray(q0, dtype=float))

    if isinstance(sistema, ModeloOscilador):
        if sistema.n_dof != n:
            raise ValueError(f"J₀ com {n} componentes para modelo com n_dof={sistema.n_dof}")
        raio = np.sqrt(2.0 * j0)
        y0 = np.concatenate([raio * np.sin(q0), raio * np.cos(q0)])
        solucao = _resolver(sistema.campo_vetorial(eps, omega0), y0, t, metodo, rtol, atol)
        x, p = solucao.y[:n], solucao.y[n:]
        q = np.unwrap(np.arctan2(x, p), axis=1)
        J = (x ** 2 + p ** 2) / 2.0
        return TrajetoriaNumerica(solucao.t, q, J, x, p)

    ligacoes: Dict[str, Any] = {'eps': eps}
    if omega0 is not None:
        ligacoes['omega0'] = list(np.atleast_1d(omega0))
    dq = [sistema.derivada_j0(j).compilar(ligacoes) for j in range(n)]
    dJ = [sistema.derivada_q(j).compilar(ligacoes) for j in range(n)]

    def campo(_t, y):
        q, J = y[:n], y[n:]
        if np.any(J <= 0.0):
            raise ErroIntegracao("Ação não positiva na integração em ação-ângulo")
        return np.concatenate([[f(q, J) for f in dq], [-f(q, J) for f in dJ]])

    solucao = _resolver(campo, np.concatenate([q0, j0]), t, metodo, rtol, atol)
    return TrajetoriaNumerica(solucao.t, solucao.y[:n], solucao.y[n:])
