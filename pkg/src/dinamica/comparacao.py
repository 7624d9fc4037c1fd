"""
Comparação entre as séries de Lindstedt B e K e a integração numérica
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.stats import linregress
from tqdm import tqdm

from src.algebra.erros import ErroDimensao
from src.dinamica.inversao import MapaFrequencia, inverter_mapa_frequencia
from src.dinamica.integrador import integrar_hamilton
from src.hamiltonianos.modelos import ModeloOscilador
from src.hamiltonianos.preparacao import para_acao_angulo
from src.lindstedt.construcao import executar_lindstedt

logger = logging.getLogger(__name__)

CASOS_PADRAO: List[Tuple[float, float, float]] = [(1.0, 1.0, 1.002), (1.0, 1.0, 1.02), (1.0, 1.0, 1.2)]


def ajuste_linear_r2(t: np.ndarray, y: np.ndarray) -> float:
    """Coeficiente de determinação do ajuste y ≈ a + b·t"""
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.ptp(y) == 0.0:
        return 1.0
    return float(linregress(t, y).rvalue ** 2)


@dataclass
class CurvaErro:
    """|q_analítico(t) - q_numérico(t)| por esquema, com os parâmetros do caso"""

    t: np.ndarray
    erros: Dict[str, np.ndarray]
    metadados: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if np.any(np.diff(self.t) <= 0):
            raise ValueError("Instantes da curva de erro devem ser estritamente crescentes")
        for nome, erro in self.erros.items():
            if np.any(erro < 0):
                raise ValueError(f"Erro negativo na curva {nome}")

    def erro_maximo(self, esquema: str) -> float:
        return float(np.max(self.erros[esquema]))

    @property
    def lacuna_log10(self) -> float:
        """log10(max erro B / max erro K)"""
        return float(np.log10(self.erro_maximo('B') / max(self.erro_maximo('K'), np.finfo(float).tiny)))

    def r2(self, esquema: str, fracao_transiente: float = 0.1) -> float:
        """R² do ajuste linear após descartar o transiente inicial"""
        inicio = fracao_transiente * self.t[-1]
        mascara = self.t >= inicio
        return ajuste_linear_r2(self.t[mascara], self.erros[esquema][mascara])

    def para_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame({
            't': self.t,
            'err_scheme_B': self.erros['B'],
            'err_scheme_K': self.erros['K'],
        })

    def resumo(self) -> Dict[str, float]:
        dados = dict(self.metadados)
        dados.update({
            'max_err_B': self.erro_maximo('B'),
            'max_err_K': self.erro_maximo('K'),
            'gap_log10': self.lacuna_log10,
            'r2_B': self.r2('B'),
            'r2_K': self.r2('K'),
        })
        return dados


def comparar_erros(modelo: ModeloOscilador, casos: Optional[Sequence[Tuple[float, float, float]]] = None,
                   ordem: int = 4, t_max: float = 100.0, amostras: int = 2000, rtol: float = 1e-12,
                   atol: float = 1e-14, metodo_inversao: str = 'serie', progresso: bool = False) -> List[CurvaErro]:
    """
    Para cada caso (ε, ω₀, ω): J₀ pela inversão do mapa K, séries B e K de ordem R,
    integração numérica a partir de (q = 0, J = J₀) e curvas |Δq(t)|

    Args:
        modelo: Modelo de um grau de liberdade
        casos: Lista de (ε, ω₀, ω); padrão os três casos de referência
        ordem: Ordem R das séries
        t_max: Fim da janela
        amostras: Número de amostras
        rtol: Tolerância relativa do integrador
        atol: Tolerância absoluta do integrador
        metodo_inversao: 'serie' ou 'newton'
        progresso: Exibe barra de progresso por caso

    Returns:
        Lista de CurvaErro, uma por caso
    """
    if modelo.n_dof != 1:
        raise ErroDimensao("Comparação de erros implementada para um grau de liberdade")
    casos = list(casos) if casos is not None else list(CASOS_PADRAO)
    H = para_acao_angulo(modelo)
    solucao_B = executar_lindstedt(H, 'B', ordem).solucao()
    solucao_K = executar_lindstedt(H, 'K', ordem).solucao()
    t = np.linspace(0.0, t_max, amostras)

    curvas = []
    for eps, omega0, omega in tqdm(casos, desc="Casos de comparação", unit="caso", disable=not progresso):
        mapa = MapaFrequencia(solucao_K.relacao, eps, omega0)
        j0 = inverter_mapa_frequencia(mapa, omega - omega0, metodo=metodo_inversao)
        omega_B = float(solucao_B.relacao.resolver_omega([j0], eps, [omega0])[0])

        numerica = integrar_hamilton(modelo, eps, [j0], t_eval=t, omega0=[omega0], rtol=rtol, atol=atol)
        q_B = solucao_B.q().avaliar(t, eps, [j0], [omega_B], [omega0])
        q_K = solucao_K.q().avaliar(t, eps, [j0], [omega], [omega0])
        curva = CurvaErro(
            t,
            {'B': np.abs(q_B - numerica.q[0]), 'K': np.abs(q_K - numerica.q[0])},
            {'eps': eps, 'omega0': omega0, 'omega': omega, 'omega_B': omega_B, 'J0': j0, 'ordem': ordem},
        )
        logger.info(f"Caso ω={omega}: J₀={j0:.7g}, max|Δq| B={curva.erro_maximo('B'):.3e}, "
                    f"K={curva.erro_maximo('K'):.3e}, lacuna log10={curva.lacuna_log10:.2f}")
        curvas.append(curva)
    return curvas
