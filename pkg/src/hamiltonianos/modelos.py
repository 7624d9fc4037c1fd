"""
Modelos de osciladores com perturbação polinomial em variáveis cartesianas
"""

import configparser
import hashlib
import json
import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from src.algebra.erros import ErroModelo
from src.algebra.escalar import Escalar
from src.esquemas.esquemas_modelo import ModeloArquivo

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TermoPerturbacao:
    """ε^eps · coeficiente · Π x_j^expoentes_x[j] · p_j^expoentes_p[j]"""

    eps: int
    coeficiente: Escalar
    expoentes_x: Tuple[int, ...]
    expoentes_p: Tuple[int, ...]

    @property
    def grau(self) -> int:
        return sum(self.expoentes_x) + sum(self.expoentes_p)


@dataclass
class ModeloOscilador:
    """
    Hamiltoniano Σ ω₀_j (x_j² + p_j²)/2 + Σ ε^i V_i(x, p).

    omega0 = None significa ω₀ simbólico, permitido apenas com um grau de liberdade.
    """

    nome: str
    n_dof: int
    termos: List[TermoPerturbacao]
    omega0: Optional[Tuple[float, ...]] = None
    descricao: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n_dof < 1:
            raise ErroModelo(f"Modelo {self.nome}: n_dof deve ser positivo")
        if self.omega0 is None and self.n_dof != 1:
            raise ErroModelo(f"Modelo {self.nome}: ω₀ simbólico exige n_dof = 1")
        if self.omega0 is not None:
            self.omega0 = tuple(float(w) for w in self.omega0)
            if len(self.omega0) != self.n_dof:
                raise ErroModelo(f"Modelo {self.nome}: ω₀ deve ter {self.n_dof} componentes")
        for termo in self.termos:
            if len(termo.expoentes_x) != self.n_dof or len(termo.expoentes_p) != self.n_dof:
                raise ErroModelo(f"Modelo {self.nome}: termo com dimensão incompatível")
            if termo.grau < 3:
                raise ErroModelo(f"Modelo {self.nome}: termo de grau {termo.grau} na perturbação")
            if termo.eps < 1:
                raise ErroModelo(f"Modelo {self.nome}: termo perturbativo sem potência de ε")

    @property
    def eh_simbolico(self) -> bool:
        return self.omega0 is None

    @property
    def grau_maximo(self) -> int:
        return max((t.grau for t in self.termos), default=0)

    def com_omega0(self, omega0: Sequence[float]) -> 'ModeloOscilador':
        """Cópia do modelo com ω₀ numérico"""
        return replace(self, omega0=tuple(float(w) for w in omega0))

    def para_dict(self) -> Dict:
        termos = []
        for termo in self.termos:
            c = termo.coeficiente
            coef = [str(c.a), str(c.b)] if c.eh_exato else [repr(c.valor)]
            termos.append({
                'eps': termo.eps, 'coeficiente': coef,
                'x': list(termo.expoentes_x), 'p': list(termo.expoentes_p),
            })
        return {
            'nome': self.nome,
            'n_dof': self.n_dof,
            'omega0': 'symbolic' if self.omega0 is None else list(self.omega0),
            'termos': termos,
        }

    def hash(self) -> str:
        """sha256 do JSON canônico do modelo"""
        texto = json.dumps(self.para_dict(), sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(texto.encode('utf-8')).hexdigest()

    # ------------------------------------------------------------------
    # Forma cartesiana, usada pela integração de referência
    # ------------------------------------------------------------------

    def _omega0_numerico(self, omega0: Optional[Sequence[float]]) -> np.ndarray:
        valores = omega0 if omega0 is not None else self.omega0
        if valores is None:
            raise ErroModelo(f"Modelo {self.nome}: ω₀ numérico necessário para avaliação")
        return np.asarray(valores, dtype=float).reshape(self.n_dof)

    def hamiltoniano_cartesiano(self, x: Sequence[float], p: Sequence[float], eps: float,
                                omega0: Optional[Sequence[float]] = None) -> float:
        x = np.asarray(x, dtype=float)
        p = np.asarray(p, dtype=float)
        w = self._omega0_numerico(omega0)
        valor = float(np.sum(w * (x ** 2 + p ** 2)) / 2.0)
        for termo in self.termos:
            valor += (eps ** termo.eps) * termo.coeficiente.para_float() * float(
                np.prod(x ** np.array(termo.expoentes_x)) * np.prod(p ** np.array(termo.expoentes_p)))
        return valor

    def campo_vetorial(self, eps: float, omega0: Optional[Sequence[float]] = None) -> Callable:
        """
        Campo de Hamilton em (x, p) no formato de scipy.integrate.solve_ivp

        Returns:
            Função f(t, y) com y = [x_1..x_n, p_1..p_n]
        """
        n = self.n_dof
        w = self._omega0_numerico(omega0)
        coefs = np.array([(eps ** t.eps) * t.coeficiente.para_float() for t in self.termos])
        ex = np.array([t.expoentes_x for t in self.termos], dtype=int).reshape(-1, n)
        ep = np.array([t.expoentes_p for t in self.termos], dtype=int).reshape(-1, n)

        def _derivada(base, outra, exps_base, exps_outra):
            # ∂/∂base_j de Σ c · base^a · outra^b
            grad = np.zeros(n)
            fator_outra = np.prod(outra ** exps_outra, axis=1) if len(coefs) else np.array([])
            for j in range(n):
                a = exps_base[:, j]
                mascara = a > 0
                if not mascara.any():
                    continue
                reduzidos = exps_base[mascara].copy()
                reduzidos[:, j] -= 1
                grad[j] = np.sum(coefs[mascara] * a[mascara] * np.prod(base ** reduzidos, axis=1)
                                 * fator_outra[mascara])
            return grad

        def campo(t, y):
            x, p = y[:n], y[n:]
            dx = w * p + _derivada(p, x, ep, ex)
            dp = -(w * x + _derivada(x, p, ex, ep))
            return np.concatenate([dx, dp])

        return campo


# ----------------------------------------------------------------------
# Catálogo de modelos
# ----------------------------------------------------------------------

def _termo(eps: int, coef: Fraction, x: Sequence[int], p: Sequence[int]) -> TermoPerturbacao:
    return TermoPerturbacao(eps, Escalar.exato(coef), tuple(x), tuple(p))


MODELOS_PADRAO: Dict[str, Callable[[], ModeloOscilador]] = {
    'quartic': lambda: ModeloOscilador(
        'quartic', 1, [_termo(1, Fraction(1, 4), (4,), (0,))],
        descricao="ω₀(x² + p²)/2 + ε x⁴/4"),
    'cubic': lambda: ModeloOscilador(
        'cubic', 1, [_termo(1, Fraction(-1, 3), (3,), (0,))],
        descricao="ω₀(x² + p²)/2 - ε x³/3"),
    'quintic': lambda: ModeloOscilador(
        'quintic', 1, [_termo(1, Fraction(1, 5), (5,), (0,))],
        descricao="ω₀(x² + p²)/2 + ε x⁵/5"),
    'coupled': lambda: ModeloOscilador(
        'coupled', 2,
        [
            _termo(1, Fraction(1, 4), (4, 0), (0, 0)),
            _termo(1, Fraction(1, 4), (0, 4), (0, 0)),
            _termo(1, Fraction(1, 2), (2, 2), (0, 0)),
        ],
        omega0=(1.0, (math.sqrt(5.0) - 1.0) / 2.0),
        descricao="osciladores quárticos acoplados, ω₀ = (1, (√5 - 1)/2)"),
}


def modelo_de_arquivo(esquema: ModeloArquivo) -> ModeloOscilador:
    termos = []
    for t in esquema.termos:
        racional = Fraction(t.coeficiente)
        coef = Escalar.exato(0, racional) if t.sqrt2 else Escalar.exato(racional)
        termos.append(TermoPerturbacao(t.eps, coef, tuple(t.x), tuple(t.p)))
    omega0 = esquema.omega0_numerico
    return ModeloOscilador(esquema.nome, esquema.n_dof, termos,
                           omega0=tuple(omega0) if omega0 is not None else None)


def ler_arquivo_modelo(caminho: Path) -> ModeloOscilador:
    """
    Lê um modelo de um arquivo INI

    Formato: seção [modelo] com nome, n_dof e omega0 ("symbolic" ou valores separados
    por vírgula); uma seção [termo.N] por termo com eps, coeficiente (racional),
    sqrt2 (booleano), x e p (expoentes separados por vírgula).

    Args:
        caminho: Caminho do arquivo

    Returns:
        Modelo validado
    """
    caminho = Path(caminho)
    if not caminho.exists():
        raise ErroModelo(f"Arquivo de modelo não encontrado: {caminho}")

    parser = configparser.ConfigParser()
    try:
        parser.read(caminho, encoding='utf-8')
    except configparser.Error as e:
        raise ErroModelo(f"Arquivo de modelo inválido {caminho}: {e}") from e
    if 'modelo' not in parser:
        raise ErroModelo(f"Arquivo {caminho} sem seção [modelo]")

    def _lista(texto: str) -> List[str]:
        return [v.strip() for v in texto.split(',') if v.strip()]

    secao = parser['modelo']
    omega0_texto = secao.get('omega0', 'symbolic').strip()
    dados = {
        'nome': secao.get('nome', caminho.stem),
        'n_dof': secao.get('n_dof', '1'),
        'omega0': 'symbolic' if omega0_texto == 'symbolic' else _lista(omega0_texto),
        'termos': [],
    }
    for nome_secao in parser.sections():
        if not nome_secao.startswith('termo'):
            continue
        s = parser[nome_secao]
        dados['termos'].append({
            'eps': s.get('eps', '1'),
            'coeficiente': s.get('coeficiente', '1'),
            'sqrt2': s.getboolean('sqrt2', fallback=False),
            'x': _lista(s.get('x', '')),
            'p': _lista(s.get('p', '')),
        })

    try:
        esquema = ModeloArquivo.model_validate(dados)
    except ValidationError as e:
        raise ErroModelo(f"Modelo inválido em {caminho}: {e.errors()[0]['msg']}") from e

    modelo = modelo_de_arquivo(esquema)
    logger.info(f"Modelo '{modelo.nome}' carregado de {caminho} ({len(modelo.termos)} termos)")
    return modelo


def carregar_modelo(nome: Optional[str] = None, caminho: Optional[Path] = None) -> ModeloOscilador:
    """Modelo do catálogo pelo nome ou de um arquivo"""
    if caminho is not None:
        return ler_arquivo_modelo(caminho)
    if nome not in MODELOS_PADRAO:
        raise ErroModelo(f"Modelo desconhecido: {nome}. Disponíveis: {', '.join(sorted(MODELOS_PADRAO))}")
    return MODELOS_PADRAO[nome]()
