"""
Inicialização do módulo de álgebra de séries de Poisson
"""

from .erros import (
    ErroContraTermo,
    ErroConvergencia,
    ErroDimensao,
    ErroIntegracao,
    ErroModelo,
    ErroNormalizacao,
    ErroOndaExcedida,
    ErroPequenoDivisor,
    ErroSimboloNaoLigado,
    ErroTermoSecular,
)
from .escalar import Escalar
from .monomio import MonomioParametros
from .serie_poisson import COS, SEN, AvaliadorNumerico, SeriePoisson

__all__ = [
    'Escalar',
    'MonomioParametros',
    'SeriePoisson',
    'AvaliadorNumerico',
    'COS',
    'SEN',
    'ErroNormalizacao',
    'ErroDimensao',
    'ErroSimboloNaoLigado',
    'ErroPequenoDivisor',
    'ErroOndaExcedida',
    'ErroTermoSecular',
    'ErroContraTermo',
    'ErroConvergencia',
    'ErroIntegracao',
    'ErroModelo',
]
