"""
Inicialização do módulo de dinâmica: inversão, integração e comparação
"""

from .comparacao import CASOS_PADRAO, CurvaErro, ajuste_linear_r2, comparar_erros
from .integrador import TrajetoriaNumerica, integrar_hamilton
from .inversao import MapaFrequencia, inverter_mapa_frequencia
from .residuo import residuo_equacoes_movimento

__all__ = [
    'CASOS_PADRAO',
    'CurvaErro',
    'ajuste_linear_r2',
    'comparar_erros',
    'TrajetoriaNumerica',
    'integrar_hamilton',
    'MapaFrequencia',
    'inverter_mapa_frequencia',
    'residuo_equacoes_movimento',
]
