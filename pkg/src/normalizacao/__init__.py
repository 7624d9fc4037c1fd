"""
Inicialização do módulo de normalização
"""

from .birkhoff import birkhoff_passo, normalizar_birkhoff
from .guarda import GuardaDivisores
from .kolmogorov import kolmogorov_passo, normalizar_kolmogorov, substituir_serie_frequencia
from .motor_lie import (
    FuncaoGeradora,
    derivada_lie,
    fixar_constante_K,
    fixar_constante_S,
    gerador_angulo,
    gerador_linear,
    gerador_misto,
    resolver_homologica_angulo,
    resolver_homologica_linear,
    resolver_homologica_mista,
    transformada_lie,
    transformar_angulo,
    transformar_coordenadas,
    transformar_momento,
)
from .recursao import bloco_fechado, verificar_recursao
from .resultado import (
    EtapaKolmogorov,
    RelacaoFrequencia,
    ResultadoFormaNormal,
    SerieTrajetoria,
    SolucaoToro,
)
from .solucao_toro import solucao_toro

__all__ = [
    'GuardaDivisores',
    'FuncaoGeradora',
    'derivada_lie',
    'transformada_lie',
    'resolver_homologica_angulo',
    'resolver_homologica_linear',
    'resolver_homologica_mista',
    'fixar_constante_K',
    'fixar_constante_S',
    'gerador_angulo',
    'gerador_linear',
    'gerador_misto',
    'transformar_coordenadas',
    'transformar_angulo',
    'transformar_momento',
    'substituir_serie_frequencia',
    'kolmogorov_passo',
    'normalizar_kolmogorov',
    'birkhoff_passo',
    'normalizar_birkhoff',
    'solucao_toro',
    'bloco_fechado',
    'verificar_recursao',
    'EtapaKolmogorov',
    'RelacaoFrequencia',
    'ResultadoFormaNormal',
    'SerieTrajetoria',
    'SolucaoToro',
]
