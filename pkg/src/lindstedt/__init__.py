"""
Inicialização do módulo de séries de Lindstedt
"""

from .construcao import (
    EstadoLindstedt,
    ExpansorTaylor,
    executar_lindstedt,
    extrair_secular,
    integrar_trig,
)

__all__ = [
    'EstadoLindstedt',
    'ExpansorTaylor',
    'executar_lindstedt',
    'extrair_secular',
    'integrar_trig',
]
