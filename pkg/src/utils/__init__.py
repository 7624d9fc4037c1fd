"""
Inicialização do módulo de utilitários
"""

from .validador_parametros import ValidadorParametros

__all__ = ['ValidadorParametros']
