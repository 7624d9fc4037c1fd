"""
Inicialização do módulo de configuração
"""

from .configuracoes import Configuracoes
