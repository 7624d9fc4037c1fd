"""
Inicialização do módulo de exportadores
"""

from .exportador_resultados import ExportadorResultados, formatar_artefato, formatar_resumo

__all__ = [
    'ExportadorResultados',
    'formatar_artefato',
    'formatar_resumo',
]
