"""
Inicialização do módulo de esquemas
"""

from .esquemas_execucao import ConfiguracaoExecucao
from .esquemas_modelo import ModeloArquivo, TermoPerturbacaoArquivo
from .esquemas_series import (
    FuncaoGeradoraEsquema,
    ManifestoEsquema,
    ResultadoEsquema,
    SerieEsquema,
    TermoEsquema,
    TrajetoriaEsquema,
)

__all__ = [
    'ConfiguracaoExecucao',
    'ModeloArquivo',
    'TermoPerturbacaoArquivo',
    'SerieEsquema',
    'TermoEsquema',
    'FuncaoGeradoraEsquema',
    'ManifestoEsquema',
    'ResultadoEsquema',
    'TrajetoriaEsquema',
]
