"""
Inicialização do módulo de Hamiltonianos
"""

from .modelos import MODELOS_PADRAO, ModeloOscilador, TermoPerturbacao, carregar_modelo, ler_arquivo_modelo
from .preparacao import (
    HamiltonianoPreparado,
    binomial_generalizado,
    ordem_expansao_necessaria,
    para_acao_angulo,
    preparar_hamiltoniano,
    termo_nao_perturbado,
    transladar_e_expandir,
)

__all__ = [
    'MODELOS_PADRAO',
    'ModeloOscilador',
    'TermoPerturbacao',
    'carregar_modelo',
    'ler_arquivo_modelo',
    'HamiltonianoPreparado',
    'binomial_generalizado',
    'ordem_expansao_necessaria',
    'para_acao_angulo',
    'preparar_hamiltoniano',
    'termo_nao_perturbado',
    'transladar_e_expandir',
]
