"""
Exceções do domínio de normalização de séries de Poisson
"""

from typing import Optional, Sequence


class ErroNormalizacao(Exception):
    """Erro base de todas as construções perturbativas"""


class ErroDimensao(ErroNormalizacao, ValueError):
    """Séries ou vetores com número de graus de liberdade incompatível"""


class ErroSimboloNaoLigado(ErroNormalizacao):
    """Avaliação numérica com símbolo sem valor atribuído"""


class ErroPequenoDivisor(ErroNormalizacao):
    """Divisor k·ω abaixo da tolerância da guarda"""

    def __init__(self, onda: Sequence[int], divisor: float, minimo: float):
        self.onda = tuple(onda)
        self.divisor = divisor
        self.minimo = minimo
        super().__init__(
            f"Pequeno divisor para k={list(self.onda)}: |k·ω|={abs(divisor):.3e} < {minimo:.3e}"
        )


class ErroOndaExcedida(ErroNormalizacao):
    """Vetor de onda acima do limite configurado na guarda"""

    def __init__(self, onda: Sequence[int], limite: int):
        self.onda = tuple(onda)
        self.limite = limite
        super().__init__(f"Onda k={list(self.onda)} excede o limite |k| <= {limite}")


class ErroTermoSecular(ErroNormalizacao):
    """Média angular não nula onde nenhuma é permitida"""


class ErroContraTermo(ErroNormalizacao):
    """Contra-termo ausente ou frequência ω₀ fora do termo linear"""


class ErroConvergencia(ErroNormalizacao):
    """Inversão numérica sem convergência"""

    def __init__(self, mensagem: str, intervalo: Optional[tuple] = None, iteracoes: Optional[int] = None):
        self.intervalo = intervalo
        self.iteracoes = iteracoes
        detalhes = []
        if intervalo is not None:
            detalhes.append(f"intervalo=[{intervalo[0]:.6g}, {intervalo[1]:.6g}]")
        if iteracoes is not None:
            detalhes.append(f"iteracoes={iteracoes}")
        sufixo = f" ({', '.join(detalhes)})" if detalhes else ""
        super().__init__(f"{mensagem}{sufixo}")


class ErroIntegracao(ErroNormalizacao):
    """Falha do integrador numérico"""


class ErroModelo(ErroNormalizacao, ValueError):
    """Modelo de oscilador inválido"""
