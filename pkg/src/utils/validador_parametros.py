"""
Módulo para leitura e validação de parâmetros numéricos da linha de comando
"""

import math
import re
import logging
from typing import Dict, Any, List, Tuple, Optional

logger = logging.getLogger(__name__)

# Separadores aceitos em vetores: "1,0.618", "1;0.618" ou "1 0.618"
PADRAO_SEPARADOR = r'[,;\s]+'


class ValidadorParametros:
    """Classe para validação dos parâmetros de uma execução antes da normalização"""

    @staticmethod
    def ler_vetor(texto: str) -> List[float]:
        """
        Converte um texto com valores separados em lista de floats

        Args:
            texto: Ex.: "1,0.618"

        Returns:
            Lista de valores

        Raises:
            ValueError: Texto vazio ou com valor não numérico
        """
        partes = [p for p in re.split(PADRAO_SEPARADOR, texto.strip()) if p]
        if not partes:
            raise ValueError("vetor vazio")
        try:
            return [float(p) for p in partes]
        except ValueError as e:
            raise ValueError(f"vetor inválido: {texto!r}") from e

    @staticmethod
    def validar_ordem(ordem: Optional[int]) -> bool:
        return ordem is None or (isinstance(ordem, int) and ordem >= 1)

    @staticmethod
    def validar_eps(eps: Optional[float]) -> bool:
        """ε precisa ser finito e não negativo"""
        return eps is None or (math.isfinite(eps) and eps >= 0.0)

    @staticmethod
    def validar_frequencias(valores: Optional[List[float]]) -> bool:
        """
        Frequências devem ser finitas e positivas

        Args:
            valores: Lista de frequências ou None

        Returns:
            True se válidas ou ausentes
        """
        if valores is None:
            return True
        return all(math.isfinite(v) and v > 0.0 for v in valores)

    @staticmethod
    def validar_acoes(valores: Optional[List[float]]) -> bool:
        if valores is None:
            return True
        return all(math.isfinite(v) and v > 0.0 for v in valores)

    @classmethod
    def validar_execucao(cls, dados: Dict[str, Any]) -> Tuple[bool, List[str]]:
        """
        Valida os parâmetros escalares de uma execução

        Args:
            dados: Dicionário de argumentos da linha de comando

        Returns:
            Tupla com (sucesso, lista de mensagens de erro)
        """
        erros = []

        ordem = dados.get('order')
        if not cls.validar_ordem(ordem):
            erros.append(f"Ordem inválida: {ordem}")

        eps = dados.get('eps')
        if not cls.validar_eps(eps):
            erros.append(f"ε inválido: {eps}")

        for chave, nome in (('omega0', 'ω₀'), ('omega', 'ω')):
            valores = dados.get(chave)
            if not cls.validar_frequencias(valores):
                erros.append(f"{nome} inválido: {valores}")

        j0 = dados.get('j0')
        if not cls.validar_acoes(j0):
            erros.append(f"J₀ inválido: {j0}")

        t_max = dados.get('t_max')
        if t_max is not None and not (math.isfinite(t_max) and t_max > 0.0):
            erros.append(f"t_max inválido: {t_max}")

        amostras = dados.get('samples')
        if amostras is not None and amostras < 2:
            erros.append(f"Número de amostras inválido: {amostras}")

        if erros:
            logger.debug(f"Parâmetros rejeitados: {erros}")
        return (len(erros) == 0, erros)
