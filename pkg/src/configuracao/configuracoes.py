"""
Definições e configurações globais da aplicação
"""

import os
from pathlib import Path
from typing import Dict, Any, List, Tuple
from dotenv import load_dotenv
import configparser
import logging

# Carregar variáveis de ambiente do arquivo .env
load_dotenv()


class Configuracoes:
    """Classe de configurações da aplicação"""

    def __init__(self):
        # Definir o diretório raiz do projeto
        self.RAIZ_PROJETO = Path(__file__).parent.parent.parent.absolute()

        # Diretórios padrão
        self.DIR_DADOS = self.RAIZ_PROJETO / 'data'
        self.CAMINHO_SAIDA = self.DIR_DADOS / 'output'
        self.CAMINHO_MODELOS = self.DIR_DADOS / 'modelos'
        self.CAMINHO_LOGGING_CONF = self.RAIZ_PROJETO / 'src' / 'configuracao' / 'logging.conf'

        # Configurações da normalização
        self.CONFIG_NORMALIZACAO = {
            'ordem': 2,
            'modo': 'exato',  # 'exato' ou 'numerico'
            'divisor_minimo_relativo': 1e-12,
            'limiar_zero': 1e-14,
            'manter_constantes': False,
        }

        # Integração numérica de referência
        self.CONFIG_INTEGRACAO = {
            'metodo': 'RK45',
            'rtol': 1e-12,
            'atol': 1e-14,
            't_max': 100.0,
            'amostras': 2000,
        }

        # Inversão do mapa de frequência
        self.CONFIG_INVERSAO = {
            'metodo': 'serie',  # 'serie' ou 'newton'
            'tolerancia': 1e-12,
            'max_iteracoes': 100,
        }

        # Casos (ε, ω₀, ω) do comando compare
        self.CASOS_COMPARACAO: List[Tuple[float, float, float]] = [
            (1.0, 1.0, 1.002),
            (1.0, 1.0, 1.02),
            (1.0, 1.0, 1.2),
        ]

        # Sobrescrever configurações com variáveis de ambiente
        self._carregar_de_env()
        self.logging_config = self._carregar_logging_conf()
        self.log_level = self.logging_config.get('logging', {}).get('level', 'WARNING')
        self._configurar_logging(self.log_level)

    def _carregar_de_env(self) -> None:
        """Carrega configurações das variáveis de ambiente"""
        # Diretórios
        output_path = os.getenv('NORMALIZADOR_OUTPUT_PATH')
        if output_path:
            self.CAMINHO_SAIDA = Path(output_path)

        modelos_path = os.getenv('NORMALIZADOR_MODELOS_PATH')
        if modelos_path:
            self.CAMINHO_MODELOS = Path(modelos_path)

        # Normalização
        ordem = os.getenv('NORMALIZADOR_ORDEM')
        if ordem:
            try:
                self.CONFIG_NORMALIZACAO['ordem'] = int(ordem)
            except ValueError:
                pass

        modo = os.getenv('NORMALIZADOR_MODO')
        if modo and modo.lower() in ('exato', 'numerico'):
            self.CONFIG_NORMALIZACAO['modo'] = modo.lower()

        # Integração
        for variavel, chave, tipo in (
            ('NORMALIZADOR_RTOL', 'rtol', float),
            ('NORMALIZADOR_ATOL', 'atol', float),
            ('NORMALIZADOR_T_MAX', 't_max', float),
            ('NORMALIZADOR_AMOSTRAS', 'amostras', int),
        ):
            valor = os.getenv(variavel)
            if valor:
                try:
                    self.CONFIG_INTEGRACAO[chave] = tipo(valor)
                except ValueError:
                    pass

    def _carregar_logging_conf(self) -> dict:
        """Carrega configurações do arquivo logging.conf."""
        config = configparser.ConfigParser()
        if self.CAMINHO_LOGGING_CONF.exists():
            config.read(self.CAMINHO_LOGGING_CONF)
            return {section: dict(config.items(section)) for section in config.sections()}
        return {}

    def _configurar_logging(self, level: str):
        """Configura o logging global conforme o nível informado."""
        numeric_level = getattr(logging, level.upper(), logging.WARNING)
        logging.basicConfig(level=numeric_level)

    def garantir_diretorios(self) -> None:
        """Cria os diretórios de saída se necessário"""
        self.CAMINHO_SAIDA.mkdir(parents=True, exist_ok=True)

    def atualizar_de_args(self, args: Dict[str, Any]) -> None:
        """
        Atualiza configurações a partir dos argumentos da linha de comando

        Args:
            args: Dicionário de argumentos
        """
        if args.get('out'):
            self.CAMINHO_SAIDA = Path(args['out'])

        if args.get('order') is not None:
            self.CONFIG_NORMALIZACAO['ordem'] = int(args['order'])

        if args.get('mode'):
            self.CONFIG_NORMALIZACAO['modo'] = args['mode']

        if args.get('t_max') is not None:
            self.CONFIG_INTEGRACAO['t_max'] = float(args['t_max'])

        if args.get('samples') is not None:
            self.CONFIG_INTEGRACAO['amostras'] = int(args['samples'])

        if args.get('rtol') is not None:
            self.CONFIG_INTEGRACAO['rtol'] = float(args['rtol'])

        if args.get('inversion'):
            self.CONFIG_INVERSAO['metodo'] = args['inversion']
