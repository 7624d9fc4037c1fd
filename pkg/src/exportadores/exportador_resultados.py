"""
Exportador dos artefatos de uma execução: JSON, CSV e resumo textual
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from src.algebra.serializacao import serie_de_dict
from src.dinamica.comparacao import CurvaErro
from src.esquemas.esquemas_series import ResultadoEsquema, SerieEsquema, TrajetoriaEsquema
from src.normalizacao.resultado import ResultadoFormaNormal, SolucaoToro


class ExportadorResultados:
    """
    Grava formas normais, trajetórias, curvas de erro e resumos no diretório de saída
    """

    def __init__(self, configuracoes):
        """
        Inicializa o exportador

        Args:
            configuracoes: Configurações da aplicação
        """
        self.configuracoes = configuracoes
        self.logger = logging.getLogger(__name__)

        # Garantir que o diretório de saída existe
        self.caminho_saida = Path(configuracoes.CAMINHO_SAIDA)
        self.caminho_saida.mkdir(parents=True, exist_ok=True)

    def _gravar_json(self, dados: Any, nome_arquivo: str) -> Path:
        caminho_arquivo = self.caminho_saida / nome_arquivo
        with open(caminho_arquivo, 'w', encoding='utf-8') as f:
            json.dump(dados, f, ensure_ascii=False, indent=2)
        self.logger.info(f"Arquivo gravado: {caminho_arquivo}")
        return caminho_arquivo

    def exportar_forma_normal(self, resultado: ResultadoFormaNormal, nome_arquivo: Optional[str] = None) -> Path:
        """
        Grava o resultado de uma normalização em JSON validado

        Args:
            resultado: Resultado de Birkhoff ou Kolmogorov
            nome_arquivo: Nome do arquivo (padrão: <metodo>_ordem<R>.json)

        Returns:
            Caminho do arquivo gravado
        """
        dados = resultado.para_dict()
        ResultadoEsquema.model_validate(dados)
        nome_arquivo = nome_arquivo or f"{resultado.metodo}_ordem{resultado.ordem}.json"
        return self._gravar_json(dados, nome_arquivo)

    def exportar_solucao(self, solucao: SolucaoToro, nome_arquivo: Optional[str] = None) -> Path:
        """
        Grava as séries de trajetória (ângulos e ações) em JSON

        Args:
            solucao: Solução no toro
            nome_arquivo: Nome do arquivo (padrão: trajetorias_<metodo>.json)

        Returns:
            Caminho do arquivo gravado
        """
        trajetorias = []
        for serie in solucao.angulos + solucao.acoes:
            if serie.relacao is None:
                serie.relacao = solucao.relacao
            dados = serie.para_dict()
            TrajetoriaEsquema.model_validate(dados)
            trajetorias.append(dados)
        conteudo = {
            'metodo': solucao.metodo,
            'ordem': solucao.ordem,
            'relacao_frequencia': solucao.relacao.formatar(),
            'trajetorias': trajetorias,
        }
        nome_arquivo = nome_arquivo or f"trajetorias_{solucao.metodo}.json"
        return self._gravar_json(conteudo, nome_arquivo)

    def exportar_curva(self, curva: CurvaErro, nome_arquivo: str) -> Path:
        """
        Grava a curva de erro em CSV precedido de um bloco de comentários `# chave=valor`

        Args:
            curva: Curva |Δq(t)| dos esquemas B e K
            nome_arquivo: Nome do arquivo CSV

        Returns:
            Caminho do arquivo gravado
        """
        caminho_arquivo = self.caminho_saida / nome_arquivo
        df = curva.para_dataframe()
        with open(caminho_arquivo, 'w', encoding='utf-8', newline='') as f:
            for chave, valor in curva.metadados.items():
                f.write(f"# {chave}={valor}\n")
            df.to_csv(f, index=False, float_format='%.12e')
        self.logger.info(f"Curva de erro com {len(df)} amostras gravada em {caminho_arquivo}")
        return caminho_arquivo

    def exportar_resumo(self, resumo: Dict[str, Any], nome_arquivo: str = 'resumo.txt') -> Path:
        caminho_arquivo = self.caminho_saida / nome_arquivo
        caminho_arquivo.write_text(formatar_resumo(resumo) + "\n", encoding='utf-8')
        self.logger.info(f"Resumo gravado em {caminho_arquivo}")
        return caminho_arquivo


def formatar_resumo(resumo: Dict[str, Any]) -> str:
    """Bloco chave = valor; valores com várias linhas ficam indentados"""
    linhas = []
    for chave, valor in resumo.items():
        texto = f"{valor:.10g}" if isinstance(valor, float) else str(valor)
        partes = texto.split("\n")
        linhas.append(f"{chave} = {partes[0]}")
        linhas.extend(f"    {parte}" for parte in partes[1:])
    return "\n".join(linhas)


def _formatar_serie(dados: Dict[str, Any]) -> str:
    return serie_de_dict(SerieEsquema.model_validate(dados)).formatar()


def formatar_artefato(caminho: Path) -> str:
    """
    Texto legível de um arquivo JSON gravado por este módulo ou pela serialização de séries

    Args:
        caminho: Série, resultado de normalização ou arquivo de trajetórias

    Returns:
        Texto formatado

    Raises:
        ValueError: Formato não reconhecido
    """
    with open(caminho, 'r', encoding='utf-8') as f:
        dados = json.load(f)

    if 'terms' in dados:
        return _formatar_serie(dados)

    if 'manifesto' in dados:
        resultado = ResultadoEsquema.model_validate(dados)
        manifesto = resultado.manifesto
        linhas: List[str] = [
            f"metodo = {manifesto.metodo}",
            f"ordem = {manifesto.ordem}",
            f"modo = {manifesto.modo}",
            f"hash_modelo = {manifesto.hash_modelo}",
            f"forma_normal = {_formatar_serie(dados['forma_normal'])}",
            f"resto = {_formatar_serie(dados['resto'])}",
        ]
        for i, gerador in enumerate(dados['geradores'], start=1):
            linhas.append(f"gerador_{i} ({gerador['tipo']}, passo {gerador['passo']}) = "
                          f"{_formatar_serie(gerador['serie'])}")
        linhas.append(f"relacao_frequencia = {resultado.relacao_frequencia}")
        return "\n".join(linhas)

    if 'trajetorias' in dados:
        linhas = [f"metodo = {dados['metodo']}", f"ordem = {dados['ordem']}"]
        for trajetoria in dados['trajetorias']:
            esquema = TrajetoriaEsquema.model_validate(trajetoria)
            corpo = _formatar_serie(trajetoria['serie'])
            sufixo = "" if esquema.serie.n_dof == 1 else f"_{esquema.dof + 1}"
            prefixo = f"φ{sufixo} + " if esquema.parte_secular else ""
            linhas.append(f"{esquema.coordenada}{sufixo}(φ) = {prefixo}{corpo}")
        linhas.append(f"relacao_frequencia = {dados['relacao_frequencia']}")
        return "\n".join(linhas)

    raise ValueError(f"Formato de arquivo não reconhecido: {caminho}")
