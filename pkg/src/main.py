#!/usr/bin/env python3
"""
Módulo principal da aplicação de normalização de Hamiltonianos quase integráveis
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, Any, List, Optional

from pydantic import ValidationError

# Add project root to sys.path for package imports
sys.path.insert(0, str(Path(__file__).parent.parent))

# Importar módulos
from src.algebra.erros import ErroNormalizacao
from src.configuracao.configuracoes import Configuracoes
from src.dinamica.comparacao import comparar_erros
from src.dinamica.inversao import MapaFrequencia, inverter_mapa_frequencia
from src.esquemas.esquemas_execucao import ConfiguracaoExecucao
from src.exportadores.exportador_resultados import ExportadorResultados, formatar_artefato, formatar_resumo
from src.hamiltonianos.modelos import MODELOS_PADRAO, ModeloOscilador, carregar_modelo
from src.hamiltonianos.preparacao import para_acao_angulo, preparar_hamiltoniano
from src.lindstedt.construcao import executar_lindstedt
from src.normalizacao.birkhoff import normalizar_birkhoff
from src.normalizacao.kolmogorov import normalizar_kolmogorov
from src.normalizacao.resultado import SolucaoToro
from src.normalizacao.solucao_toro import solucao_toro
from src.utils.validador_parametros import ValidadorParametros

COMANDOS = ('birkhoff', 'lindstedt', 'kolmogorov', 'invert', 'compare', 'show')

# invert e compare trabalham com a relação de frequência de ordem 4
ORDEM_PADRAO_NUMERICA = 4


def configurar_logging(nivel_log: str = "INFO"):
    """Configura o sistema de logging da aplicação e retorna o logger principal"""
    nivel_numerico = getattr(logging, nivel_log.upper(), logging.INFO)
    diretorio_logs = Path("logs")
    diretorio_logs.mkdir(exist_ok=True)
    logging.basicConfig(
        level=nivel_numerico,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(diretorio_logs / 'application.log'),
            logging.StreamHandler(sys.stderr)
        ]
    )
    return logging.getLogger("src.main")


def _adicionar_argumentos_comuns(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--model', '-m', type=str, choices=sorted(MODELOS_PADRAO),
                        help='Modelo do catálogo')
    parser.add_argument('--model-file', type=str, help='Arquivo INI com a definição do modelo')
    parser.add_argument('--order', '-r', type=int, help='Ordem R da construção')
    modo = parser.add_mutually_exclusive_group()
    modo.add_argument('--exact', dest='mode', action='store_const', const='exato',
                      help='Coeficientes exatos em ℚ[√2] (padrão)')
    modo.add_argument('--numeric', dest='mode', action='store_const', const='numerico',
                      help='Coeficientes em ponto flutuante')
    parser.add_argument('--eps', type=float, help='Valor numérico de ε')
    parser.add_argument('--omega0', type=ValidadorParametros.ler_vetor,
                        help='Frequência não perturbada ω₀ (ex.: 1,0.618)')
    parser.add_argument('--omega', type=ValidadorParametros.ler_vetor, action='append',
                        help='Frequência ω do toro; em compare pode ser repetido')
    parser.add_argument('--j0', type=ValidadorParametros.ler_vetor, help='Ação J₀')
    parser.add_argument('--out', '-o', type=str, help='Diretório de saída (padrão: data/output)')
    parser.add_argument('--log-level', '-l', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        default='WARNING', help='Nível de log (padrão: WARNING)')


def analisar_argumentos(argv: Optional[List[str]] = None) -> Dict[str, Any]:
    """Analisa argumentos da linha de comando"""
    parser = argparse.ArgumentParser(description='Formas normais e séries de Lindstedt de osciladores quase integráveis')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for nome, ajuda in (('birkhoff', 'Forma normal de Birkhoff'),
                        ('kolmogorov', 'Forma normal de Kolmogorov com contra-termos'),
                        ('lindstedt', 'Séries de Lindstedt (esquemas B e K)'),
                        ('invert', 'Inverte o mapa de frequência: J₀ a partir de ω'),
                        ('compare', 'Erros das séries B e K contra a integração numérica')):
        sub = subparsers.add_parser(nome, help=ajuda)
        _adicionar_argumentos_comuns(sub)
        if nome == 'lindstedt':
            sub.add_argument('--scheme', choices=['b', 'k'], type=str.lower, default='k',
                             help='Esquema de Lindstedt (padrão: k)')
        if nome in ('invert', 'compare'):
            sub.add_argument('--inversion', choices=['serie', 'newton'],
                             help='Método de inversão do mapa de frequência')
        if nome == 'compare':
            sub.add_argument('--t-max', type=float, help='Fim da janela de tempo')
            sub.add_argument('--samples', type=int, help='Número de amostras')
            sub.add_argument('--rtol', type=float, help='Tolerância relativa do integrador')

    show = subparsers.add_parser('show', help='Exibe uma série ou resultado gravado')
    show.add_argument('arquivo', type=str, help='Arquivo JSON')
    show.add_argument('--log-level', '-l', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], default='WARNING')

    args = vars(parser.parse_args(argv))

    # --omega repetido: lista de casos em compare, último valor nos demais comandos
    omegas = args.get('omega')
    if omegas:
        if args['command'] == 'compare':
            args['omega'] = [w for vetor in omegas for w in vetor]
        else:
            args['omega'] = omegas[-1]
    return args


def _montar_execucao(args: Dict[str, Any], modelo: ModeloOscilador,
                     configuracoes: Configuracoes) -> ConfiguracaoExecucao:
    comando = args['command']
    metodo = f"lindstedt-{args['scheme']}" if comando == 'lindstedt' else comando
    ordem = args.get('order')
    if ordem is None:
        ordem = ORDEM_PADRAO_NUMERICA if comando in ('invert', 'compare') else configuracoes.CONFIG_NORMALIZACAO['ordem']
    omega0 = args.get('omega0')
    if omega0 is None and modelo.omega0 is not None:
        omega0 = list(modelo.omega0)
    return ConfiguracaoExecucao(
        modelo=args.get('model'),
        arquivo_modelo=args.get('model_file'),
        n_dof=modelo.n_dof,
        metodo=metodo,
        ordem=ordem,
        modo=configuracoes.CONFIG_NORMALIZACAO['modo'],
        eps=args.get('eps'),
        omega0=omega0,
        omega=args.get('omega'),
        j0=args.get('j0'),
        saida=configuracoes.CAMINHO_SAIDA,
        t_max=configuracoes.CONFIG_INTEGRACAO['t_max'],
        amostras=configuracoes.CONFIG_INTEGRACAO['amostras'],
        inversao=configuracoes.CONFIG_INVERSAO['metodo'],
    )


def _resolver_arquivo_modelo(nome: Optional[str], configuracoes: Configuracoes) -> Optional[Path]:
    """Caminho do arquivo de modelo; nomes relativos inexistentes são procurados em CAMINHO_MODELOS"""
    if not nome:
        return None
    caminho = Path(nome)
    if not caminho.exists() and not caminho.is_absolute():
        alternativo = Path(configuracoes.CAMINHO_MODELOS) / caminho
        if alternativo.exists():
            return alternativo
    return caminho


def _resumo_solucao(resumo: Dict[str, Any], solucao: SolucaoToro) -> None:
    for serie in solucao.angulos + solucao.acoes:
        sufixo = "" if solucao.n_dof == 1 else f"_{serie.dof + 1}"
        resumo[f"{serie.coordenada}{sufixo}"] = serie.formatar()


def executar_forma_normal(execucao: ConfiguracaoExecucao, modelo: ModeloOscilador,
                          configuracoes: Configuracoes, exportador: ExportadorResultados) -> Dict[str, Any]:
    """Birkhoff ou Kolmogorov: forma normal, solução no toro e artefatos"""
    if execucao.metodo == 'birkhoff' and execucao.omega0 is not None:
        modelo = modelo.com_omega0(execucao.omega0)
    preparado = preparar_hamiltoniano(
        modelo, execucao.ordem, execucao.modo,
        manter_constantes=configuracoes.CONFIG_NORMALIZACAO['manter_constantes'],
    )
    if execucao.metodo == 'birkhoff':
        resultado = normalizar_birkhoff(preparado, execucao.ordem)
    else:
        resultado = normalizar_kolmogorov(preparado, execucao.ordem, omega=execucao.omega)
    solucao = solucao_toro(resultado)
    exportador.exportar_forma_normal(resultado)
    exportador.exportar_solucao(solucao)

    resumo: Dict[str, Any] = dict(resultado.resumo())
    _resumo_solucao(resumo, solucao)
    if execucao.eps is not None and execucao.j0 is not None:
        if execucao.metodo == 'birkhoff' and execucao.omega0 is not None:
            omega = resultado.relacao.resolver_omega(execucao.j0, execucao.eps, execucao.omega0)
            resumo['omega'] = ", ".join(f"{w:.12g}" for w in omega)
        elif execucao.metodo == 'kolmogorov' and execucao.omega is not None:
            desvio = resultado.relacao.desvio(execucao.j0, execucao.eps, omega=execucao.omega)
            resumo['omega0'] = ", ".join(f"{w - d:.12g}" for w, d in zip(execucao.omega, desvio))
    return resumo


def executar_series_lindstedt(execucao: ConfiguracaoExecucao, modelo: ModeloOscilador,
                              exportador: ExportadorResultados, progresso: bool) -> Dict[str, Any]:
    """Séries de Lindstedt no esquema B ou K"""
    H = para_acao_angulo(modelo)
    if execucao.modo == 'numerico':
        H = H.para_numerico()
    esquema = execucao.esquema_lindstedt
    estado = executar_lindstedt(
        H, esquema, execucao.ordem,
        omega=execucao.omega if esquema == 'K' else None,
        omega0=execucao.omega0 if esquema == 'B' else None,
        progresso=progresso,
    )
    solucao = estado.solucao()
    exportador.exportar_solucao(solucao)

    resumo: Dict[str, Any] = {'metodo': execucao.metodo, 'modelo': modelo.nome,
                              'ordem': str(execucao.ordem), 'modo': execucao.modo}
    for ordem, lista in enumerate(estado.contra_termos, start=1):
        for dof, a in enumerate(lista):
            sufixo = "" if estado.n_dof == 1 else f"_{dof + 1}"
            resumo[f"a{ordem}{sufixo}"] = a.formatar()
    _resumo_solucao(resumo, solucao)
    resumo['relacao_frequencia'] = solucao.relacao.formatar()
    return resumo


def executar_inversao(execucao: ConfiguracaoExecucao, modelo: ModeloOscilador,
                      configuracoes: Configuracoes) -> Dict[str, Any]:
    """J₀ do toro com frequência ω pela relação de Kolmogorov/Lindstedt K"""
    estado = executar_lindstedt(para_acao_angulo(modelo), 'K', execucao.ordem)
    omega0, omega = execucao.omega0[0], execucao.omega[0]
    mapa = MapaFrequencia(estado.relacao, execucao.eps, omega0)
    j0 = inverter_mapa_frequencia(
        mapa, omega - omega0, metodo=execucao.inversao,
        tolerancia=configuracoes.CONFIG_INVERSAO['tolerancia'],
        max_iteracoes=configuracoes.CONFIG_INVERSAO['max_iteracoes'],
    )
    return {
        'metodo': 'invert',
        'modelo': modelo.nome,
        'ordem': str(execucao.ordem),
        'inversao': execucao.inversao,
        'eps': execucao.eps,
        'omega0': omega0,
        'omega': omega,
        'J0': j0,
        'residuo': mapa.avaliar(j0, omega - omega0) - (omega - omega0),
        'relacao_frequencia': estado.relacao.formatar(),
    }


def executar_comparacao(execucao: ConfiguracaoExecucao, modelo: ModeloOscilador, configuracoes: Configuracoes,
                        exportador: ExportadorResultados, progresso: bool) -> Dict[str, Any]:
    """Curvas |Δq(t)| dos esquemas B e K contra a integração numérica"""
    if execucao.omega:
        eps = execucao.eps if execucao.eps is not None else 1.0
        omega0 = execucao.omega0[0] if execucao.omega0 else 1.0
        casos = [(eps, omega0, w) for w in execucao.omega]
    else:
        casos = list(configuracoes.CASOS_COMPARACAO)
    curvas = comparar_erros(
        modelo, casos, ordem=execucao.ordem, t_max=execucao.t_max, amostras=execucao.amostras,
        rtol=configuracoes.CONFIG_INTEGRACAO['rtol'], atol=configuracoes.CONFIG_INTEGRACAO['atol'],
        metodo_inversao=execucao.inversao, progresso=progresso,
    )
    resumo: Dict[str, Any] = {'metodo': 'compare', 'modelo': modelo.nome, 'ordem': str(execucao.ordem)}
    for i, curva in enumerate(curvas, start=1):
        exportador.exportar_curva(curva, f"compare_caso{i}.csv")
        for chave, valor in curva.resumo().items():
            resumo[f"caso{i}_{chave}"] = valor
    return resumo


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal da aplicação"""
    # Analisar argumentos e configurar logging
    args = analisar_argumentos(argv)
    logger = configurar_logging(args.get('log_level', 'WARNING'))
    progresso = sys.stderr.isatty() and logger.getEffectiveLevel() <= logging.INFO

    # Validação de argumentos, modelo e configuração da execução: saída 2
    try:
        if args['command'] == 'show':
            print(formatar_artefato(Path(args['arquivo'])))
            return 0

        logger.info(f"Iniciando comando {args['command']}")

        # Inicializar configurações
        configuracoes = Configuracoes()
        configuracoes.atualizar_de_args(args)

        valido, erros = ValidadorParametros.validar_execucao(args)
        if not valido:
            print(f"Erro de validação: {erros[0]}", file=sys.stderr)
            return 2

        caminho_modelo = _resolver_arquivo_modelo(args.get('model_file'), configuracoes)
        if not args.get('model') and caminho_modelo is None:
            print("Erro de validação: informe --model ou --model-file", file=sys.stderr)
            return 2
        modelo = carregar_modelo(args.get('model'), caminho_modelo)
        execucao = _montar_execucao(args, modelo, configuracoes)
        exportador = ExportadorResultados(configuracoes)

    except ValidationError as e:
        erro = e.errors()[0]
        print(f"Erro de validação: {erro['msg']}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"Erro de validação: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error(f"Erro durante a preparação: {e}", exc_info=True)
        return 1

    # Cálculo: falhas do motor saem com 1
    try:
        if execucao.metodo in ('birkhoff', 'kolmogorov'):
            resumo = executar_forma_normal(execucao, modelo, configuracoes, exportador)
        elif execucao.metodo.startswith('lindstedt'):
            resumo = executar_series_lindstedt(execucao, modelo, exportador, progresso)
        elif execucao.metodo == 'invert':
            resumo = executar_inversao(execucao, modelo, configuracoes)
        else:
            resumo = executar_comparacao(execucao, modelo, configuracoes, exportador, progresso)

        print(formatar_resumo(resumo))
        exportador.exportar_resumo(resumo)
        logger.info(f"Comando {args['command']} concluído")
        return 0

    except ErroNormalizacao as e:
        print(f"Erro: {e}", file=sys.stderr)
        logger.error(f"Falha no cálculo: {e}")
        return 1
    except ValueError as e:
        print(f"Erro no cálculo: {e}", file=sys.stderr)
        logger.error(f"Pré-condição violada no cálculo: {e}")
        return 1
    except Exception as e:
        logger.error(f"Erro durante a execução: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
