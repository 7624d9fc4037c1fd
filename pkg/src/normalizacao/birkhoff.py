"""
Forma normal de Birkhoff com constantes K e S fixando a condição inicial
"""

import logging
from typing import List, Optional, Tuple

from src.algebra.serie_poisson import SeriePoisson
from src.hamiltonianos.preparacao import HamiltonianoPreparado
from src.normalizacao.guarda import GuardaDivisores
from src.normalizacao.motor_lie import FuncaoGeradora, gerador_misto, transformada_lie, verificar_nula
from src.normalizacao.resultado import RelacaoFrequencia, ResultadoFormaNormal

logger = logging.getLogger(__name__)


def birkhoff_passo(H_anterior: SeriePoisson, n: int, guarda: GuardaDivisores,
                   corte_eps: int) -> Tuple[SeriePoisson, FuncaoGeradora, List[SeriePoisson], SeriePoisson]:
    """
    Passo n: elimina toda a dependência angular na ordem ε^n

    Returns:
        (H^(n), gerador χ^(n), correções de frequência ω_n por grau de liberdade, constante C_n)
    """
    h_n = H_anterior.parte_ordem_eps(n).sem_eps()
    gerador, media = gerador_misto(h_n, guarda, n)
    constante = media.parte_grau_p(0) - guarda.produto_omega(gerador.K)
    H = transformada_lie(H_anterior, gerador, corte_eps)

    bloco = H.parte_ordem_eps(n)
    verificar_nula(bloco.parte_oscilante(), f"Birkhoff passo {n}: termos angulares restantes")
    frequencias = [bloco.media_angular().coeficiente_momento(j).sem_eps() for j in range(H.n_dof)]
    logger.debug(f"Birkhoff passo {n}: gerador com {len(gerador.serie)} termos, H com {len(H)} termos")
    return H, gerador, frequencias, constante


def normalizar_birkhoff(preparado: HamiltonianoPreparado, ordem: int,
                        guarda: Optional[GuardaDivisores] = None,
                        corte_eps: Optional[int] = None) -> ResultadoFormaNormal:
    """
    Forma normal de Birkhoff até a ordem R, com divisores em ω₀

    Args:
        preparado: Hamiltoniano preparado
        ordem: Ordem R >= 1
        guarda: Guarda de divisores (padrão: ω₀ do modelo, simbólico se ausente)
        corte_eps: Corte em ε (padrão R + 1)

    Returns:
        ResultadoFormaNormal com a relação explícita ω = ω₀ + Σ ε^n ω_n
    """
    if ordem < 1:
        raise ValueError(f"Ordem deve ser >= 1: {ordem}")
    corte = corte_eps if corte_eps is not None else ordem + 1
    if corte < ordem:
        raise ValueError(f"Corte em ε ({corte}) menor que a ordem ({ordem})")
    n_dof = preparado.n_dof
    if guarda is None:
        guarda = GuardaDivisores(n_dof, preparado.omega0, simbolo='omega0')
    guarda.definir_onda_maxima_padrao(preparado.serie, ordem)

    H = preparado.serie.truncar(corte)
    geradores: List[FuncaoGeradora] = []
    correcoes: List[List[SeriePoisson]] = []
    constantes: List[SeriePoisson] = []
    for n in range(1, ordem + 1):
        logger.info(f"Birkhoff: passo {n} de {ordem}")
        H, gerador, frequencias, constante = birkhoff_passo(H, n, guarda, corte)
        geradores.append(gerador)
        correcoes.append(frequencias)
        constantes.append(constante)

    return ResultadoFormaNormal(
        metodo='birkhoff',
        ordem=ordem,
        n_dof=n_dof,
        forma_normal=H.truncar(ordem),
        resto=H.parte_ordem_eps(ordem + 1),
        geradores=geradores,
        correcoes=correcoes,
        constantes=constantes,
        relacao=RelacaoFrequencia(n_dof, correcoes, forma='explicita'),
        corte_eps=corte,
        ligacoes=guarda.ligacoes(),
        nome_modelo=preparado.nome_modelo,
        hash_modelo=preparado.hash_modelo,
    )
