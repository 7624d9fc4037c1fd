"""
Algoritmo de Kolmogorov com contra-termos: frequência ω fixada a priori
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.algebra.erros import ErroContraTermo
from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import SeriePoisson
from src.hamiltonianos.preparacao import HamiltonianoPreparado
from src.normalizacao.guarda import GuardaDivisores
from src.normalizacao.motor_lie import gerador_angulo, gerador_linear, transformada_lie
from src.normalizacao.resultado import EtapaKolmogorov, RelacaoFrequencia, ResultadoFormaNormal

logger = logging.getLogger(__name__)


def _eh_linear_nao_perturbado(chave) -> bool:
    eps, _, p_exp, _, onda = chave
    return eps == 0 and sum(p_exp) == 1 and not any(onda)


def substituir_serie_frequencia(H: SeriePoisson, guarda: GuardaDivisores, ordem_max: int,
                                contra_termos: Optional[Sequence[Sequence[SeriePoisson]]] = None) -> SeriePoisson:
    """
    Troca ω₀·p por (ω + Σ ε^i a_i)·p

    Args:
        H: Hamiltoniano preparado
        guarda: Guarda cuja frequência é o ω do toro
        ordem_max: Maior ordem i com contra-termo
        contra_termos: a_i conhecidos (lista por ordem, cada uma por grau de liberdade);
            ordens sem valor recebem o símbolo a_i

    Returns:
        Hamiltoniano na forma com contra-termos
    """
    n = H.n_dof
    linear = H.filtrar(_eh_linear_nao_perturbado)
    resto = H.filtrar(lambda c: not _eh_linear_nao_perturbado(c))
    if linear.eh_zero():
        raise ErroContraTermo("Hamiltoniano sem o termo linear ω₀·p")
    if any(chave[1].omega0_exp != 0 for chave in resto.termos):
        raise ErroContraTermo("ω₀ aparece fora do termo linear ω₀·p")

    novo = resto + guarda.termo_linear()
    for ordem in range(1, ordem_max + 1):
        for dof in range(n):
            momento = SeriePoisson.momento(n, dof)
            if contra_termos is not None and ordem <= len(contra_termos):
                valor = contra_termos[ordem - 1][dof]
            else:
                valor = SeriePoisson.termo(n, 1, mono=MonomioParametros.contra_termo(n, ordem, dof))
            novo = novo + (valor * momento).deslocar_eps(ordem)
    return novo.com_cortes(H.corte_eps, H.corte_p)


def _resolver_contra_termo(H: SeriePoisson, r: int, dof: int) -> SeriePoisson:
    """a_{r,dof} que anula a média do coeficiente de p_dof na ordem r"""
    coeficiente = H.parte_ordem_eps(r).parte_grau_p(1).media_angular().coeficiente_momento(dof)
    marcador = coeficiente.filtrar(lambda c: c[1].expoente_contra(r, dof) != 0)
    if marcador.eh_zero():
        raise ErroContraTermo(f"Contra-termo a_{r} ausente (grau de liberdade {dof})")
    if len(marcador) != 1:
        raise ErroContraTermo(f"Contra-termo a_{r} aparece de forma não linear na ordem {r}")
    (_, mono, _, _, _), coef = next(iter(marcador.termos.items()))
    if mono.expoente_contra(r, dof) != 1 or not mono.sem_contra(r, dof).eh_unidade:
        raise ErroContraTermo(f"Contra-termo a_{r} com coeficiente não constante")
    demais = coeficiente.filtrar(lambda c: c[1].expoente_contra(r, dof) == 0)
    return (-demais).sem_eps().escalar(coef.inverso())


def kolmogorov_passo(H_anterior: SeriePoisson, r: int, guarda: GuardaDivisores,
                     corte_eps: int) -> Tuple[SeriePoisson, EtapaKolmogorov]:
    """
    Passo r: contra-termo, gerador χ₁ nos ângulos, gerador χ₂ linear em p

    Args:
        H_anterior: Hamiltoniano normalizado até a ordem r-1, com o símbolo a_r
        r: Ordem do passo
        guarda: Guarda de divisores em ω
        corte_eps: Corte em ε das transformadas

    Returns:
        (H^(r), registro do passo)
    """
    n = H_anterior.n_dof
    entrada = H_anterior
    contra_termos: List[SeriePoisson] = []
    for dof in range(n):
        a = _resolver_contra_termo(entrada, r, dof)
        contra_termos.append(a)
        entrada = entrada.substituir_contra_termo(r, dof, a)

    h_r0 = entrada.parte_ordem_eps(r).parte_grau_p(0).sem_eps()
    chi1, media = gerador_angulo(h_r0, guarda, r)
    constante = media - guarda.produto_omega(chi1.K)
    intermediaria = transformada_lie(entrada, chi1, corte_eps)

    h_r1 = intermediaria.parte_ordem_eps(r).parte_grau_p(1).sem_eps()
    chi2 = gerador_linear(h_r1, guarda, r)
    saida = transformada_lie(intermediaria, chi2, corte_eps)

    logger.debug(f"Kolmogorov passo {r}: χ₁ com {len(chi1.serie)} termos, χ₂ com {len(chi2.serie)} termos, "
                 f"H com {len(saida)} termos")
    etapa = EtapaKolmogorov(r, entrada, intermediaria, saida, contra_termos, chi1, chi2, constante)
    return saida, etapa


def normalizar_kolmogorov(preparado: HamiltonianoPreparado, ordem: int,
                          omega: Optional[Sequence[float]] = None,
                          guarda: Optional[GuardaDivisores] = None,
                          corte_eps: Optional[int] = None) -> ResultadoFormaNormal:
    """
    Normal forma de Kolmogorov até a ordem R

    Args:
        preparado: Hamiltoniano preparado
        ordem: Ordem R >= 1
        omega: Frequência numérica do toro (None = ω simbólico, só 1 DOF)
        guarda: Guarda de divisores (padrão: construída a partir de omega)
        corte_eps: Corte em ε (padrão R + 1, para guardar o resto)

    Returns:
        ResultadoFormaNormal com a relação implícita ω₀ = ω + Σ ε^i a_i
    """
    if ordem < 1:
        raise ValueError(f"Ordem deve ser >= 1: {ordem}")
    corte = corte_eps if corte_eps is not None else ordem + 1
    if corte < ordem:
        raise ValueError(f"Corte em ε ({corte}) menor que a ordem ({ordem})")
    n = preparado.n_dof
    if guarda is None:
        guarda = GuardaDivisores(n, omega, simbolo='omega')
    guarda.definir_onda_maxima_padrao(preparado.serie, ordem)

    H = substituir_serie_frequencia(preparado.serie.truncar(corte), guarda, ordem)
    etapas: List[EtapaKolmogorov] = []
    for r in range(1, ordem + 1):
        logger.info(f"Kolmogorov: passo {r} de {ordem}")
        H, etapa = kolmogorov_passo(H, r, guarda, corte)
        etapas.append(etapa)

    geradores = []
    for etapa in etapas:
        geradores.extend([etapa.chi1, etapa.chi2])
    correcoes = [etapa.contra_termos for etapa in etapas]
    relacao = RelacaoFrequencia(n, [[-a for a in lista] for lista in correcoes], forma='implicita')

    ligacoes = dict(guarda.ligacoes())
    if preparado.omega0 is not None:
        ligacoes['omega0'] = list(preparado.omega0)
    return ResultadoFormaNormal(
        metodo='kolmogorov',
        ordem=ordem,
        n_dof=n,
        forma_normal=H.truncar(ordem),
        resto=H.parte_ordem_eps(ordem + 1),
        geradores=geradores,
        correcoes=correcoes,
        constantes=[etapa.constante for etapa in etapas],
        relacao=relacao,
        corte_eps=corte,
        ligacoes=ligacoes,
        nome_modelo=preparado.nome_modelo,
        hash_modelo=preparado.hash_modelo,
        etapas=etapas,
    )
