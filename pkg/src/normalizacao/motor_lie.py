"""
Motor de Lie: equações homológicas, constantes K e S, derivadas e transformadas de Lie
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.erros import ErroTermoSecular
from src.algebra.escalar import Escalar
from src.algebra.serie_poisson import COS, SEN, Chave, SeriePoisson
from src.normalizacao.guarda import GuardaDivisores

logger = logging.getLogger(__name__)

TIPOS_GERADORA = ('angulo', 'linear', 'misto')

# Tolerância para médias residuais em modo numérico
TOLERANCIA_MEDIA_NUMERICA = 1e-10


def _constantes_nulas(n_dof: int) -> List[SeriePoisson]:
    return [SeriePoisson.zero(n_dof) for _ in range(n_dof)]


@dataclass
class FuncaoGeradora:
    """
    χ = serie + K·q + S·p, aplicada com graduação ε^grau_eps.

    `serie` guarda a parte trigonométrica (X ou χ̃₂) sem graduação ε; K e S são
    séries constantes (sem p e sem q), uma por grau de liberdade.
    """

    tipo: str
    serie: SeriePoisson
    passo: int
    grau_eps: int
    K: List[SeriePoisson] = field(default_factory=list)
    S: List[SeriePoisson] = field(default_factory=list)

    def __post_init__(self):
        if self.tipo not in TIPOS_GERADORA:
            raise ValueError(f"Tipo de função geradora inválido: {self.tipo}")
        if not self.K:
            self.K = _constantes_nulas(self.serie.n_dof)
        if not self.S:
            self.S = _constantes_nulas(self.serie.n_dof)

    @property
    def n_dof(self) -> int:
        return self.serie.n_dof

    @property
    def serie_completa(self) -> SeriePoisson:
        """serie + S·p (a parte K·q não é um termo de série de Poisson)"""
        total = self.serie
        for j, s in enumerate(self.S):
            if not s.eh_zero():
                total = total + s * SeriePoisson.momento(self.n_dof, j)
        return total

    @property
    def tem_parte_secular(self) -> bool:
        return any(not k.eh_zero() for k in self.K)

    @property
    def eh_nula(self) -> bool:
        return self.serie.eh_zero() and not self.tem_parte_secular and all(s.eh_zero() for s in self.S)

    def negada(self) -> 'FuncaoGeradora':
        """Gerador -χ, inverso de χ na transformada de Lie"""
        return FuncaoGeradora(
            self.tipo, -self.serie, self.passo, self.grau_eps,
            [-k for k in self.K], [-s for s in self.S],
        )

    def formatar(self) -> str:
        nomes_q = ["q"] if self.n_dof == 1 else [f"q{j + 1}" for j in range(self.n_dof)]
        partes = [self.serie_completa.formatar()]
        for nome, k in zip(nomes_q, self.K):
            if not k.eh_zero():
                partes.append(f"({k.formatar()})·{nome}")
        return " + ".join(partes)


def derivada_lie(f: SeriePoisson, gerador: FuncaoGeradora, graduar: bool = True) -> SeriePoisson:
    """
    L_χ f = {f, χ} com a parte secular tratada à parte: {f, K·q} = -K·∇_p f

    Args:
        f: Série
        gerador: Função geradora
        graduar: Se True, desloca o resultado por ε^grau_eps

    Returns:
        Série L_χ f
    """
    resultado = f.colchete(gerador.serie_completa)
    for j, k in enumerate(gerador.K):
        if k.eh_zero():
            continue
        derivada = f.derivada_p(j)
        if not derivada.eh_zero():
            resultado = resultado - k * derivada
    if graduar:
        resultado = resultado.deslocar_eps(gerador.grau_eps)
    return resultado


def transformada_lie(H: SeriePoisson, gerador: FuncaoGeradora, corte_eps: Optional[int] = None) -> SeriePoisson:
    """
    exp(L_{ε^r χ}) H = Σ_j (1/j!) L^j H, truncada no corte em ε

    Args:
        H: Série a transformar
        gerador: Função geradora com grau_eps r >= 1
        corte_eps: Corte em ε (padrão: o corte de H)

    Returns:
        Série transformada
    """
    r = gerador.grau_eps
    if r < 1:
        raise ValueError("Função geradora com graduação ε nula: a transformada não termina")
    corte = corte_eps if corte_eps is not None else H.corte_eps
    if corte is None:
        raise ValueError("Transformada de Lie exige um corte em ε")
    if gerador.eh_nula:
        return H.truncar(corte)

    resultado = H.truncar(corte)
    termo = resultado
    j = 1
    while True:
        base = termo.truncar(corte - r)
        if base.eh_zero():
            break
        termo = derivada_lie(base, gerador).escalar(Fraction(1, j))
        if termo.eh_zero():
            break
        resultado = resultado + termo
        j += 1
    logger.debug(f"Transformada de Lie (passo {gerador.passo}, {gerador.tipo}): {j - 1} colchetes, "
                 f"{len(resultado)} termos")
    return resultado


# ----------------------------------------------------------------------
# Equações homológicas
# ----------------------------------------------------------------------

def _resolver_termos(h: SeriePoisson, guarda: GuardaDivisores) -> SeriePoisson:
    """Solução termo a termo de ω·∇X = h - <h>: c cos -> c/(k·ω) sin, c sin -> -c/(k·ω) cos"""
    termos: List[Tuple[Chave, Escalar]] = []
    for (eps, mono, p_exp, trig, onda), coef in h.termos.items():
        if not any(onda):
            continue
        novo_coef, novo_mono = guarda.dividir(coef, mono, onda)
        if trig == COS:
            termos.append(((eps, novo_mono, p_exp, SEN, onda), novo_coef))
        else:
            termos.append(((eps, novo_mono, p_exp, COS, onda), -novo_coef))
    return SeriePoisson(h.n_dof, termos)


def verificar_nula(serie: SeriePoisson, contexto: str) -> None:
    """Levanta ErroTermoSecular se a série não for nula (com tolerância em modo numérico)"""
    if serie.eh_zero():
        return
    if serie.eh_exata:
        raise ErroTermoSecular(f"{contexto}: {serie.formatar()}")
    maior = max(abs(v.para_float()) for v in serie.termos.values())
    if maior > TOLERANCIA_MEDIA_NUMERICA:
        raise ErroTermoSecular(f"{contexto} (máximo {maior:.3e})")
    logger.debug(f"{contexto}: resíduo {maior:.3e} descartado")


def verificar_media_nula(media: SeriePoisson, contexto: str) -> None:
    verificar_nula(media, f"{contexto}: média angular não nula")


def resolver_homologica_angulo(h: SeriePoisson, guarda: GuardaDivisores) -> Tuple[SeriePoisson, SeriePoisson]:
    """
    Resolve {ω·p, X} + h = <h> para h independente de p

    Returns:
        (X, <h>)
    """
    if h.grau_p_maximo() > 0:
        raise ValueError("Equação homológica angular exige h independente de p")
    return _resolver_termos(h, guarda), h.media_angular()


def resolver_homologica_linear(h: SeriePoisson, guarda: GuardaDivisores) -> SeriePoisson:
    """
    Resolve {ω·p, χ̃₂} + h = 0 para h linear em p e de média nula

    Returns:
        χ̃₂
    """
    if any(sum(chave[2]) != 1 for chave in h.termos):
        raise ValueError("Equação homológica linear exige h de grau 1 em p")
    verificar_media_nula(h.media_angular(), "Equação homológica linear")
    return _resolver_termos(h, guarda)


def resolver_homologica_mista(h: SeriePoisson, guarda: GuardaDivisores) -> Tuple[SeriePoisson, SeriePoisson]:
    """Equação homológica de Birkhoff sobre todos os graus em p; devolve (X, <h>)"""
    return _resolver_termos(h, guarda), h.media_angular()


# ----------------------------------------------------------------------
# Constantes que fixam a condição inicial (q, p) = (0, 0)
# ----------------------------------------------------------------------

def fixar_constante_K(X: SeriePoisson) -> List[SeriePoisson]:
    """
    K_i = -∂X/∂q_i em q = 0, p = 0

    Com esse K o fluxo de X + K·q deixa a origem fixa, logo p(0) = 0.
    """
    n = X.n_dof
    zero = (0,) * n
    acumulado: List[Dict[Chave, Escalar]] = [{} for _ in range(n)]
    for (eps, mono, p_exp, trig, onda), coef in X.termos.items():
        if trig != SEN or any(p_exp):
            continue
        for i in range(n):
            if onda[i] == 0:
                continue
            chave = (eps, mono, zero, COS, zero)
            valor = coef * (-onda[i])
            anterior = acumulado[i].get(chave)
            acumulado[i][chave] = valor if anterior is None else anterior + valor
    return [SeriePoisson(n, termos) for termos in acumulado]


def fixar_constante_S(chi: SeriePoisson) -> List[SeriePoisson]:
    """
    S_i = -∂χ/∂p_i em q = 0, p = 0

    Com esse S o fluxo de χ + S·p deixa a origem fixa, logo q(0) = 0.
    """
    n = chi.n_dof
    zero = (0,) * n
    acumulado: List[Dict[Chave, Escalar]] = [{} for _ in range(n)]
    for (eps, mono, p_exp, trig, onda), coef in chi.termos.items():
        if trig != COS or sum(p_exp) != 1:
            continue
        i = p_exp.index(1)
        chave = (eps, mono, zero, COS, zero)
        anterior = acumulado[i].get(chave)
        acumulado[i][chave] = -coef if anterior is None else anterior - coef
    return [SeriePoisson(n, termos) for termos in acumulado]


def gerador_angulo(h: SeriePoisson, guarda: GuardaDivisores, passo: int) -> Tuple[FuncaoGeradora, SeriePoisson]:
    """χ₁ = X + K·q a partir do bloco h_{r,0} sem graduação"""
    X, media = resolver_homologica_angulo(h, guarda)
    gerador = FuncaoGeradora('angulo', X, passo, passo, K=fixar_constante_K(X))
    return gerador, media


def gerador_linear(h: SeriePoisson, guarda: GuardaDivisores, passo: int) -> FuncaoGeradora:
    """χ₂ = χ̃₂ + S·p a partir do bloco h_{r,1} sem graduação"""
    chi = resolver_homologica_linear(h, guarda)
    return FuncaoGeradora('linear', chi, passo, passo, S=fixar_constante_S(chi))


def gerador_misto(h: SeriePoisson, guarda: GuardaDivisores, passo: int) -> Tuple[FuncaoGeradora, SeriePoisson]:
    """χ = X + K·q + S·p de Birkhoff"""
    X, media = resolver_homologica_mista(h, guarda)
    gerador = FuncaoGeradora('misto', X, passo, passo, K=fixar_constante_K(X), S=fixar_constante_S(X))
    return gerador, media


# ----------------------------------------------------------------------
# Transformação de coordenadas
# ----------------------------------------------------------------------

def transformar_coordenadas(geradores: Sequence[FuncaoGeradora], f: SeriePoisson, corte_eps: int) -> SeriePoisson:
    """
    Aplica exp(L_{χ_R}) ... exp(L_{χ_1}) f, com o primeiro gerador mais interno

    Expressa uma função das coordenadas antigas nas coordenadas novas.
    """
    resultado = f.truncar(corte_eps)
    for gerador in geradores:
        resultado = transformada_lie(resultado, gerador, corte_eps)
    return resultado


def transformar_momento(geradores: Sequence[FuncaoGeradora], dof: int, corte_eps: int,
                        n_dof: Optional[int] = None) -> SeriePoisson:
    """p_dof antigo como série nas variáveis novas"""
    n = n_dof if n_dof is not None else (geradores[0].n_dof if geradores else 1)
    return transformar_coordenadas(geradores, SeriePoisson.momento(n, dof), corte_eps)


def _incremento_angulo(gerador: FuncaoGeradora, dof: int, corte_eps: int) -> SeriePoisson:
    """exp(L_χ) q - q = Σ_{j>=1} L^(j-1)(∂χ/∂p) / j!"""
    r = gerador.grau_eps
    g = gerador.serie_completa.derivada_p(dof).deslocar_eps(r).truncar(corte_eps)
    acumulado = g
    termo = g
    j = 2
    while not termo.eh_zero():
        base = termo.truncar(corte_eps - r)
        if base.eh_zero():
            break
        termo = derivada_lie(base, gerador).escalar(Fraction(1, j))
        acumulado = acumulado + termo
        j += 1
    return acumulado


def transformar_angulo(geradores: Sequence[FuncaoGeradora], dof: int, corte_eps: int,
                       n_dof: Optional[int] = None) -> SeriePoisson:
    """
    q_dof antigo = q̃_dof + Δ; devolve Δ como série nas variáveis novas

    A parte K·q dos geradores não altera os ângulos.
    """
    n = n_dof if n_dof is not None else (geradores[0].n_dof if geradores else 1)
    delta = SeriePoisson.zero(n, corte_eps)
    for gerador in geradores:
        delta = _incremento_angulo(gerador, dof, corte_eps) + transformada_lie(delta, gerador, corte_eps)
    return delta
