"""
Séries de Poisson truncadas: soma graduada de termos
ε^i · coeficiente · p^α · {cos|sin}(k·q)
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.algebra.erros import ErroDimensao, ErroSimboloNaoLigado
from src.algebra.escalar import LIMIAR_ZERO, Escalar
from src.algebra.monomio import MonomioParametros

logger = logging.getLogger(__name__)

COS = 'cos'
SEN = 'sin'

MEIO = Escalar.exato(Fraction(1, 2))

Chave = Tuple[int, MonomioParametros, Tuple[int, ...], str, Tuple[int, ...]]


def _canonizar_onda(trig: str, onda: Tuple[int, ...], coef: Escalar):
    """Primeira componente não nula de k positiva; sin(0) é descartado"""
    for componente in onda:
        if componente > 0:
            return onda, coef
        if componente < 0:
            onda = tuple(-c for c in onda)
            return onda, (coef if trig == COS else -coef)
    if trig == SEN:
        return None, coef
    return onda, coef


def _min_corte(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class SeriePoisson:
    """
    Série de Poisson imutável com truncamento na ordem de ε e no grau em p.

    Os termos ficam num dicionário canônico (eps, monômio, p_exp, trig, onda) -> Escalar,
    sem coeficientes nulos e respeitando os cortes.
    """

    __slots__ = ('n_dof', 'termos', 'corte_eps', 'corte_p')

    def __init__(self, n_dof: int, termos: Optional[Union[Dict[Chave, Escalar], Iterable]] = None,
                 corte_eps: Optional[int] = None, corte_p: Optional[int] = None):
        if n_dof < 1:
            raise ErroDimensao(f"n_dof deve ser positivo: {n_dof}")
        self.n_dof = n_dof
        self.corte_eps = corte_eps
        self.corte_p = corte_p
        acumulado: Dict[Chave, Escalar] = {}
        if termos:
            itens = termos.items() if isinstance(termos, dict) else termos
            for chave, coef in itens:
                self._acumular(acumulado, chave, Escalar.de(coef))
        self.termos = {c: v for c, v in acumulado.items() if not v.eh_zero()}

    # ------------------------------------------------------------------
    # Construção
    # ------------------------------------------------------------------

    def _aceita(self, eps: int, p_exp: Tuple[int, ...]) -> bool:
        if self.corte_eps is not None and eps > self.corte_eps:
            return False
        if self.corte_p is not None and sum(p_exp) > self.corte_p:
            return False
        return True

    def _acumular(self, destino: Dict[Chave, Escalar], chave: Chave, coef: Escalar) -> None:
        eps, mono, p_exp, trig, onda = chave
        if len(onda) != self.n_dof or len(p_exp) != self.n_dof or mono.n_dof != self.n_dof:
            raise ErroDimensao(f"Termo com dimensão incompatível com n_dof={self.n_dof}")
        if not self._aceita(eps, p_exp):
            return
        onda, coef = _canonizar_onda(trig, tuple(onda), coef)
        if onda is None:
            return
        chave = (eps, mono, tuple(p_exp), trig, onda)
        anterior = destino.get(chave)
        destino[chave] = coef if anterior is None else anterior + coef

    @classmethod
    def _de_dicionario(cls, n_dof: int, termos: Dict[Chave, Escalar],
                       corte_eps: Optional[int], corte_p: Optional[int]) -> 'SeriePoisson':
        """Constrói sem recanonizar; as chaves já devem ser canônicas"""
        serie = cls.__new__(cls)
        serie.n_dof = n_dof
        serie.corte_eps = corte_eps
        serie.corte_p = corte_p
        serie.termos = {
            c: v for c, v in termos.items()
            if not v.eh_zero() and serie._aceita(c[0], c[2])
        }
        return serie

    @classmethod
    def zero(cls, n_dof: int, corte_eps: Optional[int] = None, corte_p: Optional[int] = None) -> 'SeriePoisson':
        return cls(n_dof, None, corte_eps, corte_p)

    @classmethod
    def termo(cls, n_dof: int, coef: Any = 1, eps: int = 0, mono: Optional[MonomioParametros] = None,
              p: Optional[Sequence[int]] = None, trig: str = COS, onda: Optional[Sequence[int]] = None,
              corte_eps: Optional[int] = None, corte_p: Optional[int] = None) -> 'SeriePoisson':
        """Série com um único termo"""
        mono = mono or MonomioParametros.unidade(n_dof)
        p = tuple(p) if p is not None else (0,) * n_dof
        onda = tuple(onda) if onda is not None else (0,) * n_dof
        return cls(n_dof, [((eps, mono, p, trig, onda), Escalar.de(coef))], corte_eps, corte_p)

    @classmethod
    def constante(cls, n_dof: int, coef: Any, mono: Optional[MonomioParametros] = None,
                  eps: int = 0) -> 'SeriePoisson':
        return cls.termo(n_dof, coef, eps=eps, mono=mono)

    @classmethod
    def momento(cls, n_dof: int, dof: int = 0) -> 'SeriePoisson':
        """A coordenada p_dof como série"""
        p = [0] * n_dof
        p[dof] = 1
        return cls.termo(n_dof, 1, p=p)

    def com_cortes(self, corte_eps: Optional[int] = None, corte_p: Optional[int] = None) -> 'SeriePoisson':
        return SeriePoisson._de_dicionario(self.n_dof, self.termos, corte_eps, corte_p)

    def para_numerico(self) -> 'SeriePoisson':
        """Converte todos os coeficientes para ponto flutuante"""
        return SeriePoisson._de_dicionario(
            self.n_dof, {c: v.para_numerico() for c, v in self.termos.items()}, self.corte_eps, self.corte_p)

    def truncar(self, corte_eps: int) -> 'SeriePoisson':
        return SeriePoisson._de_dicionario(self.n_dof, self.termos, _min_corte(self.corte_eps, corte_eps), self.corte_p)

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def _verificar_dimensao(self, outra: 'SeriePoisson') -> None:
        if self.n_dof != outra.n_dof:
            raise ErroDimensao(f"Séries com n_dof {self.n_dof} e {outra.n_dof}")

    def __add__(self, outra: 'SeriePoisson') -> 'SeriePoisson':
        if not isinstance(outra, SeriePoisson):
            return NotImplemented
        self._verificar_dimensao(outra)
        termos = dict(self.termos)
        for chave, coef in outra.termos.items():
            anterior = termos.get(chave)
            termos[chave] = coef if anterior is None else anterior + coef
        return SeriePoisson._de_dicionario(
            self.n_dof, termos,
            _min_corte(self.corte_eps, outra.corte_eps), _min_corte(self.corte_p, outra.corte_p),
        )

    def __neg__(self) -> 'SeriePoisson':
        return SeriePoisson._de_dicionario(
            self.n_dof, {c: -v for c, v in self.termos.items()}, self.corte_eps, self.corte_p)

    def __sub__(self, outra: 'SeriePoisson') -> 'SeriePoisson':
        return self + (-outra)

    def escalar(self, fator: Any) -> 'SeriePoisson':
        """Multiplica todos os coeficientes por um escalar"""
        fator = Escalar.de(fator)
        return SeriePoisson._de_dicionario(
            self.n_dof, {c: v * fator for c, v in self.termos.items()}, self.corte_eps, self.corte_p)

    def multiplicar_monomio(self, mono: MonomioParametros) -> 'SeriePoisson':
        termos: Dict[Chave, Escalar] = {}
        for (eps, m, p_exp, trig, onda), coef in self.termos.items():
            chave = (eps, m * mono, p_exp, trig, onda)
            anterior = termos.get(chave)
            termos[chave] = coef if anterior is None else anterior + coef
        return SeriePoisson._de_dicionario(self.n_dof, termos, self.corte_eps, self.corte_p)

    def __mul__(self, outra: Any) -> 'SeriePoisson':
        if not isinstance(outra, SeriePoisson):
            return self.escalar(outra)
        self._verificar_dimensao(outra)
        resultado = SeriePoisson.zero(
            self.n_dof, _min_corte(self.corte_eps, outra.corte_eps), _min_corte(self.corte_p, outra.corte_p))
        destino: Dict[Chave, Escalar] = {}
        for (e1, m1, p1, t1, k1), c1 in self.termos.items():
            for (e2, m2, p2, t2, k2), c2 in outra.termos.items():
                eps = e1 + e2
                p_exp = tuple(a + b for a, b in zip(p1, p2))
                if not resultado._aceita(eps, p_exp):
                    continue
                mono = m1 * m2
                coef = c1 * c2
                for trig, onda, fator in _produto_trigonometrico(t1, k1, t2, k2):
                    resultado._acumular(destino, (eps, mono, p_exp, trig, onda), coef if fator is None else coef * fator)
        resultado.termos = {c: v for c, v in destino.items() if not v.eh_zero()}
        return resultado

    __rmul__ = __mul__

    def potencia(self, n: int) -> 'SeriePoisson':
        if n < 0:
            raise ValueError("Potência negativa de série")
        resultado = SeriePoisson.constante(self.n_dof, 1).com_cortes(self.corte_eps, self.corte_p)
        for _ in range(n):
            resultado = resultado * self
        return resultado

    # ------------------------------------------------------------------
    # Derivadas e colchete de Poisson
    # ------------------------------------------------------------------

    def derivada_q(self, dof: int) -> 'SeriePoisson':
        """∂/∂q_dof: cos(k·q) -> -k_i sin(k·q), sin(k·q) -> k_i cos(k·q)"""
        termos: Dict[Chave, Escalar] = {}
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            k = onda[dof]
            if k == 0:
                continue
            if trig == COS:
                termos[(eps, mono, p_exp, SEN, onda)] = coef * (-k)
            else:
                termos[(eps, mono, p_exp, COS, onda)] = coef * k
        return SeriePoisson._de_dicionario(self.n_dof, termos, self.corte_eps, self.corte_p)

    def derivada_p(self, dof: int) -> 'SeriePoisson':
        termos: Dict[Chave, Escalar] = {}
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            a = p_exp[dof]
            if a == 0:
                continue
            novo_p = p_exp[:dof] + (a - 1,) + p_exp[dof + 1:]
            termos[(eps, mono, novo_p, trig, onda)] = coef * a
        return SeriePoisson._de_dicionario(self.n_dof, termos, self.corte_eps, self.corte_p)

    def derivada_j0(self, dof: int) -> 'SeriePoisson':
        """∂/∂J₀ com expoentes semi-inteiros: J^(h/2) -> (h/2)·J^(h/2 - 1)"""
        termos: Dict[Chave, Escalar] = {}
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            h = mono.j0_exp2[dof]
            if h == 0:
                continue
            chave = (eps, mono.com_j0(dof, -2), p_exp, trig, onda)
            anterior = termos.get(chave)
            novo = coef * Fraction(h, 2)
            termos[chave] = novo if anterior is None else anterior + novo
        return SeriePoisson._de_dicionario(self.n_dof, termos, self.corte_eps, self.corte_p)

    def colchete(self, outra: 'SeriePoisson') -> 'SeriePoisson':
        """{f, g} = Σ_i (∂f/∂q_i ∂g/∂p_i - ∂f/∂p_i ∂g/∂q_i)"""
        self._verificar_dimensao(outra)
        resultado = SeriePoisson.zero(
            self.n_dof, _min_corte(self.corte_eps, outra.corte_eps), _min_corte(self.corte_p, outra.corte_p))
        for i in range(self.n_dof):
            fq = self.derivada_q(i)
            gp = outra.derivada_p(i)
            if fq.termos and gp.termos:
                resultado = resultado + fq * gp
            fp = self.derivada_p(i)
            gq = outra.derivada_q(i)
            if fp.termos and gq.termos:
                resultado = resultado - fp * gq
        return resultado

    # ------------------------------------------------------------------
    # Seleção de partes
    # ------------------------------------------------------------------

    def filtrar(self, predicado: Callable[[Chave], bool]) -> 'SeriePoisson':
        return SeriePoisson._de_dicionario(
            self.n_dof, {c: v for c, v in self.termos.items() if predicado(c)}, self.corte_eps, self.corte_p)

    def media_angular(self) -> 'SeriePoisson':
        """Mantém exatamente os termos com onda k = 0"""
        return self.filtrar(lambda c: not any(c[4]))

    def parte_oscilante(self) -> 'SeriePoisson':
        return self.filtrar(lambda c: any(c[4]))

    def parte_ordem_eps(self, ordem: int) -> 'SeriePoisson':
        return self.filtrar(lambda c: c[0] == ordem)

    def parte_grau_p(self, grau: int) -> 'SeriePoisson':
        return self.filtrar(lambda c: sum(c[2]) == grau)

    def sem_eps(self) -> 'SeriePoisson':
        """Zera a graduação de todos os termos (usado para exibir geradores)"""
        return self.deslocar_eps(0, absoluto=True)

    def deslocar_eps(self, deslocamento: int, absoluto: bool = False) -> 'SeriePoisson':
        termos: Dict[Chave, Escalar] = {}
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            novo_eps = deslocamento if absoluto else eps + deslocamento
            chave = (novo_eps, mono, p_exp, trig, onda)
            anterior = termos.get(chave)
            termos[chave] = coef if anterior is None else anterior + coef
        corte = None if self.corte_eps is None or absoluto else self.corte_eps + deslocamento
        return SeriePoisson._de_dicionario(self.n_dof, termos, corte, self.corte_p)

    def anular_momentos(self) -> 'SeriePoisson':
        """Substitui p = 0"""
        return self.filtrar(lambda c: not any(c[2]))

    def anular_angulos(self) -> 'SeriePoisson':
        """Substitui q = 0: cos(k·q) -> 1, sin(k·q) -> 0"""
        termos: Dict[Chave, Escalar] = {}
        zero = (0,) * self.n_dof
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            if trig == SEN:
                continue
            chave = (eps, mono, p_exp, COS, zero)
            anterior = termos.get(chave)
            termos[chave] = coef if anterior is None else anterior + coef
        return SeriePoisson._de_dicionario(self.n_dof, termos, self.corte_eps, self.corte_p)

    def coeficiente_momento(self, dof: int) -> 'SeriePoisson':
        """Termos de p-grau 1 em p_dof divididos por p_dof, com graduação ε preservada"""
        termos: Dict[Chave, Escalar] = {}
        alvo = tuple(1 if j == dof else 0 for j in range(self.n_dof))
        zero = (0,) * self.n_dof
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            if p_exp == alvo:
                termos[(eps, mono, zero, trig, onda)] = coef
        return SeriePoisson._de_dicionario(self.n_dof, termos, self.corte_eps, self.corte_p)

    def substituir_contra_termo(self, ordem: int, dof: int, valor: 'SeriePoisson') -> 'SeriePoisson':
        """Troca o símbolo a_{ordem,dof} pela série `valor`"""
        resultado = SeriePoisson.zero(self.n_dof, self.corte_eps, self.corte_p)
        intactos: Dict[Chave, Escalar] = {}
        potencias: Dict[int, SeriePoisson] = {}
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            expoente = mono.expoente_contra(ordem, dof)
            if expoente == 0:
                intactos[(eps, mono, p_exp, trig, onda)] = coef
                continue
            if expoente not in potencias:
                potencias[expoente] = valor.potencia(expoente)
            termo = SeriePoisson._de_dicionario(
                self.n_dof, {(eps, mono.sem_contra(ordem, dof), p_exp, trig, onda): coef},
                self.corte_eps, self.corte_p)
            resultado = resultado + termo * potencias[expoente]
        return resultado + SeriePoisson._de_dicionario(self.n_dof, intactos, self.corte_eps, self.corte_p)

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------

    def eh_zero(self) -> bool:
        return not self.termos

    def __len__(self) -> int:
        return len(self.termos)

    def __eq__(self, outra: object) -> bool:
        if not isinstance(outra, SeriePoisson):
            return NotImplemented
        return self.n_dof == outra.n_dof and self.termos == outra.termos

    def __hash__(self):
        return hash((self.n_dof, frozenset(self.termos.items())))

    @property
    def eh_exata(self) -> bool:
        return all(v.eh_exato for v in self.termos.values())

    def ordem_eps_maxima(self) -> int:
        return max((c[0] for c in self.termos), default=0)

    def grau_p_maximo(self) -> int:
        return max((sum(c[2]) for c in self.termos), default=0)

    def onda_maxima(self) -> int:
        return max((sum(abs(k) for k in c[4]) for c in self.termos), default=0)

    def coeficiente(self, eps: int = 0, onda: Optional[Sequence[int]] = None, trig: str = COS,
                    p: Optional[Sequence[int]] = None, j0_exp2: Optional[Sequence[int]] = None,
                    omega_exp: int = 0, omega0_exp: int = 0) -> Escalar:
        """Coeficiente de um termo específico (zero exato se ausente)"""
        n = self.n_dof
        mono = MonomioParametros(tuple(j0_exp2) if j0_exp2 is not None else (0,) * n, omega_exp, omega0_exp)
        onda = tuple(onda) if onda is not None else (0,) * n
        onda, sinal = _canonizar_onda(trig, onda, Escalar.exato(1))
        if onda is None:
            return Escalar.exato(0)
        chave = (eps, mono, tuple(p) if p is not None else (0,) * n, trig, onda)
        valor = self.termos.get(chave)
        return Escalar.exato(0) if valor is None else valor * sinal

    def itens_ordenados(self) -> List[Tuple[Chave, Escalar]]:
        """Ordem determinística: (eps, |k|, k, p_exp, cos antes de sin, monômio)"""
        return sorted(
            self.termos.items(),
            key=lambda item: (
                item[0][0], sum(abs(k) for k in item[0][4]), item[0][4], item[0][2],
                0 if item[0][3] == COS else 1, item[0][1],
            ),
        )

    def __iter__(self) -> Iterator[Tuple[Chave, Escalar]]:
        return iter(self.itens_ordenados())

    # ------------------------------------------------------------------
    # Avaliação numérica
    # ------------------------------------------------------------------

    def avaliar(self, ligacoes: Dict[str, Any]) -> Any:
        """
        Avalia a série numericamente

        Args:
            ligacoes: 'eps', 'omega', 'omega0', 'j0' (sequência por grau de liberdade),
                'p' e 'q' (sequências; aceitam arrays numpy para avaliação vetorizada)

        Returns:
            Valor numérico (float ou array)
        """
        total = 0.0
        for (eps, mono, p_exp, trig, onda), coef in self.termos.items():
            valor = coef.para_float() * mono.avaliar(ligacoes)
            if eps:
                if ligacoes.get('eps') is None:
                    raise ErroSimboloNaoLigado("ε sem valor atribuído")
                valor = valor * float(ligacoes['eps']) ** eps
            if any(p_exp):
                momentos = ligacoes.get('p')
                if momentos is None:
                    raise ErroSimboloNaoLigado("p sem valor atribuído")
                for i, a in enumerate(p_exp):
                    if a:
                        valor = valor * np.asarray(momentos[i]) ** a
            if any(onda):
                angulos = ligacoes.get('q')
                if angulos is None:
                    raise ErroSimboloNaoLigado("q sem valor atribuído")
                argumento = sum(k * np.asarray(angulos[i]) for i, k in enumerate(onda) if k)
                valor = valor * (np.cos(argumento) if trig == COS else np.sin(argumento))
            total = total + valor
        return total

    def compilar(self, ligacoes: Dict[str, Any]) -> 'AvaliadorNumerico':
        return AvaliadorNumerico(self, ligacoes)

    # ------------------------------------------------------------------
    # Exibição
    # ------------------------------------------------------------------

    def formatar(self) -> str:
        if not self.termos:
            return "0"
        nomes_q = ["q"] if self.n_dof == 1 else [f"q{i + 1}" for i in range(self.n_dof)]
        nomes_p = ["p"] if self.n_dof == 1 else [f"p{i + 1}" for i in range(self.n_dof)]
        partes = []
        for (eps, mono, p_exp, trig, onda), coef in self.itens_ordenados():
            fatores = [coef.formatar()]
            texto_mono = mono.formatar()
            if texto_mono:
                fatores.append(texto_mono)
            if eps:
                fatores.append("ε" if eps == 1 else f"ε^{eps}")
            for nome, a in zip(nomes_p, p_exp):
                if a:
                    fatores.append(nome if a == 1 else f"{nome}^{a}")
            if any(onda):
                argumento = " + ".join(
                    (nome if k == 1 else f"{k}{nome}") for nome, k in zip(nomes_q, onda) if k
                ).replace("+ -", "- ")
                fatores.append(f"{trig}({argumento})")
            partes.append("·".join(fatores))
        return " + ".join(partes).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SeriePoisson(n_dof={self.n_dof}, termos={len(self.termos)}: {self.formatar()})"


def _produto_trigonometrico(t1: str, k1: Tuple[int, ...], t2: str, k2: Tuple[int, ...]):
    """Linearização de produtos trigonométricos; fator None significa 1"""
    if not any(k1):
        # t1 é cos(0) = 1
        return [(t2, k2, None)]
    if not any(k2):
        return [(t1, k1, None)]
    diferenca = tuple(a - b for a, b in zip(k1, k2))
    soma = tuple(a + b for a, b in zip(k1, k2))
    menos_meio = -MEIO
    if t1 == COS and t2 == COS:
        return [(COS, diferenca, MEIO), (COS, soma, MEIO)]
    if t1 == SEN and t2 == SEN:
        return [(COS, diferenca, MEIO), (COS, soma, menos_meio)]
    if t1 == SEN and t2 == COS:
        return [(SEN, soma, MEIO), (SEN, diferenca, MEIO)]
    return [(SEN, soma, MEIO), (SEN, diferenca, menos_meio)]


class AvaliadorNumerico:
    """
    Avaliação vetorizada de uma série com ε, ω, ω₀ fixos e (q, J₀, p) livres.

    Usado pelo integrador quando o Hamiltoniano é dado em ação-ângulo, onde a
    posição de J₀ no monômio representa a própria ação J.
    """

    def __init__(self, serie: SeriePoisson, ligacoes: Dict[str, Any]):
        n = serie.n_dof
        coefs, exps_j, exps_p, ondas, senos = [], [], [], [], []
        fixas = {k: v for k, v in ligacoes.items() if k not in ('j0', 'p', 'q')}
        for (eps, mono, p_exp, trig, onda), coef in serie.termos.items():
            sem_j0 = type(mono)((0,) * n, mono.omega_exp, mono.omega0_exp, mono.contra)
            valor = coef.para_float() * sem_j0.avaliar(fixas)
            if eps:
                if fixas.get('eps') is None:
                    raise ErroSimboloNaoLigado("ε sem valor atribuído")
                valor *= float(fixas['eps']) ** eps
            coefs.append(valor)
            exps_j.append([e / 2.0 for e in mono.j0_exp2])
            exps_p.append(list(p_exp))
            ondas.append(list(onda))
            senos.append(trig == SEN)
        self.n_dof = n
        self.coefs = np.array(coefs, dtype=float)
        self.exps_j = np.array(exps_j, dtype=float).reshape(-1, n)
        self.exps_p = np.array(exps_p, dtype=float).reshape(-1, n)
        self.ondas = np.array(ondas, dtype=float).reshape(-1, n)
        self.senos = np.array(senos, dtype=bool)
        self.usa_p = bool(self.exps_p.any())

    def __call__(self, q: Any, j0: Any, p: Optional[Any] = None) -> Any:
        """Avalia num ponto (vetores de tamanho n_dof) ou numa grade (arrays n_dof × T)"""
        q = np.asarray(q, dtype=float)
        pontual = q.ndim <= 1
        q = q.reshape(self.n_dof, -1)
        if len(self.coefs) == 0:
            return 0.0 if pontual else np.zeros(q.shape[1])
        j0 = np.asarray(j0, dtype=float).reshape(self.n_dof, -1)
        argumento = self.ondas @ q
        trig = np.where(self.senos[:, None], np.sin(argumento), np.cos(argumento))
        fatores = np.ones_like(argumento)
        for j in range(self.n_dof):
            fatores = fatores * j0[j][None, :] ** self.exps_j[:, j][:, None]
        if self.usa_p:
            if p is None:
                raise ErroSimboloNaoLigado("p sem valor atribuído")
            p = np.asarray(p, dtype=float).reshape(self.n_dof, -1)
            for j in range(self.n_dof):
                fatores = fatores * p[j][None, :] ** self.exps_p[:, j][:, None]
        valores = np.sum(self.coefs[:, None] * fatores * trig, axis=0)
        return float(valores[0]) if pontual else valores
