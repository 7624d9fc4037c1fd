"""
Testes para a forma normal de Birkhoff e as soluções no toro
"""

import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

# Adicionar diretório raiz ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.erros import ErroPequenoDivisor
from src.algebra.escalar import Escalar
from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import SEN, SeriePoisson
from src.hamiltonianos.modelos import carregar_modelo
from src.hamiltonianos.preparacao import preparar_hamiltoniano
from src.normalizacao.birkhoff import normalizar_birkhoff
from src.normalizacao.guarda import GuardaDivisores


def _raiz(fracao: Fraction) -> Escalar:
    return Escalar.exato(0, fracao)


class TestBirkhoffQuartico:
    """Oscilador quártico na ordem 2 com ω₀ simbólico"""

    def test_correcoes_de_frequencia(self, birkhoff_quartico):
        """Testa ω = ω₀ + 3εJ₀/4 - 69ε²J₀²/(64ω₀)"""
        omega1, omega2 = birkhoff_quartico.correcoes[0][0], birkhoff_quartico.correcoes[1][0]
        assert omega1 == SeriePoisson.termo(1, Fraction(3, 4), mono=MonomioParametros.j0(1))
        assert omega2 == SeriePoisson.termo(1, Fraction(-69, 64), mono=MonomioParametros((4,), omega0_exp=-1))
        assert birkhoff_quartico.relacao.forma == 'explicita'
        assert not birkhoff_quartico.relacao.depende_de_omega

    def test_forma_normal_sem_angulos(self, birkhoff_quartico):
        assert birkhoff_quartico.forma_normal.parte_oscilante().eh_zero()

    def test_forma_normal_completa(self, birkhoff_quartico):
        """Testa Z^(2) = ω₀p̃ + 3εJ₀p̃/4 + 3εp̃²/8 - 69ε²J₀²p̃/(64ω₀) - 51ε²J₀p̃²/(64ω₀) - 17ε²p̃³/(64ω₀)"""
        Z = birkhoff_quartico.forma_normal
        esperados = {
            (0, 1, 0, 1): Fraction(1),
            (1, 1, 2, 0): Fraction(3, 4),
            (1, 2, 0, 0): Fraction(3, 8),
            (2, 1, 4, -1): Fraction(-69, 64),
            (2, 2, 2, -1): Fraction(-51, 64),
            (2, 3, 0, -1): Fraction(-17, 64),
        }
        for (eps, grau_p, j0_exp2, omega0_exp), valor in esperados.items():
            assert Z.coeficiente(eps=eps, p=[grau_p], j0_exp2=[j0_exp2], omega0_exp=omega0_exp) == valor
        com_momento = [chave for chave in Z.termos if any(chave[2])]
        assert len(com_momento) == len(esperados)

    def test_gerador_misto(self, birkhoff_quartico):
        """Testa K^(1) = 3J₀²/(8ω₀) e S^(1) = 0"""
        chi = birkhoff_quartico.geradores[0]
        assert chi.tipo == 'misto'
        assert chi.K == [SeriePoisson.termo(1, Fraction(3, 8), mono=MonomioParametros((4,), omega0_exp=-1))]
        assert chi.S[0].eh_zero()

    def test_solucao_angulo(self, solucoes_quarticas):
        q = solucoes_quarticas['birkhoff'].q().serie
        esperados = {
            (1, 2, 2): Fraction(-1, 2), (1, 4, 2): Fraction(1, 16),
            (2, 2, 4): Fraction(31, 32), (2, 4, 4): Fraction(-1, 32),
            (2, 6, 4): Fraction(-1, 32), (2, 8, 4): Fraction(1, 512),
        }
        for (eps, k, j0_exp2), valor in esperados.items():
            assert q.coeficiente(eps=eps, onda=[k], trig=SEN, j0_exp2=[j0_exp2], omega0_exp=-eps) == valor
        assert len(q) == len(esperados)

    def test_solucao_acao(self, solucoes_quarticas):
        J = solucoes_quarticas['birkhoff'].J().serie
        esperados = {
            (1, 0, 4): Fraction(-3, 8), (1, 2, 4): Fraction(1, 2), (1, 4, 4): Fraction(-1, 8),
            (2, 0, 6): Fraction(13, 16), (2, 2, 6): Fraction(-33, 32),
            (2, 4, 6): Fraction(3, 16), (2, 6, 6): Fraction(1, 32),
        }
        for (eps, k, j0_exp2), valor in esperados.items():
            assert J.coeficiente(eps=eps, onda=[k], j0_exp2=[j0_exp2], omega0_exp=-eps) == valor
        assert J.coeficiente(j0_exp2=[2]) == 1
        assert len(J) == len(esperados) + 1

    def test_resumo(self, birkhoff_quartico):
        resumo = birkhoff_quartico.resumo()
        assert resumo['omega1'] == "3/4·J0"
        assert 'relacao_frequencia' in resumo


class TestBirkhoffCubico:
    """Oscilador cúbico na ordem 3: termos de ε³ que diferem de Kolmogorov"""

    def test_frequencia(self, birkhoff_cubico):
        """Testa ω = ω₀ - 5ε²J₀/(6ω₀)"""
        correcoes = birkhoff_cubico.correcoes
        assert correcoes[0][0].eh_zero()
        assert correcoes[1][0] == SeriePoisson.termo(1, Fraction(-5, 6), mono=MonomioParametros((2,), omega0_exp=-1))
        assert correcoes[2][0].eh_zero()

    def test_termos_de_terceira_ordem(self, solucoes_cubicas):
        q = solucoes_cubicas['birkhoff'].q().serie
        J = solucoes_cubicas['birkhoff'].J().serie
        assert q.coeficiente(eps=3, j0_exp2=[3], omega0_exp=-3) == _raiz(Fraction(-83, 81))
        assert q.coeficiente(eps=3, onda=[1], j0_exp2=[3], omega0_exp=-3) == _raiz(Fraction(9, 8))
        assert J.coeficiente(eps=3, onda=[1], trig=SEN, j0_exp2=[5], omega0_exp=-3) == _raiz(Fraction(31, 24))
        assert J.coeficiente(eps=3, onda=[3], trig=SEN, j0_exp2=[5], omega0_exp=-3) == _raiz(Fraction(97, 144))

    def test_primeira_ordem(self, solucoes_cubicas):
        """Testa q = φ - 2√2√J₀/(3ω₀) ε + 3√J₀/(2√2 ω₀) ε cos φ + ..."""
        q = solucoes_cubicas['birkhoff'].q().serie
        assert q.coeficiente(eps=1, j0_exp2=[1], omega0_exp=-1) == _raiz(Fraction(-2, 3))
        assert q.coeficiente(eps=1, onda=[1], j0_exp2=[1], omega0_exp=-1) == _raiz(Fraction(3, 4))
        assert q.coeficiente(eps=1, onda=[3], j0_exp2=[1], omega0_exp=-1) == _raiz(Fraction(-1, 12))


class TestBirkhoffNumerico:
    """Testes com frequências numéricas"""

    def test_omega0_numerico_coincide(self, modelo_quartico, birkhoff_quartico):
        preparado = preparar_hamiltoniano(modelo_quartico.com_omega0([1.3]), 2)
        resultado = normalizar_birkhoff(preparado, 2)
        j0 = 0.2
        exato = birkhoff_quartico.relacao.resolver_omega([j0], 0.5, [1.3])
        numerico = resultado.relacao.resolver_omega([j0], 0.5, [1.3])
        np.testing.assert_allclose(numerico, exato, rtol=1e-12)
        assert numerico[0] == pytest.approx(1.3 + 0.5 * 0.75 * j0 - 0.25 * 69 / 64 * j0 ** 2 / 1.3, rel=1e-12)

    def test_ressonancia_detectada(self):
        """Testa que ω₀ = (1, 1) leva a pequeno divisor no modelo acoplado"""
        modelo = carregar_modelo('coupled').com_omega0([1.0, 1.0])
        preparado = preparar_hamiltoniano(modelo, 1)
        with pytest.raises(ErroPequenoDivisor):
            normalizar_birkhoff(preparado, 1)

    def test_acoplado_nao_ressonante(self):
        modelo = carregar_modelo('coupled')
        resultado = normalizar_birkhoff(preparar_hamiltoniano(modelo, 1), 1)
        assert resultado.n_dof == 2
        assert len(resultado.correcoes[0]) == 2
        oscilante = resultado.forma_normal.parte_oscilante()
        assert all(abs(v.para_float()) < 1e-12 for v in oscilante.termos.values())

    def test_guarda_explicita(self, quartico_preparado_2):
        guarda = GuardaDivisores(1, simbolo='omega0', onda_maxima=8)
        resultado = normalizar_birkhoff(quartico_preparado_2, 1, guarda=guarda)
        assert resultado.ordem == 1
