"""
Testes para as séries de Lindstedt e a equivalência com as formas normais
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Adicionar diretório raiz ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.erros import ErroTermoSecular
from src.algebra.escalar import Escalar
from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import SEN, SeriePoisson
from src.hamiltonianos.modelos import carregar_modelo
from src.hamiltonianos.preparacao import para_acao_angulo
from src.lindstedt.construcao import ExpansorTaylor, executar_lindstedt, extrair_secular, integrar_trig
from src.normalizacao.guarda import GuardaDivisores

METODOS = ['kolmogorov', 'birkhoff', 'lindstedt-b', 'lindstedt-k']


def _raiz(fracao: Fraction) -> Escalar:
    return Escalar.exato(0, fracao)


class TestIntegracaoTrigonometrica:
    """Testes para a primitiva com valor nulo em φ = 0"""

    def setup_method(self):
        self.guarda = GuardaDivisores(1, simbolo='omega')

    def test_seno(self):
        """Testa ∫ sin φ = (1 - cos φ)/ω"""
        g = integrar_trig(SeriePoisson.termo(1, 1, trig=SEN, onda=[1]), self.guarda)
        um_sobre_omega = MonomioParametros((0,), omega_exp=-1)
        esperado = (SeriePoisson.termo(1, 1, mono=um_sobre_omega)
                    - SeriePoisson.termo(1, 1, mono=um_sobre_omega, onda=[1]))
        assert g == esperado
        assert g.anular_angulos().eh_zero()

    def test_cosseno(self):
        g = integrar_trig(SeriePoisson.termo(1, 3, onda=[2]), self.guarda)
        assert g == SeriePoisson.termo(1, Fraction(3, 2), mono=MonomioParametros((0,), omega_exp=-1),
                                       trig=SEN, onda=[2])

    def test_termo_secular_rejeitado(self):
        with pytest.raises(ErroTermoSecular):
            integrar_trig(SeriePoisson.termo(1, 1) + SeriePoisson.termo(1, 1, onda=[1]), self.guarda)

    def test_extrair_secular(self):
        rhs = SeriePoisson.termo(1, 2, eps=1) + SeriePoisson.termo(1, 5, eps=1, onda=[2])
        a, resto = extrair_secular(rhs)
        assert a == SeriePoisson.termo(1, -2)
        assert resto == SeriePoisson.termo(1, 5, eps=1, onda=[2])


class TestExpansorTaylor:
    """Testes para a composição campo(φ + Q, J₀ + P) ordem a ordem"""

    def test_termo_cruzado(self):
        """Testa que ε cos φ com Q = ε produz -ε² sin φ na ordem 2"""
        campo = SeriePoisson.termo(1, 1, eps=1, onda=[1], corte_eps=2)
        correcoes = [SeriePoisson.termo(1, 1, eps=1, corte_eps=2), SeriePoisson.zero(1, 2)]
        bloco = ExpansorTaylor(campo).expandir(correcoes, 2)
        assert bloco == SeriePoisson.termo(1, -1, eps=2, trig=SEN, onda=[1])

    def test_contra_termo_de_segunda_ordem(self, modelo_quartico):
        """Testa que a ordem 2 do esquema K não é nula"""
        estado = executar_lindstedt(para_acao_angulo(modelo_quartico), 'K', 2)
        a2 = estado.contra_termos[1][0]
        assert not a2.eh_zero()
        assert not estado.angulos[1][0].eh_zero()
        assert not estado.acoes[1][0].eh_zero()


class TestLindstedtQuartico:
    """Esquemas B e K no oscilador quártico na ordem 2"""

    def test_esquema_b_igual_birkhoff(self, solucoes_quarticas):
        birkhoff, lindstedt = solucoes_quarticas['birkhoff'], solucoes_quarticas['lindstedt-b']
        assert lindstedt.q().serie == birkhoff.q().serie
        assert lindstedt.J().serie == birkhoff.J().serie
        assert lindstedt.relacao.serie_desvio() == birkhoff.relacao.serie_desvio()

    def test_esquema_k_igual_kolmogorov(self, solucoes_quarticas):
        kolmogorov, lindstedt = solucoes_quarticas['kolmogorov'], solucoes_quarticas['lindstedt-k']
        assert lindstedt.q().serie == kolmogorov.q().serie
        assert lindstedt.J().serie == kolmogorov.J().serie
        assert lindstedt.relacao.serie_desvio() == kolmogorov.relacao.serie_desvio()

    def test_esquema_k(self, solucoes_quarticas):
        """Testa os coeficientes de ε² com divisores em ω"""
        solucao = solucoes_quarticas['lindstedt-k']
        q, J = solucao.q().serie, solucao.J().serie
        assert q.coeficiente(eps=2, onda=[2], trig=SEN, j0_exp2=[4], omega_exp=-2) == Fraction(19, 32)
        assert q.coeficiente(eps=2, onda=[4], trig=SEN, j0_exp2=[4], omega_exp=-2) == Fraction(1, 64)
        assert q.coeficiente(eps=2, onda=[6], trig=SEN, j0_exp2=[4], omega_exp=-2) == Fraction(-1, 32)
        assert q.coeficiente(eps=2, onda=[8], trig=SEN, j0_exp2=[4], omega_exp=-2) == Fraction(1, 512)
        assert J.coeficiente(eps=2, j0_exp2=[6], omega_exp=-2) == Fraction(17, 32)
        assert J.coeficiente(eps=2, onda=[2], j0_exp2=[6], omega_exp=-2) == Fraction(-21, 32)
        assert solucao.relacao.forma == 'implicita'

    def test_tabelas_b_e_k(self, solucoes_quarticas):
        """Testa os conjuntos de coeficientes de ε² em q: B em ω₀, K em ω"""
        ondas = [2, 4, 6, 8]
        q_B = solucoes_quarticas['lindstedt-b'].q().serie
        q_K = solucoes_quarticas['lindstedt-k'].q().serie
        coef_B = [q_B.coeficiente(eps=2, onda=[k], trig=SEN, j0_exp2=[4], omega0_exp=-2) for k in ondas]
        coef_K = [q_K.coeficiente(eps=2, onda=[k], trig=SEN, j0_exp2=[4], omega_exp=-2) for k in ondas]
        assert coef_B == [Fraction(31, 32), Fraction(-1, 32), Fraction(-1, 32), Fraction(1, 512)]
        assert coef_K == [Fraction(19, 32), Fraction(1, 64), Fraction(-1, 32), Fraction(1, 512)]

    def test_contra_termos(self):
        estado = executar_lindstedt(para_acao_angulo(carregar_modelo('quartic')), 'K', 2)
        assert estado.ordem == 2
        assert estado.contra_termos[0][0] == SeriePoisson.termo(1, Fraction(-3, 4), mono=MonomioParametros.j0(1))
        assert estado.contra_termos[1][0] == SeriePoisson.termo(
            1, Fraction(69, 64), mono=MonomioParametros((4,), omega_exp=-1))

    def test_esquema_invalido(self):
        with pytest.raises(ValueError):
            executar_lindstedt(para_acao_angulo(carregar_modelo('quartic')), 'C', 2)


class TestLindstedtCubico:
    """Esquema K no oscilador cúbico na ordem 3"""

    def test_esquema_k_igual_kolmogorov(self, solucoes_cubicas):
        kolmogorov, lindstedt = solucoes_cubicas['kolmogorov'], solucoes_cubicas['lindstedt-k']
        assert lindstedt.q().serie == kolmogorov.q().serie
        assert lindstedt.J().serie == kolmogorov.J().serie

    def test_esquema_b_igual_birkhoff(self, solucoes_cubicas):
        assert solucoes_cubicas['lindstedt-b'].q().serie == solucoes_cubicas['birkhoff'].q().serie
        assert solucoes_cubicas['lindstedt-b'].J().serie == solucoes_cubicas['birkhoff'].J().serie

    def test_coeficientes_de_terceira_ordem(self, solucoes_cubicas):
        q = solucoes_cubicas['lindstedt-k'].q().serie
        assert q.coeficiente(eps=3, j0_exp2=[3], omega_exp=-3) == _raiz(Fraction(-38, 81))
        assert q.coeficiente(eps=3, onda=[3], j0_exp2=[3], omega_exp=-3) == _raiz(Fraction(145, 288))
        assert q.coeficiente(eps=3, onda=[9], j0_exp2=[3], omega_exp=-3) == _raiz(Fraction(1, 2592))
        assert q.coeficiente(eps=1, j0_exp2=[1], omega_exp=-1) == _raiz(Fraction(-2, 3))

    def test_frequencia(self, solucoes_cubicas):
        """Testa ω = ω₀ - 5ε²J₀/(6ω) com a₁ = a₃ = 0"""
        relacao = solucoes_cubicas['lindstedt-k'].relacao
        assert relacao.desvios[0][0].eh_zero()
        assert relacao.desvios[2][0].eh_zero()
        assert relacao.desvios[1][0] == SeriePoisson.termo(
            1, Fraction(-5, 6), mono=MonomioParametros((2,), omega_exp=-1))


class TestCondicaoInicial:
    """q(0) = 0 e J(0) = J₀ em todas as construções"""

    @pytest.mark.parametrize("metodo", METODOS)
    def test_quartico(self, solucoes_quarticas, metodo):
        solucao = solucoes_quarticas[metodo]
        assert solucao.q().em_t0().eh_zero()
        assert solucao.J().em_t0() == SeriePoisson.termo(1, 1, mono=MonomioParametros.j0(1))

    @pytest.mark.parametrize("metodo", METODOS)
    def test_cubico(self, solucoes_cubicas, metodo):
        solucao = solucoes_cubicas[metodo]
        assert solucao.q().em_t0().eh_zero()
        assert solucao.J().em_t0() == SeriePoisson.termo(1, 1, mono=MonomioParametros.j0(1))

