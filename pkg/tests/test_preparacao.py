"""
Testes para os modelos de osciladores e a preparação do Hamiltoniano
"""

import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

# Adicionar diretório raiz ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.erros import ErroModelo
from src.algebra.escalar import Escalar
from src.algebra.serie_poisson import SEN
from src.hamiltonianos.modelos import (
    ModeloOscilador, TermoPerturbacao, carregar_modelo, ler_arquivo_modelo,
)
from src.hamiltonianos.preparacao import (
    binomial_generalizado, ordem_expansao_necessaria, para_acao_angulo, preparar_hamiltoniano,
    transladar_e_expandir,
)
from src.normalizacao.kolmogorov import normalizar_kolmogorov
from src.normalizacao.solucao_toro import solucao_toro

ARQUIVO_QUARTICO = """
[modelo]
nome = quartic
n_dof = 1
omega0 = symbolic

[termo.1]
eps = 1
coeficiente = 1/4
x = 4
p = 0
"""


class TestModelos:
    """Testes para o catálogo e a validação de modelos"""

    def test_catalogo(self):
        modelo = carregar_modelo('quartic')
        assert modelo.n_dof == 1
        assert modelo.eh_simbolico
        assert modelo.grau_maximo == 4
        assert carregar_modelo('coupled').n_dof == 2

    def test_modelo_desconhecido(self):
        with pytest.raises(ErroModelo):
            carregar_modelo('sextic')

    def test_termo_quadratico_rejeitado(self):
        termo = TermoPerturbacao(1, Escalar.exato(1), (2,), (0,))
        with pytest.raises(ErroModelo):
            ModeloOscilador('invalido', 1, [termo])

    def test_omega0_simbolico_exige_um_grau(self):
        termo = TermoPerturbacao(1, Escalar.exato(1), (4, 0), (0, 0))
        with pytest.raises(ErroModelo):
            ModeloOscilador('invalido', 2, [termo])

    def test_hash_deterministico(self):
        """Testa que o hash depende apenas do conteúdo do modelo"""
        assert carregar_modelo('quartic').hash() == carregar_modelo('quartic').hash()
        assert carregar_modelo('quartic').hash() != carregar_modelo('quartic').com_omega0([1.0]).hash()

    def test_campo_vetorial_quartico(self):
        """Testa ẋ = ω₀p e ṗ = -(ω₀x + εx³)"""
        campo = carregar_modelo('quartic').campo_vetorial(0.5, omega0=[2.0])
        derivada = campo(0.0, np.array([0.3, 0.2]))
        np.testing.assert_allclose(derivada, [0.4, -(0.6 + 0.5 * 0.027)])

    def test_acao_angulo_coincide_com_cartesiano(self):
        """Testa H(x, p) = H(q, J) com x = √(2J) sin q, p = √(2J) cos q"""
        modelo = carregar_modelo('cubic')
        J, q = 0.7, 0.4
        x, p = np.sqrt(2 * J) * np.sin(q), np.sqrt(2 * J) * np.cos(q)
        serie = para_acao_angulo(modelo)
        valor = serie.avaliar({'eps': 0.3, 'j0': [J], 'q': [q], 'omega0': [1.5]})
        assert valor == pytest.approx(modelo.hamiltoniano_cartesiano([x], [p], 0.3, omega0=[1.5]), rel=1e-12)


class TestArquivoModelo:
    """Testes para a leitura de modelos em arquivo INI"""

    def test_arquivo_equivale_ao_catalogo(self, tmp_path):
        caminho = tmp_path / "quartic.ini"
        caminho.write_text(ARQUIVO_QUARTICO, encoding='utf-8')
        assert ler_arquivo_modelo(caminho) == carregar_modelo('quartic')
        assert carregar_modelo(caminho=caminho).hash() == carregar_modelo('quartic').hash()

    def test_coeficiente_com_raiz(self, tmp_path):
        caminho = tmp_path / "raiz.ini"
        caminho.write_text(ARQUIVO_QUARTICO + "sqrt2 = true\n", encoding='utf-8')
        modelo = ler_arquivo_modelo(caminho)
        assert modelo.termos[0].coeficiente == Escalar.exato(0, Fraction(1, 4))

    def test_arquivo_inexistente(self, tmp_path):
        with pytest.raises(ErroModelo):
            ler_arquivo_modelo(tmp_path / "ausente.ini")

    def test_arquivo_sem_secao_modelo(self, tmp_path):
        caminho = tmp_path / "vazio.ini"
        caminho.write_text("[termo.1]\neps = 1\n", encoding='utf-8')
        with pytest.raises(ErroModelo):
            ler_arquivo_modelo(caminho)

    def test_termo_de_grau_baixo(self, tmp_path):
        caminho = tmp_path / "grau.ini"
        caminho.write_text(ARQUIVO_QUARTICO.replace("x = 4", "x = 2"), encoding='utf-8')
        with pytest.raises(ErroModelo):
            ler_arquivo_modelo(caminho)


class TestAcaoAngulo:
    """Testes para a substituição em variáveis de ação-ângulo"""

    def test_quartico(self, modelo_quartico):
        """Testa x⁴/4 = J²(3/8 - 1/2 cos 2q + 1/8 cos 4q)"""
        serie = para_acao_angulo(modelo_quartico)
        assert serie.coeficiente(j0_exp2=[2], omega0_exp=1) == 1
        assert serie.coeficiente(eps=1, j0_exp2=[4]) == Fraction(3, 8)
        assert serie.coeficiente(eps=1, onda=[2], j0_exp2=[4]) == Fraction(-1, 2)
        assert serie.coeficiente(eps=1, onda=[4], j0_exp2=[4]) == Fraction(1, 8)

    def test_cubico(self, modelo_cubico):
        """Testa -x³/3 = -(√2/2) J^(3/2) sin q + (√2/6) J^(3/2) sin 3q"""
        serie = para_acao_angulo(modelo_cubico)
        assert serie.coeficiente(eps=1, onda=[1], trig=SEN, j0_exp2=[3]) == Escalar.exato(0, Fraction(-1, 2))
        assert serie.coeficiente(eps=1, onda=[3], trig=SEN, j0_exp2=[3]) == Escalar.exato(0, Fraction(1, 6))
        assert len(serie) == 3


    def test_colchete_preservado(self):
        """Testa {x³, p³} = 9x²p² também nas variáveis (q, J)"""
        def modelo(coef, eps, x, p):
            return ModeloOscilador('termo', 1, [TermoPerturbacao(eps, Escalar.exato(coef), (x,), (p,))])

        F = para_acao_angulo(modelo(1, 1, 3, 0), incluir_nao_perturbado=False)
        G = para_acao_angulo(modelo(1, 1, 0, 3), incluir_nao_perturbado=False)
        colchete = F.derivada_q(0) * G.derivada_j0(0) - F.derivada_j0(0) * G.derivada_q(0)
        esperado = para_acao_angulo(modelo(9, 2, 2, 2), incluir_nao_perturbado=False)
        assert (colchete - esperado).eh_zero()


class TestTranslacao:
    """Testes para J = J₀ + p e a expansão em p"""

    def test_binomial_generalizado(self):
        assert binomial_generalizado(3, 3) == Fraction(-1, 16)
        assert binomial_generalizado(4, 3) == 0
        assert binomial_generalizado(1, 2) == Fraction(-1, 8)

    def test_quartico_exato(self, quartico_preparado_2):
        serie = quartico_preparado_2.serie
        assert serie.coeficiente(p=[1], omega0_exp=1) == 1
        assert serie.coeficiente(eps=1, p=[1], j0_exp2=[2]) == Fraction(3, 4)
        assert serie.coeficiente(eps=1, p=[2]) == Fraction(3, 8)
        assert serie.coeficiente(eps=1, onda=[2], p=[1], j0_exp2=[2]) == -1

    def test_constantes_descartadas(self, modelo_quartico):
        """Testa que ω₀J₀ sempre sai e as constantes perturbativas saem por padrão"""
        sem = preparar_hamiltoniano(modelo_quartico, 2).serie
        com = preparar_hamiltoniano(modelo_quartico, 2, manter_constantes=True).serie
        assert sem.coeficiente(j0_exp2=[2], omega0_exp=1) == 0
        assert com.coeficiente(j0_exp2=[2], omega0_exp=1) == 0
        assert sem.coeficiente(eps=1, j0_exp2=[4]) == 0
        assert com.coeficiente(eps=1, j0_exp2=[4]) == Fraction(3, 8)

    def test_cubico_semi_inteiro(self, cubico_preparado_3):
        """Testa o termo p³ de J^(3/2): -√2/2 · binom(3/2, 3) = √2/32"""
        serie = cubico_preparado_3.serie
        assert serie.grau_p_maximo() == 3
        assert serie.coeficiente(eps=1, onda=[1], trig=SEN, p=[3], j0_exp2=[-3]) == Escalar.exato(0, Fraction(1, 32))

    def test_consistencia_da_expansao(self, modelo_cubico):
        """Testa que o erro da expansão até p³ cai por pelo menos 0.9·2⁴ ao dividir p por 2"""
        h = para_acao_angulo(modelo_cubico, incluir_nao_perturbado=False)
        expandido = transladar_e_expandir(h, 3, manter_constantes=True)
        j0, q = 0.5, 0.7
        erros = []
        for p in (0.02, 0.01):
            direto = h.avaliar({'eps': 1.0, 'j0': [j0 + p], 'q': [q]})
            serie = expandido.avaliar({'eps': 1.0, 'j0': [j0], 'p': [p], 'q': [q]})
            erros.append(abs(direto - serie))
        assert erros[1] > 0.0
        assert erros[0] / erros[1] >= 0.9 * 2 ** 4

    def test_ordem_expansao(self, modelo_cubico):
        h = para_acao_angulo(modelo_cubico)
        assert transladar_e_expandir(h, 1).grau_p_maximo() == 1
        assert transladar_e_expandir(h, 5).grau_p_maximo() == 5
        with pytest.raises(ValueError):
            transladar_e_expandir(h, 0)

    def test_ordem_expansao_necessaria(self):
        assert ordem_expansao_necessaria(5, 2) == 2
        with pytest.raises(ValueError):
            ordem_expansao_necessaria(4, 2)
        with pytest.raises(ValueError):
            ordem_expansao_necessaria(5, 0)

    def test_modo_numerico(self, modelo_quartico):
        preparado = preparar_hamiltoniano(modelo_quartico, 2, modo='numerico')
        assert not preparado.serie.eh_exata
        with pytest.raises(ValueError):
            preparar_hamiltoniano(modelo_quartico, 2, modo='simbolico')

    def test_quintico_grau_suficiente(self):
        """Testa que expandir até p² ou p³ dá o mesmo resultado na ordem 2"""
        modelo = carregar_modelo('quintic')
        curto = normalizar_kolmogorov(preparar_hamiltoniano(modelo, 2, ordem_expansao=2), 2)
        longo = normalizar_kolmogorov(preparar_hamiltoniano(modelo, 2, ordem_expansao=3), 2)
        assert curto.correcoes == longo.correcoes
        for g_curto, g_longo in zip(curto.geradores, longo.geradores):
            assert g_curto.serie == g_longo.serie
            assert g_curto.K == g_longo.K
            assert g_curto.S == g_longo.S
        assert solucao_toro(curto).q().serie == solucao_toro(longo).q().serie
        assert solucao_toro(curto).J().serie == solucao_toro(longo).J().serie
