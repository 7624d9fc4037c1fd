"""
Testes para o módulo main.py
"""

import pytest
import sys
from pathlib import Path

# Adicionar diretório raiz ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.serializacao import salvar_serie
from src.algebra.serie_poisson import SeriePoisson
from src.main import analisar_argumentos, main


@pytest.fixture(autouse=True)
def diretorio_trabalho(tmp_path, monkeypatch):
    """Executa cada teste num diretório temporário (logs/ é criado no diretório atual)"""
    monkeypatch.chdir(tmp_path)


def _valor(saida: str, chave: str) -> str:
    for linha in saida.splitlines():
        if linha.startswith(f"{chave} = "):
            return linha.split(" = ", 1)[1]
    raise AssertionError(f"{chave} ausente na saída")


class TestAnalisarArgumentos:
    """Testes para a linha de comando"""

    def test_vetores(self):
        args = analisar_argumentos(['birkhoff', '--model', 'coupled', '--omega0', '1,0.618'])
        assert args['command'] == 'birkhoff'
        assert args['omega0'] == [1.0, 0.618]

    def test_omega_repetido(self):
        args = analisar_argumentos(['compare', '--model', 'quartic', '--omega', '1.02', '--omega', '1.2'])
        assert args['omega'] == [1.02, 1.2]
        args = analisar_argumentos(['kolmogorov', '--model', 'quartic', '--omega', '1.1', '--omega', '1.2'])
        assert args['omega'] == [1.2]

    def test_esquema_padrao(self):
        assert analisar_argumentos(['lindstedt', '--model', 'quartic'])['scheme'] == 'k'

    def test_comando_desconhecido(self):
        with pytest.raises(SystemExit):
            analisar_argumentos(['lie'])


class TestMain:
    """Testes para a função main"""

    def test_kolmogorov(self, tmp_path, capsys):
        """Testa execução bem-sucedida com resumo e artefatos"""
        saida = tmp_path / "saida"
        resultado = main(['kolmogorov', '--model', 'quartic', '--order', '2', '--out', str(saida)])
        assert resultado == 0
        texto = capsys.readouterr().out
        assert _valor(texto, 'a1') == "-3/4·J0"
        assert _valor(texto, 'a2') == "69/64·J0^2·ω^-1"
        assert (saida / "kolmogorov_ordem2.json").exists()
        assert (saida / "trajetorias_kolmogorov.json").exists()
        assert (saida / "resumo.txt").exists()

    def test_lindstedt_b(self, tmp_path, capsys):
        resultado = main(['lindstedt', '--model', 'quartic', '--scheme', 'b', '--order', '2', '--out', str(tmp_path)])
        assert resultado == 0
        texto = capsys.readouterr().out
        assert _valor(texto, 'metodo') == 'lindstedt-b'
        assert _valor(texto, 'a1') == "-3/4·J0"
        assert (tmp_path / "trajetorias_lindstedt-b.json").exists()

    def test_invert(self, tmp_path, capsys):
        resultado = main(['invert', '--model', 'quartic', '--eps', '1', '--omega0', '1', '--omega', '1.02',
                          '--out', str(tmp_path)])
        assert resultado == 0
        texto = capsys.readouterr().out
        assert _valor(texto, 'ordem') == '4'
        assert float(_valor(texto, 'J0')) == pytest.approx(0.0277048, rel=1e-3)

    def test_arquivo_modelo_no_diretorio_configurado(self, tmp_path, monkeypatch, capsys):
        """Testa --model-file relativo resolvido em NORMALIZADOR_MODELOS_PATH"""
        modelos = tmp_path / "modelos"
        modelos.mkdir()
        (modelos / "meu.ini").write_text(
            "[modelo]\nnome = meu\nn_dof = 1\nomega0 = symbolic\n\n"
            "[termo.1]\neps = 1\ncoeficiente = 1/4\nx = 4\np = 0\n",
            encoding='utf-8',
        )
        monkeypatch.setenv('NORMALIZADOR_MODELOS_PATH', str(modelos))
        resultado = main(['kolmogorov', '--model-file', 'meu.ini', '--order', '1', '--out', str(tmp_path / "saida")])
        assert resultado == 0
        texto = capsys.readouterr().out
        assert _valor(texto, 'modelo') == 'meu'
        assert _valor(texto, 'a1') == "-3/4·J0"

    def test_show(self, tmp_path, capsys):
        caminho = salvar_serie(SeriePoisson.termo(1, 3, onda=[2]), tmp_path / "serie.json")
        assert main(['show', str(caminho)]) == 0
        assert "cos(2q)" in capsys.readouterr().out

    def test_ordem_invalida(self, tmp_path, capsys):
        """Testa saída 2 para erro de validação"""
        resultado = main(['kolmogorov', '--model', 'quartic', '--order', '0', '--out', str(tmp_path)])
        assert resultado == 2
        assert "Erro de validação" in capsys.readouterr().err

    def test_modelo_ausente(self, tmp_path):
        assert main(['birkhoff', '--out', str(tmp_path)]) == 2

    def test_invert_sem_eps(self, tmp_path, capsys):
        resultado = main(['invert', '--model', 'quartic', '--omega0', '1', '--omega', '1.02', '--out', str(tmp_path)])
        assert resultado == 2
        assert "invert exige" in capsys.readouterr().err

    def test_precondicao_do_motor_sai_com_1(self, tmp_path, monkeypatch, capsys):
        """Testa que ValueError levantado durante o cálculo não é tratado como erro de validação"""
        def falhar(*args, **kwargs):
            raise ValueError("Ordem de expansão deve ser >= 1: 0")

        monkeypatch.setattr('src.main.normalizar_kolmogorov', falhar)
        resultado = main(['kolmogorov', '--model', 'quartic', '--order', '2', '--out', str(tmp_path)])
        assert resultado == 1
        erro = capsys.readouterr().err
        assert "Erro no cálculo" in erro
        assert "Erro de validação" not in erro

    def test_pequeno_divisor(self, tmp_path, capsys):
        """Testa saída 1 com o vetor de onda ressonante na mensagem"""
        resultado = main(['birkhoff', '--model', 'coupled', '--omega0', '1,1', '--order', '1', '--out', str(tmp_path)])
        assert resultado == 1
        assert "Pequeno divisor" in capsys.readouterr().err


if __name__ == "__main__":
    pytest.main([__file__])
