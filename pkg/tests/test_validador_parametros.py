"""
Testes para o módulo de validação de parâmetros
"""

import unittest
import sys
import os

# Adiciona o diretório raiz ao path para importações
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.utils.validador_parametros import ValidadorParametros


class TestValidadorParametros(unittest.TestCase):
    """Testes para a classe ValidadorParametros"""

    def test_ler_vetor(self):
        """Testa leitura de vetores com separadores variados"""
        self.assertEqual(ValidadorParametros.ler_vetor("1"), [1.0])
        self.assertEqual(ValidadorParametros.ler_vetor("1,0.618"), [1.0, 0.618])
        self.assertEqual(ValidadorParametros.ler_vetor(" 1; 2 3 "), [1.0, 2.0, 3.0])

        with self.assertRaises(ValueError):
            ValidadorParametros.ler_vetor("")
        with self.assertRaises(ValueError):
            ValidadorParametros.ler_vetor("1,a")

    def test_validar_ordem(self):
        self.assertTrue(ValidadorParametros.validar_ordem(None))
        self.assertTrue(ValidadorParametros.validar_ordem(4))
        self.assertFalse(ValidadorParametros.validar_ordem(0))

    def test_validar_eps(self):
        self.assertTrue(ValidadorParametros.validar_eps(0.0))
        self.assertFalse(ValidadorParametros.validar_eps(-0.1))
        self.assertFalse(ValidadorParametros.validar_eps(float('nan')))

    def test_validar_frequencias(self):
        """Testa frequências positivas e finitas"""
        self.assertTrue(ValidadorParametros.validar_frequencias(None))
        self.assertTrue(ValidadorParametros.validar_frequencias([1.0, 0.618]))
        self.assertFalse(ValidadorParametros.validar_frequencias([1.0, 0.0]))
        self.assertFalse(ValidadorParametros.validar_frequencias([float('inf')]))

    def test_validar_execucao(self):
        """Testa a validação conjunta dos argumentos"""
        valido, erros = ValidadorParametros.validar_execucao({'order': 2, 'eps': 1.0, 'omega': [1.02]})
        self.assertTrue(valido)
        self.assertEqual(erros, [])

        valido, erros = ValidadorParametros.validar_execucao({
            'order': 0, 'eps': -1.0, 'omega0': [-1.0], 'j0': [0.0], 't_max': 0.0, 'samples': 1,
        })
        self.assertFalse(valido)
        self.assertEqual(len(erros), 6)


if __name__ == "__main__":
    unittest.main()
