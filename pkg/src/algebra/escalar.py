"""
Escalares exatos no anel ℚ[√2] e escalares numéricos em ponto flutuante
"""

import math
from fractions import Fraction
from typing import Union

RAIZ_2 = math.sqrt(2.0)

# Limiar absoluto para considerar um escalar numérico como zero
LIMIAR_ZERO = 1e-14

Numero = Union[int, Fraction, float]


class Escalar:
    """
    Escalar a + b·√2 com a, b racionais (modo exato) ou um float (modo numérico).

    Instâncias são imutáveis. Operações entre um escalar exato e um numérico
    produzem um escalar numérico.
    """

    __slots__ = ('a', 'b', 'valor')

    def __init__(self, a: Numero = 0, b: Numero = 0, valor: float = None):
        if valor is not None:
            self.a = None
            self.b = None
            self.valor = float(valor)
        else:
            self.a = Fraction(a)
            self.b = Fraction(b)
            self.valor = None

    @classmethod
    def exato(cls, a: Numero = 0, b: Numero = 0) -> 'Escalar':
        return cls(a, b)

    @classmethod
    def numerico(cls, valor: float) -> 'Escalar':
        return cls(valor=valor)

    @classmethod
    def de(cls, x: Union['Escalar', Numero]) -> 'Escalar':
        """Converte int, Fraction ou float para Escalar"""
        if isinstance(x, Escalar):
            return x
        if isinstance(x, float):
            return cls.numerico(x)
        return cls.exato(x)

    @property
    def eh_exato(self) -> bool:
        return self.valor is None

    def eh_zero(self, limiar: float = LIMIAR_ZERO) -> bool:
        if self.eh_exato:
            return self.a == 0 and self.b == 0
        return abs(self.valor) < limiar

    def para_float(self) -> float:
        if self.eh_exato:
            return float(self.a) + float(self.b) * RAIZ_2
        return self.valor

    def para_numerico(self) -> 'Escalar':
        return self if not self.eh_exato else Escalar.numerico(self.para_float())

    def __add__(self, outro) -> 'Escalar':
        outro = Escalar.de(outro)
        if self.eh_exato and outro.eh_exato:
            return Escalar(self.a + outro.a, self.b + outro.b)
        return Escalar.numerico(self.para_float() + outro.para_float())

    __radd__ = __add__

    def __neg__(self) -> 'Escalar':
        if self.eh_exato:
            return Escalar(-self.a, -self.b)
        return Escalar.numerico(-self.valor)

    def __sub__(self, outro) -> 'Escalar':
        return self + (-Escalar.de(outro))

    def __rsub__(self, outro) -> 'Escalar':
        return Escalar.de(outro) - self

    def __mul__(self, outro) -> 'Escalar':
        outro = Escalar.de(outro)
        if self.eh_exato and outro.eh_exato:
            # (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
            return Escalar(
                self.a * outro.a + 2 * self.b * outro.b,
                self.a * outro.b + self.b * outro.a,
            )
        return Escalar.numerico(self.para_float() * outro.para_float())

    __rmul__ = __mul__

    def inverso(self) -> 'Escalar':
        if self.eh_zero():
            raise ZeroDivisionError("Inverso de escalar nulo")
        if self.eh_exato:
            norma = self.a * self.a - 2 * self.b * self.b
            return Escalar(self.a / norma, -self.b / norma)
        return Escalar.numerico(1.0 / self.valor)

    def __truediv__(self, outro) -> 'Escalar':
        return self * Escalar.de(outro).inverso()

    def __rtruediv__(self, outro) -> 'Escalar':
        return Escalar.de(outro) * self.inverso()

    def __eq__(self, outro) -> bool:
        if not isinstance(outro, (Escalar, int, Fraction, float)):
            return NotImplemented
        outro = Escalar.de(outro)
        if self.eh_exato and outro.eh_exato:
            return self.a == outro.a and self.b == outro.b
        return self.para_float() == outro.para_float()

    def __hash__(self) -> int:
        if self.eh_exato:
            return hash((self.a, self.b))
        return hash(self.valor)

    def formatar(self) -> str:
        """Representação legível: racionais como num/den e √2 explícito"""
        if not self.eh_exato:
            return f"{self.valor:.16g}"
        if self.b == 0:
            return str(self.a)
        parte_raiz = "√2" if self.b == 1 else ("-√2" if self.b == -1 else f"{self.b}·√2")
        if self.a == 0:
            return parte_raiz
        sinal = "-" if parte_raiz.startswith("-") else "+"
        return f"({self.a} {sinal} {parte_raiz.lstrip('-')})"

    def __repr__(self) -> str:
        return f"Escalar({self.formatar()})"

    __str__ = formatar


ZERO = Escalar.exato(0)
UM = Escalar.exato(1)
