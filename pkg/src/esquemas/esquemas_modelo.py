"""
Esquema do arquivo de definição de modelos de osciladores
"""

from fractions import Fraction
from typing import List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator


class TermoPerturbacaoArquivo(BaseModel):
    """Termo ε^eps · coeficiente · (√2)^sqrt2 · Π x_j^x[j] p_j^p[j]"""

    eps: int = Field(ge=1)
    coeficiente: str
    sqrt2: bool = False
    x: List[int]
    p: List[int]

    @field_validator('coeficiente')
    @classmethod
    def coeficiente_racional(cls, valor: str) -> str:
        try:
            Fraction(valor.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"coeficiente racional inválido: {valor!r}") from e
        return valor.strip()

    @field_validator('x', 'p')
    @classmethod
    def expoentes_nao_negativos(cls, valor: List[int]) -> List[int]:
        if any(e < 0 for e in valor):
            raise ValueError("expoentes devem ser não negativos")
        return valor

    @property
    def grau(self) -> int:
        return sum(self.x) + sum(self.p)


class ModeloArquivo(BaseModel):
    nome: str
    n_dof: int = Field(ge=1)
    omega0: Union[List[float], str] = 'symbolic'
    termos: List[TermoPerturbacaoArquivo]

    @field_validator('omega0')
    @classmethod
    def omega0_valido(cls, valor):
        if isinstance(valor, str) and valor != 'symbolic':
            raise ValueError("omega0 deve ser uma lista de valores ou 'symbolic'")
        return valor

    @model_validator(mode='after')
    def consistencia(self) -> 'ModeloArquivo':
        if self.omega0 == 'symbolic' and self.n_dof != 1:
            raise ValueError("omega0 simbólico só é suportado com n_dof = 1")
        if isinstance(self.omega0, list) and len(self.omega0) != self.n_dof:
            raise ValueError(f"omega0 deve ter {self.n_dof} valores")
        for termo in self.termos:
            if len(termo.x) != self.n_dof or len(termo.p) != self.n_dof:
                raise ValueError(f"termo com expoentes incompatíveis com n_dof={self.n_dof}")
            if termo.grau < 3:
                raise ValueError(f"termo de grau {termo.grau} < 3 na perturbação")
        return self

    @property
    def omega0_numerico(self) -> Optional[List[float]]:
        return None if self.omega0 == 'symbolic' else list(self.omega0)
