"""
Esquemas pydantic do formato JSON de séries, geradores e resultados
"""

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator


class CoeficienteExato(BaseModel):
    """Coeficiente a + b·√2 com a, b racionais"""

    a_num: int
    a_den: int = 1
    b_num: int = 0
    b_den: int = 1

    @field_validator('a_den', 'b_den')
    @classmethod
    def denominador_positivo(cls, valor: int) -> int:
        if valor <= 0:
            raise ValueError("denominador deve ser positivo")
        return valor


class CoeficienteNumerico(BaseModel):
    value: float


class TermoEsquema(BaseModel):
    eps: int = Field(ge=0)
    coeff: Union[CoeficienteExato, CoeficienteNumerico]
    j0_exp2: List[int]
    omega_exp: int = 0
    omega0_exp: int = 0
    contra: List[List[int]] = Field(default_factory=list)
    p_exp: List[int]
    trig: Literal['cos', 'sin']
    wave: List[int]

    @field_validator('p_exp')
    @classmethod
    def momentos_nao_negativos(cls, valor: List[int]) -> List[int]:
        if any(e < 0 for e in valor):
            raise ValueError("expoentes de p devem ser não negativos")
        return valor

    @field_validator('contra')
    @classmethod
    def triplas_contra(cls, valor: List[List[int]]) -> List[List[int]]:
        if any(len(t) != 3 for t in valor):
            raise ValueError("contra-termos devem ser triplas [ordem, dof, expoente]")
        return valor


class SerieEsquema(BaseModel):
    n_dof: int = Field(ge=1)
    mode: Literal['exact', 'numeric']
    eps_cutoff: Optional[int] = None
    p_cutoff: Optional[int] = None
    terms: List[TermoEsquema] = Field(default_factory=list)

    @model_validator(mode='after')
    def dimensoes_consistentes(self) -> 'SerieEsquema':
        for termo in self.terms:
            if not (len(termo.j0_exp2) == len(termo.p_exp) == len(termo.wave) == self.n_dof):
                raise ValueError(f"termo com dimensão diferente de n_dof={self.n_dof}")
        return self


class FuncaoGeradoraEsquema(BaseModel):
    tipo: Literal['angulo', 'linear', 'misto']
    passo: int = Field(ge=1)
    grau_eps: int = Field(ge=1)
    serie: SerieEsquema
    K: List[SerieEsquema]
    S: List[SerieEsquema]


class ManifestoEsquema(BaseModel):
    metodo: Literal['birkhoff', 'kolmogorov']
    ordem: int = Field(ge=1)
    hash_modelo: str
    modo: Literal['exato', 'numerico']
    ligacoes: dict = Field(default_factory=dict)


class ResultadoEsquema(BaseModel):
    manifesto: ManifestoEsquema
    forma_normal: SerieEsquema
    resto: SerieEsquema
    geradores: List[FuncaoGeradoraEsquema]
    correcoes: List[List[SerieEsquema]]
    constantes: List[SerieEsquema]
    relacao_frequencia: str = ""


class TrajetoriaEsquema(BaseModel):
    coordenada: str
    dof: int = Field(ge=0)
    parte_secular: bool
    serie: SerieEsquema
    relacao_frequencia: str = ""
