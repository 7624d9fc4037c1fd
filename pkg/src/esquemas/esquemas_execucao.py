"""
Esquema validado da configuração de uma execução da linha de comando
"""

from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

METODOS_COM_OMEGA = ('lindstedt-k', 'kolmogorov', 'invert')
METODOS_COM_OMEGA0 = ('birkhoff', 'lindstedt-b')


class ConfiguracaoExecucao(BaseModel):
    """Parâmetros de uma execução: modelo, método, ordem, modo e ligações numéricas"""

    modelo: Optional[str] = None
    arquivo_modelo: Optional[Path] = None
    n_dof: int = Field(default=1, ge=1)
    metodo: Literal['birkhoff', 'lindstedt-b', 'lindstedt-k', 'kolmogorov', 'invert', 'compare']
    ordem: int = Field(default=2, ge=1)
    modo: Literal['exato', 'numerico'] = 'exato'
    eps: Optional[float] = None
    omega0: Optional[List[float]] = None
    omega: Optional[List[float]] = None
    j0: Optional[List[float]] = None
    saida: Path = Path('data/output')
    t_max: float = Field(default=100.0, gt=0)
    amostras: int = Field(default=2000, ge=2)
    inversao: Literal['serie', 'newton'] = 'serie'

    @model_validator(mode='after')
    def consistencia(self) -> 'ConfiguracaoExecucao':
        if not self.modelo and not self.arquivo_modelo:
            raise ValueError("informe --model ou --model-file")

        for nome in ('omega0', 'omega', 'j0'):
            valores = getattr(self, nome)
            if valores is None:
                continue
            if any(v <= 0 for v in valores):
                raise ValueError(f"{nome} deve ser positivo")
            if self.metodo != 'compare' or nome != 'omega':
                if len(valores) != self.n_dof:
                    raise ValueError(f"{nome} deve ter {self.n_dof} componente(s)")

        # Com vários graus de liberdade as frequências precisam ser numéricas
        if self.n_dof > 1:
            if self.metodo in METODOS_COM_OMEGA and self.omega is None:
                raise ValueError(f"{self.metodo} com n_dof > 1 exige --omega numérico")
            if self.metodo in METODOS_COM_OMEGA0 and self.omega0 is None:
                raise ValueError(f"{self.metodo} com n_dof > 1 exige --omega0 numérico")
            if self.metodo in ('invert', 'compare'):
                raise ValueError(f"{self.metodo} só é suportado com n_dof = 1")

        if self.metodo == 'invert':
            if self.eps is None or self.omega is None or self.omega0 is None:
                raise ValueError("invert exige --eps, --omega0 e --omega")
        return self

    @property
    def esquema_lindstedt(self) -> Optional[str]:
        if self.metodo.startswith('lindstedt-'):
            return self.metodo[-1].upper()
        return None
