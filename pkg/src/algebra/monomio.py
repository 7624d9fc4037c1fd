"""
Monômios nos parâmetros simbólicos J₀, ω, ω₀ e nos contra-termos a_{r,j}
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from src.algebra.erros import ErroDimensao, ErroSimboloNaoLigado


@dataclass(frozen=True, order=True)
class MonomioParametros:
    """
    Produto J₀^(j0_exp2/2) · ω^omega_exp · ω₀^omega0_exp · Π a_{r,j}^e.

    Os expoentes de J₀ são guardados como o dobro do expoente real, o que
    cobre as potências semi-inteiras. `contra` guarda triplas (ordem, dof, expoente)
    ordenadas, usadas pelos contra-termos ainda não determinados.
    """

    j0_exp2: Tuple[int, ...]
    omega_exp: int = 0
    omega0_exp: int = 0
    contra: Tuple[Tuple[int, int, int], ...] = field(default=())

    @classmethod
    def unidade(cls, n_dof: int) -> 'MonomioParametros':
        return cls((0,) * n_dof)

    @classmethod
    def j0(cls, n_dof: int, dof: int = 0, expoente2: int = 2) -> 'MonomioParametros':
        exps = [0] * n_dof
        exps[dof] = expoente2
        return cls(tuple(exps))

    @classmethod
    def contra_termo(cls, n_dof: int, ordem: int, dof: int) -> 'MonomioParametros':
        return cls((0,) * n_dof, contra=((ordem, dof, 1),))

    @property
    def n_dof(self) -> int:
        return len(self.j0_exp2)

    @property
    def eh_unidade(self) -> bool:
        return (not any(self.j0_exp2) and self.omega_exp == 0
                and self.omega0_exp == 0 and not self.contra)

    def __mul__(self, outro: 'MonomioParametros') -> 'MonomioParametros':
        if self.n_dof != outro.n_dof:
            raise ErroDimensao(f"Monômios com n_dof {self.n_dof} e {outro.n_dof}")
        contra = self.contra
        if outro.contra:
            acumulado: Dict[Tuple[int, int], int] = {}
            for ordem, dof, exp in self.contra + outro.contra:
                acumulado[(ordem, dof)] = acumulado.get((ordem, dof), 0) + exp
            contra = tuple(sorted((o, d, e) for (o, d), e in acumulado.items() if e != 0))
        return MonomioParametros(
            tuple(a + b for a, b in zip(self.j0_exp2, outro.j0_exp2)),
            self.omega_exp + outro.omega_exp,
            self.omega0_exp + outro.omega0_exp,
            contra,
        )

    def com_j0(self, dof: int, delta2: int) -> 'MonomioParametros':
        exps = list(self.j0_exp2)
        exps[dof] += delta2
        return MonomioParametros(tuple(exps), self.omega_exp, self.omega0_exp, self.contra)

    def expoente_contra(self, ordem: int, dof: int) -> int:
        for o, d, e in self.contra:
            if o == ordem and d == dof:
                return e
        return 0

    def sem_contra(self, ordem: int, dof: int) -> 'MonomioParametros':
        contra = tuple(c for c in self.contra if not (c[0] == ordem and c[1] == dof))
        return MonomioParametros(self.j0_exp2, self.omega_exp, self.omega0_exp, contra)

    def avaliar(self, ligacoes: Dict[str, Any]) -> Any:
        """
        Avalia o monômio numericamente

        Args:
            ligacoes: valores de 'j0' (um por grau de liberdade), 'omega', 'omega0'
                e, se houver contra-termos, 'contra' como {(ordem, dof): valor}

        Returns:
            Valor do monômio (float ou array numpy, conforme os valores de J₀)
        """
        valor = 1.0
        for dof, exp2 in enumerate(self.j0_exp2):
            if exp2:
                j0 = ligacoes.get('j0')
                if j0 is None:
                    raise ErroSimboloNaoLigado("J₀ sem valor atribuído")
                valor = valor * j0[dof] ** (exp2 / 2.0)
        for nome, exp in (('omega', self.omega_exp), ('omega0', self.omega0_exp)):
            if exp:
                base = ligacoes.get(nome)
                if base is None:
                    raise ErroSimboloNaoLigado(f"{nome} sem valor atribuído")
                if not isinstance(base, (int, float)):
                    base = base[0]
                valor = valor * float(base) ** exp
        for ordem, dof, exp in self.contra:
            contra = ligacoes.get('contra') or {}
            if (ordem, dof) not in contra:
                raise ErroSimboloNaoLigado(f"Contra-termo a_{ordem} (dof {dof}) sem valor atribuído")
            valor = valor * contra[(ordem, dof)] ** exp
        return valor

    def formatar(self) -> str:
        partes = []
        nomes_j0 = ["J0"] if self.n_dof == 1 else [f"J0_{i + 1}" for i in range(self.n_dof)]
        for nome, exp2 in zip(nomes_j0, self.j0_exp2):
            if exp2:
                partes.append(nome if exp2 == 2 else f"{nome}^({exp2}/2)" if exp2 % 2 else f"{nome}^{exp2 // 2}")
        if self.omega_exp:
            partes.append("ω" if self.omega_exp == 1 else f"ω^{self.omega_exp}")
        if self.omega0_exp:
            partes.append("ω0" if self.omega0_exp == 1 else f"ω0^{self.omega0_exp}")
        for ordem, dof, exp in self.contra:
            nome = f"a{ordem}" if self.n_dof == 1 else f"a{ordem}_{dof + 1}"
            partes.append(nome if exp == 1 else f"{nome}^{exp}")
        return "·".join(partes)
