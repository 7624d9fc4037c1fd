"""
Serialização de séries de Poisson para o formato JSON
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from src.algebra.escalar import Escalar
from src.algebra.monomio import MonomioParametros
from src.algebra.serie_poisson import SeriePoisson
from src.esquemas.esquemas_series import CoeficienteExato, SerieEsquema

logger = logging.getLogger(__name__)


def _coeficiente_para_dict(coef: Escalar) -> Dict[str, Any]:
    if not coef.eh_exato:
        return {'value': coef.valor}
    return {
        'a_num': coef.a.numerator, 'a_den': coef.a.denominator,
        'b_num': coef.b.numerator, 'b_den': coef.b.denominator,
    }


def serie_para_dict(serie: SeriePoisson) -> Dict[str, Any]:
    """
    Converte uma série para um dicionário compatível com JSON

    Args:
        serie: Série a serializar

    Returns:
        Dicionário {n_dof, mode, eps_cutoff, p_cutoff, terms}, termos em ordem determinística
    """
    termos = []
    for (eps, mono, p_exp, trig, onda), coef in serie.itens_ordenados():
        termo = {
            'eps': eps,
            'coeff': _coeficiente_para_dict(coef),
            'j0_exp2': list(mono.j0_exp2),
            'omega_exp': mono.omega_exp,
            'omega0_exp': mono.omega0_exp,
            'p_exp': list(p_exp),
            'trig': trig,
            'wave': list(onda),
        }
        if mono.contra:
            termo['contra'] = [list(c) for c in mono.contra]
        termos.append(termo)
    return {
        'n_dof': serie.n_dof,
        'mode': 'exact' if serie.eh_exata else 'numeric',
        'eps_cutoff': serie.corte_eps,
        'p_cutoff': serie.corte_p,
        'terms': termos,
    }


def serie_de_dict(dados: Union[Dict[str, Any], SerieEsquema]) -> SeriePoisson:
    """Reconstrói uma série a partir do dicionário validado pelo esquema"""
    esquema = dados if isinstance(dados, SerieEsquema) else SerieEsquema.model_validate(dados)
    termos = []
    for termo in esquema.terms:
        if isinstance(termo.coeff, CoeficienteExato):
            coef = Escalar.exato(
                Fraction(termo.coeff.a_num, termo.coeff.a_den),
                Fraction(termo.coeff.b_num, termo.coeff.b_den),
            )
        else:
            coef = Escalar.numerico(termo.coeff.value)
        mono = MonomioParametros(
            tuple(termo.j0_exp2), termo.omega_exp, termo.omega0_exp,
            tuple(tuple(c) for c in termo.contra),
        )
        termos.append(((termo.eps, mono, tuple(termo.p_exp), termo.trig, tuple(termo.wave)), coef))
    return SeriePoisson(esquema.n_dof, termos, esquema.eps_cutoff, esquema.p_cutoff)


def serie_para_json(serie: SeriePoisson) -> str:
    return json.dumps(serie_para_dict(serie), ensure_ascii=False, indent=2)


def serie_de_json(texto: str) -> SeriePoisson:
    return serie_de_dict(json.loads(texto))


def salvar_serie(serie: SeriePoisson, caminho: Path) -> Path:
    caminho = Path(caminho)
    caminho.parent.mkdir(parents=True, exist_ok=True)
    caminho.write_text(serie_para_json(serie), encoding='utf-8')
    logger.debug(f"Série com {len(serie)} termos salva em {caminho}")
    return caminho


def carregar_serie(caminho: Path) -> SeriePoisson:
    return serie_de_json(Path(caminho).read_text(encoding='utf-8'))
