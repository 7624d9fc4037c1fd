import pytest
import sys
import logging
from pathlib import Path

# Add the project root to the Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.hamiltonianos.modelos import carregar_modelo
from src.hamiltonianos.preparacao import para_acao_angulo, preparar_hamiltoniano
from src.lindstedt.construcao import executar_lindstedt
from src.normalizacao.birkhoff import normalizar_birkhoff
from src.normalizacao.kolmogorov import normalizar_kolmogorov
from src.normalizacao.solucao_toro import solucao_toro

# Configure logging for tests to reduce memory usage
logging.basicConfig(
    level=logging.WARNING,
    format='%(levelname)s: %(message)s'
)


# Define fixtures that can be reused across tests
@pytest.fixture(scope="session")
def modelo_quartico():
    """Oscilador quártico com ω₀ simbólico"""
    return carregar_modelo('quartic')


@pytest.fixture(scope="session")
def modelo_cubico():
    """Oscilador cúbico com ω₀ simbólico"""
    return carregar_modelo('cubic')


@pytest.fixture(scope="session")
def quartico_preparado_2(modelo_quartico):
    return preparar_hamiltoniano(modelo_quartico, 2)


@pytest.fixture(scope="session")
def cubico_preparado_3(modelo_cubico):
    return preparar_hamiltoniano(modelo_cubico, 3)


@pytest.fixture(scope="session")
def kolmogorov_quartico(quartico_preparado_2):
    """Forma normal de Kolmogorov do quártico na ordem 2"""
    return normalizar_kolmogorov(quartico_preparado_2, 2)


@pytest.fixture(scope="session")
def birkhoff_quartico(quartico_preparado_2):
    return normalizar_birkhoff(quartico_preparado_2, 2)


@pytest.fixture(scope="session")
def kolmogorov_cubico(cubico_preparado_3):
    return normalizar_kolmogorov(cubico_preparado_3, 3)


@pytest.fixture(scope="session")
def birkhoff_cubico(cubico_preparado_3):
    return normalizar_birkhoff(cubico_preparado_3, 3)


@pytest.fixture(scope="session")
def solucoes_quarticas(kolmogorov_quartico, birkhoff_quartico, modelo_quartico):
    """Soluções no toro do quártico na ordem 2 por todos os métodos"""
    H = para_acao_angulo(modelo_quartico)
    return {
        'kolmogorov': solucao_toro(kolmogorov_quartico),
        'birkhoff': solucao_toro(birkhoff_quartico),
        'lindstedt-b': executar_lindstedt(H, 'B', 2).solucao(),
        'lindstedt-k': executar_lindstedt(H, 'K', 2).solucao(),
    }


@pytest.fixture(scope="session")
def solucoes_cubicas(kolmogorov_cubico, birkhoff_cubico, modelo_cubico):
    """Soluções no toro do cúbico na ordem 3"""
    H = para_acao_angulo(modelo_cubico)
    return {
        'kolmogorov': solucao_toro(kolmogorov_cubico),
        'birkhoff': solucao_toro(birkhoff_cubico),
        'lindstedt-b': executar_lindstedt(H, 'B', 3).solucao(),
        'lindstedt-k': executar_lindstedt(H, 'K', 3).solucao(),
    }


@pytest.fixture(autouse=True)
def setup_logging():
    """Setup logging for all tests"""
    # Set all loggers to WARNING level to reduce output
    for logger_name in logging.root.manager.loggerDict:
        logging.getLogger(logger_name).setLevel(logging.WARNING)
