#!/usr/bin/env python3
"""
Script principal de execução do normalizador de Hamiltonianos
"""

import sys
from pathlib import Path

# Configuração mínima inicial - raiz do projeto
pasta_raiz = Path(__file__).parent
sys.path.insert(0, str(pasta_raiz))

# Importar função principal
from src.main import main

if __name__ == "__main__":
    sys.exit(main())
