"""
Módulo inicial do pacote src
"""
__version__ = '0.1.0'
