"""Utils package - Funções auxiliares e utilitárias"""
