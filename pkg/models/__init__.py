"""Models package - Modelos de dados e validação"""
