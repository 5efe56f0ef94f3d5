"""Services package - Cálculos numéricos de DFT em grafos"""
