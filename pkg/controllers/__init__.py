"""Controllers package - Orquestração do fluxo MVC"""
