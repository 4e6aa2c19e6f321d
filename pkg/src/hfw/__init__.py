"""Twisted hat Heegaard Floer workbench over F2 group rings."""
__version__ = "0.1.0"
