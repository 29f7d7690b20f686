"""Finite truncations of ordered Bratteli-Vershik systems."""
