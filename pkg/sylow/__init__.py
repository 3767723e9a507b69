"""
Exact monomial orbits and André–Neto supercharacters of Sylow p-subgroups
of the classical groups of types B, C and D over F_q, p odd.
"""

__version__ = "0.1.0"
