"""
The character space V̂ and the actions of U and Ũ on it.

Modules:
- linchar: LinChar [A] and CharCombination
- actions: κ, the cocycle f, right/left actions and their fast paths, f*
"""

from sylow.characters.actions import CharacterSpace, kappa, rpc_positions
from sylow.characters.linchar import CharCombination, LinChar

__all__ = ["CharCombination", "CharacterSpace", "LinChar", "kappa", "rpc_positions"]
