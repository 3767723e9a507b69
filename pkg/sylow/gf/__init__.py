"""
Finite field arithmetic over F_q, q = p^e, p odd.

Modules:
- field: FieldCtx lookup tables, FieldElem wrapper, trace
"""

from sylow.gf.field import FieldCtx, FieldElem, arith, is_irreducible, make_field, render

__all__ = ["FieldCtx", "FieldElem", "arith", "is_irreducible", "make_field", "render"]
