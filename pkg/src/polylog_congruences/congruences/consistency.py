"""Cross-checks between the polynomial congruences in ``t`` and their numerical specialisations.

A right-hand side of a MAIN case evaluated at ``t0`` must agree with the
right-hand side of the matching NUM case (times a known scale) modulo the
smaller of the two moduli.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from polylog_congruences.arith import PadicContext
from polylog_congruences.congruences.main import main_sides
from polylog_congruences.congruences.registry import Comparison, congruence, get_case


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeEdge:
    main_id: str
    t: int
    num_id: str
    scale: Callable[[int], Fraction | int] = lambda p: 1

    def label(self) -> str:
        return f"{self.main_id}@t={self.t} ~ {self.num_id}"


LATTICE: tuple[LatticeEdge, ...] = (
    LatticeEdge("MAIN-CC1", 2, "NUM-SUN-1"),
    LatticeEdge("MAIN-CC2", 2, "NUM-SUN-2"),
    LatticeEdge("MAIN-CC2", 4, "NUM-SUN-3"),
    LatticeEdge("MAIN-D3", 4, "NUM-D3T4"),
    LatticeEdge("MAIN-CC1", -1, "NUM-FIB-P1"),
    LatticeEdge("MAIN-CC2", -1, "NUM-FIB-P2"),
    LatticeEdge("MAIN-CC3", -1, "NUM-FIB-H1"),
    LatticeEdge("MAIN-CC4", -1, "NUM-FIB-H2"),
    LatticeEdge("MAIN-CC7", 1, "NUM-CC7-T1"),
    LatticeEdge("MAIN-CC7", 3, "NUM-CC7-T3", lambda p: 3 ** (p - 1)),
    LatticeEdge("MAIN-CC8", -1, "NUM-CC8-LM1", lambda p: -1),
    LatticeEdge("MAIN-CC9", 1, "NUM-CC9-B", lambda p: Fraction(1, 2)),
)


def consistency_lattice(ctx: PadicContext) -> list[Comparison]:
    """One comparison per edge whose cases both admit ``ctx.p``."""
    p = ctx.p
    out = []
    for edge in LATTICE:
        main, num = get_case(edge.main_id), get_case(edge.num_id)
        if not (main.condition.admits(p) and num.condition.admits(p)):
            continue
        exponent = min(main.modulus_exponent, num.modulus_exponent, ctx.k)
        _, main_rhs = main_sides(edge.main_id, ctx, edge.t)
        num_rhs: Any = num.evaluate(ctx)[0].rhs
        out.append(Comparison(edge.label(), main_rhs, num_rhs * edge.scale(p), exponent))
    logger.debug("Lattice edges evaluated", extra={"p": p, "edges": len(out)})
    return out


congruence(
    "NUM-LATTICE",
    kind="numeric",
    exponent=3,
    anchor="Our new contributions due to Equation",
    guard=3,
    notes="MAIN right-hand sides at t in {1, 2, 3, 4, -1} against the NUM closed forms",
)(consistency_lattice)
