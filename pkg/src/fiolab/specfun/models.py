"""Result records for special-function evaluation."""

from dataclasses import dataclass
from typing import Literal

type BesselMethod = Literal["series", "asymptotic", "recurrence"]


@dataclass(frozen=True, slots=True)
class BesselEval:
    """
    One evaluation of J_order(argument) together with the regime that produced it.

    Attributes:
        order: Real order >= 0.
        argument: Real argument >= 0.
        value: J_order(argument).
        method: ``series``, ``asymptotic`` or ``recurrence``.

    """

    order: float
    argument: float
    value: float
    method: BesselMethod
