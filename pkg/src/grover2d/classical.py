"""Classical two-predicate linear scan with comparison counting.

Cost model: one comparison per field test. The first predicate is tested on
every record, the second only on records that passed the first. No early
exit, since every match is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .database import CensusRecord
from .encoding import Degree, Gender


class QueryOrder(Enum):
    GENDER_FIRST = "gender-first"
    EDUCATION_FIRST = "education-first"


@dataclass
class ClassicalResult:
    names: list[str]
    comparisons: int
    order: QueryOrder


def linear_search(
    records: Sequence[CensusRecord],
    gender: Gender,
    degree: Degree,
    order: QueryOrder = QueryOrder.GENDER_FIRST,
) -> ClassicalResult:
    if order is QueryOrder.GENDER_FIRST:
        first = lambda r: r.gender is gender
        second = lambda r: r.degree is degree
    else:
        first = lambda r: r.degree is degree
        second = lambda r: r.gender is gender

    comparisons = 0
    names = []
    for r in records:
        comparisons += 1
        if not first(r):
            continue
        comparisons += 1
        if second(r):
            names.append(r.name)
    return ClassicalResult(names, comparisons, order)
