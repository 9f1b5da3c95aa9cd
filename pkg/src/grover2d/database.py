"""Census records: CSV ingestion, synthetic generation, bucket index.

CSV format is ``name,gender,degree`` with lowercase enum tokens, LF line
endings, UTF-8 and no quoting (commas are not allowed in names).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .encoding import Degree, Gender

HEADER = "name,gender,degree"

_CONSONANTS = "bdfghjklmnprstvz"
_VOWELS = "aeiou"
_SYLLABLES = [c + v for c in _CONSONANTS for v in _VOWELS]


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class CensusRecord:
    name: str
    gender: Gender
    degree: Degree

    def __post_init__(self):
        if not self.name or self.name != self.name.strip():
            raise ValueError(f"invalid name {self.name!r}")
        if any(ch in self.name for ch in ",\n\r"):
            raise ValueError(f"name may not contain commas or newlines: {self.name!r}")


def parse_records(text: str) -> list[CensusRecord]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].strip().lower() != HEADER:
        got = lines[0] if lines else ""
        raise ParseError(1, f"expected header {HEADER!r}, got {got!r}")

    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise ParseError(lineno, f"expected 3 fields, got {len(fields)}")
        name, g, d = (f.strip() for f in fields)
        if not name:
            raise ParseError(lineno, "empty name")
        try:
            gender = Gender.parse(g)
        except ValueError:
            raise ParseError(lineno, f"unknown gender {g!r}") from None
        try:
            degree = Degree.parse(d)
        except ValueError:
            raise ParseError(lineno, f"unknown degree {d!r}") from None
        records.append(CensusRecord(name, gender, degree))
    return records


def serialize_records(records: Iterable[CensusRecord]) -> str:
    rows = [HEADER] + [f"{r.name},{r.gender.value},{r.degree.value}" for r in records]
    return "\n".join(rows) + "\n"


def read_records(path) -> list[CensusRecord]:
    return parse_records(Path(path).read_text(encoding="utf-8"))


def write_records(path, records: Iterable[CensusRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_records(records))


def _check_distribution(weights: Sequence[float], what: str) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or not np.all(np.isfinite(w)) or np.any(w < 0) or abs(w.sum() - 1) > 1e-9:
        raise ValueError(f"{what} must be nonnegative and sum to 1, got {list(weights)}")
    return w / w.sum()


def _unique_names(rng: np.random.Generator, count: int) -> list[str]:
    # Every syllable is consonant+vowel, so concatenations decode uniquely.
    s = len(_SYLLABLES)
    length = max(2, math.ceil(math.log(4 * count, s)))
    ids = rng.choice(s**length, size=count, replace=False)
    names = []
    for i in ids:
        parts = []
        for _ in range(length):
            i, r = divmod(int(i), s)
            parts.append(_SYLLABLES[r])
        names.append("".join(parts).capitalize())
    return sorted(names)


def generate_records(
    seed: int,
    count: int,
    gender_split: float = 0.5,
    degree_weights: Sequence[float] = (0.25, 0.25, 0.25, 0.25),
) -> list[CensusRecord]:
    """Synthetic census, alphabetical by name, reproducible under ``seed``.

    ``gender_split`` is the probability that a record is female; degrees are
    drawn from ``degree_weights`` in HighSchool/Bachelor/Master/Doctorate order.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if not 0.0 <= gender_split <= 1.0:
        raise ValueError(f"gender_split must be in [0, 1], got {gender_split}")
    if len(degree_weights) != 4:
        raise ValueError(f"need 4 degree weights, got {len(degree_weights)}")
    dw = _check_distribution(degree_weights, "degree_weights")

    rng = np.random.Generator(np.random.PCG64(seed))
    names = _unique_names(rng, count)
    female = rng.random(count) < gender_split
    degrees = rng.choice(4, size=count, p=dw)
    deg_list = list(Degree)
    return [
        CensusRecord(n, Gender.FEMALE if f else Gender.MALE, deg_list[d])
        for n, f, d in zip(names, female, degrees)
    ]


@dataclass
class RecordIndex:
    buckets: dict[tuple[Gender, Degree], list[str]] = field(
        default_factory=lambda: {(g, d): [] for g in Gender for d in Degree}
    )
    total: int = 0

    def bucket(self, gender: Gender, degree: Degree) -> list[str]:
        return self.buckets[(gender, degree)]


def build_index(records: Iterable[CensusRecord]) -> RecordIndex:
    index = RecordIndex()
    for r in records:
        index.buckets[(r.gender, r.degree)].append(r.name)
        index.total += 1
    return index


def brute_force_filter(records: Iterable[CensusRecord], gender: Gender, degree: Degree) -> list[str]:
    return [r.name for r in records if r.gender is gender and r.degree is degree]
