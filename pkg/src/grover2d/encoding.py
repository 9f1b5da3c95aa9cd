"""Labels shared by the census records and the two-atom register.

Gender rides on which atom absorbs a photon; degree rides on the joint
nuclear-spin state of both atoms (spin 1 is the high bit of the index).
"""

from __future__ import annotations

from enum import Enum


class Gender(Enum):
    FEMALE = "female"
    MALE = "male"

    @classmethod
    def parse(cls, token: str) -> "Gender":
        return cls(token.strip().lower())


class Degree(Enum):
    HIGHSCHOOL = "highschool"
    BACHELOR = "bachelor"
    MASTER = "master"
    DOCTORATE = "doctorate"

    @classmethod
    def parse(cls, token: str) -> "Degree":
        return cls(token.strip().lower())

    @property
    def spin_index(self) -> int:
        return SPIN_INDEX[self]

    @classmethod
    def from_spin_index(cls, index: int) -> "Degree":
        return SPIN_DEGREE[index]


class Atom(Enum):
    A1 = 0
    A2 = 1


class PhotonMode(Enum):
    A = "A"
    B = "B"

    @property
    def atom(self) -> Atom:
        return Atom.A1 if self is PhotonMode.A else Atom.A2


class EnergyLevel(Enum):
    GROUND = 0
    EXCITED = 1


# |0_1 0_2> HighSchool, |0_1 1_2> Bachelor, |1_1 0_2> Master, |1_1 1_2> Doctorate
SPIN_INDEX = {
    Degree.HIGHSCHOOL: 0b00,
    Degree.BACHELOR: 0b01,
    Degree.MASTER: 0b10,
    Degree.DOCTORATE: 0b11,
}
SPIN_DEGREE = {v: k for k, v in SPIN_INDEX.items()}

GENDER_ATOM = {Gender.FEMALE: Atom.A1, Gender.MALE: Atom.A2}
ATOM_GENDER = {v: k for k, v in GENDER_ATOM.items()}
GENDER_MODE = {Gender.FEMALE: PhotonMode.A, Gender.MALE: PhotonMode.B}
MODE_GENDER = {v: k for k, v in GENDER_MODE.items()}
