from enum import Enum

from pydantic import BaseModel, ConfigDict


class ValueModel(BaseModel):
    """
    The base class for every domain value in the suite.

    Instances are frozen after construction, so tables, states and parameter
    sets can be shared between sweep workers without copying. Arbitrary types
    are allowed so numpy arrays can be carried as fields.
    """

    model_config = ConfigDict(
        frozen=True, arbitrary_types_allowed=True, from_attributes=True
    )


class Method(str, Enum):
    BGRWA = "bgrwa"
    VVP = "vvp"
    ED = "ed"


class Branch(str, Enum):
    GROUND = "ground"
    PLUS = "plus"
    MINUS = "minus"


class Qubit(int, Enum):
    """Row block of a product-basis vector: +z first, then -z."""

    UP = 0
    DOWN = 1

    @property
    def sign(self) -> int:
        return 1 if self is Qubit.UP else -1
