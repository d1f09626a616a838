"""Pydantic models for resolved experiment configs."""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from grouplab.core.alphabet import Word
from grouplab.core.cayley import DEFAULT_BALL_CAP
from grouplab.core.oracles import FreeGroup, FreeProductOfCyclics, GroupOracle
from grouplab.core.small_cancellation import DEFAULT_RADIUS_BUDGET, SmallCancellation

GenericSet = Literal["barrier", "all", "none"]


class GroupSpec(BaseModel):
    """!group: which normal-form oracle to compute in."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["free", "free_product", "small_cancellation"]
    rank: Optional[int] = Field(default=None, ge=1, le=26)
    orders: Optional[List[int]] = None
    relators: List[str] = Field(default_factory=list)
    radius_budget: int = Field(default=DEFAULT_RADIUS_BUDGET, ge=1)

    @field_validator("orders", mode="before")
    @classmethod
    def _infinite_orders(cls, value: object) -> object:
        if isinstance(value, (list, tuple)):
            infinite = ("inf", "infinity")
            return [0 if isinstance(v, str) and v.lower() in infinite else v for v in value]
        return value

    @model_validator(mode="after")
    def _check_kind(self) -> "GroupSpec":
        if self.kind == "free_product":
            if not self.orders:
                raise ValueError("free_product needs 'orders'")
            for n in self.orders:
                if n != 0 and n < 2:
                    raise ValueError(f"cyclic orders must be 0/'inf' or >= 2, got {n}")
        else:
            if self.rank is None:
                raise ValueError(f"{self.kind} needs 'rank'")
        if self.kind == "small_cancellation" and not self.relators:
            raise ValueError("small_cancellation needs 'relators'")
        if self.kind != "small_cancellation" and self.relators:
            raise ValueError(f"{self.kind} takes no relators")
        return self

    @property
    def generator_count(self) -> int:
        if self.kind == "free_product":
            return len(self.orders or [])
        return self.rank or 0

    def build(self, radius_budget: Optional[int] = None) -> GroupOracle:
        if self.kind == "free":
            return FreeGroup(self.generator_count)
        if self.kind == "free_product":
            return FreeProductOfCyclics(self.orders or [])
        oracle = FreeGroup(self.generator_count)
        relators = [oracle.alphabet.parse(r) for r in self.relators]
        budget = radius_budget or self.radius_budget
        return SmallCancellation(self.generator_count, relators, budget)


class Budgets(BaseModel):
    """!budget: enumeration limits."""

    model_config = ConfigDict(extra="forbid")

    ball_cap: int = Field(default=DEFAULT_BALL_CAP, gt=0)
    radius_budget: Optional[int] = Field(default=None, ge=1)
    max_pairs: int = Field(default=10**5, gt=0)


class Params(BaseModel):
    """!params: experiment parameters. Unset fields are resolved by the loader."""

    model_config = ConfigDict(extra="forbid")

    g_H: Optional[str] = None
    g_K: Optional[str] = None
    g: Optional[str] = None
    F: List[str] = Field(default_factory=list)
    M: Optional[int] = Field(default=None, ge=1)
    epsilon: int = Field(default=0, ge=0)
    f: Optional[str] = None
    theta: float = Field(default=0.5, gt=0, le=1)
    L_min: int = Field(default=1, ge=1)
    L: float = Field(default=5.0, gt=0)
    tau: float = Field(default=2.0, gt=0)
    r0: Optional[int] = Field(default=None, ge=0)
    r_min: Optional[int] = Field(default=None, ge=0)
    r_max: int = Field(default=8, ge=1)
    delta_min: float = Field(default=0.05, ge=0)
    tolerance: float = Field(default=0.02, gt=0)
    r2_min: float = Field(default=0.98, ge=0, le=1)
    decay_max: float = Field(default=1.0, gt=0)
    max_syllables: int = Field(default=6, ge=1)
    max_length: int = Field(default=12, ge=1)
    max_words: int = Field(default=10**6, ge=1)
    generic_set: GenericSet = "barrier"
    calibration_size: int = Field(default=100, ge=1)
    lambda_cal: float = Field(default=2.0, ge=1)
    lambda_max: float = Field(default=2.0, ge=1)

    @model_validator(mode="after")
    def _check_window(self) -> "Params":
        if self.r_min is not None and self.r_min >= self.r_max:
            raise ValueError(f"r_min ({self.r_min}) must be smaller than r_max ({self.r_max})")
        return self


class ExperimentConfig(BaseModel):
    """A fully parsed config document."""

    model_config = ConfigDict(extra="forbid")

    group: GroupSpec
    H: List[str] = Field(default_factory=list)
    K: Optional[List[str]] = None
    params: Params = Field(default_factory=Params)
    budget: Budgets = Field(default_factory=Budgets)
    seed: int = 0
    experiment: Optional[str] = None

    _oracle: Optional[GroupOracle] = PrivateAttr(default=None)

    @model_validator(mode="after")
    def _default_k(self) -> "ExperimentConfig":
        if self.K is None:
            self.K = list(self.H)
        return self

    @property
    def oracle(self) -> GroupOracle:
        if self._oracle is None:
            self._oracle = self.group.build(self.budget.radius_budget)
        return self._oracle

    def word(self, text: Optional[str]) -> Word:
        """Parse a word of this config's alphabet; None is the identity."""
        if text is None:
            return ()
        return self.oracle.alphabet.parse(text)

    @property
    def H_words(self) -> List[Word]:
        return [self.word(w) for w in self.H]

    @property
    def K_words(self) -> List[Word]:
        return [self.word(w) for w in (self.K or [])]

    @property
    def F_words(self) -> List[Word]:
        return [self.word(w) for w in self.params.F]
