from enum import Enum
from typing import List, Literal, Optional, Union
from fractions import Fraction
from pydantic import BaseModel, ConfigDict

TreeMode = Literal["plain", "ordinal"]
Side = Literal["left", "right"]
Outcome = Literal["hit", "miss"]
QueryMode = Literal["batch", "traditional", "locked"]


class NodeClass(str, Enum):
    TERMINAL = "Terminal"
    PARTIAL_KNOT = "PartialKnot"
    COMPLETE_KNOT = "CompleteKnot"


class ValidationReport(BaseModel):
    bst_order: bool = True
    axis_ascending: bool = True
    axis_matches_inorder: bool = True
    counters_consistent: bool = True
    adjacent_depths_differ: bool = True
    adjacent_ancestry: bool = True
    adjacent_classes_differ: bool = True
    size_consistent: bool = True
    messages: List[str] = []

    @property
    def ok(self) -> bool:
        return not self.failed_checks()

    def failed_checks(self) -> List[str]:
        return [name for name, value in self.model_dump(exclude={"messages"}).items() if not value]


class DeleteStats(BaseModel):
    relinks: int = 0
    counter_fixups: int = 0
    case: NodeClass
    alternate: Optional[int] = None  # key of the transplanted node, CompleteKnot case only


class FlexStep(BaseModel):
    flexion: int
    step: Literal[-1, 1]


class PathStep(BaseModel):
    key: int
    total: int
    low: int
    high: int


class SkeletonPlan(BaseModel):
    n: int
    root: Optional[int] = None
    # index p - 1 describes position p
    parent: List[Optional[int]] = []
    side: List[Optional[Side]] = []
    left: List[Optional[int]] = []
    right: List[Optional[int]] = []
    depth: Optional[int] = None

    def children(self, position: int) -> tuple:
        return self.left[position - 1], self.right[position - 1]


class SortReport(BaseModel):
    n: int
    initial_runs: int
    rounds: int
    comparisons: int
    splices: int


class QueryReport(BaseModel):
    mode: QueryMode
    queries: List[int] = []
    outcomes: List[Outcome] = []
    comparisons: int = 0
    nodes_visited: int = 0
    locked_length: Optional[int] = None

    @property
    def hits(self) -> int:
        return sum(1 for outcome in self.outcomes if outcome == "hit")

    @property
    def misses(self) -> int:
        return len(self.outcomes) - self.hits

    def hit_set(self) -> set:
        return {key for key, outcome in zip(self.queries, self.outcomes) if outcome == "hit"}

    def summary(self) -> str:
        line = (
            f"mode={self.mode} queries={len(self.queries)} hits={self.hits} "
            f"misses={self.misses} comparisons={self.comparisons} nodes_visited={self.nodes_visited}"
        )
        if self.locked_length is not None:
            line += f" locked={self.locked_length}"
        return line


class BoundaryParams(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    kappa: int
    lambda_: Fraction
    crossover: Fraction
    hbar: float
    theta: Optional[float] = None
    margin: float


class BenchRow(BaseModel):
    mode: str
    n: int
    kappa: int
    comparisons: int = 0
    relinks: int = 0
    nodes_visited: int = 0
    wall_nanos: int = 0
    depth: int = 0


class Dataset(BaseModel):
    keys: List[int]
    origin: Literal["generated", "file"]
    seed: Optional[int] = None
    distribution: Optional[str] = None
    path: Optional[str] = None


Number = Union[int, float, Fraction]
