from dataclasses import dataclass

from impartial.graphs.core import Digraph
from impartial.graphs.textio import format_graph
from impartial.verdicts.tournaments import Tournament

ROUTES = ("structural", "sign-sum", "census")


@dataclass(frozen=True)
class ComponentWitness:
    vertices: tuple[int, ...]
    reason: str

    def describe(self) -> str:
        return f"component {{{', '.join(map(str, self.vertices))}}}: {self.reason}"

    def to_dict(self) -> dict:
        return {"kind": "component", "vertices": list(self.vertices), "reason": self.reason}


@dataclass(frozen=True)
class SignSumWitness:
    f: Digraph
    total: int
    members: int

    def describe(self) -> str:
        edges = ", ".join(f"{u}->{v}" for u, v in self.f.edges)
        return f"even subgraph [{edges}] has sign sum {self.total} over {self.members} copies"

    def to_dict(self) -> dict:
        return {"kind": "sign-sum", "f": format_graph(self.f), "total": self.total, "members": self.members}


@dataclass(frozen=True)
class CensusWitness:
    first: Tournament
    first_count: int
    second: Tournament
    second_count: int

    def describe(self) -> str:
        return (
            f"tournament #{self.first.orient} has {self.first_count} copies, "
            f"tournament #{self.second.orient} has {self.second_count}"
        )

    def to_dict(self) -> dict:
        return {
            "kind": "census",
            "tournaments": [self.first.orient, self.second.orient],
            "counts": [self.first_count, self.second_count],
        }


Witness = ComponentWitness | SignSumWitness | CensusWitness


@dataclass(frozen=True)
class Verdict:
    impartial: bool
    route: str
    witness: Witness | None = None

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"Unknown route: {self.route}")
        if self.impartial == (self.witness is not None):
            raise ValueError("A verdict carries a witness exactly when it is negative")

    def to_dict(self) -> dict:
        return {
            "impartial": self.impartial,
            "route": self.route,
            "witness": self.witness.to_dict() if self.witness else None,
        }
