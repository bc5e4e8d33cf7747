from dataclasses import dataclass
from importlib.resources import files

from impartial.graphs.core import Graph
from impartial.graphs.textio import parse_graph


@dataclass(frozen=True)
class ExampleDefinition:
    name: str
    description: str
    kind: str  # "digraph" or "graph"
    impartial: bool | None = None  # None when the question does not apply

    @property
    def filename(self) -> str:
        return f"{self.name}.txt"

    def read_text(self) -> str:
        return files("impartial.corpus").joinpath("data", self.filename).read_text()

    def load(self) -> Graph:
        return parse_graph(self.read_text())


_registry: dict[str, ExampleDefinition] = {}


def register_example(example: ExampleDefinition) -> None:
    _registry[example.name] = example


def get_example(name: str) -> ExampleDefinition | None:
    return _registry.get(name)


def list_examples() -> list[ExampleDefinition]:
    return list(_registry.values())


def load_example(name: str) -> Graph:
    example = get_example(name)
    if example is None:
        raise KeyError(f"Unknown corpus example: {name}")
    return example.load()
