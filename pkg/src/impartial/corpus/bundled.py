from impartial.corpus.registry import ExampleDefinition, register_example

EXAMPLES = [
    ExampleDefinition("intro-ex1", "Oriented 4-vertex path with 3 copies in every 4-vertex tournament", "digraph", True),
    ExampleDefinition("intro-ex2", "Two intro-ex1 copies joined by a directed bridge", "digraph", True),
    ExampleDefinition("path8", "Undirected path on 8 vertices", "graph"),
    ExampleDefinition("sec4-H", "Host tree for the Sub_F sign sequence 1, 1, 1, -1", "digraph", False),
    ExampleDefinition("sec4-F", "Even spanning forest with four copies in sec4-H", "graph"),
    ExampleDefinition("sec5-mirror", "10-vertex tree with mirror-bridge 0-5", "graph"),
    ExampleDefinition("sec5-nomirror", "11-vertex tree without a mirror-bridge", "graph"),
    ExampleDefinition("sec5-branch", "Tree whose branch cut from 3-4 is {4, 5, 6}", "graph"),
    ExampleDefinition("sec5-F", "18-vertex forest cut in three stages", "graph"),
    ExampleDefinition("sec5-F-directed", "sec5-F with orientations", "digraph", False),
    ExampleDefinition("sec7-G", "Two 8-vertex paths joined at their middles", "graph"),
    ExampleDefinition("pathaa", "Directed path 0->1->2", "digraph", False),
    ExampleDefinition("pathab", "Path 0->1<-2", "digraph", False),
    ExampleDefinition("pathba", "Path 0<-1->2", "digraph", False),
    ExampleDefinition("pathaaa", "Directed path on 4 vertices", "digraph", False),
    ExampleDefinition("pathaba", "Path 0->1<-2->3", "digraph", False),
    ExampleDefinition("pathaab", "Path 0->1->2<-3", "digraph", True),
    ExampleDefinition("pathbaa", "Path 0<-1->2->3", "digraph", True),
    ExampleDefinition("rbm-1", "Single vertex", "digraph", True),
    ExampleDefinition("rbm-2", "Single directed edge", "digraph", True),
    ExampleDefinition("rbm-4", "rbm-2 doubled at vertex 0", "digraph", True),
    ExampleDefinition("rbm-8", "rbm-4 doubled at vertex 0", "digraph", True),
    ExampleDefinition("rbm-16", "rbm-8 doubled at vertex 0", "digraph", True),
    ExampleDefinition("transitive-triangle", "Transitive tournament on 3 vertices", "digraph", False),
    ExampleDefinition("directed-triangle", "Directed 3-cycle", "digraph", False),
]


def register_bundled() -> None:
    for example in EXAMPLES:
        register_example(example)
