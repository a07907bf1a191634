"""Implication digraph of an incompatibility formula."""

from typing import List, Sequence, Set

from landscape.models import Formula, ImplicationDigraph, Literal

FORWARD = "forward"
BACKWARD = "backward"


def build_digraph(formula: Formula) -> ImplicationDigraph:
    """
    Build the implication digraph on the 2n alleles.

    Each incompatibility (x, y) contributes the two edges x -> not y and
    y -> not x. Adjacency lists keep clause order, so the result is
    deterministic for a given formula.

    Args:
        formula: The incompatibility formula

    Returns:
        ImplicationDigraph with successor and predecessor lists
    """
    vertex_count = 2 * formula.n
    successors: List[List[int]] = [[] for _ in range(vertex_count)]
    predecessors: List[List[int]] = [[] for _ in range(vertex_count)]

    for clause in formula.clauses:
        x = clause.first.vertex
        y = clause.second.vertex
        # x -> not y
        successors[x].append(y ^ 1)
        predecessors[y ^ 1].append(x)
        # y -> not x
        successors[y].append(x ^ 1)
        predecessors[x ^ 1].append(y)

    return ImplicationDigraph(
        n=formula.n,
        successors=tuple(tuple(targets) for targets in successors),
        predecessors=tuple(tuple(sources) for sources in predecessors),
    )


def reachable_vertices(adjacency: Sequence[Sequence[int]], start: int) -> Set[int]:
    """Vertices reachable from start (start included), by iterative DFS."""
    seen = {start}
    stack = [start]
    while stack:
        vertex = stack.pop()
        for target in adjacency[vertex]:
            if target not in seen:
                seen.add(target)
                stack.append(target)
    return seen


def reach_set(digraph: ImplicationDigraph, x: Literal, direction: str = FORWARD) -> Set[Literal]:
    """
    Alleles reachable from x (forward) or reaching x (backward).

    Args:
        digraph: Implication digraph
        x: Starting allele
        direction: "forward" for L+(x), "backward" for L-(x)

    Returns:
        Set of alleles, always including x itself
    """
    if direction == FORWARD:
        adjacency = digraph.successors
    elif direction == BACKWARD:
        adjacency = digraph.predecessors
    else:
        raise ValueError("direction must be '%s' or '%s', got %r" % (FORWARD, BACKWARD, direction))

    if not 0 <= x.locus < digraph.n:
        raise ValueError("Allele %s outside a digraph on %d loci" % (x, digraph.n))

    vertices = reachable_vertices(adjacency, x.vertex)
    return {Literal.from_vertex(vertex) for vertex in vertices}
