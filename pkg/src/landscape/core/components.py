"""Strong components of the implication digraph and the order between them."""

import logging
from typing import Dict, List, Sequence, Tuple

from landscape.exceptions import UnsatisfiableFormulaError
from landscape.models import Genotype, ImplicationDigraph, ReachabilityIndex, SccDecomposition

logger = logging.getLogger(__name__)


def _tarjan(successors: Sequence[Sequence[int]]) -> List[List[int]]:
    """
    Iterative Tarjan: components come out sinks first (reverse topological order).

    The explicit work stack holds (vertex, next successor position) so the
    recursion depth never grows with the number of vertices.
    """
    vertex_count = len(successors)
    index = [-1] * vertex_count
    lowlink = [0] * vertex_count
    on_stack = [False] * vertex_count
    stack: List[int] = []
    found: List[List[int]] = []
    counter = 0

    for root in range(vertex_count):
        if index[root] != -1:
            continue

        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]

        while work:
            vertex, position = work[-1]
            targets = successors[vertex]
            if position < len(targets):
                work[-1] = (vertex, position + 1)
                target = targets[position]
                if index[target] == -1:
                    index[target] = lowlink[target] = counter
                    counter += 1
                    stack.append(target)
                    on_stack[target] = True
                    work.append((target, 0))
                elif on_stack[target] and index[target] < lowlink[vertex]:
                    lowlink[vertex] = index[target]
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                if lowlink[vertex] < lowlink[parent]:
                    lowlink[parent] = lowlink[vertex]

            if lowlink[vertex] == index[vertex]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component.append(member)
                    if member == vertex:
                        break
                found.append(component)

    return found


def _build_reachability(
    components: Sequence[Tuple[int, ...]], condensation: Sequence[Tuple[int, ...]]
) -> ReachabilityIndex:
    """Bitset closure over the nontrivial components, one reverse-topological pass."""
    target_bit: Dict[int, int] = {}
    for component, members in enumerate(components):
        if len(members) > 1:
            target_bit[component] = len(target_bit)

    closure = [0] * len(components)
    for component in range(len(components) - 1, -1, -1):
        bits = 0
        bit = target_bit.get(component)
        if bit is not None:
            bits = 1 << bit
        for target in condensation[component]:
            bits |= closure[target]
        closure[component] = bits

    return ReachabilityIndex(target_bit=target_bit, closure=tuple(closure))


def scc(digraph: ImplicationDigraph) -> SccDecomposition:
    """
    Decompose the digraph into strong components.

    Args:
        digraph: Implication digraph

    Returns:
        SccDecomposition with components in topological order, every
        condensation edge going from a lower to a higher index
    """
    found = _tarjan(digraph.successors)
    found.reverse()

    components = tuple(tuple(sorted(members)) for members in found)
    component_of = [0] * digraph.vertex_count
    for component, members in enumerate(components):
        for vertex in members:
            component_of[vertex] = component

    complement_of = tuple(component_of[members[0] ^ 1] for members in components)

    condensation = []
    for component, members in enumerate(components):
        targets = set()
        for vertex in members:
            for target in digraph.successors[vertex]:
                target_component = component_of[target]
                if target_component != component:
                    targets.add(target_component)
        condensation.append(tuple(sorted(targets)))

    reach = _build_reachability(components, condensation)
    logger.debug(
        "scc: %d vertices, %d components, %d nontrivial",
        digraph.vertex_count,
        len(components),
        len(reach.target_bit),
    )

    return SccDecomposition(
        n=digraph.n,
        component_of=tuple(component_of),
        components=components,
        complement_of=complement_of,
        condensation=tuple(condensation),
        reach=reach,
    )


def is_satisfiable(decomposition: SccDecomposition) -> bool:
    """True iff no locus has both of its alleles in one strong component."""
    component_of = decomposition.component_of
    for locus in range(decomposition.n):
        if component_of[2 * locus] == component_of[2 * locus + 1]:
            return False
    return True


def reaches(decomposition: SccDecomposition, source: int, target: int) -> bool:
    """Whether component source reaches component target in the condensation."""
    if source == target:
        return True
    if source > target:
        return False

    reach = decomposition.reach
    bit = reach.target_bit.get(target)
    if bit is not None:
        return bool((reach.closure[source] >> bit) & 1)

    # Trivial target: search the condensation, never past the target's index.
    seen = {source}
    stack = [source]
    while stack:
        component = stack.pop()
        for successor in decomposition.condensation[component]:
            if successor == target:
                return True
            if successor < target and successor not in seen:
                seen.add(successor)
                stack.append(successor)
    return False


def comparable(decomposition: SccDecomposition, a: int, b: int) -> bool:
    """
    Whether two components are related in the order C(x) <= C(y) iff x ~> y.

    Args:
        decomposition: Strong component decomposition
        a: Component index
        b: Component index

    Returns:
        True iff a <= b or b <= a
    """
    count = decomposition.component_count
    if not (0 <= a < count and 0 <= b < count):
        raise ValueError("Component indices %d, %d outside [0, %d)" % (a, b, count))
    lower, upper = min(a, b), max(a, b)
    return reaches(decomposition, lower, upper)


def satisfying_assignment(decomposition: SccDecomposition) -> Genotype:
    """
    A viable genotype: at each locus pick the allele whose component comes later.

    Raises:
        UnsatisfiableFormulaError: if some locus has both alleles in one component
    """
    if not is_satisfiable(decomposition):
        raise UnsatisfiableFormulaError("Formula has a contradictory cycle; no viable genotype exists")

    component_of = decomposition.component_of
    n = decomposition.n
    alleles = ["1" if component_of[2 * locus + 1] > component_of[2 * locus] else "0" for locus in range(n)]
    return Genotype.parse("".join(alleles))
