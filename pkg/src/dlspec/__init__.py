"""Distance Laplacian spectra of small connected graphs."""
from .canonical import canonical_form
from .enumerate import enumerate_connected, stream_corpus
from .families import FamilySpec, instantiate, is_isomorphic, make_spec
from .graph import (
    Graph,
    complement,
    components,
    disjoint_union,
    from_graph6,
    is_connected,
    join,
    to_graph6,
)
from .spectra import (
    all_pairs_distances,
    distance_laplacian,
    exact_integer_multiplicity,
    laplacian,
    numeric_spectrum,
)
from .verify import classify, explore_open_cases, verify_theorem

__all__ = [
    "Graph", "all_pairs_distances", "canonical_form", "classify", "complement", "components",
    "disjoint_union", "distance_laplacian", "enumerate_connected", "exact_integer_multiplicity",
    "explore_open_cases", "FamilySpec", "from_graph6", "instantiate", "is_connected", "is_isomorphic",
    "join", "laplacian", "make_spec", "numeric_spectrum", "stream_corpus", "to_graph6", "verify_theorem",
]
