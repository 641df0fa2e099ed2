from .comparison import AutComparison, aut_comparison, graph_aut_order
from .constructions import (CLASSICAL_KINDS, classical_graph,
                            complete_multipartite, latin_square_graph,
                            steiner_graph)
from .params import SrgParams, srg_params
from .spectrum import (FamilyResult, checked_least_eigenvalue,
                       family_check, least_eigenvalue, srg_eigenvalues)

__all__ = [
    'AutComparison', 'CLASSICAL_KINDS', 'FamilyResult', 'SrgParams',
    'aut_comparison', 'checked_least_eigenvalue', 'classical_graph',
    'complete_multipartite', 'family_check', 'graph_aut_order',
    'latin_square_graph', 'least_eigenvalue', 'srg_eigenvalues',
    'srg_params', 'steiner_graph',
]
