from .colored_graph import AutReport, ColoredGraph
from .encodings import (aut_order_latin, aut_order_of, aut_order_sts,
                        latin_automorphisms, latin_colored_graph,
                        of_colored_graph, point_automorphisms,
                        sts_colored_graph)
from .groups import PointGroup, group_order
from .paratopism import (TriplePermutation, apply_triple_perm,
                         is_autoparatopism)
from .refinement import colored_graph_aut

__all__ = [
    'AutReport', 'ColoredGraph', 'PointGroup', 'TriplePermutation',
    'apply_triple_perm', 'aut_order_latin', 'aut_order_of', 'aut_order_sts',
    'colored_graph_aut', 'group_order', 'is_autoparatopism',
    'latin_automorphisms', 'latin_colored_graph', 'of_colored_graph',
    'point_automorphisms', 'sts_colored_graph',
]
