from .factorization import (FactorizationSearch, all_one_factorizations,
                            enumerate_one_factorizations)
from .latin import (LatinSearch, all_latin_squares,
                    count_latin_via_permanents, enumerate_latin,
                    extension_rows, latin_rectangles, reduced_latin_squares,
                    reduced_to_labeled)
from .matchings import count_one_factors, perfect_matchings
from .search import TreeSearch, Visitor, run_search
from .sts import StsSearch, all_sts, enumerate_sts

__all__ = [
    'FactorizationSearch', 'LatinSearch', 'StsSearch', 'TreeSearch',
    'Visitor', 'all_latin_squares', 'all_one_factorizations', 'all_sts',
    'count_latin_via_permanents', 'count_one_factors',
    'enumerate_latin', 'enumerate_one_factorizations', 'enumerate_sts',
    'extension_rows', 'latin_rectangles', 'perfect_matchings',
    'reduced_latin_squares', 'reduced_to_labeled', 'run_search',
]
