"""Dictionary of matched objects, cross-module checks, and the CLI."""
from .checks import (STATED_HOM, check_row, eis_support, run_all, stated_hom, support_labels,
                     support_parity, verify_al_swap, verify_hom_table, verify_newform_sequences,
                     verify_support_disjointness, verify_table, verify_wakimoto_equivariance)
from .cli import SUITES, build_parser, combine, main, run_cli, run_suite, run_suites
from .table import (AutomorphicDescriptor, MatchEntry, SpectralDescriptor, dictionary_table,
                    lookup, lookup_spectral)

__all__ = [
    "STATED_HOM", "check_row", "eis_support", "run_all", "stated_hom", "support_labels",
    "support_parity", "verify_al_swap", "verify_hom_table", "verify_newform_sequences",
    "verify_support_disjointness", "verify_table", "verify_wakimoto_equivariance", "SUITES",
    "build_parser", "combine", "main", "run_cli", "run_suite", "run_suites",
    "AutomorphicDescriptor", "MatchEntry", "SpectralDescriptor", "dictionary_table", "lookup",
    "lookup_spectral",
]
