"""Graph powers that are far from chromatic-choosable: construction and checks."""

from .coloring import (ChoiceBounds, ChoosabilityResult, choice_number_bounds, choosable,
                       chromatic_exact, list_coloring, multipartite, verify_witness)
from .construction import (ConstructionGraph, IncidenceGraph, base_family_graph, build_G,
                           build_H, build_construction)
from .field import FieldElement, FiniteField
from .graph import (DistanceMatrix, Graph, ball, bfs_all_pairs, clique_lower,
                    degeneracy_order, exact_clique, power)
from .plane import AffinePlane, plane_build, plane_check
from .report import VerificationReport
from .verify import (verify_counts, verify_fk_bound, verify_lemma1, verify_lemma2,
                     verify_upper_chain)

__version__ = "0.1.0"
