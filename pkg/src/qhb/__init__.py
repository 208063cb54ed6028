"""Obstructions for Dehn surgeries bounding rational homology balls.

Exact-arithmetic tools: lens-space and surgery correction terms,
torus/thin knot V-sequences, plumbing graphs and Seifert presentations,
diagonal-lattice embedding, obstruction predicates, and a classification
sweep for integral surgeries on torus knots T(kq+-1, q).
"""

from .arith import (Semigroup, blow_down_reduce, euclid_steps, i_function,
                    mod_inverse, neg_cf_eval, neg_cf_expand,
                    riemenschneider_dual)
from .dinv import (d_lens, d_lens_q2_closed, d_lens_q3_closed, d_lens_table,
                   d_plumbing_boundary, d_surgery, d_unknot_integral,
                   integral_labels)
from .knots import (KnotModel, VSequence, owens_strle_m, v_thin, v_torus)
from .lattice import (EmbeddingWitness, NotEmbeddable, embed_lattice,
                      two_chain_obstruction)
from .obstruct import ObstructionReport, rhb_verdict
from .plumbing import (PlumbingGraph, SeifertData, join_reduce,
                       seifert_to_graph, torus_surgery_graph,
                       torus_surgery_seifert)
from .classify import SearchSpace, certify_bounds, classify_sweep

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
