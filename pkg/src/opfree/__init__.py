"""Free operated monoids and free Rota-Baxter algebras in four guises.

The same free structure realized on decorated Motzkin paths, bracketed
words, vertex-decorated planar rooted forests and angularly decorated
forests, with the explicit bijections between them and the weight-λ
Rota-Baxter products they carry.
"""

from .coeffs import (
    LAMBDA,
    LambdaPoly,
    coefficient_arith,
    lambda_specialize,
)
from .lincomb import LinearCombination, lincomb_arith
from .paths import (
    DEFAULT_OMEGA,
    MotzkinPath,
    Step,
    decompose_indecomposable,
    down,
    level,
    link,
    matching_pairs,
    path_measures,
    path_validate,
    raised,
    standard_decomposition_path,
    up,
)
from .words import (
    BracketedWord,
    conjugate_index,
    word_bracket,
    word_concat,
    word_flatten,
    word_predicates,
)
from .forests import (
    ALeaf,
    AngularForest,
    DecoratedForest,
    Graft,
    Leaf,
    Node,
    angular_graft,
    angular_standard_decomposition,
    edge_biorder,
    forest_concat,
    forest_graft,
    forest_measures,
    is_ladder_free,
    is_leaf_spaced,
    vertex_biorder,
)
from .bijections import (
    OperatedTarget,
    aforest_to_lforest,
    aforest_to_valleypath,
    aforest_to_valleypath_via_edges,
    family_convert,
    forest_to_path,
    lforest_to_aforest,
    path_to_forest,
    path_to_word,
    universal_extend,
    valleypath_to_aforest,
    word_to_path,
)
from .rota_baxter import (
    RBTarget,
    rb_evaluate,
    rb_mul,
    rb_mul_aforest,
    rb_mul_lforest,
    rb_mul_path,
    rb_mul_word,
    rb_operator_p,
    seq_rb_target,
)
from .enumeration import (
    catalan_number,
    elements_up_to,
    enumerate_family,
    motzkin_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
