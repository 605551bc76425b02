"""The plactic monoid via row generators: Schensted products, tableau normal
forms, plactic-algebra arithmetic and an exhaustive Gröbner–Shirshov check."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    Alphabet,
    Row,
    dominates,
    row_compare,
    row_from_letters,
    row_to_letters,
    rowword_compare,
)
from .schensted import (  # noqa: E402
    RowProduct,
    check_equivalence,
    insert_letter,
    multiply_rows,
    multiply_rows_closed_form,
    multiply_rows_schensted,
)
from .tableau import (  # noqa: E402
    Tableau,
    enumerate_tableaux,
    normal_form_letters,
    normal_form_rowword,
    plactic_equivalent,
    tableau_multiply,
)
from .knuth import congruence_class, knuth_neighbors, oracle_equivalent  # noqa: E402
from .algebra import AlgebraElement, is_zero_mod_ideal, reduce_free_word  # noqa: E402
from .gsverify import (  # noqa: E402
    ReductionTrace,
    VerificationReport,
    build_relation,
    reduce_triple,
    verify_gs_basis,
)
