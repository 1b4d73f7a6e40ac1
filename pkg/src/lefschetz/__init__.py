"""Exact Gröbner bases and Lefschetz-property tests for artinian algebras."""

from .binomial import BinomialDecomposition, RowShapeViolation, SingularMinor, decompose_binomial_matrix
from .constructions import (
    MatrixIdealSpec,
    SingularTransform,
    change_of_variables,
    general_products_ideal,
    groebner_certificate,
    lemma31_ideal,
    lemma31_to_thm12,
    matrix_ideal,
    monomial_ci,
    paper_ideal_I,
    paper_monomial_J,
    principal_minors,
    thm12_ideal,
)
from .documents import DocumentError, IdealDocument, SessionConfig
from .field import Field, FieldElement, FieldMismatchError, QuadraticElement, field_arith
from .groebner import (
    GroebnerBasis,
    MonomialIdeal,
    buchberger,
    initial_ideal,
    is_groebner_basis,
    minimalize,
    normal_form,
    s_polynomial,
)
from .lefschetz import (
    LefschetzReport,
    LinearForm,
    Mode,
    RankEntry,
    Verdict,
    check_lefschetz,
    decide_lefschetz,
    lefschetz_via_initial_ideal,
    verify_prop23_isomorphisms,
)
from .linalg import exact_rank
from .parser import ParseError, parse_coefficient, parse_polynomial
from .polynomial import GREVLEX, LEX, Polynomial, RingMismatchError, TermOrder, compare_lex, leading_term, poly_arith
from .quotient import GradedQuotient, NotArtinian, build_quotient, hilbert_series_ci, multiplication_matrix

__version__ = "0.1.0"

__all__ = [
    "BinomialDecomposition",
    "DocumentError",
    "Field",
    "FieldElement",
    "FieldMismatchError",
    "GREVLEX",
    "GradedQuotient",
    "GroebnerBasis",
    "IdealDocument",
    "LEX",
    "LefschetzReport",
    "LinearForm",
    "MatrixIdealSpec",
    "Mode",
    "MonomialIdeal",
    "NotArtinian",
    "ParseError",
    "Polynomial",
    "QuadraticElement",
    "RankEntry",
    "RingMismatchError",
    "RowShapeViolation",
    "SessionConfig",
    "SingularMinor",
    "SingularTransform",
    "TermOrder",
    "Verdict",
    "__version__",
    "buchberger",
    "build_quotient",
    "change_of_variables",
    "check_lefschetz",
    "compare_lex",
    "decide_lefschetz",
    "decompose_binomial_matrix",
    "exact_rank",
    "field_arith",
    "general_products_ideal",
    "groebner_certificate",
    "hilbert_series_ci",
    "initial_ideal",
    "is_groebner_basis",
    "leading_term",
    "lefschetz_via_initial_ideal",
    "lemma31_ideal",
    "lemma31_to_thm12",
    "matrix_ideal",
    "minimalize",
    "monomial_ci",
    "multiplication_matrix",
    "normal_form",
    "paper_ideal_I",
    "paper_monomial_J",
    "parse_coefficient",
    "parse_polynomial",
    "poly_arith",
    "principal_minors",
    "s_polynomial",
    "thm12_ideal",
    "verify_prop23_isomorphisms",
]
