"""Exact arithmetic in truncated Witt rings and Galois rings, Teichmuller
boxes, brute-force zero counting over Z_q^n, and p-divisibility bounds."""

from .bounds import (
    BoundReport,
    ax_katz_bound,
    bound_report,
    ceil_star,
    cwg_bound,
    general_bound,
    improved_bound,
    kmr_bound,
    minimal_d,
    stacked_bound,
)
from .box import (
    BoxPoint,
    BoxSpec,
    box_enumerate,
    box_from_table,
    box_make,
    closeness_check,
    split_box,
    teichmuller_box,
)
from .counting import CountReport, ProblemInstance, count_zeros, evaluate_point, make_instance
from .errors import (
    BudgetError,
    ConfigError,
    DomainError,
    ExactDivisionError,
    ParseError,
    ValidationError,
    WittboxError,
)
from .fqfield import FieldParams, FqElem, field_params, fq, fq_enumerate
from .galois import (
    GRElem,
    GRParams,
    from_digits,
    int_to_gr,
    ord_p,
    teichmuller_lift,
    to_digits,
    witt_digit_op,
)
from .instancefile import parse_instance, parse_poly
from .poly import FieldDomain, IntegerDomain, ModularDomain, MultiPoly, ZZ
from .witt import (
    PRODUCT,
    SUM,
    ghost_check,
    twisted_digit_polys,
    witt_op_polys,
    witt_poly,
)

__version__ = "0.1.0"
