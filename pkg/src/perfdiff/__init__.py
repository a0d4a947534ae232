"""Perfect difference structures: construction, search, verification, catalog."""

from .core import (
    AspSequence,
    Block,
    DiffFamily,
    DiffMatrix,
    LangfordPairing,
    ParametricBlock,
    ParametricDelta,
    PlanNode,
    SymmetricRange,
    asp_to_pdm,
    delta_family,
    delta_list,
    delta_parametric,
    instantiate,
    pdm_to_asp,
    scale_translate,
)
from .verify import (
    VerifyReport,
    verify_asp,
    verify_langford,
    verify_parametric_pdp,
    verify_pdf,
    verify_pdm,
    verify_pdp,
    verify_psds,
    verify_variable_pdf,
)
from .search import (
    SearchBudget,
    SearchOutcome,
    search_langford,
    search_parametric_pdp,
    search_pdf4,
    search_pdm,
    search_sipdm,
    search_variable_pdf,
)

__all__ = [name for name in dir() if not name.startswith("_")]
