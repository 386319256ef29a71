"""Text model, suffix structures, equation systems and the compressor."""

from sesx.core.compressor import compress, decompress, position_equivalence_classes, run_pipeline
from sesx.core.ses import Equation, Pin, Ses, SolveResult, SolveStatus, reconstruct, solve
from sesx.core.suffix import build_index, chi, compute_sre, smallest_suffixient_set
from sesx.core.text import Text, attach_sentinel, fibonacci_word, random_text, thue_morse

__all__ = [
    "Equation",
    "Pin",
    "Ses",
    "SolveResult",
    "SolveStatus",
    "Text",
    "attach_sentinel",
    "build_index",
    "chi",
    "compress",
    "compute_sre",
    "decompress",
    "fibonacci_word",
    "position_equivalence_classes",
    "random_text",
    "reconstruct",
    "run_pipeline",
    "smallest_suffixient_set",
    "solve",
    "thue_morse",
]
