"""sigmastar: a computability workbench.

Canonical (length-then-value) ranking of strings, budgeted Turing-machine
simulation with a bit-exact binary encoding, dovetailed enumeration of
recognizable languages, counting orders with deleteMin, and finite
diagonalization demonstrations.
"""

__version__ = "0.1.0"

from sigmastar.canonical import (
    Alphabet,
    CanonicalString,
    compare,
    rank,
    string_value,
    successor,
    symbol_index,
    unrank,
)
from sigmastar.machine import (
    Configuration,
    RunOutcome,
    TuringMachine,
    Verdict,
    decode_validate,
    encode_machine,
    load_machine_file,
    parse_machine_text,
    run,
    step,
)
from sigmastar.streams import (
    CountingBijection,
    Stream,
    bijection_stream,
    dovetail_stream,
    increasing_decider,
    is_increasing_prefix,
    nth_printed,
    print_index,
    stream_accepts,
    stream_bijection,
    unrank_bijection,
)
from sigmastar.orders import (
    ChainResult,
    Order,
    bijection_from_delete_min,
    chain_search,
    delete_min_from_bijection,
    lex_nn_order,
    order_from_bijection,
)
from sigmastar.diagonal import (
    diagonal_flip,
    diagonal_machine,
    diagonal_shift,
    verify_decider_library,
)
