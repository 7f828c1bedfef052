from .behavior import (
    PERFECT,
    BPWord,
    Incomparable,
    adjective_close,
    adjective_rules,
    better_than,
    bpc_bar,
    generate_bp,
    pi_w_close,
    rule_system_close,
)
from .formula import Atom, Bin, Formula, Not, P, conj, disj, iff, imp, parse
from .perfect import (
    PiLanguage,
    Proof,
    bp0,
    bp0_parts,
    insert_parens,
    pi_close,
    pi_prove_bounded,
    strip_parens,
)
from .propositional import hilbert_derives, max_index, mp_close, prime_derives, s0_derives

__all__ = [
    "PERFECT", "BPWord", "Incomparable", "adjective_close", "adjective_rules", "better_than",
    "bpc_bar", "generate_bp", "pi_w_close", "rule_system_close",
    "Atom", "Bin", "Formula", "Not", "P", "conj", "disj", "iff", "imp", "parse",
    "PiLanguage", "Proof", "bp0", "bp0_parts", "insert_parens", "pi_close", "pi_prove_bounded", "strip_parens",
    "hilbert_derives", "max_index", "mp_close", "prime_derives", "s0_derives",
]
