"""Shared node-kind and connective constants plus the named fragments."""

KIND_TOP = "top"
KIND_BOT = "bot"
KIND_ATOM = "atom"
KIND_NEG_ATOM = "neg_atom"
KIND_AND = "and"
KIND_OR = "or"
KIND_DIA = "dia"
KIND_BOX = "box"

# Canonical formula ordering compares node kinds first, in this order.
KIND_ORDER = {
    KIND_BOT: 0,
    KIND_TOP: 1,
    KIND_ATOM: 2,
    KIND_NEG_ATOM: 3,
    KIND_DIA: 4,
    KIND_BOX: 5,
    KIND_AND: 6,
    KIND_OR: 7,
}

LEAF_KINDS = frozenset({KIND_TOP, KIND_BOT, KIND_ATOM, KIND_NEG_ATOM})
MODAL_KINDS = frozenset({KIND_DIA, KIND_BOX})
JUNCTION_KINDS = frozenset({KIND_AND, KIND_OR})

# Connectives a fragment may contain. Atoms are always allowed.
CONN_AND = "and"
CONN_OR = "or"
CONN_DIA = "dia"
CONN_BOX = "box"
CONN_TOP = "top"
CONN_BOT = "bot"
CONN_NEG_ATOM = "neg_atom"

ALL_CONNECTIVES = frozenset(
    {CONN_AND, CONN_OR, CONN_DIA, CONN_BOX, CONN_TOP, CONN_BOT, CONN_NEG_ATOM}
)

# L{□,◇,∧,∨}: the fragment whose formulas all have finite characterisations.
POSITIVE_FRAGMENT = frozenset({CONN_AND, CONN_OR, CONN_DIA, CONN_BOX})
# L{□,◇,∧,∨,¬_at}: used with a [P;Q] partition for uniform formulas.
UNIFORM_FRAGMENT = POSITIVE_FRAGMENT | {CONN_NEG_ATOM}
FULL_LANGUAGE = ALL_CONNECTIVES
# The two fragments of the negative results for ⊥ and ⊤.
BOT_FRAGMENT = frozenset({CONN_AND, CONN_DIA, CONN_BOX, CONN_BOT})
TOP_FRAGMENT = frozenset({CONN_OR, CONN_DIA, CONN_BOX, CONN_TOP})

# Surface keywords of the formula grammar.
KEYWORD_TRUE = "true"
KEYWORD_FALSE = "false"
RESERVED_NAMES = frozenset({KEYWORD_TRUE, KEYWORD_FALSE})

FRAGMENT_NAMES = {
    "positive": POSITIVE_FRAGMENT,
    "uniform": UNIFORM_FRAGMENT,
    "full": FULL_LANGUAGE,
    "bot": BOT_FRAGMENT,
    "top": TOP_FRAGMENT,
}


def kind_to_connective(kind: str) -> str | None:
    """Return the connective a node kind contributes to its fragment (atoms: None)."""

    if kind == KIND_ATOM:
        return None
    return kind


__all__ = [
    "ALL_CONNECTIVES",
    "BOT_FRAGMENT",
    "CONN_AND",
    "CONN_BOT",
    "CONN_BOX",
    "CONN_DIA",
    "CONN_NEG_ATOM",
    "CONN_OR",
    "CONN_TOP",
    "FRAGMENT_NAMES",
    "FULL_LANGUAGE",
    "JUNCTION_KINDS",
    "KEYWORD_FALSE",
    "KEYWORD_TRUE",
    "KIND_AND",
    "KIND_ATOM",
    "KIND_BOT",
    "KIND_BOX",
    "KIND_DIA",
    "KIND_NEG_ATOM",
    "KIND_OR",
    "KIND_ORDER",
    "KIND_TOP",
    "LEAF_KINDS",
    "MODAL_KINDS",
    "POSITIVE_FRAGMENT",
    "RESERVED_NAMES",
    "TOP_FRAGMENT",
    "UNIFORM_FRAGMENT",
    "kind_to_connective",
]
