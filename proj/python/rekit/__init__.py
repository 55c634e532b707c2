"""Regular expressions to small NFAs: constructions, reductions and uniform generation."""

from ._rekit import (
    Error,
    Nfa,
    ParseError,
    Regex,
    autobisimulation,
    count_words,
    count_words_grammar,
    follow_automaton,
    generate,
    grammar_text,
    is_reduced,
    is_snf,
    isomorphic,
    l_equiv,
    language,
    lr_equiv,
    measures,
    minimal_dfa,
    parse,
    pd_automaton,
    position_automaton,
    position_automaton_snf,
    r_equiv,
    reduce,
    reverse,
    run_experiment,
    to_snf,
)

CONSTRUCTIONS = {
    "pos": position_automaton,
    "psnf": position_automaton_snf,
    "follow": follow_automaton,
    "pd": pd_automaton,
}


def convert(text, method="pd"):
    return CONSTRUCTIONS[method](parse(text))


__all__ = [name for name in dir() if not name.startswith("_")]
