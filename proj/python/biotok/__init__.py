"""Rule-based and learned tokenization for biomedical text.

Everything lives in the compiled extension; this package just re-exports it.
"""

from ._biotok import (
    RuleSet,
    RuleStep,
    RuleTrace,
    Tagger,
    TaggerEval,
    Token,
    TokenizedSentence,
    build_vocab,
    cooccurrence_matrix,
    corpus_counts,
    decode_tags,
    derive_tags,
    distinct_outputs,
    doc_term_matrix,
    jaccard,
    jaccard_matrix,
    load_corpus,
    load_fixtures,
    normalize,
    normalize_corpus,
    profiles,
    strategies,
    token_counts,
    tokenize,
    tokenize_spans,
    validate_tokenization,
    vocabulary,
)

__version__ = "1.0.0"

__all__ = [
    "RuleSet",
    "RuleStep",
    "RuleTrace",
    "Tagger",
    "TaggerEval",
    "Token",
    "TokenizedSentence",
    "build_vocab",
    "cooccurrence_matrix",
    "corpus_counts",
    "decode_tags",
    "derive_tags",
    "distinct_outputs",
    "doc_term_matrix",
    "jaccard",
    "jaccard_matrix",
    "load_corpus",
    "load_fixtures",
    "normalize",
    "normalize_corpus",
    "profiles",
    "strategies",
    "token_counts",
    "tokenize",
    "tokenize_spans",
    "validate_tokenization",
    "vocabulary",
]
