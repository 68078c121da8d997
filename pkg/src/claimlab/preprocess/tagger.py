"""Rule-based coarse part-of-speech tagger.

Rule order per token: no alphabetic character -> Other; capitalized while
not sentence-initial -> Noun (a proper-noun heuristic that deliberately
outranks the lexicon, and the one position-dependent rule, so re-tagging a
shortened stream can change tags); lexicon lookup on the lower form; then
suffix rules -ly -> Adverb, -ing/-ed -> Verb, -ous/-ful/-ive/-able ->
Adjective; default Noun.
"""

from __future__ import annotations

from dataclasses import replace

from .tokenizer import Tag, Token

_SUFFIX_RULES = (
    ("ly", Tag.ADVERB),
    ("ing", Tag.VERB),
    ("ed", Tag.VERB),
    ("ous", Tag.ADJECTIVE),
    ("ful", Tag.ADJECTIVE),
    ("ive", Tag.ADJECTIVE),
    ("able", Tag.ADJECTIVE),
)

_SENTENCE_END = (".", "!", "?")


def _sentence_initial(index: int, tokens: list[Token]) -> bool:
    if index == 0:
        return True
    return tokens[index - 1].surface.endswith(_SENTENCE_END)


def _tag_one(token: Token, index: int, tokens: list[Token], lexicon: dict[str, Tag]) -> Tag:
    if not any(ch.isalpha() for ch in token.surface):
        return Tag.OTHER
    if token.surface[:1].isupper() and not _sentence_initial(index, tokens):
        return Tag.NOUN
    hit = lexicon.get(token.lower)
    if hit is not None:
        return hit
    for suffix, tag in _SUFFIX_RULES:
        if token.lower.endswith(suffix):
            return tag
    return Tag.NOUN


def tag_tokens(tokens: list[Token], lexicon: dict[str, Tag]) -> list[Token]:
    """Return a new stream with every token tagged."""
    return [
        replace(tok, tag=_tag_one(tok, i, tokens, lexicon))
        for i, tok in enumerate(tokens)
    ]
