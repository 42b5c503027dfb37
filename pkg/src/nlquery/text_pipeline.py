"""Shallow NLP front end: tokenization, lemmatization, POS tagging, chunking.

Turns a raw English question into candidate phrases (nouns, adjectives and
noun phrases) in lemmatized form, ready for mapping against the schema.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .errors import EmptyQuestion

MAX_QUESTION_LENGTH = 1024

EDGE_PUNCT = "?.!,'\""

POS_TAGS = frozenset(
    ["NN", "NNS", "JJ", "VB", "VBD", "VBG", "VBN", "VBZ",
     "DT", "IN", "WP", "WRB", "CC", "CD", "OTHER"]
)

# Irregular forms handled before any suffix rule fires.  The -ves plurals
# live here rather than in a generic -ves -> -f rule, which would mangle
# verbs like "serves".
LEMMA_EXCEPTIONS = {
    "is": "be", "are": "be", "am": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "doing": "do",
    "men": "man", "women": "woman", "children": "child",
    "people": "person", "feet": "foot", "teeth": "tooth", "mice": "mouse",
    "wolves": "wolf", "knives": "knife", "lives": "life", "leaves": "leaf",
    "loaves": "loaf", "halves": "half", "shelves": "shelf",
    "wives": "wife", "thieves": "thief", "calves": "calf",
}

# Words whose tag is fixed regardless of any lexicon; keyed on lemmas.
CLOSED_CLASS_TAGS = {
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "these": "DT",
    "those": "DT", "some": "DT", "any": "DT", "all": "DT", "every": "DT",
    "each": "DT", "no": "DT",
    "in": "IN", "on": "IN", "at": "IN", "of": "IN", "for": "IN",
    "with": "IN", "from": "IN", "to": "IN", "by": "IN", "about": "IN",
    "into": "IN", "over": "IN", "under": "IN", "near": "IN",
    "between": "IN", "during": "IN", "that": "IN", "as": "IN",
    "what": "WP", "who": "WP", "which": "WP", "whom": "WP", "whose": "WP",
    "where": "WRB", "when": "WRB", "why": "WRB", "how": "WRB",
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC",
    "be": "VB", "have": "VB", "do": "VB", "can": "VB", "could": "VB",
    "will": "VB", "would": "VB", "shall": "VB", "should": "VB",
    "may": "VB", "might": "VB", "must": "VB",
    "i": "OTHER", "you": "OTHER", "he": "OTHER", "she": "OTHER",
    "it": "OTHER", "we": "OTHER", "they": "OTHER", "me": "OTHER",
    "him": "OTHER", "her": "OTHER", "us": "OTHER", "them": "OTHER",
    "my": "OTHER", "your": "OTHER", "his": "OTHER", "its": "OTHER",
    "our": "OTHER", "their": "OTHER", "there": "OTHER", "not": "OTHER",
    "please": "OTHER",
}

_NUMBER_RE = re.compile(r"^\d+(\.\d+)?$")


@dataclass(frozen=True)
class Token:
    surface: str
    norm: str
    span: tuple[int, int]  # half-open character offsets into the question


@dataclass(frozen=True)
class TaggedToken:
    lemma: str
    tag: str
    token: Optional[Token] = None  # source token, when tagging a full question


@dataclass(frozen=True)
class CandidatePhrase:
    lemmas: tuple[str, ...]
    surfaces: tuple[str, ...]
    kind: str  # noun | adjective | noun_phrase
    span: tuple[int, int]

    @property
    def lemma_text(self) -> str:
        return " ".join(self.lemmas)

    @property
    def surface_text(self) -> str:
        return " ".join(self.surfaces)


def load_lexicon(path) -> dict[str, str]:
    """Load a word<TAB>TAG lexicon file; blank lines and # comments skipped."""
    lexicon: dict[str, str] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, _, tag = line.partition("\t")
        if word and tag in POS_TAGS:
            lexicon[word] = tag
    return lexicon


def tokenize(text: str) -> list[Token]:
    """Split a question on whitespace, stripping edge punctuation.

    Raises EmptyQuestion when the text is empty or whitespace-only.
    Pieces that are pure punctuation produce no token.
    """
    if not text.strip():
        raise EmptyQuestion("question is empty")
    tokens: list[Token] = []
    for match in re.finditer(r"\S+", text):
        surface = match.group()
        norm = surface.strip(EDGE_PUNCT).lower()
        if not norm:
            continue
        tokens.append(Token(surface=surface, norm=norm, span=match.span()))
    if not tokens:
        raise EmptyQuestion("question contains no words")
    return tokens


def lemmatize(norm: str) -> str:
    """Reduce an inflected lowercase word to its base form.

    Exception table first, then ordered suffix rules.  Unknown words pass
    through unchanged; the function is idempotent.
    """
    if norm in LEMMA_EXCEPTIONS:
        return LEMMA_EXCEPTIONS[norm]
    if norm.endswith("ies") and len(norm) > 4:
        return norm[:-3] + "y"
    if norm.endswith("es") and len(norm) > 3:
        stem = norm[:-2]
        if stem.endswith(("s", "x", "z", "ch", "sh")):
            return stem
    if norm.endswith("s") and not norm.endswith("ss") and len(norm) > 3:
        return norm[:-1]
    return norm


def pos_tag(
    lemmas: Sequence[str],
    lexicon: dict[str, str],
    tokens: Optional[Sequence[Token]] = None,
) -> list[TaggedToken]:
    """Tag each lemma: closed-class list, then lexicon, then suffix heuristics,
    then NN as the default."""
    tagged = []
    for i, lemma in enumerate(lemmas):
        if lemma in CLOSED_CLASS_TAGS:
            tag = CLOSED_CLASS_TAGS[lemma]
        elif _NUMBER_RE.match(lemma):
            tag = "CD"
        elif lemma in lexicon:
            tag = lexicon[lemma]
        elif lemma.endswith(("ian", "ese", "ish")):
            tag = "JJ"
        elif lemma.endswith("ing"):
            tag = "VBG"
        elif lemma.endswith("ed"):
            tag = "VBD"
        else:
            tag = "NN"
        tagged.append(TaggedToken(lemma=lemma, tag=tag,
                                  token=tokens[i] if tokens else None))
    return tagged


def tag_question(tokens: Sequence[Token], lexicon: dict[str, str]) -> list[TaggedToken]:
    """Lemmatize then tag a tokenized question, keeping source tokens."""
    return pos_tag([lemmatize(t.norm) for t in tokens], lexicon, tokens=tokens)


def _span_of(tagged: Sequence[TaggedToken], start: int, end: int) -> tuple[int, int]:
    if all(t.token for t in tagged[start:end]):
        return (tagged[start].token.span[0], tagged[end - 1].token.span[1])
    return (start, end)  # word-index span when tagging bare lemma lists


def _surfaces_of(tagged: Sequence[TaggedToken], start: int, end: int) -> tuple[str, ...]:
    return tuple(t.token.norm if t.token else t.lemma for t in tagged[start:end])


def chunk_noun_phrases(tagged: Sequence[TaggedToken]) -> list[CandidatePhrase]:
    """Extract maximal JJ* NN+ spans of total length >= 2 as noun phrases."""
    phrases = []
    i = 0
    n = len(tagged)
    while i < n:
        j = i
        while j < n and tagged[j].tag == "JJ":
            j += 1
        k = j
        while k < n and tagged[k].tag in ("NN", "NNS"):
            k += 1
        if k > j:  # at least one noun
            if k - i >= 2:
                phrases.append(CandidatePhrase(
                    lemmas=tuple(t.lemma for t in tagged[i:k]),
                    surfaces=_surfaces_of(tagged, i, k),
                    kind="noun_phrase",
                    span=_span_of(tagged, i, k),
                ))
            i = k
        else:
            i = max(j, i + 1)
    return phrases


def extract_candidates(tagged: Sequence[TaggedToken]) -> list[CandidatePhrase]:
    """Collect noun phrases followed by single nouns/adjectives, in source order.

    Singles inside an emitted noun phrase are still listed; the mapper
    consumes longest-first and drops them when the phrase itself maps.
    """
    candidates = list(chunk_noun_phrases(tagged))
    for i, t in enumerate(tagged):
        if t.tag in ("NN", "NNS", "JJ"):
            kind = "adjective" if t.tag == "JJ" else "noun"
            candidates.append(CandidatePhrase(
                lemmas=(t.lemma,),
                surfaces=_surfaces_of(tagged, i, i + 1),
                kind=kind,
                span=_span_of(tagged, i, i + 1),
            ))
    return candidates


def analyze(text: str, lexicon: dict[str, str]) -> list[CandidatePhrase]:
    """Full front end: question text to candidate phrases."""
    stripped = text.strip()
    if len(stripped) > MAX_QUESTION_LENGTH:
        raise ValueError(f"question exceeds {MAX_QUESTION_LENGTH} characters")
    tokens = tokenize(stripped)
    return extract_candidates(tag_question(tokens, lexicon))
