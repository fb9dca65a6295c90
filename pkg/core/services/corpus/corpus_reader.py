"""Reader and writer for the line-oriented pre-tagged corpus format.

Each line is one sentence. A token is `TAG` or `word/TAG`; `[class` and
`]` wrap token runs as constituent annotations; `#` starts a comment line.
A bracket token with a `/` is a word, so `[/LBR` is the word `[`.
"""
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from core.services.corpus.corpus import Corpus, TaggedSentence
from core.services.corpus.spans import Annotation, Span, annotation_violation, boundary_events
from core.services.errors.exceptions import CorpusFormatError
from core.services.tagset.tagset import Symbol, Tagset
from core.utils.text_utils import iter_content_lines
from core.utils.logger import logger

OPEN_BRACKET = "["
CLOSE_BRACKET = "]"
WORD_SEPARATOR = "/"


def _split_token(token: str, line_number: int) -> Tuple[Optional[str], str]:
    word, separator, tag = token.rpartition(WORD_SEPARATOR)
    if not separator:
        return None, token
    if not word or not tag:
        raise CorpusFormatError("malformed word/TAG token", line_number, token)
    return word, tag


def _parse_line(line: str, line_number: int, tagset: Tagset) -> Tuple[TaggedSentence, List[Span]]:
    symbols: List[Symbol] = []
    words: List[str] = []
    worded: Optional[bool] = None
    open_stack: List[Tuple[str, int]] = []
    spans: List[Span] = []
    
    for token in line.split():
        if token.startswith(OPEN_BRACKET) and WORD_SEPARATOR not in token:
            constituent = token[len(OPEN_BRACKET):]
            if not constituent:
                raise CorpusFormatError("opening bracket without a class name", line_number, token)
            if constituent not in tagset.hypertag_pairs:
                raise CorpusFormatError(f"unknown annotation class {constituent}", line_number, token)
            open_stack.append((constituent, len(symbols)))
            continue
        if token == CLOSE_BRACKET:
            if not open_stack:
                raise CorpusFormatError("closing bracket without an opening bracket", line_number, token)
            constituent, start = open_stack.pop()
            if start == len(symbols):
                raise CorpusFormatError(f"empty {constituent} bracket", line_number, token)
            spans.append(Span(constituent, start, len(symbols)))
            continue
        
        word, tag = _split_token(token, line_number)
        if worded is None:
            worded = word is not None
        elif worded != (word is not None):
            raise CorpusFormatError("mixed TAG and word/TAG tokens", line_number, token)
        symbol = tagset.get(tag)
        if symbol is None:
            raise CorpusFormatError(f"unknown tag {tag}", line_number, token)
        if symbol.is_hypertag:
            raise CorpusFormatError(f"hypertag {tag} is not allowed in input", line_number, token)
        symbols.append(symbol)
        if word is not None:
            words.append(word)
    
    if open_stack:
        constituent, _ = open_stack[-1]
        raise CorpusFormatError(f"unclosed {constituent} bracket", line_number, OPEN_BRACKET + constituent)
    if not symbols:
        raise CorpusFormatError("line has no tags", line_number)
    violation = annotation_violation(spans, len(symbols))
    if violation:
        raise CorpusFormatError(violation, line_number)
    sentence = TaggedSentence(tags=tuple(symbols), words=tuple(words) if worded else None)
    return sentence, spans


def parse_corpus(stream: Iterable[str], tagset: Tagset) -> Corpus:
    """
    Parse a pre-tagged corpus.
    
    Args:
        stream: Lines of the corpus file
        tagset: Closed tagset; unknown tags are an error
    
    Returns:
        Corpus whose annotations cover every class bracketed anywhere in the input
    
    Raises:
        CorpusFormatError: On an unknown tag, a hypertag in the input or a malformed bracket
    """
    sentences: List[TaggedSentence] = []
    sentence_spans: List[List[Span]] = []
    for line_number, line in iter_content_lines(stream):
        sentence, spans = _parse_line(line, line_number, tagset)
        sentences.append(sentence)
        sentence_spans.append(spans)
    
    covered = frozenset(span.constituent for spans in sentence_spans for span in spans)
    annotations = tuple(Annotation(spans=tuple(spans), covered=covered) for spans in sentence_spans)
    logger.info(f"Parsed corpus: {len(sentences)} sentences, annotated classes: {sorted(covered) or 'none'}")
    return Corpus(tagset=tagset, sentences=tuple(sentences), annotations=annotations)


def load_corpus(path: Union[str, Path], tagset: Tagset) -> Corpus:
    """Load a corpus file."""
    with open(path, encoding="utf-8") as f:
        return parse_corpus(f, tagset)


def serialize_sentence(sentence: TaggedSentence, annotation: Annotation, tagset: Tagset) -> str:
    """Write one sentence back in corpus format."""
    rank = {constituent: index for index, constituent in enumerate(tagset.classes)}
    events = boundary_events(annotation.spans, len(sentence), rank)
    tokens: List[str] = []
    for position in range(len(sentence) + 1):
        for is_open, span in events[position]:
            tokens.append(OPEN_BRACKET + span.constituent if is_open else CLOSE_BRACKET)
        if position < len(sentence):
            tag = sentence.tags[position].name
            if sentence.words is not None:
                tokens.append(f"{sentence.words[position]}{WORD_SEPARATOR}{tag}")
            else:
                tokens.append(tag)
    return " ".join(tokens)


def serialize_corpus(corpus: Corpus) -> str:
    """Write a corpus in the format `parse_corpus` reads."""
    lines = [
        serialize_sentence(sentence, annotation, corpus.tagset)
        for sentence, annotation in zip(corpus.sentences, corpus.annotations)
    ]
    return "\n".join(lines) + "\n" if lines else ""
