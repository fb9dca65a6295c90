"""Tests for the corpus reader/writer, annotations and corpus statistics."""
import pytest

from app.config import settings
from core.services.corpus import (
    Annotation,
    Span,
    TaggedSentence,
    annotation_violation,
    corpus_stats,
    parse_corpus,
    serialize_corpus,
)
from core.services.errors import CorpusFormatError, InsufficientDataError
from core.services.tagset import build_tagset
from core.utils.text_utils import read_text


@pytest.fixture
def tagset():
    return build_tagset(["DET", "NOUN", "PRON", "VERB", "PREP"], ["STOP"], ["clause", "subject"])


class TestParseCorpus:
    
    def test_word_tag_tokens(self, tagset):
        corpus = parse_corpus(["the/DET shirt/NOUN is/VERB ./STOP"], tagset)
        sentence = corpus.sentences[0]
        assert len(sentence) == 4
        assert sentence.words == ("the", "shirt", "is", ".")
        assert sentence.names == ["DET", "NOUN", "VERB", "STOP"]
    
    def test_bare_tags(self, tagset):
        corpus = parse_corpus(["DET NOUN PRON VERB VERB PREP DET NOUN STOP"], tagset)
        assert len(corpus.sentences[0]) == 9
        assert corpus.sentences[0].words is None
        assert corpus.annotations[0].spans == ()
    
    def test_inline_bracket(self, tagset):
        corpus = parse_corpus(["DET NOUN [clause PRON VERB ] VERB PREP DET NOUN STOP"], tagset)
        assert len(corpus.sentences[0]) == 9
        assert corpus.annotations[0].spans == (Span("clause", 2, 4),)
        assert corpus.annotated_classes == frozenset({"clause"})
    
    def test_nested_brackets(self, tagset):
        corpus = parse_corpus(["[subject DET NOUN [clause PRON VERB ] ] VERB STOP"], tagset)
        assert corpus.annotations[0].spans == (Span("subject", 0, 4), Span("clause", 2, 4))
    
    def test_class_seen_anywhere_is_covered_everywhere(self, tagset):
        corpus = parse_corpus(["VERB DET NOUN STOP", "[subject PRON ] VERB STOP"], tagset)
        assert corpus.annotations[0].covers("subject")
        assert corpus.annotations[0].spans_of("subject") == []
    
    def test_comment_lines_are_skipped(self, tagset):
        corpus = parse_corpus(["# header", "", "NOUN VERB STOP"], tagset)
        assert len(corpus) == 1
    
    def test_unknown_tag_reports_line_and_token(self, tagset):
        with pytest.raises(CorpusFormatError) as excinfo:
            parse_corpus(["NOUN VERB STOP", "NOUN VBZ STOP"], tagset)
        assert excinfo.value.line_number == 2
        assert excinfo.value.token == "VBZ"
        assert "line 2" in str(excinfo.value)
    
    def test_hypertag_in_input(self, tagset):
        with pytest.raises(CorpusFormatError, match="hypertag"):
            parse_corpus(["NOUN {clause VERB clause} STOP"], tagset)
    
    @pytest.mark.parametrize("line", [
        "NOUN [clause VERB STOP",
        "NOUN VERB ] STOP",
        "NOUN [clause ] VERB STOP",
        "NOUN [ VERB ] STOP",
        "NOUN [phrase VERB ] STOP",
    ])
    def test_malformed_brackets(self, tagset, line):
        with pytest.raises(CorpusFormatError, match="line 1"):
            parse_corpus([line], tagset)
    
    def test_mixed_token_forms(self, tagset):
        with pytest.raises(CorpusFormatError, match="mixed"):
            parse_corpus(["the/DET NOUN STOP"], tagset)
    
    def test_word_may_contain_slash(self, tagset):
        corpus = parse_corpus(["and/or/PREP NOUN/NOUN ./STOP"], tagset)
        assert corpus.sentences[0].words == ("and/or", "NOUN", ".")
    
    def test_bracket_words_are_tokens(self):
        tagset = build_tagset(["NOUN", "VERB"], ["LBR", "RBR", "STOP"], ["subject"])
        line = "[/LBR [subject dogs/NOUN ] ]/RBR bark/VERB ./STOP"
        corpus = parse_corpus([line], tagset)
        assert corpus.sentences[0].words == ("[", "dogs", "]", "bark", ".")
        assert corpus.sentences[0].names == ["LBR", "NOUN", "RBR", "VERB", "STOP"]
        assert corpus.annotations[0].spans == (Span("subject", 1, 2),)
        assert serialize_corpus(corpus) == line + "\n"


class TestAnnotations:
    
    def test_crossing_spans(self):
        violation = annotation_violation([Span("a", 0, 3), Span("b", 2, 5)], 6)
        assert violation is not None and "cross" in violation
    
    def test_same_class_overlap(self):
        assert annotation_violation([Span("a", 0, 3), Span("a", 1, 2)], 6) is not None
    
    def test_nesting_is_fine(self):
        assert annotation_violation([Span("a", 0, 4), Span("b", 1, 3), Span("b", 3, 4)], 4) is None
    
    def test_out_of_range(self):
        assert annotation_violation([Span("a", 2, 7)], 6) is not None
    
    def test_demo_corpus_spans_never_cross(self, demo_corpus):
        for sentence, annotation in zip(demo_corpus.sentences, demo_corpus.annotations):
            assert annotation_violation(annotation.spans, len(sentence)) is None


class TestCorpusStats:
    
    def test_two_sentences(self, tagset):
        corpus = parse_corpus(["NOUN VERB STOP", "DET NOUN VERB DET NOUN"], tagset)
        stats = corpus_stats(corpus)
        assert stats.sentence_count == 2
        assert stats.mean_length == 4.0
        assert stats.tagset_size == len(tagset)
    
    def test_single_token(self, tagset):
        stats = corpus_stats(parse_corpus(["STOP"], tagset))
        assert (stats.sentence_count, stats.mean_length) == (1, 1.0)
    
    def test_empty_corpus(self, tagset):
        with pytest.raises(InsufficientDataError):
            corpus_stats(parse_corpus([], tagset))
    
    def test_demo_corpus_golden(self, demo_corpus):
        stats = corpus_stats(demo_corpus)
        assert stats.sentence_count == 100
        assert demo_corpus.token_count == 1050
        assert stats.mean_length == pytest.approx(10.5)
        assert stats.tagset_size == 32
        assert demo_corpus.annotated_classes == frozenset({"subject", "noun-group"})


class TestRoundTrip:
    
    def test_demo_corpus_parse_serialize_parse(self, demo_corpus, demo_tagset):
        again = parse_corpus(serialize_corpus(demo_corpus).splitlines(), demo_tagset)
        assert [s.tags for s in again.sentences] == [s.tags for s in demo_corpus.sentences]
        assert [s.words for s in again.sentences] == [s.words for s in demo_corpus.sentences]
        assert again.annotations == demo_corpus.annotations
    
    def test_demo_corpus_serializes_to_its_own_text(self, demo_corpus):
        lines = [
            line.strip() for line in read_text(settings.DEFAULT_CORPUS_FILE).splitlines()
            if line.strip() and not line.startswith("#")
        ]
        assert serialize_corpus(demo_corpus).splitlines() == lines
    
    def test_bare_tags_round_trip(self, tagset):
        corpus = parse_corpus(["[subject DET NOUN [clause PRON VERB ] ] VERB STOP"], tagset)
        assert serialize_corpus(corpus) == "[subject DET NOUN [clause PRON VERB ] ] VERB STOP\n"
    
    def test_strip_hypertags(self, tagset):
        opener, closer = tagset.open_symbol("clause"), tagset.close_symbol("clause")
        noun, verb = tagset.symbol("NOUN"), tagset.symbol("VERB")
        sentence = TaggedSentence(tags=(noun, opener, verb, closer))
        assert not sentence.is_raw
        assert sentence.strip_hypertags().tags == (noun, verb)
    
    def test_annotation_order_is_canonical(self):
        first = Annotation(spans=(Span("b", 1, 2), Span("a", 0, 3)))
        second = Annotation(spans=(Span("a", 0, 3), Span("b", 1, 2)))
        assert first == second
