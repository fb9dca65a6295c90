"""Tests for hypertag insertion schemes and bracket validation."""
import pytest

from core.services.corpus import Annotation, Span, TaggedSentence, parse_corpus
from core.services.errors import ConfigurationError, SchemeError
from core.services.schemes import (
    SCHEME_ORDER,
    Scheme,
    SchemeKind,
    apply_scheme,
    parse_scheme_list,
    scheme_spans,
    validate_brackets,
)
from core.services.tagset import build_tagset

SHIRT_SENTENCE = "DET NOUN PRON VERB VERB PREP DET NOUN STOP"


def _sentence(tagset, names):
    return TaggedSentence(tags=tuple(tagset.symbol(name) for name in names.split()))


@pytest.fixture
def tagset():
    return build_tagset(["DET", "NOUN", "PRON", "VERB", "PREP"], ["STOP"], ["clause", "subject", "noun-group"])


class TestApplyScheme:
    
    def test_clause_bracket(self, tagset):
        corpus = parse_corpus(["DET NOUN [clause PRON VERB ] VERB PREP DET NOUN STOP"], tagset)
        scheme = Scheme.for_tagset(SchemeKind.SUBJECT, tagset, bindings={"subject": "clause"})
        result = apply_scheme(corpus.sentences[0], corpus.annotations[0], scheme, tagset)
        assert result.names == "DET NOUN {clause PRON VERB clause} VERB PREP DET NOUN STOP".split()
    
    def test_plain_is_identity(self, demo_corpus, demo_tagset):
        scheme = Scheme.for_tagset(SchemeKind.PLAIN, demo_tagset)
        for sentence, annotation in zip(demo_corpus.sentences, demo_corpus.annotations):
            assert apply_scheme(sentence, annotation, scheme, demo_tagset) == sentence
    
    def test_determiner_scheme(self, tagset):
        scheme = Scheme.for_tagset(SchemeKind.DETERMINER, tagset, determiner_tags={"DET"})
        result = apply_scheme(_sentence(tagset, "DET NOUN STOP"), Annotation(), scheme, tagset)
        assert result.names == ["{clause", "DET", "clause}", "NOUN", "STOP"]
    
    @pytest.mark.parametrize("length, expected", [
        (9, "T {clause T T T T clause} T T T T"),
        (6, "T {clause T T T T clause} T"),
        (5, "T {clause T T T T clause}"),
        (3, "T {clause T T clause}"),
        (2, "T {clause T clause}"),
        (1, "T {clause clause}"),
    ])
    def test_arbitrary_positions(self, length, expected):
        tagset = build_tagset(["T"], ["STOP"], ["clause"])
        scheme = Scheme.for_tagset(SchemeKind.ARBITRARY, tagset)
        sentence = TaggedSentence(tags=(tagset.symbol("T"),) * length)
        assert " ".join(apply_scheme(sentence, Annotation(), scheme, tagset).names) == expected
    
    def test_arbitrary_ignores_content(self, tagset):
        scheme = Scheme.for_tagset(SchemeKind.ARBITRARY, tagset)
        first = scheme_spans(_sentence(tagset, "DET NOUN VERB PREP DET NOUN STOP"), Annotation(), scheme)
        second = scheme_spans(_sentence(tagset, "PRON VERB VERB NOUN NOUN DET STOP"), Annotation(), scheme)
        assert first == second
    
    def test_subject_outside_noun_group_on_ties(self, tagset):
        annotation = Annotation(spans=(Span("noun-group", 0, 1), Span("subject", 0, 1)))
        scheme = Scheme.for_tagset(SchemeKind.SUBJECT_AND_NOUN_GROUP, tagset)
        result = apply_scheme(_sentence(tagset, "PRON VERB STOP"), annotation, scheme, tagset)
        assert result.names == ["{subject", "{noun-group", "PRON", "noun-group}", "subject}", "VERB", "STOP"]
    
    def test_noun_groups_nest_inside_subject(self, tagset):
        annotation = Annotation(spans=(
            Span("subject", 0, 5), Span("noun-group", 1, 2), Span("noun-group", 4, 5), Span("noun-group", 7, 8),
        ))
        scheme = Scheme.for_tagset(SchemeKind.SUBJECT_AND_NOUN_GROUP, tagset)
        result = apply_scheme(_sentence(tagset, "DET NOUN PREP DET NOUN VERB DET NOUN STOP"), annotation, scheme, tagset)
        assert " ".join(result.names) == (
            "{subject DET {noun-group NOUN noun-group} PREP DET {noun-group NOUN noun-group} subject} "
            "VERB DET {noun-group NOUN noun-group} STOP"
        )
    
    def test_words_get_hypertag_slots(self, tagset):
        corpus = parse_corpus(["[subject the/DET shirt/NOUN ] is/VERB ./STOP"], tagset)
        scheme = Scheme.for_tagset(SchemeKind.SUBJECT, tagset)
        result = apply_scheme(corpus.sentences[0], corpus.annotations[0], scheme, tagset)
        assert result.words == ("{subject", "the", "shirt", "subject}", "is", ".")
    
    def test_missing_annotation_class(self, tagset):
        scheme = Scheme.for_tagset(SchemeKind.NOUN_GROUP, tagset)
        with pytest.raises(SchemeError, match="sentence 4.*noun-group"):
            apply_scheme(_sentence(tagset, "NOUN VERB STOP"), Annotation(), scheme, tagset, sentence_index=4)
    
    def test_covered_class_without_spans_inserts_nothing(self, tagset):
        scheme = Scheme.for_tagset(SchemeKind.SUBJECT, tagset)
        sentence = _sentence(tagset, "VERB DET NOUN STOP")
        assert apply_scheme(sentence, Annotation(covered={"subject"}), scheme, tagset) == sentence
    
    def test_hypertagged_input_is_rejected(self, tagset):
        scheme = Scheme.for_tagset(SchemeKind.PLAIN, tagset)
        sentence = _sentence(tagset, "{clause NOUN clause}")
        with pytest.raises(SchemeError):
            apply_scheme(sentence, Annotation(), scheme, tagset)
    
    @pytest.mark.parametrize("kind", SCHEME_ORDER)
    def test_demo_corpus_outputs(self, kind, demo_corpus, demo_tagset, demo_rules):
        scheme = Scheme.for_tagset(kind, demo_tagset, demo_rules.determiner_tags)
        for sentence, annotation in zip(demo_corpus.sentences, demo_corpus.annotations):
            result = apply_scheme(sentence, annotation, scheme, demo_tagset)
            emitted = scheme_spans(sentence, annotation, scheme)
            assert validate_brackets(result) is None
            assert result.strip_hypertags() == sentence
            assert len(result) == len(sentence) + 2 * len(emitted)


class TestSchemeBinding:
    
    def test_labels_and_order(self):
        assert [kind.label for kind in SCHEME_ORDER] == [
            "text-p", "text-a", "text-d", "text-n", "text-s", "text-sn"
        ]
    
    def test_parse_scheme_list_adds_plain_and_sorts(self):
        assert parse_scheme_list("sn,s") == [SchemeKind.PLAIN, SchemeKind.SUBJECT, SchemeKind.SUBJECT_AND_NOUN_GROUP]
        assert parse_scheme_list("") == [SchemeKind.PLAIN]
    
    def test_unknown_scheme(self):
        with pytest.raises(ConfigurationError, match="unknown scheme"):
            parse_scheme_list("p,x")
    
    def test_missing_class(self):
        tagset = build_tagset(["NOUN"], ["STOP"], ["subject"])
        with pytest.raises(ConfigurationError, match="noun_group"):
            Scheme.for_tagset(SchemeKind.NOUN_GROUP, tagset)
    
    def test_shared_class_is_rejected(self, tagset):
        with pytest.raises(ConfigurationError, match="two roles"):
            Scheme.for_tagset(SchemeKind.SUBJECT_AND_NOUN_GROUP, tagset, bindings={"noun_group": "subject"})
    
    def test_determiner_scheme_needs_determiners(self, tagset):
        with pytest.raises(ConfigurationError):
            Scheme.for_tagset(SchemeKind.DETERMINER, tagset)
    
    def test_default_bindings_use_first_class(self, demo_tagset):
        scheme = Scheme.for_tagset(SchemeKind.ARBITRARY, demo_tagset)
        assert scheme.bindings == {"arbitrary": "subject"}


class TestValidateBrackets:
    
    def test_unclosed(self, tagset):
        violation = validate_brackets(_sentence(tagset, "{clause NOUN"))
        assert violation is not None
        assert violation.index == 2
    
    def test_crossing(self, tagset):
        violation = validate_brackets(_sentence(tagset, "{clause {subject clause} subject}"))
        assert violation is not None
        assert violation.index == 2
        assert "cross" in violation.message
    
    def test_close_without_open(self, tagset):
        violation = validate_brackets(_sentence(tagset, "NOUN clause}"))
        assert violation is not None and violation.index == 1
    
    def test_well_formed(self, tagset):
        assert validate_brackets(_sentence(tagset, "{subject DET {clause NOUN clause} subject} VERB")) is None
