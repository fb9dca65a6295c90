"""Shared fixtures: bundled demo files and small synthetic tagsets."""
import pytest

from app.config import settings
from core.services.chunking import load_rules, parse_rules
from core.services.corpus import load_corpus
from core.services.tagset import build_tagset, load_tagset


@pytest.fixture(scope="session")
def demo_tagset():
    return load_tagset(settings.DEFAULT_TAGSET_FILE)


@pytest.fixture(scope="session")
def demo_rules(demo_tagset):
    return load_rules(settings.DEFAULT_RULES_FILE, demo_tagset)


@pytest.fixture(scope="session")
def demo_corpus(demo_tagset):
    return load_corpus(settings.DEFAULT_CORPUS_FILE, demo_tagset)


@pytest.fixture
def ab_tagset():
    return build_tagset(["A", "B"], [], [])


@pytest.fixture
def shirt_tagset():
    """Tags of the "the shirt he wants is in the wash" example, with three classes."""
    return build_tagset(
        ["DET", "NOUN", "PRON", "VERB", "PREP", "ADJ"],
        ["STOP"],
        ["clause", "subject", "noun-group"],
    )


@pytest.fixture
def shirt_rules(shirt_tagset):
    return parse_rules(
        [
            "modifier ADJ NOUN",
            "noun NOUN",
            "pronoun PRON",
            "finite-verb VERB",
            "determiner DET",
        ],
        shirt_tagset,
    )
