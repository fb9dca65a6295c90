"""Tests for letter normalization and letter-sequence entropy."""
import pytest

from app.config import settings
from core.services.errors import InsufficientDataError
from core.services.letters import SPACE, LetterStream, letter_profile, letter_tagset, normalize_text
from core.utils.text_utils import read_text


class TestNormalizeText:
    
    def test_with_space(self):
        assert normalize_text("Dog, cat!", include_space=True).symbols == ("D", "O", "G", SPACE, "C", "A", "T")
    
    def test_without_space(self):
        assert normalize_text("Dog, cat!", include_space=False).symbols == tuple("DOGCAT")
    
    def test_space_runs_collapse_and_edges_trim(self):
        assert normalize_text("  a  b ", include_space=True).symbols == ("A", SPACE, "B")
    
    def test_dropped_characters_are_counted(self):
        stream = normalize_text("Route 66, café!", include_space=True)
        assert stream.as_text() == "ROUTE CAFE"
        assert stream.dropped == {"digit": 2, "punctuation": 2, "accent": 1}
    
    def test_no_letters(self):
        with pytest.raises(InsufficientDataError, match="no alphabetic content"):
            normalize_text("123 !!", include_space=True)
    
    def test_consecutive_spaces_are_rejected(self):
        with pytest.raises(ValueError):
            LetterStream(symbols=("A", SPACE, SPACE, "B"), include_space=True)


class TestLetterProfile:
    
    def test_alphabet_sizes(self):
        assert len(letter_tagset(False)) == 26
        assert len(letter_tagset(True)) == 27
    
    def test_h0_values(self):
        without = letter_profile(normalize_text("the quick brown fox", False), 1)
        with_space = letter_profile(normalize_text("the quick brown fox", True), 1)
        assert without.h0 == pytest.approx(4.70, abs=0.005)
        assert with_space.h0 == pytest.approx(4.76, abs=0.006)
        assert with_space.h0 > without.h0
    
    def test_space_lowers_entropy_on_english(self):
        text = read_text(settings.DATA_DIR / "sample_english.txt")
        without = letter_profile(normalize_text(text, False), 3)
        with_space = letter_profile(normalize_text(text, True), 3)
        assert with_space.hn[1] < without.hn[1]
        assert with_space.hn[2] < without.hn[2]
        assert without.hn[1] >= without.hn[2] >= without.hn[3]
    
    def test_space_lowers_entropy_on_a_long_text(self):
        path = settings.DATA_DIR / "long_english.txt"
        assert path.stat().st_size >= 100_000
        text = read_text(path)
        without = letter_profile(normalize_text(text, False), 2)
        with_space = letter_profile(normalize_text(text, True), 2)
        assert with_space.h0 > without.h0
        assert with_space.hn[1] < without.hn[1]
        assert with_space.hn[2] < without.hn[2]
        assert with_space.hn[1] == pytest.approx(4.03, abs=0.01)
        assert without.hn[1] == pytest.approx(4.13, abs=0.01)
