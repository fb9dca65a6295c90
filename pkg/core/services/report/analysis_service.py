"""Loads inputs (given text or bundled defaults) and runs an analysis."""
from pathlib import Path
from typing import Optional, Union

from app.config import settings
from core.models.entropy import EntropyProfile
from core.models.report import SchemeReport
from core.services.chunking.chunk_rules import ChunkRules, load_rules, parse_rules
from core.services.corpus.corpus import Corpus
from core.services.corpus.corpus_reader import load_corpus, parse_corpus
from core.services.letters.letters import letter_profile, normalize_text
from core.services.report.experiment import run_experiment
from core.services.tagset.tagset import Tagset
from core.services.tagset.tagset_loader import load_tagset, parse_tagset

PathLike = Union[str, Path]


class AnalysisService:
    """Entry point shared by the CLI and the HTTP API."""
    
    def load_tagset(self, text: Optional[str] = None, path: Optional[PathLike] = None) -> Tagset:
        if text is not None:
            return parse_tagset(text.splitlines())
        return load_tagset(path or settings.DEFAULT_TAGSET_FILE)
    
    def load_rules(
        self,
        tagset: Tagset,
        text: Optional[str] = None,
        path: Optional[PathLike] = None
    ) -> ChunkRules:
        if text is not None:
            return parse_rules(text.splitlines(), tagset)
        return load_rules(path or settings.DEFAULT_RULES_FILE, tagset)
    
    def load_corpus(
        self,
        tagset: Tagset,
        text: Optional[str] = None,
        path: Optional[PathLike] = None
    ) -> Corpus:
        if text is not None:
            return parse_corpus(text.splitlines(), tagset)
        return load_corpus(path or settings.DEFAULT_CORPUS_FILE, tagset)
    
    def analyze(
        self,
        corpus: Corpus,
        rules: Optional[ChunkRules],
        schemes: Optional[str] = None,
        max_n: Optional[int] = None,
        per_sentence_windows: Optional[bool] = None
    ) -> SchemeReport:
        """Run the scheme comparison, filling unset options from settings."""
        return run_experiment(
            corpus,
            schemes if schemes is not None else settings.SCHEMES,
            rules,
            max_n if max_n is not None else settings.MAX_N,
            per_sentence_windows=(
                per_sentence_windows if per_sentence_windows is not None else settings.PER_SENTENCE_WINDOWS
            ),
            workers=settings.WORKERS,
            chunk_size=settings.COUNT_CHUNK_SIZE,
        )
    
    def letters(self, text: str, include_space: bool = True, max_n: Optional[int] = None) -> EntropyProfile:
        stream = normalize_text(text, include_space)
        return letter_profile(stream, max_n if max_n is not None else settings.MAX_N)
