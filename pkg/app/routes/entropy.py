"""Entropy analysis endpoints."""
from fastapi import APIRouter, HTTPException

from core.models.analysis import AnalyzeRequest, LettersRequest
from core.models.entropy import EntropyProfile
from core.models.report import SchemeReport
from core.services.errors import ErrorHandler, HypertagError
from core.services.report import AnalysisService
from core.utils.logger import logger

router = APIRouter()
analysis_service = AnalysisService()


@router.post("/analyze", response_model=SchemeReport)
def analyze(request: AnalyzeRequest):
    """Compare entropies of the corpus under each hypertag scheme.
    
    Omitted corpus, tagset or rules fall back to the bundled demo files.
    Input errors return 400; a chunker failure on every sentence returns 422.
    """
    try:
        tagset = analysis_service.load_tagset(request.tagset)
        rules = analysis_service.load_rules(tagset, request.rules)
        corpus = analysis_service.load_corpus(tagset, request.corpus)
        report = analysis_service.analyze(
            corpus,
            rules,
            schemes=request.schemes,
            max_n=request.max_n,
            per_sentence_windows=request.per_sentence_windows,
        )
        logger.info(f"Analyzed {report.metadata.corpus.sentence_count} sentences over HTTP")
        return report
    except HypertagError as e:
        raise HTTPException(status_code=ErrorHandler.http_status(e), detail=str(e))


@router.post("/letters", response_model=EntropyProfile)
def letters(request: LettersRequest):
    """Letter-sequence entropies, with or without the word space."""
    try:
        return analysis_service.letters(request.text, request.include_space, request.max_n)
    except HypertagError as e:
        raise HTTPException(status_code=ErrorHandler.http_status(e), detail=str(e))


@router.get("/health")
def entropy_health():
    """Health check for the entropy service."""
    return {"status": "healthy", "service": "entropy"}
