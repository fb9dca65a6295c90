"""Runs every requested scheme over a corpus and compares the entropies."""
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from core.models.entropy import EntropyProfile
from core.models.report import ReportMetadata, SchemeReport, SchemeRow
from core.services.chunking.chunk_rules import ChunkRules
from core.services.chunking.chunker import annotate
from core.services.corpus.corpus import Corpus, TaggedSentence, corpus_stats
from core.services.corpus.spans import Annotation, annotation_violation
from core.services.entropy.entropy_service import h0, profile, profile_segments
from core.services.errors.exceptions import ChunkingError, ConfigurationError
from core.services.schemes.hypertagger import apply_scheme
from core.services.schemes.scheme import (
    ANNOTATED_ROLES,
    ROLE_NOUN_GROUP,
    ROLE_SUBJECT,
    Scheme,
    SchemeKind,
    default_bindings,
    parse_scheme_list,
)
from core.services.tagset.tagset import Tagset
from core.utils.logger import logger

GOLD = "gold"
CHUNKER = "chunker"


def _annotation_sources(corpus: Corpus, schemes: List[Scheme]) -> Dict[str, str]:
    """Gold when the corpus file annotates a class, the chunker otherwise."""
    sources: Dict[str, str] = {}
    for scheme in schemes:
        for role in scheme.kind.roles:
            if role in ANNOTATED_ROLES:
                constituent = scheme.class_of(role)
                sources[constituent] = GOLD if constituent in corpus.annotated_classes else CHUNKER
    return sources


def _restrict(annotation: Annotation, classes: Iterable[str]) -> Annotation:
    classes = frozenset(classes)
    return Annotation(
        spans=tuple(span for span in annotation.spans if span.constituent in classes),
        covered=annotation.covered & classes,
    )


def prepare_annotations(
    corpus: Corpus,
    sources: Mapping[str, str],
    rules: Optional[ChunkRules],
    bindings: Mapping[str, str]
) -> Tuple[List[int], List[Annotation]]:
    """
    Annotations for every sentence the schemes can use.
    
    Returns:
        Indices of the kept sentences and their annotations. A sentence
        the chunker cannot analyse, or whose chunker spans cross its gold
        spans, is dropped for every scheme.
    
    Raises:
        ChunkingError: If the chunker is needed and no sentence survives
    """
    gold_classes = [constituent for constituent, source in sources.items() if source == GOLD]
    chunked_classes = [constituent for constituent, source in sources.items() if source == CHUNKER]
    if chunked_classes and rules is None:
        raise ConfigurationError(f"chunk rules are required to annotate {sorted(chunked_classes)}")
    
    kept: List[int] = []
    annotations: List[Annotation] = []
    for index, (sentence, gold) in enumerate(zip(corpus.sentences, corpus.annotations)):
        annotation = _restrict(gold, gold_classes)
        if chunked_classes:
            try:
                automatic = annotate(
                    sentence,
                    rules,
                    noun_group_class=bindings.get(ROLE_NOUN_GROUP, ""),
                    subject_class=bindings.get(ROLE_SUBJECT, ""),
                )
            except ChunkingError as e:
                logger.warning(f"Sentence {index} excluded: {str(e)}")
                continue
            annotation = annotation.merged(_restrict(automatic, chunked_classes))
            violation = annotation_violation(annotation.spans, len(sentence))
            if violation:
                logger.warning(f"Sentence {index} excluded: chunker spans conflict with gold spans: {violation}")
                continue
        kept.append(index)
        annotations.append(annotation)
    
    if chunked_classes and not kept:
        raise ChunkingError(f"chunker failed on all {len(corpus.sentences)} sentences")
    return kept, annotations


def _scheme_profile(
    scheme: Scheme,
    sentences: List[TaggedSentence],
    annotations: List[Annotation],
    indices: List[int],
    tagset: Tagset,
    max_n: int,
    per_sentence_windows: bool,
    chunk_size: Optional[int]
) -> EntropyProfile:
    tagged = [
        apply_scheme(sentence, annotation, scheme, tagset, index)
        for sentence, annotation, index in zip(sentences, annotations, indices)
    ]
    if per_sentence_windows:
        result = profile_segments([sentence.ids for sentence in tagged], tagset, max_n)
    else:
        stream = [symbol_id for sentence in tagged for symbol_id in sentence.ids]
        result = profile(stream, tagset, max_n, chunk_size=chunk_size)
    logger.info(
        f"Scheme {scheme.label}: "
        + " ".join(f"H{n}={value:.3f}" for n, value in sorted(result.hn.items()))
    )
    return result


def run_experiment(
    corpus: Corpus,
    schemes: Union[str, Iterable[Union[str, SchemeKind]]],
    rules: Optional[ChunkRules],
    max_n: int,
    per_sentence_windows: bool = False,
    workers: int = 1,
    bindings: Optional[Mapping[str, str]] = None,
    chunk_size: Optional[int] = None
) -> SchemeReport:
    """
    Compare the entropy of the corpus under each scheme with the plain text.
    
    Args:
        corpus: Raw corpus, optionally carrying gold annotations
        schemes: Scheme suffixes; plain is always added as the baseline
        rules: Chunk rules, needed for determiner tags and for any class
            the corpus does not annotate
        max_n: Highest n-gram order
        per_sentence_windows: Keep n-gram windows inside sentences
        workers: Processes computing scheme rows
        bindings: Role -> class overrides for the schemes
        chunk_size: Count n-grams in chunks of this many windows
    
    Returns:
        SchemeReport with rows in p, a, d, n, s, sn order
    """
    kinds = parse_scheme_list(
        schemes if isinstance(schemes, str) else [getattr(kind, "value", kind) for kind in schemes]
    )
    determiner_tags = rules.determiner_tags if rules is not None else frozenset()
    bound = [Scheme.for_tagset(kind, corpus.tagset, determiner_tags, bindings) for kind in kinds]
    resolved_bindings = {**default_bindings(corpus.tagset), **(bindings or {})}
    
    stats = corpus_stats(corpus)
    sources = _annotation_sources(corpus, bound)
    indices, annotations = prepare_annotations(corpus, sources, rules, resolved_bindings)
    sentences = [corpus.sentences[index] for index in indices]
    excluded = len(corpus.sentences) - len(indices)
    logger.info(
        f"Running {len(bound)} schemes over {len(sentences)} sentences "
        f"({excluded} excluded), max_n={max_n}"
    )
    
    compute = partial(
        _scheme_profile,
        sentences=sentences,
        annotations=annotations,
        indices=indices,
        tagset=corpus.tagset,
        max_n=max_n,
        per_sentence_windows=per_sentence_windows,
        chunk_size=chunk_size,
    )
    if workers > 1 and len(bound) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            profiles = list(executor.map(compute, bound))
    else:
        profiles = [compute(scheme) for scheme in bound]
    
    baseline = profiles[0].hn
    rows = [
        SchemeRow(
            scheme=scheme.kind.suffix,
            label=scheme.label,
            values=dict(result.hn),
            deltas={n: result.hn[n] - baseline[n] for n in result.hn},
        )
        for scheme, result in zip(bound, profiles)
    ]
    metadata = ReportMetadata(
        corpus=stats,
        h0=h0(corpus.tagset),
        max_n=max_n,
        excluded_count=excluded,
        per_sentence_windows=per_sentence_windows,
        annotation_sources=sources,
    )
    return SchemeReport(rows=rows, metadata=metadata)
