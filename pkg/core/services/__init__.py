"""Core services, one package per concern.

- tagset: Closed symbol alphabet with hypertag pairs
- corpus: Pre-tagged corpus reader/writer and annotations
- entropy: N-gram counting and conditional entropy
- chunking: Noun groups, subject location, sentence sections
- schemes: Hypertag insertion schemes and bracket validation
- letters: Letter-sequence entropy
- report: Experiment runner, report rendering, AnalysisService
- errors: Exception hierarchy and exit/HTTP code mapping

Usage:
    from core.services.report import AnalysisService, render_report

    service = AnalysisService()
    tagset = service.load_tagset()
    report = service.analyze(service.load_corpus(tagset), service.load_rules(tagset))
    print(render_report(report, "text"))
"""
