import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from procmine.classifier import Kernel, train
from procmine.corpus import CorpusSpec, generate_corpus
from procmine.features import (FeatureConfig, build_vocabulary, feature_dim,
                               featurize, pipeline_fingerprint)
from procmine.flow import Procedure
from procmine.ingest import (extract_list_candidates, parse_document,
                             scrub_template)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fig1a_doc():
    raw = (FIXTURES / "fig1a.html").read_bytes()
    return scrub_template(parse_document(raw, "fig1a"))


@pytest.fixture(scope="session")
def fig1a_candidate(fig1a_doc):
    cands = extract_list_candidates(fig1a_doc, k=1)
    assert len(cands) == 1
    return cands[0]


@pytest.fixture(scope="session")
def fig1a_procedure(fig1a_candidate):
    return Procedure.from_candidate(fig1a_candidate)


@pytest.fixture(scope="session")
def sdk_doc():
    raw = (FIXTURES / "sdk_fig6.html").read_bytes()
    return scrub_template(parse_document(raw, "sdk_fig6"))


@pytest.fixture(scope="session")
def small_corpus():
    """Shared generated corpus with ingested candidates per record."""
    corpus = generate_corpus(CorpusSpec(seed=7, n_docs=24))
    docs = {}
    cands = []
    for rec in corpus.records:
        if rec.doc_path not in docs:
            doc = scrub_template(parse_document(corpus.files[rec.doc_path],
                                                rec.doc_path))
            docs[rec.doc_path] = {c.node_path: c
                                  for c in extract_list_candidates(doc, k=1)}
        cands.append(docs[rec.doc_path][rec.node_path])
    labels = [rec.is_procedure for rec in corpus.records]
    return corpus, cands, labels


@pytest.fixture(scope="session")
def trained_model(small_corpus):
    """Default-config model trained on the shared corpus."""
    _, cands, labels = small_corpus
    cfg = FeatureConfig()
    vocab = build_vocabulary(cands, cfg)
    data = [(featurize(c, vocab, cfg), 1 if y else -1)
            for c, y in zip(cands, labels)]
    model = train(data, kernel=Kernel(), reg_c=1.0, seed=7,
                  dim=feature_dim(vocab, cfg),
                  vocab_fingerprint=pipeline_fingerprint(vocab, cfg))
    return model, vocab, cfg
