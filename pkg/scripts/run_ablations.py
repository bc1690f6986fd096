#!/usr/bin/env python3
"""Feature-ablation harness over a generated (or on-disk) corpus.

Prints three comparisons in the shape of the identification experiments:
accuracy across n-gram ranges, across context sizes, and across the
list-type/imperative feature grid. Values are corpus-specific; the shapes
are what carries over.
"""
from __future__ import annotations

import argparse
import time
from pathlib import Path

from procmine.classifier import Kernel, cross_validate
from procmine.corpus import (CorpusSpec, candidates_for_records,
                             generate_corpus, load_annotations,
                             load_corpus_docs)
from procmine.features import FeatureConfig


def load_dataset(args):
    if args.corpus:
        root = Path(args.corpus)
        records = load_annotations(root / "annotations.jsonl")
        docs = load_corpus_docs(root, records)
        cands = candidates_for_records(docs, records, context_k=4)
        labels = [r.is_procedure for r in records]
        return cands, labels
    corpus = generate_corpus(CorpusSpec(seed=args.seed, n_docs=args.docs))
    from procmine.ingest import (extract_list_candidates, parse_document,
                                 scrub_template)
    by_doc = {}
    cands, labels = [], []
    for rec in corpus.records:
        if rec.doc_path not in by_doc:
            doc = scrub_template(parse_document(corpus.files[rec.doc_path],
                                                rec.doc_path))
            by_doc[rec.doc_path] = {c.node_path: c
                                    for c in extract_list_candidates(doc, k=4)}
        cands.append(by_doc[rec.doc_path][rec.node_path])
        labels.append(rec.is_procedure)
    return cands, labels


def run(cands, labels, cfg, args):
    report = cross_validate(cands, labels, cfg, folds=args.folds,
                            seed=args.seed, kernel=Kernel(degree=args.degree),
                            reg_c=args.c)
    return report.accuracy


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", help="directory with annotations.jsonl + docs "
                                     "(default: generate one)")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--docs", type=int, default=110)
    ap.add_argument("--folds", type=int, default=5)
    ap.add_argument("--degree", type=int, default=2)
    ap.add_argument("--c", type=float, default=1.0)
    args = ap.parse_args()

    start = time.perf_counter()
    cands, labels = load_dataset(args)
    print(f"dataset: {len(cands)} lists, {sum(labels)} procedures "
          f"({time.perf_counter() - start:.1f}s)\n")

    print("Average accuracy over n-gram ranges")
    print(f"{'Up to n-gram':<16}{'Accuracy (%)':>12}")
    for n in (1, 2, 3):
        acc = run(cands, labels, FeatureConfig(ngram_max=n), args)
        print(f"{n:<16}{100 * acc:>12.2f}")

    print("\nAverage accuracy over context sizes")
    print(f"{'Context size':<16}{'Accuracy (%)':>12}")
    for k in (1, 2, 3, 4):
        acc = run(cands, labels, FeatureConfig(context_k=k), args)
        print(f"{k:<16}{100 * acc:>12.2f}")

    print("\nAccuracy from list-type / imperative features")
    print(f"{'List type':<12}{'Imperatives':<14}{'Accuracy (%)':>12}")
    for lt in (False, True):
        for imp in (False, True):
            acc = run(cands, labels,
                      FeatureConfig(use_list_type=lt, use_imperatives=imp),
                      args)
            print(f"{str(lt):<12}{str(imp):<14}{100 * acc:>12.2f}")
    print(f"\ntotal {time.perf_counter() - start:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
