#!/usr/bin/env python3
"""Export fixture flow graphs for the walkthrough UI tests.

Two page replicas plus eight mined procedures from the seed-7 synthetic
corpus, written through the public flow-export schema (the only interface
the frontend consumes).
"""
from __future__ import annotations

import argparse
from pathlib import Path

from procmine.corpus import CorpusSpec, generate_corpus
from procmine.flow import Procedure, flow_to_json, mine_flow
from procmine.ingest import (extract_list_candidates, parse_document,
                             scrub_template)

ROOT = Path(__file__).resolve().parent.parent


def page_flow(path: Path):
    doc = scrub_template(parse_document(path.read_bytes(), path.name))
    cand = extract_list_candidates(doc, k=1)[0]
    return mine_flow(Procedure.from_candidate(cand))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(ROOT / "frontend" / "tests" / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    flows = {
        "flow_fig1a": page_flow(ROOT / "tests" / "fixtures" / "fig1a.html"),
        "flow_sdk_fig6": page_flow(ROOT / "tests" / "fixtures" / "sdk_fig6.html"),
    }

    corpus = generate_corpus(CorpusSpec(seed=7, n_docs=30))
    picked = 0
    for rec in corpus.records:
        if picked >= 8:
            break
        if not rec.is_procedure or not rec.decision_annotations:
            continue
        doc = scrub_template(parse_document(corpus.files[rec.doc_path],
                                            rec.doc_path))
        cand = {c.node_path: c
                for c in extract_list_candidates(doc, k=1)}[rec.node_path]
        flows[f"flow_corpus_{picked:02d}"] = mine_flow(
            Procedure.from_candidate(cand))
        picked += 1

    for name, graph in flows.items():
        (out / f"{name}.json").write_text(flow_to_json(graph),
                                          encoding="utf-8")
    print(f"wrote {len(flows)} fixture flows to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
