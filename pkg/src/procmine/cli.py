"""Command-line entry point wiring the whole pipeline.

Exit codes: 0 ok, 2 config error, 3 data error, 4 model error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import errors
from .classifier import Kernel, train
from .corpus import (CorpusSpec, evaluate_blocks, evaluate_identification,
                     generate_corpus, load_annotations, load_corpus_docs,
                     candidates_for_records)
from .features import (FeatureConfig, build_vocabulary, feature_dim,
                       featurize, pipeline_fingerprint, read_wordlist_file)
from .flow import Procedure, mine_flow, flow_to_json
from .ingest import (dump_candidates, extract_list_candidates,
                     load_candidates, parse_document, scrub_template,
                     candidate_to_dict)
from .linguistics import default_lexicon, read_wordlist
from .model_io import load_bundle, save_bundle
from .pipeline import PipelineConfig, run_pipeline
from .search import SearchConfig, find_procedures

CONFIG_ERRORS = (errors.ConfigError,)
DATA_ERRORS = (errors.EmptyInputError, errors.SchemaError,
               errors.DanglingPathError, errors.TooFewExamplesError,
               errors.EmptyVocabError, errors.MalformedClauseError,
               errors.InconsistentBlocksError)
MODEL_ERRORS = (errors.ModelNotFoundError, errors.ModelMismatchError,
                errors.DimensionMismatchError, errors.SingleClassError)


def _feature_config(args) -> FeatureConfig:
    return FeatureConfig(ngram_max=args.ngram, context_k=args.context,
                         use_list_type=args.list_type,
                         use_imperatives=args.imperatives)


def _add_feature_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ngram", type=int, default=1, choices=(1, 2, 3))
    p.add_argument("--context", type=int, default=1, choices=(1, 2, 3, 4))
    p.add_argument("--list-type", dest="list_type", action="store_true",
                   default=True)
    p.add_argument("--no-list-type", dest="list_type", action="store_false")
    p.add_argument("--imperatives", dest="imperatives", action="store_true",
                   default=True)
    p.add_argument("--no-imperatives", dest="imperatives",
                   action="store_false")


def _lexicon(args):
    lex = default_lexicon()
    if getattr(args, "lexicon", None):
        lex = lex.extended(read_wordlist(args.lexicon))
    return lex


def cmd_ingest(args) -> int:
    from .pipeline import _gather_inputs
    cands = []
    for path in _gather_inputs(args.pages):
        doc = scrub_template(parse_document(path.read_bytes(), str(path)))
        cands.extend(extract_list_candidates(doc, k=args.context))
    text = dump_candidates(cands)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_train(args) -> int:
    records = load_annotations(args.annotations)
    docs = load_corpus_docs(args.docs, records)
    cfg = _feature_config(args)
    lex = _lexicon(args)
    cands = candidates_for_records(docs, records, cfg.context_k)
    wordlist = read_wordlist_file(args.wordlist) if args.wordlist else None
    vocab = build_vocabulary(cands, cfg, wordlist)
    data = [(featurize(c, vocab, cfg, lex), 1 if r.is_procedure else -1)
            for c, r in zip(cands, records)]
    kernel = Kernel(kind=args.kernel, degree=args.degree)
    model = train(data, kernel=kernel, reg_c=args.c, seed=args.seed,
                  dim=feature_dim(vocab, cfg),
                  vocab_fingerprint=pipeline_fingerprint(vocab, cfg))
    save_bundle(args.out, model, vocab, cfg)
    print(f"trained on {len(data)} lists "
          f"({sum(1 for _, y in data if y > 0)} positive), "
          f"{len(model.support)} support vectors -> {args.out}")
    return 0


def cmd_extract(args) -> int:
    from .pipeline import _gather_inputs
    model, vocab, feat_cfg = load_bundle(args.model)
    lex = _lexicon(args)
    cfg = SearchConfig(threshold=args.threshold, max_nodes=args.max_nodes)
    lines = []
    for page in (str(p) for p in _gather_inputs(args.pages)):
        doc = scrub_template(parse_document(Path(page).read_bytes(), page))
        result = find_procedures(doc, model, vocab, cfg, feat_cfg, lex)
        for pc in result.procedures:
            lines.append(json.dumps({
                "candidate": candidate_to_dict(pc.candidate),
                "prediction": {
                    "is_procedure": pc.prediction.is_procedure,
                    "confidence": pc.prediction.confidence,
                    "decision_value": pc.prediction.decision_value,
                },
            }, sort_keys=True))
        if result.truncated:
            print(f"warning: traversal truncated on {page}", file=sys.stderr)
    text = "".join(line + "\n" for line in lines)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_flow(args) -> int:
    lex = _lexicon(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    raw = Path(args.infile).read_text(encoding="utf-8")
    count = 0
    for line in raw.splitlines():
        if not line.strip():
            continue
        payload = json.loads(line)
        cand = load_candidates(json.dumps(payload["candidate"]) + "\n")[0] \
            if "candidate" in payload else load_candidates(line + "\n")[0]
        proc = Procedure.from_candidate(cand)
        graph = mine_flow(proc, lex=lex)
        (out / f"flow_{count:04d}.json").write_text(flow_to_json(graph),
                                                    encoding="utf-8")
        count += 1
    print(f"wrote {count} flow graphs to {out}")
    return 0


def cmd_corpus_gen(args) -> int:
    spec = CorpusSpec(seed=args.seed, n_docs=args.docs,
                      procedure_ratio=args.ratio,
                      decision_density=args.density)
    corpus = generate_corpus(spec)
    corpus.write(args.out)
    print(f"generated {len(corpus.files)} docs / {len(corpus.records)} "
          f"annotated lists -> {args.out}")
    return 0


def cmd_eval(args) -> int:
    records = load_annotations(args.annotations, docs_root=args.docs)
    if args.what == "id":
        model, vocab, feat_cfg = load_bundle(args.model)
        report = evaluate_identification(model, vocab, records, args.docs,
                                         feat_cfg, _lexicon(args))
        print(json.dumps({
            "accuracy": report.accuracy, "precision": report.precision,
            "recall": report.recall, "f1": report.f1,
            "confusion": report.confusion,
        }, indent=2, sort_keys=True))
        return 0
    docs = load_corpus_docs(args.docs, records)
    lex = _lexicon(args)
    procs = []
    for rec in records:
        if not rec.decision_annotations:
            continue
        cand = candidates_for_records(docs, [rec], 1)[0]
        procs.append((Procedure.from_candidate(cand), rec.decision_annotations))
    accuracy, table = evaluate_blocks(procs, lex=lex)
    print(f"{'model':32s}accuracy")
    for label, acc in table:
        print(f"{label:32s}{acc:.4f}")
    print(f"{'full rules':32s}{accuracy:.4f}")
    return 0


def cmd_run(args) -> int:
    overrides = dict(model_path=args.model, inputs=args.inputs or None,
                     out_dir=args.out, threshold=args.threshold,
                     seed=args.seed)
    if args.config:
        cfg = PipelineConfig.from_file(args.config, **overrides)
    else:
        missing = [k for k in ("model_path", "inputs", "out_dir")
                   if not overrides.get(k)]
        if missing:
            raise errors.ConfigError(
                f"missing required arguments without --config: {missing}")
        cfg = PipelineConfig(model_path=args.model, inputs=args.inputs,
                             out_dir=args.out,
                             threshold=args.threshold or 0.5,
                             seed=args.seed or 0)
    report = run_pipeline(cfg)
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return 0


def cmd_serve(args) -> int:
    from .serve import serve
    serve(args.flows, bind_addr=args.bind, ui_dir=args.ui)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="procmine",
                                 description="Mine procedures from support HTML.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="dump list candidates as JSON Lines")
    p.add_argument("pages", nargs="+")
    p.add_argument("--context", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("train", help="train the list classifier")
    p.add_argument("--annotations", required=True)
    p.add_argument("--docs", required=True)
    p.add_argument("--out", required=True)
    _add_feature_flags(p)
    p.add_argument("--kernel", choices=("linear", "poly"), default="poly")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wordlist")
    p.add_argument("--lexicon")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("extract", help="find procedures in pages")
    p.add_argument("pages", nargs="+")
    p.add_argument("--model", required=True)
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--max-nodes", type=int, default=50_000)
    p.add_argument("--out")
    p.add_argument("--lexicon")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("flow", help="build flow graphs from candidates")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--lexicon")
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("corpus", help="corpus utilities")
    csub = p.add_subparsers(dest="corpus_command", required=True)
    g = csub.add_parser("gen", help="generate a synthetic corpus")
    g.add_argument("--seed", type=int, default=7)
    g.add_argument("--docs", type=int, default=50)
    g.add_argument("--ratio", type=float, default=0.43)
    g.add_argument("--density", type=float, default=0.35)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_corpus_gen)

    p = sub.add_parser("eval", help="evaluate identification or blocks")
    p.add_argument("what", choices=("id", "blocks"))
    p.add_argument("--annotations", required=True)
    p.add_argument("--docs", required=True)
    p.add_argument("--model")
    p.add_argument("--lexicon")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("run", help="full pipeline over input pages")
    p.add_argument("--config")
    p.add_argument("--model")
    p.add_argument("--in", dest="inputs", nargs="+")
    p.add_argument("--out")
    p.add_argument("--threshold", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("serve", help="read-only walkthrough API")
    p.add_argument("--flows", required=True)
    p.add_argument("--bind", default="127.0.0.1:8000")
    p.add_argument("--ui")
    p.set_defaults(func=cmd_serve)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CONFIG_ERRORS as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except DATA_ERRORS as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except MODEL_ERRORS as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
