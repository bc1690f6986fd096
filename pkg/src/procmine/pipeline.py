"""End-to-end pipeline: ingest -> search -> flow, one flow-graph file per
found procedure plus a machine-readable run report."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import ConfigError, ProcmineError
from .flow import BlockRules, Procedure, extract_decision_block, \
    extract_decision_points, build_flow_graph, flow_to_json
from .ingest import parse_document, scrub_template
from .linguistics import default_lexicon, read_wordlist
from .model_io import load_bundle
from .search import SearchConfig, find_procedures


@dataclass
class PipelineConfig:
    model_path: str
    inputs: list[str]
    out_dir: str
    threshold: float = 0.5
    max_nodes: int = 50_000
    overlap_threshold: float = 0.7
    sim_threshold: float = 0.7
    lexicon_path: Optional[str] = None
    seed: int = 0

    def __post_init__(self):
        for name in ("threshold", "overlap_threshold", "sim_threshold"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {v}")

    @classmethod
    def from_file(cls, path: Path | str, **overrides) -> "PipelineConfig":
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"config file {p} does not exist")
        if p.suffix == ".toml":
            import tomllib
            data = tomllib.loads(p.read_text(encoding="utf-8"))
        else:
            data = json.loads(p.read_text(encoding="utf-8"))
        data.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigError(f"bad config fields: {exc}") from exc


@dataclass
class RunReport:
    docs: int = 0
    lists_classified: int = 0
    procedures: int = 0
    decision_points: int = 0
    blocks: int = 0
    empty_blocks: int = 0
    truncated_docs: int = 0
    flow_files: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "docs": self.docs, "lists_classified": self.lists_classified,
            "procedures": self.procedures,
            "decision_points": self.decision_points, "blocks": self.blocks,
            "empty_blocks": self.empty_blocks,
            "truncated_docs": self.truncated_docs,
            "flow_files": self.flow_files, "errors": self.errors,
        }


def _gather_inputs(inputs: list[str]) -> list[Path]:
    files: list[Path] = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            files.extend(sorted(p.glob("*.html")) + sorted(p.glob("*.htm")))
        else:
            files.append(p)
    return files


def run_pipeline(cfg: PipelineConfig) -> RunReport:
    # The model must load before any input is touched.
    model, vocab, feat_cfg = load_bundle(cfg.model_path)
    lex = default_lexicon()
    if cfg.lexicon_path:
        lex = lex.extended(read_wordlist(cfg.lexicon_path))

    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rules = BlockRules(overlap_threshold=cfg.overlap_threshold,
                       sim_threshold=cfg.sim_threshold)
    search_cfg = SearchConfig(threshold=cfg.threshold, max_nodes=cfg.max_nodes)

    report = RunReport()
    for path in _gather_inputs(cfg.inputs):
        try:
            doc = scrub_template(parse_document(path.read_bytes(), str(path)))
            result = find_procedures(doc, model, vocab, search_cfg, feat_cfg, lex)
        except ProcmineError as exc:
            raise type(exc)(f"{path}: {exc}") from exc
        report.docs += 1
        report.lists_classified += result.lists_classified
        report.truncated_docs += 1 if result.truncated else 0
        for i, pc in enumerate(result.procedures):
            proc = Procedure.from_candidate(pc.candidate)
            try:
                points = extract_decision_points(proc, lex)
                blocks = [extract_decision_block(proc, d, rules, lex)
                          for d in points]
                graph = build_flow_graph(proc, blocks)
            except ProcmineError as exc:
                raise type(exc)(
                    f"{path} node {list(pc.candidate.node_path)}: {exc}") from exc
            report.procedures += 1
            report.decision_points += len(points)
            report.blocks += len(blocks)
            report.empty_blocks += sum(1 for b in blocks if not b.members)
            name = f"flow_{path.stem}_{i:03d}.json"
            (out / name).write_text(flow_to_json(graph), encoding="utf-8")
            report.flow_files.append(name)

    (out / "run_report.json").write_text(
        json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8")
    return report
