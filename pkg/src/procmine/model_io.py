"""Model bundle persistence.

The model file keeps the classifier's own schema (kernel, reg_c, bias,
calib, support, vocab_fingerprint) and embeds the vocabulary and feature
configuration it was trained with, so a single file is enough to run
extraction.
"""
from __future__ import annotations

import json
from pathlib import Path

from .classifier import SvmModel
from .errors import ModelNotFoundError, SchemaError
from .features import FeatureConfig, Vocabulary

BUNDLE_SCHEMA_VERSION = 1


def feature_config_to_dict(cfg: FeatureConfig) -> dict:
    return {"ngram_max": cfg.ngram_max, "context_k": cfg.context_k,
            "use_list_type": cfg.use_list_type,
            "use_imperatives": cfg.use_imperatives}


def feature_config_from_dict(d: dict) -> FeatureConfig:
    return FeatureConfig(ngram_max=int(d["ngram_max"]),
                         context_k=int(d["context_k"]),
                         use_list_type=bool(d["use_list_type"]),
                         use_imperatives=bool(d["use_imperatives"]))


def save_bundle(path: Path | str, model: SvmModel, vocab: Vocabulary,
                cfg: FeatureConfig) -> None:
    payload = json.loads(model.to_json())
    payload["bundle_version"] = BUNDLE_SCHEMA_VERSION
    payload["vocabulary"] = json.loads(vocab.to_json())
    payload["feature_config"] = feature_config_to_dict(cfg)
    Path(path).write_text(json.dumps(payload, sort_keys=True) + "\n",
                          encoding="utf-8")


def load_bundle(path: Path | str) -> tuple[SvmModel, Vocabulary, FeatureConfig]:
    p = Path(path)
    if not p.exists():
        raise ModelNotFoundError(f"model file {p} does not exist")
    try:
        payload = json.loads(p.read_text(encoding="utf-8"))
        model = SvmModel.from_json(json.dumps(payload))
        vocab = Vocabulary.from_json(json.dumps(payload["vocabulary"]))
        cfg = feature_config_from_dict(payload["feature_config"])
    except (KeyError, ValueError, TypeError) as exc:
        raise SchemaError(f"cannot read model bundle {p}: {exc}") from exc
    return model, vocab, cfg
