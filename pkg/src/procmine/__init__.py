"""procmine: mine step-by-step procedures from technical-support HTML."""

__version__ = "0.1.0"

from .classifier import EvalReport, Kernel, Prediction, SvmModel, \
    cross_validate, predict, train
from .corpus import AnnotationRecord, CorpusSpec, generate_corpus, \
    load_annotations
from .features import FeatureConfig, FeatureVector, Vocabulary, \
    build_vocabulary, featurize, imperative_features
from .flow import (Branch, BlockRules, DecisionBlock, DecisionPoint,
                   FlowGraph, Procedure, QuestionSpec, build_flow_graph,
                   extract_decision_block, extract_decision_points,
                   flow_from_dict, flow_to_dict, generate_question,
                   map_instructions, mine_flow)
from .ingest import (Document, DomNode, ListCandidate, ListItem, ListKind,
                     Sentence, extract_list_candidates, parse_document,
                     scrub_template, segment_sentences, tokenize)
from .linguistics import (ConditionalSplit, ImperativeAnnotation,
                          ImperativeLexicon, Polarity, Trigger,
                          default_lexicon, detect_conditional,
                          detect_imperatives, detect_negation, similarity,
                          split_condition_effect)
from .search import ProcedureCandidate, SearchConfig, SearchResult, \
    find_procedures
