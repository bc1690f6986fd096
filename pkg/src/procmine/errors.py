"""Error types shared across the pipeline.

Every error carries a stable ``code`` string so CLI handlers and tests can
dispatch on it without matching message text.
"""


class ProcmineError(Exception):
    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class EmptyInputError(ProcmineError):
    code = "EMPTY_INPUT"


class MalformedClauseError(ProcmineError):
    code = "MALFORMED_CLAUSE"


class EmptyVocabError(ProcmineError):
    code = "EMPTY_VOCAB"


class SingleClassError(ProcmineError):
    code = "SINGLE_CLASS"


class DimensionMismatchError(ProcmineError):
    code = "DIMENSION_MISMATCH"


class TooFewExamplesError(ProcmineError):
    code = "TOO_FEW_EXAMPLES"


class ModelMismatchError(ProcmineError):
    code = "MODEL_MISMATCH"


class InconsistentBlocksError(ProcmineError):
    code = "INCONSISTENT_BLOCKS"


class SchemaError(ProcmineError):
    code = "SCHEMA_ERROR"


class DanglingPathError(ProcmineError):
    code = "DANGLING_PATH"


class ModelNotFoundError(ProcmineError):
    code = "MODEL_NOT_FOUND"


class ConfigError(ProcmineError):
    code = "CONFIG_ERROR"
