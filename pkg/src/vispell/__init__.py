"""Vietnamese spelling-error synthesis, correction and evaluation toolkit."""

__version__ = "0.1.0"

CHECKPOINT_FORMAT_VERSION = 1
CORPUS_FORMAT_VERSION = 1
