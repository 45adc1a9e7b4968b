"""Source-code vocabulary modeling: lexing, splitting, BPE, statistics and n-gram evaluation."""

__version__ = "0.1.0"
