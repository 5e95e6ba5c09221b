"""Evidence-based conjunctive and disjunctive decompositions of belief functions."""

__version__ = "0.1.0"
