"""Theorem registry, instance generation, verification and counterexamples."""

from .counterexamples import reproduce_counterexample
from .generate import generate_instances
from .registry import THEOREMS, Theorem, get_theorem, theorem_registry
from .verify import verify_all, verify_theorem

__all__ = ["THEOREMS", "Theorem", "generate_instances", "get_theorem", "reproduce_counterexample",
           "theorem_registry", "verify_all", "verify_theorem"]
