"""Problem files and the command-line front end."""

from .problem import IdealBlock, OperatorBlock, ProblemFile, load_problem, parse_problem

__all__ = ["ProblemFile", "OperatorBlock", "IdealBlock", "parse_problem", "load_problem"]
