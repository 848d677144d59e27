"""Distance-barrier calculus and diameter bounds for Fibonacci-run graphs."""

__version__ = "0.1.0"
