"""Linear algebra over naturally ordered semirings with an absorbing element."""

__version__ = "0.1.0"
