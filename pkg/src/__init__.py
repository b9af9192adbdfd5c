"""racopt - exact optimal classical random access codes."""

__version__ = "0.2.0"
