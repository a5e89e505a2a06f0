"""Exact verification engine for almost 3-contact metric geometry on Lie groups."""

__version__ = "0.1.0"
